#pragma once

#include <optional>

#include "logperm/errors.hpp"

/// Code of the logperm::Error thrown by f, or nullopt if none was thrown.
template <typename F>
std::optional<logperm::ErrorCode> error_code(F&& f) {
  try {
    f();
  } catch (const logperm::Error& e) {
    return e.code();
  }
  return std::nullopt;
}
