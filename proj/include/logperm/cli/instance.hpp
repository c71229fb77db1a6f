#pragma once

#include <filesystem>
#include <string>
#include <variant>

#include "json.hpp"

#include "logperm/types.hpp"

namespace logperm::cli {

using Instance = std::variant<ComplexMatrix, SymmetricComplexMatrix, ComplexTensor>;

/// Reads {"kind": "matrix" | "symmetric" | "tensor", "n" | "two_n", "d",
/// "entries": nested arrays}. Entries are [re, im] pairs or bare reals.
/// Throws Error(InvalidArgument / ShapeMismatch) on malformed input.
Instance parse_instance(const nlohmann::json& doc);
Instance load_instance(const std::filesystem::path& path);

/// Canonical form: every entry written as [re, im].
nlohmann::json instance_to_json(const Instance& instance);

/// Hex SHA-256 of the compact canonical form.
std::string instance_digest(const Instance& instance);

std::string_view kind_name(const Instance& instance);

}  // namespace logperm::cli
