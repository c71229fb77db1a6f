#pragma once

#include <string>

#include "json.hpp"
#include "logperm/regions.hpp"
#include "logperm/taylor.hpp"

namespace logperm::cli {

enum class Format { Json, Text };

nlohmann::json complex_json(Complex z);
/// Principal log, or null when z == 0.
nlohmann::json log_json(Complex z);
nlohmann::json to_json(const ApproxReport& report);
nlohmann::json to_json(const MembershipReport& report);
nlohmann::json to_json(const StripParameters& params);

/// Copy of `report` with every "wall_time_s" key removed, at any depth.
nlohmann::json without_wall_time(const nlohmann::json& report);

/// Json: key-sorted, two-space indent, trailing newline. Text: one
/// "key: value" line per scalar, with benchmark rows as a table.
std::string render(const nlohmann::json& report, Format format);

/// |a - b| with the imaginary part of a - b reduced to (-pi, pi].
double log_distance(Complex a, Complex b);

}  // namespace logperm::cli
