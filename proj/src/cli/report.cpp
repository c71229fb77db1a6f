#include "logperm/cli/report.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace logperm::cli {

using nlohmann::json;

// Adding 0.0 turns -0.0 into +0.0 so equal values print identically.
json complex_json(Complex z) { return json::array({z.real() + 0.0, z.imag() + 0.0}); }

json log_json(Complex z) {
  if (z == Complex(0.0, 0.0)) return nullptr;
  return complex_json(std::log(z));
}

json to_json(const StripParameters& p) {
  return {{"xi", p.xi}, {"zeta", p.zeta}, {"rho", p.rho}, {"eta_prime", p.eta_prime}, {"tau_prime", p.tau_prime}};
}

json to_json(const ApproxReport& r) {
  json out;
  out["log_value"] = complex_json(r.log_value);
  out["degree_used"] = r.degree_used;
  out["error_bound"] = r.error_bound ? json(*r.error_bound) : json(nullptr);
  out["pipeline"] = std::string(to_string(r.pipeline));
  out["beta_used"] = std::isfinite(r.beta_used) ? json(r.beta_used) : json("inf");
  out["deg_g"] = r.deg_g;
  out["g0"] = std::isfinite(r.g0) ? json(r.g0) : json("inf");
  out["log_g0"] = r.log_g0;
  out["derivative_path"] = r.derivative_path;
  out["strip"] = r.strip ? to_json(*r.strip) : json(nullptr);
  out["phi_degree"] = r.phi_degree ? json(*r.phi_degree) : json(nullptr);
  out["wall_time_s"] = r.elapsed.count();
  return out;
}

json to_json(const MembershipReport& r) {
  json out;
  out["inside"] = r.inside;
  out["margin"] = r.margin;
  out["worst_index"] = r.worst_index;
  out["worst_value"] = r.worst_value;
  out["bound"] = r.bound;
  if (!r.line_sums.empty()) out["line_sums"] = r.line_sums;
  return out;
}

json without_wall_time(const json& report) {
  if (report.is_object()) {
    json out = json::object();
    for (const auto& [key, value] : report.items()) {
      if (key != "wall_time_s") out[key] = without_wall_time(value);
    }
    return out;
  }
  if (report.is_array()) {
    json out = json::array();
    for (const auto& value : report) out.push_back(without_wall_time(value));
    return out;
  }
  return report;
}

namespace {

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_float()) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", v.get<double>());
    return buf;
  }
  if (v.is_array() && v.size() == 2 && v[0].is_number_float() && v[1].is_number_float()) {
    return scalar_text(v[0]) + (v[1].get<double>() < 0 ? " - " : " + ") +
           scalar_text(json(std::abs(v[1].get<double>()))) + "i";
  }
  return v.dump();
}

void text_lines(const json& v, const std::string& prefix, std::ostringstream& out) {
  if (v.is_object()) {
    for (const auto& [key, value] : v.items()) {
      if (key == "rows") continue;
      text_lines(value, prefix.empty() ? key : prefix + "." + key, out);
    }
    return;
  }
  out << prefix << ": " << scalar_text(v) << '\n';
}

void rows_table(const json& rows, std::ostringstream& out) {
  char line[256];
  std::snprintf(line, sizeof line, "%-10s %-6s %3s %2s %8s %8s %8s %12s %12s %10s %s\n", "kind", "method", "n", "d",
                "param", "epsilon", "m", "certified", "realized", "time_s", "ok");
  out << line;
  for (const auto& r : rows) {
    std::snprintf(line, sizeof line, "%-10s %-6s %3zu %2zu %8.4g %8.1e %8zu %12.4e %12.4e %10.4f %s\n",
                  r["kind"].get<std::string>().c_str(), r["method"].get<std::string>().c_str(),
                  r["n"].get<std::size_t>(), r["d"].get<std::size_t>(), r["parameter"].get<double>(),
                  r["epsilon"].get<double>(), r["degree_used"].get<std::size_t>(), r["certified_bound"].get<double>(),
                  r["realized_error"].get<double>(), r.value("wall_time_s", 0.0), r["pass"].get<bool>() ? "yes" : "NO");
    out << line;
  }
}

}  // namespace

std::string render(const json& report, Format format) {
  if (format == Format::Json) return report.dump(2) + "\n";
  std::ostringstream out;
  text_lines(report, "", out);
  if (report.contains("rows")) rows_table(report["rows"], out);
  return out.str();
}

double log_distance(Complex a, Complex b) {
  const Complex diff = a - b;
  const double two_pi = 2.0 * std::numbers::pi;
  double im = std::remainder(diff.imag(), two_pi);
  if (im <= -std::numbers::pi) im += two_pi;
  return std::abs(Complex(diff.real(), im));
}

}  // namespace logperm::cli
