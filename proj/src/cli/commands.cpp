#include "logperm/cli/commands.hpp"

#include <chrono>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "logperm/cli/instance.hpp"
#include "logperm/cli/report.hpp"
#include "logperm/exact.hpp"
#include "logperm/phi.hpp"
#include "logperm/regions.hpp"
#include "logperm/taylor.hpp"

namespace logperm::cli {

using nlohmann::json;

ExitCode exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::RegionViolation: return kOutside;
    case ErrorCode::BudgetExceeded:
    case ErrorCode::SizeLimitExceeded: return kBudget;
    default: return kInputError;
  }
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Complex exact_value(const Instance& instance, const Limits& limits) {
  return std::visit(
      [&](const auto& a) -> Complex {
        using T = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<T, ComplexMatrix>) {
          return permanent_exact(a, limits);
        } else if constexpr (std::is_same_v<T, SymmetricComplexMatrix>) {
          return hafnian_exact(a, limits);
        } else {
          return tensor_permanent_exact(a, limits);
        }
      },
      instance);
}

enum class Method { Disc, Strip, L1 };

std::optional<Method> parse_method(std::string_view name) {
  if (name == "disc") return Method::Disc;
  if (name == "strip") return Method::Strip;
  if (name == "l1") return Method::L1;
  return std::nullopt;
}

struct ApproxRequest {
  Method method = Method::Disc;
  std::optional<double> eta;
  std::optional<double> delta;
  double epsilon = 1e-3;
  ApproxOptions options;
};

double require(const std::optional<double>& v, const char* flag, const char* method) {
  if (!v) throw Error(ErrorCode::InvalidArgument, std::string("--method ") + method + " needs " + flag);
  return *v;
}

ApproxReport approximate(const Instance& instance, ApproxRequest request) {
  if (request.method == Method::L1) request.options.l1_region = true;
  return std::visit(
      [&](const auto& a) -> ApproxReport {
        using T = std::decay_t<decltype(a)>;
        if (request.method == Method::Strip) {
          if constexpr (std::is_same_v<T, ComplexTensor>) {
            return approx_log_strip(a, require(request.eta, "--eta", "strip"), request.epsilon, request.options);
          } else {
            return approx_log_strip(a, require(request.delta, "--delta", "strip"), request.epsilon, request.options);
          }
        }
        const char* name = request.method == Method::L1 ? "l1" : "disc";
        return approx_log_disc(a, require(request.eta, "--eta", name), request.epsilon, request.options);
      },
      instance);
}

// --- benchmark -------------------------------------------------------------

struct Case {
  std::string kind;  // matrix, symmetric, tensor
  Method method;
  std::size_t d;
  std::size_t n;  // degree of g; the symmetric matrix is 2n x 2n
  double lo, hi;  // entry range
  double parameter;  // eta, or delta for matrix strips
  double epsilon;
};

std::string_view method_name(Method m) {
  switch (m) {
    case Method::Disc: return "disc";
    case Method::Strip: return "strip";
    case Method::L1: return "l1";
  }
  return "?";
}

std::vector<Case> suite_cases(std::string_view suite) {
  std::vector<Case> cases = {
      {"matrix", Method::Disc, 2, 5, 0.6, 1.0, 0.4, 1e-1},
      {"matrix", Method::Disc, 2, 5, 0.6, 1.0, 0.4, 1e-2},
      {"matrix", Method::Disc, 2, 5, 0.6, 1.0, 0.4, 1e-3},
      {"matrix", Method::Disc, 2, 7, 0.6, 1.0, 0.4, 1e-3},
      {"symmetric", Method::Disc, 2, 3, 0.6, 1.0, 0.4, 1e-1},
      {"symmetric", Method::Disc, 2, 3, 0.6, 1.0, 0.4, 1e-2},
      {"symmetric", Method::Disc, 2, 3, 0.6, 1.0, 0.4, 1e-3},
      {"tensor", Method::Disc, 3, 3, 0.78, 1.0, 0.22, 1e-1},
      {"tensor", Method::Disc, 3, 3, 0.78, 1.0, 0.22, 1e-3},
      {"matrix", Method::L1, 2, 4, 0.95, 1.0, 0.05, 1e-3},
      {"matrix", Method::Strip, 2, 4, 0.5, 1.0, 0.5, 1e-1},
  };
  if (suite == "small") return cases;
  if (suite == "medium") {
    const std::vector<Case> more = {
        {"matrix", Method::Disc, 2, 8, 0.6, 1.0, 0.4, 1e-3},
        {"symmetric", Method::Disc, 2, 4, 0.6, 1.0, 0.4, 1e-3},
        {"tensor", Method::Disc, 3, 4, 0.78, 1.0, 0.22, 1e-3},
        {"tensor", Method::L1, 3, 3, 0.99, 1.0, 0.01, 1e-3},
        {"matrix", Method::Strip, 2, 6, 0.5, 1.0, 0.5, 1e-1},
        {"symmetric", Method::Strip, 2, 3, 0.5, 1.0, 0.5, 1e-1},
    };
    cases.insert(cases.end(), more.begin(), more.end());
    return cases;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown suite '" + std::string(suite) + "' (small, medium)");
}

std::vector<Complex> uniform_entries(std::mt19937_64& rng, std::size_t count, double lo, double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<Complex> out(count);
  for (auto& z : out) z = Complex(dist(rng), 0.0);
  return out;
}

Instance random_instance(const Case& c, std::mt19937_64& rng) {
  if (c.kind == "matrix") return ComplexMatrix(c.n, uniform_entries(rng, c.n * c.n, c.lo, c.hi));
  if (c.kind == "symmetric") {
    const std::size_t m = 2 * c.n;
    std::vector<Complex> e(m * m, Complex(1.0, 0.0));
    std::uniform_real_distribution<double> dist(c.lo, c.hi);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) e[i * m + j] = e[j * m + i] = Complex(dist(rng), 0.0);
    }
    return SymmetricComplexMatrix(m, std::move(e));
  }
  std::size_t count = 1;
  for (std::size_t k = 0; k < c.d; ++k) count *= c.n;
  return ComplexTensor(c.d, c.n, uniform_entries(rng, count, c.lo, c.hi));
}

// --- command handlers ------------------------------------------------------

Format to_format(const std::string& name) { return name == "text" ? Format::Text : Format::Json; }

}  // namespace

BenchmarkResult run_benchmark(std::string_view suite, std::uint64_t seed, const Limits& limits) {
  BenchmarkResult result;
  json rows = json::array();
  const auto cases = suite_cases(suite);
  for (std::size_t index = 0; index < cases.size(); ++index) {
    const Case& c = cases[index];
    std::seed_seq sequence{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                           static_cast<std::uint32_t>(index)};
    std::mt19937_64 rng(sequence);
    const auto instance = random_instance(c, rng);
    const auto start = Clock::now();

    ApproxRequest request;
    request.method = c.method;
    request.epsilon = c.epsilon;
    request.options.limits = limits;
    const bool matrix_strip = c.method == Method::Strip && c.kind != "tensor";
    (matrix_strip ? request.delta : request.eta) = c.parameter;

    json row;
    row["index"] = index;
    row["kind"] = c.kind;
    row["method"] = std::string(method_name(c.method));
    row["n"] = c.n;
    row["d"] = c.d;
    row["parameter"] = c.parameter;
    row["epsilon"] = c.epsilon;
    row["instance_sha256"] = instance_digest(instance);
    try {
      const auto report = approximate(instance, request);
      const Complex exact = exact_value(instance, limits);
      const double realized = log_distance(report.log_value, std::log(exact));
      const double bound = report.error_bound.value_or(-1.0);
      row["degree_used"] = report.degree_used;
      row["certified_bound"] = bound;
      row["realized_error"] = realized;
      row["log_value"] = complex_json(report.log_value);
      row["exact_log"] = log_json(exact);
      row["pass"] = realized <= bound;
    } catch (const Error& e) {
      row["degree_used"] = 0;
      row["certified_bound"] = 0.0;
      row["realized_error"] = 0.0;
      row["error"] = e.what();
      row["pass"] = false;
    }
    row["wall_time_s"] = seconds_since(start);
    result.all_pass = result.all_pass && row["pass"].get<bool>();
    rows.push_back(std::move(row));
  }
  result.report["suite"] = std::string(suite);
  result.report["seed"] = seed;
  result.report["rows"] = std::move(rows);
  result.report["all_pass"] = result.all_pass;
  return result;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and Taylor-interpolation approximations of log per, haf and PER"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));

  std::string path;
  auto* exact_cmd = app.add_subcommand("exact", "Exact per / haf / PER of an instance file");
  exact_cmd->add_option("file", path, "Instance file")->required();

  auto* approx_cmd = app.add_subcommand("approx", "Certified Taylor approximation of the log");
  approx_cmd->add_option("file", path, "Instance file")->required();
  std::string method = "disc";
  std::optional<double> eta, delta, tau;
  double epsilon = 1e-3;
  std::optional<std::size_t> degree;
  bool verify = false, force = false;
  unsigned workers = 1;
  approx_cmd->add_option("--method", method, "disc, strip or l1")->check(CLI::IsMember({"disc", "strip", "l1"}));
  approx_cmd->add_option("--eta", eta, "Region radius (disc, l1, tensor strip)");
  approx_cmd->add_option("--delta", delta, "Lower entry bound (matrix strip)");
  approx_cmd->add_option("--epsilon", epsilon, "Target additive error");
  approx_cmd->add_option("--degree", degree, "Override the Taylor degree m");
  approx_cmd->add_flag("--verify", verify, "Compare with the exact value");
  approx_cmd->add_flag("--force", force, "Skip the region check; no certified bound");
  approx_cmd->add_option("--workers", workers, "Tuple-sum worker threads")->check(CLI::Range(1u, 256u));

  auto* region_cmd = app.add_subcommand("check-region", "Membership of an instance in a zero-free region");
  region_cmd->add_option("file", path, "Instance file")->required();
  std::string region = "DiscPer";
  region_cmd->add_option("--region", region, "Region kind, e.g. DiscPer, StripTensor, L1Per")->required();
  region_cmd->add_option("--eta", eta, "Region radius")->required();
  region_cmd->add_option("--tau", tau, "Strip imaginary half-width");

  auto* bench_cmd = app.add_subcommand("benchmark", "Seeded accuracy benchmark against the exact oracles");
  std::string suite = "small";
  std::uint64_t seed = 1;
  bench_cmd->add_option("--suite", suite, "small or medium")->check(CLI::IsMember({"small", "medium"}));
  bench_cmd->add_option("--seed", seed, "Random seed");

  auto* phi_cmd = app.add_subcommand("phi-table", "Constants of the strip-to-disc polynomial phi");
  double rho = 0.5;
  phi_cmd->add_option("--rho", rho, "phi parameter in (0, 1]")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  const Format fmt = to_format(format);
  json report;
  const auto start = Clock::now();
  int code = kOk;
  auto finish = [&]() {
    report["wall_time_s"] = seconds_since(start);
    out << render(report, fmt);
    return code;
  };

  try {
    if (*exact_cmd) {
      report["command"] = "exact";
      report["arguments"] = {{"file", path}};
      const auto instance = load_instance(path);
      report["kind"] = std::string(kind_name(instance));
      report["instance_sha256"] = instance_digest(instance);
      const Complex value = exact_value(instance, Limits{});
      report["value"] = complex_json(value);
      report["log"] = log_json(value);
      report["log_defined"] = value != Complex(0.0, 0.0);
      return finish();
    }

    if (*approx_cmd) {
      report["command"] = "approx";
      report["arguments"] = {{"file", path}, {"method", method}, {"epsilon", epsilon}, {"verify", verify},
                             {"force", force},  {"workers", workers}};
      if (eta) report["arguments"]["eta"] = *eta;
      if (delta) report["arguments"]["delta"] = *delta;
      if (degree) report["arguments"]["degree"] = *degree;
      const auto instance = load_instance(path);
      report["kind"] = std::string(kind_name(instance));
      report["instance_sha256"] = instance_digest(instance);
      ApproxRequest request;
      request.method = *parse_method(method);
      request.eta = eta;
      request.delta = delta;
      request.epsilon = epsilon;
      request.options.degree = degree;
      request.options.force = force;
      request.options.limits.workers = workers;
      if (force) err << "warning: --force skips the region check; the result carries no certified bound\n";
      try {
        const auto result = approximate(instance, request);
        report["result"] = to_json(result);
        if (verify) {
          const Complex exact = exact_value(instance, request.options.limits);
          report["exact_log"] = log_json(exact);
          if (exact == Complex(0.0, 0.0)) {
            report["realized_error"] = nullptr;
          } else {
            const double realized = log_distance(result.log_value, std::log(exact));
            report["realized_error"] = realized;
            if (result.error_bound) {
              const bool ok = realized <= *result.error_bound;
              report["certificate_ok"] = ok;
              if (!ok) code = kCertificateViolation;
            }
          }
        }
      } catch (const RegionViolationError& e) {
        report["error"] = e.what();
        report["region"] = to_json(e.report());
        err << "error: " << e.what() << " (worst index";
        for (auto i : e.report().worst_index) err << ' ' << i;
        err << ")\n";
        code = kOutside;
      }
      return finish();
    }

    if (*region_cmd) {
      report["command"] = "check-region";
      report["arguments"] = {{"file", path}, {"region", region}, {"eta", *eta}};
      if (tau) report["arguments"]["tau"] = *tau;
      const auto kind = parse_region_kind(region);
      if (!kind) throw Error(ErrorCode::InvalidArgument, "unknown region '" + region + "'");
      const auto instance = load_instance(path);
      report["kind"] = std::string(kind_name(instance));
      report["instance_sha256"] = instance_digest(instance);
      const int d = instance.index() == 2 ? static_cast<int>(std::get<ComplexTensor>(instance).dimension()) : 2;
      const RegionSpec spec{*kind, d, *eta, tau};
      const auto membership = std::visit([&](const auto& a) { return check_region(a, spec); }, instance);
      report["result"] = to_json(membership);
      code = membership.inside ? kOk : kOutside;
      return finish();
    }

    if (*bench_cmd) {
      report["command"] = "benchmark";
      report["arguments"] = {{"suite", suite}, {"seed", seed}};
      auto result = run_benchmark(suite, seed);
      for (auto& [key, value] : result.report.items()) report[key] = value;
      if (!result.all_pass) {
        err << "error: at least one row exceeds its certified bound\n";
        code = kCertificateViolation;
      }
      return finish();
    }

    if (*phi_cmd) {
      report["command"] = "phi-table";
      report["arguments"] = {{"rho", rho}};
      const auto constants = phi_constants(rho);
      json result = {{"rho", rho}, {"alpha", constants.alpha}, {"beta", constants.beta}, {"degree", constants.degree}};
      const auto phi = build_phi(rho);
      result["sigma"] = phi.sigma;
      result["phi_at_0"] = complex_json(phi.evaluate(Complex(0.0, 0.0)));
      result["phi_at_1"] = complex_json(phi.evaluate(Complex(1.0, 0.0)));
      report["result"] = std::move(result);
      return finish();
    }
  } catch (const Error& e) {
    report["error"] = e.what();
    err << "error: " << e.what() << '\n';
    code = exit_code_for(e.code());
    return finish();
  }
  return kInputError;
}

}  // namespace logperm::cli
