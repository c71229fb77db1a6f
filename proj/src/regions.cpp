#include "logperm/regions.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace logperm {

double alpha_constant() {
  auto residual = [](double x) { return x * std::exp(1.0 + x) - 1.0; };
  double lo = 0.2;
  double hi = 0.3;
  for (int iter = 0; iter < 200 && hi - lo > 0.0; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    (residual(mid) < 0.0 ? lo : hi) = mid;
  }
  return std::abs(residual(lo)) <= std::abs(residual(hi)) ? lo : hi;
}

double tau_bound(double eta, int d) {
  if (d < 2) throw Error(ErrorCode::InvalidArgument, "d must be at least 2");
  if (!(eta >= 0.0)) throw Error(ErrorCode::InvalidArgument, "eta must be non-negative");
  const double angle = std::numbers::pi / (4.0 * (d - 1)) - std::atan(eta);
  const double tau = (1.0 - eta) * std::sin(angle);
  if (!(angle > 0.0) || !(tau > 0.0)) {
    throw Error(ErrorCode::EtaTooLarge, "eta = " + std::to_string(eta) + " leaves no zero-free strip for d = " +
                                            std::to_string(d));
  }
  return tau;
}

DiscConstant eta_d_disc(int d) {
  if (d < 2) throw Error(ErrorCode::InvalidArgument, "d must be at least 2");
  auto objective = [d](double theta) { return std::sin(theta / 2.0) * std::cos((d - 1) * theta / 2.0); };
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = 0.0;
  double hi = 2.0 * std::numbers::pi / (3.0 * (d - 1));
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = objective(x1);
  double f2 = objective(x2);
  while (hi - lo > 1e-13) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = objective(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = objective(x1);
    }
  }
  const double theta = 0.5 * (lo + hi);
  return {objective(theta), theta};
}

double eta_d_strip(int d) {
  if (d < 2) throw Error(ErrorCode::InvalidArgument, "d must be at least 2");
  return std::tan(std::numbers::pi / (4.0 * (d - 1)));
}

double eta_d_l1(int d) {
  if (d < 2) throw Error(ErrorCode::InvalidArgument, "d must be at least 2");
  const double k = d - 1;
  return std::pow(alpha_constant(), k) * std::pow(k, k) / std::pow(static_cast<double>(d), d);
}

std::string_view to_string(RegionKind kind) {
  switch (kind) {
    case RegionKind::DiscPer: return "DiscPer";
    case RegionKind::DiscHaf: return "DiscHaf";
    case RegionKind::DiscTensor: return "DiscTensor";
    case RegionKind::StripPer: return "StripPer";
    case RegionKind::StripHaf: return "StripHaf";
    case RegionKind::StripTensor: return "StripTensor";
    case RegionKind::L1Per: return "L1Per";
    case RegionKind::L1Tensor: return "L1Tensor";
  }
  return "Unknown";
}

std::optional<RegionKind> parse_region_kind(std::string_view name) {
  for (auto kind : {RegionKind::DiscPer, RegionKind::DiscHaf, RegionKind::DiscTensor, RegionKind::StripPer,
                    RegionKind::StripHaf, RegionKind::StripTensor, RegionKind::L1Per, RegionKind::L1Tensor}) {
    if (to_string(kind) == name) return kind;
  }
  return std::nullopt;
}

double region_max_eta(RegionKind kind, int d) {
  switch (kind) {
    case RegionKind::DiscPer:
    case RegionKind::DiscHaf: return 0.5;
    case RegionKind::DiscTensor: return eta_d_disc(d).eta;
    case RegionKind::StripPer:
    case RegionKind::StripHaf: return 1.0;
    case RegionKind::StripTensor: return eta_d_strip(d);
    case RegionKind::L1Per: return alpha_constant() / 4.0;
    case RegionKind::L1Tensor: return eta_d_l1(d);
  }
  return 0.0;
}

namespace {

enum class Shape { Matrix, Symmetric, Tensor };

Shape shape_of(RegionKind kind) {
  switch (kind) {
    case RegionKind::DiscPer:
    case RegionKind::StripPer:
    case RegionKind::L1Per: return Shape::Matrix;
    case RegionKind::DiscHaf:
    case RegionKind::StripHaf: return Shape::Symmetric;
    default: return Shape::Tensor;
  }
}

bool is_strip(RegionKind kind) {
  return kind == RegionKind::StripPer || kind == RegionKind::StripHaf || kind == RegionKind::StripTensor;
}

bool is_l1(RegionKind kind) { return kind == RegionKind::L1Per || kind == RegionKind::L1Tensor; }

void validate(const RegionSpec& spec, Shape shape, int d) {
  if (shape_of(spec.kind) != shape) {
    throw Error(ErrorCode::ShapeMismatch, std::string("region ") + std::string(to_string(spec.kind)) +
                                              " does not apply to this input");
  }
  if (spec.d != d) {
    throw Error(ErrorCode::ShapeMismatch, "region d = " + std::to_string(spec.d) + " but input has d = " +
                                              std::to_string(d));
  }
  if (!(spec.eta >= 0.0)) throw Error(ErrorCode::InvalidArgument, "eta must be non-negative");
  const double max_eta = region_max_eta(spec.kind, d);
  // Strip hypotheses need eta strictly below the maximum; disc and L1
  // hypotheses are closed.
  if (is_strip(spec.kind) ? !(spec.eta < max_eta) : !(spec.eta <= max_eta)) {
    throw Error(ErrorCode::EtaTooLarge, "eta = " + std::to_string(spec.eta) + " exceeds the bound " +
                                            std::to_string(max_eta) + " for " + std::string(to_string(spec.kind)));
  }
  if (is_strip(spec.kind) && spec.tau) {
    if (!(*spec.tau >= 0.0)) throw Error(ErrorCode::InvalidArgument, "tau must be non-negative");
    if (!(*spec.tau <= tau_bound(spec.eta, d))) {
      throw Error(ErrorCode::EtaTooLarge, "tau exceeds tau_bound(eta, d)");
    }
  }
}

// Entrywise check over flat entry indices accepted by `use`.
template <typename Use, typename Locate>
MembershipReport check_entrywise(std::span<const Complex> entries, const RegionSpec& spec, int d, Use use,
                                 Locate locate) {
  MembershipReport report;
  report.margin = INFINITY;
  std::size_t worst = entries.size();
  if (is_strip(spec.kind)) {
    const double tau = spec.tau.value_or(tau_bound(spec.eta, d));
    for (std::size_t k = 0; k < entries.size(); ++k) {
      if (!use(k)) continue;
      const double dev_re = std::abs(1.0 - entries[k].real());
      const double dev_im = std::abs(entries[k].imag());
      if (spec.eta - dev_re < report.margin) {
        report.margin = spec.eta - dev_re;
        report.worst_value = dev_re;
        report.bound = spec.eta;
        worst = k;
      }
      if (tau - dev_im < report.margin) {
        report.margin = tau - dev_im;
        report.worst_value = dev_im;
        report.bound = tau;
        worst = k;
      }
    }
  } else {
    for (std::size_t k = 0; k < entries.size(); ++k) {
      if (!use(k)) continue;
      const double dev = std::abs(Complex(1.0, 0.0) - entries[k]);
      if (spec.eta - dev < report.margin) {
        report.margin = spec.eta - dev;
        report.worst_value = dev;
        worst = k;
      }
    }
    report.bound = spec.eta;
  }
  if (worst == entries.size()) {
    // Nothing constrained (a 2 x 2 symmetric matrix has one off-diagonal
    // pair, so this only happens for degenerate inputs).
    report.margin = spec.eta;
    report.bound = spec.eta;
  } else {
    report.worst_index = locate(worst);
  }
  report.inside = report.margin >= 0.0;
  return report;
}

// L1 check: sums of |1 - z| over every slice, compared with eta n^(d-1).
MembershipReport check_l1(const ComplexTensor& a, const RegionSpec& spec) {
  const std::size_t d = a.dimension();
  const std::size_t n = a.size();
  std::vector<double> sums(d * n, 0.0);
  for (std::size_t flat = 0; flat < a.entries().size(); ++flat) {
    const double dev = std::abs(Complex(1.0, 0.0) - a.entries()[flat]);
    std::size_t rest = flat;
    for (std::size_t axis = d; axis-- > 0;) {
      sums[axis * n + rest % n] += dev;
      rest /= n;
    }
  }
  MembershipReport report;
  report.bound = spec.eta * std::pow(static_cast<double>(n), static_cast<double>(d - 1));
  report.margin = INFINITY;
  for (std::size_t line = 0; line < sums.size(); ++line) {
    if (report.bound - sums[line] < report.margin) {
      report.margin = report.bound - sums[line];
      report.worst_value = sums[line];
      report.worst_index = {line / n, line % n};
    }
  }
  report.line_sums = std::move(sums);
  report.inside = report.margin >= 0.0;
  return report;
}

}  // namespace

MembershipReport check_region(const ComplexMatrix& a, const RegionSpec& spec) {
  validate(spec, Shape::Matrix, 2);
  if (is_l1(spec.kind)) {
    RegionSpec as_tensor = spec;
    return check_l1(ComplexTensor::from_matrix(a), as_tensor);
  }
  const std::size_t n = a.size();
  return check_entrywise(
      a.entries(), spec, 2, [](std::size_t) { return true; },
      [n](std::size_t k) { return std::vector<std::size_t>{k / n, k % n}; });
}

MembershipReport check_region(const SymmetricComplexMatrix& a, const RegionSpec& spec) {
  validate(spec, Shape::Symmetric, 2);
  const std::size_t m = a.size();
  return check_entrywise(
      a.entries(), spec, 2, [m](std::size_t k) { return k / m != k % m; },
      [m](std::size_t k) { return std::vector<std::size_t>{k / m, k % m}; });
}

MembershipReport check_region(const ComplexTensor& a, const RegionSpec& spec) {
  validate(spec, Shape::Tensor, static_cast<int>(a.dimension()));
  if (is_l1(spec.kind)) return check_l1(a, spec);
  return check_entrywise(
      a.entries(), spec, static_cast<int>(a.dimension()), [](std::size_t) { return true; },
      [&a](std::size_t k) { return a.multi_index(k); });
}

Polynomial schur_product(const Polynomial& f, const Polynomial& g, std::size_t n) {
  if ((!f.is_zero() && f.degree() > n) || (!g.is_zero() && g.degree() > n)) {
    throw Error(ErrorCode::DegreeExceedsN, "Schur product operands must have degree <= n");
  }
  std::vector<Complex> c(n + 1);
  double binom = 1.0;  // C(n, k)
  for (std::size_t k = 0; k <= n; ++k) {
    c[k] = f.coefficient(k) * g.coefficient(k) / binom;
    binom = binom * static_cast<double>(n - k) / static_cast<double>(k + 1);
  }
  return Polynomial(std::move(c));
}

Polynomial partial_exp_poly(std::size_t n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be at least 1");
  if (n > 170) throw Error(ErrorCode::SizeLimitExceeded, "1/n! underflows for n > 170");
  std::vector<Complex> c(n + 1);
  double inv_factorial = 1.0;
  for (std::size_t k = 0; k <= n; ++k) {
    if (k > 0) inv_factorial /= static_cast<double>(k);
    c[k] = Complex(inv_factorial, 0.0);
  }
  return Polynomial(std::move(c));
}

}  // namespace logperm
