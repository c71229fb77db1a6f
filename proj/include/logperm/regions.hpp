#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "logperm/polynomial.hpp"
#include "logperm/types.hpp"

namespace logperm {

/// Real root of alpha * e^(1 + alpha) = 1 (about 0.2785), by bisection.
double alpha_constant();

/// (1 - eta) sin(pi / (4 (d - 1)) - arctan eta), the imaginary half-width of
/// the zero-free strip around Re z = 1. Throws EtaTooLarge unless positive.
double tau_bound(double eta, int d);

struct DiscConstant {
  double eta;
  double theta;
};

/// Largest eta_d = sin(theta/2) cos((d-1) theta/2) over
/// 0 < theta < 2 pi / (3 (d - 1)), located by golden-section search.
DiscConstant eta_d_disc(int d);

/// tan(pi / (4 (d - 1))).
double eta_d_strip(int d);

/// alpha^(d-1) (d-1)^(d-1) / d^d.
double eta_d_l1(int d);

enum class RegionKind { DiscPer, DiscHaf, DiscTensor, StripPer, StripHaf, StripTensor, L1Per, L1Tensor };

std::string_view to_string(RegionKind kind);
std::optional<RegionKind> parse_region_kind(std::string_view name);

struct RegionSpec {
  RegionKind kind;
  int d = 2;
  double eta = 0.0;
  std::optional<double> tau;  // strip kinds; defaults to tau_bound(eta, d)
};

/// Largest admissible eta for a kind: 0.5, eta_d_disc, 1, eta_d_strip,
/// alpha / 4 or eta_d_l1.
double region_max_eta(RegionKind kind, int d);

struct MembershipReport {
  bool inside = false;
  /// Smallest slack over all constraints; negative when outside.
  double margin = 0.0;
  /// Entry multi-index (0-based) of the tightest constraint; for L1 kinds
  /// {axis, line}.
  std::vector<std::size_t> worst_index;
  /// |1 - z|, |1 - Re z| or |Im z| at the worst entry, or the worst line sum.
  double worst_value = 0.0;
  /// Bound the worst value is compared against.
  double bound = 0.0;
  /// L1 kinds only: sums of |1 - z| over every line, axis by axis.
  std::vector<double> line_sums;
};

/// Raised by the approximation pipelines when the input is outside the
/// region their certificate depends on.
class RegionViolationError : public Error {
 public:
  RegionViolationError(const std::string& what, MembershipReport report)
      : Error(ErrorCode::RegionViolation, what), report_(std::move(report)) {}

  const MembershipReport& report() const noexcept { return report_; }

 private:
  MembershipReport report_;
};

// Membership is closed: points on the boundary are inside. Throws
// ShapeMismatch when the kind does not fit the input.
MembershipReport check_region(const ComplexMatrix& a, const RegionSpec& spec);
/// Only off-diagonal entries are constrained; the hafnian never reads the
/// diagonal.
MembershipReport check_region(const SymmetricComplexMatrix& a, const RegionSpec& spec);
MembershipReport check_region(const ComplexTensor& a, const RegionSpec& spec);

/// c_k = a_k b_k / C(n, k), k = 0..n.
Polynomial schur_product(const Polynomial& f, const Polynomial& g, std::size_t n);

/// sum_{k=0}^n z^k / k!. Requires 1 <= n <= 170.
Polynomial partial_exp_poly(std::size_t n);

}  // namespace logperm
