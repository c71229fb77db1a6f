#pragma once

#include <chrono>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "logperm/limits.hpp"
#include "logperm/phi.hpp"
#include "logperm/polynomial.hpp"
#include "logperm/regions.hpp"
#include "logperm/types.hpp"

namespace logperm {

// Interpolation polynomial g(z) = F(J + z (A - J)) for F = per, haf, PER.
// g(0) = F(J) and g(1) = F(A).

/// g(0), g'(0), ..., g^(m)(0) for g(z) = per(J + z(A - J)), m <= n.
/// g^(k)(0) = (n-k)! * sum over pairs of ordered k-tuples of distinct rows
/// and columns of prod (a_{i_t j_t} - 1), enumerated depth-first in
/// lexicographic order of (i_1, j_1, i_2, j_2, ...).
/// Throws BudgetExceeded when the tuple count is above limits.tuple_budget.
std::vector<Complex> g_derivatives_permanent(const ComplexMatrix& a, std::size_t m, const Limits& limits = {});

/// Same for g(z) = haf(J + z(A - J)), m <= n where the matrix is 2n x 2n:
/// g^(k)(0) = k! (2n-2k)! / (2^(n-k) (n-k)!) * sum over sets of k disjoint
/// pairs of prod (a_ij - 1).
std::vector<Complex> g_derivatives_hafnian(const SymmetricComplexMatrix& a, std::size_t m,
                                           const Limits& limits = {});

/// Same for g(z) = PER(J + z(A - J)): g^(k)(0) = ((n-k)!)^(d-1) * sum over
/// d ordered k-tuples of distinct indices of prod_t (a_{i_t1 ... i_td} - 1).
std::vector<Complex> g_derivatives_tensor(const ComplexTensor& a, std::size_t m, const Limits& limits = {});

/// All n + 1 coefficients of g, by expanding prod_i (1 + z (a_{i sigma(i)} - 1))
/// over every permutation. n <= limits.full_expansion_max_n.
Polynomial g_full_expansion_permanent(const ComplexMatrix& a, const Limits& limits = {});
/// Same over every perfect matching.
Polynomial g_full_expansion_hafnian(const SymmetricComplexMatrix& a, const Limits& limits = {});
/// Same over every (d-1)-tuple of permutations.
Polynomial g_full_expansion_tensor(const ComplexTensor& a, const Limits& limits = {});

/// f^(1)(0), ..., f^(m)(0) for f = ln g, from g(0), ..., g^(m)(0), solving
///   g^(k)(0) = sum_{j=0}^{k-1} C(k-1, j) g^(j)(0) f^(k-j)(0)
/// forward in k. Throws ZeroBaseValue if g(0) == 0.
std::vector<Complex> log_derivatives(std::span<const Complex> g_derivs);

/// deg_g / ((m + 1) beta^m (beta - 1)): bound on |ln g(1) - T_m(1)| when g
/// has no zeros in |z| <= beta. Throws BetaNotGreaterThanOne.
double taylor_error_bound(double deg_g, double beta, std::size_t m);

/// Smallest m with taylor_error_bound(deg_g, beta, m) <= epsilon.
std::size_t choose_degree(double deg_g, double beta, double epsilon);

/// ln(1) + ... + ln(n), compensated.
double log_factorial(std::size_t n);

enum class Pipeline { Disc, Strip, L1 };
std::string_view to_string(Pipeline p);

/// Choice of the strip (-xi <= Re z <= 1 + xi, |Im z| <= zeta) on which
/// r(z) = F(J + z(A - J)) has no zeros, and of the phi parameter rho that
/// places the image strip of phi (-rho <= Re <= 1 + 2 rho, |Im| <= 2 rho)
/// inside it.
struct StripParameters {
  double xi = 0.0;
  double zeta = 0.0;
  double rho = 0.0;
  double eta_prime = 0.0;  // (1 + xi) * scale
  double tau_prime = 0.0;  // zeta * scale
};

/// `scale` is max |1 - a| over the entries (1 - delta for the matrix
/// pipelines). xi solves xi = tau((1 + xi) scale, d) / scale, which maximizes
/// min(xi, zeta); zeta is 0.99 of its admissible maximum and
/// rho = min(xi, zeta, 2) / 2.
StripParameters choose_strip_parameters(double scale, int d);

struct ApproxOptions {
  /// Overrides the certified degree; the reported bound is then the bound at
  /// this degree and may exceed epsilon.
  std::optional<std::size_t> degree;
  /// Skip the region check. The error bound is left empty.
  bool force = false;
  /// Disc pipeline only: use the slice-wise l1 region instead of the
  /// entrywise disc.
  bool l1_region = false;
  Limits limits;
};

struct ApproxReport {
  Complex log_value;
  std::size_t degree_used = 0;
  std::optional<double> error_bound;
  Pipeline pipeline = Pipeline::Disc;
  double beta_used = 0.0;
  double deg_g = 0.0;
  /// g(0) = F(J); may be +inf for very large inputs, log_g0 is always finite.
  double g0 = 0.0;
  double log_g0 = 0.0;
  /// "tuple-sum", "full-expansion" or "none" (constant g).
  std::string derivative_path;
  std::optional<StripParameters> strip;
  std::optional<std::uint64_t> phi_degree;
  std::chrono::duration<double> elapsed{};
};

/// ln F(A) by the degree-m Taylor polynomial of ln g at 0 evaluated at 1.
/// beta = eta_max / eta for the disc region (0.5 for per and haf,
/// eta_d_disc for tensors) or the l1 region. Throws RegionViolationError,
/// BudgetExceeded, EtaTooLarge.
ApproxReport approx_log_disc(const ComplexMatrix& a, double eta, double epsilon, const ApproxOptions& options = {});
ApproxReport approx_log_disc(const SymmetricComplexMatrix& a, double eta, double epsilon,
                             const ApproxOptions& options = {});
ApproxReport approx_log_disc(const ComplexTensor& a, double eta, double epsilon, const ApproxOptions& options = {});

/// ln F(A) through g = r(phi(z)): real matrices with delta <= a_ij <= 1
/// (`bound` = delta), or real tensors with |1 - a| <= eta < eta_d_strip(d)
/// (`bound` = eta).
ApproxReport approx_log_strip(const ComplexMatrix& a, double delta, double epsilon, const ApproxOptions& options = {});
ApproxReport approx_log_strip(const SymmetricComplexMatrix& a, double delta, double epsilon,
                              const ApproxOptions& options = {});
ApproxReport approx_log_strip(const ComplexTensor& a, double eta, double epsilon, const ApproxOptions& options = {});

}  // namespace logperm
