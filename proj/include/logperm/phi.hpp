#pragma once

#include <cstdint>
#include <vector>

#include "logperm/limits.hpp"
#include "logperm/polynomial.hpp"

namespace logperm {

/// Polynomial phi(z) = (1/sigma) sum_{k=1}^N (alpha z)^k / k that maps the
/// disc |z| <= beta into the strip -rho <= Re w <= 1 + 2 rho, |Im w| <= 2 rho,
/// with phi(0) = 0 and phi(1) = 1. Constants:
///   alpha = 1 - e^(-1/rho)
///   beta  = (1 - e^(-1 - 1/rho)) / (1 - e^(-1/rho))
///   N     = floor((1 + 1/rho) e^(1 + 1/rho))
///   sigma = sum_{k=1}^N alpha^k / k
struct PhiPolynomial {
  double rho = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  std::uint64_t degree = 0;  // N
  double sigma = 0.0;
  /// coeffs[k] multiplies z^k; coeffs[0] == 0.
  std::vector<double> coeffs;

  Complex evaluate(Complex z) const;

  /// phi with monomials above degree m dropped.
  Polynomial truncated(std::size_t m) const;
  Polynomial polynomial() const { return truncated(coeffs.size() - 1); }
};

struct PhiConstants {
  double alpha;
  double beta;
  std::uint64_t degree;
};

/// alpha, beta and N for a given rho, without materializing phi. Throws
/// RhoOutOfRange unless 0 < rho <= 1, and BudgetExceeded if N does not fit.
PhiConstants phi_constants(double rho);

/// Throws RhoOutOfRange unless 0 < rho <= 1, and BudgetExceeded when N is
/// above limits.phi_max_degree.
PhiPolynomial build_phi(double rho, const Limits& limits = {});

}  // namespace logperm
