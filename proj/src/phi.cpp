#include "logperm/phi.hpp"

#include <cmath>
#include <string>

#include "logperm/summation.hpp"

namespace logperm {

PhiConstants phi_constants(double rho) {
  if (!(rho > 0.0 && rho <= 1.0)) throw Error(ErrorCode::RhoOutOfRange, "rho must lie in (0, 1]");
  const double inv = 1.0 / rho;
  // -expm1(-x) = 1 - e^(-x) without cancellation for large rho.
  const double alpha = -std::expm1(-inv);
  const double beta = -std::expm1(-1.0 - inv) / alpha;
  const double n_real = std::floor((1.0 + inv) * std::exp(1.0 + inv));
  if (!(n_real < 1.8e19)) {
    throw Error(ErrorCode::BudgetExceeded, "phi degree N(rho) overflows for rho = " + std::to_string(rho));
  }
  return {alpha, beta, static_cast<std::uint64_t>(n_real)};
}

PhiPolynomial build_phi(double rho, const Limits& limits) {
  const auto constants = phi_constants(rho);
  if (constants.degree > limits.phi_max_degree) {
    throw Error(ErrorCode::BudgetExceeded, "phi degree N = " + std::to_string(constants.degree) +
                                               " exceeds the limit " + std::to_string(limits.phi_max_degree));
  }
  PhiPolynomial phi;
  phi.rho = rho;
  phi.alpha = constants.alpha;
  phi.beta = constants.beta;
  phi.degree = constants.degree;
  const std::size_t n = constants.degree;
  phi.coeffs.assign(n + 1, 0.0);
  CompensatedSum<double> sigma;
  double power = 1.0;
  for (std::size_t k = 1; k <= n; ++k) {
    power *= constants.alpha;
    phi.coeffs[k] = power / static_cast<double>(k);
    sigma.add(phi.coeffs[k]);
  }
  phi.sigma = sigma.value();
  for (std::size_t k = 1; k <= n; ++k) phi.coeffs[k] /= phi.sigma;
  return phi;
}

Complex PhiPolynomial::evaluate(Complex z) const {
  Complex acc(0.0, 0.0);
  for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * z + coeffs[k];
  return acc;
}

Polynomial PhiPolynomial::truncated(std::size_t m) const {
  const std::size_t keep = std::min(m, coeffs.size() - 1);
  std::vector<Complex> c(keep + 1);
  for (std::size_t k = 0; k <= keep; ++k) c[k] = Complex(coeffs[k], 0.0);
  return Polynomial(std::move(c));
}

}  // namespace logperm
