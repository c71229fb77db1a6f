#include "logperm/polynomial.hpp"

#include "logperm/series.hpp"

namespace logperm {

Polynomial::Polynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  while (coeffs_.size() > 1 && coeffs_.back() == Complex(0.0, 0.0)) coeffs_.pop_back();
  if (coeffs_.empty()) coeffs_.push_back(Complex(0.0, 0.0));
  for (const auto& c : coeffs_) require_finite(c);
}

Complex Polynomial::evaluate(Complex z) const noexcept {
  Complex acc(0.0, 0.0);
  for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * z + coeffs_[k];
  return acc;
}

Polynomial poly_truncate(const Polynomial& p, std::size_t m) {
  auto c = p.coefficients();
  const std::size_t keep = std::min(c.size(), m + 1);
  return Polynomial(std::vector<Complex>(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(keep)));
}

Polynomial poly_multiply_truncated(const Polynomial& a, const Polynomial& b, std::size_t m) {
  return Polynomial(series_multiply(a.coefficients(), b.coefficients(), m + 1));
}

Polynomial poly_compose_truncated(const Polynomial& outer, const Polynomial& inner, std::size_t m) {
  if (inner.coefficient(0) != Complex(0.0, 0.0)) {
    throw Error(ErrorCode::NonzeroInnerConstant, "inner polynomial must vanish at 0");
  }
  const auto inner_m = poly_truncate(inner, m);
  // Horner: acc = (...((c_d) * inner + c_{d-1}) * inner + ...) + c_0.
  std::vector<Complex> acc{outer.coefficient(outer.degree())};
  for (std::size_t k = outer.degree(); k-- > 0;) {
    acc = series_multiply(acc, inner_m.coefficients(), m + 1);
    if (acc.empty()) acc.push_back(Complex(0.0, 0.0));
    acc[0] += outer.coefficient(k);
  }
  return Polynomial(std::move(acc));
}

}  // namespace logperm
