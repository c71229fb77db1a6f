#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "logperm/types.hpp"

namespace logperm {

/// Univariate polynomial with complex coefficients; coefficient k multiplies
/// z^k. Trailing coefficients that are exactly zero are dropped, and the zero
/// polynomial is stored as the single coefficient 0.
class Polynomial {
 public:
  Polynomial() : coeffs_{Complex(0.0, 0.0)} {}
  explicit Polynomial(std::vector<Complex> coeffs);
  Polynomial(std::initializer_list<Complex> coeffs) : Polynomial(std::vector<Complex>(coeffs)) {}

  std::size_t degree() const noexcept { return coeffs_.size() - 1; }
  bool is_zero() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == Complex(0.0, 0.0); }

  /// Zero for k above the degree.
  Complex coefficient(std::size_t k) const noexcept { return k < coeffs_.size() ? coeffs_[k] : Complex(0.0, 0.0); }
  std::span<const Complex> coefficients() const noexcept { return coeffs_; }

  Complex evaluate(Complex z) const noexcept;

  bool operator==(const Polynomial&) const = default;

 private:
  std::vector<Complex> coeffs_;
};

/// Drops every monomial of degree above m.
Polynomial poly_truncate(const Polynomial& p, std::size_t m);

/// outer(inner(z)) with monomials above degree m discarded. Horner scheme;
/// every intermediate product is truncated to degree m. Requires inner(0) == 0.
Polynomial poly_compose_truncated(const Polynomial& outer, const Polynomial& inner, std::size_t m);

/// Product of two polynomials truncated to degree m.
Polynomial poly_multiply_truncated(const Polynomial& a, const Polynomial& b, std::size_t m);

}  // namespace logperm
