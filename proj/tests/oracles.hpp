#pragma once

// Independent reference implementations used only by the tests. None of
// them share code with the library's fast paths.

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <random>
#include <vector>

#include "logperm/types.hpp"

namespace oracle {

using logperm::Complex;
using logperm::ComplexMatrix;
using logperm::ComplexTensor;
using logperm::SymmetricComplexMatrix;

inline Complex naive_permanent(const ComplexMatrix& a) {
  const std::size_t n = a.size();
  std::vector<std::size_t> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  Complex total(0.0, 0.0);
  do {
    Complex p(1.0, 0.0);
    for (std::size_t i = 0; i < n; ++i) p *= a(i, sigma[i]);
    total += p;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return total;
}

namespace detail {
inline Complex pair_up(const SymmetricComplexMatrix& a, std::vector<bool>& used) {
  std::size_t first = 0;
  while (first < used.size() && used[first]) ++first;
  if (first == used.size()) return Complex(1.0, 0.0);
  used[first] = true;
  Complex total(0.0, 0.0);
  for (std::size_t j = first + 1; j < used.size(); ++j) {
    if (used[j]) continue;
    used[j] = true;
    total += a(first, j) * pair_up(a, used);
    used[j] = false;
  }
  used[first] = false;
  return total;
}
}  // namespace detail

/// Sum over all (2n-1)!! perfect matchings.
inline Complex naive_hafnian(const SymmetricComplexMatrix& a) {
  std::vector<bool> used(a.size(), false);
  return detail::pair_up(a, used);
}

inline std::vector<Complex> multiply(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  std::vector<Complex> out(a.size() + b.size() - 1, Complex(0.0, 0.0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

/// outer(inner(z)) expanded in full with powers of inner, then cut to degree m.
inline std::vector<Complex> naive_compose(const std::vector<Complex>& outer, const std::vector<Complex>& inner,
                                          std::size_t m) {
  std::vector<Complex> result{Complex(0.0, 0.0)};
  std::vector<Complex> power{Complex(1.0, 0.0)};
  for (const Complex& c : outer) {
    if (result.size() < power.size()) result.resize(power.size(), Complex(0.0, 0.0));
    for (std::size_t k = 0; k < power.size(); ++k) result[k] += c * power[k];
    power = multiply(power, inner);
  }
  result.resize(std::max<std::size_t>(std::min(result.size(), m + 1), 1));
  while (result.size() > 1 && result.back() == Complex(0.0, 0.0)) result.pop_back();
  return result;
}

/// Roots of sum c_k z^k from the eigenvalues of the balanced companion matrix.
inline std::vector<Complex> roots(std::vector<Complex> c) {
  while (c.size() > 1 && c.back() == Complex(0.0, 0.0)) c.pop_back();
  const int deg = static_cast<int>(c.size()) - 1;
  if (deg < 1) return {};
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(deg, deg);
  for (int i = 1; i < deg; ++i) m(i, i - 1) = 1.0;
  for (int i = 0; i < deg; ++i) m(i, deg - 1) = -c[i] / c[deg];

  // Parlett-Reinsch balancing with powers of two.
  bool done = false;
  while (!done) {
    done = true;
    for (int i = 0; i < deg; ++i) {
      double row = 0.0, col = 0.0;
      for (int j = 0; j < deg; ++j) {
        if (j == i) continue;
        row += std::abs(m(i, j));
        col += std::abs(m(j, i));
      }
      if (row == 0.0 || col == 0.0) continue;
      double f = 1.0;
      const double s = row + col;
      while (col < row / 2.0) {
        col *= 2.0;
        row /= 2.0;
        f *= 2.0;
      }
      while (col >= row * 2.0) {
        col /= 2.0;
        row *= 2.0;
        f /= 2.0;
      }
      if ((row + col) < 0.95 * s) {
        done = false;
        m.row(i) /= f;
        m.col(i) *= f;
      }
    }
  }
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, false);
  std::vector<Complex> out;
  for (int i = 0; i < deg; ++i) out.push_back(solver.eigenvalues()[i]);
  return out;
}

inline double min_modulus(const std::vector<Complex>& zs) {
  double best = INFINITY;
  for (const auto& z : zs) best = std::min(best, std::abs(z));
  return best;
}

/// Coefficients of lead * prod (z - root).
inline std::vector<Complex> from_roots(const std::vector<Complex>& zs, Complex lead = Complex(1.0, 0.0)) {
  std::vector<Complex> p{lead};
  for (const auto& r : zs) p = multiply(p, {-r, Complex(1.0, 0.0)});
  return p;
}

/// f(1) - T_m(1) for f = ln(prod (1 - z / r_j)), from the roots directly:
/// each factor contributes ln(1 - 1/r) + sum_{k<=m} r^-k / k.
inline Complex log_taylor_remainder(const std::vector<Complex>& zs, std::size_t m) {
  Complex total(0.0, 0.0);
  for (const auto& r : zs) {
    Complex partial(0.0, 0.0);
    Complex w(1.0, 0.0);
    for (std::size_t k = 1; k <= m; ++k) {
      w /= r;
      partial += w / static_cast<double>(k);
    }
    total += std::log(Complex(1.0, 0.0) - 1.0 / r) + partial;
  }
  return total;
}

inline double relative_error(Complex got, Complex want) {
  const double scale = std::max(std::abs(want), 1e-300);
  return std::abs(got - want) / scale;
}

inline Complex uniform_complex(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> u(lo, hi);
  const double re = u(rng);
  return Complex(re, u(rng));
}

inline double uniform_real(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

/// Point of the closed disc |z - center| <= radius, uniform in area.
inline Complex in_disc(std::mt19937_64& rng, Complex center, double radius) {
  const double r = radius * std::sqrt(uniform_real(rng, 0.0, 1.0));
  const double t = uniform_real(rng, 0.0, 2.0 * M_PI);
  return center + std::polar(r, t);
}

inline ComplexMatrix random_matrix(std::mt19937_64& rng, std::size_t n, double lo, double hi, bool complex = false) {
  std::vector<Complex> e(n * n);
  for (auto& z : e) z = complex ? uniform_complex(rng, lo, hi) : Complex(uniform_real(rng, lo, hi), 0.0);
  return ComplexMatrix(n, std::move(e));
}

inline SymmetricComplexMatrix random_symmetric(std::mt19937_64& rng, std::size_t two_n, double lo, double hi,
                                               bool complex = false) {
  std::vector<Complex> e(two_n * two_n);
  for (std::size_t i = 0; i < two_n; ++i) {
    for (std::size_t j = i; j < two_n; ++j) {
      const Complex z = complex ? uniform_complex(rng, lo, hi) : Complex(uniform_real(rng, lo, hi), 0.0);
      e[i * two_n + j] = e[j * two_n + i] = z;
    }
  }
  return SymmetricComplexMatrix(two_n, std::move(e));
}

inline ComplexTensor random_tensor(std::mt19937_64& rng, std::size_t d, std::size_t n, double lo, double hi,
                                   bool complex = false) {
  std::size_t count = 1;
  for (std::size_t k = 0; k < d; ++k) count *= n;
  std::vector<Complex> e(count);
  for (auto& z : e) z = complex ? uniform_complex(rng, lo, hi) : Complex(uniform_real(rng, lo, hi), 0.0);
  return ComplexTensor(d, n, std::move(e));
}

inline double factorial(std::size_t n) {
  double f = 1.0;
  for (std::size_t k = 2; k <= n; ++k) f *= static_cast<double>(k);
  return f;
}

}  // namespace oracle
