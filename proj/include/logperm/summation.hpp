#pragma once

#include <cmath>
#include <complex>
#include <type_traits>

namespace logperm {

/// Neumaier-compensated running sum. Components of a complex sum are
/// compensated independently. The result depends only on the order of add().
template <typename T>
class CompensatedSum {
 public:
  void add(T value) {
    if constexpr (std::is_floating_point_v<T>) {
      add_real(sum_, carry_, value);
    } else {
      double re = sum_.real(), im = sum_.imag();
      double cre = carry_.real(), cim = carry_.imag();
      add_real(re, cre, value.real());
      add_real(im, cim, value.imag());
      sum_ = T(re, im);
      carry_ = T(cre, cim);
    }
  }

  T value() const { return sum_ + carry_; }

 private:
  static void add_real(double& sum, double& carry, double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      carry += (sum - t) + x;
    } else {
      carry += (x - t) + sum;
    }
    sum = t;
  }

  T sum_{};
  T carry_{};
};

}  // namespace logperm
