#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "logperm/types.hpp"

namespace logperm {

// Truncated power-series arithmetic on plain coefficient vectors. Short
// operands use schoolbook loops in a fixed order; long ones switch to FFT
// convolution (FFTW, estimate-mode plans, so results are reproducible for a
// given build).

/// First `length` coefficients of a * b.
std::vector<Complex> series_multiply(std::span<const Complex> a, std::span<const Complex> b, std::size_t length);

/// First `length` coefficients of 1 / a. Requires a[0] != 0.
std::vector<Complex> series_inverse(std::span<const Complex> a, std::size_t length);

/// Taylor coefficients b_1..b_m of ln(a(z) / a(0)), returned as a vector of
/// size m + 1 with b_0 = 0. Uses the recurrence k a_k = sum_j j b_j a_{k-j}
/// for short series and ln a = integral of a'/a for long ones.
std::vector<Complex> series_log(std::span<const Complex> a, std::size_t m);

/// Values of sum_k c_k z^k at z = radius * exp(2 pi i j / points), j = 0..points-1.
/// Coefficients are folded modulo `points` and transformed once, so the cost
/// is O(deg + points log points).
std::vector<Complex> evaluate_on_circle(std::span<const Complex> coeffs, double radius, std::size_t points);

/// Operand length at which series_multiply switches to FFT convolution.
inline constexpr std::size_t kFftThreshold = 256;

}  // namespace logperm
