#include "logperm/series.hpp"

#include <fftw3.h>

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

namespace logperm {
namespace {

struct FftwFree {
  void operator()(void* p) const noexcept { fftw_free(p); }
};
using FftwBuffer = std::unique_ptr<fftw_complex[], FftwFree>;

FftwBuffer allocate(std::size_t size) {
  auto* raw = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * size));
  if (raw == nullptr) throw Error(ErrorCode::BudgetExceeded, "FFT buffer allocation failed");
  return FftwBuffer(raw);
}

// The FFTW planner is not thread-safe; executing a plan on new arrays is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

fftw_plan plan_for(std::size_t size, int sign) {
  static std::map<std::pair<std::size_t, int>, fftw_plan> cache;
  std::lock_guard lock(planner_mutex());
  auto key = std::make_pair(size, sign);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  // In-place plans; every execution below is in place on fftw_malloc'd data.
  auto scratch = allocate(size);
  fftw_plan plan = fftw_plan_dft_1d(static_cast<int>(size), scratch.get(), scratch.get(), sign, FFTW_ESTIMATE);
  cache.emplace(key, plan);
  return plan;
}

std::vector<Complex> multiply_schoolbook(std::span<const Complex> a, std::span<const Complex> b, std::size_t length) {
  std::vector<Complex> out(length, Complex(0.0, 0.0));
  for (std::size_t i = 0; i < a.size() && i < length; ++i) {
    if (a[i] == Complex(0.0, 0.0)) continue;
    const std::size_t jmax = std::min(b.size(), length - i);
    for (std::size_t j = 0; j < jmax; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

std::vector<Complex> multiply_fft(std::span<const Complex> a, std::span<const Complex> b, std::size_t length) {
  const std::size_t full = a.size() + b.size() - 1;
  std::size_t size = 1;
  while (size < full) size <<= 1;

  auto fa = allocate(size);
  auto fb = allocate(size);
  auto load = [size](fftw_complex* dst, std::span<const Complex> src) {
    for (std::size_t k = 0; k < size; ++k) {
      dst[k][0] = k < src.size() ? src[k].real() : 0.0;
      dst[k][1] = k < src.size() ? src[k].imag() : 0.0;
    }
  };
  load(fa.get(), a);
  load(fb.get(), b);
  fftw_plan forward = plan_for(size, FFTW_FORWARD);
  fftw_plan backward = plan_for(size, FFTW_BACKWARD);
  fftw_execute_dft(forward, fa.get(), fa.get());
  fftw_execute_dft(forward, fb.get(), fb.get());
  for (std::size_t k = 0; k < size; ++k) {
    const double re = fa[k][0] * fb[k][0] - fa[k][1] * fb[k][1];
    const double im = fa[k][0] * fb[k][1] + fa[k][1] * fb[k][0];
    fa[k][0] = re;
    fa[k][1] = im;
  }
  fftw_execute_dft(backward, fa.get(), fa.get());
  const double scale = 1.0 / static_cast<double>(size);
  std::vector<Complex> out(length, Complex(0.0, 0.0));
  const std::size_t keep = std::min(length, full);
  for (std::size_t k = 0; k < keep; ++k) out[k] = Complex(fa[k][0] * scale, fa[k][1] * scale);
  return out;
}

std::span<const Complex> clip(std::span<const Complex> a, std::size_t length) {
  return a.first(std::min(a.size(), length));
}

}  // namespace

std::vector<Complex> series_multiply(std::span<const Complex> a, std::span<const Complex> b, std::size_t length) {
  a = clip(a, length);
  b = clip(b, length);
  if (a.empty() || b.empty()) return std::vector<Complex>(length, Complex(0.0, 0.0));
  if (std::min(a.size(), b.size()) < kFftThreshold) return multiply_schoolbook(a, b, length);
  return multiply_fft(a, b, length);
}

std::vector<Complex> series_inverse(std::span<const Complex> a, std::size_t length) {
  if (a.empty() || a[0] == Complex(0.0, 0.0)) {
    throw Error(ErrorCode::ZeroBaseValue, "series with zero constant term has no inverse");
  }
  std::vector<Complex> h{Complex(1.0, 0.0) / a[0]};
  std::size_t have = 1;
  // Newton step: h <- h (2 - a h) mod z^next.
  while (have < length) {
    const std::size_t next = std::min(2 * have, length);
    auto e = series_multiply(clip(a, next), h, next);
    for (auto& c : e) c = -c;
    e[0] += Complex(2.0, 0.0);
    h = series_multiply(h, e, next);
    have = next;
  }
  h.resize(length, Complex(0.0, 0.0));
  return h;
}

std::vector<Complex> series_log(std::span<const Complex> a, std::size_t m) {
  if (a.empty() || a[0] == Complex(0.0, 0.0)) {
    throw Error(ErrorCode::ZeroBaseValue, "logarithm of a series with zero constant term");
  }
  a = clip(a, m + 1);
  std::vector<Complex> b(m + 1, Complex(0.0, 0.0));
  if (m == 0) return b;

  const double work = static_cast<double>(a.size()) * static_cast<double>(m);
  if (a.size() < kFftThreshold || work < 4.0e7) {
    // b_k = (a_k - (1/k) sum_{j=max(1,k-deg)}^{k-1} j b_j a_{k-j}) / a_0
    const std::size_t deg = a.size() - 1;
    const Complex inv_a0 = Complex(1.0, 0.0) / a[0];
    for (std::size_t k = 1; k <= m; ++k) {
      Complex acc(0.0, 0.0);
      const std::size_t jmin = k > deg ? k - deg : 1;
      for (std::size_t j = jmin; j < k; ++j) acc += static_cast<double>(j) * b[j] * a[k - j];
      const Complex ak = k <= deg ? a[k] : Complex(0.0, 0.0);
      b[k] = (ak - acc / static_cast<double>(k)) * inv_a0;
    }
    return b;
  }

  // ln a = integral of a' / a.
  std::vector<Complex> derivative(m, Complex(0.0, 0.0));
  for (std::size_t k = 1; k < a.size() && k <= m; ++k) derivative[k - 1] = static_cast<double>(k) * a[k];
  const auto inverse = series_inverse(a, m);
  const auto quotient = series_multiply(derivative, inverse, m);
  for (std::size_t k = 1; k <= m; ++k) b[k] = quotient[k - 1] / static_cast<double>(k);
  return b;
}

std::vector<Complex> evaluate_on_circle(std::span<const Complex> coeffs, double radius, std::size_t points) {
  if (points == 0) return {};
  auto bins = allocate(points);
  for (std::size_t b = 0; b < points; ++b) bins[b][0] = bins[b][1] = 0.0;
  double scale = 1.0;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const Complex term = coeffs[k] * scale;
    bins[k % points][0] += term.real();
    bins[k % points][1] += term.imag();
    scale *= radius;
  }
  fftw_plan plan = plan_for(points, FFTW_BACKWARD);
  fftw_execute_dft(plan, bins.get(), bins.get());
  std::vector<Complex> values(points);
  for (std::size_t j = 0; j < points; ++j) values[j] = Complex(bins[j][0], bins[j][1]);
  return values;
}

}  // namespace logperm
