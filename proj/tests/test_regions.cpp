#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "logperm/exact.hpp"
#include "logperm/regions.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace logperm;

namespace {

ComplexMatrix with_entry(std::size_t n, std::size_t i, std::size_t j, Complex z) {
  std::vector<Complex> e(n * n, Complex(1.0, 0.0));
  e[i * n + j] = z;
  return ComplexMatrix(n, e);
}

}  // namespace

TEST_CASE("alpha solves alpha e^(1 + alpha) = 1") {
  const double a = alpha_constant();
  CHECK(std::abs(a * std::exp(1.0 + a) - 1.0) < 1e-14);
  CHECK(std::round(a * 1000.0) / 1000.0 == doctest::Approx(0.278).epsilon(1e-12));
  CHECK(0.2 * std::exp(1.2) < 1.0);
  CHECK(0.3 * std::exp(1.3) > 1.0);
}

TEST_CASE("tau_bound") {
  CHECK(tau_bound(0.0, 2) == doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-15));
  CHECK(tau_bound(0.5, 2) == doctest::Approx(0.5 * std::sin(M_PI / 4.0 - std::atan(0.5))).epsilon(1e-15));
  CHECK(tau_bound(0.5, 2) > 0.0);
  CHECK(error_code([] { tau_bound(1.0, 2); }) == ErrorCode::EtaTooLarge);
  CHECK(error_code([] { tau_bound(0.5, 3); }) == ErrorCode::EtaTooLarge);
  CHECK(tau_bound(0.3, 3) > 0.0);
}

TEST_CASE("disc, strip and l1 constants") {
  CHECK(std::abs(eta_d_disc(2).eta - 0.5) < 1e-9);
  CHECK(std::abs(eta_d_disc(3).eta - std::sqrt(6.0) / 9.0) < 1e-9);
  // The maximizer is 0.184504...; the quoted 0.184 is that value truncated.
  CHECK(std::floor(eta_d_disc(4).eta * 1000.0) == 184.0);
  CHECK(eta_d_disc(4).eta == doctest::Approx(0.18450436491).epsilon(1e-9));
  for (int d = 2; d <= 6; ++d) {
    const auto c = eta_d_disc(d);
    CHECK(c.theta > 0.0);
    CHECK((d - 1) * c.theta < 2.0 * M_PI / 3.0);
    CHECK(c.eta == doctest::Approx(std::sin(c.theta / 2) * std::cos((d - 1) * c.theta / 2)).epsilon(1e-14));
  }
  CHECK(std::abs(eta_d_strip(2) - 1.0) < 1e-12);
  CHECK(std::abs(eta_d_strip(3) - (std::sqrt(2.0) - 1.0)) < 1e-12);
  CHECK(std::abs(eta_d_strip(4) - (2.0 - std::sqrt(3.0))) < 1e-12);
  const double a = alpha_constant();
  CHECK(eta_d_l1(2) == doctest::Approx(a / 4.0).epsilon(1e-14));
  CHECK(eta_d_l1(3) == doctest::Approx(a * a * 4.0 / 27.0).epsilon(1e-14));
  for (int d = 2; d <= 6; ++d) CHECK(eta_d_l1(d + 1) < eta_d_l1(d));
}

TEST_CASE("all-ones inputs are inside every region with the full margin") {
  const auto j = ComplexMatrix::ones(3);
  CHECK(check_region(j, {RegionKind::DiscPer, 2, 0.4}).margin == doctest::Approx(0.4));
  CHECK(check_region(j, {RegionKind::DiscPer, 2, 0.4}).inside);
  const auto strip = check_region(j, {RegionKind::StripPer, 2, 0.5, 0.1});
  CHECK(strip.inside);
  CHECK(strip.margin == doctest::Approx(0.1));
  CHECK(check_region(j, {RegionKind::L1Per, 2, 0.05}).inside);
  CHECK(check_region(SymmetricComplexMatrix::ones(4), {RegionKind::DiscHaf, 2, 0.5}).inside);
  CHECK(check_region(SymmetricComplexMatrix::ones(4), {RegionKind::StripHaf, 2, 0.2}).inside);
  for (auto kind : {RegionKind::DiscTensor, RegionKind::StripTensor, RegionKind::L1Tensor}) {
    CHECK(check_region(ComplexTensor::ones(3, 2), {kind, 3, 0.0}).inside);
  }
}

TEST_CASE("one entry 1.6 is outside the permanent disc at that index") {
  const auto r = check_region(with_entry(3, 1, 2, 1.6), {RegionKind::DiscPer, 2, 0.5});
  CHECK_FALSE(r.inside);
  CHECK(r.worst_index == std::vector<std::size_t>{1, 2});
  CHECK(r.worst_value == doctest::Approx(0.6));
  CHECK(r.margin == doctest::Approx(-0.1));
}

TEST_CASE("one zero entry in a 4x4 matrix is outside the l1 region") {
  const auto r = check_region(with_entry(4, 2, 0, 0.0), {RegionKind::L1Per, 2, alpha_constant() / 4.0});
  CHECK_FALSE(r.inside);
  CHECK(r.worst_value == doctest::Approx(1.0));
  CHECK(r.bound == doctest::Approx(alpha_constant()));
  REQUIRE(r.line_sums.size() == 8);
}

TEST_CASE("boundary points are inside") {
  CHECK(check_region(with_entry(2, 0, 0, 0.5), {RegionKind::DiscPer, 2, 0.5}).inside);
  CHECK(check_region(with_entry(2, 0, 0, Complex(1.5, 0.1)), {RegionKind::StripPer, 2, 0.5, 0.1}).inside);
}

TEST_CASE("region parameters are validated") {
  const auto j = ComplexMatrix::ones(2);
  CHECK(error_code([&] { check_region(j, {RegionKind::DiscHaf, 2, 0.1}); }) == ErrorCode::ShapeMismatch);
  CHECK(error_code([&] { check_region(j, {RegionKind::DiscTensor, 3, 0.1}); }) == ErrorCode::ShapeMismatch);
  CHECK(error_code([&] { check_region(ComplexTensor::ones(3, 2), {RegionKind::DiscTensor, 4, 0.1}); }) ==
        ErrorCode::ShapeMismatch);
  CHECK(error_code([&] { check_region(j, {RegionKind::DiscPer, 2, 0.6}); }) == ErrorCode::EtaTooLarge);
  CHECK(error_code([&] { check_region(j, {RegionKind::StripPer, 2, 1.0}); }) == ErrorCode::EtaTooLarge);
  CHECK(error_code([&] { check_region(j, {RegionKind::StripPer, 2, 0.5, 0.5}); }) == ErrorCode::EtaTooLarge);
  CHECK(error_code([&] { check_region(j, {RegionKind::DiscPer, 2, -0.1}); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("hafnian regions ignore the diagonal") {
  std::vector<Complex> e(16, Complex(1.0, 0.0));
  e[0] = Complex(9.0, 9.0);
  CHECK(check_region(SymmetricComplexMatrix(4, e), {RegionKind::DiscHaf, 2, 0.1}).inside);
}

TEST_CASE("the zero-permanent matrix with entries (1 +- i)/2 is outside the disc") {
  const Complex p(0.5, 0.5), q(0.5, -0.5);
  const ComplexMatrix a(2, {p, q, q, p});
  const auto r = check_region(a, {RegionKind::DiscPer, 2, 0.5});
  CHECK_FALSE(r.inside);
  CHECK(r.worst_value == doctest::Approx(std::sqrt(2.0) / 2.0));
  CHECK(std::abs(permanent_exact(a)) < 1e-14);
}

TEST_CASE("margin grows as a violating entry moves toward 1") {
  for (auto kind : {RegionKind::DiscPer, RegionKind::StripPer, RegionKind::L1Per}) {
    const RegionSpec spec{kind, 2, kind == RegionKind::L1Per ? 0.05 : 0.4};
    double previous = -INFINITY;
    for (int step = 0; step <= 20; ++step) {
      const double t = 1.0 - step / 20.0;  // 1 -> 0
      const auto r = check_region(with_entry(3, 0, 1, Complex(1.0 + 0.9 * t, 0.3 * t)), spec);
      CHECK(r.margin >= previous);
      previous = r.margin;
    }
  }
}

TEST_CASE("schur product examples and validation") {
  CHECK(schur_product({1.0, 1.0}, {1.0, 1.0}, 1) == Polynomial({1.0, 1.0}));
  std::mt19937_64 rng(41);
  for (std::size_t n = 1; n <= 8; ++n) {
    std::vector<Complex> f(n + 1), binom(n + 1);
    for (auto& z : f) z = oracle::uniform_complex(rng, -1.0, 1.0);
    for (std::size_t k = 0; k <= n; ++k) binom[k] = std::round(std::tgamma(n + 1.0) / std::tgamma(k + 1.0) / std::tgamma(n - k + 1.0));
    const auto h = schur_product(Polynomial(f), Polynomial(binom), n);
    for (std::size_t k = 0; k <= n; ++k) CHECK(std::abs(h.coefficient(k) - f[k]) < 1e-13);
  }
  CHECK(error_code([] { schur_product({1.0, 1.0, 1.0}, {1.0}, 1); }) == ErrorCode::DegreeExceedsN);
}

TEST_CASE("schur product multiplies zero-free radii") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + trial % 8;
    const double r1 = oracle::uniform_real(rng, 0.5, 2.0), r2 = oracle::uniform_real(rng, 0.5, 2.0);
    std::vector<Complex> roots_f(n), roots_g(n);
    for (auto& z : roots_f) z = std::polar(r1 * oracle::uniform_real(rng, 1.0, 3.0), oracle::uniform_real(rng, 0, 2 * M_PI));
    for (auto& z : roots_g) z = std::polar(r2 * oracle::uniform_real(rng, 1.0, 3.0), oracle::uniform_real(rng, 0, 2 * M_PI));
    const auto h = schur_product(Polynomial(oracle::from_roots(roots_f)), Polynomial(oracle::from_roots(roots_g)), n);
    const auto hr = oracle::roots({h.coefficients().begin(), h.coefficients().end()});
    CHECK(oracle::min_modulus(hr) > r1 * r2 + 1e-8);
  }
}

TEST_CASE("partial exponential sums have no roots in |z| <= alpha n") {
  CHECK(partial_exp_poly(1) == Polynomial({1.0, 1.0}));
  const auto p2 = partial_exp_poly(2);
  CHECK(p2.coefficient(2) == Complex(0.5, 0.0));
  const auto r2 = oracle::roots({p2.coefficients().begin(), p2.coefficients().end()});
  CHECK(oracle::min_modulus(r2) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto p = partial_exp_poly(n);
    const auto r = oracle::roots({p.coefficients().begin(), p.coefficients().end()});
    CHECK(oracle::min_modulus(r) > alpha_constant() * n + 1e-8);
  }
  CHECK(error_code([] { partial_exp_poly(0); }) == ErrorCode::InvalidArgument);
  CHECK(error_code([] { partial_exp_poly(171); }) == ErrorCode::SizeLimitExceeded);
}

TEST_CASE("sampled disc-region permanents stay away from zero") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 4;
    std::vector<Complex> e(n * n);
    for (auto& z : e) z = oracle::in_disc(rng, 1.0, 0.5);
    const ComplexMatrix a(n, e);
    REQUIRE(check_region(a, {RegionKind::DiscPer, 2, 0.5}).inside);
    CHECK(std::abs(permanent_exact(a)) > 1e-12 * oracle::factorial(n));
  }
}
