#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "logperm/exact.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace logperm;

TEST_CASE("permanent examples") {
  CHECK(std::abs(permanent_exact(ComplexMatrix::ones(3)) - 6.0) < 1e-12);
  CHECK(std::abs(permanent_exact(ComplexMatrix(2, {1.0, 2.0, 3.0, 4.0})) - 10.0) < 1e-12);
  const Complex p(0.5, 0.5), q(0.5, -0.5);
  CHECK(std::abs(permanent_exact(ComplexMatrix(2, {p, q, q, p}))) < 1e-15);
  CHECK(permanent_exact(ComplexMatrix(1, {Complex(2.0, 3.0)})) == Complex(2.0, 3.0));
}

TEST_CASE("permanent size limit") {
  Limits limits;
  limits.permanent_max_n = 3;
  CHECK(error_code([&] { permanent_exact(ComplexMatrix::ones(4), limits); }) == ErrorCode::SizeLimitExceeded);
}

TEST_CASE("Ryser agrees with the permutation sum for n <= 8") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 8;
    const auto a = oracle::random_matrix(rng, n, 0.0, 1.0, true);
    CHECK(oracle::relative_error(permanent_exact(a), oracle::naive_permanent(a)) < 1e-10);
  }
}

TEST_CASE("hafnian examples") {
  const Complex a(0.3, -2.0);
  CHECK(hafnian_exact(SymmetricComplexMatrix(2, {7.0, a, a, -1.0})) == a);
  CHECK(std::abs(hafnian_exact(SymmetricComplexMatrix::ones(4)) - 3.0) < 1e-12);
}

TEST_CASE("hafnian ignores the diagonal") {
  std::mt19937_64 rng(32);
  auto a = oracle::random_symmetric(rng, 6, -1.0, 1.0, true);
  std::vector<Complex> e(a.entries().begin(), a.entries().end());
  for (std::size_t i = 0; i < 6; ++i) e[i * 6 + i] = Complex(100.0, -50.0);
  CHECK(hafnian_exact(SymmetricComplexMatrix(6, e)) == hafnian_exact(a));
}

TEST_CASE("hafnian agrees with the matching enumerator for 2n <= 10") {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t two_n = 2 * (1 + trial % 5);
    const auto a = oracle::random_symmetric(rng, two_n, -1.0, 1.0, true);
    CHECK(oracle::relative_error(hafnian_exact(a), oracle::naive_hafnian(a)) < 1e-10);
  }
}

TEST_CASE("hafnian of the bipartite embedding is the permanent") {
  std::mt19937_64 rng(34);
  for (std::size_t n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      const auto a = oracle::random_matrix(rng, n, -1.0, 1.0, true);
      CHECK(oracle::relative_error(hafnian_exact(SymmetricComplexMatrix::bipartite(a)), permanent_exact(a)) < 1e-10);
    }
  }
}

TEST_CASE("hafnian is invariant under simultaneous permutation") {
  std::mt19937_64 rng(35);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t two_n = 2 * (1 + trial % 4);
    const auto a = oracle::random_symmetric(rng, two_n, -1.0, 1.0, true);
    std::vector<std::size_t> perm(two_n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Complex> e(two_n * two_n);
    for (std::size_t i = 0; i < two_n; ++i) {
      for (std::size_t j = 0; j < two_n; ++j) e[i * two_n + j] = a(perm[i], perm[j]);
    }
    CHECK(oracle::relative_error(hafnian_exact(SymmetricComplexMatrix(two_n, e)), hafnian_exact(a)) < 1e-10);
  }
}

TEST_CASE("hafnian size limit") {
  Limits limits;
  limits.hafnian_max_two_n = 4;
  CHECK(error_code([&] { hafnian_exact(SymmetricComplexMatrix::ones(6), limits); }) ==
        ErrorCode::SizeLimitExceeded);
}

TEST_CASE("tensor permanent examples") {
  CHECK(std::abs(tensor_permanent_exact(ComplexTensor::ones(3, 2)) - 4.0) < 1e-12);
  CHECK(std::abs(tensor_permanent_exact(ComplexTensor::from_matrix(ComplexMatrix(2, {1.0, 2.0, 3.0, 4.0}))) - 10.0) <
        1e-12);
  std::vector<Complex> e(8, Complex(1.0, 0.0));
  for (std::size_t k = 0; k < 4; ++k) e[k] = 0.0;  // i_1 = first index
  CHECK(tensor_permanent_exact(ComplexTensor(3, 2, e)) == Complex(0.0, 0.0));
}

TEST_CASE("tensor permanent with d = 2 equals the permanent for n <= 7") {
  std::mt19937_64 rng(36);
  for (std::size_t n = 1; n <= 7; ++n) {
    const auto a = oracle::random_matrix(rng, n, -1.0, 1.0, true);
    CHECK(oracle::relative_error(tensor_permanent_exact(ComplexTensor::from_matrix(a)), permanent_exact(a)) < 1e-10);
  }
}

TEST_CASE("tensor permanent of J is (n!)^(d-1)") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::size_t d = 2; d <= 4; ++d) {
      if (std::pow(oracle::factorial(n), d - 1.0) > 1e6) continue;
      CHECK(oracle::relative_error(tensor_permanent_exact(ComplexTensor::ones(d, n)),
                                   std::pow(oracle::factorial(n), d - 1.0)) < 1e-12);
    }
  }
  Limits limits;
  limits.tensor_enumeration = 10;
  CHECK(error_code([&] { tensor_permanent_exact(ComplexTensor::ones(3, 3), limits); }) ==
        ErrorCode::SizeLimitExceeded);
}

TEST_CASE("matching polynomial examples") {
  const Complex w(0.4, 0.1);
  const auto single = matching_polynomial(WeightedHypergraph(2, 2, {{{0, 1}, w}}));
  REQUIRE(single.weights.size() == 2);
  CHECK(single.weights[0] == Complex(1.0, 0.0));
  CHECK(single.weights[1] == w);

  // K_{2,2} on parts {0, 1} and {2, 3}.
  const auto k22 =
      matching_polynomial(WeightedHypergraph(2, 4, {{{0, 2}, 1.0}, {{0, 3}, 1.0}, {{1, 2}, 1.0}, {{1, 3}, 1.0}}));
  REQUIRE(k22.weights.size() == 3);
  CHECK(k22.weights[1] == Complex(4.0, 0.0));
  CHECK(k22.weights[2] == Complex(2.0, 0.0));
}

TEST_CASE("matching polynomial length is at most floor(V / d) + 1") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t v = 3 + trial % 6;
    std::vector<HyperEdge> edges;
    for (std::size_t i = 0; i < v; ++i) {
      for (std::size_t j = i + 1; j < v; ++j) {
        if (rng() % 2) edges.push_back({{i, j}, oracle::uniform_complex(rng, -1.0, 1.0)});
      }
    }
    const auto p = matching_polynomial(WeightedHypergraph(2, v, edges));
    CHECK(p.weights[0] == Complex(1.0, 0.0));
    CHECK(p.weights.size() <= v / 2 + 1);
  }
}

TEST_CASE("PER Z = sum ((n-k)!)^(d-1) W_k over the complete partite hypergraph") {
  std::mt19937_64 rng(38);
  for (std::size_t d : {2, 3}) {
    for (std::size_t n = 1; n <= 3; ++n) {
      for (int trial = 0; trial < 5; ++trial) {
        const auto z = oracle::random_tensor(rng, d, n, -1.0, 2.0, true);
        const auto w = matching_polynomial(WeightedHypergraph::complete_partite(z)).weights;
        Complex total(0.0, 0.0);
        for (std::size_t k = 0; k < w.size(); ++k) total += std::pow(oracle::factorial(n - k), d - 1.0) * w[k];
        CHECK(oracle::relative_error(total, tensor_permanent_exact(z)) < 1e-9);
      }
    }
  }
}
