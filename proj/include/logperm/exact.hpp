#pragma once

#include <vector>

#include "logperm/limits.hpp"
#include "logperm/polynomial.hpp"
#include "logperm/types.hpp"

namespace logperm {

/// Permanent by Ryser's inclusion-exclusion formula, visiting subsets in
/// binary-reflected Gray-code order with a compensated running sum.
/// O(n 2^n). Throws SizeLimitExceeded above limits.permanent_max_n.
Complex permanent_exact(const ComplexMatrix& a, const Limits& limits = {});

/// Hafnian via the first-row expansion haf A = sum_j a_{1j} haf A_j,
/// memoized over vertex subsets. Diagonal entries are never read.
Complex hafnian_exact(const SymmetricComplexMatrix& a, const Limits& limits = {});

/// Multidimensional permanent: sum over (d-1)-tuples of permutations.
Complex tensor_permanent_exact(const ComplexTensor& a, const Limits& limits = {});

/// W_k = total weight of k-edge matchings; weights[0] == 1.
struct MatchingPolynomialCoeffs {
  std::vector<Complex> weights;

  Polynomial as_polynomial() const { return Polynomial(weights); }
};

/// Enumerates all matchings by include/exclude branching on edges in
/// lexicographic order. Supports up to 64 vertices.
MatchingPolynomialCoeffs matching_polynomial(const WeightedHypergraph& h, const Limits& limits = {});

}  // namespace logperm
