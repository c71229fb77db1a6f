#include "logperm/exact.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <string>

#include "logperm/summation.hpp"

namespace logperm {
namespace {

double factorial(std::size_t n) {
  double f = 1.0;
  for (std::size_t k = 2; k <= n; ++k) f *= static_cast<double>(k);
  return f;
}

}  // namespace

Complex permanent_exact(const ComplexMatrix& a, const Limits& limits) {
  const std::size_t n = a.size();
  if (n > limits.permanent_max_n) {
    throw Error(ErrorCode::SizeLimitExceeded, "permanent limited to n <= " + std::to_string(limits.permanent_max_n));
  }
  // per A = (-1)^n sum_{S nonempty} (-1)^{|S|} prod_i sum_{j in S} a_ij
  std::vector<Complex> row_sums(n, Complex(0.0, 0.0));
  std::vector<bool> in_set(n, false);
  std::size_t set_size = 0;
  CompensatedSum<Complex> total;
  const std::uint64_t subsets = std::uint64_t{1} << n;
  for (std::uint64_t k = 1; k < subsets; ++k) {
    const auto j = static_cast<std::size_t>(std::countr_zero(k));
    if (in_set[j]) {
      for (std::size_t i = 0; i < n; ++i) row_sums[i] -= a(i, j);
      --set_size;
    } else {
      for (std::size_t i = 0; i < n; ++i) row_sums[i] += a(i, j);
      ++set_size;
    }
    in_set[j] = !in_set[j];
    Complex product(1.0, 0.0);
    for (std::size_t i = 0; i < n; ++i) product *= row_sums[i];
    total.add((set_size % 2 == 0) ? product : -product);
  }
  return (n % 2 == 0) ? total.value() : -total.value();
}

Complex hafnian_exact(const SymmetricComplexMatrix& a, const Limits& limits) {
  const std::size_t m = a.size();
  if (m > limits.hafnian_max_two_n || m > 30) {
    throw Error(ErrorCode::SizeLimitExceeded, "hafnian limited to 2n <= " + std::to_string(limits.hafnian_max_two_n));
  }
  // memo[mask] = haf of the principal submatrix on the vertices in mask;
  // filled for even-popcount masks in increasing numeric order.
  const std::uint32_t full = (std::uint32_t{1} << m) - 1;
  std::vector<Complex> memo(std::size_t{full} + 1, Complex(0.0, 0.0));
  memo[0] = Complex(1.0, 0.0);
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    if (std::popcount(mask) % 2 != 0) continue;
    const auto first = static_cast<std::size_t>(std::countr_zero(mask));
    const std::uint32_t rest = mask & ~(std::uint32_t{1} << first);
    Complex acc(0.0, 0.0);
    for (std::uint32_t bits = rest; bits != 0; bits &= bits - 1) {
      const auto j = static_cast<std::size_t>(std::countr_zero(bits));
      acc += a(first, j) * memo[rest & ~(std::uint32_t{1} << j)];
    }
    memo[mask] = acc;
    if (mask == full) break;
  }
  return memo[full];
}

namespace {

struct TensorWalk {
  const ComplexTensor& a;
  std::size_t d;
  std::size_t n;
  std::vector<std::vector<bool>> used;  // used[axis][index], axes 1..d-1
  std::vector<std::size_t> index;
  CompensatedSum<Complex> total;

  // Row i is fixed on axis 0; choose the index on axis `axis` for row i.
  void choose(std::size_t row, std::size_t axis, std::size_t flat, Complex product) {
    if (axis == d) {
      const Complex next = product * a.entries()[flat];
      if (row + 1 == n) {
        total.add(next);
      } else {
        choose(row + 1, 1, row + 1, next);
      }
      return;
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (used[axis][j]) continue;
      used[axis][j] = true;
      choose(row, axis + 1, flat * n + j, product);
      used[axis][j] = false;
    }
  }
};

}  // namespace

Complex tensor_permanent_exact(const ComplexTensor& a, const Limits& limits) {
  const std::size_t d = a.dimension();
  const std::size_t n = a.size();
  const double count = std::pow(factorial(n), static_cast<double>(d - 1));
  if (!(count <= limits.tensor_enumeration)) {
    throw Error(ErrorCode::SizeLimitExceeded, "(n!)^(d-1) exceeds the enumeration limit");
  }
  TensorWalk walk{a, d, n, std::vector<std::vector<bool>>(d, std::vector<bool>(n, false)), {}, {}};
  walk.choose(0, 1, 0, Complex(1.0, 0.0));
  return walk.total.value();
}

namespace {

struct MatchingWalk {
  const std::vector<HyperEdge>& edges;
  std::vector<std::uint64_t> masks;
  std::vector<CompensatedSum<Complex>> sums;
  double visited = 0.0;
  double limit;

  void walk(std::size_t next, std::uint64_t used, Complex weight, std::size_t k) {
    if (next == edges.size()) {
      if (++visited > limit) throw Error(ErrorCode::SizeLimitExceeded, "too many matchings to enumerate");
      sums[k].add(weight);
      return;
    }
    if ((masks[next] & used) == 0) walk(next + 1, used | masks[next], weight * edges[next].weight, k + 1);
    walk(next + 1, used, weight, k);
  }
};

}  // namespace

MatchingPolynomialCoeffs matching_polynomial(const WeightedHypergraph& h, const Limits& limits) {
  if (h.vertex_count() > 64) throw Error(ErrorCode::SizeLimitExceeded, "matching enumeration supports <= 64 vertices");
  const std::size_t kmax = h.vertex_count() / h.edge_size();
  MatchingWalk walk{h.edges(), {}, std::vector<CompensatedSum<Complex>>(kmax + 1), 0.0, limits.matching_enumeration};
  for (const auto& e : h.edges()) {
    std::uint64_t mask = 0;
    for (auto v : e.vertices) mask |= std::uint64_t{1} << v;
    walk.masks.push_back(mask);
  }
  walk.walk(0, 0, Complex(1.0, 0.0), 0);
  MatchingPolynomialCoeffs out;
  for (const auto& s : walk.sums) out.weights.push_back(s.value());
  // Drop trailing sizes that no matching reaches, keeping W_0.
  while (out.weights.size() > 1 && out.weights.back() == Complex(0.0, 0.0)) out.weights.pop_back();
  out.weights[0] = Complex(1.0, 0.0);
  return out;
}

}  // namespace logperm
