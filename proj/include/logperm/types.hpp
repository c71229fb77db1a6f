#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "logperm/errors.hpp"

namespace logperm {

using Complex = std::complex<double>;

/// Throws NonFinite if either component is NaN or infinite.
void require_finite(Complex z);

// Indices are 0-based everywhere in the API. Error messages print them
// 1-based.

/// Dense n x n complex matrix, row-major.
class ComplexMatrix {
 public:
  ComplexMatrix(std::size_t n, std::vector<Complex> entries);

  static ComplexMatrix ones(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  std::span<const Complex> entries() const noexcept { return entries_; }
  bool is_real() const noexcept;

  bool operator==(const ComplexMatrix&) const = default;

 private:
  std::size_t n_;
  std::vector<Complex> entries_;
};

/// Symmetric 2n x 2n complex matrix. Symmetry is checked bit-exactly on
/// construction. The diagonal is stored but the hafnian never reads it.
class SymmetricComplexMatrix {
 public:
  SymmetricComplexMatrix(std::size_t two_n, std::vector<Complex> entries);

  static SymmetricComplexMatrix ones(std::size_t two_n);

  /// Builds [[0, A], [A^T, 0]].
  static SymmetricComplexMatrix bipartite(const ComplexMatrix& a);

  std::size_t size() const noexcept { return two_n_; }
  std::size_t half_size() const noexcept { return two_n_ / 2; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return entries_[i * two_n_ + j]; }
  std::span<const Complex> entries() const noexcept { return entries_; }
  bool is_real() const noexcept;

  bool operator==(const SymmetricComplexMatrix&) const = default;

 private:
  std::size_t two_n_;
  std::vector<Complex> entries_;
};

/// d-dimensional n x ... x n tensor. Entries are stored in lexicographic
/// order of (i_1, ..., i_d), so for d = 2 the layout is the row-major
/// matrix layout.
class ComplexTensor {
 public:
  ComplexTensor(std::size_t d, std::size_t n, std::vector<Complex> entries);

  static ComplexTensor ones(std::size_t d, std::size_t n);
  static ComplexTensor from_matrix(const ComplexMatrix& a);
  ComplexMatrix to_matrix() const;

  std::size_t dimension() const noexcept { return d_; }
  std::size_t size() const noexcept { return n_; }
  std::span<const Complex> entries() const noexcept { return entries_; }
  const Complex& at(std::span<const std::size_t> index) const;
  std::size_t flat_index(std::span<const std::size_t> index) const;
  std::vector<std::size_t> multi_index(std::size_t flat) const;
  bool is_real() const noexcept;

  bool operator==(const ComplexTensor&) const = default;

 private:
  std::size_t d_;
  std::size_t n_;
  std::vector<Complex> entries_;
};

struct HyperEdge {
  std::vector<std::size_t> vertices;  // sorted ascending
  Complex weight;
};

/// d-uniform hypergraph with complex edge weights. Edges are kept in
/// lexicographic order of their sorted vertex lists; duplicates are rejected.
class WeightedHypergraph {
 public:
  WeightedHypergraph(std::size_t d, std::size_t vertex_count, std::vector<HyperEdge> edges);

  /// Complete d-partite hypergraph with parts of size n; vertex (axis a,
  /// index i) is numbered a * n + i and edge (i_1..i_d) has weight
  /// z_{i_1..i_d} - 1.
  static WeightedHypergraph complete_partite(const ComplexTensor& z);

  std::size_t edge_size() const noexcept { return d_; }
  std::size_t vertex_count() const noexcept { return vertex_count_; }
  const std::vector<HyperEdge>& edges() const noexcept { return edges_; }

 private:
  std::size_t d_;
  std::size_t vertex_count_;
  std::vector<HyperEdge> edges_;
};

}  // namespace logperm
