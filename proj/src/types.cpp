#include "logperm/types.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace logperm {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NonzeroInnerConstant: return "NonzeroInnerConstant";
    case ErrorCode::DegreeExceedsN: return "DegreeExceedsN";
    case ErrorCode::EtaTooLarge: return "EtaTooLarge";
    case ErrorCode::RhoOutOfRange: return "RhoOutOfRange";
    case ErrorCode::BetaNotGreaterThanOne: return "BetaNotGreaterThanOne";
    case ErrorCode::ZeroBaseValue: return "ZeroBaseValue";
    case ErrorCode::RegionViolation: return "RegionViolation";
    case ErrorCode::InfeasibleParameters: return "InfeasibleParameters";
  }
  return "Unknown";
}

void require_finite(Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw Error(ErrorCode::NonFinite, "non-finite complex value");
  }
}

namespace {

void require_all_finite(std::span<const Complex> entries) {
  for (std::size_t k = 0; k < entries.size(); ++k) {
    if (!std::isfinite(entries[k].real()) || !std::isfinite(entries[k].imag())) {
      throw Error(ErrorCode::NonFinite, "entry #" + std::to_string(k + 1) + " is not finite");
    }
  }
}

bool all_real(std::span<const Complex> entries) {
  return std::all_of(entries.begin(), entries.end(), [](const Complex& z) { return z.imag() == 0.0; });
}

std::size_t checked_power(std::size_t base, std::size_t exponent) {
  std::size_t result = 1;
  for (std::size_t k = 0; k < exponent; ++k) {
    if (base != 0 && result > static_cast<std::size_t>(-1) / base) {
      throw Error(ErrorCode::SizeLimitExceeded, "tensor too large");
    }
    result *= base;
  }
  return result;
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t n, std::vector<Complex> entries)
    : n_(n), entries_(std::move(entries)) {
  if (n_ == 0) throw Error(ErrorCode::InvalidArgument, "matrix side must be positive");
  if (entries_.size() != n_ * n_) {
    throw Error(ErrorCode::ShapeMismatch, "expected " + std::to_string(n_ * n_) + " entries, got " +
                                              std::to_string(entries_.size()));
  }
  require_all_finite(entries_);
}

ComplexMatrix ComplexMatrix::ones(std::size_t n) {
  return ComplexMatrix(n, std::vector<Complex>(n * n, Complex(1.0, 0.0)));
}

bool ComplexMatrix::is_real() const noexcept { return all_real(entries_); }

SymmetricComplexMatrix::SymmetricComplexMatrix(std::size_t two_n, std::vector<Complex> entries)
    : two_n_(two_n), entries_(std::move(entries)) {
  if (two_n_ == 0 || two_n_ % 2 != 0) {
    throw Error(ErrorCode::InvalidArgument, "symmetric matrix side must be even and positive");
  }
  if (entries_.size() != two_n_ * two_n_) {
    throw Error(ErrorCode::ShapeMismatch, "expected " + std::to_string(two_n_ * two_n_) + " entries, got " +
                                              std::to_string(entries_.size()));
  }
  require_all_finite(entries_);
  for (std::size_t i = 0; i < two_n_; ++i) {
    for (std::size_t j = i + 1; j < two_n_; ++j) {
      if (entries_[i * two_n_ + j] != entries_[j * two_n_ + i]) {
        throw Error(ErrorCode::InvalidArgument, "matrix is not symmetric at (" + std::to_string(i + 1) + ", " +
                                                    std::to_string(j + 1) + ")");
      }
    }
  }
}

SymmetricComplexMatrix SymmetricComplexMatrix::ones(std::size_t two_n) {
  return SymmetricComplexMatrix(two_n, std::vector<Complex>(two_n * two_n, Complex(1.0, 0.0)));
}

SymmetricComplexMatrix SymmetricComplexMatrix::bipartite(const ComplexMatrix& a) {
  const std::size_t n = a.size();
  const std::size_t m = 2 * n;
  std::vector<Complex> entries(m * m, Complex(0.0, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      entries[i * m + (n + j)] = a(i, j);
      entries[(n + j) * m + i] = a(i, j);
    }
  }
  return SymmetricComplexMatrix(m, std::move(entries));
}

bool SymmetricComplexMatrix::is_real() const noexcept { return all_real(entries_); }

ComplexTensor::ComplexTensor(std::size_t d, std::size_t n, std::vector<Complex> entries)
    : d_(d), n_(n), entries_(std::move(entries)) {
  if (d_ < 2) throw Error(ErrorCode::InvalidArgument, "tensor dimension must be at least 2");
  if (n_ == 0) throw Error(ErrorCode::InvalidArgument, "tensor side must be positive");
  const std::size_t expected = checked_power(n_, d_);
  if (entries_.size() != expected) {
    throw Error(ErrorCode::ShapeMismatch, "expected " + std::to_string(expected) + " entries, got " +
                                              std::to_string(entries_.size()));
  }
  require_all_finite(entries_);
}

ComplexTensor ComplexTensor::ones(std::size_t d, std::size_t n) {
  return ComplexTensor(d, n, std::vector<Complex>(checked_power(n, d), Complex(1.0, 0.0)));
}

ComplexTensor ComplexTensor::from_matrix(const ComplexMatrix& a) {
  return ComplexTensor(2, a.size(), std::vector<Complex>(a.entries().begin(), a.entries().end()));
}

ComplexMatrix ComplexTensor::to_matrix() const {
  if (d_ != 2) throw Error(ErrorCode::ShapeMismatch, "only a 2-dimensional tensor converts to a matrix");
  return ComplexMatrix(n_, entries_);
}

std::size_t ComplexTensor::flat_index(std::span<const std::size_t> index) const {
  if (index.size() != d_) throw Error(ErrorCode::ShapeMismatch, "index has wrong arity");
  std::size_t flat = 0;
  for (std::size_t axis = 0; axis < d_; ++axis) {
    if (index[axis] >= n_) throw Error(ErrorCode::InvalidArgument, "tensor index out of range");
    flat = flat * n_ + index[axis];
  }
  return flat;
}

std::vector<std::size_t> ComplexTensor::multi_index(std::size_t flat) const {
  std::vector<std::size_t> index(d_);
  for (std::size_t axis = d_; axis-- > 0;) {
    index[axis] = flat % n_;
    flat /= n_;
  }
  return index;
}

const Complex& ComplexTensor::at(std::span<const std::size_t> index) const { return entries_[flat_index(index)]; }

bool ComplexTensor::is_real() const noexcept { return all_real(entries_); }

WeightedHypergraph::WeightedHypergraph(std::size_t d, std::size_t vertex_count, std::vector<HyperEdge> edges)
    : d_(d), vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (d_ < 2) throw Error(ErrorCode::InvalidArgument, "edge size must be at least 2");
  if (vertex_count_ == 0) throw Error(ErrorCode::InvalidArgument, "hypergraph needs at least one vertex");
  for (auto& edge : edges_) {
    if (edge.vertices.size() != d_) {
      throw Error(ErrorCode::InvalidArgument, "edge does not have exactly " + std::to_string(d_) + " vertices");
    }
    std::sort(edge.vertices.begin(), edge.vertices.end());
    if (std::adjacent_find(edge.vertices.begin(), edge.vertices.end()) != edge.vertices.end()) {
      throw Error(ErrorCode::InvalidArgument, "edge repeats a vertex");
    }
    if (edge.vertices.back() >= vertex_count_) {
      throw Error(ErrorCode::InvalidArgument, "edge vertex " + std::to_string(edge.vertices.back() + 1) +
                                                  " out of range");
    }
    require_finite(edge.weight);
  }
  std::sort(edges_.begin(), edges_.end(),
            [](const HyperEdge& a, const HyperEdge& b) { return a.vertices < b.vertices; });
  for (std::size_t k = 1; k < edges_.size(); ++k) {
    if (edges_[k].vertices == edges_[k - 1].vertices) {
      throw Error(ErrorCode::InvalidArgument, "duplicate edge");
    }
  }
}

WeightedHypergraph WeightedHypergraph::complete_partite(const ComplexTensor& z) {
  const std::size_t d = z.dimension();
  const std::size_t n = z.size();
  std::vector<HyperEdge> edges;
  edges.reserve(z.entries().size());
  for (std::size_t flat = 0; flat < z.entries().size(); ++flat) {
    auto index = z.multi_index(flat);
    HyperEdge edge;
    edge.vertices.resize(d);
    for (std::size_t axis = 0; axis < d; ++axis) edge.vertices[axis] = axis * n + index[axis];
    edge.weight = z.entries()[flat] - Complex(1.0, 0.0);
    edges.push_back(std::move(edge));
  }
  return WeightedHypergraph(d, d * n, std::move(edges));
}

}  // namespace logperm
