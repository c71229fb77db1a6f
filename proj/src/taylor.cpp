#include "logperm/taylor.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <thread>

#include "logperm/series.hpp"
#include "logperm/summation.hpp"

namespace logperm {

double log_factorial(std::size_t n) {
  CompensatedSum<double> sum;
  for (std::size_t k = 2; k <= n; ++k) sum.add(std::log(static_cast<double>(k)));
  return sum.value();
}

std::string_view to_string(Pipeline p) {
  switch (p) {
    case Pipeline::Disc: return "disc";
    case Pipeline::Strip: return "strip";
    case Pipeline::L1: return "l1";
  }
  return "unknown";
}

namespace {

using Sums = std::vector<CompensatedSum<Complex>>;

// Runs run_branch(b, sums) for b = 0..branches-1. With several workers the
// branches are split into contiguous blocks, each block has its own sums,
// and the blocks are combined in worker order.
template <typename Branch>
std::vector<Complex> partitioned_sums(std::size_t branches, std::size_t kmax, unsigned workers, Branch run_branch) {
  std::vector<Complex> out(kmax + 1, Complex(0.0, 0.0));
  out[0] = Complex(1.0, 0.0);
  if (kmax == 0) return out;
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(branches)));
  std::vector<Sums> partial(workers, Sums(kmax + 1));
  auto block = [&](unsigned w) {
    const std::size_t begin = branches * w / workers;
    const std::size_t end = branches * (w + 1) / workers;
    for (std::size_t b = begin; b < end; ++b) run_branch(b, partial[w]);
  };
  if (workers == 1) {
    block(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(block, w);
    for (auto& t : threads) t.join();
  }
  for (std::size_t k = 1; k <= kmax; ++k) {
    if (workers == 1) {
      out[k] = partial[0][k].value();
    } else {
      CompensatedSum<Complex> total;
      for (unsigned w = 0; w < workers; ++w) total.add(partial[w][k].value());
      out[k] = total.value();
    }
  }
  return out;
}

// n! / (n - t)!
double falling(std::size_t n, std::size_t t) {
  double p = 1.0;
  for (std::size_t i = 0; i < t; ++i) p *= static_cast<double>(n - i);
  return p;
}

double binomial(std::size_t n, std::size_t k) {
  double c = 1.0;
  for (std::size_t i = 0; i < k; ++i) c = c * static_cast<double>(n - i) / static_cast<double>(i + 1);
  return c;
}

double double_factorial_odd(std::size_t t) {  // (2t - 1)!!
  double p = 1.0;
  for (std::size_t i = 1; i <= t; ++i) p *= static_cast<double>(2 * i - 1);
  return p;
}

void check_budget(double count, const Limits& limits) {
  if (!(count <= limits.tuple_budget)) {
    throw Error(ErrorCode::BudgetExceeded, "tuple sum needs " + std::to_string(count) + " products, budget is " +
                                               std::to_string(limits.tuple_budget));
  }
}

double permanent_tuple_count(std::size_t n, std::size_t kmax) {
  double total = 0.0;
  for (std::size_t t = 1; t <= kmax; ++t) total += falling(n, t) * falling(n, t);
  return total;
}

double hafnian_tuple_count(std::size_t n, std::size_t kmax) {
  double total = 0.0;
  for (std::size_t t = 1; t <= kmax; ++t) total += binomial(2 * n, 2 * t) * double_factorial_odd(t);
  return total;
}

double tensor_tuple_count(std::size_t d, std::size_t n, std::size_t kmax) {
  double total = 0.0;
  for (std::size_t t = 1; t <= kmax; ++t) total += std::pow(falling(n, t), static_cast<double>(d));
  return total;
}

// S_k = sum over ordered pairs of k-tuples of distinct rows / columns of
// prod (a_{i_t j_t} - 1), for k = 0..kmax.
std::vector<Complex> permanent_tuple_sums(const ComplexMatrix& a, std::size_t kmax, const Limits& limits) {
  const std::size_t n = a.size();
  check_budget(permanent_tuple_count(n, kmax), limits);
  std::vector<Complex> w(n * n);
  for (std::size_t k = 0; k < n * n; ++k) w[k] = a.entries()[k] - Complex(1.0, 0.0);

  return partitioned_sums(n * n, kmax, limits.workers, [&](std::size_t branch, Sums& sums) {
    std::vector<bool> row_used(n, false), col_used(n, false);
    auto descend = [&](auto&& self, std::size_t depth, Complex product) -> void {
      if (depth == kmax) return;
      for (std::size_t i = 0; i < n; ++i) {
        if (row_used[i]) continue;
        row_used[i] = true;
        for (std::size_t j = 0; j < n; ++j) {
          if (col_used[j]) continue;
          const Complex p = product * w[i * n + j];
          sums[depth + 1].add(p);
          col_used[j] = true;
          self(self, depth + 1, p);
          col_used[j] = false;
        }
        row_used[i] = false;
      }
    };
    const std::size_t i = branch / n, j = branch % n;
    const Complex p = w[branch];
    sums[1].add(p);
    row_used[i] = col_used[j] = true;
    descend(descend, 1, p);
  });
}

// S_k = sum over unordered sets of k disjoint pairs {i < j} of prod (a_ij - 1).
std::vector<Complex> hafnian_tuple_sums(const SymmetricComplexMatrix& a, std::size_t kmax, const Limits& limits) {
  const std::size_t m = a.size();
  check_budget(hafnian_tuple_count(m / 2, kmax), limits);
  struct Pair {
    std::size_t i, j;
    Complex w;
  };
  std::vector<Pair> pairs;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) pairs.push_back({i, j, a(i, j) - Complex(1.0, 0.0)});
  }

  return partitioned_sums(pairs.size(), kmax, limits.workers, [&](std::size_t branch, Sums& sums) {
    std::vector<bool> used(m, false);
    auto descend = [&](auto&& self, std::size_t last, std::size_t depth, Complex product) -> void {
      if (depth == kmax) return;
      for (std::size_t p = last + 1; p < pairs.size(); ++p) {
        if (used[pairs[p].i] || used[pairs[p].j]) continue;
        const Complex next = product * pairs[p].w;
        sums[depth + 1].add(next);
        used[pairs[p].i] = used[pairs[p].j] = true;
        self(self, p, depth + 1, next);
        used[pairs[p].i] = used[pairs[p].j] = false;
      }
    };
    const auto& first = pairs[branch];
    sums[1].add(first.w);
    used[first.i] = used[first.j] = true;
    descend(descend, branch, 1, first.w);
  });
}

// S_k = sum over d ordered k-tuples of distinct indices (one tuple per axis)
// of prod_t (a_{i_t1 ... i_td} - 1).
std::vector<Complex> tensor_tuple_sums(const ComplexTensor& a, std::size_t kmax, const Limits& limits) {
  const std::size_t d = a.dimension();
  const std::size_t n = a.size();
  check_budget(tensor_tuple_count(d, n, kmax), limits);
  std::vector<Complex> w(a.entries().size());
  for (std::size_t k = 0; k < w.size(); ++k) w[k] = a.entries()[k] - Complex(1.0, 0.0);

  return partitioned_sums(w.size(), kmax, limits.workers, [&](std::size_t branch, Sums& sums) {
    std::vector<std::vector<bool>> used(d, std::vector<bool>(n, false));
    // Picks the index on `axis` for the (depth+1)-th entry, then recurses.
    auto pick = [&](auto&& self, std::size_t depth, std::size_t axis, std::size_t flat, Complex product) -> void {
      if (axis == d) {
        const Complex next = product * w[flat];
        sums[depth + 1].add(next);
        self(self, depth + 1, 0, 0, next);
        return;
      }
      if (axis == 0 && depth == kmax) return;
      for (std::size_t i = 0; i < n; ++i) {
        if (used[axis][i]) continue;
        used[axis][i] = true;
        self(self, depth, axis + 1, flat * n + i, product);
        used[axis][i] = false;
      }
    };
    auto index = a.multi_index(branch);
    for (std::size_t axis = 0; axis < d; ++axis) used[axis][index[axis]] = true;
    sums[1].add(w[branch]);
    pick(pick, 1, 0, 0, w[branch]);
  });
}

// log of the factor F_k with g^(k)(0) = F_k S_k.
double permanent_log_factor(std::size_t n, std::size_t k) { return log_factorial(n - k); }

double hafnian_log_factor(std::size_t n, std::size_t k) {
  return log_factorial(k) + log_factorial(2 * n - 2 * k) - static_cast<double>(n - k) * std::numbers::ln2 -
         log_factorial(n - k);
}

double tensor_log_factor(std::size_t d, std::size_t n, std::size_t k) {
  return static_cast<double>(d - 1) * log_factorial(n - k);
}

template <typename LogFactor>
std::vector<Complex> to_derivatives(const std::vector<Complex>& sums, LogFactor log_factor) {
  std::vector<Complex> out(sums.size());
  for (std::size_t k = 0; k < sums.size(); ++k) out[k] = sums[k] * std::exp(log_factor(k));
  return out;
}

void require_order(std::size_t m, std::size_t n) {
  if (m > n) {
    throw Error(ErrorCode::InvalidArgument, "derivative order " + std::to_string(m) + " exceeds deg g = " +
                                                std::to_string(n));
  }
}

}  // namespace

std::vector<Complex> g_derivatives_permanent(const ComplexMatrix& a, std::size_t m, const Limits& limits) {
  const std::size_t n = a.size();
  require_order(m, n);
  return to_derivatives(permanent_tuple_sums(a, m, limits), [n](std::size_t k) { return permanent_log_factor(n, k); });
}

std::vector<Complex> g_derivatives_hafnian(const SymmetricComplexMatrix& a, std::size_t m, const Limits& limits) {
  const std::size_t n = a.half_size();
  require_order(m, n);
  return to_derivatives(hafnian_tuple_sums(a, m, limits), [n](std::size_t k) { return hafnian_log_factor(n, k); });
}

std::vector<Complex> g_derivatives_tensor(const ComplexTensor& a, std::size_t m, const Limits& limits) {
  const std::size_t n = a.size();
  const std::size_t d = a.dimension();
  require_order(m, n);
  return to_derivatives(tensor_tuple_sums(a, m, limits),
                        [n, d](std::size_t k) { return tensor_log_factor(d, n, k); });
}

namespace {

// Accumulates prod of (1 + z w) factors along a depth-first walk and adds
// the finished degree-n polynomial at every leaf.
struct Expansion {
  std::size_t n;
  std::vector<std::vector<Complex>> prefix;  // prefix[t] has degree t
  std::vector<CompensatedSum<Complex>> total;

  explicit Expansion(std::size_t n_) : n(n_), prefix(n_ + 1), total(n_ + 1) {
    for (std::size_t t = 0; t <= n; ++t) prefix[t].assign(t + 1, Complex(0.0, 0.0));
    prefix[0][0] = Complex(1.0, 0.0);
  }

  // prefix[t + 1] = prefix[t] * (1 + z w)
  void extend(std::size_t t, Complex w) {
    auto& next = prefix[t + 1];
    const auto& cur = prefix[t];
    next[0] = cur[0];
    for (std::size_t k = 1; k <= t; ++k) next[k] = cur[k] + w * cur[k - 1];
    next[t + 1] = w * cur[t];
  }

  void finish() {
    for (std::size_t k = 0; k <= n; ++k) total[k].add(prefix[n][k]);
  }

  Polynomial result() const {
    std::vector<Complex> c(n + 1);
    for (std::size_t k = 0; k <= n; ++k) c[k] = total[k].value();
    return Polynomial(std::move(c));
  }
};

void require_expansion_size(std::size_t n, const Limits& limits) {
  if (n > limits.full_expansion_max_n) {
    throw Error(ErrorCode::SizeLimitExceeded, "full expansion limited to n <= " +
                                                  std::to_string(limits.full_expansion_max_n));
  }
}

}  // namespace

Polynomial g_full_expansion_permanent(const ComplexMatrix& a, const Limits& limits) {
  const std::size_t n = a.size();
  require_expansion_size(n, limits);
  Expansion ex(n);
  std::vector<bool> used(n, false);
  auto row = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      ex.finish();
      return;
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j]) continue;
      used[j] = true;
      ex.extend(i, a(i, j) - Complex(1.0, 0.0));
      self(self, i + 1);
      used[j] = false;
    }
  };
  row(row, 0);
  return ex.result();
}

Polynomial g_full_expansion_hafnian(const SymmetricComplexMatrix& a, const Limits& limits) {
  const std::size_t n = a.half_size();
  require_expansion_size(n, limits);
  const std::size_t m = a.size();
  Expansion ex(n);
  std::vector<bool> used(m, false);
  auto pair_next = [&](auto&& self, std::size_t t) -> void {
    if (t == n) {
      ex.finish();
      return;
    }
    std::size_t first = 0;
    while (used[first]) ++first;
    used[first] = true;
    for (std::size_t j = first + 1; j < m; ++j) {
      if (used[j]) continue;
      used[j] = true;
      ex.extend(t, a(first, j) - Complex(1.0, 0.0));
      self(self, t + 1);
      used[j] = false;
    }
    used[first] = false;
  };
  pair_next(pair_next, 0);
  return ex.result();
}

Polynomial g_full_expansion_tensor(const ComplexTensor& a, const Limits& limits) {
  const std::size_t n = a.size();
  const std::size_t d = a.dimension();
  require_expansion_size(n, limits);
  double count = 1.0;
  for (std::size_t k = 2; k <= n; ++k) count *= static_cast<double>(k);
  if (!(std::pow(count, static_cast<double>(d - 1)) <= limits.tensor_enumeration)) {
    throw Error(ErrorCode::SizeLimitExceeded, "(n!)^(d-1) exceeds the enumeration limit");
  }
  Expansion ex(n);
  std::vector<std::vector<bool>> used(d, std::vector<bool>(n, false));
  auto pick = [&](auto&& self, std::size_t row, std::size_t axis, std::size_t flat) -> void {
    if (axis == d) {
      ex.extend(row, a.entries()[flat] - Complex(1.0, 0.0));
      if (row + 1 == n) {
        ex.finish();
      } else {
        self(self, row + 1, 1, row + 1);
      }
      return;
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (used[axis][j]) continue;
      used[axis][j] = true;
      self(self, row, axis + 1, flat * n + j);
      used[axis][j] = false;
    }
  };
  pick(pick, 0, 1, 0);
  return ex.result();
}

std::vector<Complex> log_derivatives(std::span<const Complex> g_derivs) {
  if (g_derivs.empty() || g_derivs[0] == Complex(0.0, 0.0)) {
    throw Error(ErrorCode::ZeroBaseValue, "g(0) must be nonzero");
  }
  const std::size_t m = g_derivs.size() - 1;
  // f[k] holds f^(k)(0); f[0] is unused.
  std::vector<Complex> f(m + 1, Complex(0.0, 0.0));
  std::vector<double> binom{1.0};  // row k-1 of Pascal's triangle
  for (std::size_t k = 1; k <= m; ++k) {
    if (k > 1) {
      std::vector<double> next(k, 1.0);
      for (std::size_t j = 1; j + 1 < k; ++j) next[j] = binom[j - 1] + binom[j];
      binom = std::move(next);
    }
    Complex acc = g_derivs[k];
    for (std::size_t j = 1; j < k; ++j) acc -= binom[j] * g_derivs[j] * f[k - j];
    f[k] = acc / g_derivs[0];
  }
  return std::vector<Complex>(f.begin() + 1, f.end());
}

double taylor_error_bound(double deg_g, double beta, std::size_t m) {
  if (!(beta > 1.0)) throw Error(ErrorCode::BetaNotGreaterThanOne, "beta must exceed 1");
  return deg_g / ((static_cast<double>(m) + 1.0) * std::pow(beta, static_cast<double>(m)) * (beta - 1.0));
}

std::size_t choose_degree(double deg_g, double beta, double epsilon) {
  if (!(epsilon > 0.0)) throw Error(ErrorCode::InvalidArgument, "epsilon must be positive");
  std::size_t m = 0;
  while (taylor_error_bound(deg_g, beta, m) > epsilon) ++m;
  return m;
}

StripParameters choose_strip_parameters(double scale, int d) {
  if (!(scale > 0.0)) throw Error(ErrorCode::InfeasibleParameters, "strip scale must be positive");
  const double limit = eta_d_strip(d);
  if (!(scale < limit)) {
    throw Error(ErrorCode::InfeasibleParameters, "no zero-free strip: scale " + std::to_string(scale) +
                                                     " is not below " + std::to_string(limit));
  }
  const double quarter = std::numbers::pi / (4.0 * (d - 1));
  auto tau = [quarter](double eta) { return (1.0 - eta) * std::sin(quarter - std::atan(eta)); };
  // xi - tau((1 + xi) scale) / scale is increasing in xi, negative at 0 and
  // positive where (1 + xi) scale reaches the limit.
  double lo = 0.0;
  double hi = limit / scale - 1.0;
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    (mid - tau((1.0 + mid) * scale) / scale < 0.0 ? lo = mid : hi = mid);
  }
  StripParameters p;
  p.xi = lo;
  p.eta_prime = (1.0 + p.xi) * scale;
  p.zeta = 0.99 * tau(p.eta_prime) / scale;
  p.tau_prime = p.zeta * scale;
  p.rho = std::min({p.xi, p.zeta, 2.0}) / 2.0;
  if (!(p.rho > 0.0) || !(p.eta_prime < limit)) {
    throw Error(ErrorCode::InfeasibleParameters, "could not place a strip for scale " + std::to_string(scale));
  }
  return p;
}

namespace {

struct Coefficients {
  std::vector<Complex> normalized;  // c_k / c_0
  double log_g0 = 0.0;
  std::string path;
};

template <typename Input>
struct Traits;

template <>
struct Traits<ComplexMatrix> {
  static std::size_t degree(const ComplexMatrix& a) { return a.size(); }
  static int dimension(const ComplexMatrix&) { return 2; }
  static double log_g0(const ComplexMatrix& a) { return permanent_log_factor(a.size(), 0); }
  static std::vector<Complex> sums(const ComplexMatrix& a, std::size_t k, const Limits& l) {
    return permanent_tuple_sums(a, k, l);
  }
  static double log_factor(const ComplexMatrix& a, std::size_t k) { return permanent_log_factor(a.size(), k); }
  static Polynomial full(const ComplexMatrix& a, const Limits& l) { return g_full_expansion_permanent(a, l); }
  static RegionKind disc() { return RegionKind::DiscPer; }
  static RegionKind l1() { return RegionKind::L1Per; }
  static bool off_diagonal_only() { return false; }
};

template <>
struct Traits<SymmetricComplexMatrix> {
  static std::size_t degree(const SymmetricComplexMatrix& a) { return a.half_size(); }
  static int dimension(const SymmetricComplexMatrix&) { return 2; }
  static double log_g0(const SymmetricComplexMatrix& a) { return hafnian_log_factor(a.half_size(), 0); }
  static std::vector<Complex> sums(const SymmetricComplexMatrix& a, std::size_t k, const Limits& l) {
    return hafnian_tuple_sums(a, k, l);
  }
  static double log_factor(const SymmetricComplexMatrix& a, std::size_t k) {
    return hafnian_log_factor(a.half_size(), k);
  }
  static Polynomial full(const SymmetricComplexMatrix& a, const Limits& l) { return g_full_expansion_hafnian(a, l); }
  static RegionKind disc() { return RegionKind::DiscHaf; }
  static RegionKind l1() { throw Error(ErrorCode::ShapeMismatch, "no l1 region for hafnians"); }
  static bool off_diagonal_only() { return true; }
};

template <>
struct Traits<ComplexTensor> {
  static std::size_t degree(const ComplexTensor& a) { return a.size(); }
  static int dimension(const ComplexTensor& a) { return static_cast<int>(a.dimension()); }
  static double log_g0(const ComplexTensor& a) { return tensor_log_factor(a.dimension(), a.size(), 0); }
  static std::vector<Complex> sums(const ComplexTensor& a, std::size_t k, const Limits& l) {
    return tensor_tuple_sums(a, k, l);
  }
  static double log_factor(const ComplexTensor& a, std::size_t k) {
    return tensor_log_factor(a.dimension(), a.size(), k);
  }
  static Polynomial full(const ComplexTensor& a, const Limits& l) { return g_full_expansion_tensor(a, l); }
  static RegionKind disc() { return RegionKind::DiscTensor; }
  static RegionKind l1() { return RegionKind::L1Tensor; }
  static bool off_diagonal_only() { return false; }
};

// c_k / c_0 for k = 0..min(kmax, deg g); tuple sums when they fit the
// budget, otherwise the full expansion.
template <typename Input>
Coefficients normalized_coefficients(const Input& a, std::size_t kmax, const Limits& limits) {
  using T = Traits<Input>;
  Coefficients out;
  const std::size_t n = T::degree(a);
  kmax = std::min(kmax, n);
  out.log_g0 = T::log_g0(a);
  try {
    const auto sums = T::sums(a, kmax, limits);
    out.normalized.resize(kmax + 1);
    for (std::size_t k = 0; k <= kmax; ++k) {
      // c_k = g^(k)(0) / k!
      const double scale = T::log_factor(a, k) - out.log_g0 - log_factorial(k);
      out.normalized[k] = sums[k] * std::exp(scale);
    }
    out.path = "tuple-sum";
  } catch (const Error& e) {
    if (e.code() != ErrorCode::BudgetExceeded) throw;
    Polynomial g;
    try {
      g = T::full(a, limits);
    } catch (const Error& inner) {
      if (inner.code() != ErrorCode::SizeLimitExceeded) throw;
      throw Error(ErrorCode::BudgetExceeded, std::string(e.what()) + "; full expansion unavailable: " + inner.what());
    }
    out.normalized.resize(kmax + 1);
    for (std::size_t k = 0; k <= kmax; ++k) out.normalized[k] = g.coefficient(k) / g.coefficient(0);
    out.path = "full-expansion";
  }
  return out;
}

Complex taylor_sum(double log_g0, std::span<const Complex> log_coeffs) {
  CompensatedSum<Complex> sum;
  sum.add(Complex(log_g0, 0.0));
  for (std::size_t k = 1; k < log_coeffs.size(); ++k) sum.add(log_coeffs[k]);
  return sum.value();
}

void require_epsilon(double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw Error(ErrorCode::InvalidArgument, "epsilon must lie in (0, 1)");
}

template <typename Input>
ApproxReport disc_pipeline(const Input& a, double eta, double epsilon, const ApproxOptions& options) {
  using T = Traits<Input>;
  const auto start = std::chrono::steady_clock::now();
  require_epsilon(epsilon);
  const RegionKind kind = options.l1_region ? T::l1() : T::disc();
  const int d = T::dimension(a);
  const double eta_max = region_max_eta(kind, d);
  if (!(eta >= 0.0) || !(eta < eta_max)) {
    throw Error(ErrorCode::EtaTooLarge, "eta must lie in [0, " + std::to_string(eta_max) + ") for " +
                                            std::string(to_string(kind)));
  }
  if (!options.force) {
    auto membership = check_region(a, RegionSpec{kind, d, eta, std::nullopt});
    if (!membership.inside) {
      throw RegionViolationError("input is outside the " + std::string(to_string(kind)) + " region", membership);
    }
  }

  ApproxReport report;
  report.pipeline = options.l1_region ? Pipeline::L1 : Pipeline::Disc;
  const std::size_t n = T::degree(a);
  report.deg_g = static_cast<double>(n);
  report.beta_used = eta > 0.0 ? eta_max / eta : INFINITY;
  std::size_t m = 0;
  if (options.degree) {
    m = *options.degree;
  } else if (eta > 0.0) {
    m = choose_degree(report.deg_g, report.beta_used, epsilon);
  }
  const auto coeffs = normalized_coefficients(a, m, options.limits);
  const auto log_coeffs = series_log(coeffs.normalized, m);
  report.log_value = taylor_sum(coeffs.log_g0, log_coeffs);
  report.log_g0 = coeffs.log_g0;
  report.g0 = std::exp(coeffs.log_g0);
  report.degree_used = m;
  report.derivative_path = coeffs.path;
  if (!options.force) {
    report.error_bound = eta > 0.0 ? taylor_error_bound(report.deg_g, report.beta_used, m) : 0.0;
  }
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

// Strip inputs must be real and lie in [lo, hi] entrywise.
template <typename Input>
MembershipReport check_interval(const Input& a, double lo, double hi, std::size_t side) {
  MembershipReport report;
  report.margin = INFINITY;
  report.bound = hi;
  const auto entries = a.entries();
  for (std::size_t k = 0; k < entries.size(); ++k) {
    if (Traits<Input>::off_diagonal_only() && k / side == k % side) continue;
    const double re = entries[k].real();
    const double slack = std::min({re - lo, hi - re, -std::abs(entries[k].imag())});
    if (slack < report.margin) {
      report.margin = slack;
      report.worst_value = entries[k].imag() != 0.0 ? std::abs(entries[k].imag()) : re;
      report.bound = entries[k].imag() != 0.0 ? 0.0 : (re - lo < hi - re ? lo : hi);
      if constexpr (std::is_same_v<Input, ComplexTensor>) {
        report.worst_index = a.multi_index(k);
      } else {
        report.worst_index = {k / side, k % side};
      }
    }
  }
  // A real entry sitting exactly on [lo, hi] has slack min(.., -0) = 0.
  report.inside = report.margin >= 0.0;
  return report;
}

template <typename Input>
ApproxReport strip_pipeline(const Input& a, double lo, double hi, double scale, double epsilon,
                            const ApproxOptions& options) {
  using T = Traits<Input>;
  const auto start = std::chrono::steady_clock::now();
  require_epsilon(epsilon);
  if (!options.force) {
    const std::size_t side = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(a.entries().size()))));
    auto membership = check_interval(a, lo, hi, side);
    if (!membership.inside) {
      throw RegionViolationError("entries must be real and lie in [" + std::to_string(lo) + ", " +
                                     std::to_string(hi) + "]",
                                 membership);
    }
  }

  ApproxReport report;
  report.pipeline = Pipeline::Strip;
  const std::size_t n = T::degree(a);
  const int d = T::dimension(a);

  if (scale == 0.0) {
    // Only J itself is admissible; g is constant.
    const auto coeffs = normalized_coefficients(a, 0, options.limits);
    report.log_value = Complex(coeffs.log_g0, 0.0);
    report.log_g0 = coeffs.log_g0;
    report.g0 = std::exp(coeffs.log_g0);
    report.deg_g = static_cast<double>(n);
    report.beta_used = INFINITY;
    report.derivative_path = "none";
    if (!options.force) report.error_bound = 0.0;
    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
  }

  const auto params = choose_strip_parameters(scale, d);
  const auto constants = phi_constants(params.rho);
  report.strip = params;
  report.phi_degree = constants.degree;
  report.beta_used = constants.beta;
  report.deg_g = static_cast<double>(constants.degree) * static_cast<double>(n);

  const std::size_t cap = options.limits.series_max_length;
  std::size_t m = 0;
  if (options.degree) {
    m = *options.degree;
  } else {
    if (taylor_error_bound(report.deg_g, report.beta_used, cap - 1) > epsilon) {
      throw Error(ErrorCode::BudgetExceeded, "certified degree exceeds the series length limit " +
                                                 std::to_string(cap) + " (rho = " + std::to_string(params.rho) +
                                                 ", N = " + std::to_string(constants.degree) + ")");
    }
    m = choose_degree(report.deg_g, report.beta_used, epsilon);
  }
  if (m + 1 > cap) {
    throw Error(ErrorCode::BudgetExceeded, "degree " + std::to_string(m) + " exceeds the series length limit");
  }

  const auto phi = build_phi(params.rho, options.limits);
  const auto r = normalized_coefficients(a, m, options.limits);
  const auto g = poly_compose_truncated(Polynomial(r.normalized), phi.truncated(m), m);
  const auto log_coeffs = series_log(g.coefficients(), m);
  report.log_value = taylor_sum(r.log_g0, log_coeffs);
  report.log_g0 = r.log_g0;
  report.g0 = std::exp(r.log_g0);
  report.degree_used = m;
  report.derivative_path = r.path;
  if (!options.force) report.error_bound = taylor_error_bound(report.deg_g, report.beta_used, m);
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

void require_delta(double delta) {
  if (!(delta > 0.0 && delta <= 1.0)) throw Error(ErrorCode::InvalidArgument, "delta must lie in (0, 1]");
}

}  // namespace

ApproxReport approx_log_disc(const ComplexMatrix& a, double eta, double epsilon, const ApproxOptions& options) {
  return disc_pipeline(a, eta, epsilon, options);
}

ApproxReport approx_log_disc(const SymmetricComplexMatrix& a, double eta, double epsilon,
                             const ApproxOptions& options) {
  return disc_pipeline(a, eta, epsilon, options);
}

ApproxReport approx_log_disc(const ComplexTensor& a, double eta, double epsilon, const ApproxOptions& options) {
  return disc_pipeline(a, eta, epsilon, options);
}

ApproxReport approx_log_strip(const ComplexMatrix& a, double delta, double epsilon, const ApproxOptions& options) {
  require_delta(delta);
  return strip_pipeline(a, delta, 1.0, 1.0 - delta, epsilon, options);
}

ApproxReport approx_log_strip(const SymmetricComplexMatrix& a, double delta, double epsilon,
                              const ApproxOptions& options) {
  require_delta(delta);
  return strip_pipeline(a, delta, 1.0, 1.0 - delta, epsilon, options);
}

ApproxReport approx_log_strip(const ComplexTensor& a, double eta, double epsilon, const ApproxOptions& options) {
  const double limit = eta_d_strip(static_cast<int>(a.dimension()));
  if (!(eta >= 0.0 && eta < limit)) {
    throw Error(ErrorCode::EtaTooLarge, "eta must lie in [0, " + std::to_string(limit) + ")");
  }
  return strip_pipeline(a, 1.0 - eta, 1.0 + eta, eta, epsilon, options);
}

}  // namespace logperm
