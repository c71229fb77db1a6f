#pragma once

#include <cstddef>

namespace logperm {

/// Size and work caps shared by the exact and approximate routines.
struct Limits {
  std::size_t permanent_max_n = 14;
  std::size_t hafnian_max_two_n = 16;
  double tensor_enumeration = 1e7;    // (n!)^(d-1) permutation tuples
  double matching_enumeration = 1e7;  // matchings visited
  double tuple_budget = 1e8;          // products in the derivative tuple sums
  std::size_t full_expansion_max_n = 10;
  std::size_t series_max_length = std::size_t{1} << 22;  // Taylor degree cap for composed series
  std::size_t phi_max_degree = std::size_t{1} << 27;
  unsigned workers = 1;               // tuple-sum worker threads; 1 = serial
};

}  // namespace logperm
