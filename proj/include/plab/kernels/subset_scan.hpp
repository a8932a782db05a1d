#pragma once

#include <cstdint>
#include <vector>

#include "plab/rational.hpp"

namespace plab::kernels {

// Minimise right(N(S)) / left(S) over nonempty S of the left vertices, where
// N(S) is the union of the targets of S. Weights are integers on a common
// scale; right weights may be zero. A subset is admitted only when
// left(S) * floor_den >= floor_num.
struct ScanInput {
  std::vector<BigInt> left;
  std::vector<BigInt> right;
  std::vector<std::vector<int>> targets;
  BigInt floor_num = 0;
  BigInt floor_den = 1;
};

struct ScanResult {
  bool found = false;
  BigInt num;           // right(N(S))
  BigInt den;           // left(S)
  std::uint64_t mask = 0;  // bit i set iff left vertex i is in S
};

inline constexpr int kMaxScanWidth = 62;

// Lexicographic order of the sorted index lists of two distinct masks.
inline bool mask_lex_less(std::uint64_t a, std::uint64_t b) {
  std::uint64_t diff = a ^ b;
  std::uint64_t low = diff & (~diff + 1);
  std::uint64_t above = ~((low << 1) - 1);
  if (a & low) return (b & above) != 0;
  return (a & above) == 0;
}

// Plain enumeration, recomputing every subset from scratch.
ScanResult scan_serial(const ScanInput& input);
// Gray-code enumeration split into chunks across OpenMP threads. Same result
// as scan_serial, including the lexicographically smallest minimiser.
ScanResult scan_parallel(const ScanInput& input);

}  // namespace plab::kernels
