#pragma once

#include <cstddef>
#include <vector>

#include "plab/kernels/subset_scan.hpp"
#include "plab/rational.hpp"

namespace plab {

// min over nonempty S of right(N(S)) / left(S), where each left vertex i has
// weight left[i] > 0 and neighbourhood targets[i] into the right side.
// Every magnification ratio in the library reduces to this problem.
struct RatioProblem {
  std::vector<Rational> left;
  std::vector<Rational> right;
  std::vector<std::vector<int>> targets;
};

struct RatioSolution {
  Rational value;
  std::vector<int> witness;  // sorted left indices; lexicographically smallest minimiser
  int iterations = 0;        // Dinkelbach rounds (mincut route only)
};

enum class Method { brute, mincut };

inline constexpr std::size_t kDefaultBruteLimit = 20;

// Integer rescaling of a problem by the common denominator of every weight.
// Only subsets with left(S) >= min_fraction * left(all) are admitted.
kernels::ScanInput scale_problem(const RatioProblem& p, const Rational& min_fraction = Rational(0));

// Exhaustive scan. Throws InputError when left.size() exceeds `limit`, or
// when no subset is admitted.
RatioSolution minimize_ratio_brute(const RatioProblem& p, const Rational& min_fraction = Rational(0),
                                   std::size_t limit = kDefaultBruteLimit, bool parallel = true);

// Dinkelbach iteration; each round minimises right(N(S)) - lambda*left(S)
// as a minimum s-t cut. Exact integer capacities throughout.
RatioSolution minimize_ratio_mincut(const RatioProblem& p);

// right(N(S)) / left(S) recomputed directly.
Rational ratio_of(const RatioProblem& p, const std::vector<int>& subset);

}  // namespace plab
