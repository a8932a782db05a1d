#include <omp.h>

#include <algorithm>

#include "doctest.h"
#include "plab/generate.hpp"
#include "plab/kernels/subset_scan.hpp"
#include "plab/kernels/window_scan.hpp"
#include "plab/ratio.hpp"
#include "support.hpp"

using namespace plab;
using namespace plab::kernels;
using plab::test::for_each_subset;
using plab::test::q;

namespace {

struct ThreadGuard {
  int saved = omp_get_max_threads();
  explicit ThreadGuard(int n) { omp_set_num_threads(n); }
  ~ThreadGuard() { omp_set_num_threads(saved); }
};

ScanInput random_scan(Rng& rng, int width, long long max_weight) {
  ScanInput in;
  int right = static_cast<int>(rng.uniform(1, 2 * width));
  for (int i = 0; i < width; ++i) {
    in.left.push_back(BigInt(rng.uniform(1, max_weight)));
    std::vector<int> t;
    for (int r = 0; r < right; ++r)
      if (rng.chance(1, 3)) t.push_back(r);
    in.targets.push_back(t);
  }
  for (int r = 0; r < right; ++r) in.right.push_back(BigInt(rng.uniform(0, max_weight)));
  return in;
}

// Minimum ratio and lexicographically smallest minimiser over explicit index lists.
std::pair<Rational, std::vector<int>> scan_oracle(const ScanInput& in) {
  bool found = false;
  Rational best;
  std::vector<int> arg;
  for_each_subset(static_cast<int>(in.left.size()), [&](const std::vector<int>& s) {
    BigInt l = 0, r = 0;
    std::vector<bool> hit(in.right.size(), false);
    for (int i : s) {
      l += in.left[i];
      for (int t : in.targets[i]) hit[t] = true;
    }
    for (std::size_t t = 0; t < hit.size(); ++t)
      if (hit[t]) r += in.right[t];
    if (l * in.floor_den < in.floor_num) return;
    Rational v(r, l);
    if (!found || v < best || (v == best && s < arg)) {
      found = true;
      best = v;
      arg = s;
    }
  });
  return {best, arg};
}

std::vector<int> mask_list(std::uint64_t m) {
  std::vector<int> s;
  for (int i = 0; i < 64; ++i)
    if (m >> i & 1) s.push_back(i);
  return s;
}

}  // namespace

TEST_CASE("mask_lex_less matches list comparison") {
  Rng rng(41);
  for (int i = 0; i < 2000; ++i) {
    std::uint64_t a = rng.next() & 0xFFF, b = rng.next() & 0xFFF;
    if (a == b || !a || !b) continue;
    CHECK(mask_lex_less(a, b) == (mask_list(a) < mask_list(b)));
  }
}

TEST_CASE("subset scan: serial, parallel and oracle agree") {
  ThreadGuard threads(4);
  for (int seed = 0; seed < 120; ++seed) {
    Rng rng(42, seed);
    int width = static_cast<int>(rng.uniform(1, 11));
    // Alternate small weights (narrow path) with huge ones (big-integer path).
    long long max_w = seed % 2 ? 9 : (1LL << 61);
    auto in = random_scan(rng, width, max_w);
    if (seed % 3 == 0) {
      BigInt total = 0;
      for (const auto& l : in.left) total += l;
      in.floor_num = total;
      in.floor_den = 2;
    }
    auto s = scan_serial(in);
    auto p = scan_parallel(in);
    auto [value, arg] = scan_oracle(in);
    REQUIRE(s.found);
    REQUIRE(p.found);
    CHECK(Rational(s.num, s.den) == value);
    CHECK(Rational(p.num, p.den) == value);
    CHECK(mask_list(s.mask) == arg);
    CHECK(p.mask == s.mask);
  }
}

TEST_CASE("subset scan at chunking width") {
  ThreadGuard threads(4);
  Rng rng(43);
  auto in = random_scan(rng, 16, 20);
  auto s = scan_serial(in), p = scan_parallel(in);
  CHECK(s.mask == p.mask);
  CHECK(s.num * p.den == p.num * s.den);
}

TEST_CASE("ratio brute force and mincut agree on random problems") {
  for (int seed = 0; seed < 150; ++seed) {
    Rng rng(44, seed);
    RatioProblem p;
    int n = static_cast<int>(rng.uniform(1, 10)), m = static_cast<int>(rng.uniform(1, 12));
    for (int i = 0; i < n; ++i) {
      p.left.push_back(q(rng.uniform(1, 5), rng.uniform(1, 4)));
      std::vector<int> t;
      for (int r = 0; r < m; ++r)
        if (rng.chance(1, 3)) t.push_back(r);
      p.targets.push_back(t);
    }
    for (int r = 0; r < m; ++r) p.right.push_back(q(rng.uniform(0, 5), rng.uniform(1, 4)));
    auto b = minimize_ratio_brute(p);
    auto c = minimize_ratio_mincut(p);
    CHECK(b.value == c.value);
    CHECK(b.witness == c.witness);
    CHECK(ratio_of(p, b.witness) == b.value);
  }
}

TEST_CASE("window scan: direct count and summed-area table agree") {
  ThreadGuard threads(4);
  for (int seed = 0; seed < 60; ++seed) {
    Rng rng(45, seed);
    WindowGrid g;
    g.dim = static_cast<int>(rng.uniform(1, 3));
    g.side = rng.uniform(1, g.dim == 3 ? 7 : 15);
    long long cells = 1;
    for (int i = 0; i < g.dim; ++i) cells *= g.side;
    for (long long c = 0; c < cells; ++c) g.cells.push_back(rng.chance(1, 2) ? 1 : 0);
    long long n = rng.uniform(1, g.side);
    auto s = window_scan_serial(g, n), p = window_scan_parallel(g, n);
    CHECK(s.max_count == p.max_count);
    CHECK(s.min_count == p.min_count);
    CHECK(s.cubes == p.cubes);
    if (g.dim == 1) {
      long long hi = -1, lo = n + 1;
      for (long long x = 0; x + n <= g.side; ++x) {
        long long c = 0;
        for (long long y = x; y < x + n; ++y) c += g.cells[y];
        hi = std::max(hi, c);
        lo = std::min(lo, c);
      }
      CHECK(s.max_count == hi);
      CHECK(s.min_count == lo);
    }
  }
}
