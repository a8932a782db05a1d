#include "doctest.h"
#include "plab/generate.hpp"
#include "plab/maxflow.hpp"
#include "support.hpp"

using namespace plab;

TEST_CASE("max flow on a textbook network") {
  MaxFlow<long long> f(4);
  f.add_edge(0, 1, 3);
  f.add_edge(0, 2, 2);
  f.add_edge(1, 2, 1);
  f.add_edge(1, 3, 2);
  f.add_edge(2, 3, 3);
  CHECK(f.solve(0, 3) == 5);
  auto side = f.source_side(0);
  CHECK(side[0]);
  CHECK_FALSE(side[3]);
}

TEST_CASE("max flow equals the minimum over all s-t cuts") {
  for (int seed = 0; seed < 150; ++seed) {
    Rng rng(31, seed);
    const int n = static_cast<int>(rng.uniform(2, 7));
    std::vector<std::vector<long long>> cap(n, std::vector<long long>(n, 0));
    MaxFlow<BigInt> f(n);
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (u != v && rng.chance(1, 2)) {
          long long c = rng.uniform(0, 9);
          cap[u][v] += c;
          f.add_edge(u, v, BigInt(c));
        }
    BigInt flow = f.solve(0, n - 1);
    // Enumerate every cut containing 0 and not n-1.
    long long best = -1;
    for (int mask = 0; mask < (1 << n); ++mask) {
      if (!(mask & 1) || (mask >> (n - 1) & 1)) continue;
      long long c = 0;
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
          if ((mask >> u & 1) && !(mask >> v & 1)) c += cap[u][v];
      if (best < 0 || c < best) best = c;
    }
    CHECK(flow == best);
    // The residual source side is itself a minimum cut.
    auto side = f.source_side(0);
    long long c = 0;
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (side[u] && !side[v]) c += cap[u][v];
    CHECK(c == best);
  }
}
