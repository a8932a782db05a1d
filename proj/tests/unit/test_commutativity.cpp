#include <functional>

#include "doctest.h"
#include "plab/commutativity.hpp"
#include "plab/errors.hpp"
#include "plab/generate.hpp"
#include "support.hpp"

using namespace plab;
using plab::test::load_graph;

namespace {

// Tries every injective assignment E+(head) -> E+(tail) for every edge.
bool semi_commutative_oracle(const LayeredGraph& g) {
  for (const auto& edge : g.edges()) {
    const auto& up = g.out_edges(edge.head);
    const auto& down = g.out_edges(edge.tail);
    std::vector<bool> used(down.size(), false);
    std::function<bool(std::size_t)> assign = [&](std::size_t i) {
      if (i == up.size()) return true;
      const Edge& e = g.edges()[up[i]];
      for (std::size_t k = 0; k < down.size(); ++k) {
        if (used[k]) continue;
        const Edge& f = g.edges()[down[k]];
        if (!g.has_edge(f.head, e.head, edge.label)) continue;
        used[k] = true;
        if (assign(i + 1)) return true;
        used[k] = false;
      }
      return false;
    };
    if (!assign(0)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("chain counterexample fails on its first edge") {
  auto g = load_graph("chain.json");
  auto v = is_semi_commutative(g);
  CHECK_FALSE(v.holds);
  REQUIRE(v.failing_edge);
  CHECK(v.failing_edge->tail == "v0");
  CHECK(v.failing_edge->head == "v1");
  CHECK(v.failing_edge->label == "a");
  auto full = is_commutative(g);
  CHECK_FALSE(full.holds);
  CHECK_FALSE(full.failed_in_dual);
}

TEST_CASE("O1 is commutative with sound witnesses") {
  auto g = load_graph("O1.json");
  auto v = is_commutative(g);
  CHECK(v.holds);
  CHECK(witnesses_sound(g, v.witnesses));
  CHECK(witnesses_sound(dual(g), v.dual_witnesses));
  CHECK(v.witnesses.size() == g.edges().size());
}

TEST_CASE("invalid graphs are refused") {
  CHECK_THROWS_AS(is_semi_commutative(load_graph("broken.json")), InputError);
}

TEST_CASE("matching finds a maximum matching") {
  // Left 0 can only take right 0; left 1 takes either: both get matched.
  auto m = max_bipartite_matching(2, 2, {{0}, {0, 1}});
  CHECK(m[0] == 0);
  CHECK(m[1] == 1);
  auto none = max_bipartite_matching(2, 1, {{0}, {0}});
  CHECK((none[0] == -1) != (none[1] == -1));
}

TEST_CASE("semi-commutativity agrees with exhaustive injection search") {
  int positives = 0, negatives = 0;
  for (int seed = 0; seed < 300; ++seed) {
    Rng rng(21, seed);
    auto g = random_layered_graph(rng, 2, 4, 3);
    bool expect = semi_commutative_oracle(g);
    auto v = is_semi_commutative(g);
    CHECK(v.holds == expect);
    if (v.holds) CHECK(witnesses_sound(g, v.witnesses));
    (expect ? positives : negatives)++;
  }
  CHECK(positives > 0);
  CHECK(negatives > 0);
}

TEST_CASE("orbit graphs are commutative") {
  for (int seed = 0; seed < 200; ++seed) {
    Rng rng(22, seed);
    auto inst = random_orbit(rng);
    CHECK(validate(inst.graph).empty());
    CHECK(is_commutative(inst.graph).holds);
  }
}
