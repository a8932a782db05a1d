#include <functional>
#include <set>

#include "doctest.h"
#include "plab/errors.hpp"
#include "plab/generate.hpp"
#include "support.hpp"

using namespace plab;
using plab::test::load_graph;
using plab::test::q;

namespace {

LayeredGraph path_graph(Rational w1) {
  return LayeredGraph(1, {"a"}, {{"v0", 0, q(1)}, {"v1", 1, w1}}, {{"v0", "v1", "a"}});
}

// Every vertex on some directed path from s to t, by explicit path enumeration.
std::set<std::string> channel_oracle(const LayeredGraph& g, const VertexSet& s, const VertexSet& t) {
  std::set<std::string> out;
  std::vector<int> path;
  std::function<void(int)> walk = [&](int v) {
    path.push_back(v);
    if (t.contains(v))
      for (int p : path) out.insert(g.vertex(p).id);
    for (int e : g.out_edges(v)) walk(g.edges()[e].head);
    path.pop_back();
  };
  for (int v : s) walk(v);
  return out;
}

}  // namespace

TEST_CASE("validate: minimal graph and single violations") {
  CHECK(validate(path_graph(q(1))).empty());

  auto v = validate(path_graph(q(2)));
  REQUIRE(v.size() == 1);
  CHECK(v[0].kind == "edge-weight");
  CHECK(v[0].message == "edge weight mismatch (v0,v1,a)");

  LayeredGraph fork(1, {"a"}, {{"v0", 0, q(1)}, {"v1", 1, q(1)}, {"v2", 1, q(1)}},
                    {{"v0", "v1", "a"}, {"v0", "v2", "a"}});
  auto f = validate(fork);
  REQUIRE(!f.empty());
  CHECK(f[0].message == "label functionality at (v0,a)");

  LayeredGraph skip(2, {"a"}, {{"v0", 0, q(1)}, {"v2", 2, q(1)}}, {{"v0", "v2", "a"}});
  CHECK(validate(skip).at(0).kind == "layer-step");

  LayeredGraph zero(1, {"a"}, {{"v0", 0, q(0)}}, {});
  CHECK(validate(zero).at(0).kind == "weight");

  LayeredGraph high(1, {"a"}, {{"v0", 3, q(1)}}, {});
  CHECK(validate(high).at(0).kind == "layer");
}

TEST_CASE("construction rejects structural errors") {
  CHECK_THROWS_AS(LayeredGraph(1, {"a"}, {{"v", 0, q(1)}, {"v", 1, q(1)}}, {}), InputError);
  CHECK_THROWS_AS(LayeredGraph(1, {"a"}, {{"v", 0, q(1)}}, {{"v", "w", "a"}}), InputError);
  CHECK_THROWS_AS(LayeredGraph(1, {"a"}, {{"v", 0, q(1)}, {"w", 1, q(1)}}, {{"v", "w", "b"}}), InputError);
  CHECK_THROWS_AS(LayeredGraph(0, {"a"}, {{"v", 0, q(1)}}, {}), InputError);
}

TEST_CASE("images on the path graph") {
  auto g = path_graph(q(1));
  CHECK(g.ids(image(g, g.set_of({"v0"}), "a", Direction::forward)) == std::vector<std::string>{"v1"});
  CHECK(image(g, VertexSet{}, "a", Direction::forward).empty());
  CHECK(g.ids(image(g, g.set_of({"v1"}), "a", Direction::backward)) == std::vector<std::string>{"v0"});
  CHECK_THROWS_AS(image(g, g.set_of({"v0"}), "zz", Direction::forward), InputError);
}

TEST_CASE("O1 structure") {
  auto g = load_graph("O1.json");
  CHECK(validate(g).empty());
  CHECK(g.layer(0).size() == 1);
  CHECK(g.layer(1).size() == 2);
  CHECK(g.layer(2).size() == 3);
  CHECK(g.edges().size() == 6);
  // {0,1} + {0,1} mod 4 = {0,1,2}.
  CHECK(g.ids(iterated_image(g, g.layer(0), 2)) == std::vector<std::string>{"2:0", "2:1", "2:2"});
  CHECK(iterated_image(g, g.layer(2), -2) == g.layer(0));
  CHECK(iterated_image(g, g.layer(1), 0) == g.layer(1));

  auto prefix = induced_subgraph(g, g.layer(0).unite(g.layer(1)));
  CHECK(prefix.edges().size() == 2);
  CHECK(truncate(g, 1).height() == 1);
  CHECK(truncate(g, 1).edges().size() == 2);

  CHECK(channel(g, g.layer(0), g.layer(2)) == g);
  CHECK(dual(dual(g)) == g);
  CHECK(dual(g).edges().size() == 6);
  CHECK(dual(g).layer(0).size() == 3);
}

TEST_CASE("image distributes over unions and preserves weight on the label domain") {
  for (int seed = 0; seed < 60; ++seed) {
    Rng rng(11, seed);
    auto g = random_layered_graph(rng, 2, 6, 2);
    REQUIRE(validate(g).empty());
    auto all = g.all();
    auto s = VertexSet(rng.sample(static_cast<int>(g.vertex_count()), 3));
    auto t = VertexSet(rng.sample(static_cast<int>(g.vertex_count()), 3));
    for (int a = 0; a < static_cast<int>(g.labels().size()); ++a) {
      CHECK(image(g, s.unite(t), a, Direction::forward) ==
            image(g, s, a, Direction::forward).unite(image(g, t, a, Direction::forward)));
      // Tails of label a, found by scanning edges directly.
      std::vector<int> tails;
      for (const auto& e : g.edges())
        if (e.label == a) tails.push_back(e.tail);
      VertexSet dom(tails);
      VertexSet sd = s.intersect(dom);
      CHECK(g.weight(image(g, sd, a, Direction::forward)) == g.weight(sd));
    }
  }
}

TEST_CASE("channel matches path enumeration") {
  for (int seed = 0; seed < 80; ++seed) {
    Rng rng(12, seed);
    auto g = random_layered_graph(rng, 3, 4, 2);
    VertexSet s = VertexSet(rng.sample(static_cast<int>(g.layer(0).size()), 2));
    std::vector<int> sm;
    for (int i : s) sm.push_back(g.layer(0).members()[i]);
    VertexSet src(sm), dst = g.layer(3);
    auto ch = channel(g, src, dst);
    auto expect = channel_oracle(g, src, dst);
    std::set<std::string> got;
    for (const auto& v : ch.vertices()) got.insert(v.id);
    CHECK(got == expect);
  }
}

TEST_CASE("flow equals the edge-weight sum and is dual-invariant") {
  for (int seed = 0; seed < 100; ++seed) {
    Rng rng(13, seed);
    auto g = random_flow_graph(rng);
    Rational by_edges;
    for (const auto& e : g.edges()) by_edges += g.vertex(e.tail).weight;
    CHECK(flow(g) == by_edges);
    CHECK(flow(g) == flow(dual(g)));
  }
}
