#include "doctest.h"
#include "plab/commutativity.hpp"
#include "plab/dynamics.hpp"
#include "plab/errors.hpp"
#include "plab/generate.hpp"
#include "plab/magnification.hpp"
#include "support.hpp"

using namespace plab;
using plab::test::for_each_subset;
using plab::test::q;

namespace {

FiniteAction z(int n) { return translation_action(FinAbGroup({n})); }
GroupSet gs(const FiniteAction& act, std::vector<long long> elems) {
  std::vector<std::vector<long long>> r;
  for (long long e : elems) r.push_back({e});
  return GroupSet::from_residues(act.group(), r);
}
SpaceSet ss(const FiniteAction& act, std::vector<std::string> ids) { return act.set_of(ids); }

// min mu(A B' \ E) / mu(B') over nonempty B' ⊆ B, with A B' built element by element.
Rational ratio_oracle(const FiniteAction& act, const GroupSet& a, const SpaceSet& b, const SpaceSet& e,
                      const Rational& floor = Rational(0)) {
  bool found = false;
  Rational best;
  const auto& bm = b.members();
  Rational mu_b = act.measure(b);
  for_each_subset(static_cast<int>(bm.size()), [&](const std::vector<int>& s) {
    std::vector<bool> hit(act.atom_count(), false);
    Rational wb;
    for (int i : s) {
      wb += act.weight(bm[i]);
      for (int g : a.elements()) hit[act.apply(g, bm[i])] = true;
    }
    if (wb < floor * mu_b) return;
    Rational wa;
    for (std::size_t x = 0; x < hit.size(); ++x)
      if (hit[x] && !e.contains(static_cast<int>(x))) wa += act.weight(static_cast<int>(x));
    Rational r = wa / wb;
    if (!found || r < best) {
      found = true;
      best = r;
    }
  });
  return best;
}

}  // namespace

TEST_CASE("product sets in Z/4") {
  auto act = z(4);
  auto a = gs(act, {0, 1});
  CHECK(product_set(a, a) == gs(act, {0, 1, 2}));
  CHECK(iterate(a, 3) == gs(act, {0, 1, 2, 3}));
  CHECK(product_set(a, gs(act, {0})) == a);
  CHECK_THROWS_AS(product_set(a, gs(z(5), {0})), InputError);
  FinAbGroup g2({2, 3});
  CHECK(g2.element_id(g2.encode(std::vector<long long>{1, 2})) == "1,2");
  CHECK(g2.add(g2.generator(0), g2.generator(0)) == 0);
  CHECK(g2.add(g2.negate(g2.generator(1)), g2.generator(1)) == 0);
}

TEST_CASE("translation and product actions") {
  auto act = z(6);
  CHECK(act.atom_count() == 6);
  CHECK(act.weight(0) == q(1, 6));
  auto prod = product_action(act, act);
  CHECK(prod.atom_count() == 36);
  CHECK(prod.weight(0) == q(1, 36));
  CHECK(validate(prod.spec()).empty());
}

TEST_CASE("action validation") {
  ActionSpec s;
  s.moduli = {2};
  s.atoms = {{"x", q(1, 2)}, {"y", q(1, 2)}};
  s.generators = {{{"x", "y"}, {"y", "x"}}};
  CHECK(validate(s).empty());

  auto bad_total = s;
  bad_total.atoms[1].second = q(1, 3);
  CHECK(validate(bad_total).at(0).kind == "total");

  auto bad_measure = s;
  bad_measure.atoms = {{"x", q(1, 3)}, {"y", q(2, 3)}};
  CHECK(validate(bad_measure).at(0).kind == "measure");

  auto bad_perm = s;
  bad_perm.generators = {{{"x", "x"}, {"y", "x"}}};
  CHECK(validate(bad_perm).at(0).kind == "perm");

  auto bad_order = s;
  bad_order.moduli = {3};
  CHECK(validate(bad_order).at(0).kind == "order");

  ActionSpec swap;
  swap.moduli = {2, 3};
  swap.atoms = {{"a", q(1, 3)}, {"b", q(1, 3)}, {"c", q(1, 3)}};
  swap.generators = {{{"a", "b"}, {"b", "a"}, {"c", "c"}}, {{"a", "b"}, {"b", "c"}, {"c", "a"}}};
  CHECK(validate(swap).at(0).kind == "commute");
  CHECK_THROWS_AS(FiniteAction{swap}, InputError);
}

TEST_CASE("orbit graph shapes") {
  auto act = z(4);
  auto o1 = orbit_graph(act, gs(act, {0, 1}), ss(act, {"0"}), 2);
  CHECK(o1.layer(1).size() == 2);
  CHECK(o1.layer(2).size() == 3);
  CHECK(o1.edges().size() == 6);
  CHECK(is_commutative(o1).holds);
  auto path = orbit_graph(act, gs(act, {0}), ss(act, {"1"}), 3);
  CHECK(path.vertex_count() == 4);
  CHECK(path.edges().size() == 3);
}

TEST_CASE("magnification ratios of Z/6 examples") {
  auto act = z(6);
  auto b03 = ss(act, {"0", "3"});
  auto r = c(act, gs(act, {0, 1}), b03);
  CHECK(r.value == q(2));
  CHECK(act.ids(r.witness) == std::vector<std::string>{"0"});
  CHECK(c(act, gs(act, {0}), b03).value == q(1));
  CHECK(c(act, gs(act, {0, 1, 2}), b03).value == q(3));
  CHECK(c(act, gs(act, {0, 1}), b03, RatioMethod::mincut).value == q(2));

  CHECK(c_delta(act, gs(act, {0, 1}), b03, q(1)).value == q(2));
  CHECK(c_delta(act, gs(act, {0, 1, 3}), ss(act, {"0", "1"}), q(3, 4)).value == q(5, 2));
  CHECK(c_delta(act, gs(act, {0, 1, 3}), ss(act, {"0", "1"}), q(1, 10)).value ==
        c(act, gs(act, {0, 1, 3}), ss(act, {"0", "1"})).value);

  CHECK(c_restricted(act, gs(act, {0, 1}), ss(act, {"0"}), ss(act, {"1"})).value == q(1));
  CHECK(c_restricted(act, gs(act, {0, 1}), b03, act.all()).value == q(0));
  CHECK(c_restricted(act, gs(act, {0, 1}), b03, {}).value == q(2));
  CHECK_THROWS_AS(c(act, gs(act, {0, 1}), SpaceSet{}), InputError);
}

TEST_CASE("Z/6 theorem checks") {
  auto act = z(6);
  auto r = verify_dyn_plunnecke(act, gs(act, {0, 1}), ss(act, {"0", "3"}), 1, 2);
  CHECK(r.holds);
  CHECK(r.lhs == q(4));
  CHECK(r.rhs == q(3));
  auto r2 = verify_dyn_plunnecke(act, gs(act, {0, 3}), ss(act, {"0"}), 1, 2);
  CHECK(r2.lhs == q(4));
  CHECK(r2.rhs == q(2));
  CHECK(verify_dyn_plunnecke(act, gs(act, {0, 1}), ss(act, {"0"}), 2, 2).relation == Relation::greater_equal);

  auto rr = verify_restricted_plunnecke(act, gs(act, {0, 1}), ss(act, {"0"}), ss(act, {"5"}), 1, 2);
  CHECK(rr.holds);
  CHECK(rr.lhs == q(4));
  CHECK(rr.rhs == q(2));

  auto ds = verify_different_summands(act, {gs(act, {0, 1}), gs(act, {0, 2})}, ss(act, {"0"}));
  CHECK(ds.holds);
  CHECK(ds.lhs == q(4));
  CHECK(ds.rhs == q(4));

  auto m = verify_multiplicativity(act, act, gs(act, {0, 1}), gs(act, {0, 1}), ss(act, {"0", "3"}),
                                   ss(act, {"0", "3"}));
  CHECK(m.holds);
  CHECK(m.lhs == q(4));
  CHECK(m.rhs == q(4));
  auto m1 = verify_multiplicativity(act, act, gs(act, {0, 1}), gs(act, {0}), ss(act, {"0", "3"}), ss(act, {"2"}));
  CHECK(m1.rhs == q(2));
}

TEST_CASE("heavy subset on Z/6") {
  auto act = z(6);
  auto b = ss(act, {"0", "3"});
  auto sub = heavy_subset(act, gs(act, {0, 1}), b, q(1, 2), 1, 2);
  CHECK(sub.is_subset_of(b));
  CHECK(act.measure(sub) >= q(1, 2) * act.measure(b));
  CHECK(heavy_hypothesis(act, gs(act, {0, 1}), b, sub, q(1, 2), 1, 2));
  auto r = verify_heavy_subset(act, gs(act, {0, 1}), b, q(1, 2), 1, 2);
  CHECK(r.holds);
  CHECK(r.lhs == q(3));
  CHECK(r.rhs == q(16));
  CHECK_THROWS_AS(heavy_subset(act, gs(act, {0, 1}), b, q(1), 1, 2), InputError);
  CHECK(heavy_hypothesis(act, gs(act, {0}), b, ss(act, {"3"}), q(1, 2), 1, 2));
}

TEST_CASE("ratios match direct enumeration on random actions") {
  for (int seed = 0; seed < 150; ++seed) {
    Rng rng(61, seed);
    auto inst = random_dynamics_instance(rng);
    const auto& act = inst.action;
    CHECK(validate(act.spec()).empty());
    auto ak = iterate(inst.a, inst.k);
    CHECK(c(act, ak, inst.b, RatioMethod::brute).value == ratio_oracle(act, ak, inst.b, {}));
    CHECK(c(act, ak, inst.b, RatioMethod::mincut).value == ratio_oracle(act, ak, inst.b, {}));
    CHECK(c_restricted(act, inst.a, inst.b, inst.e).value == ratio_oracle(act, inst.a, inst.b, inst.e));
    CHECK(c_delta(act, inst.a, inst.b, inst.delta).value == ratio_oracle(act, inst.a, inst.b, {}, inst.delta));
  }
}

TEST_CASE("c equals the layer magnification of the orbit graph") {
  for (int seed = 0; seed < 80; ++seed) {
    Rng rng(62, seed);
    auto inst = random_dynamics_instance(rng);
    const auto& act = inst.action;
    auto g = orbit_graph(act, inst.a, inst.b, inst.k);
    for (int j = 1; j <= inst.k; ++j)
      CHECK(c(act, iterate(inst.a, j), inst.b).value == magnification(g, j).value);
  }
}

TEST_CASE("c_delta is monotone in delta") {
  static const std::vector<Rational> deltas = {q(1, 8), q(1, 4), q(1, 2), q(3, 4), q(1)};
  for (int seed = 0; seed < 80; ++seed) {
    Rng rng(63, seed);
    auto inst = random_dynamics_instance(rng);
    Rational prev;
    for (std::size_t i = 0; i < deltas.size(); ++i) {
      Rational v = c_delta(inst.action, inst.a, inst.b, deltas[i]).value;
      if (i) CHECK(prev <= v);
      prev = v;
    }
  }
}

TEST_CASE("restricted orbit graphs are commutative") {
  for (int seed = 0; seed < 100; ++seed) {
    Rng rng(64, seed);
    auto inst = random_dynamics_instance(rng);
    auto g = restricted_orbit_graph(inst.action, inst.a, inst.b, inst.e, inst.k);
    CHECK(validate(g).empty());
    CHECK(is_commutative(g).holds);
  }
}

TEST_CASE("heavy subset postconditions on random instances") {
  for (int seed = 0; seed < 120; ++seed) {
    Rng rng(65, seed);
    auto inst = random_dynamics_instance(rng);
    auto sub = heavy_subset(inst.action, inst.a, inst.b, inst.delta, inst.j, inst.k);
    CHECK(sub.is_subset_of(inst.b));
    CHECK(inst.action.measure(sub) >= inst.delta * inst.action.measure(inst.b));
    CHECK(heavy_hypothesis(inst.action, inst.a, inst.b, sub, inst.delta, inst.j, inst.k));
  }
}
