#include <omp.h>

#include "doctest.h"
#include "plab/density.hpp"
#include "plab/errors.hpp"
#include "plab/generate.hpp"
#include "support.hpp"

using namespace plab;
using plab::test::q;

namespace {

PeriodicSet mod(long long p, std::vector<long long> r) {
  std::vector<Point> pts;
  for (long long x : r) pts.push_back({x});
  return PeriodicSet({p}, pts);
}

// Sumset membership tested point by point on one period box of the lcm.
bool sumset_oracle(const PeriodicSet& a, const PeriodicSet& b, const PeriodicSet& sum) {
  const int d = a.dim();
  std::vector<long long> box(d);
  for (int i = 0; i < d; ++i) box[i] = std::lcm(a.period()[i], b.period()[i]);
  long long cells = 1;
  for (long long p : box) cells *= p;
  for (long long f = 0; f < cells; ++f) {
    Point x(d);
    long long g = f;
    for (int i = d - 1; i >= 0; --i) {
      x[i] = g % box[i];
      g /= box[i];
    }
    // x ∈ A+B iff x - y ∈ A for some y ∈ B in the same box.
    bool member = false;
    for (long long h = 0; h < cells && !member; ++h) {
      Point y(d), diff(d);
      long long k = h;
      for (int i = d - 1; i >= 0; --i) {
        y[i] = k % box[i];
        k /= box[i];
      }
      for (int i = 0; i < d; ++i) diff[i] = x[i] - y[i];
      member = b.contains(y) && a.contains(diff);
    }
    if (member != sum.contains(x)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("normalization") {
  CHECK(normalize(mod(4, {0, 2})) == mod(2, {0}));
  CHECK(normalize(mod(5, {0, 1})) == mod(5, {0, 1}));
  CHECK(normalize(mod(6, {0, 1, 2, 3, 4, 5})) == mod(1, {0}));
  CHECK(normalize(mod(6, {})).period() == std::vector<long long>{1});
  PeriodicSet two({4, 6}, {{0, 0}, {2, 0}, {0, 3}, {2, 3}});
  CHECK(normalize(two).period() == std::vector<long long>{2, 3});
  CHECK(banach_density(normalize(two)) == banach_density(two));
  CHECK(mod(4, {5}).residues() == std::vector<Point>{{1}});
  CHECK_THROWS_AS(PeriodicSet({0}, {}), InputError);
}

TEST_CASE("sumsets and densities") {
  CHECK(periodic_sumset(mod(2, {0}), mod(3, {0})) == PeriodicSet::whole(1));
  CHECK(periodic_sumset(mod(2, {0}), mod(2, {0})) == mod(2, {0}));
  CHECK(periodic_sumset(mod(4, {0, 1}), mod(4, {0, 1})) == mod(4, {0, 1, 2}));
  CHECK(iterate_sumset(mod(4, {0, 1}), 2) == mod(4, {0, 1, 2}));
  CHECK_THROWS_AS(periodic_sumset(mod(2, {0}), PeriodicSet::whole(2)), InputError);
  CHECK(banach_density(mod(2, {0})) == q(1, 2));
  CHECK(banach_density(PeriodicSet({2, 2}, {{0, 0}})) == q(1, 4));
  CHECK(banach_density(mod(4, {0, 1})) == q(1, 2));
  auto f = PeriodicSet::finite(1, {{0}, {3}});
  CHECK(banach_density(f) == q(0));
  CHECK(periodic_sumset(f, f) == PeriodicSet::finite(1, {{0}, {3}, {6}}));
  CHECK(periodic_sumset(f, mod(6, {0})) == mod(3, {0}));
}

TEST_CASE("sumset matches pointwise membership, commutes and associates") {
  for (int seed = 0; seed < 80; ++seed) {
    Rng rng(71, seed);
    auto inst = random_periodic_instance(rng, 6);
    const auto& a = *inst.a;
    const auto& b = *inst.b;
    auto ab = periodic_sumset(a, b);
    CHECK(sumset_oracle(a, b, ab));
    CHECK(ab == periodic_sumset(b, a));
    const auto& c = inst.a_list.front();
    if (c.is_finite()) continue;
    CHECK(periodic_sumset(ab, c) == periodic_sumset(a, periodic_sumset(b, c)));
    // Adding a set that contains 0 cannot lower density.
    auto with_zero = b;
    std::vector<Point> r = b.residues();
    r.push_back(Point(b.dim(), 0));
    with_zero = PeriodicSet(b.period(), r);
    CHECK(banach_density(periodic_sumset(a, with_zero)) >= banach_density(a));
  }
}

TEST_CASE("window scan examples") {
  auto evens = [](std::span<const long long> x) { return x[0] % 2 == 0; };
  auto all = [](std::span<const long long>) { return true; };
  auto w = window_scan(evens, 1, 100, 200);
  CHECK(w.upper == q(1, 2));
  CHECK(w.lower == q(1, 2));
  auto s = window_scan(evens, 1, 3, 10);
  CHECK(s.upper == q(2, 3));
  CHECK(s.lower == q(1, 3));
  CHECK(window_scan(all, 2, 4, 6).upper == q(1));
  CHECK(window_scan(all, 2, 4, 6).lower == q(1));
  CHECK_THROWS_AS(window_scan(all, 1, 5, 4), InputError);
}

TEST_CASE("window scan is exact on period-aligned windows") {
  omp_set_num_threads(4);
  for (int seed = 0; seed < 60; ++seed) {
    Rng rng(72, seed);
    auto inst = random_periodic_instance(rng, 6);
    const auto& a = *inst.a;
    long long n = 1;
    for (long long p : a.period()) n = std::lcm(n, p);
    if (a.dim() == 2 && n > 6) continue;
    auto oracle = [&](std::span<const long long> x) { return a.contains(x); };
    auto w = window_scan(oracle, a.dim(), n, 2 * n);
    CHECK(w.upper == banach_density(a));
    CHECK(w.lower == banach_density(a));
    auto serial = window_scan(oracle, a.dim(), n + 1, 2 * n + 1, false);
    auto par = window_scan(oracle, a.dim(), n + 1, 2 * n + 1, true);
    CHECK(serial.upper == par.upper);
    CHECK(serial.lower == par.lower);
  }
}

TEST_CASE("density theorems on the examples") {
  auto r = verify_density_plunnecke(mod(2, {0}), mod(3, {0}), 1, 2);
  CHECK(r.holds);
  CHECK(r.lhs == q(1));
  CHECK(r.rhs == q(1, 6));
  auto r2 = verify_density_plunnecke(mod(4, {0, 1}), mod(4, {0}), 1, 2);
  CHECK(r2.lhs == q(1, 4));
  CHECK(r2.rhs == q(3, 16));
  CHECK(verify_density_plunnecke(mod(5, {1, 3}), PeriodicSet::whole(1), 1, 3).lhs == q(1));
  CHECK(verify_density_plunnecke(PeriodicSet::finite(1, {{0}}), mod(2, {0}), 1, 2).holds);
  CHECK_THROWS_AS(verify_density_plunnecke(mod(2, {0}), mod(2, {0}), 2, 2), InputError);

  auto s = verify_density_summands({mod(2, {0}), mod(3, {0})}, mod(6, {0}));
  CHECK(s.holds);
  CHECK(s.lhs == q(1, 6));
  CHECK(s.rhs == q(1, 6));
  CHECK(verify_density_summands({mod(4, {1})}, mod(2, {0})).holds);
  auto zero = PeriodicSet::finite(1, {{0}});
  auto z = verify_density_summands({zero, zero}, mod(3, {0}));
  CHECK(z.holds);
  CHECK(z.lhs == q(0));
  CHECK_THROWS_AS(verify_density_summands({mod(2, {0})}, PeriodicSet::finite(1, {{0}})), HypothesisError);
}

TEST_CASE("correspondence systems") {
  auto s = correspondence_system(mod(2, {0}));
  CHECK(s.period == 2);
  CHECK(s.measure(s.clopen) == q(1, 2));
  CHECK(s.words == std::vector<std::string>{"10", "01"});
  auto whole = correspondence_system(PeriodicSet::whole(1));
  CHECK(whole.period == 1);
  CHECK(whole.measure(whole.clopen) == q(1));

  auto r = verify_correspondence(mod(4, {0, 1}), PeriodicSet::finite(1, {{0}, {1}}));
  CHECK(r.holds);
  CHECK(r.lhs == q(3, 4));
  CHECK(r.rhs == q(3, 4));
  CHECK_THROWS_AS(correspondence_system(mod(3, {})), HypothesisError);
  CHECK_THROWS_AS(correspondence_system(PeriodicSet::whole(2)), InputError);
}

TEST_CASE("shift system invariants and agreement with the translation action") {
  for (int seed = 0; seed < 100; ++seed) {
    Rng rng(73, seed);
    auto inst = random_periodic_instance(rng, 12, 1);
    auto sys = correspondence_system(*inst.b);
    // The shift is a bijection: words are the distinct rotations.
    std::set<std::string> distinct(sys.words.begin(), sys.words.end());
    CHECK(static_cast<long long>(distinct.size()) == sys.period);
    CHECK(sys.point_mass * Rational(sys.period) == q(1));
    CHECK(sys.measure(sys.clopen) == banach_density(*inst.b));
    auto act = sys.as_action();
    CHECK(act.measure(act.all()) == q(1));
    auto r = verify_correspondence(*inst.b, *inst.a0);
    CHECK(r.holds);
  }
}

TEST_CASE("density of A+B equals the translation-action measure on Z/p") {
  for (int seed = 0; seed < 100; ++seed) {
    Rng rng(74, seed);
    auto inst = random_periodic_instance(rng, 12, 1);
    const auto& a = *inst.a;
    const auto& b = *inst.b;
    long long p = std::lcm(a.period()[0], b.period()[0]);
    auto act = translation_action(FinAbGroup({static_cast<int>(p)}));
    std::vector<std::vector<long long>> ar;
    for (const auto& x : expand(a, {p})) ar.push_back(x);
    std::vector<std::string> bids;
    for (const auto& x : expand(b, {p})) bids.push_back(std::to_string(x[0]));
    auto moved = act.translate(GroupSet::from_residues(act.group(), ar), act.set_of(bids));
    CHECK(act.measure(moved) == banach_density(periodic_sumset(a, b)));
  }
}
