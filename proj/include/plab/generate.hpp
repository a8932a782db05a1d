#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "plab/density.hpp"
#include "plab/dynamics.hpp"
#include "plab/graph.hpp"
#include "plab/json_io.hpp"

namespace plab {

// mt19937_64 with hand-rolled range reduction, so streams are identical
// across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  // Stream i of a seeded family.
  Rng(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next() { return engine_(); }
  long long uniform(long long lo, long long hi);  // inclusive
  bool chance(int num, int den) { return uniform(0, den - 1) < num; }
  // k distinct values from [0, n), sorted.
  std::vector<int> sample(int n, int k);
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[static_cast<std::size_t>(uniform(0, i - 1))]);
  }

 private:
  std::mt19937_64 engine_;
};

struct OrbitInstance {
  FiniteAction action;
  GroupSet a;
  SpaceSet y;
  int h = 1;
  LayeredGraph graph;
};

// Orbit graph of the translation action of Z/n.
OrbitInstance orbit_instance(Rng& rng, int n, int a_size, int h);
// n <= max_n, |A| <= max_a, h <= max_h, bounds inclusive.
OrbitInstance random_orbit(Rng& rng, int max_n = 12, int max_a = 4, int max_h = 4);
// Z/(m^h r) with A the subgroup of order m^h and Y = {0}, so D_h = m^h.
OrbitInstance perfect_power_orbit(Rng& rng, int max_m = 3, int max_h = 3);

// Valid layered measure graph with per-label weight-preserving partial
// matchings between consecutive layers. Not commutative in general.
LayeredGraph random_layered_graph(Rng& rng, int height, int max_layer, int labels);
// 1-layered valid graph with at most max_atoms atoms.
LayeredGraph random_flow_graph(Rng& rng, int max_atoms = 30);

// Action of Z/n (or Z/n1 x Z/n2) on a union of orbits with random weights.
FiniteAction random_action(Rng& rng, int max_modulus = 8, int max_orbits = 3);
// Action, A, B, E, A_list, j < k <= 3, delta in {1/4, 1/2, 3/4}, and a small
// second factor with |B x B'| <= 16.
DynamicsInstance random_dynamics_instance(Rng& rng);

PeriodicSet random_periodic_set(Rng& rng, const std::vector<long long>& base_period);
// Every period entry <= max_period, all sets sharing one base period. dim 0
// picks 1 or 2. A_0 is finite in about a quarter of the instances.
PeriodicInstance random_periodic_instance(Rng& rng, int max_period = 12, int dim = 0);

}  // namespace plab
