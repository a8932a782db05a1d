#include "plab/generate.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "plab/errors.hpp"

namespace plab {

Rng::Rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  engine_.seed(seq);
}

long long Rng::uniform(long long lo, long long hi) {
  if (hi < lo) throw InputError("empty random range");
  const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
  if (range == 0) return static_cast<long long>(next());
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t x;
  do x = next();
  while (x >= limit);
  return lo + static_cast<long long>(x % range);
}

std::vector<int> Rng::sample(int n, int k) {
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  shuffle(all);
  all.resize(std::min(k, n));
  std::sort(all.begin(), all.end());
  return all;
}

namespace {

std::vector<long long> divisors(long long n) {
  std::vector<long long> d;
  for (long long i = 1; i <= n; ++i)
    if (n % i == 0) d.push_back(i);
  return d;
}

template <class T>
const T& pick(Rng& rng, const std::vector<T>& v) {
  return v[static_cast<std::size_t>(rng.uniform(0, static_cast<long long>(v.size()) - 1))];
}

std::string padded(int i) {
  std::string s = std::to_string(i);
  return s.size() < 2 ? "0" + s : s;
}

}  // namespace

OrbitInstance orbit_instance(Rng& rng, int n, int a_size, int h) {
  OrbitInstance inst;
  inst.action = translation_action(FinAbGroup({n}));
  inst.a = GroupSet(inst.action.group(), rng.sample(n, a_size));
  inst.y = SpaceSet(rng.sample(n, static_cast<int>(rng.uniform(1, std::min(n, 3)))));
  inst.h = h;
  inst.graph = orbit_graph(inst.action, inst.a, inst.y, h);
  return inst;
}

OrbitInstance random_orbit(Rng& rng, int max_n, int max_a, int max_h) {
  int n = static_cast<int>(rng.uniform(1, max_n));
  int a = static_cast<int>(rng.uniform(1, std::min(max_a, n)));
  int h = static_cast<int>(rng.uniform(1, max_h));
  return orbit_instance(rng, n, a, h);
}

OrbitInstance perfect_power_orbit(Rng& rng, int max_m, int max_h) {
  int m = static_cast<int>(rng.uniform(2, max_m));
  int h = static_cast<int>(rng.uniform(1, max_h));
  int r = static_cast<int>(rng.uniform(1, 2));
  int order = 1;
  for (int i = 0; i < h; ++i) order *= m;
  OrbitInstance inst;
  inst.action = translation_action(FinAbGroup({order * r}));
  std::vector<int> sub;
  for (int i = 0; i < order; ++i) sub.push_back(i * r);
  inst.a = GroupSet(inst.action.group(), sub);
  inst.y = SpaceSet({*inst.action.find_atom("0")});
  inst.h = h;
  inst.graph = orbit_graph(inst.action, inst.a, inst.y, h);
  return inst;
}

LayeredGraph random_layered_graph(Rng& rng, int height, int max_layer, int labels) {
  static const std::vector<Rational> classes = {Rational(1), Rational(BigInt(1), BigInt(2)),
                                                Rational(BigInt(2), BigInt(3))};
  const int classes_used = static_cast<int>(rng.uniform(1, 3));
  std::vector<std::string> label_ids;
  for (int a = 0; a < labels; ++a) label_ids.push_back(std::string(1, static_cast<char>('a' + a)));
  std::vector<Vertex> vertices;
  std::vector<std::vector<int>> layers(height + 1);
  for (int k = 0; k <= height; ++k) {
    int size = static_cast<int>(rng.uniform(1, max_layer));
    for (int i = 0; i < size; ++i) {
      layers[k].push_back(static_cast<int>(vertices.size()));
      vertices.push_back({"L" + std::to_string(k) + "v" + padded(i), k,
                          classes[static_cast<std::size_t>(rng.uniform(0, classes_used - 1))]});
    }
  }
  std::vector<EdgeSpec> edges;
  for (int k = 0; k < height; ++k)
    for (const auto& label : label_ids)
      for (int c = 0; c < classes_used; ++c) {
        std::vector<int> lo, hi;
        for (int v : layers[k])
          if (vertices[v].weight == classes[c]) lo.push_back(v);
        for (int v : layers[k + 1])
          if (vertices[v].weight == classes[c]) hi.push_back(v);
        rng.shuffle(lo);
        rng.shuffle(hi);
        for (std::size_t i = 0; i < std::min(lo.size(), hi.size()); ++i)
          if (rng.chance(3, 4)) edges.push_back({vertices[lo[i]].id, vertices[hi[i]].id, label});
      }
  return LayeredGraph(height, label_ids, vertices, edges);
}

LayeredGraph random_flow_graph(Rng& rng, int max_atoms) {
  int labels = static_cast<int>(rng.uniform(1, 3));
  return random_layered_graph(rng, 1, std::max(1, max_atoms / 2), labels);
}

FiniteAction random_action(Rng& rng, int max_modulus, int max_orbits) {
  std::vector<int> moduli;
  if (rng.chance(3, 4))
    moduli = {static_cast<int>(rng.uniform(1, max_modulus))};
  else
    moduli = {static_cast<int>(rng.uniform(1, std::min(4, max_modulus))),
              static_cast<int>(rng.uniform(1, std::min(4, max_modulus)))};
  const int rank = static_cast<int>(moduli.size());

  // Each orbit is Z/m_1 x ... with m_i | n_i; atoms are (orbit, coordinates).
  struct Atom {
    int orbit;
    std::vector<long long> c;
  };
  std::vector<Atom> atoms;
  std::vector<std::vector<long long>> orbit_mod;
  std::vector<long long> orbit_weight;
  int orbits = static_cast<int>(rng.uniform(1, max_orbits));
  for (int o = 0; o < orbits; ++o) {
    std::vector<long long> m;
    for (int n : moduli) m.push_back(pick(rng, divisors(n)));
    orbit_mod.push_back(m);
    orbit_weight.push_back(rng.uniform(1, 3));
    long long size = 1;
    for (long long x : m) size *= x;
    for (long long f = 0; f < size; ++f) {
      std::vector<long long> c(rank);
      long long g = f;
      for (int i = rank - 1; i >= 0; --i) {
        c[i] = g % m[i];
        g /= m[i];
      }
      atoms.push_back({o, c});
    }
  }
  std::vector<int> names(atoms.size());
  std::iota(names.begin(), names.end(), 0);
  rng.shuffle(names);
  auto id_of = [&](std::size_t i) { return "x" + padded(names[i]); };
  auto find = [&](int orbit, const std::vector<long long>& c) {
    for (std::size_t i = 0; i < atoms.size(); ++i)
      if (atoms[i].orbit == orbit && atoms[i].c == c) return i;
    throw InputError("internal: atom not found");
  };

  long long total = 0;
  for (const auto& a : atoms) total += orbit_weight[a.orbit];
  ActionSpec spec;
  spec.moduli = moduli;
  for (std::size_t i = 0; i < atoms.size(); ++i)
    spec.atoms.emplace_back(id_of(i), Rational(BigInt(orbit_weight[atoms[i].orbit]), BigInt(total)));
  for (int g = 0; g < rank; ++g) {
    std::map<std::string, std::string> perm;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      auto c = atoms[i].c;
      c[g] = (c[g] + 1) % orbit_mod[atoms[i].orbit][g];
      perm[id_of(i)] = id_of(find(atoms[i].orbit, c));
    }
    spec.generators.push_back(std::move(perm));
  }
  return FiniteAction(spec);
}

namespace {

GroupSet random_group_set(Rng& rng, const FinAbGroup& g, int max_size) {
  return GroupSet(g, rng.sample(g.order(), static_cast<int>(rng.uniform(1, std::min(max_size, g.order())))));
}

SpaceSet random_space_set(Rng& rng, const FiniteAction& act, int min_size, int max_size) {
  int n = static_cast<int>(act.atom_count());
  return SpaceSet(rng.sample(n, static_cast<int>(rng.uniform(min_size, std::min(max_size, n)))));
}

}  // namespace

DynamicsInstance random_dynamics_instance(Rng& rng) {
  DynamicsInstance inst;
  inst.action = random_action(rng, 8, 3);
  const FinAbGroup& g = inst.action.group();
  inst.a = random_group_set(rng, g, 3);
  inst.b = random_space_set(rng, inst.action, 1, 8);
  if (rng.chance(1, 2)) inst.e = random_space_set(rng, inst.action, 1, 3);
  int summands = static_cast<int>(rng.uniform(1, 3));
  for (int i = 0; i < summands; ++i) inst.a_list.push_back(random_group_set(rng, g, 3));
  inst.k = static_cast<int>(rng.uniform(2, 3));
  inst.j = static_cast<int>(rng.uniform(1, inst.k - 1));
  static const std::vector<Rational> deltas = {Rational(BigInt(1), BigInt(4)), Rational(BigInt(1), BigInt(2)),
                                               Rational(BigInt(3), BigInt(4))};
  inst.delta = pick(rng, deltas);
  inst.action2 = random_action(rng, 6, 2);
  inst.a2 = random_group_set(rng, inst.action2->group(), 3);
  int room = std::max<int>(1, 16 / static_cast<int>(inst.b.size()));
  inst.b2 = random_space_set(rng, *inst.action2, 1, room);
  return inst;
}

PeriodicSet random_periodic_set(Rng& rng, const std::vector<long long>& base_period) {
  std::vector<long long> period;
  for (long long p : base_period) period.push_back(pick(rng, divisors(p)));
  long long cells = 1;
  for (long long p : period) cells *= p;
  static const std::vector<int> fill = {1, 2, 3};
  int f = pick(rng, fill);
  std::vector<Point> res;
  for (long long c = 0; c < cells; ++c)
    if (rng.chance(f, 4)) {
      Point x(period.size());
      long long g = c;
      for (int i = static_cast<int>(period.size()) - 1; i >= 0; --i) {
        x[i] = g % period[i];
        g /= period[i];
      }
      res.push_back(std::move(x));
    }
  if (res.empty()) res.push_back(Point(period.size(), 0));
  return normalize(PeriodicSet(period, std::move(res)));
}

PeriodicInstance random_periodic_instance(Rng& rng, int max_period, int dim) {
  if (dim == 0) dim = static_cast<int>(rng.uniform(1, 2));
  std::vector<long long> base;
  for (int i = 0; i < dim; ++i) base.push_back(rng.uniform(1, max_period));
  PeriodicInstance inst;
  inst.a = random_periodic_set(rng, base);
  inst.b = random_periodic_set(rng, base);
  int summands = static_cast<int>(rng.uniform(1, 3));
  for (int i = 0; i < summands; ++i) {
    if (rng.chance(1, 8))
      inst.a_list.push_back(PeriodicSet::finite(dim, {Point(dim, 0)}));
    else
      inst.a_list.push_back(random_periodic_set(rng, base));
  }
  if (rng.chance(1, 4)) {
    std::vector<Point> pts;
    int count = static_cast<int>(rng.uniform(1, 3));
    for (int i = 0; i < count; ++i) {
      Point x(dim);
      for (auto& c : x) c = rng.uniform(-5, 5);
      pts.push_back(std::move(x));
    }
    inst.a0 = PeriodicSet::finite(dim, std::move(pts));
  } else {
    inst.a0 = random_periodic_set(rng, base);
  }
  inst.k = static_cast<int>(rng.uniform(2, 3));
  inst.j = static_cast<int>(rng.uniform(1, inst.k - 1));
  return inst;
}

}  // namespace plab
