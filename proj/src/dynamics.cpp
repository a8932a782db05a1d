#include "plab/dynamics.hpp"

#include <algorithm>
#include <set>

#include "plab/commutativity.hpp"
#include "plab/errors.hpp"

namespace plab {

// ---------------------------------------------------------------- groups

FinAbGroup::FinAbGroup(std::vector<int> moduli) : moduli_(std::move(moduli)) {
  if (moduli_.empty()) throw InputError("group needs at least one modulus");
  order_ = 1;
  for (int n : moduli_) {
    if (n < 1) throw InputError("group moduli must be >= 1");
    if (order_ > (1 << 24) / n) throw InputError("group order too large");
    order_ *= n;
  }
}

int FinAbGroup::encode(std::span<const long long> residues) const {
  if (residues.size() != moduli_.size())
    throw InputError("group element has " + std::to_string(residues.size()) + " coordinates, expected " +
                     std::to_string(moduli_.size()));
  int e = 0;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    long long n = moduli_[i];
    long long r = ((residues[i] % n) + n) % n;
    e = e * moduli_[i] + static_cast<int>(r);
  }
  return e;
}

std::vector<int> FinAbGroup::decode(int element) const {
  std::vector<int> r(moduli_.size());
  for (int i = rank() - 1; i >= 0; --i) {
    r[i] = element % moduli_[i];
    element /= moduli_[i];
  }
  return r;
}

int FinAbGroup::add(int a, int b) const {
  auto x = decode(a), y = decode(b);
  std::vector<long long> s(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) s[i] = x[i] + y[i];
  return encode(s);
}

int FinAbGroup::negate(int a) const {
  auto x = decode(a);
  std::vector<long long> s(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) s[i] = -x[i];
  return encode(s);
}

int FinAbGroup::generator(int coordinate) const {
  std::vector<long long> s(moduli_.size(), 0);
  s.at(coordinate) = 1;
  return encode(s);
}

std::string FinAbGroup::element_id(int element) const {
  auto r = decode(element);
  std::string out;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(r[i]);
  }
  return out;
}

FinAbGroup FinAbGroup::direct_sum(const FinAbGroup& other) const {
  std::vector<int> m = moduli_;
  m.insert(m.end(), other.moduli_.begin(), other.moduli_.end());
  return FinAbGroup(std::move(m));
}

int FinAbGroup::pair(int a, const FinAbGroup& other, int b) const { return a * other.order() + b; }

GroupSet::GroupSet(FinAbGroup group, std::vector<int> elements)
    : group_(std::move(group)), elements_(std::move(elements)) {
  for (int e : elements_)
    if (e < 0 || e >= group_.order()) throw InputError("group element out of range");
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

GroupSet GroupSet::from_residues(const FinAbGroup& group, const std::vector<std::vector<long long>>& residues) {
  std::vector<int> e;
  for (const auto& r : residues) e.push_back(group.encode(r));
  return GroupSet(group, std::move(e));
}

std::vector<std::vector<int>> GroupSet::residues() const {
  std::vector<std::vector<int>> out;
  for (int e : elements_) out.push_back(group_.decode(e));
  return out;
}

GroupSet product_set(const GroupSet& a, const GroupSet& b) {
  if (!(a.group() == b.group())) throw InputError("product set of subsets of different groups");
  std::vector<int> out;
  for (int x : a.elements())
    for (int y : b.elements()) out.push_back(a.group().add(x, y));
  return GroupSet(a.group(), std::move(out));
}

GroupSet iterate(const GroupSet& a, int k) {
  if (k < 1) throw InputError("iterated product set needs k >= 1");
  GroupSet r = a;
  for (int i = 1; i < k; ++i) r = product_set(r, a);
  return r;
}

GroupSet cartesian(const GroupSet& a, const GroupSet& b) {
  FinAbGroup g = a.group().direct_sum(b.group());
  std::vector<int> out;
  for (int x : a.elements())
    for (int y : b.elements()) out.push_back(a.group().pair(x, b.group(), y));
  return GroupSet(g, std::move(out));
}

// ---------------------------------------------------------------- actions

std::vector<ActionViolation> validate(const ActionSpec& spec) {
  std::vector<ActionViolation> out;
  if (spec.moduli.empty()) out.push_back({"moduli", "no moduli given"});
  for (int n : spec.moduli)
    if (n < 1) out.push_back({"moduli", "modulus " + std::to_string(n) + " < 1"});
  if (spec.generators.size() != spec.moduli.size())
    out.push_back({"moduli", "expected one generator per modulus (" + std::to_string(spec.moduli.size()) +
                                 "), got " + std::to_string(spec.generators.size())});
  if (spec.atoms.empty()) out.push_back({"weight", "no atoms"});

  std::map<std::string, Rational> weight;
  Rational total;
  for (const auto& [id, w] : spec.atoms) {
    if (!weight.emplace(id, w).second) out.push_back({"weight", "duplicate atom id '" + id + "'"});
    if (w.sign() <= 0) out.push_back({"weight", "non-positive weight at atom '" + id + "'"});
    total += w;
  }
  if (!spec.atoms.empty() && total != Rational(1))
    out.push_back({"total", "atom weights sum to " + total.str() + ", expected 1/1"});
  if (!out.empty()) return out;

  bool perms_ok = true;
  for (std::size_t g = 0; g < spec.generators.size(); ++g) {
    const auto& perm = spec.generators[g];
    std::set<std::string> images;
    for (const auto& [x, y] : perm) {
      if (!weight.count(x)) {
        out.push_back({"perm", "generator " + std::to_string(g) + " maps unknown atom '" + x + "'"});
        perms_ok = false;
        continue;
      }
      if (!weight.count(y)) {
        out.push_back({"perm", "generator " + std::to_string(g) + " maps to unknown atom '" + y + "'"});
        perms_ok = false;
        continue;
      }
      images.insert(y);
      if (weight[x] != weight[y])
        out.push_back({"measure", "generator " + std::to_string(g) + " moves '" + x + "' to '" + y +
                                      "' of different weight"});
    }
    if (perm.size() != weight.size() || images.size() != weight.size()) {
      out.push_back({"perm", "generator " + std::to_string(g) + " is not a permutation of the atoms"});
      perms_ok = false;
    }
  }
  if (!perms_ok) return out;

  for (std::size_t g = 0; g < spec.generators.size(); ++g) {
    const auto& p = spec.generators[g];
    for (std::size_t h = g + 1; h < spec.generators.size(); ++h) {
      const auto& q = spec.generators[h];
      for (const auto& [x, _] : weight)
        if (p.at(q.at(x)) != q.at(p.at(x))) {
          out.push_back({"commute", "generators " + std::to_string(g) + " and " + std::to_string(h) +
                                        " do not commute at '" + x + "'"});
          break;
        }
    }
    for (const auto& [x, _] : weight) {
      std::string y = x;
      for (int i = 0; i < spec.moduli[g]; ++i) y = p.at(y);
      if (y != x) {
        out.push_back({"order", "generator " + std::to_string(g) + " has order not dividing " +
                                    std::to_string(spec.moduli[g])});
        break;
      }
    }
  }
  return out;
}

FiniteAction::FiniteAction(const ActionSpec& spec) {
  auto violations = validate(spec);
  if (!violations.empty()) throw InputError("invalid action: " + violations.front().message);
  group_ = FinAbGroup(spec.moduli);
  auto atoms = spec.atoms;
  std::sort(atoms.begin(), atoms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [id, w] : atoms) {
    ids_.push_back(id);
    weights_.push_back(w);
  }
  const int n = static_cast<int>(ids_.size());
  for (const auto& perm : spec.generators) {
    std::vector<int> p(n);
    for (int x = 0; x < n; ++x) p[x] = *find_atom(perm.at(ids_[x]));
    generators_.push_back(std::move(p));
  }
  table_.assign(static_cast<std::size_t>(group_.order()) * n, 0);
  for (int e = 0; e < group_.order(); ++e) {
    auto r = group_.decode(e);
    for (int x = 0; x < n; ++x) {
      int y = x;
      for (int i = 0; i < group_.rank(); ++i)
        for (int s = 0; s < r[i]; ++s) y = generators_[i][y];
      table_[static_cast<std::size_t>(e) * n + x] = y;
    }
  }
}

std::optional<int> FiniteAction::find_atom(std::string_view id) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id) return std::nullopt;
  return static_cast<int>(it - ids_.begin());
}

SpaceSet FiniteAction::translate(const GroupSet& a, const SpaceSet& s) const {
  if (!(a.group() == group_)) throw InputError("translating by a subset of a different group");
  std::vector<int> out;
  for (int g : a.elements())
    for (int x : s) out.push_back(apply(g, x));
  return SpaceSet(std::move(out));
}

Rational FiniteAction::measure(const SpaceSet& s) const {
  Rational m;
  for (int x : s) m += weights_[x];
  return m;
}

SpaceSet FiniteAction::all() const {
  std::vector<int> m(ids_.size());
  for (int i = 0; i < static_cast<int>(m.size()); ++i) m[i] = i;
  return SpaceSet(std::move(m));
}

SpaceSet FiniteAction::set_of(const std::vector<std::string>& ids) const {
  std::vector<int> m;
  for (const auto& id : ids) {
    auto a = find_atom(id);
    if (!a) throw InputError("unknown atom '" + id + "'");
    m.push_back(*a);
  }
  return SpaceSet(std::move(m));
}

std::vector<std::string> FiniteAction::ids(const SpaceSet& s) const {
  std::vector<std::string> out;
  for (int x : s) out.push_back(ids_[x]);
  return out;
}

ActionSpec FiniteAction::spec() const {
  ActionSpec s;
  s.moduli = group_.moduli();
  for (std::size_t i = 0; i < ids_.size(); ++i) s.atoms.emplace_back(ids_[i], weights_[i]);
  for (const auto& g : generators_) {
    std::map<std::string, std::string> perm;
    for (std::size_t x = 0; x < g.size(); ++x) perm[ids_[x]] = ids_[g[x]];
    s.generators.push_back(std::move(perm));
  }
  return s;
}

FiniteAction translation_action(const FinAbGroup& group) {
  ActionSpec s;
  s.moduli = group.moduli();
  Rational w(BigInt(1), BigInt(group.order()));
  for (int e = 0; e < group.order(); ++e) s.atoms.emplace_back(group.element_id(e), w);
  for (int i = 0; i < group.rank(); ++i) {
    std::map<std::string, std::string> perm;
    int g = group.generator(i);
    for (int e = 0; e < group.order(); ++e) perm[group.element_id(e)] = group.element_id(group.add(e, g));
    s.generators.push_back(std::move(perm));
  }
  return FiniteAction(s);
}

namespace {

std::string pair_id(const std::string& x, const std::string& y) { return "(" + x + "," + y + ")"; }

}  // namespace

FiniteAction product_action(const FiniteAction& a, const FiniteAction& b) {
  ActionSpec sa = a.spec(), sb = b.spec();
  ActionSpec s;
  s.moduli = sa.moduli;
  s.moduli.insert(s.moduli.end(), sb.moduli.begin(), sb.moduli.end());
  for (const auto& [x, wx] : sa.atoms)
    for (const auto& [y, wy] : sb.atoms) s.atoms.emplace_back(pair_id(x, y), wx * wy);
  for (const auto& g : sa.generators) {
    std::map<std::string, std::string> perm;
    for (const auto& [x, _] : sa.atoms)
      for (const auto& [y, __] : sb.atoms) perm[pair_id(x, y)] = pair_id(g.at(x), y);
    s.generators.push_back(std::move(perm));
  }
  for (const auto& g : sb.generators) {
    std::map<std::string, std::string> perm;
    for (const auto& [x, _] : sa.atoms)
      for (const auto& [y, __] : sb.atoms) perm[pair_id(x, y)] = pair_id(x, g.at(y));
    s.generators.push_back(std::move(perm));
  }
  return FiniteAction(s);
}

int product_atom(const FiniteAction& product, const FiniteAction& a, int x, const FiniteAction& b, int y) {
  auto id = product.find_atom(pair_id(a.atom_id(x), b.atom_id(y)));
  if (!id) throw InputError("atom pair not found in product action");
  return *id;
}

SpaceSet product_space_set(const FiniteAction& product, const FiniteAction& a, const SpaceSet& s,
                           const FiniteAction& b, const SpaceSet& t) {
  std::vector<int> out;
  for (int x : s)
    for (int y : t) out.push_back(product_atom(product, a, x, b, y));
  return SpaceSet(std::move(out));
}

LayeredGraph orbit_graph(const FiniteAction& act, const GroupSet& a, const SpaceSet& y, int h) {
  if (a.empty()) throw InputError("orbit graph needs a nonempty A");
  if (y.empty()) throw InputError("orbit graph needs a nonempty Y");
  if (h < 1) throw InputError("orbit graph needs h >= 1");
  if (!(a.group() == act.group())) throw InputError("orbit graph: A is not a subset of the acting group");
  auto vid = [&](int k, int x) { return std::to_string(k) + ":" + act.atom_id(x); };
  std::vector<std::string> labels;
  for (int g : a.elements()) labels.push_back(a.group().element_id(g));
  std::vector<Vertex> vertices;
  std::vector<EdgeSpec> edges;
  SpaceSet layer = y;
  for (int k = 0; k <= h; ++k) {
    for (int x : layer) vertices.push_back({vid(k, x), k, act.weight(x)});
    if (k == h) break;
    for (int x : layer)
      for (int g : a.elements()) edges.push_back({vid(k, x), vid(k + 1, act.apply(g, x)), a.group().element_id(g)});
    layer = act.translate(a, layer);
  }
  return LayeredGraph(h, std::move(labels), std::move(vertices), edges);
}

// ---------------------------------------------------------------- ratios

RatioProblem action_problem(const FiniteAction& act, const GroupSet& a, const SpaceSet& b,
                            const SpaceSet& excluded) {
  if (b.empty()) throw InputError("magnification ratio needs a nonempty B");
  if (!(a.group() == act.group())) throw InputError("A is not a subset of the acting group");
  RatioProblem p;
  for (int x = 0; x < static_cast<int>(act.atom_count()); ++x)
    p.right.push_back(excluded.contains(x) ? Rational(0) : act.weight(x));
  for (int x : b) {
    if (x < 0 || x >= static_cast<int>(act.atom_count())) throw InputError("B contains an unknown atom");
    p.left.push_back(act.weight(x));
    std::vector<int> t;
    for (int g : a.elements()) t.push_back(act.apply(g, x));
    std::sort(t.begin(), t.end());
    t.erase(std::unique(t.begin(), t.end()), t.end());
    p.targets.push_back(std::move(t));
  }
  return p;
}

namespace {

ActionRatio solve(const RatioProblem& p, const SpaceSet& b, RatioMethod method) {
  bool brute = method == RatioMethod::brute ||
               (method == RatioMethod::automatic && p.left.size() <= kDefaultBruteLimit);
  RatioSolution sol = brute ? minimize_ratio_brute(p) : minimize_ratio_mincut(p);
  std::vector<int> w;
  for (int i : sol.witness) w.push_back(b.members()[i]);
  return {sol.value, SpaceSet(std::move(w)), brute ? Method::brute : Method::mincut};
}

// A^{i} E with A^0 E = E.
SpaceSet power_translate(const FiniteAction& act, const GroupSet& a, const SpaceSet& e, int i) {
  if (i == 0 || e.empty()) return e;
  return act.translate(iterate(a, i), e);
}

void check_orders(int j, int k) {
  if (j < 1 || k < j) throw InputError("need 0 < j <= k");
}

}  // namespace

ActionRatio c(const FiniteAction& act, const GroupSet& a, const SpaceSet& b, RatioMethod method) {
  return solve(action_problem(act, a, b), b, method);
}

ActionRatio c_delta(const FiniteAction& act, const GroupSet& a, const SpaceSet& b, const Rational& delta) {
  if (delta.sign() <= 0 || delta > Rational(1)) throw InputError("delta must lie in (0, 1]");
  auto p = action_problem(act, a, b);
  auto sol = minimize_ratio_brute(p, delta);
  std::vector<int> w;
  for (int i : sol.witness) w.push_back(b.members()[i]);
  return {sol.value, SpaceSet(std::move(w)), Method::brute};
}

ActionRatio c_restricted(const FiniteAction& act, const GroupSet& a, const SpaceSet& b, const SpaceSet& e,
                         RatioMethod method) {
  return solve(action_problem(act, a, b, e), b, method);
}

VerificationReport verify_dyn_plunnecke(const FiniteAction& act, const GroupSet& a, const SpaceSet& b, int j,
                                        int k, const std::string& instance) {
  check_orders(j, k);
  auto cj = c(act, iterate(a, j), b);
  auto ck = c(act, iterate(a, k), b);
  auto r = make_report(instance, "thm-4.2", cj.value.pow(k), Relation::greater_equal, ck.value.pow(j));
  r.witness = act.ids(ck.witness);
  r.details = {{"j", j}, {"k", k}, {"c_j", cj.value.str()}, {"c_k", ck.value.str()}};
  return r;
}

LayeredGraph restricted_orbit_graph(const FiniteAction& act, const GroupSet& a, const SpaceSet& b,
                                    const SpaceSet& e, int k) {
  LayeredGraph full = orbit_graph(act, a, b, k);
  std::vector<int> keep;
  for (int v : full.layer(0)) keep.push_back(v);
  for (int i = 1; i <= k; ++i) {
    SpaceSet allowed = act.translate(iterate(a, i), b).minus(power_translate(act, a, e, i - 1));
    for (int x : allowed) keep.push_back(*full.find_vertex(std::to_string(i) + ":" + act.atom_id(x)));
  }
  return induced_subgraph(full, VertexSet(std::move(keep)));
}

VerificationReport verify_restricted_plunnecke(const FiniteAction& act, const GroupSet& a, const SpaceSet& b,
                                               const SpaceSet& e, int j, int k, const std::string& instance) {
  check_orders(j, k);
  auto cj = c_restricted(act, iterate(a, j), b, power_translate(act, a, e, j - 1));
  auto ck = c_restricted(act, iterate(a, k), b, power_translate(act, a, e, k - 1));
  bool commutative = is_commutative(restricted_orbit_graph(act, a, b, e, k)).holds;
  auto r = make_report(instance, "thm-4.3", cj.value.pow(k), Relation::greater_equal, ck.value.pow(j));
  r.holds = r.holds && commutative;
  r.witness = act.ids(ck.witness);
  r.details = {{"j", j},
               {"k", k},
               {"c_j", cj.value.str()},
               {"c_k", ck.value.str()},
               {"restricted_graph_commutative", commutative}};
  return r;
}

bool heavy_hypothesis(const FiniteAction& act, const GroupSet& a, const SpaceSet& b, const SpaceSet& sub,
                      const Rational& delta, int j, int k) {
  if (sub.empty()) return false;
  const unsigned uj = static_cast<unsigned>(j), uk = static_cast<unsigned>(k);
  Rational lhs = act.measure(act.translate(iterate(a, k), sub)).pow(uj) * act.measure(b).pow(uk);
  Rational rhs = (Rational(1) - delta).pow(uk).reciprocal() *
                 act.measure(act.translate(iterate(a, j), b)).pow(uk) * act.measure(sub).pow(uj);
  return lhs <= rhs;
}

SpaceSet heavy_subset(const FiniteAction& act, const GroupSet& a, const SpaceSet& b, const Rational& delta, int j,
                      int k) {
  if (delta.sign() <= 0 || delta >= Rational(1)) throw InputError("heavy subset needs 0 < delta < 1");
  check_orders(j, k);
  if (b.empty()) throw InputError("heavy subset needs a nonempty B");
  GroupSet ak = iterate(a, k);
  Rational target = delta * act.measure(b);
  SpaceSet chosen = c(act, ak, b).witness;
  while (act.measure(chosen) < target) {
    SpaceSet rest = b.minus(chosen);
    chosen = chosen.unite(c(act, ak, rest).witness);
  }
  return chosen;
}

VerificationReport verify_heavy_subset(const FiniteAction& act, const GroupSet& a, const SpaceSet& b,
                                       const Rational& delta, int j, int k, const std::string& instance) {
  SpaceSet sub = heavy_subset(act, a, b, delta, j, k);
  bool heavy = act.measure(sub) >= delta * act.measure(b);
  bool hypothesis = heavy_hypothesis(act, a, b, sub, delta, j, k);
  auto cd = c_delta(act, iterate(a, k), b, delta);
  const unsigned uj = static_cast<unsigned>(j), uk = static_cast<unsigned>(k);
  Rational growth = act.measure(act.translate(iterate(a, j), b)) / act.measure(b);
  Rational rhs = (Rational(1) - delta).pow(uk).reciprocal() * growth.pow(uk);
  auto r = make_report(instance, "lemma-5.4", cd.value.pow(uj), Relation::less_equal, rhs);
  r.holds = r.holds && heavy && hypothesis;
  r.witness = act.ids(sub);
  r.details = {{"j", j},
               {"k", k},
               {"delta", delta.str()},
               {"c_delta", cd.value.str()},
               {"heavy_measure", act.measure(sub).str()},
               {"meets_threshold", heavy},
               {"hypothesis_holds", hypothesis}};
  return r;
}

VerificationReport verify_multiplicativity(const FiniteAction& act, const FiniteAction& act2, const GroupSet& a,
                                           const GroupSet& a2, const SpaceSet& b, const SpaceSet& b2,
                                           const std::string& instance, std::size_t limit) {
  if (b.empty() || b2.empty()) throw InputError("multiplicativity needs nonempty B and B'");
  if (b.size() * b2.size() > limit)
    throw InputError("|B x B'| = " + std::to_string(b.size() * b2.size()) + " exceeds the brute-force limit " +
                     std::to_string(limit));
  auto c1 = c(act, a, b);
  auto c2 = c(act2, a2, b2);
  FiniteAction prod = product_action(act, act2);
  GroupSet ap = cartesian(a, a2);
  SpaceSet bp = product_space_set(prod, act, b, act2, b2);
  auto p = action_problem(prod, ap, bp);
  auto sol = minimize_ratio_brute(p, Rational(0), limit);
  auto r = make_report(instance, "lemma-6.1", c1.value * c2.value, Relation::equal, sol.value);
  std::vector<int> w;
  for (int i : sol.witness) w.push_back(bp.members()[i]);
  r.witness = prod.ids(SpaceSet(std::move(w)));
  r.details = {{"c", c1.value.str()}, {"c_prime", c2.value.str()}, {"c_product", sol.value.str()}};
  return r;
}

VerificationReport verify_different_summands(const FiniteAction& act, const std::vector<GroupSet>& a_list,
                                             const SpaceSet& b, const std::string& instance) {
  if (a_list.empty()) throw InputError("different summands needs k >= 1");
  if (b.empty()) throw InputError("different summands needs a nonempty B");
  GroupSet sum = a_list.front();
  for (std::size_t i = 1; i < a_list.size(); ++i) sum = product_set(sum, a_list[i]);
  auto lhs = c(act, sum, b);
  Rational rhs(1);
  Json factors = Json::array();
  for (const auto& ai : a_list) {
    Rational f = act.measure(act.translate(ai, b)) / act.measure(b);
    factors.push_back(f.str());
    rhs *= f;
  }
  auto r = make_report(instance, "prop-6.2", lhs.value, Relation::less_equal, rhs);
  r.witness = act.ids(lhs.witness);
  r.details = {{"k", a_list.size()}, {"factors", factors}};
  return r;
}

}  // namespace plab
