#include "plab/magnification.hpp"

#include <queue>

#include "plab/commutativity.hpp"
#include "plab/errors.hpp"
#include "plab/maxflow.hpp"

namespace plab {

namespace {

void check_order(const LayeredGraph& g, int j) {
  if (j < 1 || j > g.height())
    throw InputError("magnification order " + std::to_string(j) + " outside 1.." + std::to_string(g.height()));
}

MagnificationResult lift(const LayeredGraph& g, const RatioSolution& sol, Method method) {
  auto bottom = g.layer(0).members();
  std::vector<int> w;
  for (int i : sol.witness) w.push_back(bottom[i]);
  return {sol.value, VertexSet(std::move(w)), method};
}

Json commutativity_payload(const LayeredGraph& g, const CommutativityVerdict& v) {
  Json j;
  j["commutative"] = false;
  j["side"] = v.failed_in_dual ? "dual" : "graph";
  if (v.failing_edge)
    j["failing_edge"] = {{"tail", v.failing_edge->tail}, {"head", v.failing_edge->head},
                         {"label", v.failing_edge->label}};
  (void)g;
  return j;
}

void require_commutative(const LayeredGraph& g, const char* theorem) {
  auto verdict = is_commutative(g);
  if (!verdict.holds)
    throw HypothesisError(std::string(theorem) + " requires a commutative graph",
                          commutativity_payload(g, verdict).dump());
}

// Edges between consecutive layers, tails in layers below h only.
bool valid_layer(const LayeredGraph& g, int v) {
  auto k = g.vertex(v).layer;
  return k >= 0 && k <= g.height();
}

struct SplitNetwork {
  BigInt m0;                 // minimum scaled weight
  std::vector<BigInt> cap;   // scaled vertex capacities
  BigInt scale;              // true weight = scaled / scale
};

BigInt scaled_capacity_sum(const std::vector<BigInt>& cap) {
  BigInt s = 0;
  for (const auto& c : cap) s += c;
  return s;
}

// Max flow of the vertex-split network, with vertex i removed when
// in_cut[i] and made uncuttable when kept[i].
BigInt split_flow(const LayeredGraph& g, const std::vector<BigInt>& cap, const std::vector<char>& in_cut,
                  const std::vector<char>& kept, std::vector<char>* cut_out = nullptr) {
  const int n = static_cast<int>(g.vertex_count());
  const int source = 2 * n, sink = 2 * n + 1;
  BigInt inf = scaled_capacity_sum(cap) + 1;
  MaxFlow<BigInt> net(2 * n + 2);
  for (int v = 0; v < n; ++v) {
    if (!valid_layer(g, v)) continue;
    BigInt c = in_cut[v] ? BigInt(0) : (kept[v] ? inf : cap[v]);
    net.add_edge(2 * v, 2 * v + 1, c);
    if (g.vertex(v).layer == 0) net.add_edge(source, 2 * v, inf);
    if (g.vertex(v).layer == g.height()) net.add_edge(2 * v + 1, sink, inf);
  }
  for (const auto& e : g.edges()) net.add_edge(2 * e.tail + 1, 2 * e.head, inf);
  BigInt f = net.solve(source, sink);
  if (cut_out) {
    auto side = net.source_side(source);
    cut_out->assign(n, 0);
    for (int v = 0; v < n; ++v) (*cut_out)[v] = side[2 * v] && !side[2 * v + 1];
  }
  return f;
}

}  // namespace

RatioProblem magnification_problem(const LayeredGraph& g, int j) {
  check_order(g, j);
  VertexSet bottom = g.layer(0);
  if (bottom.empty()) throw InputError("magnification ratio of a graph with empty layer 0");
  VertexSet top = g.layer(j);
  RatioProblem p;
  for (int t : top) p.right.push_back(g.vertex(t).weight);
  for (int v : bottom) {
    p.left.push_back(g.vertex(v).weight);
    std::vector<int> targets;
    for (int u : iterated_image(g, VertexSet{v}, j)) {
      auto it = std::lower_bound(top.begin(), top.end(), u);
      if (it != top.end() && *it == u) targets.push_back(static_cast<int>(it - top.begin()));
    }
    p.targets.push_back(std::move(targets));
  }
  return p;
}

MagnificationResult magnification_bruteforce(const LayeredGraph& g, int j, std::size_t limit, bool parallel) {
  require_valid(g);
  auto p = magnification_problem(g, j);
  return lift(g, minimize_ratio_brute(p, Rational(0), limit, parallel), Method::brute);
}

MagnificationResult magnification_mincut(const LayeredGraph& g, int j) {
  require_valid(g);
  auto p = magnification_problem(g, j);
  return lift(g, minimize_ratio_mincut(p), Method::mincut);
}

MagnificationResult magnification(const LayeredGraph& g, int j, std::size_t limit) {
  if (g.layer(0).size() <= limit) return magnification_bruteforce(g, j, limit);
  return magnification_mincut(g, j);
}

Rational cut_weight(const LayeredGraph& g, const VertexSet& s, const Rational& c) {
  if (c.sign() <= 0) throw InputError("cut weight constant C must be positive");
  Rational inv = c.reciprocal();
  Rational total;
  for (int v : s) {
    auto k = g.vertex(v).layer;
    if (k < 0) throw InputError("negative layer in cut weight");
    total += inv.pow(static_cast<unsigned>(k)) * g.vertex(v).weight;
  }
  return total;
}

bool is_cutset(const LayeredGraph& g, const VertexSet& s) {
  std::vector<char> seen(g.vertex_count(), 0);
  std::queue<int> q;
  for (int v : g.layer(0))
    if (!s.contains(v)) {
      seen[v] = 1;
      q.push(v);
    }
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    if (g.vertex(v).layer == g.height()) return false;
    for (int e : g.out_edges(v)) {
      int u = g.edges()[e].head;
      if (!seen[u] && !s.contains(u)) {
        seen[u] = 1;
        q.push(u);
      }
    }
  }
  return true;
}

CutsetReport min_weight_cutset(const LayeredGraph& g, const Rational& c) {
  require_valid(g);
  if (c.sign() <= 0) throw InputError("cut weight constant C must be positive");
  const int n = static_cast<int>(g.vertex_count());
  const unsigned h = static_cast<unsigned>(g.height());
  // Capacity of v: C^{-k} mu(v) scaled by p^h * L, i.e. q^k p^{h-k} W_v.
  const BigInt p = c.numerator(), q = c.denominator();
  BigInt L = 1;
  for (const auto& v : g.vertices()) L = common_denominator(L, v.weight.denominator());
  std::vector<BigInt> cap(n);
  for (int v = 0; v < n; ++v) {
    const auto& vx = g.vertex(v);
    unsigned k = static_cast<unsigned>(vx.layer);
    BigInt w = vx.weight.numerator() * (L / vx.weight.denominator());
    cap[v] = boost::multiprecision::pow(q, k) * boost::multiprecision::pow(p, h - k) * w;
  }
  const BigInt scale = boost::multiprecision::pow(p, h) * L;

  std::vector<char> none(n, 0);
  const BigInt m0 = split_flow(g, cap, none, none);

  std::vector<char> forced(n, 0), excluded(n, 0);
  auto forced_set = [&] {
    std::vector<int> m;
    for (int v = 0; v < n; ++v)
      if (forced[v]) m.push_back(v);
    return VertexSet(std::move(m));
  };
  auto forced_cost = [&] {
    BigInt s = 0;
    for (int v = 0; v < n; ++v)
      if (forced[v]) s += cap[v];
    return s;
  };
  for (int y = 0; y < n; ++y) {
    if (forced_cost() == m0 && is_cutset(g, forced_set())) break;
    forced[y] = 1;
    if (split_flow(g, cap, forced, excluded) + forced_cost() != m0) {
      forced[y] = 0;
      excluded[y] = 1;
    }
  }
  VertexSet cutset = forced_set();
  if (forced_cost() != m0 || !is_cutset(g, cutset))
    throw std::logic_error("min_weight_cutset tie-break did not reach an optimal cutset");
  return {cutset, Rational(m0, scale), c, true};
}

VertexSet cutset_push(const LayeredGraph& g, const VertexSet& s, const Rational& c, int j) {
  require_valid(g);
  if (c.sign() <= 0) throw InputError("cut weight constant C must be positive");
  const int h = g.height();
  if (j < 1 || j > h - 1) throw InputError("cutset push needs 1 <= j <= h-1");
  for (int v : s) {
    auto k = g.vertex(v).layer;
    if (k > j && k != h)
      throw InputError("cutset push: " + g.vertex(v).id + " lies outside V_0..V_j and V_h");
  }
  if (!is_cutset(g, s)) throw InputError("cutset push: input is not a cutset");

  std::vector<char> seen(g.vertex_count(), 0);
  std::queue<int> q;
  for (int v : g.layer(0))
    if (!s.contains(v)) {
      seen[v] = 1;
      q.push(v);
    }
  std::vector<int> u0;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    if (g.vertex(v).layer == j - 1) {
      u0.push_back(v);
      continue;
    }
    for (int e : g.out_edges(v)) {
      int u = g.edges()[e].head;
      if (!seen[u] && !s.contains(u)) {
        seen[u] = 1;
        q.push(u);
      }
    }
  }
  VertexSet pushed = s.unite(VertexSet(std::move(u0)));
  return pushed.minus(s.intersect(g.layer(j)));
}

Rational push_slack(std::size_t labels, const Rational& c, const Rational& eps) {
  Rational a2 = Rational(static_cast<long long>(labels * labels));
  return eps + Rational(4) * a2 * c * eps + Rational(4) * a2 * eps;
}

VerificationReport verify_graph_plunnecke(const LayeredGraph& g, const std::string& instance) {
  require_commutative(g, "thm-3.5");
  const int h = g.height();
  std::vector<MagnificationResult> d;
  for (int j = 1; j <= h; ++j) d.push_back(magnification(g, j));
  const Rational& dh = d.back().value;
  Json per_j = Json::array(), values = Json::array();
  int chosen = 1;
  bool all = true;
  for (int j = 1; j <= h; ++j) {
    Rational lhs = d[j - 1].value.pow(h), rhs = dh.pow(j);
    bool ok = lhs >= rhs;
    if (!ok && all) {
      all = false;
      chosen = j;
    }
    values.push_back(d[j - 1].value.str());
    per_j.push_back({{"j", j}, {"lhs", lhs.str()}, {"rhs", rhs.str()}, {"holds", ok}});
  }
  auto r = make_report(instance, "thm-3.5", d[chosen - 1].value.pow(h), Relation::greater_equal,
                       dh.pow(chosen));
  r.holds = all;
  r.witness = g.ids(d[chosen - 1].witness);
  r.details["h"] = h;
  r.details["j"] = chosen;
  r.details["D"] = values;
  r.details["per_j"] = per_j;
  return r;
}

VerificationReport verify_bottom_layer_minimal(const LayeredGraph& g, const Rational& c,
                                               const std::string& instance) {
  require_commutative(g, "cor-3.4");
  if (c.sign() <= 0) throw HypothesisError("cor-3.4 requires C > 0");
  const int h = g.height();
  Rational dh = magnification(g, h).value;
  if (c.pow(h) > dh)
    throw HypothesisError("cor-3.4 requires C^h <= D_h (C^h = " + c.pow(h).str() + ", D_h = " + dh.str() + ")");
  auto best = min_weight_cutset(g, c);
  auto r = make_report(instance, "cor-3.4", cut_weight(g, g.layer(0), c), Relation::equal, best.weight);
  r.witness = g.ids(best.cutset);
  r.details["C"] = c.str();
  r.details["D_h"] = dh.str();
  r.details["perfect_power"] = c.pow(h) == dh;
  return r;
}

VerificationReport verify_cutset_push(const LayeredGraph& g, const Rational& c, const std::string& instance) {
  require_commutative(g, "lemma-3.3");
  auto best = min_weight_cutset(g, c);
  VertexSet s = best.cutset;
  bool all = true;
  Json steps = Json::array();
  for (int j = g.height() - 1; j >= 1; --j) {
    s = cutset_push(g, s, c, j);
    Rational w = cut_weight(g, s, c);
    bool ok = is_cutset(g, s) && w == best.weight;
    all = all && ok;
    steps.push_back({{"j", j}, {"weight", w.str()}, {"cutset", is_cutset(g, s)}});
  }
  for (int v : s) {
    auto k = g.vertex(v).layer;
    if (k != 0 && k != g.height()) all = false;
  }
  auto r = make_report(instance, "lemma-3.3", cut_weight(g, s, c), Relation::equal, best.weight);
  r.holds = r.holds && all;
  r.witness = g.ids(s);
  r.details["C"] = c.str();
  r.details["steps"] = steps;
  return r;
}

Rational corollary_constant(const Rational& d_h, int h) {
  if (d_h.sign() <= 0) throw HypothesisError("corollary constant needs D_h > 0");
  Rational root;
  if (exact_root(d_h, static_cast<unsigned>(h), root)) return root;
  const BigInt base = boost::multiprecision::pow(BigInt(16), static_cast<unsigned>(h));
  BigInt scaled = (d_h.numerator() * base) / d_h.denominator();
  BigInt m = integer_root_floor(scaled, static_cast<unsigned>(h));
  if (m == 0) return d_h < Rational(1) ? d_h : Rational(1);
  return Rational(m, BigInt(16));
}

}  // namespace plab
