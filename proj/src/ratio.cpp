#include "plab/ratio.hpp"

#include <set>
#include <stdexcept>

#include "plab/errors.hpp"
#include "plab/maxflow.hpp"

namespace plab {

namespace {

void check_problem(const RatioProblem& p) {
  if (p.left.empty()) throw InputError("ratio problem with no candidates");
  if (p.targets.size() != p.left.size()) throw InputError("ratio problem: targets/left size mismatch");
  for (const auto& w : p.left)
    if (w.sign() <= 0) throw InputError("ratio problem: candidate weights must be positive");
  for (const auto& w : p.right)
    if (w.sign() < 0) throw InputError("ratio problem: target weights must be non-negative");
  for (const auto& ts : p.targets)
    for (int t : ts)
      if (t < 0 || t >= static_cast<int>(p.right.size()))
        throw InputError("ratio problem: target index out of range");
}

std::vector<int> mask_members(std::uint64_t mask) {
  std::vector<int> out;
  for (int i = 0; mask; ++i, mask >>= 1)
    if (mask & 1) out.push_back(i);
  return out;
}

// Scaled-integer view used by the cut route.
template <typename Cap>
struct CutSolver {
  std::vector<Cap> wl, wr;
  const std::vector<std::vector<int>>& targets;
  int n, m;

  CutSolver(const kernels::ScanInput& s, const std::vector<std::vector<int>>& t)
      : targets(t), n(static_cast<int>(s.left.size())), m(static_cast<int>(s.right.size())) {
    for (const auto& v : s.left) wl.push_back(static_cast<Cap>(v));
    for (const auto& v : s.right) wr.push_back(static_cast<Cap>(v));
  }

  std::pair<Cap, Cap> sums(const std::vector<char>& in) const {
    std::vector<char> covered(m, 0);
    Cap l(0), r(0);
    for (int i = 0; i < n; ++i) {
      if (!in[i]) continue;
      l += wl[i];
      for (int t : targets[i]) covered[t] = 1;
    }
    for (int t = 0; t < m; ++t)
      if (covered[t]) r += wr[t];
    return {r, l};
  }

  // min over S (forced ⊆ S, S ∩ excluded = ∅) of q*right(N(S)) - p*left(S),
  // together with the inclusion-minimal minimiser.
  std::pair<Cap, std::vector<char>> minimise(const Cap& p, const Cap& q, const std::vector<char>& forced,
                                             const std::vector<char>& excluded) const {
    const int source = n + m, sink = n + m + 1;
    Cap inf(1), base(0);
    for (int i = 0; i < n; ++i)
      if (!excluded[i]) {
        inf += p * wl[i];
        base += p * wl[i];
      }
    for (int t = 0; t < m; ++t) inf += q * wr[t];
    MaxFlow<Cap> net(n + m + 2);
    for (int i = 0; i < n; ++i) {
      if (excluded[i]) continue;
      net.add_edge(source, i, forced[i] ? inf : p * wl[i]);
      for (int t : targets[i]) net.add_edge(i, n + t, inf);
    }
    for (int t = 0; t < m; ++t) net.add_edge(n + t, sink, q * wr[t]);
    Cap cut = net.solve(source, sink);
    auto side = net.source_side(source);
    std::vector<char> chosen(n, 0);
    for (int i = 0; i < n; ++i) chosen[i] = side[i] && !excluded[i];
    return {cut - base, chosen};
  }

  RatioSolution solve() const {
    RatioSolution sol;
    for (int i = 0; i < n; ++i) {
      Cap r(0);
      for (int t : targets[i]) r += wr[t];
      if (r == 0) {
        sol.value = Rational(0);
        sol.witness = {i};
        return sol;
      }
    }
    std::vector<char> none(n, 0), current(n, 1);
    auto [p, q] = sums(current);
    const long long cap = static_cast<long long>(n) * std::max(m, 1) + 1;
    while (true) {
      if (++sol.iterations > cap)
        throw std::runtime_error("Dinkelbach iteration exceeded |left|*|right| rounds");
      auto [value, chosen] = minimise(p, q, none, none);
      if (value == 0) break;
      if (value > 0) throw std::logic_error("Dinkelbach: positive subproblem minimum");
      auto [np, nq] = sums(chosen);
      p = np;
      q = nq;
    }
    sol.value = Rational(BigInt(p), BigInt(q));

    // Lexicographically smallest optimal set, decided one index at a time.
    std::vector<char> forced(n, 0), excluded(n, 0);
    bool any = false;
    auto optimal = [&](const std::vector<char>& in) {
      auto [r, l] = sums(in);
      return r * q == p * l;
    };
    for (int y = 0; y < n; ++y) {
      if (any && optimal(forced)) break;
      forced[y] = 1;
      if (minimise(p, q, forced, excluded).first == 0) {
        any = true;
      } else {
        forced[y] = 0;
        excluded[y] = 1;
      }
    }
    if (!any || !optimal(forced)) throw std::logic_error("mincut tie-break found no optimal set");
    for (int i = 0; i < n; ++i)
      if (forced[i]) sol.witness.push_back(i);
    return sol;
  }
};

}  // namespace

kernels::ScanInput scale_problem(const RatioProblem& p, const Rational& min_fraction) {
  BigInt scale = 1;
  for (const auto& w : p.left) scale = common_denominator(scale, w.denominator());
  for (const auto& w : p.right) scale = common_denominator(scale, w.denominator());
  kernels::ScanInput s;
  BigInt total = 0;
  for (const auto& w : p.left) {
    s.left.push_back(w.numerator() * (scale / w.denominator()));
    total += s.left.back();
  }
  for (const auto& w : p.right) s.right.push_back(w.numerator() * (scale / w.denominator()));
  s.targets = p.targets;
  if (min_fraction.sign() > 0) {
    s.floor_num = min_fraction.numerator() * total;
    s.floor_den = min_fraction.denominator();
  }
  return s;
}

RatioSolution minimize_ratio_brute(const RatioProblem& p, const Rational& min_fraction, std::size_t limit,
                                   bool parallel) {
  check_problem(p);
  if (p.left.size() > limit)
    throw InputError("brute-force ratio over " + std::to_string(p.left.size()) +
                     " candidates exceeds the limit of " + std::to_string(limit) +
                     "; use the mincut method");
  auto scaled = scale_problem(p, min_fraction);
  auto r = parallel ? kernels::scan_parallel(scaled) : kernels::scan_serial(scaled);
  if (!r.found) throw InputError("no subset meets the admission threshold");
  RatioSolution sol;
  sol.value = Rational(r.num, r.den);
  sol.witness = mask_members(r.mask);
  return sol;
}

RatioSolution minimize_ratio_mincut(const RatioProblem& p) {
  check_problem(p);
  auto scaled = scale_problem(p);
  // Capacities reach total^2; the 64-bit path needs both totals below 2^29.
  const BigInt limit = BigInt(1) << 29;
  BigInt l = 0, r = 0;
  for (const auto& v : scaled.left) l += v;
  for (const auto& v : scaled.right) r += v;
  if (l < limit && r < limit) return CutSolver<std::int64_t>(scaled, p.targets).solve();
  return CutSolver<BigInt>(scaled, p.targets).solve();
}

Rational ratio_of(const RatioProblem& p, const std::vector<int>& subset) {
  if (subset.empty()) throw InputError("ratio of an empty subset");
  std::set<int> covered;
  Rational l;
  for (int i : subset) {
    l += p.left.at(i);
    covered.insert(p.targets.at(i).begin(), p.targets.at(i).end());
  }
  Rational r;
  for (int t : covered) r += p.right.at(t);
  return r / l;
}

}  // namespace plab
