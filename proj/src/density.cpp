#include "plab/density.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "plab/errors.hpp"
#include "plab/kernels/window_scan.hpp"

namespace plab {

namespace {

constexpr long long kMaxCells = 1LL << 22;

long long mod(long long x, long long p) { return ((x % p) + p) % p; }

long long cell_count(const std::vector<long long>& period) {
  long long n = 1;
  for (long long p : period) {
    if (n > kMaxCells / p) throw InputError("period box too large");
    n *= p;
  }
  return n;
}

long long flatten(const Point& x, const std::vector<long long>& period) {
  long long f = 0;
  for (std::size_t i = 0; i < period.size(); ++i) f = f * period[i] + x[i];
  return f;
}

Point unflatten(long long f, const std::vector<long long>& period) {
  Point x(period.size());
  for (int i = static_cast<int>(period.size()) - 1; i >= 0; --i) {
    x[i] = f % period[i];
    f /= period[i];
  }
  return x;
}

void sort_unique(std::vector<Point>& pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

void require_same_dim(const PeriodicSet& a, const PeriodicSet& b) {
  if (a.dim() != b.dim())
    throw InputError("dimension mismatch: " + std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
}

}  // namespace

PeriodicSet::PeriodicSet(std::vector<long long> period, std::vector<Point> residues)
    : dim_(static_cast<int>(period.size())), finite_(false), period_(std::move(period)), points_(std::move(residues)) {
  if (dim_ < 1) throw InputError("periodic set needs dim >= 1");
  for (long long p : period_)
    if (p < 1) throw InputError("period entries must be positive");
  cell_count(period_);
  for (auto& r : points_) {
    if (static_cast<int>(r.size()) != dim_)
      throw InputError("residue of length " + std::to_string(r.size()) + " in a dim " + std::to_string(dim_) +
                       " set");
    for (int i = 0; i < dim_; ++i) r[i] = mod(r[i], period_[i]);
  }
  sort_unique(points_);
}

PeriodicSet PeriodicSet::finite(int dim, std::vector<Point> points) {
  if (dim < 1) throw InputError("finite set needs dim >= 1");
  for (const auto& x : points)
    if (static_cast<int>(x.size()) != dim) throw InputError("finite set point has the wrong dimension");
  PeriodicSet s;
  s.dim_ = dim;
  s.finite_ = true;
  s.period_.clear();
  s.points_ = std::move(points);
  sort_unique(s.points_);
  return s;
}

PeriodicSet PeriodicSet::whole(int dim) {
  return PeriodicSet(std::vector<long long>(dim, 1), {Point(dim, 0)});
}

bool PeriodicSet::contains(std::span<const long long> x) const {
  if (static_cast<int>(x.size()) != dim_) throw InputError("membership query has the wrong dimension");
  Point r(x.begin(), x.end());
  if (!finite_)
    for (int i = 0; i < dim_; ++i) r[i] = mod(r[i], period_[i]);
  return std::binary_search(points_.begin(), points_.end(), r);
}

PeriodicSet normalize(const PeriodicSet& a) {
  if (a.is_finite()) return a;
  const int d = a.dim();
  if (a.empty()) return PeriodicSet(std::vector<long long>(d, 1), {});
  std::vector<long long> period = a.period();
  std::vector<std::uint8_t> member(cell_count(period), 0);
  for (const auto& r : a.residues()) member[flatten(r, period)] = 1;
  std::vector<long long> minimal = period;
  for (int i = 0; i < d; ++i) {
    for (long long q = 1; q < period[i]; ++q) {
      if (period[i] % q) continue;
      bool invariant = true;
      for (const auto& r : a.residues()) {
        Point s = r;
        s[i] = (s[i] + q) % period[i];
        if (!member[flatten(s, period)]) {
          invariant = false;
          break;
        }
      }
      if (invariant) {
        minimal[i] = q;
        break;
      }
    }
  }
  return PeriodicSet(minimal, a.residues());
}

std::vector<Point> expand(const PeriodicSet& a, const std::vector<long long>& period) {
  if (a.is_finite()) throw InputError("cannot expand a finite set over a period");
  const int d = a.dim();
  if (static_cast<int>(period.size()) != d) throw InputError("expansion period has the wrong dimension");
  std::vector<long long> reps(d);
  for (int i = 0; i < d; ++i) {
    if (period[i] % a.period()[i]) throw InputError("expansion period is not a multiple of the set's period");
    reps[i] = period[i] / a.period()[i];
  }
  long long blocks = cell_count(reps);
  cell_count(period);
  std::vector<Point> out;
  for (const auto& r : a.residues())
    for (long long b = 0; b < blocks; ++b) {
      Point k = unflatten(b, reps);
      Point x(d);
      for (int i = 0; i < d; ++i) x[i] = r[i] + k[i] * a.period()[i];
      out.push_back(std::move(x));
    }
  sort_unique(out);
  return out;
}

PeriodicSet periodic_sumset(const PeriodicSet& a, const PeriodicSet& b) {
  require_same_dim(a, b);
  const int d = a.dim();
  if (a.is_finite() && b.is_finite()) {
    std::vector<Point> out;
    for (const auto& x : a.residues())
      for (const auto& y : b.residues()) {
        Point s(d);
        for (int i = 0; i < d; ++i) s[i] = x[i] + y[i];
        out.push_back(std::move(s));
      }
    return PeriodicSet::finite(d, std::move(out));
  }
  if (a.is_finite() != b.is_finite()) {
    const PeriodicSet& f = a.is_finite() ? a : b;
    const PeriodicSet& p = a.is_finite() ? b : a;
    std::vector<Point> out;
    for (const auto& x : f.residues())
      for (const auto& r : p.residues()) {
        Point s(d);
        for (int i = 0; i < d; ++i) s[i] = x[i] + r[i];
        out.push_back(std::move(s));
      }
    return normalize(PeriodicSet(p.period(), std::move(out)));
  }
  std::vector<long long> period(d);
  for (int i = 0; i < d; ++i) period[i] = std::lcm(a.period()[i], b.period()[i]);
  auto ra = expand(a, period), rb = expand(b, period);
  std::vector<std::uint8_t> member(cell_count(period), 0);
  Point s(d);
  for (const auto& x : ra)
    for (const auto& y : rb) {
      for (int i = 0; i < d; ++i) s[i] = (x[i] + y[i]) % period[i];
      member[flatten(s, period)] = 1;
    }
  std::vector<Point> out;
  for (long long f = 0; f < static_cast<long long>(member.size()); ++f)
    if (member[f]) out.push_back(unflatten(f, period));
  return normalize(PeriodicSet(period, std::move(out)));
}

PeriodicSet iterate_sumset(const PeriodicSet& a, int k) {
  if (k < 1) throw InputError("iterated sumset needs k >= 1");
  PeriodicSet r = normalize(a);
  for (int i = 1; i < k; ++i) r = periodic_sumset(r, a);
  return r;
}

Rational banach_density(const PeriodicSet& a) {
  if (a.is_finite()) return Rational(0);
  return Rational(BigInt(a.residues().size()), BigInt(cell_count(a.period())));
}

WindowEstimate window_scan(const Oracle& oracle, int dim, long long n, long long m, bool parallel) {
  if (dim < 1) throw InputError("window scan needs dim >= 1");
  if (n < 1) throw InputError("window side must be >= 1");
  if (m < n) throw InputError("search radius must be >= window side");
  kernels::WindowGrid grid;
  grid.dim = dim;
  grid.side = 2 * m + 1;
  long long cells = 1;
  for (int i = 0; i < dim; ++i) {
    if (cells > (1LL << 26) / grid.side) throw InputError("window scan grid too large");
    cells *= grid.side;
  }
  grid.cells.resize(cells);
  std::vector<long long> side(dim, grid.side);
  Point x(dim);
  for (long long f = 0; f < cells; ++f) {
    Point g = unflatten(f, side);
    for (int i = 0; i < dim; ++i) x[i] = g[i] - m;
    grid.cells[f] = oracle(x) ? 1 : 0;
  }
  auto counts = parallel ? kernels::window_scan_parallel(grid, n) : kernels::window_scan_serial(grid, n);
  BigInt volume = 1;
  for (int i = 0; i < dim; ++i) volume *= n;
  return {Rational(BigInt(counts.max_count), volume), Rational(BigInt(counts.min_count), volume)};
}

VerificationReport verify_density_plunnecke(const PeriodicSet& a, const PeriodicSet& b, int j, int k,
                                            const std::string& instance) {
  require_same_dim(a, b);
  if (j < 1 || k <= j) throw InputError("need 0 < j < k");
  PeriodicSet ajb = periodic_sumset(iterate_sumset(a, j), b);
  PeriodicSet ak = iterate_sumset(a, k);
  Rational d_ajb = banach_density(ajb), d_ak = banach_density(ak), d_b = banach_density(b);
  const unsigned uj = static_cast<unsigned>(j), uk = static_cast<unsigned>(k);
  auto r = make_report(instance, "thm-1.3", d_ajb.pow(uk), Relation::greater_equal,
                       d_ak.pow(uj) * d_b.pow(uk - uj));
  r.details = {{"j", j}, {"k", k}, {"d_AjB", d_ajb.str()}, {"d_Ak", d_ak.str()}, {"d_B", d_b.str()}};
  return r;
}

VerificationReport verify_density_summands(const std::vector<PeriodicSet>& a_list, const PeriodicSet& b,
                                           const std::string& instance) {
  if (a_list.empty()) throw InputError("need k >= 1 summands");
  for (const auto& a : a_list) require_same_dim(a, b);
  Rational d_b = banach_density(b);
  if (d_b.is_zero()) throw HypothesisError("d(B) = 0: the summand bound needs B of positive density");
  PeriodicSet sum = a_list.front();
  for (std::size_t i = 1; i < a_list.size(); ++i) sum = periodic_sumset(sum, a_list[i]);
  Rational rhs(1);
  Json factors = Json::array();
  for (const auto& a : a_list) {
    Rational f = banach_density(periodic_sumset(a, b));
    factors.push_back(f.str());
    rhs *= f;
  }
  Rational d_sum = banach_density(sum);
  auto r = make_report(instance, "thm-1.4", d_sum * d_b.pow(static_cast<unsigned>(a_list.size() - 1)),
                       Relation::less_equal, rhs);
  r.details = {{"k", a_list.size()}, {"d_sum", d_sum.str()}, {"d_B", d_b.str()}, {"factors", factors}};
  return r;
}

// ---------------------------------------------------------------- correspondence

Rational ShiftSystem::measure(const std::vector<long long>& points) const {
  return point_mass * Rational(static_cast<long long>(points.size()));
}

std::vector<long long> ShiftSystem::translate(const PeriodicSet& a0, const std::vector<long long>& points) const {
  if (a0.dim() != 1) throw InputError("correspondence acts by subsets of Z");
  std::vector<long long> shifts;
  if (a0.is_finite()) {
    for (const auto& x : a0.residues()) shifts.push_back(mod(x[0], period));
  } else {
    long long l = std::lcm(a0.period()[0], period);
    for (const auto& x : expand(a0, {l})) shifts.push_back(x[0] % period);
  }
  std::set<long long> out;
  for (long long s : shifts)
    for (long long t : points) out.insert((t + s) % period);
  return {out.begin(), out.end()};
}

FiniteAction ShiftSystem::as_action() const { return translation_action(FinAbGroup({static_cast<int>(period)})); }

ShiftSystem correspondence_system(const PeriodicSet& b) {
  if (b.dim() != 1) throw InputError("correspondence systems are built for subsets of Z only");
  if (b.is_finite()) throw InputError("correspondence needs a periodic B");
  if (b.empty()) throw HypothesisError("correspondence needs a nonempty B");
  PeriodicSet nb = normalize(b);
  ShiftSystem sys;
  sys.period = nb.period()[0];
  if (sys.period > (1 << 20)) throw InputError("period too large for a correspondence system");
  sys.point_mass = Rational(BigInt(1), BigInt(sys.period));
  std::string word(sys.period, '0');
  for (const auto& r : nb.residues()) word[r[0]] = '1';
  for (long long t = 0; t < sys.period; ++t) {
    sys.words.push_back(word.substr(t) + word.substr(0, t));
    if (word[t] == '1') sys.clopen.push_back(t);
  }
  return sys;
}

VerificationReport verify_correspondence(const PeriodicSet& b, const PeriodicSet& a0, const std::string& instance) {
  require_same_dim(a0, b);
  ShiftSystem sys = correspondence_system(b);
  Rational mu_b = sys.measure(sys.clopen);
  Rational d_b = banach_density(b);
  auto moved = sys.translate(a0, sys.clopen);
  Rational mu_a0b = sys.measure(moved);
  Rational d_a0b = banach_density(periodic_sumset(a0, b));
  Rational d_a0 = banach_density(a0);

  // Same quantity through the translation action of Z/p.
  FiniteAction act = sys.as_action();
  std::vector<int> shifts;
  for (long long s : sys.translate(a0, {0})) shifts.push_back(static_cast<int>(s));
  std::vector<std::string> clopen_ids;
  for (long long t : sys.clopen) clopen_ids.push_back(std::to_string(t));
  Rational mu_action = act.measure(act.translate(GroupSet(act.group(), shifts), act.set_of(clopen_ids)));

  bool clopen_ok = mu_b == d_b;
  bool lower_ok = mu_a0b >= d_a0;
  bool action_ok = mu_action == mu_a0b;
  auto r = make_report(instance, "lemma-7.1", mu_a0b, Relation::equal, d_a0b);
  r.holds = r.holds && clopen_ok && lower_ok && action_ok;
  for (long long t : moved) r.witness.push_back(std::to_string(t));
  r.details = {{"points", sys.period},
               {"mu_B", mu_b.str()},
               {"d_B", d_b.str()},
               {"mu_B_matches_density", clopen_ok},
               {"d_A0", d_a0.str()},
               {"mu_A0B_at_least_d_A0", lower_ok},
               {"action_measure", mu_action.str()},
               {"action_agrees", action_ok}};
  return r;
}

}  // namespace plab
