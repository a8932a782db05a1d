#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "plab/dynamics.hpp"
#include "plab/rational.hpp"
#include "plab/report.hpp"

namespace plab {

using Point = std::vector<long long>;

// Either a fully periodic subset of Z^d (residues modulo a period vector) or
// a finite subset, which has density zero.
class PeriodicSet {
 public:
  PeriodicSet() : PeriodicSet(std::vector<long long>{1}, {}) {}
  PeriodicSet(std::vector<long long> period, std::vector<Point> residues);  // reduces residues
  static PeriodicSet finite(int dim, std::vector<Point> points);
  static PeriodicSet whole(int dim);

  int dim() const { return dim_; }
  bool is_finite() const { return finite_; }
  const std::vector<long long>& period() const { return period_; }  // empty for finite sets
  const std::vector<Point>& residues() const { return points_; }    // sorted; the points for finite sets
  bool empty() const { return points_.empty(); }
  bool contains(std::span<const long long> x) const;

  friend bool operator==(const PeriodicSet&, const PeriodicSet&) = default;

 private:
  int dim_ = 1;
  bool finite_ = false;
  std::vector<long long> period_;
  std::vector<Point> points_;
};

// Minimal period along every axis. The empty periodic set gets period 1.
PeriodicSet normalize(const PeriodicSet& a);
// Residues of a over a multiple of its period.
std::vector<Point> expand(const PeriodicSet& a, const std::vector<long long>& period);
PeriodicSet periodic_sumset(const PeriodicSet& a, const PeriodicSet& b);
PeriodicSet iterate_sumset(const PeriodicSet& a, int k);
Rational banach_density(const PeriodicSet& a);

struct WindowEstimate {
  Rational upper;
  Rational lower;
};

using Oracle = std::function<bool(std::span<const long long>)>;

// Max and min density of the oracle set over cubes [x, x+n-1]^d inside [-m, m]^d.
WindowEstimate window_scan(const Oracle& oracle, int dim, long long n, long long m, bool parallel = true);

// "thm-1.3": d(A^j + B)^k >= d(A^k)^j d(B)^(k-j), 0 < j < k.
VerificationReport verify_density_plunnecke(const PeriodicSet& a, const PeriodicSet& b, int j, int k,
                                            const std::string& instance = "periodic");
// "thm-1.4": d(A_1 + ... + A_k) d(B)^(k-1) <= prod d(A_i + B). Refuses d(B) = 0.
VerificationReport verify_density_summands(const std::vector<PeriodicSet>& a_list, const PeriodicSet& b,
                                           const std::string& instance = "periodic");

// Shifts of the indicator word of a periodic B in Z. Point t is the word
// n -> 1_B(n + t); the integer a moves t to t + a.
struct ShiftSystem {
  long long period = 1;
  std::vector<std::string> words;  // words[t] = indicator of B on t, ..., t + period - 1
  std::vector<long long> clopen;   // points whose word starts with 1
  Rational point_mass;

  Rational measure(const std::vector<long long>& points) const;
  // A_0 applied to a set of points.
  std::vector<long long> translate(const PeriodicSet& a0, const std::vector<long long>& points) const;
  // The same system as a translation action of Z/period.
  FiniteAction as_action() const;
};

ShiftSystem correspondence_system(const PeriodicSet& b);

// "lemma-7.1": mu(A_0 B~) == d(A_0 + B), with mu(B~) == d(B) and
// mu(A_0 B~) >= d(A_0) folded into holds.
VerificationReport verify_correspondence(const PeriodicSet& b, const PeriodicSet& a0,
                                         const std::string& instance = "periodic");

}  // namespace plab
