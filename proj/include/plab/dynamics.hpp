#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "plab/graph.hpp"
#include "plab/index_set.hpp"
#include "plab/ratio.hpp"
#include "plab/report.hpp"

namespace plab {

// Z/n_1 x ... x Z/n_d. Elements are encoded as mixed-radix integers with the
// first coordinate most significant, so encoded order is lexicographic.
class FinAbGroup {
 public:
  FinAbGroup() : FinAbGroup(std::vector<int>{1}) {}
  explicit FinAbGroup(std::vector<int> moduli);

  const std::vector<int>& moduli() const { return moduli_; }
  int rank() const { return static_cast<int>(moduli_.size()); }
  int order() const { return order_; }

  int encode(std::span<const long long> residues) const;  // reduces mod moduli
  std::vector<int> decode(int element) const;
  int add(int a, int b) const;
  int negate(int a) const;
  int generator(int coordinate) const;  // unit vector e_coordinate
  // "r" for rank 1, "r1,r2,..." otherwise.
  std::string element_id(int element) const;

  FinAbGroup direct_sum(const FinAbGroup& other) const;
  int pair(int a, const FinAbGroup& other, int b) const;  // (a, b) in direct_sum(other)

  friend bool operator==(const FinAbGroup& a, const FinAbGroup& b) { return a.moduli_ == b.moduli_; }

 private:
  std::vector<int> moduli_;
  int order_ = 1;
};

// Finite subset of a FinAbGroup.
class GroupSet {
 public:
  GroupSet() = default;
  GroupSet(FinAbGroup group, std::vector<int> elements);
  static GroupSet from_residues(const FinAbGroup& group, const std::vector<std::vector<long long>>& residues);

  const FinAbGroup& group() const { return group_; }
  const std::vector<int>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  std::vector<std::vector<int>> residues() const;

  friend bool operator==(const GroupSet&, const GroupSet&) = default;

 private:
  FinAbGroup group_;
  std::vector<int> elements_;  // sorted, unique
};

// A + B = {a + b}. Throws InputError on group mismatch.
GroupSet product_set(const GroupSet& a, const GroupSet& b);
// k-fold product set A^k, k >= 1.
GroupSet iterate(const GroupSet& a, int k);
// A x A' inside the direct sum of the two groups.
GroupSet cartesian(const GroupSet& a, const GroupSet& b);

using SpaceSet = IndexSet<struct AtomTag>;

// Raw action description, as read from JSON. Generators are given per
// coordinate as maps atom-id -> image atom-id.
struct ActionSpec {
  std::vector<int> moduli;
  std::vector<std::pair<std::string, Rational>> atoms;
  std::vector<std::map<std::string, std::string>> generators;
};

struct ActionViolation {
  std::string kind;  // "moduli", "weight", "total", "perm", "measure", "commute", "order"
  std::string message;
};

std::vector<ActionViolation> validate(const ActionSpec& spec);

// Weight-preserving action of a finite abelian group on a finite probability
// space, by commuting generator permutations.
class FiniteAction {
 public:
  FiniteAction() = default;
  explicit FiniteAction(const ActionSpec& spec);  // throws InputError on any violation

  const FinAbGroup& group() const { return group_; }
  std::size_t atom_count() const { return ids_.size(); }
  const std::string& atom_id(int atom) const { return ids_[atom]; }
  const Rational& weight(int atom) const { return weights_[atom]; }
  std::optional<int> find_atom(std::string_view id) const;

  int apply(int element, int atom) const { return table_[static_cast<std::size_t>(element) * ids_.size() + atom]; }

  SpaceSet translate(const GroupSet& a, const SpaceSet& s) const;  // A.S
  Rational measure(const SpaceSet& s) const;
  SpaceSet all() const;
  SpaceSet set_of(const std::vector<std::string>& ids) const;  // throws on unknown id
  std::vector<std::string> ids(const SpaceSet& s) const;

  ActionSpec spec() const;

 private:
  FinAbGroup group_;
  std::vector<std::string> ids_;
  std::vector<Rational> weights_;
  std::vector<std::vector<int>> generators_;
  std::vector<int> table_;  // element-major action table
};

// Atoms are the group elements with uniform weight; the group acts by addition.
FiniteAction translation_action(const FinAbGroup& group);
// Atoms are pairs "(x,y)" with product weights; the direct sum acts coordinatewise.
FiniteAction product_action(const FiniteAction& a, const FiniteAction& b);
// Atom of the product action corresponding to (x, y).
int product_atom(const FiniteAction& product, const FiniteAction& a, int x, const FiniteAction& b, int y);
SpaceSet product_space_set(const FiniteAction& product, const FiniteAction& a, const SpaceSet& s,
                           const FiniteAction& b, const SpaceSet& t);

// Vertices "k:atom" for atom in A^k Y, labels are elements of A, edges
// (x,k) -> (a.x,k+1) labelled a.
LayeredGraph orbit_graph(const FiniteAction& act, const GroupSet& a, const SpaceSet& y, int h);

enum class RatioMethod { automatic, brute, mincut };

struct ActionRatio {
  Rational value;
  SpaceSet witness;
  Method method = Method::brute;
};

// Candidates B in atom order, targets A.{b} minus E.
RatioProblem action_problem(const FiniteAction& act, const GroupSet& a, const SpaceSet& b,
                            const SpaceSet& excluded = {});

// c(A,B) = min over nonempty B' ⊆ B of mu(A B') / mu(B').
ActionRatio c(const FiniteAction& act, const GroupSet& a, const SpaceSet& b,
              RatioMethod method = RatioMethod::automatic);
// Minimum restricted to mu(B') >= delta mu(B). Brute force, |B| <= 20.
ActionRatio c_delta(const FiniteAction& act, const GroupSet& a, const SpaceSet& b, const Rational& delta);
// Minimum of mu(A B' \ E) / mu(B').
ActionRatio c_restricted(const FiniteAction& act, const GroupSet& a, const SpaceSet& b, const SpaceSet& e,
                         RatioMethod method = RatioMethod::automatic);

// "thm-4.2": c(A^j,B)^k >= c(A^k,B)^j.
VerificationReport verify_dyn_plunnecke(const FiniteAction& act, const GroupSet& a, const SpaceSet& b, int j,
                                        int k, const std::string& instance = "action");

// Subgraph of the (A,B,k)-orbit graph induced by B x {0} and (A^i B \ A^{i-1} E) x {i}.
LayeredGraph restricted_orbit_graph(const FiniteAction& act, const GroupSet& a, const SpaceSet& b,
                                    const SpaceSet& e, int k);

// "thm-4.3": c(A^j,B,A^{j-1}E)^k >= c(A^k,B,A^{k-1}E)^j, plus commutativity
// of the restricted orbit graph.
VerificationReport verify_restricted_plunnecke(const FiniteAction& act, const GroupSet& a, const SpaceSet& b,
                                               const SpaceSet& e, int j, int k,
                                               const std::string& instance = "action");

// mu(A^k B')^j mu(B)^k <= (1-delta)^{-k} mu(A^j B)^k mu(B')^j.
bool heavy_hypothesis(const FiniteAction& act, const GroupSet& a, const SpaceSet& b, const SpaceSet& sub,
                      const Rational& delta, int j, int k);

// B' ⊆ B with mu(B') >= delta mu(B) satisfying heavy_hypothesis, grown from a
// minimiser of c(A^k, B) by adjoining minimisers of c(A^k, B \ B').
SpaceSet heavy_subset(const FiniteAction& act, const GroupSet& a, const SpaceSet& b, const Rational& delta, int j,
                      int k);

// "lemma-5.4": c_delta(A^k,B)^j <= (1-delta)^{-k} (mu(A^j B)/mu(B))^k, with the
// heavy_subset output re-verified.
VerificationReport verify_heavy_subset(const FiniteAction& act, const GroupSet& a, const SpaceSet& b,
                                       const Rational& delta, int j, int k,
                                       const std::string& instance = "action");

// "lemma-6.1": c(A,B) c(A',B') == c(A x A', B x B') on the product action.
VerificationReport verify_multiplicativity(const FiniteAction& act, const FiniteAction& act2, const GroupSet& a,
                                           const GroupSet& a2, const SpaceSet& b, const SpaceSet& b2,
                                           const std::string& instance = "action",
                                           std::size_t limit = kDefaultBruteLimit);

// "prop-6.2": c(A_1...A_k, B) <= prod mu(A_i B) / mu(B).
VerificationReport verify_different_summands(const FiniteAction& act, const std::vector<GroupSet>& a_list,
                                             const SpaceSet& b, const std::string& instance = "action");

}  // namespace plab
