#pragma once

#include <cstddef>

#include "plab/graph.hpp"
#include "plab/ratio.hpp"
#include "plab/report.hpp"

namespace plab {

struct MagnificationResult {
  Rational value;
  VertexSet witness;  // nonempty subset of layer 0 attaining value
  Method method = Method::brute;
};

// Left side: layer 0 in id order. Right side: layer j. Targets: Im^j({v}).
RatioProblem magnification_problem(const LayeredGraph& g, int j);

// D_j by exhaustive subset enumeration; refuses beyond `limit` layer-0 vertices.
MagnificationResult magnification_bruteforce(const LayeredGraph& g, int j,
                                             std::size_t limit = kDefaultBruteLimit, bool parallel = true);
// D_j by Dinkelbach iteration over minimum cuts.
MagnificationResult magnification_mincut(const LayeredGraph& g, int j);
// Brute force up to `limit` layer-0 vertices, mincut beyond.
MagnificationResult magnification(const LayeredGraph& g, int j, std::size_t limit = kDefaultBruteLimit);

// w(S) = sum_k C^{-k} mu(S ∩ V_k).
Rational cut_weight(const LayeredGraph& g, const VertexSet& s, const Rational& c);
// True iff every directed path from layer 0 to layer h meets s.
bool is_cutset(const LayeredGraph& g, const VertexSet& s);

struct CutsetReport {
  VertexSet cutset;
  Rational weight;
  Rational c;
  bool is_minimal = false;
};

// Lexicographically smallest cutset of minimum weight, by vertex-split min cut.
CutsetReport min_weight_cutset(const LayeredGraph& g, const Rational& c);

// Moves a cutset contained in V_0 ∪ ... ∪ V_j ∪ V_h down to one contained in
// V_0 ∪ ... ∪ V_{j-1} ∪ V_h: returns (S ∪ U_0) \ (S ∩ V_j), where U_0 is the
// part of V_{j-1} reachable from V_0 without meeting S.
VertexSet cutset_push(const LayeredGraph& g, const VertexSet& s, const Rational& c, int j);

// Slack added by one push of an eps-minimal cutset:
// eps + 4|A|^2 C eps + 4|A|^2 eps.
Rational push_slack(std::size_t labels, const Rational& c, const Rational& eps);

// "thm-3.5": D_j^h >= D_h^j for every j. Requires a commutative graph.
VerificationReport verify_graph_plunnecke(const LayeredGraph& g, const std::string& instance = "graph");
// "cor-3.4": w(V_0) is the minimum cutset weight when C^h <= D_h.
VerificationReport verify_bottom_layer_minimal(const LayeredGraph& g, const Rational& c,
                                               const std::string& instance = "graph");
// "lemma-3.3": pushing a minimum cutset down layer by layer keeps it minimum.
VerificationReport verify_cutset_push(const LayeredGraph& g, const Rational& c,
                                      const std::string& instance = "graph");

// Largest C in (1/16)Z with C^h <= D_h, or the exact h-th root of D_h when it exists.
Rational corollary_constant(const Rational& d_h, int h);

}  // namespace plab
