#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "plab/graph.hpp"

namespace plab {

// The injection phi : E+(head(edge)) -> E+(tail(edge)) certifying one edge.
struct EdgeInjection {
  EdgeSpec edge;
  std::vector<std::pair<EdgeSpec, EdgeSpec>> pairs;  // (e, phi(e))
};

struct CommutativityVerdict {
  bool holds = true;
  std::optional<EdgeSpec> failing_edge;
  bool failed_in_dual = false;  // failing_edge is an edge of dual(g)
  std::vector<EdgeInjection> witnesses;
  std::vector<EdgeInjection> dual_witnesses;
};

// Maximum bipartite matching by augmenting paths. Returns, for each left
// vertex, its matched right vertex or -1.
std::vector<int> max_bipartite_matching(int left, int right,
                                        const std::vector<std::vector<int>>& adjacency);

// Throws InputError when g is not a valid measure graph.
CommutativityVerdict is_semi_commutative(const LayeredGraph& g);
CommutativityVerdict is_commutative(const LayeredGraph& g);

// Re-checks every injection edge by edge: injective and head-compatible.
bool witnesses_sound(const LayeredGraph& g, const std::vector<EdgeInjection>& witnesses);

}  // namespace plab
