#include "plab/commutativity.hpp"

#include <functional>
#include <set>

namespace plab {

std::vector<int> max_bipartite_matching(int left, int right,
                                        const std::vector<std::vector<int>>& adjacency) {
  std::vector<int> match_left(left, -1), match_right(right, -1);
  std::vector<char> visited;
  std::function<bool(int)> augment = [&](int u) {
    for (int v : adjacency[u]) {
      if (visited[v]) continue;
      visited[v] = 1;
      if (match_right[v] < 0 || augment(match_right[v])) {
        match_left[u] = v;
        match_right[v] = u;
        return true;
      }
    }
    return false;
  };
  for (int u = 0; u < left; ++u) {
    visited.assign(right, 0);
    augment(u);
  }
  return match_left;
}

CommutativityVerdict is_semi_commutative(const LayeredGraph& g) {
  require_valid(g);
  CommutativityVerdict verdict;
  const auto& edges = g.edges();
  // edges are sorted by (tail, head, label), which is the reporting order.
  for (const auto& edge : edges) {
    const auto& from_head = g.out_edges(edge.head);  // E+(y)
    const auto& from_tail = g.out_edges(edge.tail);  // E+(x)
    std::vector<std::vector<int>> adjacency(from_head.size());
    for (std::size_t i = 0; i < from_head.size(); ++i) {
      const Edge& e = edges[from_head[i]];
      for (std::size_t k = 0; k < from_tail.size(); ++k) {
        const Edge& f = edges[from_tail[k]];
        if (g.has_edge(f.head, e.head, edge.label)) adjacency[i].push_back(static_cast<int>(k));
      }
    }
    auto match = max_bipartite_matching(static_cast<int>(from_head.size()),
                                        static_cast<int>(from_tail.size()), adjacency);
    EdgeInjection injection{g.describe(edge), {}};
    for (std::size_t i = 0; i < from_head.size(); ++i) {
      if (match[i] < 0) {
        verdict.holds = false;
        verdict.failing_edge = g.describe(edge);
        verdict.witnesses.clear();
        return verdict;
      }
      injection.pairs.emplace_back(g.describe(edges[from_head[i]]),
                                   g.describe(edges[from_tail[match[i]]]));
    }
    verdict.witnesses.push_back(std::move(injection));
  }
  return verdict;
}

CommutativityVerdict is_commutative(const LayeredGraph& g) {
  CommutativityVerdict forward = is_semi_commutative(g);
  if (!forward.holds) return forward;
  CommutativityVerdict backward = is_semi_commutative(dual(g));
  if (!backward.holds) {
    backward.failed_in_dual = true;
    return backward;
  }
  forward.dual_witnesses = std::move(backward.witnesses);
  return forward;
}

bool witnesses_sound(const LayeredGraph& g, const std::vector<EdgeInjection>& witnesses) {
  auto edge_exists = [&](const EdgeSpec& e) {
    auto t = g.find_vertex(e.tail);
    auto h = g.find_vertex(e.head);
    auto l = g.find_label(e.label);
    return t && h && l && g.has_edge(*t, *h, *l);
  };
  for (const auto& w : witnesses) {
    if (!edge_exists(w.edge)) return false;
    std::set<EdgeSpec> images;
    for (const auto& [e, phi] : w.pairs) {
      if (e.tail != w.edge.head || phi.tail != w.edge.tail) return false;
      if (!edge_exists(e) || !edge_exists(phi)) return false;
      if (!edge_exists({phi.head, e.head, w.edge.label})) return false;
      if (!images.insert(phi).second) return false;
    }
    auto y = g.find_vertex(w.edge.head);
    if (w.pairs.size() != g.out_edges(*y).size()) return false;
  }
  return true;
}

}  // namespace plab
