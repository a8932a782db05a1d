#pragma once

#include <algorithm>
#include <queue>
#include <vector>

namespace plab {

// Edmonds-Karp maximum flow on exact integer capacities. `Cap` is any
// totally ordered integer-like type (std::int64_t, BigInt).
template <typename Cap>
class MaxFlow {
 public:
  explicit MaxFlow(int nodes) : adjacency_(nodes) {}

  int add_edge(int from, int to, const Cap& capacity) {
    int id = static_cast<int>(arcs_.size());
    arcs_.push_back({to, capacity});
    arcs_.push_back({from, Cap(0)});
    adjacency_[from].push_back(id);
    adjacency_[to].push_back(id + 1);
    return id;
  }

  Cap solve(int source, int sink) {
    Cap total(0);
    const int n = static_cast<int>(adjacency_.size());
    std::vector<int> parent_arc(n);
    while (true) {
      std::fill(parent_arc.begin(), parent_arc.end(), -1);
      std::queue<int> q;
      q.push(source);
      parent_arc[source] = -2;
      while (!q.empty() && parent_arc[sink] == -1) {
        int v = q.front();
        q.pop();
        for (int a : adjacency_[v]) {
          int u = arcs_[a].to;
          if (parent_arc[u] == -1 && arcs_[a].residual > 0) {
            parent_arc[u] = a;
            q.push(u);
          }
        }
      }
      if (parent_arc[sink] == -1) break;
      Cap push = arcs_[parent_arc[sink]].residual;
      for (int v = sink; v != source; v = arcs_[parent_arc[v] ^ 1].to)
        push = std::min(push, arcs_[parent_arc[v]].residual);
      for (int v = sink; v != source; v = arcs_[parent_arc[v] ^ 1].to) {
        arcs_[parent_arc[v]].residual -= push;
        arcs_[parent_arc[v] ^ 1].residual += push;
      }
      total += push;
    }
    return total;
  }

  // After solve(): nodes reachable from source in the residual network.
  // This is the inclusion-minimal source side among all minimum cuts.
  std::vector<char> source_side(int source) const {
    std::vector<char> seen(adjacency_.size(), 0);
    std::queue<int> q;
    q.push(source);
    seen[source] = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int a : adjacency_[v]) {
        int u = arcs_[a].to;
        if (!seen[u] && arcs_[a].residual > 0) {
          seen[u] = 1;
          q.push(u);
        }
      }
    }
    return seen;
  }

 private:
  struct Arc {
    int to;
    Cap residual;
  };
  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> adjacency_;
};

}  // namespace plab
