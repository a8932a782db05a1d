#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "plab/index_set.hpp"
#include "plab/rational.hpp"

namespace plab {

using VertexSet = IndexSet<struct VertexTag>;

enum class Direction { forward, backward };

struct Vertex {
  std::string id;
  long long layer = 0;
  Rational weight;
};

// Edge in id form, as read from or written to JSON.
struct EdgeSpec {
  std::string tail;
  std::string head;
  std::string label;
  friend auto operator<=>(const EdgeSpec&, const EdgeSpec&) = default;
};

// Edge in index form. Index order equals (tail id, head id, label id) order.
struct Edge {
  int tail = 0;
  int head = 0;
  int label = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Labelled layered graph on a finite atomic measure space. Construction only
// enforces referential integrity (ids resolve, no duplicates); the measure-graph
// invariants are checked by validate().
class LayeredGraph {
 public:
  LayeredGraph() = default;
  LayeredGraph(int height, std::vector<std::string> labels, std::vector<Vertex> vertices,
               const std::vector<EdgeSpec>& edges);

  int height() const { return height_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const Vertex& vertex(int v) const { return vertices_[v]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& out_edges(int v) const { return out_[v]; }
  const std::vector<int>& in_edges(int v) const { return in_[v]; }

  std::optional<int> find_vertex(std::string_view id) const;
  std::optional<int> find_label(std::string_view id) const;
  int label_index(std::string_view id) const;  // throws InputError if unknown

  // Head of the `label`-edge leaving v (tail for backward), or -1.
  int step(int v, int label, Direction dir) const;
  bool has_edge(int tail, int head, int label) const;

  VertexSet layer(long long k) const;
  VertexSet all() const;
  Rational weight(const VertexSet& s) const;

  VertexSet set_of(const std::vector<std::string>& ids) const;  // throws on unknown id
  std::vector<std::string> ids(const VertexSet& s) const;
  EdgeSpec describe(const Edge& e) const;

  std::vector<EdgeSpec> edge_specs() const;

  friend bool operator==(const LayeredGraph& a, const LayeredGraph& b);

 private:
  int height_ = 1;
  std::vector<std::string> labels_;
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
};

struct Violation {
  std::string kind;   // "weight", "layer", "functionality", "edge-weight", "layer-step"
  std::string where;  // offending vertex, edge or (vertex,label)
  std::string message;
};

// Empty iff g is a valid layered measure graph.
std::vector<Violation> validate(const LayeredGraph& g);
// Throws InputError naming the first violation.
void require_valid(const LayeredGraph& g);

VertexSet image(const LayeredGraph& g, const VertexSet& s, std::string_view label, Direction dir);
VertexSet image(const LayeredGraph& g, const VertexSet& s, int label, Direction dir);
// Union of the images over every label.
VertexSet image(const LayeredGraph& g, const VertexSet& s, Direction dir);
// Im^0 = s; |h| steps forward for h > 0, backward for h < 0.
VertexSet iterated_image(const LayeredGraph& g, const VertexSet& s, int h);

LayeredGraph induced_subgraph(const LayeredGraph& g, const VertexSet& w);
// Induced subgraph on every vertex lying on a directed path from s to t.
// s must lie in a single layer i and t in a single layer j > i.
LayeredGraph channel(const LayeredGraph& g, const VertexSet& s, const VertexSet& t);
// Edges reversed, layer k becomes height - k.
LayeredGraph dual(const LayeredGraph& g);
// Sum over labels of the weight of the label's tails; 1-layered graphs only.
Rational flow(const LayeredGraph& g);

}  // namespace plab

namespace plab {

// Induced subgraph on layers 0..k, re-declared with height k.
LayeredGraph truncate(const LayeredGraph& g, int k);

}  // namespace plab
