#include "plab/graph.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "plab/errors.hpp"

namespace plab {

LayeredGraph::LayeredGraph(int height, std::vector<std::string> labels, std::vector<Vertex> vertices,
                           const std::vector<EdgeSpec>& edges)
    : height_(height), labels_(std::move(labels)), vertices_(std::move(vertices)) {
  if (height_ < 1) throw InputError("graph height must be >= 1, got " + std::to_string(height_));
  std::sort(labels_.begin(), labels_.end());
  labels_.erase(std::unique(labels_.begin(), labels_.end()), labels_.end());
  std::sort(vertices_.begin(), vertices_.end(),
            [](const Vertex& a, const Vertex& b) { return a.id < b.id; });
  for (std::size_t i = 1; i < vertices_.size(); ++i)
    if (vertices_[i].id == vertices_[i - 1].id)
      throw InputError("duplicate vertex id '" + vertices_[i].id + "'");

  for (const auto& e : edges) {
    auto t = find_vertex(e.tail);
    auto h = find_vertex(e.head);
    auto l = find_label(e.label);
    if (!t) throw InputError("edge references unknown tail '" + e.tail + "'");
    if (!h) throw InputError("edge references unknown head '" + e.head + "'");
    if (!l) throw InputError("edge references unknown label '" + e.label + "'");
    edges_.push_back({*t, *h, *l});
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  out_.assign(vertices_.size(), {});
  in_.assign(vertices_.size(), {});
  for (int i = 0; i < static_cast<int>(edges_.size()); ++i) {
    out_[edges_[i].tail].push_back(i);
    in_[edges_[i].head].push_back(i);
  }
}

std::optional<int> LayeredGraph::find_vertex(std::string_view id) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), id,
                             [](const Vertex& v, std::string_view key) { return v.id < key; });
  if (it == vertices_.end() || it->id != id) return std::nullopt;
  return static_cast<int>(it - vertices_.begin());
}

std::optional<int> LayeredGraph::find_label(std::string_view id) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), id);
  if (it == labels_.end() || *it != id) return std::nullopt;
  return static_cast<int>(it - labels_.begin());
}

int LayeredGraph::label_index(std::string_view id) const {
  auto l = find_label(id);
  if (!l) throw InputError("unknown label '" + std::string(id) + "'");
  return *l;
}

int LayeredGraph::step(int v, int label, Direction dir) const {
  if (dir == Direction::forward) {
    for (int e : out_[v])
      if (edges_[e].label == label) return edges_[e].head;
  } else {
    for (int e : in_[v])
      if (edges_[e].label == label) return edges_[e].tail;
  }
  return -1;
}

bool LayeredGraph::has_edge(int tail, int head, int label) const {
  return std::binary_search(edges_.begin(), edges_.end(), Edge{tail, head, label});
}

VertexSet LayeredGraph::layer(long long k) const {
  std::vector<int> m;
  for (int v = 0; v < static_cast<int>(vertices_.size()); ++v)
    if (vertices_[v].layer == k) m.push_back(v);
  return VertexSet(std::move(m));
}

VertexSet LayeredGraph::all() const {
  std::vector<int> m(vertices_.size());
  for (int v = 0; v < static_cast<int>(m.size()); ++v) m[v] = v;
  return VertexSet(std::move(m));
}

Rational LayeredGraph::weight(const VertexSet& s) const {
  Rational total;
  for (int v : s) total += vertices_[v].weight;
  return total;
}

VertexSet LayeredGraph::set_of(const std::vector<std::string>& ids) const {
  std::vector<int> m;
  for (const auto& id : ids) {
    auto v = find_vertex(id);
    if (!v) throw InputError("unknown vertex '" + id + "'");
    m.push_back(*v);
  }
  return VertexSet(std::move(m));
}

std::vector<std::string> LayeredGraph::ids(const VertexSet& s) const {
  std::vector<std::string> out;
  out.reserve(s.size());
  for (int v : s) out.push_back(vertices_[v].id);
  return out;
}

EdgeSpec LayeredGraph::describe(const Edge& e) const {
  return {vertices_[e.tail].id, vertices_[e.head].id, labels_[e.label]};
}

std::vector<EdgeSpec> LayeredGraph::edge_specs() const {
  std::vector<EdgeSpec> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) out.push_back(describe(e));
  return out;
}

bool operator==(const LayeredGraph& a, const LayeredGraph& b) {
  if (a.height_ != b.height_ || a.labels_ != b.labels_ || a.edges_ != b.edges_ ||
      a.vertices_.size() != b.vertices_.size())
    return false;
  for (std::size_t i = 0; i < a.vertices_.size(); ++i) {
    const auto& x = a.vertices_[i];
    const auto& y = b.vertices_[i];
    if (x.id != y.id || x.layer != y.layer || x.weight != y.weight) return false;
  }
  return true;
}

std::vector<Violation> validate(const LayeredGraph& g) {
  std::vector<Violation> out;
  for (const auto& v : g.vertices()) {
    if (v.weight.sign() <= 0)
      out.push_back({"weight", v.id, "non-positive weight " + v.weight.str() + " at " + v.id});
    if (v.layer < 0 || v.layer > g.height())
      out.push_back({"layer", v.id,
                     "layer " + std::to_string(v.layer) + " of " + v.id + " outside 0.." +
                         std::to_string(g.height())});
  }
  const int labels = static_cast<int>(g.labels().size());
  for (int v = 0; v < static_cast<int>(g.vertex_count()); ++v) {
    std::vector<int> out_count(labels, 0), in_count(labels, 0);
    for (int e : g.out_edges(v)) ++out_count[g.edges()[e].label];
    for (int e : g.in_edges(v)) ++in_count[g.edges()[e].label];
    for (int a = 0; a < labels; ++a) {
      if (out_count[a] > 1 || in_count[a] > 1) {
        std::string where = "(" + g.vertex(v).id + "," + g.labels()[a] + ")";
        out.push_back({"functionality", where, "label functionality at " + where});
      }
    }
  }
  for (const auto& e : g.edges()) {
    const auto& t = g.vertex(e.tail);
    const auto& h = g.vertex(e.head);
    std::string where = "(" + t.id + "," + h.id + "," + g.labels()[e.label] + ")";
    if (t.weight != h.weight)
      out.push_back({"edge-weight", where, "edge weight mismatch " + where});
    if (h.layer != t.layer + 1)
      out.push_back({"layer-step", where, "edge does not advance one layer " + where});
  }
  return out;
}

void require_valid(const LayeredGraph& g) {
  auto violations = validate(g);
  if (!violations.empty())
    throw InputError("invalid measure graph: " + violations.front().message);
}

VertexSet image(const LayeredGraph& g, const VertexSet& s, std::string_view label, Direction dir) {
  return image(g, s, g.label_index(label), dir);
}

VertexSet image(const LayeredGraph& g, const VertexSet& s, int label, Direction dir) {
  std::vector<int> m;
  for (int v : s) {
    const auto& incident = dir == Direction::forward ? g.out_edges(v) : g.in_edges(v);
    for (int e : incident) {
      const Edge& edge = g.edges()[e];
      if (edge.label == label) m.push_back(dir == Direction::forward ? edge.head : edge.tail);
    }
  }
  return VertexSet(std::move(m));
}

VertexSet image(const LayeredGraph& g, const VertexSet& s, Direction dir) {
  std::vector<int> m;
  for (int v : s) {
    const auto& incident = dir == Direction::forward ? g.out_edges(v) : g.in_edges(v);
    for (int e : incident)
      m.push_back(dir == Direction::forward ? g.edges()[e].head : g.edges()[e].tail);
  }
  return VertexSet(std::move(m));
}

VertexSet iterated_image(const LayeredGraph& g, const VertexSet& s, int h) {
  VertexSet cur = s;
  Direction dir = h >= 0 ? Direction::forward : Direction::backward;
  for (int i = 0; i < std::abs(h); ++i) cur = image(g, cur, dir);
  return cur;
}

LayeredGraph induced_subgraph(const LayeredGraph& g, const VertexSet& w) {
  std::vector<Vertex> vertices;
  vertices.reserve(w.size());
  for (int v : w) vertices.push_back(g.vertex(v));
  std::vector<EdgeSpec> edges;
  for (const auto& e : g.edges())
    if (w.contains(e.tail) && w.contains(e.head)) edges.push_back(g.describe(e));
  return LayeredGraph(g.height(), g.labels(), std::move(vertices), edges);
}

namespace {

long long single_layer(const LayeredGraph& g, const VertexSet& s, const char* name) {
  long long k = g.vertex(s.members().front()).layer;
  for (int v : s)
    if (g.vertex(v).layer != k)
      throw InputError(std::string("channel: ") + name + " spans more than one layer");
  return k;
}

// Vertices reachable from `start` moving in `dir`, never leaving layers [lo, hi].
std::vector<char> reach(const LayeredGraph& g, const VertexSet& start, Direction dir, long long lo,
                        long long hi) {
  std::vector<char> seen(g.vertex_count(), 0);
  std::queue<int> q;
  for (int v : start) {
    seen[v] = 1;
    q.push(v);
  }
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    const auto& incident = dir == Direction::forward ? g.out_edges(v) : g.in_edges(v);
    for (int e : incident) {
      int u = dir == Direction::forward ? g.edges()[e].head : g.edges()[e].tail;
      long long k = g.vertex(u).layer;
      if (!seen[u] && k >= lo && k <= hi) {
        seen[u] = 1;
        q.push(u);
      }
    }
  }
  return seen;
}

}  // namespace

LayeredGraph channel(const LayeredGraph& g, const VertexSet& s, const VertexSet& t) {
  if (s.empty() || t.empty()) return induced_subgraph(g, VertexSet{});
  long long i = single_layer(g, s, "S");
  long long j = single_layer(g, t, "T");
  if (i >= j) throw InputError("channel: layer of S must be below layer of T");
  auto from_s = reach(g, s, Direction::forward, i, j);
  auto to_t = reach(g, t, Direction::backward, i, j);
  std::vector<int> m;
  for (int v = 0; v < static_cast<int>(g.vertex_count()); ++v)
    if (from_s[v] && to_t[v]) m.push_back(v);
  return induced_subgraph(g, VertexSet(std::move(m)));
}

LayeredGraph dual(const LayeredGraph& g) {
  std::vector<Vertex> vertices = g.vertices();
  for (auto& v : vertices) v.layer = g.height() - v.layer;
  std::vector<EdgeSpec> edges;
  edges.reserve(g.edges().size());
  for (const auto& e : g.edges()) {
    auto spec = g.describe(e);
    std::swap(spec.tail, spec.head);
    edges.push_back(std::move(spec));
  }
  return LayeredGraph(g.height(), g.labels(), std::move(vertices), edges);
}

Rational flow(const LayeredGraph& g) {
  if (g.height() != 1) throw InputError("flow is defined on 1-layered graphs only");
  Rational total;
  for (int a = 0; a < static_cast<int>(g.labels().size()); ++a) {
    std::vector<int> tails;
    for (const auto& e : g.edges())
      if (e.label == a) tails.push_back(e.tail);
    total += g.weight(VertexSet(std::move(tails)));
  }
  return total;
}

}  // namespace plab

namespace plab {

LayeredGraph truncate(const LayeredGraph& g, int k) {
  if (k < 1 || k > g.height()) throw InputError("truncation height out of range");
  std::vector<Vertex> vertices;
  for (const auto& v : g.vertices())
    if (v.layer <= k) vertices.push_back(v);
  std::vector<EdgeSpec> edges;
  for (const auto& e : g.edges())
    if (g.vertex(e.head).layer <= k && g.vertex(e.tail).layer <= k) edges.push_back(g.describe(e));
  return LayeredGraph(k, g.labels(), std::move(vertices), edges);
}

}  // namespace plab
