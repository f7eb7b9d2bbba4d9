#include "halinbox/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace halinbox {

Graph::Graph(std::vector<VertexId> vertices, const std::vector<Edge>& edges)
    : names_(std::move(vertices)) {
  std::sort(names_.begin(), names_.end());
  if (std::adjacent_find(names_.begin(), names_.end()) != names_.end()) {
    throw std::invalid_argument("duplicate vertex identifier");
  }
  edges_.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    int u = index_of(a);
    int v = index_of(b);
    if (u < 0 || v < 0) {
      throw std::invalid_argument("edge endpoint not in vertex set: " + a + "-" + b);
    }
    if (u == v) {
      throw std::invalid_argument("self-loop at " + a);
    }
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw std::invalid_argument("parallel edge");
  }
  build_adjacency();
}

Graph Graph::from_index_edges(std::vector<VertexId> sorted_vertices,
                              std::vector<IndexEdge> edges) {
  Graph g;
  g.names_ = std::move(sorted_vertices);
  for (auto& e : edges) {
    if (e.first > e.second) std::swap(e.first, e.second);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  g.edges_ = std::move(edges);
  g.build_adjacency();
  return g;
}

void Graph::build_adjacency() {
  adj_.assign(names_.size(), {});
  for (const auto& [u, v] : edges_) {
    adj_[static_cast<std::size_t>(u)].push_back(v);
    adj_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

int Graph::index_of(std::string_view id) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), id);
  if (it == names_.end() || *it != id) return -1;
  return static_cast<int>(it - names_.begin());
}

bool Graph::has_edge(int u, int v) const {
  if (u == v) return false;
  const auto& nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

bool Graph::has_edge(std::string_view u, std::string_view v) const {
  int a = index_of(u);
  int b = index_of(v);
  return a >= 0 && b >= 0 && has_edge(a, b);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edges_.size());
  for (const auto& [u, v] : edges_) out.emplace_back(name(u), name(v));
  return out;
}

std::vector<Edge> edge_difference(const Graph& a, const Graph& b) {
  if (a.vertices() != b.vertices()) {
    throw std::invalid_argument("edge_difference: vertex sets differ");
  }
  std::vector<IndexEdge> diff;
  std::set_difference(a.index_edges().begin(), a.index_edges().end(),
                      b.index_edges().begin(), b.index_edges().end(),
                      std::back_inserter(diff));
  std::vector<Edge> out;
  out.reserve(diff.size());
  for (const auto& [u, v] : diff) out.emplace_back(a.name(u), a.name(v));
  return out;
}

bool is_supergraph(const Graph& super, const Graph& sub) {
  return super.vertices() == sub.vertices() &&
         std::includes(super.index_edges().begin(), super.index_edges().end(),
                       sub.index_edges().begin(), sub.index_edges().end());
}

}  // namespace halinbox
