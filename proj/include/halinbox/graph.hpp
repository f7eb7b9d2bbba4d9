#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace halinbox {

using VertexId = std::string;
using Edge = std::pair<VertexId, VertexId>;

// Index-space edge with first < second.
using IndexEdge = std::pair<int, int>;

/// Simple undirected graph over string-identified vertices.
///
/// Vertices are stored in lexicographic order and addressed internally by
/// their rank in that order, so two graphs with the same vertex set share
/// the same indexing. Immutable once constructed.
class Graph {
public:
  Graph() = default;

  /// Throws std::invalid_argument on self-loops, duplicate vertices or
  /// edges, and endpoints outside `vertices`.
  Graph(std::vector<VertexId> vertices, const std::vector<Edge>& edges);

  /// Builds from index-space edges over an already sorted, unique vertex list.
  static Graph from_index_edges(std::vector<VertexId> sorted_vertices,
                                std::vector<IndexEdge> edges);

  std::size_t num_vertices() const { return names_.size(); }
  std::size_t num_edges() const { return edges_.size(); }

  const std::vector<VertexId>& vertices() const { return names_; }
  const VertexId& name(int v) const { return names_[static_cast<std::size_t>(v)]; }

  /// Index of `id`, or -1 if absent.
  int index_of(std::string_view id) const;

  bool has_edge(int u, int v) const;
  bool has_edge(std::string_view u, std::string_view v) const;

  const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  std::size_t degree(int v) const { return neighbors(v).size(); }

  /// Sorted, each pair with first < second.
  const std::vector<IndexEdge>& index_edges() const { return edges_; }

  /// Edges as identifier pairs, lexicographically smaller endpoint first.
  std::vector<Edge> edges() const;

  bool operator==(const Graph& other) const {
    return names_ == other.names_ && edges_ == other.edges_;
  }

private:
  void build_adjacency();

  std::vector<VertexId> names_;
  std::vector<std::vector<int>> adj_;
  std::vector<IndexEdge> edges_;
};

/// Edges of `a` that are not in `b`. Both graphs must share a vertex set.
std::vector<Edge> edge_difference(const Graph& a, const Graph& b);

/// True iff every edge of `sub` is an edge of `super` (same vertex set).
bool is_supergraph(const Graph& super, const Graph& sub);

}  // namespace halinbox
