#pragma once

#include <cstddef>
#include <vector>

#include "halinbox/error.hpp"
#include "halinbox/graph.hpp"

namespace halinbox {

enum class InstanceKind { K4, Wheel, General };

std::string_view to_string(InstanceKind kind);

/// A tree T together with a simple cycle C through exactly the leaves of T.
///
/// Only constructible through validate_instance(). Vertex indices refer to
/// the lexicographic order of identifiers, the same indexing used by the
/// composed Graph.
class HalinInstance {
public:
  const std::vector<Edge>& tree_edges() const { return tree_edges_; }
  const std::vector<VertexId>& cycle() const { return cycle_; }
  bool strict() const { return strict_; }

  const std::vector<VertexId>& vertices() const { return names_; }
  const VertexId& name(int v) const { return names_[static_cast<std::size_t>(v)]; }
  int index_of(std::string_view id) const;
  std::size_t num_vertices() const { return names_.size(); }

  /// Cycle as vertex indices, in the given cyclic order.
  const std::vector<int>& cycle_indices() const { return cycle_idx_; }
  std::size_t num_leaves() const { return cycle_idx_.size(); }

  const std::vector<int>& tree_neighbors(int v) const {
    return tree_adj_[static_cast<std::size_t>(v)];
  }
  std::size_t tree_degree(int v) const { return tree_neighbors(v).size(); }
  bool is_leaf(int v) const { return tree_degree(v) == 1; }

  /// Internal vertices (S), ascending index order.
  const std::vector<int>& internal_vertices() const { return internal_; }

  bool operator==(const HalinInstance& other) const {
    return tree_edges_ == other.tree_edges_ && cycle_ == other.cycle_ &&
           strict_ == other.strict_;
  }

private:
  friend HalinInstance validate_instance(std::vector<Edge>, std::vector<VertexId>, bool);

  std::vector<Edge> tree_edges_;
  std::vector<VertexId> cycle_;
  bool strict_ = false;

  std::vector<VertexId> names_;
  std::vector<std::vector<int>> tree_adj_;
  std::vector<int> cycle_idx_;
  std::vector<int> internal_;
};

/// Checks, in order: T is a tree (NotATree), k >= 3 (CycleTooShort), no
/// repeated cycle vertex (DuplicateCycleVertex), cycle vertices are exactly
/// the degree-1 vertices of T (CycleNotOnLeaves), and with `strict` no tree
/// vertex of degree 2 (Degree2Violation). Throws HalinError.
HalinInstance validate_instance(std::vector<Edge> tree_edges, std::vector<VertexId> cycle,
                                bool strict);

/// G = T ∪ C.
Graph compose_graph(const HalinInstance& inst);

InstanceKind classify_instance(const HalinInstance& inst);

}  // namespace halinbox
