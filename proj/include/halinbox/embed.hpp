#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "halinbox/instance.hpp"
#include "halinbox/interval.hpp"

namespace halinbox {

/// The tree T rooted at the internal neighbour of the special vertex.
///
/// Vertex indices follow HalinInstance. Descendant-leaf sets are exposed
/// as slices of a single depth-first leaf list, so every set is contiguous
/// in that list and the whole index is O(n).
class RootedIndex {
public:
  int root() const { return root_; }
  int special_vertex() const { return special_; }
  int parent(int v) const { return parent_[static_cast<std::size_t>(v)]; }  // -1 at root
  int depth(int v) const { return depth_[static_cast<std::size_t>(v)]; }
  int max_depth() const { return max_depth_; }

  /// u lies on the tree path from the root to v (u == v counts).
  bool is_ancestor(int u, int v) const;

  /// D(u): the leaves below u, in depth-first order.
  std::span<const int> descendant_leaves(int u) const;

  /// Vertices in depth-first preorder from the root.
  const std::vector<int>& preorder() const { return preorder_; }

private:
  friend RootedIndex root_tree(const HalinInstance&, int);

  int root_ = -1;
  int special_ = -1;
  int max_depth_ = 0;
  std::vector<int> parent_;
  std::vector<int> depth_;
  std::vector<int> enter_;
  std::vector<int> exit_;
  std::vector<int> preorder_;
  std::vector<int> dfs_leaves_;
  std::vector<std::pair<int, int>> leaf_span_;  // [begin, end) into dfs_leaves_
};

/// l_0 .. l_{k-1} and its inverse c(.).
struct LeafOrdering {
  std::vector<int> order;
  std::vector<int> position;  // -1 for internal vertices

  int c(int leaf) const { return position[static_cast<std::size_t>(leaf)]; }
  int first() const { return order.front(); }
  int second() const { return order[1]; }
  int last() const { return order.back(); }
};

/// Per-vertex (min c, max c) over D(u).
using LeafRanges = std::vector<std::pair<int, int>>;

struct Box {
  Interval x;
  Interval y;  // [0,0] when the representation is one-dimensional
  constexpr bool operator==(const Box&) const = default;
};

struct BoxRepresentation {
  std::vector<VertexId> vertices;  // sorted
  std::vector<Box> boxes;          // aligned with vertices
  int dimension = 2;
  InstanceKind kind = InstanceKind::General;

  // Choices made during construction. The wheel construction records its
  // hub as `root`; K4 records nothing but the cycle as leaf_order.
  std::optional<VertexId> special_vertex;
  std::optional<VertexId> root;
  std::vector<VertexId> leaf_order;

  const Box& at(std::string_view id) const;
  IntervalAssignment axis(int which) const;

  bool operator==(const BoxRepresentation&) const = default;
};

/// Internal vertices with exactly one internal neighbour, ascending by
/// identifier. Empty when |S| < 2.
std::vector<int> special_vertex_candidates(const HalinInstance& inst);

/// Smallest candidate. Throws NoSpecialVertex when |S| < 2.
int find_special_vertex(const HalinInstance& inst);

RootedIndex root_tree(const HalinInstance& inst, int special_vertex);

/// Rotates the cycle to start at the first position i with p_i in D(u')
/// and p_{i-1} outside it.
LeafOrdering order_leaves(const HalinInstance& inst, const RootedIndex& idx);

/// Throws NotConsecutiveError on the first vertex (by identifier) whose
/// leaves are not contiguous in `ord`.
LeafRanges check_consecutive(const HalinInstance& inst, const RootedIndex& idx,
                             const LeafOrdering& ord);

IntervalAssignment build_f1(const HalinInstance& inst, const RootedIndex& idx,
                            const LeafOrdering& ord, const LeafRanges& ranges);

IntervalAssignment build_f2(const HalinInstance& inst, const RootedIndex& idx,
                            const LeafOrdering& ord);

/// Star tree on k >= 4 leaves.
BoxRepresentation wheel_boxes(const HalinInstance& inst);

/// General case with an explicit special vertex (any candidate works).
BoxRepresentation build_general(const HalinInstance& inst, int special_vertex);

/// Dispatches on classify_instance(). Propagates NotConsecutiveError.
BoxRepresentation build_boxes(const HalinInstance& inst);

}  // namespace halinbox
