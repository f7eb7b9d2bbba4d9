#include "halinbox/embed.hpp"

#include <algorithm>
#include <stdexcept>

namespace halinbox {

namespace {

std::size_t at(int v) { return static_cast<std::size_t>(v); }

bool is_candidate(const HalinInstance& inst, int v) {
  if (inst.is_leaf(v)) return false;
  int internal = 0;
  int leaves = 0;
  for (int w : inst.tree_neighbors(v)) {
    (inst.is_leaf(w) ? leaves : internal)++;
  }
  return internal == 1 && leaves >= 1;
}

}  // namespace

bool RootedIndex::is_ancestor(int u, int v) const {
  return enter_[at(u)] <= enter_[at(v)] && exit_[at(v)] <= exit_[at(u)];
}

std::span<const int> RootedIndex::descendant_leaves(int u) const {
  auto [b, e] = leaf_span_[at(u)];
  return std::span<const int>(dfs_leaves_).subspan(at(b), at(e - b));
}

const Box& BoxRepresentation::at(std::string_view id) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), id);
  if (it == vertices.end() || *it != id) {
    throw std::out_of_range("no box for vertex '" + std::string(id) + "'");
  }
  return boxes[static_cast<std::size_t>(it - vertices.begin())];
}

IntervalAssignment BoxRepresentation::axis(int which) const {
  IntervalAssignment out{vertices, {}};
  out.intervals.reserve(boxes.size());
  for (const auto& b : boxes) out.intervals.push_back(which == 0 ? b.x : b.y);
  return out;
}

std::vector<int> special_vertex_candidates(const HalinInstance& inst) {
  std::vector<int> out;
  if (inst.internal_vertices().size() < 2) return out;
  for (int v : inst.internal_vertices()) {
    if (is_candidate(inst, v)) out.push_back(v);
  }
  return out;
}

int find_special_vertex(const HalinInstance& inst) {
  auto candidates = special_vertex_candidates(inst);
  if (candidates.empty()) {
    throw HalinError(ErrorCode::NoSpecialVertex,
                     "tree has " + std::to_string(inst.internal_vertices().size()) +
                         " internal vertex; use the wheel or K4 construction");
  }
  return candidates.front();
}

RootedIndex root_tree(const HalinInstance& inst, int special_vertex) {
  if (!is_candidate(inst, special_vertex) || inst.internal_vertices().size() < 2) {
    throw HalinError(ErrorCode::NoSpecialVertex,
                     "'" + inst.name(special_vertex) +
                         "' does not have exactly one internal neighbour");
  }
  RootedIndex idx;
  const std::size_t n = inst.num_vertices();
  idx.special_ = special_vertex;
  for (int w : inst.tree_neighbors(special_vertex)) {
    if (!inst.is_leaf(w)) idx.root_ = w;
  }
  idx.parent_.assign(n, -1);
  idx.depth_.assign(n, 0);
  idx.enter_.assign(n, 0);
  idx.exit_.assign(n, 0);
  idx.leaf_span_.assign(n, {0, 0});
  idx.preorder_.reserve(n);
  idx.dfs_leaves_.reserve(inst.num_leaves());

  // Iterative DFS; children visited in ascending index order.
  struct Frame {
    int v;
    std::size_t next;
  };
  std::vector<Frame> stack{{idx.root_, 0}};
  int clock = 0;
  idx.enter_[at(idx.root_)] = clock++;
  idx.preorder_.push_back(idx.root_);
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    const auto& nb = inst.tree_neighbors(v);
    if (next < nb.size()) {
      int w = nb[next++];
      if (w == idx.parent_[at(v)]) continue;
      idx.parent_[at(w)] = v;
      idx.depth_[at(w)] = idx.depth_[at(v)] + 1;
      idx.max_depth_ = std::max(idx.max_depth_, idx.depth_[at(w)]);
      idx.enter_[at(w)] = clock++;
      idx.preorder_.push_back(w);
      int first_leaf = static_cast<int>(idx.dfs_leaves_.size());
      idx.leaf_span_[at(w)].first = first_leaf;
      if (inst.is_leaf(w)) {
        idx.dfs_leaves_.push_back(w);
        idx.leaf_span_[at(w)].second = first_leaf + 1;
        idx.exit_[at(w)] = clock++;
      } else {
        stack.push_back({w, 0});
      }
    } else {
      idx.leaf_span_[at(v)].second = static_cast<int>(idx.dfs_leaves_.size());
      idx.exit_[at(v)] = clock++;
      stack.pop_back();
    }
  }
  return idx;
}

LeafOrdering order_leaves(const HalinInstance& inst, const RootedIndex& idx) {
  const auto& cyc = inst.cycle_indices();
  const std::size_t k = cyc.size();
  const int u = idx.special_vertex();
  std::size_t start = k;
  for (std::size_t i = 0; i < k; ++i) {
    int pred = cyc[(i + k - 1) % k];
    if (idx.is_ancestor(u, cyc[i]) && !idx.is_ancestor(u, pred)) {
      start = i;
      break;
    }
  }
  if (start == k) {
    // Unreachable when D(u') is a nonempty proper subset of the leaves.
    throw std::logic_error("order_leaves: no boundary of D(u') on the cycle");
  }
  LeafOrdering ord;
  ord.order.reserve(k);
  ord.position.assign(inst.num_vertices(), -1);
  for (std::size_t j = 0; j < k; ++j) {
    int leaf = cyc[(start + j) % k];
    ord.position[at(leaf)] = static_cast<int>(j);
    ord.order.push_back(leaf);
  }
  return ord;
}

LeafRanges check_consecutive(const HalinInstance& inst, const RootedIndex& idx,
                             const LeafOrdering& ord) {
  const std::size_t n = inst.num_vertices();
  LeafRanges ranges(n, {0, 0});
  // Children precede parents in reverse preorder.
  const auto& pre = idx.preorder();
  for (auto it = pre.rbegin(); it != pre.rend(); ++it) {
    int v = *it;
    if (inst.is_leaf(v)) {
      ranges[at(v)] = {ord.c(v), ord.c(v)};
    } else {
      ranges[at(v)] = {static_cast<int>(inst.num_leaves()), -1};
      for (int w : inst.tree_neighbors(v)) {
        if (w == idx.parent(v)) continue;
        ranges[at(v)].first = std::min(ranges[at(v)].first, ranges[at(w)].first);
        ranges[at(v)].second = std::max(ranges[at(v)].second, ranges[at(w)].second);
      }
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    const int u = static_cast<int>(v);
    auto [lo, hi] = ranges[v];
    auto count = static_cast<int>(idx.descendant_leaves(u).size());
    if (hi - lo + 1 == count) continue;
    for (int p = lo + 1; p < hi; ++p) {
      int z = ord.order[at(p)];
      if (!idx.is_ancestor(u, z)) {
        throw NotConsecutiveError(inst.name(u), inst.name(ord.order[at(lo)]), inst.name(z),
                                  inst.name(ord.order[at(hi)]));
      }
    }
  }
  return ranges;
}

IntervalAssignment build_f1(const HalinInstance& inst, const RootedIndex& /*idx*/,
                            const LeafOrdering& ord, const LeafRanges& ranges) {
  const std::size_t n = inst.num_vertices();
  const auto k = static_cast<std::int64_t>(inst.num_leaves());
  IntervalAssignment f1{inst.vertices(), std::vector<Interval>(n)};
  for (std::size_t v = 0; v < n; ++v) {
    const int u = static_cast<int>(v);
    if (u == ord.first()) {
      f1.intervals[v] = interval(0, k);
    } else if (inst.is_leaf(u)) {
      Half c = Half::whole(ord.c(u));
      f1.intervals[v] = {c - kHalf, c + kHalf};
    } else {
      f1.intervals[v] = interval(ranges[v].first, ranges[v].second);
    }
  }
  return f1;
}

IntervalAssignment build_f2(const HalinInstance& inst, const RootedIndex& idx,
                            const LeafOrdering& ord) {
  const std::size_t n = inst.num_vertices();
  const std::int64_t h = idx.max_depth();
  IntervalAssignment f2{inst.vertices(), std::vector<Interval>(n)};
  for (std::size_t v = 0; v < n; ++v) {
    const int u = static_cast<int>(v);
    const std::int64_t d = idx.depth(u);
    if (u == idx.special_vertex()) {
      f2.intervals[v] = interval(d, h + 2);
    } else if (!inst.is_leaf(u)) {
      f2.intervals[v] = interval(d, d + 1);
    } else if (u == ord.first()) {
      f2.intervals[v] = interval(h + 2, h + 2);
    } else if (u == ord.second() || u == ord.last()) {
      f2.intervals[v] = interval(d, h + 2);
    } else {
      f2.intervals[v] = interval(d, h + 1);
    }
  }
  return f2;
}

BoxRepresentation wheel_boxes(const HalinInstance& inst) {
  if (classify_instance(inst) != InstanceKind::Wheel) {
    throw HalinError(ErrorCode::PreconditionViolated, "wheel_boxes needs a star tree on >= 4 leaves");
  }
  const std::size_t n = inst.num_vertices();
  const auto& rim = inst.cycle_indices();
  const auto k = static_cast<std::int64_t>(rim.size());
  const int hub = inst.internal_vertices().front();

  BoxRepresentation rep;
  rep.vertices = inst.vertices();
  rep.boxes.resize(n);
  rep.dimension = 2;
  rep.kind = InstanceKind::Wheel;
  rep.root = inst.name(hub);
  rep.leaf_order = inst.cycle();

  rep.boxes[at(hub)] = {interval(0, k), interval(0, 2)};
  for (std::int64_t j = 0; j < k; ++j) {
    Box b;
    if (j == 0) {
      b.x = interval(0, k);
      b.y = interval(2, 2);
    } else {
      Half c = Half::whole(j);
      b.x = {c - kHalf, c + kHalf};
      b.y = (j == 1 || j == k - 1) ? interval(1, 2) : interval(0, 1);
    }
    rep.boxes[at(rim[at(static_cast<int>(j))])] = b;
  }
  return rep;
}

BoxRepresentation build_general(const HalinInstance& inst, int special_vertex) {
  RootedIndex idx = root_tree(inst, special_vertex);
  LeafOrdering ord = order_leaves(inst, idx);
  LeafRanges ranges = check_consecutive(inst, idx, ord);
  IntervalAssignment f1 = build_f1(inst, idx, ord, ranges);
  IntervalAssignment f2 = build_f2(inst, idx, ord);

  BoxRepresentation rep;
  rep.vertices = inst.vertices();
  rep.boxes.reserve(inst.num_vertices());
  for (std::size_t v = 0; v < inst.num_vertices(); ++v) {
    rep.boxes.push_back({f1.intervals[v], f2.intervals[v]});
  }
  rep.dimension = 2;
  rep.kind = InstanceKind::General;
  rep.special_vertex = inst.name(idx.special_vertex());
  rep.root = inst.name(idx.root());
  rep.leaf_order.reserve(ord.order.size());
  for (int leaf : ord.order) rep.leaf_order.push_back(inst.name(leaf));
  return rep;
}

BoxRepresentation build_boxes(const HalinInstance& inst) {
  switch (classify_instance(inst)) {
    case InstanceKind::K4: {
      BoxRepresentation rep;
      rep.vertices = inst.vertices();
      rep.boxes.assign(inst.num_vertices(), Box{interval(0, 1), interval(0, 0)});
      rep.dimension = 1;
      rep.kind = InstanceKind::K4;
      rep.leaf_order = inst.cycle();
      return rep;
    }
    case InstanceKind::Wheel:
      return wheel_boxes(inst);
    case InstanceKind::General:
      break;
  }
  return build_general(inst, find_special_vertex(inst));
}

}  // namespace halinbox
