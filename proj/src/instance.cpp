#include "halinbox/instance.hpp"

#include <algorithm>
#include <numeric>

namespace halinbox {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::CycleNotOnLeaves: return "CycleNotOnLeaves";
    case ErrorCode::CycleTooShort: return "CycleTooShort";
    case ErrorCode::DuplicateCycleVertex: return "DuplicateCycleVertex";
    case ErrorCode::Degree2Violation: return "Degree2Violation";
    case ErrorCode::NoSpecialVertex: return "NoSpecialVertex";
    case ErrorCode::NotConsecutive: return "NotConsecutive";
    case ErrorCode::VertexSetMismatch: return "VertexSetMismatch";
    case ErrorCode::CertificateNotInduced: return "CertificateNotInduced";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::NoViolatingSwap: return "NoViolatingSwap";
    case ErrorCode::SyntaxError: return "SyntaxError";
  }
  return "Unknown";
}

NotConsecutiveError::NotConsecutiveError(std::string vertex, std::string x, std::string z,
                                         std::string y)
    : HalinError(ErrorCode::NotConsecutive,
                 "leaves below '" + vertex + "' are not consecutive: '" + x + "' and '" + y +
                     "' are below it but '" + z + "' between them is not"),
      vertex_(std::move(vertex)),
      x_(std::move(x)),
      z_(std::move(z)),
      y_(std::move(y)) {}

std::string_view to_string(InstanceKind kind) {
  switch (kind) {
    case InstanceKind::K4: return "K4";
    case InstanceKind::Wheel: return "Wheel";
    case InstanceKind::General: return "General";
  }
  return "Unknown";
}

int HalinInstance::index_of(std::string_view id) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), id);
  if (it == names_.end() || *it != id) return -1;
  return static_cast<int>(it - names_.begin());
}

namespace {

int find_root(std::vector<int>& dsu, int v) {
  while (dsu[static_cast<std::size_t>(v)] != v) {
    auto& p = dsu[static_cast<std::size_t>(v)];
    p = dsu[static_cast<std::size_t>(p)];
    v = p;
  }
  return v;
}

}  // namespace

HalinInstance validate_instance(std::vector<Edge> tree_edges, std::vector<VertexId> cycle,
                                bool strict) {
  HalinInstance inst;

  for (const auto& [a, b] : tree_edges) {
    inst.names_.push_back(a);
    inst.names_.push_back(b);
  }
  std::sort(inst.names_.begin(), inst.names_.end());
  inst.names_.erase(std::unique(inst.names_.begin(), inst.names_.end()), inst.names_.end());
  const std::size_t n = inst.names_.size();

  if (n == 0) throw HalinError(ErrorCode::NotATree, "tree has no edges");
  if (tree_edges.size() != n - 1) {
    throw HalinError(ErrorCode::NotATree,
                     std::to_string(tree_edges.size()) + " edges on " + std::to_string(n) +
                         " vertices");
  }

  // n - 1 edges and no cycle closed by union-find means connected and acyclic.
  std::vector<int> dsu(n);
  std::iota(dsu.begin(), dsu.end(), 0);
  inst.tree_adj_.assign(n, {});
  for (const auto& [a, b] : tree_edges) {
    int u = inst.index_of(a);
    int v = inst.index_of(b);
    if (u == v) throw HalinError(ErrorCode::NotATree, "self-loop at '" + a + "'");
    int ru = find_root(dsu, u);
    int rv = find_root(dsu, v);
    if (ru == rv) {
      throw HalinError(ErrorCode::NotATree, "edge '" + a + "'-'" + b + "' closes a cycle");
    }
    dsu[static_cast<std::size_t>(ru)] = rv;
    inst.tree_adj_[static_cast<std::size_t>(u)].push_back(v);
    inst.tree_adj_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& nb : inst.tree_adj_) std::sort(nb.begin(), nb.end());

  if (cycle.size() < 3) {
    throw HalinError(ErrorCode::CycleTooShort,
                     "cycle has " + std::to_string(cycle.size()) + " vertices, need at least 3");
  }

  std::vector<VertexId> sorted_cycle = cycle;
  std::sort(sorted_cycle.begin(), sorted_cycle.end());
  if (auto dup = std::adjacent_find(sorted_cycle.begin(), sorted_cycle.end());
      dup != sorted_cycle.end()) {
    throw HalinError(ErrorCode::DuplicateCycleVertex, "'" + *dup + "' repeats in cycle");
  }

  std::vector<char> on_cycle(n, 0);
  for (const auto& id : cycle) {
    int v = inst.index_of(id);
    if (v < 0) throw HalinError(ErrorCode::CycleNotOnLeaves, "'" + id + "' is not in the tree");
    if (inst.tree_degree(v) != 1) {
      throw HalinError(ErrorCode::CycleNotOnLeaves, "'" + id + "' is an internal tree vertex");
    }
    on_cycle[static_cast<std::size_t>(v)] = 1;
    inst.cycle_idx_.push_back(v);
  }
  for (std::size_t v = 0; v < n; ++v) {
    int vi = static_cast<int>(v);
    if (inst.is_leaf(vi) && !on_cycle[v]) {
      throw HalinError(ErrorCode::CycleNotOnLeaves,
                       "leaf '" + inst.names_[v] + "' is missing from the cycle");
    }
    if (!inst.is_leaf(vi)) inst.internal_.push_back(vi);
  }

  if (strict) {
    for (std::size_t v = 0; v < n; ++v) {
      if (inst.tree_adj_[v].size() == 2) {
        throw HalinError(ErrorCode::Degree2Violation,
                         "'" + inst.names_[v] + "' has tree degree 2");
      }
    }
  }

  inst.tree_edges_ = std::move(tree_edges);
  inst.cycle_ = std::move(cycle);
  inst.strict_ = strict;
  return inst;
}

Graph compose_graph(const HalinInstance& inst) {
  std::vector<IndexEdge> edges;
  const std::size_t k = inst.num_leaves();
  edges.reserve(inst.num_vertices() - 1 + k);
  for (std::size_t v = 0; v < inst.num_vertices(); ++v) {
    for (int w : inst.tree_neighbors(static_cast<int>(v))) {
      if (static_cast<int>(v) < w) edges.emplace_back(static_cast<int>(v), w);
    }
  }
  const auto& cyc = inst.cycle_indices();
  for (std::size_t i = 0; i < k; ++i) {
    edges.emplace_back(cyc[i], cyc[(i + 1) % k]);
  }
  return Graph::from_index_edges(inst.vertices(), std::move(edges));
}

InstanceKind classify_instance(const HalinInstance& inst) {
  if (inst.internal_vertices().size() >= 2) return InstanceKind::General;
  return inst.num_leaves() == 3 ? InstanceKind::K4 : InstanceKind::Wheel;
}

}  // namespace halinbox
