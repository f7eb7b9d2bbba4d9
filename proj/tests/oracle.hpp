#pragma once

// Test-only reference routines. Nothing here calls into the construction
// code: sets are materialized explicitly, rectangles are compared in double
// precision, and adjacency is a dense matrix.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "halinbox/embed.hpp"
#include "halinbox/instance.hpp"

namespace oracle {

using Id = std::string;
using EdgeSet = std::set<std::pair<Id, Id>>;

inline std::pair<Id, Id> norm(Id a, Id b) {
  if (b < a) std::swap(a, b);
  return {a, b};
}

/// E(T) ∪ E(C) straight from the raw input lists.
inline EdgeSet halin_edges(const std::vector<halinbox::Edge>& tree, const std::vector<Id>& cycle) {
  EdgeSet out;
  for (const auto& [a, b] : tree) out.insert(norm(a, b));
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    out.insert(norm(cycle[i], cycle[(i + 1) % cycle.size()]));
  }
  return out;
}

struct Rect {
  double x0, x1, y0, y1;
};

inline EdgeSet rect_intersections(const std::map<Id, Rect>& rects, bool use_x, bool use_y) {
  EdgeSet out;
  for (auto i = rects.begin(); i != rects.end(); ++i) {
    for (auto j = std::next(i); j != rects.end(); ++j) {
      const Rect& a = i->second;
      const Rect& b = j->second;
      bool ok = true;
      if (use_x) ok = ok && a.x0 <= b.x1 && b.x0 <= a.x1;
      if (use_y) ok = ok && a.y0 <= b.y1 && b.y0 <= a.y1;
      if (ok) out.insert(norm(i->first, j->first));
    }
  }
  return out;
}

inline std::map<Id, Rect> to_rects(const halinbox::BoxRepresentation& rep) {
  std::map<Id, Rect> out;
  for (std::size_t i = 0; i < rep.vertices.size(); ++i) {
    const auto& b = rep.boxes[i];
    out[rep.vertices[i]] = {b.x.lo.to_double(), b.x.hi.to_double(), b.y.lo.to_double(),
                            b.y.hi.to_double()};
  }
  return out;
}

/// Rooted tree by BFS over the raw edge list.
struct Rooted {
  std::map<Id, Id> parent;
  std::map<Id, int> depth;
  std::map<Id, std::set<Id>> leaves_below;
  int height = 0;
};

inline Rooted root_at(const std::vector<halinbox::Edge>& tree, const Id& root) {
  std::map<Id, std::vector<Id>> adj;
  for (const auto& [a, b] : tree) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  Rooted r;
  std::vector<Id> order{root};
  r.depth[root] = 0;
  for (std::size_t q = 0; q < order.size(); ++q) {
    const Id v = order[q];
    for (const auto& w : adj[v]) {
      if (r.depth.count(w)) continue;
      r.depth[w] = r.depth[v] + 1;
      r.parent[w] = v;
      r.height = std::max(r.height, r.depth[w]);
      order.push_back(w);
    }
  }
  for (const auto& [v, nb] : adj) {
    if (nb.size() != 1) continue;
    // Walk up from each leaf adding it to every ancestor, itself included.
    Id w = v;
    for (;;) {
      r.leaves_below[w].insert(v);
      auto it = r.parent.find(w);
      if (it == r.parent.end()) break;
      w = it->second;
    }
  }
  return r;
}

/// Formula-level f1 and f2, returned as rectangles, for a fixed u', root and
/// leaf order. Assumes every leaf set is contiguous.
inline std::map<Id, Rect> formula_boxes(const std::vector<halinbox::Edge>& tree, const Id& u_prime,
                                        const Id& root, const std::vector<Id>& order) {
  Rooted r = root_at(tree, root);
  std::map<Id, int> c;
  for (std::size_t i = 0; i < order.size(); ++i) c[order[i]] = static_cast<int>(i);
  const double k = static_cast<double>(order.size());
  const double h = r.height;
  std::map<Id, Rect> out;
  for (const auto& [v, d] : r.depth) {
    Rect b{};
    bool leaf = c.count(v) > 0;
    if (v == order.front()) {
      b.x0 = 0, b.x1 = k;
    } else if (leaf) {
      b.x0 = c[v] - 0.5, b.x1 = c[v] + 0.5;
    } else {
      int lo = 1 << 30, hi = -1;
      for (const auto& l : r.leaves_below[v]) lo = std::min(lo, c[l]), hi = std::max(hi, c[l]);
      b.x0 = lo, b.x1 = hi;
    }
    if (v == u_prime) {
      b.y0 = d, b.y1 = h + 2;
    } else if (!leaf) {
      b.y0 = d, b.y1 = d + 1;
    } else if (v == order.front()) {
      b.y0 = h + 2, b.y1 = h + 2;
    } else if (v == order[1] || v == order.back()) {
      b.y0 = d, b.y1 = h + 2;
    } else {
      b.y0 = d, b.y1 = h + 1;
    }
    out[v] = b;
  }
  return out;
}

/// Dense-matrix chordless check.
inline bool induced_cycle(const EdgeSet& edges, const std::vector<Id>& seq) {
  const std::size_t m = seq.size();
  if (m < 3) return false;
  if (std::set<Id>(seq.begin(), seq.end()).size() != m) return false;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) continue;
      std::size_t gap = (j + m - i) % m;
      bool consecutive = gap == 1 || gap == m - 1;
      if (edges.count(norm(seq[i], seq[j])) != (consecutive ? 1u : 0u)) return false;
    }
  }
  return true;
}

/// True iff `seq` is a rotation of `cycle` or of its reversal.
inline bool same_cycle(std::vector<Id> seq, const std::vector<Id>& cycle) {
  if (seq.size() != cycle.size()) return false;
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t s = 0; s < seq.size(); ++s) {
      std::rotate(seq.begin(), seq.begin() + 1, seq.end());
      if (seq == cycle) return true;
    }
    std::reverse(seq.begin(), seq.end());
  }
  return false;
}

}  // namespace oracle
