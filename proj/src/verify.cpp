#include "halinbox/verify.hpp"

#include <algorithm>
#include <omp.h>

namespace halinbox {

namespace {

bool adjacent(const Box& a, const Box& b, Axes axes) {
  auto mask = static_cast<unsigned>(axes);
  if ((mask & 1u) && !a.x.overlaps(b.x)) return false;
  if ((mask & 2u) && !a.y.overlaps(b.y)) return false;
  return true;
}

Axes axes_for(const BoxRepresentation& rep) {
  return rep.dimension == 1 ? Axes::X : Axes::Both;
}

}  // namespace

std::vector<IndexEdge> intersection_edges_serial(std::span<const Box> boxes, Axes axes) {
  std::vector<IndexEdge> edges;
  const auto n = static_cast<int>(boxes.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (adjacent(boxes[static_cast<std::size_t>(i)], boxes[static_cast<std::size_t>(j)], axes)) {
        edges.emplace_back(i, j);
      }
    }
  }
  return edges;
}

std::vector<IndexEdge> intersection_edges(std::span<const Box> boxes, Axes axes) {
  const auto n = static_cast<int>(boxes.size());
  std::vector<std::vector<IndexEdge>> per_thread(static_cast<std::size_t>(omp_get_max_threads()));

#pragma omp parallel
  {
    auto& local = per_thread[static_cast<std::size_t>(omp_get_thread_num())];
    // Row lengths shrink with i, so hand rows out dynamically.
#pragma omp for schedule(dynamic, 16)
    for (int i = 0; i < n; ++i) {
      const Box& a = boxes[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < n; ++j) {
        if (adjacent(a, boxes[static_cast<std::size_t>(j)], axes)) local.emplace_back(i, j);
      }
    }
  }

  std::size_t total = 0;
  for (const auto& part : per_thread) total += part.size();
  std::vector<IndexEdge> edges;
  edges.reserve(total);
  for (const auto& part : per_thread) edges.insert(edges.end(), part.begin(), part.end());
  std::sort(edges.begin(), edges.end());
  return edges;
}

Graph intersection_graph(const BoxRepresentation& rep) {
  return Graph::from_index_edges(rep.vertices, intersection_edges(rep.boxes, axes_for(rep)));
}

Graph axis_intersection_graph(const BoxRepresentation& rep, int axis) {
  return Graph::from_index_edges(rep.vertices,
                                 intersection_edges(rep.boxes, axis == 0 ? Axes::X : Axes::Y));
}

VerificationReport verify_representation(const Graph& g, const BoxRepresentation& rep) {
  if (g.vertices() != rep.vertices || rep.boxes.size() != rep.vertices.size()) {
    throw HalinError(ErrorCode::VertexSetMismatch,
                     "representation has " + std::to_string(rep.vertices.size()) +
                         " vertices, graph has " + std::to_string(g.num_vertices()));
  }
  VerificationReport report;
  Graph boxes = intersection_graph(rep);
  report.missing_edges = edge_difference(g, boxes);
  report.extra_edges = edge_difference(boxes, g);
  report.exact_match = report.missing_edges.empty() && report.extra_edges.empty();
  report.supergraph_f1 = is_supergraph(axis_intersection_graph(rep, 0), g);
  report.supergraph_f2 =
      rep.dimension == 1 || is_supergraph(axis_intersection_graph(rep, 1), g);
  return report;
}

bool is_induced_cycle(const Graph& g, std::span<const VertexId> seq) {
  const std::size_t m = seq.size();
  if (m < 3) return false;
  std::vector<int> idx;
  idx.reserve(m);
  for (const auto& id : seq) {
    int v = g.index_of(id);
    if (v < 0) return false;
    idx.push_back(v);
  }
  {
    auto sorted = idx;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      bool consecutive = j == i + 1 || (i == 0 && j == m - 1);
      if (g.has_edge(idx[i], idx[j]) != consecutive) return false;
    }
  }
  return true;
}

std::optional<LowerBoundCertificate> lower_bound_certificate(const HalinInstance& inst) {
  const auto kind = classify_instance(inst);
  if (kind == InstanceKind::K4) return std::nullopt;

  LowerBoundCertificate cert;
  if (inst.num_leaves() > 3) {
    cert.cycle_vertices = inst.cycle();
  } else {
    // Leaves sorted by identifier: cycle_indices() are indices into the
    // lexicographic vertex order, so sorting indices sorts identifiers.
    std::vector<int> leaves = inst.cycle_indices();
    std::sort(leaves.begin(), leaves.end());
    auto parent_of = [&](int leaf) { return inst.tree_neighbors(leaf).front(); };
    for (std::size_t i = 0; i < leaves.size() && cert.cycle_vertices.empty(); ++i) {
      for (std::size_t j = i + 1; j < leaves.size(); ++j) {
        int x = leaves[i];
        int y = leaves[j];
        int u = parent_of(x);
        int v = parent_of(y);
        if (u == v) continue;

        // Tree path u -> v by BFS parents from u.
        std::vector<int> prev(inst.num_vertices(), -1);
        std::vector<int> queue{u};
        prev[static_cast<std::size_t>(u)] = u;
        for (std::size_t q = 0; q < queue.size(); ++q) {
          for (int w : inst.tree_neighbors(queue[q])) {
            if (prev[static_cast<std::size_t>(w)] < 0) {
              prev[static_cast<std::size_t>(w)] = queue[q];
              queue.push_back(w);
            }
          }
        }
        std::vector<int> path;
        for (int w = v; w != u; w = prev[static_cast<std::size_t>(w)]) path.push_back(w);
        path.push_back(u);
        std::reverse(path.begin(), path.end());

        cert.cycle_vertices.push_back(inst.name(x));
        for (int w : path) cert.cycle_vertices.push_back(inst.name(w));
        cert.cycle_vertices.push_back(inst.name(y));
        break;
      }
    }
  }

  Graph g = compose_graph(inst);
  if (cert.cycle_vertices.size() < 4 || !is_induced_cycle(g, cert.cycle_vertices)) {
    throw HalinError(ErrorCode::CertificateNotInduced,
                     "candidate of length " + std::to_string(cert.cycle_vertices.size()) +
                         " is not an induced cycle");
  }
  return cert;
}

}  // namespace halinbox
