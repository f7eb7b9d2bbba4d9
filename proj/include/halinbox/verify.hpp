#pragma once

#include <optional>
#include <span>
#include <vector>

#include "halinbox/embed.hpp"
#include "halinbox/graph.hpp"
#include "halinbox/instance.hpp"

namespace halinbox {

/// Which coordinates must overlap for two boxes to count as adjacent.
enum class Axes : unsigned { X = 1, Y = 2, Both = 3 };

/// Reference O(n^2) pair loop. Returns sorted index edges.
std::vector<IndexEdge> intersection_edges_serial(std::span<const Box> boxes, Axes axes);

/// OpenMP version of the same loop; identical output to the serial one.
std::vector<IndexEdge> intersection_edges(std::span<const Box> boxes, Axes axes);

/// Adjacency iff the boxes overlap on every used axis (closed intervals).
Graph intersection_graph(const BoxRepresentation& rep);

/// Intersection graph of one coordinate only (0 = x, 1 = y).
Graph axis_intersection_graph(const BoxRepresentation& rep, int axis);

struct VerificationReport {
  bool supergraph_f1 = false;
  bool supergraph_f2 = false;
  bool exact_match = false;
  std::vector<Edge> missing_edges;  // in G, not in the intersection graph
  std::vector<Edge> extra_edges;    // in the intersection graph, not in G
};

/// Throws VertexSetMismatch when `rep` does not cover exactly V(g).
/// For one-dimensional representations the y-axis check is vacuous.
VerificationReport verify_representation(const Graph& g, const BoxRepresentation& rep);

/// Cyclically consecutive pairs are edges and every other pair is not.
bool is_induced_cycle(const Graph& g, std::span<const VertexId> seq);

struct LowerBoundCertificate {
  std::vector<VertexId> cycle_vertices;
};

/// Induced cycle of length >= 4 in T ∪ C, or nullopt for K4.
///
/// With k > 3 this is C itself. With k = 3 it is x, u, (tree path), v, y for
/// the lexicographically smallest leaf pair x < y whose tree parents u, v
/// differ. Throws CertificateNotInduced if the result fails the check.
std::optional<LowerBoundCertificate> lower_bound_certificate(const HalinInstance& inst);

}  // namespace halinbox
