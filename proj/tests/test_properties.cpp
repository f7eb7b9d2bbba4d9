// Seeded property checks over generated instances. Expected values come
// from the reference routines in oracle.hpp, never from the code under test.

#include <algorithm>
#include <set>

#include "doctest.h"
#include "halinbox/embed.hpp"
#include "halinbox/gen.hpp"
#include "halinbox/io.hpp"
#include "halinbox/verify.hpp"
#include "oracle.hpp"

using namespace halinbox;

namespace {

std::vector<HalinInstance> sample(std::uint64_t seed, std::size_t count) {
  std::vector<HalinInstance> out;
  for (const auto& cfg : corpus_configs(seed, count)) out.push_back(generate(cfg));
  return out;
}

const std::vector<HalinInstance>& corpus() {
  static const auto instances = sample(0xC0FFEE, 150);
  return instances;
}

oracle::EdgeSet expected_edges(const HalinInstance& inst) {
  return oracle::halin_edges(inst.tree_edges(), inst.cycle());
}

}  // namespace

TEST_CASE("boxes reproduce G exactly (oracle intersection)") {
  for (const auto& inst : corpus()) {
    auto rep = build_boxes(inst);
    bool use_y = rep.dimension == 2;
    CHECK(oracle::rect_intersections(oracle::to_rects(rep), true, use_y) == expected_edges(inst));
  }
}

TEST_CASE("each axis alone is a supergraph of G") {
  for (const auto& inst : corpus()) {
    auto rep = build_boxes(inst);
    if (rep.dimension != 2) continue;
    auto rects = oracle::to_rects(rep);
    auto g = expected_edges(inst);
    auto g1 = oracle::rect_intersections(rects, true, false);
    auto g2 = oracle::rect_intersections(rects, false, true);
    CHECK(std::includes(g1.begin(), g1.end(), g.begin(), g.end()));
    CHECK(std::includes(g2.begin(), g2.end(), g.begin(), g.end()));
  }
}

TEST_CASE("library intervals match the formulas evaluated independently") {
  for (const auto& inst : corpus()) {
    if (classify_instance(inst) != InstanceKind::General) continue;
    auto rep = build_boxes(inst);
    auto expected = oracle::formula_boxes(inst.tree_edges(), *rep.special_vertex, *rep.root,
                                          rep.leaf_order);
    auto actual = oracle::to_rects(rep);
    REQUIRE(expected.size() == actual.size());
    for (const auto& [v, b] : expected) {
      const auto& a = actual.at(v);
      CHECK(a.x0 == b.x0);
      CHECK(a.x1 == b.x1);
      CHECK(a.y0 == b.y0);
      CHECK(a.y1 == b.y1);
    }
  }
}

TEST_CASE("rooted index invariants") {
  for (const auto& inst : corpus()) {
    if (classify_instance(inst) != InstanceKind::General) continue;
    int u = find_special_vertex(inst);
    auto idx = root_tree(inst, u);
    auto ref = oracle::root_at(inst.tree_edges(), inst.name(idx.root()));
    CHECK(idx.parent(u) == idx.root());
    CHECK(idx.max_depth() == ref.height);

    std::set<VertexId> all_leaves(inst.cycle().begin(), inst.cycle().end());
    auto du = idx.descendant_leaves(u);
    CHECK(!du.empty());
    CHECK(du.size() < all_leaves.size());

    for (std::size_t vi = 0; vi < inst.num_vertices(); ++vi) {
      int v = static_cast<int>(vi);
      const auto& name = inst.name(v);
      CHECK(idx.depth(v) == ref.depth.at(name));
      if (v != idx.root()) CHECK(idx.depth(v) == idx.depth(idx.parent(v)) + 1);
      std::set<VertexId> d;
      for (int l : idx.descendant_leaves(v)) d.insert(inst.name(l));
      CHECK(d == ref.leaves_below.at(name));
      if (v != idx.root()) {
        auto dp = idx.descendant_leaves(idx.parent(v));
        std::set<int> parent_set(dp.begin(), dp.end());
        for (int l : idx.descendant_leaves(v)) CHECK(parent_set.count(l) == 1);
      }
    }
  }
}

TEST_CASE("leaf ordering is a rotation and every D(u) is consecutive") {
  for (const auto& inst : corpus()) {
    if (classify_instance(inst) != InstanceKind::General) continue;
    auto idx = root_tree(inst, find_special_vertex(inst));
    auto ord = order_leaves(inst, idx);
    std::vector<VertexId> order;
    for (int l : ord.order) order.push_back(inst.name(l));
    CHECK(oracle::same_cycle(order, inst.cycle()));
    CHECK(idx.is_ancestor(idx.special_vertex(), ord.first()));
    CHECK_FALSE(idx.is_ancestor(idx.special_vertex(), ord.last()));

    auto ref = oracle::root_at(inst.tree_edges(), inst.name(idx.root()));
    for (const auto& [v, leaves] : ref.leaves_below) {
      std::vector<int> pos;
      for (const auto& l : leaves) pos.push_back(ord.c(inst.index_of(l)));
      std::sort(pos.begin(), pos.end());
      CHECK(pos.back() - pos.front() + 1 == static_cast<int>(pos.size()));
    }
    CHECK_NOTHROW(check_consecutive(inst, idx, ord));
  }
}

TEST_CASE("interval endpoint ranges and containment") {
  for (const auto& inst : corpus()) {
    if (classify_instance(inst) != InstanceKind::General) continue;
    auto idx = root_tree(inst, find_special_vertex(inst));
    auto ord = order_leaves(inst, idx);
    auto f1 = build_f1(inst, idx, ord, check_consecutive(inst, idx, ord));
    auto f2 = build_f2(inst, idx, ord);
    const auto k = static_cast<std::int64_t>(inst.num_leaves());
    const Interval& first = f1.intervals[static_cast<std::size_t>(ord.first())];
    for (std::size_t v = 0; v < inst.num_vertices(); ++v) {
      const auto& a = f1.intervals[v];
      const auto& b = f2.intervals[v];
      CHECK(first.contains(a));
      CHECK(a.lo <= a.hi);
      CHECK(a.lo >= Half::whole(0));
      CHECK(a.hi <= Half::whole(k));
      CHECK(b.lo.is_integer());
      CHECK(b.hi.is_integer());
      CHECK(b.lo >= Half::whole(0));
      CHECK(b.hi <= Half::whole(idx.max_depth() + 2));
      int u = static_cast<int>(v);
      if (!inst.is_leaf(u) && u != idx.root()) {
        CHECK(b.contains(Half::whole(idx.depth(u))));
        CHECK(f2.intervals[static_cast<std::size_t>(idx.parent(u))].contains(
            Half::whole(idx.depth(u))));
      }
    }
  }
}

TEST_CASE("any special-vertex choice verifies") {
  for (const auto& inst : corpus()) {
    if (classify_instance(inst) != InstanceKind::General) continue;
    auto g = expected_edges(inst);
    for (int u : special_vertex_candidates(inst)) {
      auto rep = build_general(inst, u);
      CHECK(oracle::rect_intersections(oracle::to_rects(rep), true, true) == g);
    }
  }
}

TEST_CASE("rotated, reversed and renamed inputs still verify") {
  SplitMix64 rng(77);
  for (const auto& inst : corpus()) {
    auto cycle = inst.cycle();
    std::rotate(cycle.begin(), cycle.begin() + static_cast<std::ptrdiff_t>(rng.below(cycle.size())),
                cycle.end());
    if (rng.coin()) std::reverse(cycle.begin(), cycle.end());
    auto rotated = validate_instance(inst.tree_edges(), cycle, inst.strict());
    CHECK(verify_representation(compose_graph(rotated), build_boxes(rotated)).exact_match);

    // Renaming reverses the identifier order, which flips every tie-break.
    auto rename = [](const VertexId& v) { return "v" + std::to_string(100000 - std::stoi(v.substr(1))) + v.substr(0, 1); };
    std::vector<Edge> edges;
    for (const auto& [a, b] : inst.tree_edges()) edges.emplace_back(rename(a), rename(b));
    std::vector<VertexId> renamed_cycle;
    for (const auto& v : inst.cycle()) renamed_cycle.push_back(rename(v));
    auto renamed = validate_instance(edges, renamed_cycle, inst.strict());
    auto rep = build_boxes(renamed);
    CHECK(oracle::rect_intersections(oracle::to_rects(rep), true, rep.dimension == 2) ==
          oracle::halin_edges(edges, renamed_cycle));
  }
}

TEST_CASE("certificates are chordless cycles of length >= 4") {
  for (const auto& inst : corpus()) {
    auto cert = lower_bound_certificate(inst);
    if (classify_instance(inst) == InstanceKind::K4) {
      CHECK_FALSE(cert);
      continue;
    }
    REQUIRE(cert);
    CHECK(cert->cycle_vertices.size() >= 4);
    CHECK(oracle::induced_cycle(expected_edges(inst), cert->cycle_vertices));
  }
}

TEST_CASE("k = 3 certificates") {
  // Non-strict three-leaf trees with at least two internal vertices.
  int seen = 0;
  for (std::uint64_t seed = 0; seed < 400 && seen < 20; ++seed) {
    auto inst = generate({seed, 3, 1, false});
    if (inst.num_leaves() != 3) continue;
    ++seen;
    auto cert = lower_bound_certificate(inst);
    REQUIRE(cert);
    CHECK(cert->cycle_vertices.size() >= 4);
    CHECK(oracle::induced_cycle(expected_edges(inst), cert->cycle_vertices));
  }
  CHECK(seen > 0);
}

TEST_CASE("serial and parallel intersection kernels agree on the corpus") {
  for (const auto& inst : corpus()) {
    auto rep = build_boxes(inst);
    for (auto axes : {Axes::X, Axes::Y, Axes::Both}) {
      CHECK(intersection_edges(rep.boxes, axes) == intersection_edges_serial(rep.boxes, axes));
    }
  }
}

TEST_CASE("instance documents round-trip") {
  for (const auto& inst : corpus()) {
    auto text = serialize_instance(inst);
    CHECK(parse_instance(text) == inst);
    CHECK(serialize_instance(parse_instance(text)) == text);
    auto rep = build_boxes(inst);
    CHECK(parse_representation(representation_to_json(rep)) == rep);
  }
}
