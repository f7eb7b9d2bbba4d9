#pragma once

#include "halinbox/instance.hpp"

namespace fixtures {

// Special vertex "p" sorts before root "r", so the tie-break picks p.
inline halinbox::HalinInstance h6(std::vector<halinbox::VertexId> cycle = {"c", "d", "a", "b"}) {
  return halinbox::validate_instance(
      {{"r", "p"}, {"r", "a"}, {"r", "b"}, {"p", "c"}, {"p", "d"}}, std::move(cycle), true);
}

inline halinbox::HalinInstance k4() {
  return halinbox::validate_instance({{"x", "a"}, {"x", "b"}, {"x", "c"}}, {"a", "b", "c"}, true);
}

inline halinbox::HalinInstance wheel(int k) {
  std::vector<halinbox::Edge> edges;
  std::vector<halinbox::VertexId> cycle;
  for (int i = 0; i < k; ++i) {
    cycle.push_back("m" + std::to_string(i));
    edges.emplace_back("hub", cycle.back());
  }
  return halinbox::validate_instance(std::move(edges), std::move(cycle), true);
}

}  // namespace fixtures
