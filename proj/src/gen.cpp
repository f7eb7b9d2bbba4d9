#include "halinbox/gen.hpp"

#include <algorithm>
#include <string>

#include "halinbox/embed.hpp"

namespace halinbox {

std::uint64_t SplitMix64::next() {
  state_ += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t n) {
  if (n <= 1) return 0;
  const std::uint64_t threshold = (0 - n) % n;
  for (;;) {
    std::uint64_t r = next();
    if (r >= threshold) return r % n;
  }
}

namespace {

struct PlaneTree {
  std::vector<std::vector<int>> children;  // ordered left to right
  std::vector<char> leaf;

  int add(bool is_leaf) {
    children.emplace_back();
    leaf.push_back(is_leaf ? 1 : 0);
    return static_cast<int>(children.size()) - 1;
  }
};

void attach(PlaneTree& t, SplitMix64& rng, int parent, int child) {
  auto& ch = t.children[static_cast<std::size_t>(parent)];
  auto pos = static_cast<std::ptrdiff_t>(rng.below(ch.size() + 1));
  ch.insert(ch.begin() + pos, child);
}

}  // namespace

HalinInstance generate(const GenConfig& cfg) {
  if (cfg.num_internal < 1) {
    throw HalinError(ErrorCode::PreconditionViolated, "num_internal must be >= 1");
  }
  if (cfg.max_children < (cfg.strict_halin ? 2 : 1)) {
    throw HalinError(ErrorCode::PreconditionViolated, "max_children too small");
  }
  SplitMix64 rng(cfg.seed);
  PlaneTree t;
  const int internal = cfg.num_internal;
  for (int i = 0; i < internal; ++i) t.add(false);
  for (int i = 1; i < internal; ++i) {
    attach(t, rng, static_cast<int>(rng.below(static_cast<std::uint64_t>(i))), i);
  }

  const std::size_t min_degree = cfg.strict_halin ? 3 : 2;
  for (int v = 0; v < internal; ++v) {
    auto extra = rng.below(static_cast<std::uint64_t>(cfg.max_children) + 1);
    for (std::uint64_t j = 0; j < extra; ++j) attach(t, rng, v, t.add(true));
    auto degree = [&] { return t.children[static_cast<std::size_t>(v)].size() + (v == 0 ? 0 : 1); };
    while (degree() < min_degree) attach(t, rng, v, t.add(true));
  }
  auto num_leaves = [&] { return t.children.size() - static_cast<std::size_t>(internal); };
  while (num_leaves() < 3) {
    attach(t, rng, static_cast<int>(rng.below(static_cast<std::uint64_t>(internal))), t.add(true));
  }

  auto name = [&](int v) {
    return v < internal ? "n" + std::to_string(v) : "l" + std::to_string(v - internal);
  };

  std::vector<Edge> edges;
  std::vector<VertexId> cycle;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    if (t.leaf[static_cast<std::size_t>(v)]) {
      cycle.push_back(name(v));
      continue;
    }
    const auto& ch = t.children[static_cast<std::size_t>(v)];
    for (int c : ch) edges.emplace_back(name(v), name(c));
    for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back(*it);
  }

  std::rotate(cycle.begin(),
              cycle.begin() + static_cast<std::ptrdiff_t>(rng.below(cycle.size())), cycle.end());
  if (rng.coin()) std::reverse(cycle.begin(), cycle.end());

  return validate_instance(std::move(edges), std::move(cycle), cfg.strict_halin);
}

HalinInstance generate_nonplanar_variant(const HalinInstance& inst, std::uint64_t seed) {
  const std::size_t k = inst.num_leaves();
  if (k < 4 || inst.internal_vertices().size() < 2) {
    throw HalinError(ErrorCode::PreconditionViolated,
                     "needs k >= 4 and at least two internal vertices");
  }
  std::vector<std::pair<std::size_t, std::size_t>> swaps;
  swaps.reserve(k * (k - 1) / 2);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) swaps.emplace_back(i, j);
  }
  SplitMix64 rng(seed);
  for (std::size_t i = swaps.size(); i > 1; --i) {
    std::swap(swaps[i - 1], swaps[rng.below(i)]);
  }

  for (const auto& [i, j] : swaps) {
    std::vector<VertexId> cycle = inst.cycle();
    std::swap(cycle[i], cycle[j]);
    HalinInstance variant = validate_instance(inst.tree_edges(), std::move(cycle), inst.strict());
    RootedIndex idx = root_tree(variant, find_special_vertex(variant));
    LeafOrdering ord = order_leaves(variant, idx);
    try {
      check_consecutive(variant, idx, ord);
    } catch (const NotConsecutiveError&) {
      return variant;
    }
  }
  throw HalinError(ErrorCode::NoViolatingSwap, "every swap keeps the leaf sets consecutive");
}

std::vector<GenConfig> corpus_configs(std::uint64_t seed, std::size_t count) {
  SplitMix64 rng(seed);
  std::vector<GenConfig> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    GenConfig cfg;
    cfg.seed = rng.next();
    cfg.strict_halin = rng.coin();
    // Skewed toward small trees so the tiny shapes show up often.
    auto cap = rng.below(170) + 1;
    cfg.num_internal = 1 + static_cast<int>(rng.below(cap));
    cfg.max_children = (cfg.strict_halin ? 2 : 1) + static_cast<int>(rng.below(3));
    out.push_back(cfg);
  }
  return out;
}

}  // namespace halinbox
