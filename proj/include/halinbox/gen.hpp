#pragma once

#include <cstdint>
#include <vector>

#include "halinbox/instance.hpp"

namespace halinbox {

/// SplitMix64. The recurrence is fixed so that seeded corpora are
/// reproducible on any platform or in any other language:
///
///   state += 0x9E3779B97F4A7C15
///   z = state
///   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   return z ^ (z >> 31)
///
/// below(n) draws next() until the value is >= (2^64 - n) mod n and
/// returns it mod n, which removes modulo bias.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  std::uint64_t below(std::uint64_t n);
  bool coin() { return (next() >> 63) != 0; }

private:
  std::uint64_t state_;
};

struct GenConfig {
  std::uint64_t seed = 0;
  int num_internal = 1;   // |S|
  int max_children = 2;   // random leaf children per internal vertex, before padding
  bool strict_halin = true;
};

/// Random plane tree with the leaf cycle read off in depth-first child
/// order, so T ∪ C is planar by construction. Internal vertices are
/// named "n<i>", leaves "l<j>". Throws PreconditionViolated on a bad config.
HalinInstance generate(const GenConfig& cfg);

/// Same tree, two cycle positions swapped so that the construction hits
/// NotConsecutive. Swaps are tried in seeded random order, exhaustively.
/// Throws PreconditionViolated (k < 4 or |S| < 2) or NoViolatingSwap.
HalinInstance generate_nonplanar_variant(const HalinInstance& inst, std::uint64_t seed);

/// Mixed strict/non-strict configs with |V| from 4 to roughly 500.
std::vector<GenConfig> corpus_configs(std::uint64_t seed, std::size_t count);

}  // namespace halinbox
