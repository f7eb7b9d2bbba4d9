#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "halinbox/gen.hpp"

namespace halinbox {

struct InstanceOutcome {
  GenConfig config;
  std::size_t num_vertices = 0;
  std::size_t num_leaves = 0;
  InstanceKind kind = InstanceKind::General;
  bool exact_match = false;
  bool supergraphs = false;            // both per-axis checks
  std::size_t certificate_length = 0;  // 0 for K4
  bool certificate_ok = false;
  bool round_trip = false;
  std::string error;                   // non-empty on an exception

  bool passed() const {
    return error.empty() && exact_match && supergraphs && certificate_ok && round_trip;
  }
};

/// Full pipeline plus oracle on one generated instance. Never throws.
InstanceOutcome check_generated(const GenConfig& cfg);

struct SelftestResult {
  std::vector<InstanceOutcome> outcomes;  // in corpus order
  std::size_t passed = 0;
  std::uint64_t digest = 0;               // FNV-1a over every instance and representation
  std::string report;                     // what `halinbox selftest` prints

  bool ok() const { return passed == outcomes.size(); }
};

/// Runs corpus_configs(seed, count) through check_generated(), spread over
/// OpenMP threads. Output does not depend on the thread count.
SelftestResult run_selftest(std::size_t count, std::uint64_t seed, bool verbose = false);

}  // namespace halinbox
