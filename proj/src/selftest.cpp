#include "halinbox/selftest.hpp"

#include <fmt/format.h>

#include "halinbox/embed.hpp"
#include "halinbox/io.hpp"
#include "halinbox/verify.hpp"

namespace halinbox {

namespace {

constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ULL;
constexpr std::uint64_t kFnvPrime = 0x100000001b3ULL;

std::uint64_t fnv1a(std::uint64_t h, std::string_view bytes) {
  for (unsigned char c : bytes) {
    h ^= c;
    h *= kFnvPrime;
  }
  return h;
}

struct Checked {
  InstanceOutcome outcome;
  std::uint64_t hash = kFnvOffset;
};

Checked check_one(const GenConfig& cfg) {
  Checked out;
  InstanceOutcome& r = out.outcome;
  r.config = cfg;
  try {
    HalinInstance inst = generate(cfg);
    r.num_vertices = inst.num_vertices();
    r.num_leaves = inst.num_leaves();
    r.kind = classify_instance(inst);

    std::string doc = serialize_instance(inst);
    r.round_trip = parse_instance(doc) == inst;

    BoxRepresentation rep = build_boxes(inst);
    VerificationReport report = verify_representation(compose_graph(inst), rep);
    r.exact_match = report.exact_match;
    r.supergraphs = report.supergraph_f1 && report.supergraph_f2;

    auto cert = lower_bound_certificate(inst);
    if (r.kind == InstanceKind::K4) {
      r.certificate_ok = !cert.has_value() && rep.dimension == 1;
    } else {
      r.certificate_length = cert ? cert->cycle_vertices.size() : 0;
      r.certificate_ok = cert.has_value() && r.certificate_length >= 4 && rep.dimension == 2;
    }
    out.hash = fnv1a(fnv1a(out.hash, doc), representation_to_json(rep));
  } catch (const std::exception& e) {
    r.error = e.what();
  }
  return out;
}

}  // namespace

InstanceOutcome check_generated(const GenConfig& cfg) { return check_one(cfg).outcome; }

SelftestResult run_selftest(std::size_t count, std::uint64_t seed, bool verbose) {
  const auto configs = corpus_configs(seed, count);
  std::vector<Checked> checked(configs.size());

  const auto n = static_cast<long long>(configs.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (long long i = 0; i < n; ++i) {
    checked[static_cast<std::size_t>(i)] = check_one(configs[static_cast<std::size_t>(i)]);
  }

  SelftestResult result;
  result.digest = kFnvOffset;
  for (std::size_t i = 0; i < checked.size(); ++i) {
    const InstanceOutcome& r = checked[i].outcome;
    result.digest = fnv1a(result.digest, fmt::format("{:016x}", checked[i].hash));
    if (r.passed()) ++result.passed;
    if (verbose || !r.passed()) {
      result.report += fmt::format(
          "{} #{} seed={:016x} internal={} strict={} n={} k={} kind={} exact_match={} "
          "supergraphs={} certificate={}{}\n",
          r.passed() ? "ok  " : "FAIL", i, r.config.seed, r.config.num_internal,
          r.config.strict_halin, r.num_vertices, r.num_leaves, to_string(r.kind), r.exact_match,
          r.supergraphs, r.certificate_length, r.error.empty() ? "" : " error=" + r.error);
    }
    result.outcomes.push_back(r);
  }
  result.report += fmt::format("selftest: seed={} instances={} passed={} failed={} digest={:016x}\n",
                               seed, checked.size(), result.passed, checked.size() - result.passed,
                               result.digest);
  return result;
}

}  // namespace halinbox
