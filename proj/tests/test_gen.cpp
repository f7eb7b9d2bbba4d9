#include "doctest.h"
#include "fixtures.hpp"
#include "halinbox/embed.hpp"
#include "halinbox/gen.hpp"
#include "oracle.hpp"

using namespace halinbox;

TEST_CASE("SplitMix64 reference values") {
  // Published outputs for seed 1234567.
  SplitMix64 rng(1234567);
  CHECK(rng.next() == 6457827717110365317ULL);
  CHECK(rng.next() == 3203168211198807973ULL);
  CHECK(rng.next() == 9817491932198370423ULL);
}

TEST_CASE("SplitMix64::below stays in range") {
  SplitMix64 rng(5);
  for (std::uint64_t n : {1ULL, 2ULL, 3ULL, 7ULL, 1000ULL}) {
    for (int i = 0; i < 200; ++i) CHECK(rng.below(n) < n);
  }
  CHECK(rng.below(0) == 0);
}

TEST_CASE("generate: single internal vertex gives a star") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto inst = generate({seed, 1, 3, true});
    auto kind = classify_instance(inst);
    CHECK((kind == InstanceKind::K4 || kind == InstanceKind::Wheel));
  }
}

TEST_CASE("generate: two internal vertices, strict") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto inst = generate({seed, 2, 2, true});
    CHECK(classify_instance(inst) == InstanceKind::General);
    CHECK(inst.internal_vertices().size() == 2);
    // Each internal vertex needs >= 2 leaves to reach tree degree 3.
    CHECK(inst.num_leaves() >= 4);
  }
}

TEST_CASE("generate is a pure function of the config") {
  GenConfig cfg{99, 25, 3, false};
  CHECK(generate(cfg) == generate(cfg));
  GenConfig other = cfg;
  other.seed = 100;
  CHECK_FALSE(generate(cfg) == generate(other));
}

TEST_CASE("generate rejects bad configs") {
  CHECK_THROWS_AS(generate({1, 0, 2, true}), HalinError);
  CHECK_THROWS_AS(generate({1, 3, 1, true}), HalinError);
  CHECK_NOTHROW(generate({1, 3, 1, false}));
}

TEST_CASE("strict instances have no tree vertex of degree 2") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto inst = generate({seed, 30, 2, true});
    for (std::size_t v = 0; v < inst.num_vertices(); ++v) {
      CHECK(inst.tree_degree(static_cast<int>(v)) != 2);
    }
  }
}

TEST_CASE("generate_nonplanar_variant") {
  SUBCASE("H6 has exactly one violating cycle up to rotation and reversal") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      auto v = generate_nonplanar_variant(fixtures::h6(), seed);
      CHECK(v.tree_edges() == fixtures::h6().tree_edges());
      CHECK(oracle::same_cycle(v.cycle(), {"c", "a", "d", "b"}));
    }
  }
  SUBCASE("preconditions") {
    CHECK_THROWS_AS(generate_nonplanar_variant(fixtures::wheel(6), 1), HalinError);
    auto k3 = validate_instance({{"r", "u"}, {"u", "a"}, {"u", "b"}, {"r", "c"}},
                                {"a", "b", "c"}, false);
    CHECK_THROWS_AS(generate_nonplanar_variant(k3, 1), HalinError);
  }
  SUBCASE("variants fail construction") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      auto inst = generate({seed, 8, 3, seed % 2 == 0});
      auto v = generate_nonplanar_variant(inst, seed);
      CHECK_THROWS_AS(build_boxes(v), NotConsecutiveError);
    }
  }
}
