#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "halinbox/graph.hpp"

namespace halinbox {

/// Exact half-integer value, stored as twice its magnitude.
class Half {
public:
  constexpr Half() = default;
  static constexpr Half from_halves(std::int64_t halves) { return Half(halves); }
  static constexpr Half whole(std::int64_t value) { return Half(2 * value); }

  constexpr std::int64_t halves() const { return halves_; }
  constexpr bool is_integer() const { return halves_ % 2 == 0; }
  double to_double() const { return static_cast<double>(halves_) / 2.0; }

  /// "3", "1.5", "-0.5".
  std::string to_decimal() const;

  /// Parses the output of to_decimal(); nullopt for anything that is not an
  /// exact half-integer.
  static std::optional<Half> parse_decimal(std::string_view text);

  constexpr Half operator+(Half o) const { return Half(halves_ + o.halves_); }
  constexpr Half operator-(Half o) const { return Half(halves_ - o.halves_); }
  constexpr auto operator<=>(const Half&) const = default;

private:
  constexpr explicit Half(std::int64_t halves) : halves_(halves) {}
  std::int64_t halves_ = 0;
};

inline constexpr Half kHalf = Half::from_halves(1);

/// Closed interval [lo, hi] with lo <= hi. Point intervals are allowed.
struct Interval {
  Half lo;
  Half hi;

  constexpr bool contains(Half p) const { return lo <= p && p <= hi; }
  constexpr bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
  constexpr bool overlaps(const Interval& o) const { return lo <= o.hi && o.lo <= hi; }
  constexpr bool operator==(const Interval&) const = default;
};

constexpr Interval interval(std::int64_t lo, std::int64_t hi) {
  return {Half::whole(lo), Half::whole(hi)};
}

/// One interval per vertex, aligned with a lexicographically sorted vertex list.
struct IntervalAssignment {
  std::vector<VertexId> vertices;
  std::vector<Interval> intervals;

  const Interval& at(std::string_view id) const;
};

}  // namespace halinbox
