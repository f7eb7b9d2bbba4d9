#include "halinbox/interval.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace halinbox {

std::string Half::to_decimal() const {
  std::int64_t whole = halves_ / 2;
  if (is_integer()) return std::to_string(whole);
  // Truncation toward zero: -1 halves is "-0.5", 3 halves is "1.5".
  std::string out = halves_ < 0 ? "-" : "";
  out += std::to_string(whole < 0 ? -whole : whole);
  out += ".5";
  return out;
}

std::optional<Half> Half::parse_decimal(std::string_view text) {
  bool negative = false;
  if (!text.empty() && text.front() == '-') {
    negative = true;
    text.remove_prefix(1);
  }
  if (text.empty()) return std::nullopt;
  std::string_view int_part = text;
  std::string_view frac;
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    int_part = text.substr(0, dot);
    frac = text.substr(dot + 1);
  }
  if (int_part.empty()) return std::nullopt;
  std::int64_t whole = 0;
  auto [ptr, ec] = std::from_chars(int_part.data(), int_part.data() + int_part.size(), whole);
  if (ec != std::errc{} || ptr != int_part.data() + int_part.size()) return std::nullopt;
  std::int64_t extra = 0;
  if (!frac.empty()) {
    std::size_t zeros_from = 0;
    if (frac.front() == '5') {
      extra = 1;
      zeros_from = 1;
    }
    if (!std::all_of(frac.begin() + static_cast<std::ptrdiff_t>(zeros_from), frac.end(),
                     [](char c) { return c == '0'; })) {
      return std::nullopt;
    }
  }
  std::int64_t halves = 2 * whole + extra;
  return Half::from_halves(negative ? -halves : halves);
}

const Interval& IntervalAssignment::at(std::string_view id) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), id);
  if (it == vertices.end() || *it != id) {
    throw std::out_of_range("no interval for vertex '" + std::string(id) + "'");
  }
  return intervals[static_cast<std::size_t>(it - vertices.begin())];
}

}  // namespace halinbox
