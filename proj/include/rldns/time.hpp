#pragma once

#include <chrono>
#include <compare>
#include <cstdint>

namespace rldns {

using Duration = std::chrono::microseconds;

// A point in time with microsecond resolution. The epoch is arbitrary: real
// components anchor it to the steady clock, the simulator and tests drive it
// as a virtual clock starting at zero.
struct Instant {
  int64_t us = 0;

  constexpr auto operator<=>(const Instant&) const = default;

  static constexpr Instant from_us(int64_t value) { return Instant{value}; }
  static constexpr Instant from_ms(int64_t value) { return Instant{value * 1000}; }
  static constexpr Instant from_seconds(int64_t value) { return Instant{value * 1'000'000}; }

  static Instant now() {
    return Instant{std::chrono::duration_cast<std::chrono::microseconds>(
                       std::chrono::steady_clock::now().time_since_epoch())
                       .count()};
  }
};

constexpr Instant operator+(Instant t, Duration d) { return Instant{t.us + d.count()}; }
constexpr Instant operator-(Instant t, Duration d) { return Instant{t.us - d.count()}; }
constexpr Duration operator-(Instant a, Instant b) { return Duration{a.us - b.us}; }

// Elapsed whole seconds from `from` to `to`, floored. Negative elapsed floors
// towards minus infinity so callers never overstate freshness.
constexpr int64_t whole_seconds_between(Instant from, Instant to) {
  int64_t diff = to.us - from.us;
  int64_t q = diff / 1'000'000;
  if (diff % 1'000'000 != 0 && diff < 0) {
    --q;
  }
  return q;
}

}  // namespace rldns
