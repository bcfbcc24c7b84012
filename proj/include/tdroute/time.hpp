#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>

namespace tdroute {

/// Integer tick count. All temporal arithmetic in the engine is exact.
using Ticks = std::int64_t;

struct Duration {
  Ticks ticks = 0;

  friend constexpr auto operator<=>(Duration, Duration) = default;
};

/// Absolute time measured in ticks from the origin. Never negative.
struct TimePoint {
  Ticks ticks = 0;

  friend constexpr auto operator<=>(TimePoint, TimePoint) = default;
};

/// Raised when a time computation leaves the representable range
/// (overflow, or a result before the origin).
class TimeRangeError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

inline TimePoint operator+(TimePoint t, Duration d) {
  Ticks out = 0;
  if (__builtin_add_overflow(t.ticks, d.ticks, &out)) {
    throw TimeRangeError("time overflow");
  }
  if (out < 0) {
    throw TimeRangeError("time before origin");
  }
  return TimePoint{out};
}

inline Duration operator-(TimePoint a, TimePoint b) { return Duration{a.ticks - b.ticks}; }

inline Duration operator+(Duration a, Duration b) {
  Ticks out = 0;
  if (__builtin_add_overflow(a.ticks, b.ticks, &out)) {
    throw TimeRangeError("duration overflow");
  }
  return Duration{out};
}

}  // namespace tdroute
