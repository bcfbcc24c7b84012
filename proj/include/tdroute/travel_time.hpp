#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tdroute/time.hpp"

namespace tdroute {

enum class ProfileKind { kConstant, kPiecewiseConstant, kPiecewiseLinear };

const char* to_string(ProfileKind kind);

/// One breakpoint (piecewise constant) or sample (piecewise linear).
struct ProfilePoint {
  TimePoint at;
  Duration value;

  constexpr ProfilePoint(TimePoint at_, Duration value_) : at(at_), value(value_) {}
  constexpr ProfilePoint(Ticks at_, Ticks value_) : at{at_}, value{value_} {}

  friend constexpr bool operator==(const ProfilePoint&, const ProfilePoint&) = default;
};

/// Travel time c(t) of an edge as a function of the departure time t.
///
/// - Constant: one value for all t.
/// - PiecewiseConstant: breakpoint i holds its value on [at_i, at_{i+1}).
/// - PiecewiseLinear: linear interpolation between consecutive samples,
///   rounded to the nearest tick with ties away from zero.
///
/// Both profile kinds hold their first value before the first point and
/// their last value forever after the last point, so evaluation is total.
/// Factories do not validate; see function_issues() and validate_graph().
class TravelTimeFunction {
 public:
  TravelTimeFunction() : TravelTimeFunction(constant(0)) {}

  static TravelTimeFunction constant(Ticks value);
  static TravelTimeFunction piecewise_constant(std::vector<ProfilePoint> breakpoints);
  static TravelTimeFunction piecewise_linear(std::vector<ProfilePoint> samples);

  ProfileKind kind() const { return kind_; }
  std::span<const ProfilePoint> points() const { return points_; }

  Duration operator()(TimePoint t) const;

  friend bool operator==(const TravelTimeFunction&, const TravelTimeFunction&) = default;

 private:
  TravelTimeFunction(ProfileKind kind, std::vector<ProfilePoint> points)
      : kind_(kind), points_(std::move(points)) {}

  ProfileKind kind_;
  std::vector<ProfilePoint> points_;
};

Duration evaluate(const TravelTimeFunction& f, TimePoint t);

/// Two departures where the earlier one does not arrive first:
/// t1 < t2 and a1 = t1 + c(t1) > a2 = t2 + c(t2).
struct FifoWitness {
  TimePoint t1;
  TimePoint t2;
  TimePoint a1;
  TimePoint a2;

  friend bool operator==(const FifoWitness&, const FifoWitness&) = default;
};

struct FifoReport {
  bool is_fifo = true;
  std::optional<FifoWitness> witness;
};

/// FIFO check by segment analysis at tick granularity.
///
/// A function is FIFO when t + c(t) never decreases from one tick to the
/// next. A constant piece always qualifies; a linear piece qualifies iff its
/// slope is >= -1 (rounding preserves this); a piecewise-constant step at t_b
/// qualifies iff c(t_b) >= c(t_b - 1) - 1.
FifoReport check_fifo(const TravelTimeFunction& f);

/// Minimum of c(t) over all t (free-flow time).
Duration min_travel_time(const TravelTimeFunction& f);

/// Maximum of c(t) over all t.
Duration max_travel_time(const TravelTimeFunction& f);

/// Invariant violations of a single function; empty when valid.
std::vector<std::string> function_issues(const TravelTimeFunction& f);

}  // namespace tdroute
