#include "tdroute/travel_time.hpp"

#include <algorithm>
#include <cassert>

namespace tdroute {

const char* to_string(ProfileKind kind) {
  switch (kind) {
    case ProfileKind::kConstant:
      return "const";
    case ProfileKind::kPiecewiseConstant:
      return "pwc";
    case ProfileKind::kPiecewiseLinear:
      return "pwl";
  }
  return "?";
}

TravelTimeFunction TravelTimeFunction::constant(Ticks value) {
  return TravelTimeFunction(ProfileKind::kConstant, {ProfilePoint{0, value}});
}

TravelTimeFunction TravelTimeFunction::piecewise_constant(std::vector<ProfilePoint> breakpoints) {
  return TravelTimeFunction(ProfileKind::kPiecewiseConstant, std::move(breakpoints));
}

TravelTimeFunction TravelTimeFunction::piecewise_linear(std::vector<ProfilePoint> samples) {
  return TravelTimeFunction(ProfileKind::kPiecewiseLinear, std::move(samples));
}

Duration TravelTimeFunction::operator()(TimePoint t) const { return evaluate(*this, t); }

namespace {

// Nearest integer to num / den, ties away from zero. den > 0.
Ticks divide_round_half_away(__int128 num, __int128 den) {
  assert(den > 0);
  const bool negative = num < 0;
  const __int128 mag = negative ? -num : num;
  const __int128 q = (2 * mag + den) / (2 * den);
  return static_cast<Ticks>(negative ? -q : q);
}

// Index of the last point with at <= t, or 0 when t precedes every point.
std::size_t piece_index(std::span<const ProfilePoint> pts, TimePoint t) {
  auto it = std::upper_bound(pts.begin(), pts.end(), t,
                             [](TimePoint lhs, const ProfilePoint& p) { return lhs < p.at; });
  if (it == pts.begin()) return 0;
  return static_cast<std::size_t>(it - pts.begin()) - 1;
}

Ticks interpolate(const ProfilePoint& a, const ProfilePoint& b, TimePoint t) {
  const __int128 span = static_cast<__int128>(b.at.ticks) - a.at.ticks;
  const __int128 rise = static_cast<__int128>(b.value.ticks) - a.value.ticks;
  const __int128 offset = static_cast<__int128>(t.ticks) - a.at.ticks;
  return divide_round_half_away(static_cast<__int128>(a.value.ticks) * span + rise * offset, span);
}

}  // namespace

Duration evaluate(const TravelTimeFunction& f, TimePoint t) {
  const auto pts = f.points();
  if (pts.empty()) return Duration{0};
  switch (f.kind()) {
    case ProfileKind::kConstant:
      return pts.front().value;
    case ProfileKind::kPiecewiseConstant:
      return pts[piece_index(pts, t)].value;
    case ProfileKind::kPiecewiseLinear: {
      if (t <= pts.front().at) return pts.front().value;
      if (t >= pts.back().at) return pts.back().value;
      const std::size_t i = piece_index(pts, t);
      if (pts[i].at == t || pts[i + 1].at <= pts[i].at) return pts[i].value;
      return Duration{interpolate(pts[i], pts[i + 1], t)};
    }
  }
  return Duration{0};
}

FifoReport check_fifo(const TravelTimeFunction& f) {
  const auto pts = f.points();
  auto violation = [&](Ticks t1) {
    // Raw sums: the witness must be reportable even for malformed profiles.
    const TimePoint a{t1}, b{t1 + 1};
    return FifoReport{false, FifoWitness{a, b, TimePoint{a.ticks + evaluate(f, a).ticks},
                                         TimePoint{b.ticks + evaluate(f, b).ticks}}};
  };

  switch (f.kind()) {
    case ProfileKind::kConstant:
      return {};
    case ProfileKind::kPiecewiseConstant:
      for (std::size_t i = 1; i < pts.size(); ++i) {
        if (pts[i].at.ticks <= 0 || pts[i].at <= pts[i - 1].at) continue;
        if (pts[i].value.ticks < pts[i - 1].value.ticks - 1) return violation(pts[i].at.ticks - 1);
      }
      return {};
    case ProfileKind::kPiecewiseLinear:
      for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const Ticks len = pts[i + 1].at.ticks - pts[i].at.ticks;
        const Ticks drop = pts[i].value.ticks - pts[i + 1].value.ticks;
        if (len <= 0 || drop <= len) continue;
        // Slope below -1: some tick step inside this piece drops by 2 or more.
        for (Ticks t = pts[i].at.ticks; t < pts[i + 1].at.ticks; ++t) {
          const Ticks here = evaluate(f, TimePoint{t}).ticks;
          const Ticks next = evaluate(f, TimePoint{t + 1}).ticks;
          if (next < here - 1) return violation(t);
        }
      }
      return {};
  }
  return {};
}

Duration min_travel_time(const TravelTimeFunction& f) {
  // Linear pieces attain their extrema at the samples.
  const auto pts = f.points();
  if (pts.empty()) return Duration{0};
  return std::min_element(pts.begin(), pts.end(),
                          [](const auto& a, const auto& b) { return a.value < b.value; })
      ->value;
}

Duration max_travel_time(const TravelTimeFunction& f) {
  const auto pts = f.points();
  if (pts.empty()) return Duration{0};
  return std::max_element(pts.begin(), pts.end(),
                          [](const auto& a, const auto& b) { return a.value < b.value; })
      ->value;
}

std::vector<std::string> function_issues(const TravelTimeFunction& f) {
  std::vector<std::string> issues;
  const auto pts = f.points();
  if (pts.empty()) {
    issues.emplace_back("profile has no points");
    return issues;
  }
  if (f.kind() == ProfileKind::kPiecewiseConstant && pts.front().at.ticks != 0) {
    issues.emplace_back("first breakpoint must start at 0");
  }
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (pts[i].at.ticks < 0) issues.emplace_back("breakpoint time is negative");
    if (i > 0 && pts[i].at <= pts[i - 1].at) {
      issues.emplace_back("breakpoint times are not strictly increasing");
    }
    if (pts[i].value.ticks < 0) issues.emplace_back("negative travel time");
  }
  return issues;
}

}  // namespace tdroute
