#pragma once

#include <optional>
#include <string>

#include "credal/errors.hpp"
#include "credal/rational.hpp"

namespace credal {

/**
 * Closed probability interval [lower, upper] with 0 <= lower <= upper <= 1.
 */
class Interval {
 public:
  Interval(Rational lower, Rational upper) : lower_(std::move(lower)), upper_(std::move(upper)) {
    if (lower_ < Rational(0) || upper_ > Rational(1) || lower_ > upper_)
      throw InvalidInterval("invalid probability interval [" + lower_.str() + ", " + upper_.str() + "]");
  }

  static Interval unit() { return Interval(0, 1); }
  static Interval point(const Rational& p) { return Interval(p, p); }

  const Rational& lower() const { return lower_; }
  const Rational& upper() const { return upper_; }

  bool is_point() const { return lower_ == upper_; }

  bool contains(const Rational& p) const { return lower_ <= p && p <= upper_; }
  bool contains(const Interval& other) const {
    return lower_ <= other.lower_ && other.upper_ <= upper_;
  }

  /// Intersection, or nullopt when the intervals are disjoint.
  std::optional<Interval> intersect(const Interval& other) const {
    const Rational& lo = max(lower_, other.lower_);
    const Rational& hi = min(upper_, other.upper_);
    if (lo > hi) return std::nullopt;
    return Interval(lo, hi);
  }

  Rational width() const { return upper_ - lower_; }
  Rational midpoint() const { return (lower_ + upper_) / Rational(2); }

  friend bool operator==(const Interval& a, const Interval& b) {
    return a.lower_ == b.lower_ && a.upper_ == b.upper_;
  }
  friend bool operator!=(const Interval& a, const Interval& b) { return !(a == b); }

  std::string str() const { return "[" + lower_.str() + ", " + upper_.str() + "]"; }

 private:
  Rational lower_;
  Rational upper_;
};

}  // namespace credal
