#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "credal/errors.hpp"
#include "credal/rational.hpp"

namespace credal {

using ProbVec4 = std::array<Rational, 4>;

/// A one-dimensional solution set: the segment between two distributions
/// over four worlds (a single point when the vertices coincide).
struct SegmentSet {
  ProbVec4 v1;
  ProbVec4 v2;
};

struct EccentricityReport {
  ProbVec4 point;
  ProbVec4 centroid;
  double ecc = 0.0;
};

inline void validate_point(const ProbVec4& v) {
  Rational sum(0);
  for (const Rational& c : v) {
    if (c.sign() < 0) throw InconsistentInputs("negative probability component");
    sum += c;
  }
  if (sum != Rational(1)) throw InconsistentInputs("probability components must sum to 1");
}

inline void validate_segment(const SegmentSet& s) {
  validate_point(s.v1);
  validate_point(s.v2);
}

inline bool is_degenerate(const SegmentSet& s) { return s.v1 == s.v2; }

namespace detail {

inline void check_unit_range(const Rational& x) {
  if (x < Rational(0) || x > Rational(1))
    throw InconsistentInputs("probability inputs must lie in [0,1]");
}

}  // namespace detail

/**
 * Solution set of {p(P) = x, p(P -> Q) = y} over the four worlds
 * (P&Q, P&!Q, !P&Q, !P&!Q): the segment between putting all of the
 * 1-x mass on !P&Q and putting it all on !P&!Q.
 */
inline SegmentSet modus_ponens_segment(const Rational& x, const Rational& y) {
  detail::check_unit_range(x);
  detail::check_unit_range(y);
  if (y < Rational(1) - x)
    throw InconsistentInputs("p(P -> Q) cannot fall below 1 - p(P)");
  const Rational head = y - (Rational(1) - x);
  const Rational miss = Rational(1) - y;
  const Rational tail = Rational(1) - x;
  return {{head, miss, tail, Rational(0)}, {head, miss, Rational(0), tail}};
}

/**
 * Solution set of {p(A) = a, p(B) = b} over the four worlds
 * (A&B, A&!B, !A&B, !A&!B): p(A&B) ranges over [max(0,a+b-1), min(a,b)].
 */
inline SegmentSet conjunction_segment(const Rational& a, const Rational& b) {
  detail::check_unit_range(a);
  detail::check_unit_range(b);
  const Rational lo = std::max(Rational(0), a + b - 1);
  const Rational hi = std::min(a, b);
  auto vertex = [&](const Rational& w) {
    return ProbVec4{w, a - w, b - w, Rational(1) - a - b + w};
  };
  return {vertex(lo), vertex(hi)};
}

inline ProbVec4 centroid(const SegmentSet& seg) {
  ProbVec4 out;
  for (int i = 0; i < 4; ++i) out[i] = (seg.v1[i] + seg.v2[i]) / 2;
  return out;
}

/// The independence product over (A&B, A&!B, !A&B, !A&!B).
inline ProbVec4 maxent_conjunction(const Rational& a, const Rational& b) {
  detail::check_unit_range(a);
  detail::check_unit_range(b);
  const Rational na = Rational(1) - a;
  const Rational nb = Rational(1) - b;
  return {a * b, a * nb, na * b, na * nb};
}

/// Affine parameter of p along the segment; PointNotInSet if p is off it.
inline Rational segment_parameter(const ProbVec4& p, const SegmentSet& seg) {
  int pivot = -1;
  for (int i = 0; i < 4; ++i)
    if (seg.v2[i] != seg.v1[i]) {
      pivot = i;
      break;
    }
  if (pivot < 0) throw DegenerateSegment("segment is a single point");
  const Rational t = (p[pivot] - seg.v1[pivot]) / (seg.v2[pivot] - seg.v1[pivot]);
  for (int i = 0; i < 4; ++i)
    if (p[i] != seg.v1[i] + t * (seg.v2[i] - seg.v1[i]))
      throw PointNotInSet("point is not on the segment");
  if (t < Rational(0) || t > Rational(1)) throw PointNotInSet("point is past a segment end");
  return t;
}

/**
 * Distance from the centroid, normalized by the farthest element of the
 * set.  The centroid of a segment is its midpoint, so for the point at
 * parameter t the ratio collapses to |2t - 1| exactly.
 */
inline Rational eccentricity(const ProbVec4& p, const SegmentSet& seg) {
  validate_segment(seg);
  validate_point(p);
  const Rational t = segment_parameter(p, seg);
  return abs(2 * t - 1);
}

inline EccentricityReport ecc_report(const ProbVec4& p, const SegmentSet& seg) {
  return {p, centroid(seg), eccentricity(p, seg).to_double()};
}

inline std::array<double, 4> to_double(const ProbVec4& v) {
  return {v[0].to_double(), v[1].to_double(), v[2].to_double(), v[3].to_double()};
}

/// Shannon entropy in nats, with 0 log 0 = 0.
inline double entropy(const std::array<double, 4>& p) {
  double h = 0.0;
  for (double c : p)
    if (c > 0.0) h -= c * std::log(c);
  return h;
}

/**
 * The entropy-maximizing element of a segment, located to parameter
 * tolerance 1e-12.  The entropy is concave along the affine parameter,
 * so the maximizer is bracketed by bisecting the sign of dH/dt; searching
 * on the derivative instead of the value keeps full precision at the flat
 * maximum.  A degenerate segment is its own answer.
 */
inline std::array<double, 4> maxent_on_segment(const SegmentSet& seg) {
  validate_segment(seg);
  const std::array<double, 4> a = to_double(seg.v1);
  if (is_degenerate(seg)) return a;
  const std::array<double, 4> b = to_double(seg.v2);
  auto at = [&](double t) {
    std::array<double, 4> p;
    for (int i = 0; i < 4; ++i) p[i] = a[i] + t * (b[i] - a[i]);
    return p;
  };
  // dH/dt = -sum d_i (ln p_i + 1); a vanishing component with d_i != 0
  // can only occur at an endpoint, where its term dominates
  auto slope = [&](double t) -> double {
    double s = 0.0;
    for (int i = 0; i < 4; ++i) {
      const double d = b[i] - a[i];
      if (d == 0.0) continue;
      const double p = a[i] + t * d;
      if (p <= 0.0)
        return d > 0.0 ? std::numeric_limits<double>::infinity()
                       : -std::numeric_limits<double>::infinity();
      s -= d * (std::log(p) + 1.0);
    }
    return s;
  };
  if (slope(0.0) <= 0.0) return a;
  if (slope(1.0) >= 0.0) return at(1.0);
  double lo = 0.0, hi = 1.0;
  while (hi - lo > 1e-12) {
    const double mid = (lo + hi) / 2.0;
    (slope(mid) > 0.0 ? lo : hi) = mid;
  }
  return at((lo + hi) / 2.0);
}

/// Wrap a vertex list as a segment; more than two distinct vertices means
/// the solution set is not one-dimensional.
inline SegmentSet segment_from_vertices(const std::vector<ProbVec4>& vertices) {
  if (vertices.empty()) throw InconsistentInputs("no vertices given");
  std::vector<ProbVec4> distinct;
  for (const ProbVec4& v : vertices) {
    validate_point(v);
    bool seen = false;
    for (const ProbVec4& d : distinct) seen = seen || d == v;
    if (!seen) distinct.push_back(v);
  }
  if (distinct.size() == 1) return {distinct[0], distinct[0]};
  if (distinct.size() == 2) return {distinct[0], distinct[1]};
  throw UnsupportedDimension("solution set has more than two vertices");
}

enum class EccMode { MaxentPoint, UniformPoint };

namespace detail {

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline double unit_draw(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;  // uniform on [0,1)
}

}  // namespace detail

/**
 * Monte Carlo mean eccentricity over conjunction solution sets with
 * (a, b) uniform on the unit square.  MaxentPoint scores the independence
 * product; UniformPoint scores a uniformly drawn element of the segment.
 * Sampling is chunked with per-chunk substreams derived from the seed, so
 * the estimate depends only on (mode, samples, seed).
 */
inline double expected_ecc_mc(EccMode mode, long long samples, std::uint64_t seed) {
  if (samples < 1) throw Error("sample count must be positive");
  constexpr long long kChunk = 65536;
  double total = 0.0;
  long long done = 0;
  std::uint64_t chunk = 0;
  while (done < samples) {
    const long long n = std::min(kChunk, samples - done);
    std::mt19937_64 rng(detail::mix_seed(seed, chunk++));
    for (long long i = 0; i < n; ++i) {
      double a, b, lo, hi;
      do {
        a = detail::unit_draw(rng);
        b = detail::unit_draw(rng);
        lo = std::max(0.0, a + b - 1.0);
        hi = std::min(a, b);
      } while (!(hi > lo));
      const double t =
          mode == EccMode::MaxentPoint ? (a * b - lo) / (hi - lo) : detail::unit_draw(rng);
      total += std::fabs(2.0 * t - 1.0);
    }
    done += n;
  }
  return total / static_cast<double>(samples);
}

/// Grid sweep of the independence point's eccentricity, as CSV.
inline std::string eccentricity_sweep_csv(int grid) {
  if (grid < 2) throw Error("grid must be at least 2");
  std::string out = "a,b,ecc\n";
  char line[96];
  for (int i = 1; i < grid; ++i)
    for (int j = 1; j < grid; ++j) {
      const Rational a(i, grid), b(j, grid);
      const SegmentSet seg = conjunction_segment(a, b);
      const Rational ecc = is_degenerate(seg)
                               ? Rational(0)
                               : eccentricity(maxent_conjunction(a, b), seg);
      std::snprintf(line, sizeof(line), "%.6g,%.6g,%.10g\n", a.to_double(), b.to_double(),
                    ecc.to_double());
      out += line;
    }
  return out;
}

}  // namespace credal
