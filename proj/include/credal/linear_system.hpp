#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "credal/errors.hpp"
#include "credal/rational.hpp"

namespace credal {

enum class Relation { Eq, Ge, Le };

inline const char* relation_symbol(Relation r) {
  switch (r) {
    case Relation::Eq: return "=";
    case Relation::Ge: return ">=";
    default: return "<=";
  }
}

/// One linear constraint  coeffs . x  (=|>=|<=)  rhs.
struct LinearConstraint {
  std::vector<Rational> coeffs;
  Relation rel = Relation::Eq;
  Rational rhs;

  bool holds_at(const std::vector<Rational>& x) const {
    Rational lhs = 0;
    for (size_t j = 0; j < coeffs.size(); ++j) lhs += coeffs[j] * x[j];
    switch (rel) {
      case Relation::Eq: return lhs == rhs;
      case Relation::Ge: return lhs >= rhs;
      default: return lhs <= rhs;
    }
  }
};

/**
 * A system of linear constraints over a fixed number of variables.
 *
 * Two orthogonal flags describe implicit structure:
 *   - nonneg:     every variable is constrained to be >= 0;
 *   - normalized: the variables additionally satisfy sum(x) = 1.
 *
 * rows() materializes the explicit constraints plus, when normalized is set,
 * a single trailing unit-sum equality row.  The nonneg flag stays implicit
 * and is handled by consumers directly.
 */
class LinearSystem {
 public:
  explicit LinearSystem(int variable_count, bool nonneg = true, bool normalized = true)
      : n_(variable_count), nonneg_(nonneg), normalized_(normalized) {
    if (variable_count <= 0) throw MalformedSystem("variable count must be positive");
  }

  void add(LinearConstraint c) {
    if (static_cast<int>(c.coeffs.size()) != n_)
      throw MalformedSystem("constraint arity " + std::to_string(c.coeffs.size()) +
                            " does not match variable count " + std::to_string(n_));
    constraints_.push_back(std::move(c));
  }

  void add(std::vector<Rational> coeffs, Relation rel, Rational rhs) {
    add(LinearConstraint{std::move(coeffs), rel, std::move(rhs)});
  }

  int variable_count() const { return n_; }
  bool nonneg() const { return nonneg_; }
  bool normalized() const { return normalized_; }
  const std::vector<LinearConstraint>& constraints() const { return constraints_; }

  /// Explicit constraints plus the unit-sum row when normalized.
  std::vector<LinearConstraint> rows() const {
    std::vector<LinearConstraint> out = constraints_;
    if (normalized_) {
      LinearConstraint sum;
      sum.coeffs.assign(n_, Rational(1));
      sum.rel = Relation::Eq;
      sum.rhs = 1;
      out.push_back(std::move(sum));
    }
    return out;
  }

  /// Exact membership test, including the implicit nonneg/unit-sum structure.
  bool satisfies(const std::vector<Rational>& x) const {
    if (static_cast<int>(x.size()) != n_) return false;
    if (nonneg_)
      for (const Rational& v : x)
        if (v < Rational(0)) return false;
    for (const LinearConstraint& c : rows())
      if (!c.holds_at(x)) return false;
    return true;
  }

 private:
  int n_;
  bool nonneg_;
  bool normalized_;
  std::vector<LinearConstraint> constraints_;
};

}  // namespace credal
