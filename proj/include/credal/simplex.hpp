#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "credal/errors.hpp"
#include "credal/linear_system.hpp"
#include "credal/rational.hpp"

namespace credal {

enum class Sense { Minimize, Maximize };
enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  Rational value;
  std::vector<Rational> point;  // one entry per original variable when Optimal
};

namespace detail {

/**
 * Dense two-phase primal simplex over exact rationals.
 *
 * Standard form: minimize c.z subject to A z = b, z >= 0.  Original variables
 * map to one column each (nonneg systems) or to a split pair z+ - z-.  Every
 * inequality row gets a slack column and every row gets an artificial column
 * for phase 1.  Bland's smallest-index rule picks both the entering and the
 * leaving variable, which guarantees termination on degenerate systems.
 */
class SimplexTableau {
 public:
  explicit SimplexTableau(const LinearSystem& sys)
      : orig_(sys.variable_count()), split_(!sys.nonneg()) {
    const std::vector<LinearConstraint> rows = sys.rows();
    structural_ = split_ ? 2 * orig_ : orig_;
    int slack_count = 0;
    for (const LinearConstraint& r : rows)
      if (r.rel != Relation::Eq) ++slack_count;
    const int m = static_cast<int>(rows.size());
    slack_start_ = structural_;
    art_start_ = structural_ + slack_count;
    cols_ = art_start_ + m;

    tab_.assign(m, std::vector<Rational>(cols_ + 1, Rational(0)));
    basis_.resize(m);
    int slack = slack_start_;
    for (int i = 0; i < m; ++i) {
      const LinearConstraint& r = rows[i];
      for (int j = 0; j < orig_; ++j) {
        if (r.coeffs[j].is_zero()) continue;
        if (split_) {
          tab_[i][2 * j] = r.coeffs[j];
          tab_[i][2 * j + 1] = -r.coeffs[j];
        } else {
          tab_[i][j] = r.coeffs[j];
        }
      }
      if (r.rel == Relation::Ge)
        tab_[i][slack++] = -1;
      else if (r.rel == Relation::Le)
        tab_[i][slack++] = 1;
      tab_[i][cols_] = r.rhs;
      if (tab_[i][cols_] < Rational(0))
        for (Rational& v : tab_[i]) v = -v;
      tab_[i][art_start_ + i] = 1;
      basis_[i] = art_start_ + i;
    }
  }

  /// Minimize the sum of artificials.  Returns false when that minimum is
  /// positive, i.e. the system has no feasible point.
  bool phase1() {
    std::vector<Rational> cost(cols_, Rational(0));
    for (int j = art_start_; j < cols_; ++j) cost[j] = 1;
    build_cost_row(cost);
    run(cols_);  // artificials may enter; they start basic anyway
    if (objective_value() > Rational(0)) return false;
    drive_out_artificials();
    return true;
  }

  /// Phase 2 on a feasible tableau.  Returns Optimal or Unbounded.
  LpStatus phase2(const std::vector<Rational>& objective, Sense sense) {
    std::vector<Rational> cost(cols_, Rational(0));
    for (int j = 0; j < orig_; ++j) {
      Rational c = objective[j];
      if (sense == Sense::Maximize) c = -c;
      if (split_) {
        cost[2 * j] = c;
        cost[2 * j + 1] = -c;
      } else {
        cost[j] = c;
      }
    }
    build_cost_row(cost);
    if (!run(art_start_)) return LpStatus::Unbounded;
    value_ = objective_value();
    if (sense == Sense::Maximize) value_ = -value_;
    return LpStatus::Optimal;
  }

  Rational value() const { return value_; }

  /// Values of the original variables at the current basic solution.
  std::vector<Rational> point() const {
    std::vector<Rational> z(cols_, Rational(0));
    for (size_t i = 0; i < basis_.size(); ++i) z[basis_[i]] = tab_[i][cols_];
    std::vector<Rational> x(orig_);
    for (int j = 0; j < orig_; ++j) x[j] = split_ ? z[2 * j] - z[2 * j + 1] : z[j];
    return x;
  }

 private:
  // Reduced-cost row r = c - y A with the running objective in the last cell
  // (stored negated so that pivoting updates it like any other row).
  void build_cost_row(const std::vector<Rational>& cost) {
    cost_.assign(cols_ + 1, Rational(0));
    for (int j = 0; j < cols_; ++j) cost_[j] = cost[j];
    for (size_t i = 0; i < basis_.size(); ++i) {
      const Rational& cb = cost[basis_[i]];
      if (cb.is_zero()) continue;
      for (int j = 0; j <= cols_; ++j) cost_[j] -= cb * tab_[i][j];
    }
  }

  Rational objective_value() const { return -cost_[cols_]; }

  // Bland: entering = smallest column index with negative reduced cost below
  // `col_limit`; leaving = smallest ratio, ties by smallest basis index.
  // Returns false on an unbounded direction.
  bool run(int col_limit) {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < col_limit; ++j)
        if (cost_[j] < Rational(0)) {
          enter = j;
          break;
        }
      if (enter < 0) return true;
      int leave = -1;
      Rational best;
      for (size_t i = 0; i < tab_.size(); ++i) {
        if (tab_[i][enter] <= Rational(0)) continue;
        Rational ratio = tab_[i][cols_] / tab_[i][enter];
        if (leave < 0 || ratio < best ||
            (ratio == best && basis_[i] < basis_[leave])) {
          leave = static_cast<int>(i);
          best = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }

  void pivot(int pr, int pc) {
    const Rational p = tab_[pr][pc];
    for (int j = 0; j <= cols_; ++j) tab_[pr][j] /= p;
    for (size_t i = 0; i < tab_.size(); ++i) {
      if (static_cast<int>(i) == pr || tab_[i][pc].is_zero()) continue;
      const Rational f = tab_[i][pc];
      for (int j = 0; j <= cols_; ++j) tab_[i][j] -= f * tab_[pr][j];
    }
    if (!cost_[pc].is_zero()) {
      const Rational f = cost_[pc];
      for (int j = 0; j <= cols_; ++j) cost_[j] -= f * tab_[pr][j];
    }
    basis_[pr] = pc;
  }

  // After phase 1 any artificial still basic sits at value zero.  Pivot it
  // out on a real column when possible; otherwise its row is redundant and
  // gets dropped.
  void drive_out_artificials() {
    for (int i = static_cast<int>(tab_.size()) - 1; i >= 0; --i) {
      if (basis_[i] < art_start_) continue;
      int pc = -1;
      for (int j = 0; j < art_start_; ++j)
        if (!tab_[i][j].is_zero()) {
          pc = j;
          break;
        }
      if (pc >= 0) {
        pivot(i, pc);
      } else {
        tab_.erase(tab_.begin() + i);
        basis_.erase(basis_.begin() + i);
      }
    }
  }

  int orig_;
  bool split_;
  int structural_ = 0;
  int slack_start_ = 0;
  int art_start_ = 0;
  int cols_ = 0;
  std::vector<std::vector<Rational>> tab_;
  std::vector<Rational> cost_;
  std::vector<int> basis_;
  Rational value_;
};

}  // namespace detail

/// Solve min/max objective.x over the system.  The returned point is exact
/// and satisfies every constraint; status reports infeasible/unbounded cases.
inline LpSolution solve_lp(const LinearSystem& sys, const std::vector<Rational>& objective,
                           Sense sense) {
  if (static_cast<int>(objective.size()) != sys.variable_count())
    throw MalformedSystem("objective arity does not match variable count");
  detail::SimplexTableau t(sys);
  LpSolution out;
  if (!t.phase1()) {
    out.status = LpStatus::Infeasible;
    return out;
  }
  out.status = t.phase2(objective, sense);
  if (out.status == LpStatus::Optimal) {
    out.value = t.value();
    out.point = t.point();
  }
  return out;
}

/// Feasibility via phase 1 alone.
inline bool lp_feasible(const LinearSystem& sys) {
  detail::SimplexTableau t(sys);
  return t.phase1();
}

/// A feasible point when one exists.
inline std::optional<std::vector<Rational>> lp_feasible_point(const LinearSystem& sys) {
  detail::SimplexTableau t(sys);
  if (!t.phase1()) return std::nullopt;
  return t.point();
}

/// Optimal value or a thrown Infeasible/Unbounded.
inline Rational lp_optimize(const LinearSystem& sys, const std::vector<Rational>& objective,
                            Sense sense) {
  LpSolution s = solve_lp(sys, objective, sense);
  if (s.status == LpStatus::Infeasible) throw Infeasible("linear system is infeasible");
  if (s.status == LpStatus::Unbounded) throw Unbounded("objective is unbounded");
  return s.value;
}

}  // namespace credal
