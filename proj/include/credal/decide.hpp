#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "credal/deduction.hpp"
#include "credal/errors.hpp"
#include "credal/formula.hpp"
#include "credal/interval.hpp"
#include "credal/linear_system.hpp"
#include "credal/rational.hpp"
#include "credal/simplex.hpp"
#include "credal/worlds.hpp"

namespace credal {

/**
 * A finite decision problem: actions against mutually exclusive and
 * exhaustive conditions, with a fully populated utility matrix (one row
 * per action, one column per condition).
 */
struct DecisionProblem {
  std::vector<std::string> actions;
  std::vector<std::string> conditions;
  std::vector<std::vector<Rational>> utility;

  int action_count() const { return static_cast<int>(actions.size()); }
  int condition_count() const { return static_cast<int>(conditions.size()); }
};

inline void validate_problem(const DecisionProblem& p) {
  if (p.actions.size() < 2)
    throw MalformedSystem("decision problem needs at least two actions");
  if (p.conditions.size() < 2)
    throw MalformedSystem("decision problem needs at least two conditions");
  if (std::set<std::string>(p.actions.begin(), p.actions.end()).size() != p.actions.size())
    throw MalformedSystem("duplicate action name");
  if (std::set<std::string>(p.conditions.begin(), p.conditions.end()).size() !=
      p.conditions.size())
    throw MalformedSystem("duplicate condition name");
  if (p.utility.size() != p.actions.size())
    throw MalformedSystem("utility matrix must have one row per action");
  for (const auto& row : p.utility)
    if (row.size() != p.conditions.size())
      throw MalformedSystem("utility row must have one entry per condition");
}

/**
 * A convex set of probability distributions, given as a linear system over
 * some variable space together with, for each condition, the variable
 * indices whose sum is that condition's probability.  The variable space
 * may be the conditions themselves (condition_map[j] = {j}) or a finer
 * one, e.g. world classes or joint-database cells.
 */
struct CredalDescription {
  LinearSystem system;
  std::vector<std::vector<int>> condition_map;
};

struct AdmissibleSet {
  std::vector<std::string> actions;
  std::string provenance;
};

namespace detail {

inline void validate_credal(const DecisionProblem& p, const CredalDescription& credal) {
  if (static_cast<int>(credal.condition_map.size()) != p.condition_count())
    throw MalformedSystem("condition map must cover every condition");
  std::vector<bool> seen(credal.system.variable_count(), false);
  for (const auto& vars : credal.condition_map)
    for (int v : vars) {
      if (v < 0 || v >= credal.system.variable_count())
        throw MalformedSystem("condition map refers to a variable outside the system");
      if (seen[v]) throw MalformedSystem("variable assigned to two conditions");
      seen[v] = true;
    }
}

}  // namespace detail

/**
 * The linear description of action i's domain: one weak inequality per
 * rival action k, stating that i's expected utility is at least k's.
 */
inline std::vector<LinearConstraint> domain_inequalities(const DecisionProblem& p, int i,
                                                         const CredalDescription& credal) {
  validate_problem(p);
  detail::validate_credal(p, credal);
  if (i < 0 || i >= p.action_count()) throw MalformedSystem("action index out of range");
  std::vector<LinearConstraint> out;
  for (int k = 0; k < p.action_count(); ++k) {
    if (k == i) continue;
    std::vector<Rational> coeffs(credal.system.variable_count(), Rational(0));
    for (int j = 0; j < p.condition_count(); ++j) {
      const Rational diff = p.utility[i][j] - p.utility[k][j];
      for (int v : credal.condition_map[j]) coeffs[v] += diff;
    }
    out.push_back({std::move(coeffs), Relation::Ge, Rational(0)});
  }
  return out;
}

namespace detail {

inline bool admissible_against_all(const DecisionProblem& p, int i,
                                   const CredalDescription& credal) {
  LinearSystem augmented = credal.system;
  for (LinearConstraint& c : domain_inequalities(p, i, credal)) augmented.add(std::move(c));
  return lp_feasible(augmented);
}

}  // namespace detail

/// True iff some distribution in the credal set makes action i a maximizer.
inline bool e_admissible(const DecisionProblem& p, int i, const CredalDescription& credal) {
  validate_problem(p);
  detail::validate_credal(p, credal);
  if (i < 0 || i >= p.action_count()) throw MalformedSystem("action index out of range");
  if (!lp_feasible(credal.system)) throw InfeasibleCredal("credal set is empty");
  return detail::admissible_against_all(p, i, credal);
}

/**
 * All admissible actions, restricted to `candidates` (indices; empty means
 * all).  Domain inequalities are always built against every rival, whether
 * or not the rival is still a candidate.
 */
inline AdmissibleSet admissible_set(const DecisionProblem& p, const CredalDescription& credal,
                                    const std::vector<int>& candidates = {}) {
  validate_problem(p);
  detail::validate_credal(p, credal);
  if (!lp_feasible(credal.system)) throw InfeasibleCredal("credal set is empty");
  std::vector<int> pool = candidates;
  if (pool.empty())
    for (int i = 0; i < p.action_count(); ++i) pool.push_back(i);
  AdmissibleSet out;
  for (int i : pool)
    if (detail::admissible_against_all(p, i, credal)) out.actions.push_back(p.actions[i]);
  out.provenance = std::to_string(credal.system.constraints().size()) + " constraints over " +
                   std::to_string(credal.system.variable_count()) + " variables";
  return out;
}

/**
 * The statements that make a condition list mutually exclusive and
 * exhaustive: one disjunction bounded [1,1] and one conjunction per pair
 * bounded [0,0].
 */
inline std::vector<ProbStatement> exclusivity_statements(const std::vector<Formula>& conditions) {
  const int n = static_cast<int>(conditions.size());
  if (n < 2) throw DegenerateConditions("need at least two conditions");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (conditions[i] == conditions[j]) throw DegenerateConditions("conditions must be distinct");
  std::vector<ProbStatement> out;
  Formula all = conditions[0];
  for (int i = 1; i < n; ++i) all = Formula::disjunction(all, conditions[i]);
  out.push_back(premise(std::move(all), Interval::point(Rational(1))));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      out.push_back(premise(Formula::conjunction(conditions[i], conditions[j]),
                            Interval::point(Rational(0))));
  return out;
}

/**
 * The credal set described by current per-condition probability intervals:
 * one variable per condition, normalized, with a lower/upper row wherever
 * the interval actually constrains.
 */
inline CredalDescription bounds_snapshot_system(const DecisionProblem& p,
                                                const std::vector<Interval>& intervals) {
  validate_problem(p);
  if (static_cast<int>(intervals.size()) != p.condition_count())
    throw MalformedSystem("one interval per condition required");
  const int n = p.condition_count();
  LinearSystem sys(n);
  CredalDescription credal{std::move(sys), {}};
  for (int j = 0; j < n; ++j) {
    std::vector<Rational> unit(n, Rational(0));
    unit[j] = Rational(1);
    if (intervals[j].lower() > Rational(0))
      credal.system.add(unit, Relation::Ge, intervals[j].lower());
    if (intervals[j].upper() < Rational(1))
      credal.system.add(unit, Relation::Le, intervals[j].upper());
    credal.condition_map.push_back({j});
  }
  return credal;
}

/// One emission of an anytime decision loop.
struct DecisionSnapshot {
  int index = 0;
  std::vector<std::string> admissible;  // in action order
  std::vector<Interval> intervals;      // per condition, current bounds
};

namespace detail {

inline std::vector<std::string> names_of(const DecisionProblem& p, const std::vector<int>& idx) {
  std::vector<std::string> out;
  for (int i : idx) out.push_back(p.actions[i]);
  return out;
}

inline std::vector<int> surviving(const DecisionProblem& p, const CredalDescription& credal,
                                  const std::vector<int>& alive) {
  if (!lp_feasible(credal.system)) throw InfeasibleCredal("credal set is empty");
  std::vector<int> next;
  for (int i : alive)
    if (admissible_against_all(p, i, credal)) next.push_back(i);
  return next;
}

}  // namespace detail

/**
 * Deduction-driven anytime decision loop.  One deduction engine per
 * condition (kbs[j].target must be condition j's sentence); engines are
 * stepped round-robin, and after every step the per-condition intervals
 * are snapshotted into a fresh credal system over which the surviving
 * actions are re-tested.  Emits one snapshot per step, changed or not.
 *
 * `stop` (if given) is polled at step boundaries: the in-flight step
 * always completes and is emitted, then the loop ends early.  At least
 * one step runs.
 */
inline std::vector<DecisionSnapshot> anytime_decide_fh(const DecisionProblem& p,
                                                       const std::vector<KnowledgeBase>& kbs,
                                                       int budget,
                                                       const std::function<bool()>& stop = {}) {
  validate_problem(p);
  if (static_cast<int>(kbs.size()) != p.condition_count())
    throw MalformedSystem("one knowledge base per condition required");
  if (budget < 1) throw Error("budget must be positive");
  std::vector<AnytimeDeduction> engines;
  engines.reserve(kbs.size());
  for (const KnowledgeBase& kb : kbs) engines.emplace_back(kb);

  std::vector<int> alive;
  for (int i = 0; i < p.action_count(); ++i) alive.push_back(i);
  std::vector<DecisionSnapshot> out;
  size_t cursor = 0;
  for (int k = 1; k <= budget; ++k) {
    if (k > 1 && stop && stop()) break;
    bool stepped = false;
    for (size_t tries = 0; tries < engines.size(); ++tries) {
      AnytimeDeduction& engine = engines[cursor % engines.size()];
      ++cursor;
      if (engine.step()) {
        stepped = true;
        break;
      }
    }
    if (!stepped) break;  // every engine exhausted

    std::vector<Interval> intervals;
    for (const AnytimeDeduction& engine : engines) intervals.push_back(engine.target_interval());
    CredalDescription credal = bounds_snapshot_system(p, intervals);
    alive = detail::surviving(p, credal, alive);
    out.push_back({k, detail::names_of(p, alive), std::move(intervals)});
  }
  return out;
}

/**
 * Worlds-driven anytime decision loop.  The semantic tree starts from the
 * condition formulas; pool sentences are added one at a time (in pool
 * order, or in the order given), the world-class system is rebuilt, and
 * surviving actions are re-tested with condition probabilities expressed
 * as leaf sums.  A pool sentence already in the tree contributes its
 * bounds without growing the tree.  The first snapshot precedes the pool.
 *
 * `stop` (if given) is polled between pool sentences; the sentence in
 * flight always completes and its snapshot is emitted.
 */
inline std::vector<DecisionSnapshot> anytime_decide_nilsson(
    const DecisionProblem& p, const std::vector<Formula>& condition_formulas,
    const std::vector<ProbStatement>& pool, const std::vector<int>& order = {},
    int leaf_cap = kDefaultLeafCap, int atom_cap = kDefaultAtomCap,
    const std::function<bool()>& stop = {}) {
  validate_problem(p);
  if (static_cast<int>(condition_formulas.size()) != p.condition_count())
    throw MalformedSystem("one formula per condition required");
  std::vector<int> use = order;
  if (use.empty())
    for (int i = 0; i < static_cast<int>(pool.size()); ++i) use.push_back(i);
  std::vector<bool> taken(pool.size(), false);
  for (int i : use) {
    if (i < 0 || i >= static_cast<int>(pool.size()) || taken[i])
      throw Error("order must be a prefix or permutation of the pool");
    taken[i] = true;
  }

  SemanticTree tree = tree_init_condition_first(condition_formulas, leaf_cap, atom_cap);
  std::vector<std::pair<int, Interval>> bounds;
  std::vector<int> alive;
  for (int i = 0; i < p.action_count(); ++i) alive.push_back(i);
  std::vector<DecisionSnapshot> out;

  auto emit = [&](int index) {
    WorldProbabilitySystem wps = build_system(tree, bounds);
    CredalDescription credal{std::move(wps.system), {}};
    for (int j = 0; j < p.condition_count(); ++j)
      credal.condition_map.push_back(tree.true_leaves(j));
    alive = detail::surviving(p, credal, alive);
    std::vector<Interval> intervals;
    for (int j = 0; j < p.condition_count(); ++j)
      intervals.push_back(entailed_bounds(tree, bounds, j));
    out.push_back({index, detail::names_of(p, alive), std::move(intervals)});
  };

  emit(1);
  int index = 2;
  for (int i : use) {
    if (stop && stop()) break;
    const ProbStatement& s = pool[i];
    if (!tree.has_sentence(s.sentence)) tree = tree_add_sentence(tree, s.sentence);
    int at = 0;
    while (!(tree.sentences()[at] == s.sentence)) ++at;
    bounds.push_back({at, s.bounds});
    emit(index++);
  }
  return out;
}

/// Seeded uniform pick from the admissible actions (unbiased via rejection).
inline std::string fallback_random(const DecisionProblem& p, const AdmissibleSet& admissible,
                                   std::uint64_t seed) {
  validate_problem(p);
  if (admissible.actions.empty()) throw EmptyAdmissible("no admissible action to choose from");
  const std::uint64_t n = admissible.actions.size();
  std::mt19937_64 rng(seed);
  const std::uint64_t limit = std::uint64_t(-1) - (std::uint64_t(-1) % n);
  std::uint64_t draw = rng();
  while (draw >= limit) draw = rng();
  return admissible.actions[draw % n];
}

/// The admissible action whose worst-case utility is largest (ties: first).
inline std::string fallback_maximin(const DecisionProblem& p, const AdmissibleSet& admissible) {
  validate_problem(p);
  if (admissible.actions.empty()) throw EmptyAdmissible("no admissible action to choose from");
  std::optional<int> best;
  Rational best_floor;
  for (const std::string& name : admissible.actions) {
    int i = 0;
    while (p.actions[i] != name) ++i;
    Rational floor = p.utility[i][0];
    for (const Rational& u : p.utility[i]) floor = std::min(floor, u);
    if (!best || floor > best_floor || (floor == best_floor && i < *best)) {
      best = i;
      best_floor = floor;
    }
  }
  return p.actions[*best];
}

/**
 * The admissible action maximizing expected utility at the per-condition
 * interval midpoints, renormalized to sum to one (ties: first in action
 * order).
 */
inline std::string fallback_midpoint(const DecisionProblem& p, const AdmissibleSet& admissible,
                                     const std::vector<Interval>& intervals) {
  validate_problem(p);
  if (admissible.actions.empty()) throw EmptyAdmissible("no admissible action to choose from");
  if (static_cast<int>(intervals.size()) != p.condition_count())
    throw MalformedSystem("one interval per condition required");
  std::vector<Rational> weight;
  Rational total(0);
  for (const Interval& iv : intervals) {
    weight.push_back(iv.midpoint());
    total += weight.back();
  }
  if (total.is_zero()) {
    weight.assign(p.condition_count(), Rational(1));
    total = Rational(p.condition_count());
  }
  std::optional<int> best;
  Rational best_eu;
  for (const std::string& name : admissible.actions) {
    int i = 0;
    while (p.actions[i] != name) ++i;
    Rational eu(0);
    for (int j = 0; j < p.condition_count(); ++j) eu += p.utility[i][j] * weight[j];
    eu /= total;
    if (!best || eu > best_eu || (eu == best_eu && i < *best)) {
      best = i;
      best_eu = eu;
    }
  }
  return p.actions[*best];
}

}  // namespace credal
