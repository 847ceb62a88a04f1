#pragma once

#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "credal/errors.hpp"
#include "credal/formula.hpp"
#include "credal/interval.hpp"
#include "credal/rational.hpp"

namespace credal {

inline constexpr const char* kRuleTrivial = "trivial";
inline constexpr const char* kRuleForwardImplication = "forward_implication";
inline constexpr const char* kRuleConjunction = "conjunction";
inline constexpr const char* kRuleMultiple = "multiple";

/// Where a statement came from: stated as a premise, or derived by a rule.
struct Origin {
  enum class Kind { Premise, Derived };
  Kind kind = Kind::Premise;
  std::string rule;          // empty for premises
  std::vector<int> parents;  // statement ids within the deriving engine

  static Origin premise() { return {}; }
  static Origin derived(std::string rule, std::vector<int> parents = {}) {
    return {Kind::Derived, std::move(rule), std::move(parents)};
  }
};

/// An interval-labeled sentence, e.g. p(Temperature > 85) in [.95, 1].
struct ProbStatement {
  Formula sentence;
  Interval bounds;
  Origin origin;
};

inline ProbStatement premise(Formula sentence, Interval bounds) {
  return {std::move(sentence), std::move(bounds), Origin::premise()};
}

/// Premise list plus the sentence whose probability is being bounded.
/// Statement ids are 1-based positions in the list.
struct KnowledgeBase {
  std::vector<ProbStatement> statements;
  Formula target;
};

// ---- the four inference rules ----

/// p(f) in [0,1] for any sentence.
inline ProbStatement rule_trivial(const Formula& sentence) {
  return {sentence, Interval::unit(), Origin::derived(kRuleTrivial)};
}

/// From p(a) in [x,y] and p(a -> q) in [u,v], conclude p(q) in [max(0,x+u-1), v].
inline ProbStatement rule_forward_implication(const ProbStatement& antecedent,
                                              const ProbStatement& implication) {
  if (implication.sentence.kind() != Formula::Kind::Implies ||
      implication.sentence.left() != antecedent.sentence)
    throw ShapeMismatch("forward implication needs p(a) and p(a -> q); got p(" +
                        antecedent.sentence.str() + ") and p(" + implication.sentence.str() + ")");
  const Rational lo = max(Rational(0), antecedent.bounds.lower() + implication.bounds.lower() - 1);
  return {implication.sentence.right(), Interval(lo, implication.bounds.upper()),
          Origin::derived(kRuleForwardImplication)};
}

/// From p(f) in [x,y] and p(g) in [u,v], conclude p(f & g) in [max(0,x+u-1), min(y,v)].
inline ProbStatement rule_conjunction(const ProbStatement& s1, const ProbStatement& s2) {
  const Rational lo = max(Rational(0), s1.bounds.lower() + s2.bounds.lower() - 1);
  const Rational hi = min(s1.bounds.upper(), s2.bounds.upper());
  return {Formula::conjunction(s1.sentence, s2.sentence), Interval(lo, hi),
          Origin::derived(kRuleConjunction)};
}

/// Intersect two intervals derived for the same sentence.
inline ProbStatement rule_multiple(const ProbStatement& s1, const ProbStatement& s2) {
  if (s1.sentence != s2.sentence)
    throw SentenceMismatch("multiple derivation needs a shared sentence; got " +
                           s1.sentence.str() + " and " + s2.sentence.str());
  const Rational lo = max(s1.bounds.lower(), s2.bounds.lower());
  const Rational hi = min(s1.bounds.upper(), s2.bounds.upper());
  if (lo > hi)
    throw InconsistentPremises("bounds for " + s1.sentence.str() + " do not intersect: " +
                               s1.bounds.str() + " vs " + s2.bounds.str());
  return {s1.sentence, Interval(lo, hi), Origin::derived(kRuleMultiple)};
}

// ---- the anytime engine ----

struct DeductionStep {
  int index;                // 1-based
  std::string rule;
  std::vector<int> inputs;  // statement ids; empty for the trivial rule
  ProbStatement produced;
  Interval target_after;    // running tightest interval for the target
};

struct DeductionTrace {
  std::vector<DeductionStep> steps;
};

/**
 * Stepwise Frisch-Haddawy deduction.
 *
 * The agenda holds rule instances in three tiers: instances whose output is
 * the target sentence, instances producing an antecedent of an implication
 * with the target as consequent, and everything else, each tier in discovery
 * order (premise order at startup).  Whenever a derivation lands on a
 * sentence that already carries an interval, a multiple-derivation instance
 * jumps the queue so the designated interval stays tight.  A rule instance
 * is never applied twice with the same inputs, and the running target
 * interval is the eager intersection of everything derived so far, so it
 * narrows monotonically.
 */
class AnytimeDeduction {
 public:
  explicit AnytimeDeduction(KnowledgeBase kb) : kb_(std::move(kb)) {
    target_key_ = kb_.target.str();
    statements_ = kb_.statements;
    const int k = static_cast<int>(statements_.size());
    for (int id = 1; id <= k; ++id) note_antecedent(statements_[id - 1].sentence);
    for (int id = 1; id <= k; ++id) merge_production(id, /*from_multiple=*/false);
    enqueue(Instance{kRuleTrivial, 0, 0}, kb_.target);
    for (int i = 1; i <= k; ++i)
      for (int j = 1; j <= k; ++j) {
        if (i == j) continue;
        consider_forward(i, j);
        consider_conjunction(i, j);
      }
  }

  /// Apply one rule instance; nullopt once the agenda is exhausted.
  std::optional<DeductionStep> step() {
    std::optional<Instance> inst = pop();
    if (!inst) return std::nullopt;
    ProbStatement produced = apply(*inst);
    std::vector<int> inputs = inst->rule == std::string(kRuleTrivial)
                                  ? std::vector<int>{}
                                  : std::vector<int>{inst->a, inst->b};
    produced.origin.parents = inputs;
    const int id = push_statement(produced);
    merge_production(id, inst->rule == std::string(kRuleMultiple));
    discover_instances(id);
    DeductionStep step{static_cast<int>(trace_.steps.size()) + 1, inst->rule, std::move(inputs),
                       statements_[id - 1], target_interval()};
    trace_.steps.push_back(step);
    return step;
  }

  bool exhausted() const {
    return mdq_.empty() && tier_a_.empty() && tier_b_.empty() && tier_c_.empty();
  }

  /// Current tightest interval for the target ([0,1] before any derivation).
  Interval target_interval() const {
    auto it = current_.find(target_key_);
    return it == current_.end() ? Interval::unit() : it->second;
  }

  const std::vector<ProbStatement>& statements() const { return statements_; }
  const DeductionTrace& trace() const { return trace_; }
  const KnowledgeBase& kb() const { return kb_; }

 private:
  struct Instance {
    std::string rule;
    int a;  // forward: antecedent id; conjunction: left id; multiple: pending id
    int b;  // forward: implication id; conjunction: right id
  };

  void note_antecedent(const Formula& f) {
    if (f.kind() == Formula::Kind::Implies && f.right() == kb_.target)
      target_antecedents_.insert(f.left().str());
  }

  // Eagerly fold a freshly produced statement into the per-sentence interval
  // and queue a multiple-derivation step when it actually changes anything.
  void merge_production(int id, bool from_multiple) {
    const ProbStatement& s = statements_[id - 1];
    const std::string key = s.sentence.str();
    auto cur = current_stmt_.find(key);
    if (cur == current_stmt_.end()) {
      current_stmt_[key] = id;
      current_.emplace(key, s.bounds);
      return;
    }
    auto meet = current_.at(key).intersect(s.bounds);
    if (!meet)
      throw InconsistentPremises("bounds for " + key + " do not intersect: " +
                                 current_.at(key).str() + " vs " + s.bounds.str());
    current_.at(key) = *meet;
    if (from_multiple) {
      cur->second = id;  // the merge result is the new designated statement
    } else if (statements_[cur->second - 1].bounds != s.bounds) {
      mdq_.push_back(Instance{kRuleMultiple, id, 0});
    }
  }

  void consider_forward(int antecedent_id, int implication_id) {
    const ProbStatement& a = statements_[antecedent_id - 1];
    const ProbStatement& impl = statements_[implication_id - 1];
    if (impl.sentence.kind() != Formula::Kind::Implies || impl.sentence.left() != a.sentence)
      return;
    Instance inst{kRuleForwardImplication, antecedent_id, implication_id};
    if (!remember(inst)) return;
    enqueue(std::move(inst), impl.sentence.right());
  }

  void consider_conjunction(int i, int j) {
    Instance inst{kRuleConjunction, i, j};
    if (!remember(inst)) return;
    enqueue(std::move(inst),
            Formula::conjunction(statements_[i - 1].sentence, statements_[j - 1].sentence));
  }

  bool remember(const Instance& inst) {
    return applied_
        .insert(inst.rule + ":" + std::to_string(inst.a) + ":" + std::to_string(inst.b))
        .second;
  }

  void enqueue(Instance inst, const Formula& output) {
    if (output == kb_.target)
      tier_a_.push_back(std::move(inst));
    else if (target_antecedents_.count(output.str()))
      tier_b_.push_back(std::move(inst));
    else
      tier_c_.push_back(std::move(inst));
  }

  std::optional<Instance> pop() {
    for (std::deque<Instance>* q : {&mdq_, &tier_a_, &tier_b_, &tier_c_}) {
      if (q->empty()) continue;
      Instance inst = q->front();
      q->pop_front();
      return inst;
    }
    return std::nullopt;
  }

  ProbStatement apply(Instance& inst) {
    if (inst.rule == kRuleTrivial) return rule_trivial(kb_.target);
    if (inst.rule == kRuleMultiple) {
      const std::string key = statements_[inst.a - 1].sentence.str();
      const int cur = current_stmt_.at(key);
      const int pending = inst.a;
      inst.a = cur;
      inst.b = pending;
      return rule_multiple(statements_[cur - 1], statements_[pending - 1]);
    }
    if (inst.rule == kRuleForwardImplication)
      return rule_forward_implication(statements_[inst.a - 1], statements_[inst.b - 1]);
    return rule_conjunction(statements_[inst.a - 1], statements_[inst.b - 1]);
  }

  int push_statement(ProbStatement s) {
    statements_.push_back(std::move(s));
    return static_cast<int>(statements_.size());
  }

  // New statement id pairs with everything older, in id order.
  void discover_instances(int id) {
    note_antecedent(statements_[id - 1].sentence);
    for (int i = 1; i < id; ++i) {
      consider_forward(i, id);
      consider_forward(id, i);
      consider_conjunction(i, id);
      consider_conjunction(id, i);
    }
  }

  KnowledgeBase kb_;
  std::string target_key_;
  std::vector<ProbStatement> statements_;
  std::map<std::string, Interval> current_;    // sentence key -> tightest interval
  std::map<std::string, int> current_stmt_;    // sentence key -> designated statement id
  std::set<std::string> target_antecedents_;   // antecedents leading into the target
  std::set<std::string> applied_;
  std::deque<Instance> mdq_, tier_a_, tier_b_, tier_c_;
  DeductionTrace trace_;
};

/// Run up to `budget` steps and return the trace.
inline DeductionTrace anytime_deduce(const KnowledgeBase& kb, int budget) {
  if (budget < 1) throw Error("deduction budget must be at least 1");
  AnytimeDeduction engine(kb);
  for (int i = 0; i < budget; ++i)
    if (!engine.step()) break;
  return engine.trace();
}

}  // namespace credal
