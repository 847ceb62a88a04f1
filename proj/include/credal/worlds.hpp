#pragma once

#include <string>
#include <utility>
#include <vector>

#include "credal/errors.hpp"
#include "credal/formula.hpp"
#include "credal/interval.hpp"
#include "credal/linear_system.hpp"
#include "credal/simplex.hpp"

namespace credal {

inline constexpr int kDefaultLeafCap = 4096;

/// One equivalence class of possible worlds: a truth label per tree sentence.
struct WorldClass {
  std::vector<bool> labels;

  friend bool operator==(const WorldClass& a, const WorldClass& b) { return a.labels == b.labels; }
};

enum class TreeMode { TargetFirst, ConditionFirst };

/**
 * Nilsson semantic tree over sentence truth-vectors.
 *
 * Leaves enumerate exactly the consistent truth-vectors over the sentence
 * list, in depth-first order with the true branch first.  Trees are immutable;
 * growing one returns a new tree.  In condition-first mode the first n
 * sentences are the mutually exclusive, exhaustive conditions of a decision
 * problem and every leaf makes exactly one of them true.
 */
class SemanticTree {
 public:
  const std::vector<Formula>& sentences() const { return sentences_; }
  const std::vector<WorldClass>& leaves() const { return leaves_; }
  TreeMode mode() const { return mode_; }
  int condition_count() const { return condition_count_; }  // 0 in target-first mode
  int leaf_cap() const { return leaf_cap_; }
  int atom_cap() const { return atom_cap_; }

  bool has_sentence(const Formula& f) const {
    for (const Formula& s : sentences_)
      if (s == f) return true;
    return false;
  }

  /// Leaf indices where the given sentence is labeled true.
  std::vector<int> true_leaves(int sentence_index) const {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(leaves_.size()); ++i)
      if (leaves_[i].labels[sentence_index]) out.push_back(i);
    return out;
  }

  /// 0/1 grid, one row per sentence, one column per leaf.
  std::string matrix_grid() const {
    std::string out;
    for (size_t s = 0; s < sentences_.size(); ++s) {
      for (size_t l = 0; l < leaves_.size(); ++l) {
        if (l) out.push_back(' ');
        out.push_back(leaves_[l].labels[s] ? '1' : '0');
      }
      out += "  (" + sentences_[s].str() + ")\n";
    }
    return out;
  }

  friend SemanticTree tree_init_target_first(const Formula&, int, int);
  friend SemanticTree tree_init_condition_first(const std::vector<Formula>&, int, int);
  friend SemanticTree tree_add_sentence(const SemanticTree&, const Formula&);

 private:
  SemanticTree(TreeMode mode, int condition_count, int leaf_cap, int atom_cap)
      : mode_(mode), condition_count_(condition_count), leaf_cap_(leaf_cap), atom_cap_(atom_cap) {}

  bool leaf_consistent(const std::vector<bool>& labels) const {
    std::vector<std::pair<Formula, bool>> labeled;
    labeled.reserve(labels.size());
    for (size_t i = 0; i < labels.size(); ++i) labeled.push_back({sentences_[i], labels[i]});
    return consistent(labeled, atom_cap_);
  }

  void check_leaf_cap() const {
    if (static_cast<int>(leaves_.size()) > leaf_cap_)
      throw LeafLimitExceeded("semantic tree grew past " + std::to_string(leaf_cap_) + " leaves");
  }

  TreeMode mode_;
  int condition_count_;
  int leaf_cap_;
  int atom_cap_;
  std::vector<Formula> sentences_;
  std::vector<WorldClass> leaves_;
};

/// Root the tree at the sentence whose probability is being tracked; the two
/// initial leaves are its consistent truth values.
inline SemanticTree tree_init_target_first(const Formula& target,
                                           int leaf_cap = kDefaultLeafCap,
                                           int atom_cap = kDefaultAtomCap) {
  SemanticTree t(TreeMode::TargetFirst, 0, leaf_cap, atom_cap);
  t.sentences_.push_back(target);
  for (bool value : {true, false})
    if (t.leaf_consistent({value})) t.leaves_.push_back(WorldClass{{value}});
  t.check_leaf_cap();
  return t;
}

/// First n levels carry the decision problem's conditions; only assignments
/// with exactly one true condition survive, per their mutual exclusivity and
/// exhaustiveness.
inline SemanticTree tree_init_condition_first(const std::vector<Formula>& conditions,
                                              int leaf_cap = kDefaultLeafCap,
                                              int atom_cap = kDefaultAtomCap) {
  const int n = static_cast<int>(conditions.size());
  if (n < 2) throw DegenerateConditions("condition-first tree needs at least 2 conditions");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (conditions[i] == conditions[j])
        throw DegenerateConditions("duplicate condition: " + conditions[i].str());
  SemanticTree t(TreeMode::ConditionFirst, n, leaf_cap, atom_cap);
  t.sentences_ = conditions;
  for (int i = 0; i < n; ++i) {
    std::vector<bool> labels(n, false);
    labels[i] = true;
    if (t.leaf_consistent(labels)) t.leaves_.push_back(WorldClass{std::move(labels)});
  }
  t.check_leaf_cap();
  return t;
}

/// Split every leaf on the new sentence, true branch first, pruning the
/// inconsistent children.
inline SemanticTree tree_add_sentence(const SemanticTree& tree, const Formula& s) {
  if (tree.has_sentence(s)) throw Error("sentence already in tree: " + s.str());
  SemanticTree t(tree.mode_, tree.condition_count_, tree.leaf_cap_, tree.atom_cap_);
  t.sentences_ = tree.sentences_;
  t.sentences_.push_back(s);
  for (const WorldClass& leaf : tree.leaves_) {
    for (bool value : {true, false}) {
      std::vector<bool> labels = leaf.labels;
      labels.push_back(value);
      if (t.leaf_consistent(labels)) t.leaves_.push_back(WorldClass{std::move(labels)});
    }
  }
  t.check_leaf_cap();
  return t;
}

/// The tree's leaf-probability system together with the tree it came from.
struct WorldProbabilitySystem {
  SemanticTree tree;
  LinearSystem system;
};

/**
 * One variable per leaf (normalization on); each bounded sentence contributes
 * sum-of-true-leaves rows, with vacuous >= 0 / <= 1 rows omitted.  `bounds`
 * entries are (sentence index, interval).
 */
inline WorldProbabilitySystem build_system(const SemanticTree& tree,
                                           const std::vector<std::pair<int, Interval>>& bounds) {
  const int n = static_cast<int>(tree.leaves().size());
  if (n == 0) throw MalformedSystem("semantic tree has no consistent worlds");
  LinearSystem sys(n, true, true);
  for (const auto& [index, interval] : bounds) {
    if (index < 0 || index >= static_cast<int>(tree.sentences().size()))
      throw MalformedSystem("sentence index out of range: " + std::to_string(index));
    std::vector<Rational> coeffs(n, Rational(0));
    for (int leaf : tree.true_leaves(index)) coeffs[leaf] = 1;
    if (interval.lower() > Rational(0)) sys.add(coeffs, Relation::Ge, interval.lower());
    if (interval.upper() < Rational(1)) sys.add(coeffs, Relation::Le, interval.upper());
  }
  return WorldProbabilitySystem{tree, std::move(sys)};
}

/// Exact [min, max] of the target's leaf-sum over the bounded system.
inline Interval entailed_bounds(const SemanticTree& tree,
                                const std::vector<std::pair<int, Interval>>& bounds,
                                int target_index) {
  WorldProbabilitySystem wps = build_system(tree, bounds);
  const int n = static_cast<int>(tree.leaves().size());
  std::vector<Rational> objective(n, Rational(0));
  for (int leaf : tree.true_leaves(target_index)) objective[leaf] = 1;
  Rational lo = lp_optimize(wps.system, objective, Sense::Minimize);
  Rational hi = lp_optimize(wps.system, objective, Sense::Maximize);
  return Interval(lo, hi);
}

}  // namespace credal
