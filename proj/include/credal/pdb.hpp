#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "credal/decide.hpp"
#include "credal/errors.hpp"
#include "credal/interval.hpp"
#include "credal/linear_system.hpp"
#include "credal/rational.hpp"
#include "credal/simplex.hpp"

namespace credal {

struct AttributeSpec {
  std::string name;
  std::vector<std::string> values;  // ordered domain
};

/// A distribution over the cross-product of its attributes' domains.
struct ProbTable {
  std::vector<std::string> attributes;
  std::map<std::vector<std::string>, Rational> cells;
};

inline bool operator==(const ProbTable& a, const ProbTable& b) {
  return a.attributes == b.attributes && a.cells == b.cells;
}
inline bool operator!=(const ProbTable& a, const ProbTable& b) { return !(a == b); }

struct Database {
  std::vector<AttributeSpec> specs;
  std::vector<ProbTable> tables;
};

struct Scheme {
  std::vector<std::set<std::string>> sets;
};

inline bool scheme_equal(const Scheme& a, const Scheme& b) {
  return std::set<std::set<std::string>>(a.sets.begin(), a.sets.end()) ==
         std::set<std::set<std::string>>(b.sets.begin(), b.sets.end());
}

namespace detail {

inline const AttributeSpec& find_spec(const Database& db, const std::string& name) {
  for (const AttributeSpec& s : db.specs)
    if (s.name == name) return s;
  throw InvalidTable("attribute has no specification: " + name);
}

/// Tuples of the given domains, rightmost attribute fastest.
inline std::vector<std::vector<std::string>> enumerate_tuples(
    const std::vector<const AttributeSpec*>& specs) {
  std::vector<std::vector<std::string>> out;
  std::vector<size_t> pos(specs.size(), 0);
  while (true) {
    std::vector<std::string> tuple;
    for (size_t i = 0; i < specs.size(); ++i) tuple.push_back(specs[i]->values[pos[i]]);
    out.push_back(std::move(tuple));
    size_t i = specs.size();
    while (i > 0 && ++pos[i - 1] == specs[i - 1]->values.size()) pos[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

inline std::vector<const AttributeSpec*> specs_for(const Database& db,
                                                   const std::vector<std::string>& attrs) {
  std::vector<const AttributeSpec*> out;
  for (const std::string& a : attrs) out.push_back(&find_spec(db, a));
  return out;
}

}  // namespace detail

inline ProbTable project_table(const ProbTable& t, const std::vector<std::string>& onto) {
  if (onto.empty()) throw NotASubset("projection target must be nonempty");
  std::set<std::string> want(onto.begin(), onto.end());
  for (const std::string& a : want)
    if (std::find(t.attributes.begin(), t.attributes.end(), a) == t.attributes.end())
      throw NotASubset("attribute not in table: " + a);
  ProbTable out;
  std::vector<size_t> keep;
  for (size_t i = 0; i < t.attributes.size(); ++i)
    if (want.count(t.attributes[i])) {
      keep.push_back(i);
      out.attributes.push_back(t.attributes[i]);
    }
  for (const auto& [tuple, prob] : t.cells) {
    std::vector<std::string> key;
    for (size_t i : keep) key.push_back(tuple[i]);
    out.cells[key] += prob;
  }
  return out;
}

inline void validate_database(const Database& db) {
  std::set<std::string> names;
  for (const AttributeSpec& s : db.specs) {
    if (!names.insert(s.name).second) throw InvalidTable("duplicate attribute: " + s.name);
    if (s.values.size() < 2) throw InvalidTable("attribute domain needs two values: " + s.name);
    if (std::set<std::string>(s.values.begin(), s.values.end()).size() != s.values.size())
      throw InvalidTable("duplicate value label in attribute: " + s.name);
  }
  for (const ProbTable& t : db.tables) {
    if (t.attributes.empty()) throw InvalidTable("table without attributes");
    if (std::set<std::string>(t.attributes.begin(), t.attributes.end()).size() !=
        t.attributes.size())
      throw InvalidTable("duplicate attribute within a table");
    const auto specs = detail::specs_for(db, t.attributes);
    const auto tuples = detail::enumerate_tuples(specs);
    if (t.cells.size() != tuples.size())
      throw InvalidTable("table must have exactly one cell per tuple");
    Rational sum(0);
    for (const auto& tuple : tuples) {
      auto it = t.cells.find(tuple);
      if (it == t.cells.end()) throw InvalidTable("missing cell for a domain tuple");
      if (it->second.sign() < 0) throw InvalidTable("negative cell probability");
      sum += it->second;
    }
    if (sum != Rational(1)) throw InvalidTable("cells must sum to exactly 1");
  }
  // any two tables must agree on every shared attribute's marginal
  for (size_t i = 0; i < db.tables.size(); ++i)
    for (size_t j = i + 1; j < db.tables.size(); ++j)
      for (const std::string& a : db.tables[i].attributes)
        if (std::find(db.tables[j].attributes.begin(), db.tables[j].attributes.end(), a) !=
            db.tables[j].attributes.end())
          if (project_table(db.tables[i], {a}) != project_table(db.tables[j], {a}))
            throw InconsistentDatabase("tables disagree on the marginal of " + a);
}

inline Scheme db_scheme(const Database& db) {
  Scheme s;
  for (const ProbTable& t : db.tables)
    s.sets.push_back(std::set<std::string>(t.attributes.begin(), t.attributes.end()));
  return s;
}

inline bool is_refinement(const Scheme& s, const Scheme& s_prime) {
  for (const auto& v : s.sets) {
    bool covered = false;
    for (const auto& vp : s_prime.sets)
      covered = covered || std::includes(vp.begin(), vp.end(), v.begin(), v.end());
    if (!covered) return false;
  }
  return true;
}

inline Database project_db(const Database& db, const Scheme& s) {
  if (!is_refinement(s, db_scheme(db)))
    throw NotARefinement("target scheme does not refine the database scheme");
  Database out{db.specs, {}};
  for (const auto& v : s.sets) {
    if (v.empty()) throw NotARefinement("scheme elements must be nonempty");
    std::vector<const ProbTable*> covering;
    for (const ProbTable& t : db.tables) {
      std::set<std::string> attrs(t.attributes.begin(), t.attributes.end());
      if (std::includes(attrs.begin(), attrs.end(), v.begin(), v.end()))
        covering.push_back(&t);
    }
    std::vector<std::string> onto(v.begin(), v.end());
    ProbTable projected = project_table(*covering.front(), onto);
    // single-attribute agreement is a load invariant; wider overlaps must
    // agree across every covering table to be projectable at all
    if (v.size() > 1)
      for (size_t k = 1; k < covering.size(); ++k)
        if (project_table(*covering[k], onto) != projected)
          throw AmbiguousProjection("covering tables disagree on the joint marginal");
    out.tables.push_back(std::move(projected));
  }
  return out;
}

/// Conditions as (disjoint) sets of value tuples over a condition
/// attribute list.
struct ConditionTuples {
  std::vector<std::string> attributes;
  std::vector<std::vector<std::vector<std::string>>> tuples;  // one set per condition
};

namespace detail {

struct JointSpace {
  std::vector<std::string> attrs;
  std::vector<const AttributeSpec*> specs;
  std::vector<std::vector<std::string>> tuples;
};

inline JointSpace joint_space(const Database& db, std::vector<std::string> over) {
  if (over.empty()) {
    std::set<std::string> used;
    for (const ProbTable& t : db.tables) used.insert(t.attributes.begin(), t.attributes.end());
    for (const AttributeSpec& s : db.specs)
      if (used.count(s.name)) over.push_back(s.name);
  }
  std::set<std::string> given(over.begin(), over.end());
  if (given.size() != over.size()) throw InvalidTable("duplicate attribute in joint space");
  for (const ProbTable& t : db.tables)
    for (const std::string& a : t.attributes)
      if (!given.count(a)) throw NotASubset("joint space must cover every table: " + a);
  JointSpace js;
  js.attrs = std::move(over);
  js.specs = specs_for(db, js.attrs);
  js.tuples = enumerate_tuples(js.specs);
  return js;
}

}  // namespace detail

/**
 * The linear system whose solutions are the joint distributions over
 * `over` (default: every attribute used by the database, in spec order)
 * marginalizing to each table: one variable per joint tuple, one equality
 * per table cell, plus normalization.
 */
inline CredalDescription extension_system(const Database& db,
                                          std::vector<std::string> over = {}) {
  detail::JointSpace js = detail::joint_space(db, std::move(over));
  LinearSystem sys(static_cast<int>(js.tuples.size()));
  for (const ProbTable& t : db.tables) {
    std::vector<size_t> at;  // positions of the table's attributes in the joint tuple
    for (const std::string& a : t.attributes)
      at.push_back(std::find(js.attrs.begin(), js.attrs.end(), a) - js.attrs.begin());
    for (const auto& cell : detail::enumerate_tuples(detail::specs_for(db, t.attributes))) {
      std::vector<Rational> coeffs(js.tuples.size(), Rational(0));
      for (size_t v = 0; v < js.tuples.size(); ++v) {
        bool match = true;
        for (size_t i = 0; i < at.size(); ++i) match = match && js.tuples[v][at[i]] == cell[i];
        if (match) coeffs[v] = Rational(1);
      }
      sys.add(std::move(coeffs), Relation::Eq, t.cells.at(cell));
    }
  }
  return {std::move(sys), {}};
}

inline CredalDescription extension_system(const Database& db, std::vector<std::string> over,
                                          const ConditionTuples& conditions) {
  detail::JointSpace js = detail::joint_space(db, std::move(over));
  CredalDescription credal = extension_system(db, js.attrs);

  std::vector<size_t> at;
  for (const std::string& a : conditions.attributes) {
    auto it = std::find(js.attrs.begin(), js.attrs.end(), a);
    if (it == js.attrs.end())
      throw MalformedSystem("condition attribute outside the joint space: " + a);
    at.push_back(it - js.attrs.begin());
  }
  std::set<std::vector<std::string>> seen;
  std::vector<std::set<std::vector<std::string>>> keyed;
  for (const auto& tuple_set : conditions.tuples) {
    keyed.push_back({});
    for (const auto& tuple : tuple_set) {
      if (tuple.size() != conditions.attributes.size())
        throw MalformedSystem("condition tuple arity mismatch");
      for (size_t i = 0; i < tuple.size(); ++i) {
        const auto& dom = detail::find_spec(db, conditions.attributes[i]).values;
        if (std::find(dom.begin(), dom.end(), tuple[i]) == dom.end())
          throw MalformedSystem("condition tuple value outside the attribute domain");
      }
      if (!seen.insert(tuple).second)
        throw MalformedSystem("condition tuple sets must be disjoint");
      keyed.back().insert(tuple);
    }
  }
  for (const auto& cond : keyed) {
    std::vector<int> members;
    for (size_t v = 0; v < js.tuples.size(); ++v) {
      std::vector<std::string> key;
      for (size_t i : at) key.push_back(js.tuples[v][i]);
      if (cond.count(key)) members.push_back(static_cast<int>(v));
    }
    credal.condition_map.push_back(std::move(members));
  }
  return credal;
}

/**
 * The four projection targets tried in order of increasing cost: single
 * condition attributes; table-condition intersections; whole tables that
 * touch a condition attribute; the full database.  Consecutive equal
 * schemes are merged.
 */
inline std::vector<Scheme> scheme_ladder(const Database& db,
                                         const std::vector<std::string>& v_c) {
  if (v_c.empty()) throw UncoveredCondition("no condition attributes given");
  for (const std::string& a : v_c) {
    bool found = false;
    for (const ProbTable& t : db.tables)
      found = found ||
              std::find(t.attributes.begin(), t.attributes.end(), a) != t.attributes.end();
    if (!found) throw UncoveredCondition("condition attribute in no table: " + a);
  }
  const std::set<std::string> cond(v_c.begin(), v_c.end());
  auto push_unique = [](Scheme& s, std::set<std::string> v) {
    for (const auto& have : s.sets)
      if (have == v) return;
    s.sets.push_back(std::move(v));
  };

  Scheme singles;
  for (const std::string& a : v_c) push_unique(singles, {a});
  Scheme meets, touching, full;
  for (const ProbTable& t : db.tables) {
    std::set<std::string> attrs(t.attributes.begin(), t.attributes.end());
    std::set<std::string> meet;
    for (const std::string& a : attrs)
      if (cond.count(a)) meet.insert(a);
    if (!meet.empty()) {
      push_unique(meets, std::move(meet));
      push_unique(touching, attrs);
    }
    push_unique(full, std::move(attrs));
  }

  std::vector<Scheme> chain;
  chain.push_back(std::move(singles));
  chain.push_back(std::move(meets));
  chain.push_back(std::move(touching));
  chain.push_back(std::move(full));
  std::vector<Scheme> out;
  for (Scheme& s : chain)
    if (out.empty() || !scheme_equal(out.back(), s)) out.push_back(std::move(s));
  return out;
}

/**
 * Database-driven anytime decision loop: walk the scheme ladder, and at
 * each rung test the surviving actions against the extension of the
 * database's projection onto that rung.  Stops as soon as one action
 * remains.
 *
 * `stop` (if given) is polled between rungs; the rung in flight always
 * completes and its snapshot is emitted.  At least one rung runs.
 */
inline std::vector<DecisionSnapshot> anytime_decide_pdb(const DecisionProblem& p,
                                                        const Database& db,
                                                        const ConditionTuples& conditions,
                                                        const std::function<bool()>& stop = {}) {
  validate_problem(p);
  if (static_cast<int>(conditions.tuples.size()) != p.condition_count())
    throw MalformedSystem("one tuple set per condition required");
  std::vector<int> alive;
  for (int i = 0; i < p.action_count(); ++i) alive.push_back(i);
  std::vector<DecisionSnapshot> out;
  int index = 1;
  for (const Scheme& rung : scheme_ladder(db, conditions.attributes)) {
    if (index > 1 && stop && stop()) break;
    Database projected = project_db(db, rung);
    CredalDescription credal = extension_system(projected, {}, conditions);
    alive = detail::surviving(p, credal, alive);
    std::vector<Interval> intervals;
    for (const auto& members : credal.condition_map) {
      std::vector<Rational> obj(credal.system.variable_count(), Rational(0));
      for (int v : members) obj[v] = Rational(1);
      intervals.push_back(Interval(lp_optimize(credal.system, obj, Sense::Minimize),
                                   lp_optimize(credal.system, obj, Sense::Maximize)));
    }
    out.push_back({index++, detail::names_of(p, alive), std::move(intervals)});
    if (alive.size() == 1) break;
  }
  return out;
}

}  // namespace credal
