#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "credal/decide.hpp"
#include "credal/deduction.hpp"
#include "credal/errors.hpp"
#include "credal/formula.hpp"
#include "credal/interval.hpp"
#include "credal/pdb.hpp"
#include "credal/rational.hpp"

namespace credal {

using Json = nlohmann::json;

namespace detail {

inline std::pair<int, int> line_col(const std::string& text, std::size_t byte) {
  int line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace detail

/// Parse a JSON document; syntax errors become ParseError with an
/// origin:line:column prefix.
inline Json parse_json(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    const auto [line, col] = detail::line_col(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError(origin + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " +
                     e.what());
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline Json load_json(const std::string& path) { return parse_json(read_file(path), path); }

namespace detail {

inline const Json& member(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(where + ": missing \"" + std::string(key) + "\"");
  return *it;
}

inline const Json& array_member(const Json& j, const char* key, const std::string& where) {
  const Json& a = member(j, key, where);
  if (!a.is_array())
    throw ParseError(where + ": \"" + std::string(key) + "\" must be an array");
  return a;
}

inline std::string as_string(const Json& j, const std::string& where) {
  if (!j.is_string()) throw ParseError(where + ": expected a string");
  return j.get<std::string>();
}

inline Rational as_rational(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_number_float())
    throw ParseError(where +
                     ": floating-point literals are not exact; quote the value as a string");
  if (!j.is_string())
    throw ParseError(where + ": expected a rational string like \"3/4\" or \"0.65\"");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(where + ": " + e.what());
  }
}

inline Formula as_formula(const Json& j, const std::string& where) {
  try {
    return Formula::parse(as_string(j, where));
  } catch (const ParseError& e) {
    throw ParseError(where + ": " + e.what());
  }
}

inline Interval as_bounds(const Json& stmt, const std::string& where) {
  const Rational lo = as_rational(member(stmt, "lower", where), where + ".lower");
  const Rational hi = as_rational(member(stmt, "upper", where), where + ".upper");
  if (lo.sign() < 0 || hi > Rational(1))
    throw ParseError(where + ": bounds must lie within [0, 1]");
  // a single statement asserting an empty interval is a contradiction,
  // not a syntax problem
  if (lo > hi) throw InconsistentPremises(where + ": lower bound exceeds upper bound");
  return Interval(lo, hi);
}

inline std::vector<ProbStatement> statements_from_json(const Json& arr,
                                                       const std::string& where) {
  std::vector<ProbStatement> out;
  int k = 0;
  for (const Json& s : arr) {
    const std::string at = where + "[" + std::to_string(k++) + "]";
    Formula f = as_formula(member(s, "sentence", at), at + ".sentence");
    out.push_back(premise(std::move(f), as_bounds(s, at)));
  }
  return out;
}

}  // namespace detail

// ---- knowledge bases:
// {"statements": [{"sentence": "...", "lower": "0.95", "upper": "1"}], "target": "Rain"}

inline KnowledgeBase kb_from_json(const Json& j, const std::string& origin) {
  return KnowledgeBase{
      detail::statements_from_json(detail::array_member(j, "statements", origin),
                                   origin + ": statements"),
      detail::as_formula(detail::member(j, "target", origin), origin + ": target")};
}

inline KnowledgeBase load_kb(const std::string& path) {
  return kb_from_json(load_json(path), path);
}

// ---- decision problems:
// {"actions": [...], "conditions": [...], "utility": [["3/4", ...], ...]}

inline DecisionProblem problem_from_json(const Json& j, const std::string& origin) {
  DecisionProblem p;
  for (const Json& a : detail::array_member(j, "actions", origin))
    p.actions.push_back(detail::as_string(a, origin + ": actions[]"));
  for (const Json& c : detail::array_member(j, "conditions", origin))
    p.conditions.push_back(detail::as_string(c, origin + ": conditions[]"));
  int i = 0;
  for (const Json& row : detail::array_member(j, "utility", origin)) {
    const std::string at = origin + ": utility[" + std::to_string(i++) + "]";
    if (!row.is_array()) throw ParseError(at + ": expected an array");
    std::vector<Rational> values;
    int k = 0;
    for (const Json& u : row)
      values.push_back(detail::as_rational(u, at + "[" + std::to_string(k++) + "]"));
    p.utility.push_back(std::move(values));
  }
  validate_problem(p);
  return p;
}

inline DecisionProblem load_problem(const std::string& path) {
  return problem_from_json(load_json(path), path);
}

// ---- databases:
// {"attributes": [{"name": "Rain", "values": ["yes", "no"]}, ...],
//  "tables": [{"attributes": ["Rain", "No Phones"], "cells": [["yes", "true", "0.4"], ...]}]}

inline Database database_from_json(const Json& j, const std::string& origin) {
  Database db;
  int i = 0;
  for (const Json& a : detail::array_member(j, "attributes", origin)) {
    const std::string at = origin + ": attributes[" + std::to_string(i++) + "]";
    AttributeSpec spec;
    spec.name = detail::as_string(detail::member(a, "name", at), at + ".name");
    for (const Json& v : detail::array_member(a, "values", at))
      spec.values.push_back(detail::as_string(v, at + ".values[]"));
    db.specs.push_back(std::move(spec));
  }
  i = 0;
  for (const Json& t : detail::array_member(j, "tables", origin)) {
    const std::string at = origin + ": tables[" + std::to_string(i++) + "]";
    ProbTable table;
    for (const Json& a : detail::array_member(t, "attributes", at))
      table.attributes.push_back(detail::as_string(a, at + ".attributes[]"));
    int r = 0;
    for (const Json& cell : detail::array_member(t, "cells", at)) {
      const std::string row = at + ".cells[" + std::to_string(r++) + "]";
      if (!cell.is_array() || cell.size() != table.attributes.size() + 1)
        throw ParseError(row + ": expected one value per attribute plus a probability");
      std::vector<std::string> key;
      for (std::size_t v = 0; v + 1 < cell.size(); ++v)
        key.push_back(detail::as_string(cell[v], row));
      Rational prob = detail::as_rational(cell[cell.size() - 1], row);
      if (!table.cells.emplace(std::move(key), std::move(prob)).second)
        throw ParseError(row + ": duplicate cell for the same value tuple");
    }
    db.tables.push_back(std::move(table));
  }
  validate_database(db);
  return db;
}

inline Database load_database(const std::string& path) {
  return database_from_json(load_json(path), path);
}

// ---- sentence pools (worlds-driven decide):
// {"conditions": ["Rain", "!Rain"], "statements": [{"sentence": ..., "lower": ..., "upper": ...}]}

struct SentencePool {
  std::vector<Formula> conditions;
  std::vector<ProbStatement> statements;
};

inline SentencePool pool_from_json(const Json& j, const std::string& origin) {
  SentencePool pool;
  for (const Json& c : detail::array_member(j, "conditions", origin))
    pool.conditions.push_back(detail::as_formula(c, origin + ": conditions[]"));
  pool.statements = detail::statements_from_json(detail::array_member(j, "statements", origin),
                                                 origin + ": statements");
  return pool;
}

inline SentencePool load_pool(const std::string& path) {
  return pool_from_json(load_json(path), path);
}

// ---- condition tuples (database-driven decide):
// {"attributes": ["Rain", "Trains"], "tuples": [[["yes", "yes"]], [["yes", "no"]], ...]}

inline ConditionTuples condition_tuples_from_json(const Json& j, const std::string& origin) {
  ConditionTuples map;
  for (const Json& a : detail::array_member(j, "attributes", origin))
    map.attributes.push_back(detail::as_string(a, origin + ": attributes[]"));
  int i = 0;
  for (const Json& cond : detail::array_member(j, "tuples", origin)) {
    const std::string at = origin + ": tuples[" + std::to_string(i++) + "]";
    if (!cond.is_array()) throw ParseError(at + ": expected an array of value tuples");
    std::vector<std::vector<std::string>> tuples;
    for (const Json& tuple : cond) {
      if (!tuple.is_array()) throw ParseError(at + ": expected an array of value tuples");
      std::vector<std::string> values;
      for (const Json& v : tuple) values.push_back(detail::as_string(v, at + "[]"));
      tuples.push_back(std::move(values));
    }
    map.tuples.push_back(std::move(tuples));
  }
  return map;
}

inline ConditionTuples load_condition_tuples(const std::string& path) {
  return condition_tuples_from_json(load_json(path), path);
}

// ---- serialization helpers ----

inline Json interval_json(const Interval& iv) {
  return Json::array({iv.lower().str(), iv.upper().str()});
}

}  // namespace credal
