#pragma once

#include <cctype>
#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "credal/errors.hpp"

namespace credal {

inline constexpr int kDefaultAtomCap = 24;

/**
 * Propositional sentence over opaque atom names.
 *
 * Immutable value type; copies share structure.  The paper's numeric
 * predicates ("Temperature > 85") are single atoms, so names may contain
 * arbitrary characters and are compared case-sensitively.
 */
class Formula {
 public:
  enum class Kind { Atom, Not, And, Or, Implies };

  static Formula atom(std::string name) {
    if (name.empty()) throw Error("empty atom name");
    return Formula(std::make_shared<Node>(Node{Kind::Atom, std::move(name), nullptr, nullptr}));
  }
  static Formula negation(Formula f) {
    return Formula(std::make_shared<Node>(Node{Kind::Not, {}, f.node_, nullptr}));
  }
  static Formula conjunction(Formula a, Formula b) {
    return Formula(std::make_shared<Node>(Node{Kind::And, {}, a.node_, b.node_}));
  }
  static Formula disjunction(Formula a, Formula b) {
    return Formula(std::make_shared<Node>(Node{Kind::Or, {}, a.node_, b.node_}));
  }
  static Formula implication(Formula a, Formula b) {
    return Formula(std::make_shared<Node>(Node{Kind::Implies, {}, a.node_, b.node_}));
  }

  Kind kind() const { return node_->kind; }
  const std::string& atom_name() const {
    if (kind() != Kind::Atom) throw Error("atom_name on non-atom");
    return node_->name;
  }
  Formula left() const { return Formula(node_->left); }    // Not: the operand
  Formula right() const { return Formula(node_->right); }

  friend bool operator==(const Formula& a, const Formula& b) { return equal(a.node_, b.node_); }
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

  std::set<std::string> atoms() const {
    std::set<std::string> out;
    collect(node_, out);
    return out;
  }

  /// Canonical text form; parse(str()) reproduces the formula.
  std::string str() const {
    std::string out;
    print(node_, 0, out);
    return out;
  }

  /**
   * Text grammar:  !  binds tightest, then  &,  then  |,  then  ->  which is
   * right-associative.  Atom names are either bare identifiers
   * [A-Za-z_][A-Za-z0-9_]* or double-quoted strings with \" and \\ escapes.
   */
  static Formula parse(std::string_view text) {
    Parser p{text, 0};
    Formula f = p.parse_implies();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("unexpected trailing input");
    return f;
  }

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::shared_ptr<const Node> left;
    std::shared_ptr<const Node> right;
  };
  using NodePtr = std::shared_ptr<const Node>;

  explicit Formula(NodePtr n) : node_(std::move(n)) {}

  static bool equal(const NodePtr& a, const NodePtr& b) {
    if (a == b) return true;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
      case Kind::Atom: return a->name == b->name;
      case Kind::Not: return equal(a->left, b->left);
      default: return equal(a->left, b->left) && equal(a->right, b->right);
    }
  }

  static void collect(const NodePtr& n, std::set<std::string>& out) {
    switch (n->kind) {
      case Kind::Atom: out.insert(n->name); return;
      case Kind::Not: collect(n->left, out); return;
      default: collect(n->left, out); collect(n->right, out); return;
    }
  }

  static bool bare_name(const std::string& s) {
    if (s.empty()) return false;
    if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    for (char c : s)
      if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    return true;
  }

  // precedence: -> 1, | 2, & 3, ! 4, atom 5
  static int prec(Kind k) {
    switch (k) {
      case Kind::Implies: return 1;
      case Kind::Or: return 2;
      case Kind::And: return 3;
      case Kind::Not: return 4;
      default: return 5;
    }
  }

  static void print(const NodePtr& n, int min_prec, std::string& out) {
    const int p = prec(n->kind);
    const bool parens = p < min_prec;
    if (parens) out.push_back('(');
    switch (n->kind) {
      case Kind::Atom:
        if (bare_name(n->name)) {
          out += n->name;
        } else {
          out.push_back('"');
          for (char c : n->name) {
            if (c == '"' || c == '\\') out.push_back('\\');
            out.push_back(c);
          }
          out.push_back('"');
        }
        break;
      case Kind::Not:
        out.push_back('!');
        print(n->left, 4, out);
        break;
      case Kind::And:
        print(n->left, 3, out);
        out += " & ";
        print(n->right, 4, out);
        break;
      case Kind::Or:
        print(n->left, 2, out);
        out += " | ";
        print(n->right, 3, out);
        break;
      case Kind::Implies:
        print(n->left, 2, out);  // left operand must outrank ->
        out += " -> ";
        print(n->right, 1, out);
        break;
    }
    if (parens) out.push_back(')');
  }

  struct Parser {
    std::string_view text;
    size_t pos;

    [[noreturn]] void fail(const std::string& msg) const {
      throw ParseError("formula parse error at column " + std::to_string(pos + 1) + ": " + msg);
    }
    void skip_ws() {
      while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    }
    bool eat(char c) {
      skip_ws();
      if (pos < text.size() && text[pos] == c) {
        ++pos;
        return true;
      }
      return false;
    }
    bool eat_arrow() {
      skip_ws();
      if (pos + 1 < text.size() && text[pos] == '-' && text[pos + 1] == '>') {
        pos += 2;
        return true;
      }
      return false;
    }

    Formula parse_implies() {
      Formula lhs = parse_or();
      if (eat_arrow()) return Formula::implication(std::move(lhs), parse_implies());
      return lhs;
    }
    Formula parse_or() {
      Formula f = parse_and();
      while (eat('|')) f = Formula::disjunction(std::move(f), parse_and());
      return f;
    }
    Formula parse_and() {
      Formula f = parse_unary();
      while (eat('&')) f = Formula::conjunction(std::move(f), parse_unary());
      return f;
    }
    Formula parse_unary() {
      if (eat('!')) return Formula::negation(parse_unary());
      return parse_primary();
    }
    Formula parse_primary() {
      skip_ws();
      if (pos >= text.size()) fail("expected a formula");
      if (text[pos] == '(') {
        ++pos;
        Formula f = parse_implies();
        if (!eat(')')) fail("expected ')'");
        return f;
      }
      if (text[pos] == '"') {
        ++pos;
        std::string name;
        while (pos < text.size() && text[pos] != '"') {
          char c = text[pos++];
          if (c == '\\') {
            if (pos >= text.size()) fail("dangling escape");
            c = text[pos++];
          }
          name.push_back(c);
        }
        if (pos >= text.size()) fail("unterminated quoted atom");
        ++pos;
        if (name.empty()) fail("empty atom name");
        return Formula::atom(std::move(name));
      }
      if (std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_') {
        size_t begin = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
          ++pos;
        return Formula::atom(std::string(text.substr(begin, pos - begin)));
      }
      fail("unexpected character");
    }
  };

  NodePtr node_;
};

/// Total truth assignment over the atoms it is checked against.
using Assignment = std::map<std::string, bool>;

/// Classical truth value; implies(f,g) is !f | g.
inline bool evaluate(const Formula& f, const Assignment& a) {
  switch (f.kind()) {
    case Formula::Kind::Atom: {
      auto it = a.find(f.atom_name());
      if (it == a.end()) throw UnboundAtom("atom not assigned: " + f.atom_name());
      return it->second;
    }
    case Formula::Kind::Not: return !evaluate(f.left(), a);
    case Formula::Kind::And: return evaluate(f.left(), a) && evaluate(f.right(), a);
    case Formula::Kind::Or: return evaluate(f.left(), a) || evaluate(f.right(), a);
    default: return !evaluate(f.left(), a) || evaluate(f.right(), a);
  }
}

/**
 * True iff some assignment over the union of atoms gives every formula its
 * required label.  Exhaustive enumeration with early exit; more atoms than
 * the cap raise AtomLimitExceeded.
 */
inline bool consistent(const std::vector<std::pair<Formula, bool>>& labeled,
                       int atom_cap = kDefaultAtomCap) {
  std::set<std::string> atom_set;
  for (const auto& [f, label] : labeled) {
    std::set<std::string> fs = f.atoms();
    atom_set.insert(fs.begin(), fs.end());
  }
  const int n = static_cast<int>(atom_set.size());
  if (n > atom_cap)
    throw AtomLimitExceeded("consistency check over " + std::to_string(n) + " atoms (cap " +
                            std::to_string(atom_cap) + ")");
  std::vector<std::string> names(atom_set.begin(), atom_set.end());
  Assignment a;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    for (int i = 0; i < n; ++i) a[names[i]] = (mask >> i) & 1;
    bool ok = true;
    for (const auto& [f, label] : labeled)
      if (evaluate(f, a) != label) {
        ok = false;
        break;
      }
    if (ok) return true;
  }
  return false;
}

}  // namespace credal
