#include "catch_amalgamated.hpp"

#include <random>
#include <string>
#include <vector>

#include "credal/formula.hpp"

using credal::Assignment;
using credal::Formula;

namespace {

// second evaluator, written against the truth tables rather than shared code
bool slow_eval(const Formula& f, const Assignment& a) {
  using K = Formula::Kind;
  if (f.kind() == K::Atom) return a.at(f.atom_name());
  if (f.kind() == K::Not) return slow_eval(f.left(), a) == false;
  const bool l = slow_eval(f.left(), a);
  const bool r = slow_eval(f.right(), a);
  switch (f.kind()) {
    case K::And: return l && r;
    case K::Or: return l || r;
    default: return (l && r) || !l;  // implication truth table
  }
}

Formula random_formula(std::mt19937_64& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 0 : 4);
  std::uniform_int_distribution<int> atom(0, 3);
  static const char* names[] = {"a", "b", "c", "Temp > 85"};
  switch (pick(rng)) {
    case 0: return Formula::atom(names[atom(rng)]);
    case 1: return Formula::negation(random_formula(rng, depth - 1));
    case 2: return Formula::conjunction(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
    case 3: return Formula::disjunction(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
    default: return Formula::implication(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
  }
}

}  // namespace

TEST_CASE("formula construction and structural equality") {
  Formula b = Formula::atom("B");
  Formula c1 = Formula::atom("c1");
  Formula imp = Formula::implication(b, c1);
  CHECK(imp.kind() == Formula::Kind::Implies);
  CHECK(imp.left() == b);
  CHECK(imp.right() == c1);
  CHECK(imp == Formula::implication(Formula::atom("B"), Formula::atom("c1")));
  CHECK(imp != Formula::implication(c1, b));
  CHECK(Formula::atom("x") != Formula::atom("X"));  // case-sensitive
  CHECK_THROWS_AS(Formula::atom(""), credal::Error);
}

TEST_CASE("evaluate matches the classical truth tables") {
  Formula b = Formula::atom("B");
  Formula c1 = Formula::atom("c1");
  Formula imp = Formula::implication(b, c1);
  CHECK_FALSE(evaluate(imp, {{"B", true}, {"c1", false}}));
  CHECK(evaluate(imp, {{"B", false}, {"c1", false}}));
  CHECK(evaluate(Formula::conjunction(Formula::atom("H"), Formula::atom("P")),
                 {{"H", true}, {"P", true}}));
  CHECK_THROWS_AS(evaluate(imp, Assignment{{"B", true}}), credal::UnboundAtom);
}

TEST_CASE("parser handles precedence and quoting") {
  CHECK(Formula::parse("a & b | c") ==
        Formula::disjunction(Formula::conjunction(Formula::atom("a"), Formula::atom("b")),
                             Formula::atom("c")));
  CHECK(Formula::parse("!a & b") ==
        Formula::conjunction(Formula::negation(Formula::atom("a")), Formula::atom("b")));
  CHECK(Formula::parse("a -> b -> c") ==
        Formula::implication(Formula::atom("a"),
                             Formula::implication(Formula::atom("b"), Formula::atom("c"))));
  CHECK(Formula::parse("(a | b) & c") ==
        Formula::conjunction(Formula::disjunction(Formula::atom("a"), Formula::atom("b")),
                             Formula::atom("c")));
  CHECK(Formula::parse("(\"B. pressure < 30\" & \"Humidity > 80\") -> Rain") ==
        Formula::implication(Formula::conjunction(Formula::atom("B. pressure < 30"),
                                                  Formula::atom("Humidity > 80")),
                             Formula::atom("Rain")));
  CHECK(Formula::parse("\"with \\\"quotes\\\" and \\\\slash\"").atom_name() ==
        "with \"quotes\" and \\slash");

  CHECK_THROWS_AS(Formula::parse(""), credal::ParseError);
  CHECK_THROWS_AS(Formula::parse("a &"), credal::ParseError);
  CHECK_THROWS_AS(Formula::parse("(a"), credal::ParseError);
  CHECK_THROWS_AS(Formula::parse("a b"), credal::ParseError);
  CHECK_THROWS_AS(Formula::parse("\"unterminated"), credal::ParseError);
}

TEST_CASE("printer round-trips through the parser") {
  std::mt19937_64 rng(424242);
  for (int it = 0; it < 300; ++it) {
    Formula f = random_formula(rng, 4);
    Formula back = Formula::parse(f.str());
    INFO("formula: " << f.str());
    REQUIRE(back == f);
  }
  CHECK(Formula::parse("a->b|c&!d").str() == "a -> b | c & !d");
}

TEST_CASE("evaluate agrees with an independent evaluator on De Morgan pairs") {
  std::mt19937_64 rng(99);
  std::vector<std::string> names{"a", "b", "c", "Temp > 85"};
  for (int it = 0; it < 200; ++it) {
    Formula f = random_formula(rng, 3);
    Formula g = random_formula(rng, 3);
    Formula lhs = Formula::negation(Formula::conjunction(f, g));
    Formula rhs = Formula::disjunction(Formula::negation(f), Formula::negation(g));
    Formula lhs2 = Formula::negation(Formula::disjunction(f, g));
    Formula rhs2 = Formula::conjunction(Formula::negation(f), Formula::negation(g));
    for (int mask = 0; mask < 16; ++mask) {
      Assignment a;
      for (int i = 0; i < 4; ++i) a[names[i]] = (mask >> i) & 1;
      REQUIRE(evaluate(lhs, a) == slow_eval(rhs, a));
      REQUIRE(evaluate(rhs, a) == slow_eval(lhs, a));
      REQUIRE(evaluate(lhs2, a) == slow_eval(rhs2, a));
      REQUIRE(evaluate(f, a) == slow_eval(f, a));
    }
  }
}

TEST_CASE("consistency by exhaustive enumeration") {
  Formula b = Formula::parse("B");
  Formula c1 = Formula::parse("c1");
  Formula imp = Formula::implication(b, c1);
  CHECK_FALSE(credal::consistent({{imp, true}, {b, true}, {c1, false}}));
  CHECK(credal::consistent({{Formula::parse("\"Temp>85\" -> Rain"), false},
                            {Formula::parse("\"Temp>85\""), true}}));
  CHECK(credal::consistent({}));
}

TEST_CASE("consistency is monotone and rejects direct contradictions") {
  std::mt19937_64 rng(1234);
  std::bernoulli_distribution coin;
  for (int it = 0; it < 120; ++it) {
    std::vector<std::pair<Formula, bool>> labeled;
    int k = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < k; ++i) labeled.push_back({random_formula(rng, 3), coin(rng)});
    bool before = credal::consistent(labeled);
    labeled.push_back({random_formula(rng, 3), coin(rng)});
    bool after = credal::consistent(labeled);
    REQUIRE((before || !after));  // false never turns true

    Formula f = random_formula(rng, 3);
    REQUIRE_FALSE(credal::consistent({{f, true}, {f, false}}));
  }
}

TEST_CASE("atom cap is enforced") {
  std::vector<std::pair<Formula, bool>> labeled;
  Formula f = Formula::atom("x0");
  for (int i = 1; i < 30; ++i) f = Formula::conjunction(f, Formula::atom("x" + std::to_string(i)));
  // label the conjunction false so the very first assignment already works
  labeled.push_back({f, false});
  CHECK_THROWS_AS(credal::consistent(labeled), credal::AtomLimitExceeded);
  CHECK(credal::consistent(labeled, 30));
}
