#include "catch_amalgamated.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "credal/decide.hpp"

using credal::AdmissibleSet;
using credal::CredalDescription;
using credal::DecisionProblem;
using credal::DecisionSnapshot;
using credal::Formula;
using credal::Interval;
using credal::KnowledgeBase;
using credal::LinearSystem;
using credal::Rational;
using credal::Relation;

namespace {

Interval iv(const char* lo, const char* hi) {
  return Interval(Rational::parse(lo), Rational::parse(hi));
}

Rational q(const char* s) { return Rational::parse(s); }

DecisionProblem beach_problem() {
  return {{"Go", "Do not go"},
          {"Rain", "No rain"},
          {{q("0"), q("1")}, {q("4/5"), q("1/5")}}};
}

KnowledgeBase beach_kb(Formula target) {
  KnowledgeBase kb{{}, std::move(target)};
  kb.statements.push_back(credal::premise(Formula::parse("\"Temperature > 85\""), iv(".95", "1")));
  kb.statements.push_back(
      credal::premise(Formula::parse("\"Temperature > 85\" -> Rain"), iv(".4", ".6")));
  kb.statements.push_back(credal::premise(
      Formula::parse("(\"B. pressure < 30\" & \"Humidity > 80\") -> Rain"), iv(".65", ".95")));
  kb.statements.push_back(credal::premise(Formula::parse("\"B. pressure < 30\""), iv(".95", "1")));
  kb.statements.push_back(credal::premise(Formula::parse("\"Humidity > 80\""), iv(".95", "1")));
  kb.statements.push_back(credal::premise(Formula::parse("August -> Rain"), iv(".2", "1")));
  kb.statements.push_back(credal::premise(Formula::parse("August"), iv("1", "1")));
  return kb;
}

std::vector<std::string> names(std::initializer_list<const char*> xs) {
  return std::vector<std::string>(xs.begin(), xs.end());
}

bool subset(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  for (const auto& x : a)
    if (std::find(b.begin(), b.end(), x) == b.end()) return false;
  return true;
}

}  // namespace

TEST_CASE("decision problem validation") {
  CHECK_NOTHROW(credal::validate_problem(beach_problem()));
  DecisionProblem p = beach_problem();
  p.actions.pop_back();
  p.utility.pop_back();
  CHECK_THROWS_AS(credal::validate_problem(p), credal::MalformedSystem);

  p = beach_problem();
  p.conditions[1] = "Rain";
  CHECK_THROWS_AS(credal::validate_problem(p), credal::MalformedSystem);

  p = beach_problem();
  p.utility[0].pop_back();
  CHECK_THROWS_AS(credal::validate_problem(p), credal::MalformedSystem);

  p = beach_problem();
  p.actions[1] = "Go";
  CHECK_THROWS_AS(credal::validate_problem(p), credal::MalformedSystem);
}

TEST_CASE("the stay-home domain is p(Rain) at least one half") {
  DecisionProblem p = beach_problem();
  CredalDescription credal{LinearSystem(2), {{0}, {1}}};
  auto rows = credal::domain_inequalities(p, 1, credal);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].coeffs == std::vector<Rational>{q("4/5"), q("-4/5")});
  CHECK(rows[0].rel == Relation::Ge);
  CHECK(rows[0].rhs == Rational(0));

  DecisionProblem flat{{"a", "b"}, {"c", "d"}, {{q("1"), q("1")}, {q("1"), q("1")}}};
  auto zero = credal::domain_inequalities(flat, 0, credal);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].coeffs == std::vector<Rational>{Rational(0), Rational(0)});
  CHECK(credal::e_admissible(flat, 0, credal));
  CHECK(credal::e_admissible(flat, 1, credal));
}

TEST_CASE("admissibility against an interval belief in rain") {
  DecisionProblem p = beach_problem();
  CredalDescription credal = credal::bounds_snapshot_system(p, {iv(".55", ".95"), iv("0", "1")});
  CHECK_FALSE(credal::e_admissible(p, 0, credal));
  CHECK(credal::e_admissible(p, 1, credal));
  CHECK(credal::admissible_set(p, credal).actions == names({"Do not go"}));

  CredalDescription simplex{LinearSystem(2), {{0}, {1}}};
  CHECK(credal::e_admissible(p, 0, simplex));
  CHECK(credal::e_admissible(p, 1, simplex));
  CHECK(credal::admissible_set(p, simplex).actions == names({"Go", "Do not go"}));

  CredalDescription empty{LinearSystem(2), {{0}, {1}}};
  empty.system.add({q("1"), q("0")}, Relation::Ge, q("2/3"));
  empty.system.add({q("1"), q("0")}, Relation::Le, q("1/3"));
  CHECK_THROWS_AS(credal::e_admissible(p, 0, empty), credal::InfeasibleCredal);
  CHECK_THROWS_AS(credal::admissible_set(p, empty), credal::InfeasibleCredal);
}

TEST_CASE("a point belief inside one domain admits that action alone") {
  DecisionProblem p = beach_problem();
  CHECK(credal::admissible_set(p, credal::bounds_snapshot_system(p, {iv(".7", ".7"), iv(".3", ".3")}))
            .actions == names({"Do not go"}));
  CHECK(credal::admissible_set(p, credal::bounds_snapshot_system(p, {iv(".3", ".3"), iv(".7", ".7")}))
            .actions == names({"Go"}));
  // on the boundary both expected utilities coincide, so ties admit
  CHECK(credal::admissible_set(p, credal::bounds_snapshot_system(p, {iv(".5", ".5"), iv(".5", ".5")}))
            .actions == names({"Go", "Do not go"}));
}

TEST_CASE("exclusivity statements count and shape") {
  std::vector<Formula> c3{Formula::parse("c1"), Formula::parse("c2"), Formula::parse("c3")};
  auto stmts = credal::exclusivity_statements(c3);
  REQUIRE(stmts.size() == 4);
  CHECK(stmts[0].sentence == Formula::parse("c1 | c2 | c3"));
  CHECK(stmts[0].bounds == iv("1", "1"));
  CHECK(stmts[1].sentence == Formula::parse("c1 & c2"));
  CHECK(stmts[1].bounds == iv("0", "0"));
  CHECK(stmts[3].sentence == Formula::parse("c2 & c3"));

  CHECK(credal::exclusivity_statements({Formula::parse("a"), Formula::parse("b")}).size() == 2);
  std::vector<Formula> c4{Formula::parse("c1"), Formula::parse("c2"), Formula::parse("c3"),
                          Formula::parse("c4")};
  CHECK(credal::exclusivity_statements(c4).size() == 7);

  CHECK_THROWS_AS(credal::exclusivity_statements({Formula::parse("a")}),
                  credal::DegenerateConditions);
  CHECK_THROWS_AS(credal::exclusivity_statements({Formula::parse("a"), Formula::parse("a")}),
                  credal::DegenerateConditions);
}

TEST_CASE("snapshot systems") {
  DecisionProblem p = beach_problem();
  CredalDescription credal = credal::bounds_snapshot_system(p, {iv(".55", ".95"), iv("0", "1")});
  CHECK(credal.system.variable_count() == 2);
  CHECK(credal.system.constraints().size() == 2);
  CHECK(credal.condition_map == std::vector<std::vector<int>>{{0}, {1}});

  CHECK(credal::bounds_snapshot_system(p, {Interval::unit(), Interval::unit()})
            .system.constraints()
            .empty());

  CredalDescription tight = credal::bounds_snapshot_system(p, {iv(".6", "1"), iv(".6", "1")});
  CHECK_THROWS_AS(credal::admissible_set(p, tight), credal::InfeasibleCredal);
}

TEST_CASE("deduction-driven loop settles on staying home") {
  DecisionProblem p = beach_problem();
  std::vector<KnowledgeBase> kbs{beach_kb(Formula::parse("Rain")),
                                 beach_kb(Formula::parse("!Rain"))};

  auto stream = credal::anytime_decide_fh(p, kbs, 40);
  REQUIRE(stream.size() >= 14);

  for (size_t k = 0; k < stream.size(); ++k) {
    const DecisionSnapshot& s = stream[k];
    // the admissible set is exactly determined by the rain lower bound
    if (s.intervals[0].lower() > q("1/2")) {
      CHECK(s.admissible == names({"Do not go"}));
    } else {
      CHECK(s.admissible == names({"Go", "Do not go"}));
    }
    if (k > 0) CHECK(subset(s.admissible, stream[k - 1].admissible));
  }

  CHECK(stream.front().intervals[0] == Interval::unit());
  CHECK(stream.front().admissible == names({"Go", "Do not go"}));
  CHECK(stream.back().intervals[0] == iv("11/20", "3/5"));
  CHECK(stream.back().intervals[1] == Interval::unit());
  CHECK(stream.back().admissible == names({"Do not go"}));

  bool saw_first_narrowing = false;
  for (const auto& s : stream)
    if (s.intervals[0] == iv("7/20", "3/5") && s.admissible.size() == 2) saw_first_narrowing = true;
  CHECK(saw_first_narrowing);

  // the final emission equals the one-shot answer over the final system
  auto final_credal = credal::bounds_snapshot_system(p, stream.back().intervals);
  CHECK(credal::admissible_set(p, final_credal).actions == stream.back().admissible);

  CHECK(credal::anytime_decide_fh(p, kbs, 1).size() == 1);
  CHECK(credal::anytime_decide_fh(p, kbs, 1).back().admissible == names({"Go", "Do not go"}));
  CHECK_THROWS_AS(credal::anytime_decide_fh(p, kbs, 0), credal::Error);
  CHECK_THROWS_AS(credal::anytime_decide_fh(p, {kbs[0]}, 5), credal::MalformedSystem);
}

TEST_CASE("deduction-driven loop stops once every engine is exhausted") {
  DecisionProblem p{{"a", "b"}, {"c1", "c2"}, {{q("1"), q("0")}, {q("0"), q("1")}}};
  // statement-free engines have only their trivial step
  std::vector<KnowledgeBase> kbs{{{}, Formula::parse("c1")}, {{}, Formula::parse("c2")}};
  auto stream = credal::anytime_decide_fh(p, kbs, 10);
  CHECK(stream.size() == 2);
  CHECK(stream.back().intervals[0] == Interval::unit());
  CHECK(stream.back().intervals[1] == Interval::unit());
  CHECK(stream.back().admissible == names({"a", "b"}));

  // a premise seeds its engine's interval before any step is taken
  std::vector<KnowledgeBase> seeded{
      {{credal::premise(Formula::parse("c1"), iv(".3", ".6"))}, Formula::parse("c1")},
      {{credal::premise(Formula::parse("c2"), iv(".2", ".5"))}, Formula::parse("c2")}};
  auto first = credal::anytime_decide_fh(p, seeded, 1);
  REQUIRE(first.size() == 1);
  CHECK(first.back().intervals[0] == iv(".3", ".6"));
  CHECK(first.back().intervals[1] == iv(".2", ".5"));
}

TEST_CASE("forced intervals that cannot sum to one are rejected") {
  DecisionProblem p{{"a", "b"}, {"c1", "c2"}, {{q("1"), q("0")}, {q("0"), q("1")}}};
  std::vector<KnowledgeBase> kbs{
      {{credal::premise(Formula::parse("c1"), iv(".9", ".9"))}, Formula::parse("c1")},
      {{credal::premise(Formula::parse("c2"), iv(".9", ".9"))}, Formula::parse("c2")}};
  // the premises already contradict exclusivity, so the very first
  // snapshot is empty
  CHECK_THROWS_AS(credal::anytime_decide_fh(p, kbs, 1), credal::InfeasibleCredal);
  CHECK_THROWS_AS(credal::anytime_decide_fh(p, kbs, 5), credal::InfeasibleCredal);
}

TEST_CASE("worlds-driven loop on the beach pool") {
  DecisionProblem p = beach_problem();
  std::vector<Formula> conds{Formula::parse("Rain"), Formula::parse("!Rain")};
  std::vector<credal::ProbStatement> pool{
      credal::premise(Formula::parse("(\"B. pressure < 30\" & \"Humidity > 80\") -> Rain"),
                      iv(".65", ".95")),
      credal::premise(Formula::parse("\"Humidity > 80\""), iv(".95", "1")),
      credal::premise(Formula::parse("\"B. pressure < 30\""), iv(".95", "1"))};

  auto stream = credal::anytime_decide_nilsson(p, conds, pool);
  REQUIRE(stream.size() == 4);
  CHECK(stream[0].admissible == names({"Go", "Do not go"}));
  CHECK(stream[1].admissible == names({"Go", "Do not go"}));
  CHECK(stream[2].admissible == names({"Go", "Do not go"}));
  CHECK(stream[3].admissible == names({"Do not go"}));
  CHECK(stream[0].intervals[0] == Interval::unit());

  // empty pool: a single emission over the bare condition split
  auto none = credal::anytime_decide_nilsson(p, conds, {});
  REQUIRE(none.size() == 1);
  CHECK(none[0].admissible == names({"Go", "Do not go"}));

  // a pool sentence already in the tree binds its bounds without splitting
  std::vector<credal::ProbStatement> direct{
      credal::premise(Formula::parse("Rain"), iv(".55", ".6"))};
  auto bound = credal::anytime_decide_nilsson(p, conds, direct);
  REQUIRE(bound.size() == 2);
  CHECK(bound[1].admissible == names({"Do not go"}));
  CHECK(bound[1].intervals[0] == iv(".55", ".6"));

  // order may be any permutation or prefix of the pool
  auto permuted = credal::anytime_decide_nilsson(p, conds, pool, {2, 0, 1});
  CHECK(permuted.size() == 4);
  CHECK(permuted.back().admissible == names({"Do not go"}));
  auto prefix = credal::anytime_decide_nilsson(p, conds, pool, {0});
  CHECK(prefix.size() == 2);
  CHECK(prefix.back().admissible == names({"Go", "Do not go"}));
  CHECK_THROWS_AS(credal::anytime_decide_nilsson(p, conds, pool, {0, 0}), credal::Error);
}

TEST_CASE("worlds-driven loop isolates the dominant action at p(c1) >= .7") {
  DecisionProblem p{{"a1", "a2"},
                    {"c1", "c2", "c3"},
                    {{q("1"), q("0"), q("0")}, {q("0"), q("1"), q("1")}}};
  std::vector<Formula> conds{Formula::parse("c1"), Formula::parse("c2"), Formula::parse("c3")};
  std::vector<credal::ProbStatement> pool{
      credal::premise(Formula::parse("B -> c1"), iv(".9", "1")),
      credal::premise(Formula::parse("B"), iv(".8", "1"))};
  auto stream = credal::anytime_decide_nilsson(p, conds, pool);
  REQUIRE(stream.size() == 3);
  CHECK(stream[0].admissible == names({"a1", "a2"}));
  CHECK(stream[1].admissible == names({"a1", "a2"}));
  CHECK(stream[2].admissible == names({"a1"}));
  CHECK(stream[2].intervals[0] == iv("7/10", "1"));
}

TEST_CASE("interval projection can lose admissibility information") {
  // Fixed regression instance: under the polytope {p1 >= p3, p2 >= p3} the
  // third action is never a maximizer, but the per-condition interval box
  // around that polytope admits it.
  DecisionProblem p{{"a1", "a2", "a3"},
                    {"c1", "c2", "c3"},
                    {{q("1"), q("0"), q("0")},
                     {q("0"), q("1"), q("0")},
                     {q("-3"), q("0"), q("3")}}};
  CredalDescription poly{LinearSystem(3), {{0}, {1}, {2}}};
  poly.system.add({q("1"), q("0"), q("-1")}, Relation::Ge, q("0"));
  poly.system.add({q("0"), q("1"), q("-1")}, Relation::Ge, q("0"));

  CHECK(credal::admissible_set(p, poly).actions == names({"a1", "a2"}));

  std::vector<Interval> box;
  for (int j = 0; j < 3; ++j) {
    std::vector<Rational> obj(3, Rational(0));
    obj[j] = Rational(1);
    box.push_back(Interval(credal::lp_optimize(poly.system, obj, credal::Sense::Minimize),
                           credal::lp_optimize(poly.system, obj, credal::Sense::Maximize)));
  }
  CHECK(box[2] == iv("0", "1/3"));
  CredalDescription snapshot = credal::bounds_snapshot_system(p, box);
  CHECK(credal::admissible_set(p, snapshot).actions == names({"a1", "a2", "a3"}));
}

TEST_CASE("fallback choices") {
  DecisionProblem p = beach_problem();
  AdmissibleSet both{names({"Go", "Do not go"}), ""};
  AdmissibleSet solo{names({"Go"}), ""};
  AdmissibleSet empty{{}, ""};

  CHECK(credal::fallback_maximin(p, both) == "Do not go");  // row minima 0 vs 1/5
  CHECK(credal::fallback_maximin(p, solo) == "Go");

  CHECK(credal::fallback_midpoint(p, both, {iv(".55", ".6"), iv(".4", ".45")}) == "Do not go");
  CHECK(credal::fallback_midpoint(p, both, {iv("0", ".2"), iv(".8", "1")}) == "Go");
  CHECK(credal::fallback_midpoint(p, solo, {iv(".55", ".6"), iv(".4", ".45")}) == "Go");

  const std::string pick = credal::fallback_random(p, both, 20260817);
  CHECK(credal::fallback_random(p, both, 20260817) == pick);
  CHECK((pick == "Go" || pick == "Do not go"));
  CHECK(credal::fallback_random(p, solo, 5) == "Go");

  CHECK_THROWS_AS(credal::fallback_random(p, empty, 1), credal::EmptyAdmissible);
  CHECK_THROWS_AS(credal::fallback_maximin(p, empty), credal::EmptyAdmissible);
  CHECK_THROWS_AS(credal::fallback_midpoint(p, empty, {iv("0", "1"), iv("0", "1")}),
                  credal::EmptyAdmissible);

  // a seeded pick is uniform enough to hit every admissible action eventually
  std::set<std::string> seen;
  for (std::uint64_t s = 0; s < 32; ++s) seen.insert(credal::fallback_random(p, both, s));
  CHECK(seen.size() == 2);
}

namespace {

DecisionProblem random_problem(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> mdist(2, 4), ndist(2, 4), num(-4, 4), den(1, 3);
  const int m = mdist(rng), n = ndist(rng);
  DecisionProblem p;
  for (int i = 0; i < m; ++i) p.actions.push_back("a" + std::to_string(i + 1));
  for (int j = 0; j < n; ++j) p.conditions.push_back("c" + std::to_string(j + 1));
  p.utility.assign(m, {});
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) p.utility[i].push_back(Rational(num(rng), den(rng)));
  return p;
}

void add_random_rows(LinearSystem& sys, int count, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coef(-1, 1), rhs_num(-2, 2), rel(0, 1);
  for (int r = 0; r < count; ++r) {
    std::vector<Rational> coeffs;
    for (int v = 0; v < sys.variable_count(); ++v) coeffs.push_back(Rational(coef(rng)));
    sys.add(coeffs, rel(rng) == 0 ? Relation::Ge : Relation::Le, Rational(rhs_num(rng), 4));
  }
}

}  // namespace

TEST_CASE("admissibility shrinks monotonically with the credal set") {
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<int> extra(1, 2), base(0, 3);
  int informative = 0;
  for (int it = 0; it < 150; ++it) {
    DecisionProblem p = random_problem(rng);
    CredalDescription wide{LinearSystem(p.condition_count()), {}};
    for (int j = 0; j < p.condition_count(); ++j) wide.condition_map.push_back({j});
    add_random_rows(wide.system, base(rng), rng);
    if (!credal::lp_feasible(wide.system)) continue;

    CredalDescription narrow = wide;
    add_random_rows(narrow.system, extra(rng), rng);
    if (!credal::lp_feasible(narrow.system)) continue;

    auto big = credal::admissible_set(p, wide).actions;
    auto small = credal::admissible_set(p, narrow).actions;
    INFO("iteration " << it);
    REQUIRE_FALSE(big.empty());
    REQUIRE_FALSE(small.empty());
    REQUIRE(subset(small, big));
    if (small.size() < big.size()) ++informative;
  }
  CHECK(informative > 10);
}

TEST_CASE("admissibility is invariant under column shifts and positive scaling") {
  std::mt19937_64 rng(909);
  std::uniform_int_distribution<int> shift(-3, 3), scale_num(1, 5), col(0, 3), base(0, 3);
  for (int it = 0; it < 100; ++it) {
    DecisionProblem p = random_problem(rng);
    CredalDescription credal{LinearSystem(p.condition_count()), {}};
    for (int j = 0; j < p.condition_count(); ++j) credal.condition_map.push_back({j});
    add_random_rows(credal.system, base(rng), rng);
    if (!credal::lp_feasible(credal.system)) continue;

    auto baseline = credal::admissible_set(p, credal).actions;

    DecisionProblem shifted = p;
    const int j = col(rng) % p.condition_count();
    const Rational c(shift(rng), 2);
    for (int i = 0; i < p.action_count(); ++i) shifted.utility[i][j] += c;
    CHECK(credal::admissible_set(shifted, credal).actions == baseline);

    DecisionProblem scaled = p;
    const Rational s(scale_num(rng), 2);
    for (auto& row : scaled.utility)
      for (auto& u : row) u *= s;
    CHECK(credal::admissible_set(scaled, credal).actions == baseline);
  }
}

TEST_CASE("random deduction-driven streams shrink and agree with the one-shot answer") {
  std::mt19937_64 rng(60902);
  static const char* atoms[] = {"c", "d", "e"};
  std::uniform_int_distribution<int> atom(0, 2), nstmt(1, 4), shape(0, 3), pct(0, 10);
  int completed = 0;
  for (int it = 0; it < 80; ++it) {
    DecisionProblem p = random_problem(rng);
    while (p.condition_count() != 2) p = random_problem(rng);

    std::vector<credal::ProbStatement> statements;
    const int k = nstmt(rng);
    for (int i = 0; i < k; ++i) {
      Formula f = Formula::atom(atoms[atom(rng)]);
      switch (shape(rng)) {
        case 0: break;
        case 1: f = Formula::implication(f, Formula::atom(atoms[atom(rng)])); break;
        case 2: f = Formula::conjunction(f, Formula::atom(atoms[atom(rng)])); break;
        default:
          f = Formula::implication(Formula::conjunction(f, Formula::atom(atoms[atom(rng)])),
                                   Formula::atom(atoms[atom(rng)]));
      }
      int lo = pct(rng), hi = pct(rng);
      if (lo > hi) std::swap(lo, hi);
      statements.push_back(
          credal::premise(std::move(f), Interval(Rational(lo, 10), Rational(hi, 10))));
    }
    std::vector<KnowledgeBase> kbs{{statements, Formula::atom("c")},
                                   {statements, Formula::parse("!c")}};
    try {
      auto stream = credal::anytime_decide_fh(p, kbs, 12);
      for (size_t i = 1; i < stream.size(); ++i) {
        INFO("iteration " << it << " step " << i);
        REQUIRE(subset(stream[i].admissible, stream[i - 1].admissible));
        REQUIRE_FALSE(stream[i].admissible.empty());
      }
      if (!stream.empty()) {
        auto oneshot =
            credal::admissible_set(p, credal::bounds_snapshot_system(p, stream.back().intervals));
        REQUIRE(oneshot.actions == stream.back().admissible);
        ++completed;
      }
    } catch (const credal::InconsistentPremises&) {
    } catch (const credal::InfeasibleCredal&) {
    }
  }
  CHECK(completed > 40);
}
