// Command-line front end: anytime deduction and decision streams over
// interval and set-valued probabilities, plus the segment-set eccentricity
// analyzer and a fixture-driven reproduction mode.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "credal/decide.hpp"
#include "credal/deduction.hpp"
#include "credal/json_io.hpp"
#include "credal/maxent.hpp"
#include "credal/pdb.hpp"
#include "credal/simplex.hpp"
#include "credal/worlds.hpp"

namespace {

using namespace credal;

struct RunConfig {
  int budget = 0;  // 0 = command default (deduce/fh: 16; nilsson/pdb: no cap)
  long long deadline_ms = 0;
  std::uint64_t seed = 0;
  bool trace = false;
  std::string format = "text";
};

std::function<bool()> make_stop(const RunConfig& cfg) {
  if (cfg.deadline_ms <= 0) return {};
  const auto end =
      std::chrono::steady_clock::now() + std::chrono::milliseconds(cfg.deadline_ms);
  return [end] { return std::chrono::steady_clock::now() >= end; };
}

std::string comma_list(const std::vector<std::string>& names) {
  std::string out;
  for (const std::string& n : names) {
    if (!out.empty()) out += ",";
    out += n;
  }
  return out;
}

// ---- deduce ----

int cmd_deduce(const std::string& kb_path, const RunConfig& cfg) {
  const KnowledgeBase kb = load_kb(kb_path);
  AnytimeDeduction engine(kb);  // throws InconsistentPremises on contradictory premises
  const std::function<bool()> stop = make_stop(cfg);
  const int budget = cfg.budget > 0 ? cfg.budget : 16;
  for (int k = 1; k <= budget; ++k) {
    if (k > 1 && stop && stop()) break;
    const auto step = engine.step();
    if (!step) break;
    if (cfg.format == "jsonl") {
      Json line{{"step", step->index},
                {"rule", step->rule},
                {"sentence", step->produced.sentence.str()},
                {"bounds", interval_json(step->produced.bounds)},
                {"interval", interval_json(step->target_after)}};
      if (cfg.trace) line["inputs"] = step->inputs;
      std::cout << line.dump() << "\n";
    } else {
      std::cout << "step=" << step->index << " rule=" << step->rule
                << " sentence=" << step->produced.sentence.str()
                << " bounds=" << step->produced.bounds.str();
      if (cfg.trace && !step->inputs.empty()) {
        std::cout << " inputs=" << step->inputs[0];
        for (std::size_t i = 1; i < step->inputs.size(); ++i)
          std::cout << "," << step->inputs[i];
      }
      std::cout << " interval=" << step->target_after.str() << "\n";
    }
  }
  return 0;
}

// ---- decide ----

void print_snapshot(const DecisionSnapshot& s, const std::string& backend,
                    const std::vector<std::string>& conditions, const RunConfig& cfg) {
  if (cfg.format == "jsonl") {
    Json line{{"step", s.index}, {"backend", backend}, {"admissible", s.admissible}};
    Json ivs = Json::array();
    for (std::size_t j = 0; j < s.intervals.size(); ++j)
      ivs.push_back({{"condition", conditions[j]},
                     {"lower", s.intervals[j].lower().str()},
                     {"upper", s.intervals[j].upper().str()}});
    line["intervals"] = std::move(ivs);
    std::cout << line.dump() << "\n";
  } else {
    std::cout << "step=" << s.index << " backend=" << backend
              << " admissible=" << comma_list(s.admissible);
    for (std::size_t j = 0; j < s.intervals.size(); ++j)
      std::cout << " interval:" << conditions[j] << "=" << s.intervals[j].lower().str() << ","
                << s.intervals[j].upper().str();
    std::cout << "\n";
  }
}

std::string scheme_text(const Scheme& s) {
  std::string out;
  for (const auto& v : s.sets) {
    out += out.empty() ? "{" : " {";
    bool first = true;
    for (const std::string& a : v) {
      if (!first) out += ", ";
      out += a;
      first = false;
    }
    out += "}";
  }
  return out;
}

int cmd_decide(const std::string& problem_path, const std::string& backend,
               const std::vector<std::string>& kb_paths, const std::string& pool_path,
               const std::string& db_path, const std::string& map_path,
               const std::string& fallback, const RunConfig& cfg) {
  const DecisionProblem p = load_problem(problem_path);
  const std::function<bool()> stop = make_stop(cfg);
  std::vector<DecisionSnapshot> stream;
  std::vector<std::string> trace_notes;  // per-snapshot auxiliary lines under --trace

  if (backend == "fh") {
    if (kb_paths.empty())
      throw ParseError("backend fh needs one --kb file per condition");
    std::vector<KnowledgeBase> kbs;
    for (const std::string& path : kb_paths) kbs.push_back(load_kb(path));
    const int budget = cfg.budget > 0 ? cfg.budget : 16;
    stream = anytime_decide_fh(p, kbs, budget, stop);
  } else if (backend == "nilsson") {
    if (pool_path.empty()) throw ParseError("backend nilsson needs --pool");
    SentencePool pool = load_pool(pool_path);
    if (cfg.budget > 0 &&
        static_cast<int>(pool.statements.size()) > cfg.budget - 1)
      pool.statements.erase(pool.statements.begin() + (cfg.budget - 1), pool.statements.end());
    if (cfg.trace) {
      trace_notes.push_back("conditions only");
      for (const ProbStatement& s : pool.statements)
        trace_notes.push_back("added sentence=" + s.sentence.str() + " bounds=" +
                              s.bounds.str());
    }
    stream = anytime_decide_nilsson(p, pool.conditions, pool.statements, {}, kDefaultLeafCap,
                                    kDefaultAtomCap, stop);
  } else {  // pdb
    if (db_path.empty() || map_path.empty())
      throw ParseError("backend pdb needs --db and --map");
    const Database db = load_database(db_path);
    const ConditionTuples map = load_condition_tuples(map_path);
    if (cfg.trace)
      for (const Scheme& rung : scheme_ladder(db, map.attributes))
        trace_notes.push_back("rung schemes: " + scheme_text(rung));
    int next_rung = 1;
    const std::function<bool()> rung_stop = [&next_rung, &cfg, &stop] {
      ++next_rung;  // polled once before each rung after the first
      if (cfg.budget > 0 && next_rung > cfg.budget) return true;
      return stop && stop();
    };
    stream = anytime_decide_pdb(p, db, map, rung_stop);
  }

  for (std::size_t k = 0; k < stream.size(); ++k) {
    if (cfg.trace && k < trace_notes.size() && cfg.format != "jsonl")
      std::cout << "# " << trace_notes[k] << "\n";
    print_snapshot(stream[k], backend, p.conditions, cfg);
  }

  const DecisionSnapshot& last = stream.back();
  std::string choice;
  if (!fallback.empty()) {
    const AdmissibleSet surviving{last.admissible, ""};
    if (fallback == "random")
      choice = fallback_random(p, surviving, cfg.seed);
    else if (fallback == "maximin")
      choice = fallback_maximin(p, surviving);
    else
      choice = fallback_midpoint(p, surviving, last.intervals);
  }
  if (cfg.format == "jsonl") {
    Json line{{"final", true}, {"admissible", last.admissible}};
    if (!choice.empty()) line["fallback"] = choice;
    std::cout << line.dump() << "\n";
  } else {
    std::cout << "final admissible=" << comma_list(last.admissible);
    if (!choice.empty()) std::cout << " fallback=" << choice;
    std::cout << "\n";
  }
  return 0;
}

// ---- maxent ----

int cmd_maxent_ecc(const std::string& pattern, const std::string& a_text,
                   const std::string& b_text, const std::string& at, const RunConfig& cfg) {
  const Rational a = Rational::parse(a_text);
  const Rational b = Rational::parse(b_text);
  SegmentSet seg;
  ProbVec4 point;
  if (pattern == "conjunction") {
    seg = conjunction_segment(a, b);
    point = at == "centroid" ? centroid(seg) : maxent_conjunction(a, b);
  } else {  // modus-ponens: the entropy maximizer is the segment midpoint
    seg = modus_ponens_segment(a, b);
    point = centroid(seg);
  }
  const Rational ecc = eccentricity(point, seg);
  char decimal[64];
  std::snprintf(decimal, sizeof(decimal), "%.12g", ecc.to_double());
  if (cfg.format == "jsonl") {
    Json line{{"pattern", pattern}, {"a", a.str()},           {"b", b.str()},
              {"at", at},           {"ecc", ecc.str()},       {"ecc2", (ecc * ecc).str()},
              {"decimal", ecc.to_double()}};
    std::cout << line.dump() << "\n";
  } else {
    std::cout << "ecc = " << decimal << " (ecc^2 = " << (ecc * ecc).str() << ")\n";
  }
  return 0;
}

int cmd_maxent_sweep(int grid) {
  std::cout << eccentricity_sweep_csv(grid);
  return 0;
}

int cmd_maxent_mc(const std::string& mode, long long samples, const RunConfig& cfg) {
  const EccMode m = mode == "maxent" ? EccMode::MaxentPoint : EccMode::UniformPoint;
  const double mean = expected_ecc_mc(m, samples, cfg.seed);
  if (cfg.format == "jsonl") {
    Json line{{"mode", mode}, {"mean", mean}, {"samples", samples}, {"seed", cfg.seed}};
    std::cout << line.dump() << "\n";
  } else {
    char buf[128];
    std::snprintf(buf, sizeof(buf), "mean = %.6f samples = %lld\n", mean,
                  static_cast<long long>(samples));
    std::cout << buf;
  }
  return 0;
}

// ---- reproduce-paper ----

Interval iv(const char* lo, const char* hi) {
  return Interval(Rational::parse(lo), Rational::parse(hi));
}

ProbVec4 pv(const char* a, const char* b, const char* c, const char* d) {
  return {Rational::parse(a), Rational::parse(b), Rational::parse(c), Rational::parse(d)};
}

/// Truth vectors of the tree's leaves restricted to the given sentences,
/// as an order-free set (published matrices fix only the rows).
std::set<std::vector<bool>> column_set(const SemanticTree& tree,
                                       const std::vector<Formula>& rows) {
  std::vector<int> at;
  for (const Formula& f : rows) {
    int i = 0;
    while (!(tree.sentences()[i] == f)) ++i;
    at.push_back(i);
  }
  std::set<std::vector<bool>> out;
  for (const WorldClass& leaf : tree.leaves()) {
    std::vector<bool> col;
    for (int i : at) col.push_back(leaf.labels[i]);
    out.insert(col);
  }
  return out;
}

int cmd_reproduce(const std::string& dir) {
  int failures = 0;
  const auto check = [&failures](bool ok, const std::string& name) {
    std::cout << (ok ? "ok - " : "FAIL - ") << name << "\n";
    if (!ok) ++failures;
  };

  // -- interval deduction on the beach knowledge base --
  {
    const KnowledgeBase kb = load_kb(dir + "/beach_kb.json");
    AnytimeDeduction engine(kb);
    const Formula rain = Formula::parse("Rain");
    const Formula pressure_humidity =
        Formula::parse("\"B. pressure < 30\" & \"Humidity > 80\"");
    bool first_rain = false, conj_week = false, second_rain = false;
    Interval final_interval = Interval::unit();
    for (int k = 0; k < 10; ++k) {
      const auto step = engine.step();
      if (!step) break;
      if (step->produced.sentence == rain && step->produced.bounds == iv("7/20", "3/5"))
        first_rain = true;
      if (step->produced.sentence == pressure_humidity &&
          step->produced.bounds == iv("9/10", "1"))
        conj_week = true;
      if (step->produced.sentence == rain && step->produced.bounds == iv("11/20", "19/20"))
        second_rain = true;
      final_interval = step->target_after;
    }
    check(first_rain, "beach: temperature route bounds rain to [7/20, 3/5]");
    check(conj_week, "beach: pressure & humidity land in [9/10, 1]");
    check(second_rain, "beach: implication route bounds rain to [11/20, 19/20]");
    check(final_interval == iv("11/20", "3/5"),
          "beach: intersected rain interval is [11/20, 3/5]");
  }

  // -- deduction-driven decision stream --
  {
    const DecisionProblem p = load_problem(dir + "/beach_problem.json");
    std::vector<KnowledgeBase> kbs{load_kb(dir + "/beach_kb.json"),
                                   load_kb(dir + "/beach_norain_kb.json")};
    const auto stream = anytime_decide_fh(p, kbs, 40);
    bool transition_ok = !stream.empty();
    bool saw_pair = false, saw_single = false;
    for (const DecisionSnapshot& s : stream) {
      const bool single = s.admissible == std::vector<std::string>{"Do not go"};
      const bool pair = s.admissible == std::vector<std::string>{"Go", "Do not go"};
      transition_ok = transition_ok && (s.intervals[0].lower() > Rational(1, 2) ? single : pair);
      saw_pair = saw_pair || pair;
      saw_single = saw_single || single;
    }
    check(transition_ok && saw_pair && saw_single,
          "beach: staying home becomes uniquely admissible once p(rain) > 1/2");
    check(!stream.empty() && stream.back().intervals[0] == iv("11/20", "3/5"),
          "beach: final rain interval in the decision stream is [11/20, 3/5]");
  }

  // -- worlds-driven decision stream --
  {
    const DecisionProblem p = load_problem(dir + "/beach_problem.json");
    const SentencePool pool = load_pool(dir + "/beach_pool.json");
    SemanticTree tree = tree_init_condition_first(pool.conditions);
    tree = tree_add_sentence(tree, pool.statements[0].sentence);  // (B & H) -> Rain
    tree = tree_add_sentence(tree, pool.statements[1].sentence);  // H
    check(tree.leaves().size() == 5, "worlds: implication plus humidity split 5 classes");
    const Formula rain = Formula::parse("Rain");
    const Formula impl = pool.statements[0].sentence;
    const Formula hum = pool.statements[1].sentence;
    const std::set<std::vector<bool>> five{{true, true, true},
                                           {true, true, false},
                                           {false, true, true},
                                           {false, true, false},
                                           {false, false, true}};
    check(column_set(tree, {rain, impl, hum}) == five,
          "worlds: 5-class matrix matches up to column order");
    tree = tree_add_sentence(tree, pool.statements[2].sentence);  // B
    check(tree.leaves().size() == 8, "worlds: adding pressure yields 8 classes");
    const auto stream = anytime_decide_nilsson(p, pool.conditions, pool.statements);
    check(stream.size() == 4 &&
              stream[2].admissible == std::vector<std::string>{"Go", "Do not go"} &&
              stream[3].admissible == std::vector<std::string>{"Do not go"},
          "worlds: both actions admissible on 5 classes, staying home alone on 8");
  }

  // -- condition-first tree and the dominant action --
  {
    const DecisionProblem p = load_problem(dir + "/tri_problem.json");
    const SentencePool pool = load_pool(dir + "/tri_pool.json");
    SemanticTree tree = tree_init_condition_first(pool.conditions);
    for (const ProbStatement& s : pool.statements) tree = tree_add_sentence(tree, s.sentence);
    check(tree.leaves().size() == 6, "three conditions: matrix has 6 world classes");
    std::vector<std::pair<int, Interval>> bounds;
    for (const ProbStatement& s : pool.statements) {
      int i = 0;
      while (!(tree.sentences()[i] == s.sentence)) ++i;
      bounds.push_back({i, s.bounds});
    }
    check(entailed_bounds(tree, bounds, 0) == iv("7/10", "1"),
          "three conditions: entailed p(c1) is [7/10, 1]");
    const auto stream = anytime_decide_nilsson(p, pool.conditions, pool.statements);
    check(stream.size() == 3 && stream.back().admissible == std::vector<std::string>{"a1"},
          "three conditions: a1 becomes dominant after both sentences");
    bool counts = true;
    for (int n = 2; n <= 6; ++n) {
      std::vector<Formula> conds;
      for (int i = 0; i < n; ++i) conds.push_back(Formula::atom("e" + std::to_string(i + 1)));
      counts = counts && exclusivity_statements(conds).size() ==
                             static_cast<std::size_t>(n * (n - 1) / 2 + 1);
    }
    check(counts, "exclusivity statements: one disjunction plus one pair rule each");
  }

  // -- segment-set analysis --
  {
    const Rational a = Rational::parse("0.9"), b = Rational::parse("0.1");
    const SegmentSet conj = conjunction_segment(a, b);
    check(conj.v1 == pv("0", ".9", ".1", "0") && conj.v2 == pv(".1", ".8", "0", ".1"),
          "segments: conjunction(0.9, 0.1) vertices");
    check(centroid(conj) == pv(".05", ".85", ".05", ".05"),
          "segments: conjunction centroid (.05, .85, .05, .05)");
    const SegmentSet mp = modus_ponens_segment(Rational::parse("0.9"), Rational::parse("0.6"));
    check(mp.v1 == pv(".5", ".4", ".1", "0") && mp.v2 == pv(".5", ".4", "0", ".1"),
          "segments: modus ponens(0.9, 0.6) vertices");
    check(eccentricity(maxent_conjunction(a, b), conj) == Rational(4, 5),
          "segments: eccentricity of the entropy maximizer is 4/5");
    const auto numeric = maxent_on_segment(conj);
    const auto independent = to_double(maxent_conjunction(a, b));
    bool close = true;
    for (int i = 0; i < 4; ++i) close = close && std::abs(numeric[i] - independent[i]) < 1e-9;
    check(close, "segments: numeric entropy maximum matches the independent product");
    const auto mp_numeric = maxent_on_segment(mp);
    const auto mp_centroid = to_double(centroid(mp));
    close = true;
    for (int i = 0; i < 4; ++i) close = close && std::abs(mp_numeric[i] - mp_centroid[i]) < 1e-9;
    check(close, "segments: modus ponens entropy maximum sits at the centroid");
    const double m_mean = expected_ecc_mc(EccMode::MaxentPoint, 200000, 7);
    const double u_mean = expected_ecc_mc(EccMode::UniformPoint, 200000, 7);
    check(std::abs(m_mean - 1.0 / 3.0) < 0.01,
          "segments: mean maxent eccentricity near 1/3 (200k samples)");
    check(std::abs(u_mean - 0.5) < 0.01,
          "segments: mean uniform eccentricity near 1/2 (200k samples)");
  }

  // -- the excursion database --
  {
    const Database db = load_database(dir + "/excursion_db.json");
    const DecisionProblem p = load_problem(dir + "/excursion_problem.json");
    const ConditionTuples map = load_condition_tuples(dir + "/excursion_map.json");
    const ProbTable trains = project_db(db, Scheme{{{"Trains"}}}).tables[0];
    const ProbTable temp = project_db(db, Scheme{{{"Temperature"}}}).tables[0];
    const ProbTable rain = project_db(db, Scheme{{{"Rain"}}}).tables[0];
    check(trains.cells.at({"yes"}) == Rational(1, 2) &&
              temp.cells.at({"high"}) == Rational(7, 10) &&
              temp.cells.at({"med"}) == Rational(1, 5) &&
              rain.cells.at({"yes"}) == Rational(1, 2),
          "database: marginals onto trains, temperature, and rain");
    const CredalDescription full = extension_system(db);
    check(full.system.variable_count() == 48 && full.system.constraints().size() == 20,
          "database: full extension has 48 unknowns and 20 marginal equalities");
    const auto stream = anytime_decide_pdb(p, db, map);
    check(stream.size() == 2 &&
              stream[0].admissible == std::vector<std::string>{"Don't go", "Go"} &&
              stream[1].admissible == std::vector<std::string>{"Don't go"},
          "database: ladder keeps both actions, then drops the excursion");
    const std::vector<Scheme> ladder = scheme_ladder(db, map.attributes);
    const CredalDescription rung2 =
        extension_system(project_db(db, ladder[1]), {}, map);
    std::vector<Rational> both(rung2.system.variable_count(), Rational(0));
    for (int v : rung2.condition_map[0]) both[v] = Rational(1);
    check(lp_optimize(rung2.system, both, Sense::Minimize) == Rational(1, 20),
          "database: joint rain-and-trains probability bottoms out at 1/20");
  }

  if (failures == 0) return 0;
  std::cout << failures << " check(s) failed\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "anytime decision making under interval and set-valued probabilities\n"
      "subcommands: deduce, decide, maxent (ecc | sweep | mc), reproduce-paper"};
  app.require_subcommand(1);

  RunConfig cfg;
  app.add_option("--budget", cfg.budget, "maximum number of anytime steps (default 16 for "
                                         "deduce and backend fh; no cap otherwise)")
      ->check(CLI::PositiveNumber);
  app.add_option("--deadline-ms", cfg.deadline_ms,
                 "wall-clock budget; the step in flight completes before stopping")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "seed for randomized fallbacks and Monte Carlo");
  app.add_flag("--trace", cfg.trace, "emit auxiliary detail lines");
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"text", "jsonl"}));

  std::string kb_path;
  CLI::App* deduce = app.add_subcommand("deduce", "run interval deduction on a knowledge base");
  deduce->fallthrough();
  deduce->add_option("kb", kb_path, "knowledge base JSON file")->required();

  std::string problem_path, backend, pool_path, db_path, map_path, fallback;
  std::vector<std::string> kb_paths;
  CLI::App* decide = app.add_subcommand("decide", "stream admissible actions for a problem");
  decide->fallthrough();
  decide->add_option("problem", problem_path, "decision problem JSON file")->required();
  decide->add_option("--backend", backend, "belief backend")
      ->required()
      ->check(CLI::IsMember({"fh", "nilsson", "pdb"}));
  decide->add_option("--kb", kb_paths, "per-condition knowledge base (backend fh; repeat)");
  decide->add_option("--pool", pool_path, "condition formulas and sentence pool (backend nilsson)");
  decide->add_option("--db", db_path, "probabilistic database (backend pdb)");
  decide->add_option("--map", map_path, "condition tuple mapping (backend pdb)");
  decide->add_option("--fallback", fallback, "pick one action from the final set")
      ->check(CLI::IsMember({"random", "maximin", "midpoint"}));

  CLI::App* maxent = app.add_subcommand("maxent", "segment-set entropy and eccentricity tools");
  maxent->fallthrough();
  maxent->require_subcommand(1);
  std::string pattern, a_text, b_text, at = "maxent";
  CLI::App* ecc = maxent->add_subcommand("ecc", "exact eccentricity of a chosen point");
  ecc->fallthrough();
  ecc->add_option("--pattern", pattern, "segment family")
      ->required()
      ->check(CLI::IsMember({"conjunction", "modus-ponens"}));
  ecc->add_option("--a", a_text, "first input probability (rational)")->required();
  ecc->add_option("--b", b_text, "second input probability (rational)")->required();
  ecc->add_option("--at", at, "which point to measure")
      ->check(CLI::IsMember({"maxent", "centroid"}));
  int grid = 19;
  CLI::App* sweep = maxent->add_subcommand("sweep", "CSV of maxent eccentricity over a grid");
  sweep->fallthrough();
  sweep->add_option("--grid", grid, "grid points per axis (default 19)");
  std::string mode;
  long long samples = 0;
  CLI::App* mc = maxent->add_subcommand("mc", "Monte Carlo mean eccentricity");
  mc->fallthrough();
  mc->add_option("--mode", mode, "point generator")
      ->required()
      ->check(CLI::IsMember({"maxent", "uniform"}));
  mc->add_option("--samples", samples, "number of samples")->required()->check(CLI::PositiveNumber);

  std::string fixtures = "fixtures";
  CLI::App* reproduce =
      app.add_subcommand("reproduce-paper", "re-check every published value against fixtures");
  reproduce->fallthrough();
  reproduce->add_option("--fixtures", fixtures, "fixture directory (default: fixtures)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (app.got_subcommand(deduce)) return cmd_deduce(kb_path, cfg);
    if (app.got_subcommand(decide))
      return cmd_decide(problem_path, backend, kb_paths, pool_path, db_path, map_path,
                        fallback, cfg);
    if (app.got_subcommand(maxent)) {
      if (maxent->got_subcommand(ecc)) return cmd_maxent_ecc(pattern, a_text, b_text, at, cfg);
      if (maxent->got_subcommand(sweep)) return cmd_maxent_sweep(grid);
      return cmd_maxent_mc(mode, samples, cfg);
    }
    return cmd_reproduce(fixtures);
  } catch (const InconsistentPremises& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InfeasibleCredal& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InconsistentDatabase& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Infeasible& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const LeafLimitExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const AtomLimitExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
