// Copyright 2026 The pslq Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Exit codes: 0 success (and every requested axiom
// holds), 1 an axiom or strategy-proofness check failed, 2 bad input.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pslq/axioms.hpp"
#include "pslq/decomposition.hpp"
#include "pslq/eating.hpp"
#include "pslq/generator.hpp"
#include "pslq/io.hpp"
#include "pslq/mechanisms.hpp"
#include "pslq/strategy_lab.hpp"

namespace {

using namespace pslq;

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kBadInput = 2;

struct Options {
  std::string input;
  std::string output;
  std::string format = "table";
  std::uint64_t seed = 0;

  std::string order;
  bool exact = false;
  std::uint64_t samples = 0;
  bool trace = false;
  int q = 1;
  std::string mechanism = "pslq";
  std::string assignment;
  std::string axioms = "feasible,ef,wef,oe";
  std::string master_list;
  bool verify = false;
  int student = 0;
  bool strong = false;
  int grid = 36;

  int n = 4;
  int k = 3;
  std::string quota_style = "integer-loose";
  int denominator = 3;
  std::string preference_style = "uniform";
  std::vector<double> weights;
  int max_upper = 0;
};

void emit(const Options& opt, const std::string& text) {
  if (opt.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opt.output, std::ios::binary);
  if (!out) throw InputError("cannot write " + opt.output);
  out << text;
}

Market load_market(const Options& opt) {
  if (opt.input.empty()) throw InputError("--input is required");
  return parse_market(read_file(opt.input));
}

Matrix load_assignment(const Options& opt, const Market& market) {
  if (opt.assignment.empty()) throw InputError("--assignment is required");
  return parse_matrix(read_file(opt.assignment), market);
}

// "3,4,1,2" (1-based students) -> Permutation.
Permutation parse_order(const std::string& text, int n) {
  if (text.empty()) return Permutation::identity(n);
  std::vector<int> order;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      order.push_back(v - 1);
    } catch (const std::exception&) {
      throw InputError("bad student \"" + item + "\" in order");
    }
  }
  if (static_cast<int>(order.size()) != n) {
    throw InputError("order lists " + std::to_string(order.size()) +
                     " students, market has " + std::to_string(n));
  }
  return Permutation(std::move(order));
}

Mechanism parse_mechanism(const std::string& name) {
  if (name == "pslq") return Mechanism::kPslq;
  if (name == "rplq") return Mechanism::kRplqExact;
  throw InputError("unknown mechanism \"" + name + "\" (expected pslq or rplq)");
}

Json students_json(const std::vector<int>& students) {
  Json out = Json::array();
  for (int i : students) out.push_back(i + 1);
  return out;
}

Json row_json(const std::vector<Rational>& row) {
  Json out = Json::array();
  for (const auto& v : row) out.push_back(v.str());
  return out;
}

Json pair_json(const PairCheck& check, const char* first, const char* second) {
  Json j;
  j["holds"] = check.holds;
  if (check.violation) {
    j[first] = check.violation->first + 1;
    j[second] = check.violation->second + 1;
  }
  return j;
}

Json report_json(const ManipulationReport& rep, const Market& market) {
  Json j;
  j["student"] = rep.student + 1;
  j["relation"] = std::string(to_string(rep.relation));
  j["truthful_row"] = row_json(rep.truthful_row);
  if (!rep.misreport.empty()) {
    Json names = Json::array();
    for (int p : rep.misreport) names.push_back(market.name(p));
    j["misreport"] = std::move(names);
    j["misreport_row"] = row_json(rep.misreport_row);
  }
  j["misreports_tried"] = rep.misreports_tried;
  j["rows_changed"] = rep.rows_changed;
  j["incomparable"] = rep.incomparable;
  j["strict_gains"] = rep.strict_gains;
  j["truthful_dominates_all"] = rep.truthful_dominates_all;
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

int cmd_priolq(const Options& opt) {
  const Market market = load_market(opt);
  const auto mu = run_priolq(market, parse_order(opt.order, market.students()));
  emit(opt, render(mu.to_matrix(), market, parse_format(opt.format)));
  return kOk;
}

int cmd_rplq(const Options& opt) {
  const Market market = load_market(opt);
  if (opt.exact && opt.samples > 0) {
    throw InputError("--exact and --samples are mutually exclusive");
  }
  const RplqResult res = opt.samples > 0
                             ? run_rplq_sampled(market, opt.samples, opt.seed)
                             : run_rplq_exact(market);
  emit(opt, render(res.assignment, market, parse_format(opt.format)));
  return kOk;
}

int cmd_pslq(const Options& opt) {
  const Market market = load_market(opt);
  const auto [r, trace] = run_pslq_traced(market);
  const Format format = parse_format(opt.format);
  if (!opt.trace) {
    emit(opt, render(r, market, format));
  } else if (format == Format::kJson) {
    Json doc = matrix_to_json(r, market);
    doc["trace"] = trace_to_json(trace, market);
    emit(opt, dump(doc));
  } else {
    emit(opt, render(r, market, format) + render_trace(trace, market));
  }
  return kOk;
}

int cmd_multiunit(const Options& opt) {
  const Market market = load_market(opt);
  MultiunitMechanism mech = MultiunitMechanism::kPslq;
  if (opt.mechanism == "rplq") {
    mech = MultiunitMechanism::kRplq;
  } else if (opt.mechanism != "pslq") {
    throw InputError("unknown mechanism \"" + opt.mechanism + "\"");
  }
  const auto res = run_multiunit(market, opt.q, mech,
                                 opt.samples > 0 ? opt.samples : 100000, opt.seed);
  emit(opt, render(res.assignment, market, parse_format(opt.format)));
  return kOk;
}

int cmd_check(const Options& opt) {
  const Market market = load_market(opt);
  const Matrix r = load_assignment(opt, market);
  Json report;
  bool all = true;
  std::stringstream ss(opt.axioms);
  std::string axiom;
  while (std::getline(ss, axiom, ',')) {
    Json j;
    if (axiom == "feasible") {
      const auto f = is_feasible(r, market);
      j["holds"] = f.feasible;
      j["violations"] = f.violations;
    } else if (axiom == "ef") {
      j = pair_json(is_envy_free(r, market.profile()), "envious", "envied");
    } else if (axiom == "wef") {
      j = pair_json(is_weakly_envy_free(r, market.profile()), "envious", "envied");
    } else if (axiom == "oe" && !is_feasible(r, market)) {
      j["holds"] = false;
      j["reason"] = "assignment is infeasible";
    } else if (axiom == "oe") {
      const auto e = is_ordinally_efficient(r, market);
      j["holds"] = e.efficient;
      if (e.witness) {
        const auto& w = *e.witness;
        j["witness"] = w.kind == WitnessKind::kTauCycle ? "tau-cycle" : "wasteful-chain";
        Json projects = Json::array();
        for (int p : w.projects) projects.push_back(market.name(p));
        j["projects"] = std::move(projects);
        j["students"] = students_json(w.students);
        j["delta"] = w.delta.str();
        j["improved"] = matrix_to_json(w.improved, market)["matrix"];
      }
    } else if (axiom == "ml") {
      const auto mu = DeterministicAssignment::from_matrix(r);
      const MasterList ml(parse_order(opt.master_list, market.students()));
      j = pair_json(is_ml_fair(mu, market.profile(), ml), "ahead", "behind");
    } else if (axiom == "pareto") {
      const auto p = is_mqc_efficient(DeterministicAssignment::from_matrix(r), market);
      j["holds"] = p.efficient;
      if (p.dominating) {
        j["dominating"] = matrix_to_json(p.dominating->to_matrix(), market)["matrix"];
      }
    } else {
      throw InputError("unknown axiom \"" + axiom +
                       "\" (expected feasible, ef, wef, oe, ml or pareto)");
    }
    all = all && j["holds"].get<bool>();
    report[axiom] = std::move(j);
  }
  report["all_hold"] = all;
  emit(opt, dump(report));
  return all ? kOk : kViolation;
}

int cmd_decompose(const Options& opt) {
  const Market market = load_market(opt);
  const Matrix r = load_assignment(opt, market);
  const Lottery lottery = decompose(r, market);
  Json doc = lottery_to_json(lottery, market);
  int code = kOk;
  if (opt.verify) {
    const Matrix back = lottery.expectation(market.students(), market.projects());
    bool terms_feasible = true;
    for (const auto& t : lottery.terms) {
      terms_feasible = terms_feasible && is_feasible(t.assignment, market).feasible;
    }
    const bool exact = back == r && lottery.total_weight() == Rational(1);
    doc["verify"] = {{"reconstruction_exact", exact},
                     {"terms_feasible", terms_feasible},
                     {"terms", lottery.terms.size()},
                     {"term_bound", fractional_count(r) + 1}};
    if (!exact || !terms_feasible) code = kViolation;
  }
  emit(opt, dump(doc));
  return code;
}

int cmd_manipulate(const Options& opt) {
  const Market market = load_market(opt);
  if (opt.student < 1 || opt.student > market.students()) {
    throw InputError("--student must be between 1 and " +
                     std::to_string(market.students()));
  }
  const auto rep =
      search_manipulation(parse_mechanism(opt.mechanism), market, opt.student - 1);
  emit(opt, dump(report_json(rep, market)));
  return rep.relation == ManipulationRelation::kStrictGain ? kViolation : kOk;
}

int cmd_verify_wsp(const Options& opt) {
  const Market market = load_market(opt);
  const auto check = verify_weak_sp(parse_mechanism(opt.mechanism), market, opt.strong);
  Json doc;
  doc["holds"] = check.holds;
  if (check.counterexample) doc["counterexample"] = report_json(*check.counterexample, market);
  emit(opt, dump(doc));
  return check.holds ? kOk : kViolation;
}

int cmd_impossibility(const Options& opt) {
  const auto cert = impossibility_scenario(opt.grid);
  if (parse_format(opt.format) != Format::kJson) {
    emit(opt, render_certificate(cert));
    return kOk;
  }
  Json doc;
  doc["market"] = market_to_json(cert.market);
  doc["grid"] = cert.grid;
  Json family = Json::array();
  for (const auto& t : cert.family_t) family.push_back(t.str());
  doc["family_t"] = std::move(family);
  doc["r_prime"] = matrix_to_json(cert.r_prime, cert.market)["matrix"];
  doc["r_double_prime"] = matrix_to_json(cert.r_double_prime, cert.market)["matrix"];
  doc["forced_t_by_student1"] = cert.forced_t_by_student1.str();
  doc["forced_t_by_student2"] = cert.forced_t_by_student2.str();
  doc["contradiction"] = cert.contradiction;
  doc["notes"] = cert.notes;
  emit(opt, dump(doc));
  return kOk;
}

int cmd_gen(const Options& opt) {
  GeneratorConfig cfg;
  cfg.n = opt.n;
  cfg.k = opt.k;
  cfg.seed = opt.seed;
  cfg.quota = parse_quota_style(opt.quota_style);
  cfg.denominator = opt.denominator;
  cfg.preferences = parse_preference_style(opt.preference_style);
  cfg.weights = opt.weights;
  cfg.max_upper = opt.max_upper;
  emit(opt, dump(market_to_json(generate_market(cfg))));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  int (*command)(const Options&) = nullptr;

  CLI::App app{"Random assignment under lower and upper quotas"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--input", opt.input, "market JSON file");
  app.add_option("--output", opt.output, "write the result here instead of stdout");
  app.add_option("--format", opt.format, "table, json or csv");
  app.add_option("--seed", opt.seed, "random seed");

  auto on = [&](CLI::App* sub, int (*fn)(const Options&)) {
    sub->callback([&command, fn] { command = fn; });
  };

  auto* run = app.add_subcommand("run", "run a mechanism");
  run->require_subcommand(1);
  auto* priolq = run->add_subcommand("priolq", "deterministic priority mechanism");
  priolq->add_option("--order", opt.order, "service order, e.g. 3,4,1,2");
  on(priolq, cmd_priolq);
  auto* rplq = run->add_subcommand("rplq", "uniform lottery over priority orders");
  rplq->add_flag("--exact", opt.exact, "enumerate all n! orders (default)");
  rplq->add_option("--samples", opt.samples, "Monte Carlo sample count");
  on(rplq, cmd_rplq);
  auto* pslq = run->add_subcommand("pslq", "eating mechanism");
  pslq->add_flag("--trace", opt.trace, "print the phase trace");
  on(pslq, cmd_pslq);
  auto* multi = run->add_subcommand("multiunit", "q units per student via cloning");
  multi->add_option("--q", opt.q, "units per student")->check(CLI::PositiveNumber);
  multi->add_option("--mechanism", opt.mechanism, "pslq or rplq");
  multi->add_option("--samples", opt.samples, "Monte Carlo samples when needed");
  on(multi, cmd_multiunit);

  auto* check = app.add_subcommand("check", "check axioms of an assignment");
  check->add_option("--assignment", opt.assignment, "assignment JSON file");
  check->add_option("--axioms", opt.axioms, "feasible,ef,wef,oe,ml,pareto");
  check->add_option("--master-list", opt.master_list, "order for ml, e.g. 2,1,3");
  on(check, cmd_check);

  auto* dec = app.add_subcommand("decompose", "lottery over deterministic assignments");
  dec->add_option("--assignment", opt.assignment, "assignment JSON file");
  dec->add_flag("--verify", opt.verify, "re-multiply and compare");
  on(dec, cmd_decompose);

  auto* man = app.add_subcommand("manipulate", "search one student's misreports");
  man->add_option("--mechanism", opt.mechanism, "pslq or rplq");
  man->add_option("--student", opt.student, "1-based student")->required();
  on(man, cmd_manipulate);

  auto* wsp = app.add_subcommand("verify-wsp", "weak strategy-proofness check");
  wsp->add_option("--mechanism", opt.mechanism, "pslq or rplq");
  wsp->add_flag("--strong", opt.strong, "also require truth to dominate every report");
  on(wsp, cmd_verify_wsp);

  auto* imp = app.add_subcommand("impossibility", "fractional-quota impossibility certificate");
  imp->add_option("--grid", opt.grid, "grid denominator (multiple of 3)");
  on(imp, cmd_impossibility);

  auto* gen = app.add_subcommand("gen", "generate a random market");
  gen->add_option("--n", opt.n, "students");
  gen->add_option("--k", opt.k, "projects");
  gen->add_option("--quota-style", opt.quota_style,
                  "none, integer-tight, integer-loose or fractional");
  gen->add_option("--denominator", opt.denominator, "fractional quota denominator");
  gen->add_option("--preference-style", opt.preference_style, "uniform or correlated");
  gen->add_option("--weights", opt.weights, "correlated weights, one per project")
      ->delimiter(',');
  gen->add_option("--max-upper", opt.max_upper, "cap on finite upper quotas");
  on(gen, cmd_gen);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }
  try {
    return command(opt);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
