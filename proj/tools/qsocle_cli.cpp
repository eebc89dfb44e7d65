#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qsocle/fuzz.hpp"
#include "qsocle/report.hpp"

namespace {

std::vector<int64_t> parse_gens(const std::string& csv) {
  std::vector<int64_t> gens;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) gens.push_back(std::stoll(tok));
  }
  return gens;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quasi-socle ideal analysis in numerical semigroup rings"};
  app.require_subcommand(1);

  std::string gens_csv;
  std::string format = "table";
  int64_t s = 0, s_max = 0, q = 2;
  int jobs = 1;

  auto* analyze_cmd = app.add_subcommand("analyze", "Analyze one (H, s, q) case");
  analyze_cmd->add_option("--gens", gens_csv, "Semigroup generators, e.g. 4,7,9")->required();
  analyze_cmd->add_option("--s", s, "Parameter exponent: Q = (t^s)")->required();
  analyze_cmd->add_option("--q", q, "Socle exponent (2 = the standard case)");
  analyze_cmd->add_option("--format", format, "json|table");

  auto* sweep_cmd = app.add_subcommand("sweep", "Analyze every s in H up to --s-max");
  sweep_cmd->add_option("--gens", gens_csv, "Semigroup generators")->required();
  sweep_cmd->add_option("--s-max", s_max, "Largest parameter exponent")->required();
  sweep_cmd->add_option("--q", q, "Socle exponent");
  sweep_cmd->add_option("--format", format, "json|table");
  sweep_cmd->add_option("--jobs", jobs, "Worker count");

  int64_t n_min = 3, n_max = 8;
  auto* ex43_cmd = app.add_subcommand("example43", "Run the r = 2n-2 family");
  ex43_cmd->add_option("--n-min", n_min, "Smallest n (>= 3)");
  ex43_cmd->add_option("--n-max", n_max, "Largest n");

  std::string family = "two-gen";
  std::string checks_csv = "all";
  std::string explicit_csv;
  std::string s_max_policy = "auto";
  qsocle::FuzzPlan plan;
  auto* fuzz_cmd = app.add_subcommand("fuzz", "Empirical theorem verification over a family");
  fuzz_cmd->add_option("--family", family, "two-gen|three-gen|explicit");
  fuzz_cmd->add_option("--a-min", plan.a_min, "Smallest multiplicity");
  fuzz_cmd->add_option("--a-max", plan.a_max, "Largest first generator");
  fuzz_cmd->add_option("--b-max", plan.b_max, "Largest other generator");
  fuzz_cmd->add_option("--s-max", s_max_policy,
                       "auto|N; auto = 2*conductor(H) (past the conductor the "
                       "cases repeat by translation)");
  fuzz_cmd->add_option("--seed", plan.seed, "RNG seed (determinism contract)");
  fuzz_cmd->add_option("--jobs", plan.jobs, "Worker count");
  fuzz_cmd->add_option("--count", plan.sample_count, "Samples for three-gen family");
  fuzz_cmd->add_option("--checks", checks_csv,
                       "Comma list: thm1.1,prop2.4,cor2.3,cor2.8,thm2.7,duality,"
                       "lemma2.1,claim2,v1,scaling,all");
  fuzz_cmd->add_option("--explicit", explicit_csv,
                       "Semicolon-separated generator lists, e.g. 2,3;4,7,9");

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze_cmd->parsed()) {
      const qsocle::CaseReport r = qsocle::analyze(parse_gens(gens_csv), s, q);
      if (format == "json")
        std::cout << qsocle::report_to_json(r) << "\n";
      else
        std::cout << qsocle::reports_to_table({r});
    } else if (sweep_cmd->parsed()) {
      const auto rs = qsocle::sweep(parse_gens(gens_csv), s_max, q, jobs);
      if (format == "json")
        std::cout << qsocle::reports_to_json(rs) << "\n";
      else
        std::cout << qsocle::reports_to_table(rs);
    } else if (ex43_cmd->parsed()) {
      std::vector<qsocle::Example43Record> recs;
      for (int64_t n = n_min; n <= n_max; ++n) recs.push_back(qsocle::run_example43(n));
      std::cout << qsocle::example43_to_json(recs) << "\n";
    } else if (fuzz_cmd->parsed()) {
      if (family == "two-gen")
        plan.family = qsocle::FuzzPlan::Family::TwoGen;
      else if (family == "three-gen")
        plan.family = qsocle::FuzzPlan::Family::ThreeGenSymmetric;
      else if (family == "explicit")
        plan.family = qsocle::FuzzPlan::Family::Explicit;
      else
        throw qsocle::Error("unknown family: " + family);
      if (s_max_policy != "auto") plan.s_max = std::stoll(s_max_policy);
      plan.checks = [&] {
        std::vector<std::string> cs;
        std::stringstream ss(checks_csv);
        std::string tok;
        while (std::getline(ss, tok, ',')) cs.push_back(tok);
        return cs;
      }();
      if (plan.family == qsocle::FuzzPlan::Family::Explicit) {
        std::stringstream ss(explicit_csv);
        std::string tok;
        while (std::getline(ss, tok, ';'))
          if (!tok.empty()) plan.explicit_gens.push_back(parse_gens(tok));
      }
      const qsocle::FuzzSummary sum = qsocle::run_fuzz(plan);
      std::cout << qsocle::summary_to_json(sum) << "\n";
      if (sum.failures > 0) return 2;
    }
  } catch (const qsocle::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
