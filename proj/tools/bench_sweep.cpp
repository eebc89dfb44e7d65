// Compares the serial case loop against the OpenMP worker pool on the
// two-generated corpus and checks that both produce the same summary.

#include <chrono>
#include <iostream>

#include "qsocle/fuzz.hpp"

int main(int argc, char** argv) {
  int jobs = 4;
  if (argc > 1) jobs = std::atoi(argv[1]);

  qsocle::FuzzPlan plan;
  plan.family = qsocle::FuzzPlan::Family::TwoGen;
  plan.a_min = 3;
  plan.a_max = 9;
  plan.b_max = 24;
  plan.seed = 1;

  auto timed = [&](int j) {
    plan.jobs = j;
    const auto t0 = std::chrono::steady_clock::now();
    const qsocle::FuzzSummary s = qsocle::run_fuzz(plan);
    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
    return std::make_pair(s, ms);
  };

  const auto [serial, t_serial] = timed(1);
  const auto [parallel, t_parallel] = timed(jobs);

  std::cout << "cases: " << serial.cases_run << "\n";
  std::cout << "serial:   " << t_serial << " ms\n";
  std::cout << "parallel: " << t_parallel << " ms  (" << jobs << " jobs, speedup "
            << t_serial / t_parallel << "x)\n";

  if (qsocle::summary_to_json(serial) != qsocle::summary_to_json(parallel)) {
    std::cerr << "summaries differ between serial and parallel runs\n";
    return 1;
  }
  std::cout << "summaries identical\n";
  return serial.failures == 0 ? 0 : 2;
}
