// Serial reference search versus the OpenMP-parallel trial runner on the
// certification checks of the reference model zoo.

#include "riskprop/certify.hpp"

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>

namespace {

double seconds(const std::function<riskprop::CertificateReport()>& run, riskprop::CertificateReport& out) {
  const auto start = std::chrono::steady_clock::now();
  out = run();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  using namespace riskprop;
  SearchBudget budget;
  budget.max_n = 5;
  budget.exhaustive_n = 5;
  budget.trials = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 200;
  const int threads = argc > 2 ? std::atoi(argv[2]) : omp_get_max_threads();

  std::printf("trials=%zu threads=%d\n", budget.trials, threads);
  std::printf("%-28s %-22s %10s %10s %8s %s\n", "model", "property", "serial_s", "parallel_s", "speedup", "agree");
  bool all_agree = true;
  for (const auto& m : zoo::all()) {
    for (auto kind : {Propensity::Full, Propensity::Proportional, Propensity::Hedging}) {
      CertificateReport serial, parallel;
      const double ts = seconds([&] { return check_propensity(kind, m, budget, Execution::serial()); }, serial);
      const double tp = seconds([&] { return check_propensity(kind, m, budget, Execution{true, threads}); }, parallel);
      const bool agree = serial.verdict == parallel.verdict && serial.trials_run == parallel.trials_run;
      all_agree = all_agree && agree;
      std::printf("%-28s %-22s %10.4f %10.4f %8.2f %s\n", m.name().c_str(), serial.property.c_str(), ts, tp,
                  tp > 0 ? ts / tp : 0.0, agree ? "yes" : "NO");
    }
  }
  return all_agree ? 0 : 1;
}
