// Times the OpenMP sweep kernel against the serial reference and checks
// that both produce identical reports.

#include <chrono>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "fibcalc/sweep.hpp"

using namespace fibcalc;

namespace {

template <typename F>
double time_ms(F&& body, int repeat) {
  const auto start = std::chrono::steady_clock::now();
  for (int i = 0; i < repeat; ++i) body();
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count() /
         repeat;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"serial vs parallel sweep benchmark"};
  std::int64_t lo = -40, hi = 40;
  std::string instance = "fibonacci";
  std::string identity = "pascal";
  int repeat = 3;
  app.add_option("--lo", lo);
  app.add_option("--hi", hi);
  app.add_option("--instance", instance)
      ->check(CLI::IsMember({"fibonacci", "classic"}));
  app.add_option("--identity", identity)
      ->check(CLI::IsMember({"symmetry", "pascal", "product", "case-formula"}));
  app.add_option("--repeat", repeat);
  CLI11_PARSE(app, argc, argv);

  const auto inst = instance == "classic" ? PsiInstance::classic()
                                          : PsiInstance::fibonacci();
  const auto id = parse_identity(identity);

  SweepReport serial_report, parallel_report;
  // warm-up pass fills the bracket caches so both runs start from the
  // same fully-populated state
  run_sweep(inst, lo, hi, id);

  const double serial_ms = time_ms(
      [&] { serial_report = run_sweep_serial(inst, lo, hi, id); }, repeat);
  const double parallel_ms =
      time_ms([&] { parallel_report = run_sweep(inst, lo, hi, id); }, repeat);

  if (!(serial_report == parallel_report)) {
    std::cerr << "MISMATCH: parallel sweep differs from the reference\n";
    return 1;
  }

  std::cout << "identity=" << identity << " instance=" << instance
            << " window=[" << lo << "," << hi << "]"
            << " violations=" << serial_report.violations.size() << "\n";
  std::cout << "serial:   " << serial_ms << " ms\n";
  std::cout << "parallel: " << parallel_ms << " ms\n";
  std::cout << "speedup:  " << serial_ms / parallel_ms << "x\n";
  return 0;
}
