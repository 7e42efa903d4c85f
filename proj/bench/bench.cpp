// Serial reference vs OpenMP batch reduction. Usage: gwdn_bench [q_max] [h_max] [symbols]
#include "gwdn/gwring.hpp"
#include "gwdn/suites.hpp"

#include <omp.h>

#include <chrono>
#include <cstdlib>
#include <iostream>

namespace {

template <typename F>
double seconds(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void report(const char* what, double serial, double parallel, bool equal) {
  std::cout << what << ": serial " << serial << "s, openmp " << parallel << "s, speedup "
            << (parallel > 0 ? serial / parallel : 0.0) << (equal ? "" : "  RESULTS DIFFER") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  const int q_max = argc > 1 ? std::atoi(argv[1]) : 6;
  const int h_max = argc > 2 ? std::atoi(argv[2]) : 4;
  const auto count = static_cast<std::size_t>(argc > 3 ? std::atoi(argv[3]) : 400);
  std::cout << "threads: " << omp_get_max_threads() << "\n";

  {
    gwdn::ReduceCache serial_cache, parallel_cache;
    std::pair<gwdn::PerturbedSeries, gwdn::PerturbedSeries> a, b;
    const double s = seconds([&] { a = gwdn::universal_I_serial(q_max, h_max, serial_cache); });
    const double p = seconds([&] { b = gwdn::universal_I(q_max, h_max, parallel_cache); });
    report("universal_I", s, p, a == b);
  }
  {
    const auto symbols = gwdn::random_symbols(count, 5);
    gwdn::ReduceCache serial_cache, parallel_cache;
    std::vector<gwdn::CoefPoly> a, b;
    const double s = seconds([&] { a = gwdn::reduce_batch_serial(symbols, serial_cache); });
    const double p = seconds([&] { b = gwdn::reduce_batch(symbols, parallel_cache); });
    report("reduce_batch", s, p, a == b);
  }
  return 0;
}
