#include "gwdn/gwring.hpp"

#include <exception>
#include <mutex>

namespace gwdn {

namespace {

/// Runs body(i) for i < count on an OpenMP team; the first exception is rethrown.
template <typename F>
void parallel_for(std::size_t count, F&& body) {
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto n = static_cast<long>(count);
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

std::vector<CoefPoly> reduce_batch_serial(const std::vector<GWSymbol>& symbols, ReduceCache& cache) {
  std::vector<CoefPoly> out;
  out.reserve(symbols.size());
  Reducer r(cache);
  for (const auto& s : symbols) out.push_back(r(s));
  return out;
}

std::vector<CoefPoly> reduce_batch(const std::vector<GWSymbol>& symbols, ReduceCache& cache) {
  std::vector<CoefPoly> out(symbols.size());
  parallel_for(symbols.size(), [&](std::size_t i) { out[i] = Reducer(cache)(symbols[i]); });
  return out;
}

std::size_t confluence_mismatches(const std::vector<GWSymbol>& symbols, int trials,
                                  std::uint64_t seed) {
  ReduceCache reference_cache;
  const auto reference = reduce_batch(symbols, reference_cache);
  std::vector<char> mismatch(symbols.size(), 0);
  parallel_for(symbols.size(), [&](std::size_t i) {
    std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ULL * (i + 1));
    for (int t = 0; t < trials && !mismatch[i]; ++t) {
      ReduceCache fresh;
      if (!(Reducer(fresh, &rng)(symbols[i]) == reference[i])) mismatch[i] = 1;
    }
  });
  std::size_t count = 0;
  for (char m : mismatch) count += static_cast<std::size_t>(m);
  return count;
}

}  // namespace gwdn
