#pragma once

#include "gwdn/coefpoly.hpp"
#include "gwdn/frobenius.hpp"
#include "gwdn/gwsymbol.hpp"
#include "gwdn/opmatrix.hpp"
#include "gwdn/series.hpp"

#include <array>
#include <map>
#include <optional>
#include <random>
#include <shared_mutex>
#include <utility>
#include <vector>

namespace gwdn {

/// coef * factor_1 * ... * factor_k; an empty factor list is the constant coef.
struct GWTerm {
  CoefPoly coef;
  std::vector<GWSymbol> factors;
};
using GWExpr = std::vector<GWTerm>;

/// Memo table canonical symbol -> reduced value. Safe for concurrent use; the first
/// writer wins, later writers must agree.
class ReduceCache {
 public:
  std::optional<CoefPoly> find(const GWSymbol& s) const;
  void insert(const GWSymbol& s, const CoefPoly& value);
  std::size_t size() const;
  void clear();

 private:
  mutable std::shared_mutex mutex_;
  std::map<GWSymbol, CoefPoly> table_;
};

/// (degree, sum d, max(0, 3 - n), n, sum_{k<l} e_k e_l), compared lexicographically.
using Measure = std::array<long, 5>;
Measure termination_measure(const GWSymbol& s);

/// Multinomial (sum d)! / prod d! when sum d = n - 3, else 0. Throws DegreeNonzero.
Rational gw2_normalize(const GWSymbol& s);

/// Divisor axiom solved for s (n < 3, degree > 0). Throws PreconditionFailed.
GWExpr gw4_lift(const GWSymbol& s);

/// Topological recursion. Options enumerate (form, k, l); `choice` picks one.
std::size_t gw5_choice_count(const GWSymbol& s);
GWExpr gw5_strip(const GWSymbol& s, std::size_t choice = 0);

/// WDVV shuffle on a prime symbol; `choice` picks the head pair (e1 <= e2, e1 >= 2).
std::size_t gw6_choice_count(const GWSymbol& s);
GWExpr gw6_shuffle(const GWSymbol& s, std::size_t choice = 0);

/// Rewriting engine. With an RNG, choice points for GW5 and GW6 are randomized.
class Reducer {
 public:
  explicit Reducer(ReduceCache& cache, std::mt19937_64* rng = nullptr) : cache_(cache), rng_(rng) {}
  CoefPoly operator()(const GWSymbol& s) { return reduce_checked(s, nullptr); }

 private:
  CoefPoly reduce_checked(const GWSymbol& s, const Measure* parent);
  CoefPoly compute(const GWSymbol& s);
  CoefPoly evaluate(const GWExpr& e, const Measure& parent);
  std::size_t pick(std::size_t count);

  ReduceCache& cache_;
  std::mt19937_64* rng_;
};

CoefPoly reduce(const GWSymbol& s, ReduceCache& cache);

/// Reduces every symbol; the OpenMP version shares the cache between threads.
std::vector<CoefPoly> reduce_batch(const std::vector<GWSymbol>& symbols, ReduceCache& cache);
std::vector<CoefPoly> reduce_batch_serial(const std::vector<GWSymbol>& symbols, ReduceCache& cache);

/// Number of symbols whose reduction under `trials` random strategies differs from the
/// default strategy. Each trial uses a fresh cache.
std::size_t confluence_mismatches(const std::vector<GWSymbol>& symbols, int trials,
                                  std::uint64_t seed);

/// (I, I~): I has <tau_{d+j-2} H_j> at q^d h^j (d >= 1) and 1 at q^0 h^0.
std::pair<PerturbedSeries, PerturbedSeries> universal_I(int q_max, int h_max, ReduceCache& cache);
std::pair<PerturbedSeries, PerturbedSeries> universal_I_serial(int q_max, int h_max,
                                                               ReduceCache& cache);

/// Phi entries as coefficients of q^d t^k (the 1/k! already applied), d <= q_max, k <= n.
struct PhiMatrix {
  int n = 0;
  int q_max = 0;
  // entry[a][b][d][k]
  std::vector<std::vector<std::vector<std::vector<CoefPoly>>>> entry;
};

PhiMatrix phi_matrix(int n, int q_max, ReduceCache& cache);

struct FlatnessResult {
  bool ok = true;
  bool identity_constant = true;
  /// Row a, column b, q-order, t-power and the nonzero residual coefficient.
  std::optional<std::array<int, 4>> witness;
  CoefPoly residual;
  explicit operator bool() const noexcept { return ok && identity_constant; }
};

/// Checks (q d/dq + d/dt) Phi = A Phi through q^q_max, A the geometric connection matrix
/// restricted to size n + 1 unless `connection` is given (entries c * q^k, no D).
FlatnessResult phi_flatness(int n, int q_max, ReduceCache& cache,
                            const OpMatrix* connection = nullptr);

}  // namespace gwdn
