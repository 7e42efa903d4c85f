#pragma once

#include "gwdn/qdoperator.hpp"
#include "gwdn/series.hpp"

#include <optional>
#include <vector>

namespace gwdn {

/// First nonzero residual found by a checker: q-order, relation index (r or s),
/// power of t = log q where relevant, and the offending coefficient.
struct Residual {
  int q = 0;
  int index = 0;
  int log_power = 0;
  CoefPoly value;
};

struct CheckResult {
  bool ok = true;
  std::optional<Residual> witness;
  explicit operator bool() const noexcept { return ok; }
};

/// Newton solution of P_eps with seed c_0 = 1, eps renamed h.
/// Throws PreconditionFailed if mult_0 P_0 < h_max, IndicialNotInvertible if P_0(m) is not
/// a nonzero rational for some 1 <= m <= q_max.
PerturbedSeries newton_solve(const QDOperator& p, int h_max, int q_max);

/// The analytic solution, i.e. newton_solve with h_max = 1.
PerturbedSeries analytic_solution(const QDOperator& p, int q_max);

/// P I_r = 0 for every r < h_max, with I_r = sum_{i<=r} I^{r-i} t^i / i! and D acting on
/// q^m t^k as m q^m t^k + k q^m t^{k-1}. Orders up to q_max are checked.
CheckResult check_perturbed(const QDOperator& p, const PerturbedSeries& series);

/// sum_{a<=s} P^{(s-a)}(I^a) / (s-a)! = 0 for every s < h_max (P^{(r)}: r-th D-derivative).
CheckResult appendix_relations_check(const QDOperator& p, const PerturbedSeries& series);

/// Multiplies the q^i slice by (h+1)...(h+i) in the truncated h-ring.
PerturbedSeries regularize_series(const PerturbedSeries& series);

/// S_0, ..., S_{h_max-1}.
std::vector<LogSolution> log_solutions(const PerturbedSeries& series);

/// e^{a_00 q} * I', I' obtained from the geometric-case series by a_ii -> a_ii - a_00.
PerturbedSeries general_case_shift(const PerturbedSeries& universal, int q_max);

}  // namespace gwdn
