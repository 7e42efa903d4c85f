#include "gwdn/errors.hpp"
#include "gwdn/frobenius.hpp"

#include <string>

namespace gwdn {

namespace {

/// Inverse of u in CoefPoly[eps]/(eps^len); nullopt unless u(0) is a nonzero rational.
std::optional<DensePoly> inverse_truncated(const DensePoly& u, std::size_t len) {
  const CoefPoly& u0 = u.coeff(0);
  if (u0.is_zero() || !u0.is_constant()) return std::nullopt;
  const Rational inv0 = u0.constant_term().inverse();
  // u = u0 (1 + w), 1/u = u0^{-1} sum (-w)^k
  const DensePoly w = (CoefPoly(inv0) * u - DensePoly(CoefPoly(1))).truncated(len);
  DensePoly term(CoefPoly(1)), acc(CoefPoly(1));
  for (std::size_t k = 1; k < len; ++k) {
    term = mul_truncated(term, -w, len);
    if (term.is_zero()) break;
    acc += term;
  }
  return CoefPoly(inv0) * acc;
}

}  // namespace

PerturbedSeries newton_solve(const QDOperator& p, int h_max, int q_max) {
  const std::size_t len = static_cast<std::size_t>(h_max);
  const DensePoly& p0 = p.slice(0);
  if (p0.is_zero())
    throw PreconditionFailed("newton_solve: operator has no q^0 part");
  if (p0.mult0() < h_max)
    throw PreconditionFailed("newton_solve: mult_0 P_0 = " + std::to_string(p0.mult0()) +
                             " < h_max = " + std::to_string(h_max));

  PerturbedSeries out(h_max, q_max);
  std::vector<DensePoly> c{DensePoly(CoefPoly(1))};
  for (int m = 1; m <= q_max; ++m) {
    DensePoly rhs;
    for (const auto& [i, slice] : p.terms()) {
      if (i == 0 || i > m || c[m - i].is_zero()) continue;
      const DensePoly at = shift_substitute(slice, CoefPoly(Rational(m - i))).truncated(len);
      rhs += mul_truncated(c[m - i], at, len);
    }
    const auto inv = inverse_truncated(shift_substitute(p0, CoefPoly(Rational(m))).truncated(len), len);
    if (!inv) throw IndicialNotInvertible(m);
    c.push_back(-mul_truncated(rhs, *inv, len));
  }
  for (int m = 0; m <= q_max; ++m) out.set_q_slice(m, c[m]);
  return out;
}

PerturbedSeries analytic_solution(const QDOperator& p, int q_max) { return newton_solve(p, 1, q_max); }

PerturbedSeries regularize_series(const PerturbedSeries& series) {
  PerturbedSeries out(series.h_max(), series.q_max());
  const std::size_t len = static_cast<std::size_t>(series.h_max());
  for (int m = 0; m <= series.q_max(); ++m)
    out.set_q_slice(m, mul_truncated(series.q_slice(m), falling_product(static_cast<unsigned>(m)), len));
  return out;
}

std::vector<LogSolution> log_solutions(const PerturbedSeries& series) {
  std::vector<LogSolution> out;
  for (int k = 0; k < series.h_max(); ++k) {
    LogSolution s;
    s.k = k;
    for (int i = 0; i <= k; ++i) {
      auto comp = series.h_component(k - i);
      const Rational f = Rational::factorial(static_cast<unsigned>(i)).inverse();
      for (auto& c : comp) c *= f;
      s.components.push_back(std::move(comp));
    }
    out.push_back(std::move(s));
  }
  return out;
}

PerturbedSeries general_case_shift(const PerturbedSeries& universal, int q_max) {
  const CoefPoly a00 = CoefPoly::var(0, 0);
  const auto shifted = universal.map_coeffs([&](const CoefPoly& c) {
    return c.substitute([&](CoefVar v) -> std::optional<CoefPoly> {
      if (v.i == v.j && v.i > 0) return CoefPoly::var(v.i, v.j) - a00;
      return std::nullopt;
    });
  });
  const int qm = std::min(q_max, universal.q_max());
  const auto ex = truncated_exp(a00, qm);
  PerturbedSeries out(universal.h_max(), qm);
  for (int m = 0; m <= qm; ++m)
    for (int i = 0; i < universal.h_max(); ++i) {
      CoefPoly acc;
      for (int k = 0; k <= m; ++k) acc += ex[k] * shifted.at(i, m - k);
      out.at(i, m) = std::move(acc);
    }
  return out;
}

}  // namespace gwdn
