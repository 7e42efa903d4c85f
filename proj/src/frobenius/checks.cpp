#include "gwdn/frobenius.hpp"

#include <map>

namespace gwdn {

namespace {

using TPoly = std::vector<CoefPoly>;  // coefficients of t^k

/// D acting on q^m * f(t): m f + df/dt.
TPoly apply_d(const TPoly& f, int m) {
  TPoly r(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) {
    r[k] = f[k] * Rational(m);
    if (k + 1 < f.size()) r[k] += f[k + 1] * Rational(static_cast<long>(k + 1));
  }
  return r;
}

/// P(D) applied to q^m f(t), Horner in D.
TPoly apply_slice(const DensePoly& p, const TPoly& f, int m) {
  TPoly acc(f.size());
  const auto& c = p.coeffs();
  for (std::size_t e = c.size(); e-- > 0;) {
    acc = apply_d(acc, m);
    if (c[e].is_zero()) continue;
    for (std::size_t k = 0; k < f.size(); ++k)
      if (!f[k].is_zero()) acc[k] += c[e] * f[k];
  }
  return acc;
}

bool earlier(const Residual& a, const Residual& b) {
  if (a.q != b.q) return a.q < b.q;
  if (a.index != b.index) return a.index < b.index;
  return a.log_power < b.log_power;
}

void record(CheckResult& res, Residual r) {
  if (!res.witness || earlier(r, *res.witness)) res.witness = std::move(r);
  res.ok = false;
}

}  // namespace

CheckResult check_perturbed(const QDOperator& p, const PerturbedSeries& series) {
  CheckResult res;
  const int qmax = series.q_max();
  for (int r = 0; r < series.h_max(); ++r) {
    // I_r as a q-series of t-polynomials of degree <= r
    std::vector<TPoly> ir(qmax + 1, TPoly(r + 1));
    for (int m = 0; m <= qmax; ++m)
      for (int i = 0; i <= r; ++i)
        ir[m][i] = series.at(r - i, m) * Rational::factorial(static_cast<unsigned>(i)).inverse();

    std::vector<TPoly> out(qmax + 1, TPoly(r + 1));
    for (const auto& [j, slice] : p.terms())
      for (int m = 0; m + j <= qmax; ++m) {
        const TPoly y = apply_slice(slice, ir[m], m);
        for (int k = 0; k <= r; ++k) out[m + j][k] += y[k];
      }
    for (int m = 0; m <= qmax; ++m)
      for (int k = 0; k <= r; ++k)
        if (!out[m][k].is_zero()) {
          record(res, Residual{m, r, k, out[m][k]});
          break;
        }
  }
  return res;
}

CheckResult appendix_relations_check(const QDOperator& p, const PerturbedSeries& series) {
  CheckResult res;
  const int qmax = series.q_max();
  const int hmax = series.h_max();
  // derivative[r][j] = r-th D-derivative of P_j
  std::vector<std::map<int, DensePoly>> derivative(hmax);
  for (const auto& [j, slice] : p.terms()) {
    DensePoly d = slice;
    for (int r = 0; r < hmax; ++r) {
      derivative[r][j] = d;
      d = d.derivative();
    }
  }
  for (int s = 0; s < hmax; ++s) {
    for (int m = 0; m <= qmax; ++m) {
      CoefPoly rel;
      for (int a = 0; a <= s; ++a) {
        const Rational w = Rational::factorial(static_cast<unsigned>(s - a)).inverse();
        for (const auto& [j, dp] : derivative[s - a]) {
          if (j > m) continue;
          const CoefPoly& coeff = series.at(a, m - j);
          if (coeff.is_zero() || dp.is_zero()) continue;
          rel += w * (dp.evaluate(CoefPoly(Rational(m - j))) * coeff);
        }
      }
      if (!rel.is_zero()) {
        record(res, Residual{m, s, 0, rel});
        break;
      }
    }
  }
  return res;
}

}  // namespace gwdn
