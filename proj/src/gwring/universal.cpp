#include "gwdn/dnbuild.hpp"
#include "gwdn/errors.hpp"
#include "gwdn/gwring.hpp"

namespace gwdn {

namespace {

GWSymbol one_pointed(int d, int j) { return GWSymbol({}, {d + j - 2, j}); }

template <typename Batch>
std::pair<PerturbedSeries, PerturbedSeries> assemble_I(int q_max, int h_max, ReduceCache& cache,
                                                       Batch&& batch) {
  if (q_max < 1 || h_max < 1) throw PreconditionFailed("universal_I needs q_max, h_max >= 1");
  std::vector<GWSymbol> symbols;
  std::vector<std::pair<int, int>> where;
  for (int d = 1; d <= q_max; ++d)
    for (int j = 0; j < h_max; ++j)
      if (d + j - 2 >= 0) {
        symbols.push_back(one_pointed(d, j));
        where.emplace_back(j, d);
      }
  const auto values = batch(symbols, cache);
  PerturbedSeries I(h_max, q_max);
  I.at(0, 0) = CoefPoly(1);
  for (std::size_t k = 0; k < values.size(); ++k) I.at(where[k].first, where[k].second) = values[k];
  return {I, regularize_series(I)};
}

}  // namespace

std::pair<PerturbedSeries, PerturbedSeries> universal_I(int q_max, int h_max, ReduceCache& cache) {
  return assemble_I(q_max, h_max, cache,
                    [](const auto& s, ReduceCache& c) { return reduce_batch(s, c); });
}

std::pair<PerturbedSeries, PerturbedSeries> universal_I_serial(int q_max, int h_max,
                                                               ReduceCache& cache) {
  return assemble_I(q_max, h_max, cache,
                    [](const auto& s, ReduceCache& c) { return reduce_batch_serial(s, c); });
}

PhiMatrix phi_matrix(int n, int q_max, ReduceCache& cache) {
  if (n < 1 || q_max < 0) throw PreconditionFailed("phi_matrix needs N >= 1 and q_max >= 0");
  PhiMatrix phi;
  phi.n = n;
  phi.q_max = q_max;
  const auto size = static_cast<std::size_t>(n) + 1;
  phi.entry.assign(size, std::vector(size, std::vector(static_cast<std::size_t>(q_max) + 1,
                                                       std::vector<CoefPoly>(size))));
  // <tau_{d+a-b-k-1} H^{b+k}, H_a> for d >= 1; degree 0 gives <H^0, H^{b+k}, H_a> = [a = b+k].
  std::vector<GWSymbol> symbols;
  std::vector<std::array<int, 4>> where;
  for (int a = 0; a <= n; ++a)
    for (int b = 0; b <= n; ++b)
      for (int k = 0; b + k <= n; ++k) {
        if (a == b + k) phi.entry[a][b][0][k] = CoefPoly(Rational(1) / Rational::factorial(k));
        for (int d = 1; d <= q_max; ++d) {
          const int x = d + a - b - k - 1;
          if (x < 0) continue;
          symbols.push_back(GWSymbol({{x, b + k}}, {0, a}));
          where.push_back({a, b, d, k});
        }
      }
  const auto values = reduce_batch(symbols, cache);
  for (std::size_t i = 0; i < values.size(); ++i) {
    const auto [a, b, d, k] = where[i];
    phi.entry[a][b][d][k] =
        restrict_r_N(values[i], n, true) * (Rational(1) / Rational::factorial(k));
  }
  return phi;
}

FlatnessResult phi_flatness(int n, int q_max, ReduceCache& cache, const OpMatrix* connection) {
  const PhiMatrix phi = phi_matrix(n, q_max, cache);
  const OpMatrix a_matrix =
      connection != nullptr ? *connection : connection_matrix(DNConfig{n, false, false});
  const auto size = static_cast<std::size_t>(n) + 1;
  if (a_matrix.size() != size) throw PreconditionFailed("connection matrix has the wrong size");

  FlatnessResult result;
  for (std::size_t a = 0; a < size; ++a)
    for (std::size_t b = 0; b < size; ++b)
      if (!(phi.entry[a][b][0][0] == CoefPoly(a == b ? 1 : 0))) result.identity_constant = false;

  auto phi_at = [&](std::size_t a, std::size_t b, int d, int k) -> CoefPoly {
    if (d < 0 || k < 0 || k > n) return {};
    return phi.entry[a][b][static_cast<std::size_t>(d)][static_cast<std::size_t>(k)];
  };
  for (std::size_t a = 0; a < size && result.ok; ++a)
    for (std::size_t b = 0; b < size && result.ok; ++b)
      for (int d = 0; d <= q_max && result.ok; ++d)
        for (int k = 0; k <= n && result.ok; ++k) {
          CoefPoly r = CoefPoly(Rational(d)) * phi_at(a, b, d, k) +
                       CoefPoly(Rational(k + 1)) * phi_at(a, b, d, k + 1);
          for (std::size_t c = 0; c < size; ++c)
            for (const auto& [p, slice] : a_matrix(a, c).terms()) {
              if (slice.degree() > 0)
                throw PreconditionFailed("connection matrix entries must not contain D");
              r -= slice.coeff(0) * phi_at(c, b, d - p, k);
            }
          if (!r.is_zero()) {
            result.ok = false;
            result.witness = std::array<int, 4>{static_cast<int>(a), static_cast<int>(b), d, k};
            result.residual = r;
          }
        }
  return result;
}

}  // namespace gwdn
