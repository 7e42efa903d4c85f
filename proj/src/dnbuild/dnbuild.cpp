#include "gwdn/dnbuild.hpp"

#include "gwdn/errors.hpp"

#include <functional>

namespace gwdn {

namespace {

using VarImage = std::function<std::optional<CoefPoly>(CoefVar)>;

void check_config(const DNConfig& cfg) {
  if (cfg.n < 1) throw PreconditionFailed("DN configuration needs N >= 1");
}

CoefPoly coupling(const DNConfig& cfg, std::uint32_t i, std::uint32_t j) {
  if (i == 0 && j == 0 && !cfg.include_a00) return {};
  return CoefPoly::var(i, j);
}

template <typename Fn>
OpMatrix build_matrix(const DNConfig& cfg, Fn&& entry_power) {
  check_config(cfg);
  const std::size_t size = static_cast<std::size_t>(cfg.n) + 1;
  OpMatrix m(size);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) {
      if (i == j + 1) {
        m(i, j) = QDOperator(1);
      } else if (i <= j) {
        const auto c = coupling(cfg, static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
        if (!c.is_zero()) m(i, j) = QDOperator(c) * entry_power(static_cast<int>(j - i + 1));
      }
    }
  return m;
}

QDOperator finish(const DNConfig& cfg, QDOperator op) {
  return cfg.symmetrize ? symmetrize_dn(op, cfg.n) : op;
}

CoefPoly rewrite(const CoefPoly& x, const VarImage& f) { return x.substitute(f); }
QDOperator rewrite(const QDOperator& x, const VarImage& f) {
  return x.map_coeffs([&](const CoefPoly& c) { return c.substitute(f); });
}
PerturbedSeries rewrite(const PerturbedSeries& x, const VarImage& f) {
  return x.map_coeffs([&](const CoefPoly& c) { return c.substitute(f); });
}

VarImage restriction(int n_target, bool geometric) {
  return [=](CoefVar v) -> std::optional<CoefPoly> {
    const auto limit = static_cast<std::uint32_t>(n_target);
    if (v.i > limit || v.j > limit) return CoefPoly();
    if (geometric && v.i == 0 && v.j == 0) return CoefPoly();
    return std::nullopt;
  };
}

VarImage specialization(const Specialization& s) {
  return [&s](CoefVar v) -> std::optional<CoefPoly> {
    auto it = s.assignment.find(v);
    if (it == s.assignment.end()) return std::nullopt;
    return CoefPoly(it->second);
  };
}

VarImage symmetrization(int n) {
  return [n](CoefVar v) -> std::optional<CoefPoly> {
    const int mi = n - static_cast<int>(v.j), mj = n - static_cast<int>(v.i);
    if (mi < 0 || mj < 0) return std::nullopt;
    const CoefVar mirror{static_cast<std::uint32_t>(mi), static_cast<std::uint32_t>(mj)};
    if (mirror < v) return CoefPoly::var(mirror.i, mirror.j);
    return std::nullopt;
  };
}

}  // namespace

OpMatrix connection_matrix(const DNConfig& cfg) {
  return build_matrix(cfg, [](int k) { return QDOperator::q(k); });
}

OpMatrix dq_matrix(const DNConfig& cfg) { return build_matrix(cfg, dq_power); }

QDOperator quantum_operator(const DNConfig& cfg) {
  return finish(cfg, right_determinant(connection_matrix(cfg).d_minus()));
}

QDOperator dn_operator(const DNConfig& cfg) {
  return finish(cfg, left_divide_by_D(right_determinant(dq_matrix(cfg).d_minus())));
}

QDOperator dn_operator_via_regularization(const DNConfig& cfg) {
  DNConfig raw = cfg;
  raw.symmetrize = false;
  return finish(cfg, left_divide_by_D(regularize(quantum_operator(raw))));
}

CoefPoly restrict_r_N(const CoefPoly& x, int n, bool g) { return rewrite(x, restriction(n, g)); }
QDOperator restrict_r_N(const QDOperator& x, int n, bool g) { return rewrite(x, restriction(n, g)); }
PerturbedSeries restrict_r_N(const PerturbedSeries& x, int n, bool g) {
  return rewrite(x, restriction(n, g));
}

CoefPoly specialize(const CoefPoly& x, const Specialization& s) { return rewrite(x, specialization(s)); }
QDOperator specialize(const QDOperator& x, const Specialization& s) {
  return rewrite(x, specialization(s));
}
PerturbedSeries specialize(const PerturbedSeries& x, const Specialization& s) {
  return rewrite(x, specialization(s));
}

CoefPoly symmetrize_dn(const CoefPoly& x, int n) { return rewrite(x, symmetrization(n)); }
QDOperator symmetrize_dn(const QDOperator& x, int n) { return rewrite(x, symmetrization(n)); }
PerturbedSeries symmetrize_dn(const PerturbedSeries& x, int n) {
  return rewrite(x, symmetrization(n));
}

Specialization projective_space(int n) {
  if (n < 1) throw PreconditionFailed("projective space preset needs N >= 1");
  Specialization s;
  const auto un = static_cast<std::uint32_t>(n);
  for (std::uint32_t i = 0; i <= un; ++i)
    for (std::uint32_t j = i; j <= un; ++j) s.assignment[CoefVar{i, j}] = Rational(0);
  s.assignment[CoefVar{0, un}] = Rational(n + 1).pow(static_cast<unsigned>(n + 1));
  return s;
}

}  // namespace gwdn
