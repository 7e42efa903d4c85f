#include "gwdn/densepoly.hpp"

#include "gwdn/errors.hpp"

#include <algorithm>

namespace gwdn {

namespace {
const CoefPoly kZero;
}

DensePoly::DensePoly(std::vector<CoefPoly> coeffs) : c_(std::move(coeffs)) { trim(); }

DensePoly::DensePoly(CoefPoly constant) {
  if (!constant.is_zero()) c_.push_back(std::move(constant));
}

DensePoly DensePoly::x() { return DensePoly(std::vector<CoefPoly>{CoefPoly(), CoefPoly(1)}); }

DensePoly DensePoly::x_plus(const Rational& c) {
  return DensePoly(std::vector<CoefPoly>{CoefPoly(c), CoefPoly(1)});
}

void DensePoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const CoefPoly& DensePoly::coeff(std::size_t k) const { return k < c_.size() ? c_[k] : kZero; }

int DensePoly::mult0() const noexcept {
  int k = 0;
  while (k < static_cast<int>(c_.size()) && c_[k].is_zero()) ++k;
  return k;
}

CoefPoly DensePoly::evaluate(const CoefPoly& at) const {
  CoefPoly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

DensePoly DensePoly::derivative() const {
  std::vector<CoefPoly> d;
  for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * Rational(static_cast<long>(k)));
  return DensePoly(std::move(d));
}

DensePoly DensePoly::truncated(std::size_t len) const {
  if (c_.size() <= len) return *this;
  return DensePoly(std::vector<CoefPoly>(c_.begin(), c_.begin() + static_cast<long>(len)));
}

DensePoly& DensePoly::operator+=(const DensePoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

DensePoly& DensePoly::operator-=(const DensePoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

DensePoly operator-(const DensePoly& a) {
  return a.map_coeffs([](const CoefPoly& c) { return -c; });
}

DensePoly operator*(const DensePoly& a, const DensePoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return mul_truncated(a, b, a.c_.size() + b.c_.size() - 1);
}

DensePoly operator*(const CoefPoly& c, const DensePoly& a) {
  return a.map_coeffs([&c](const CoefPoly& x) { return c * x; });
}

DensePoly mul_truncated(const DensePoly& a, const DensePoly& b, std::size_t len) {
  const auto& ac = a.coeffs();
  const auto& bc = b.coeffs();
  std::vector<CoefPoly> r(std::min(len, ac.empty() || bc.empty() ? 0 : ac.size() + bc.size() - 1));
  for (std::size_t i = 0; i < ac.size() && i < r.size(); ++i) {
    if (ac[i].is_zero()) continue;
    for (std::size_t j = 0; j < bc.size() && i + j < r.size(); ++j)
      if (!bc[j].is_zero()) r[i + j] += ac[i] * bc[j];
  }
  return DensePoly(std::move(r));
}

DensePoly shift_substitute(const DensePoly& p, const CoefPoly& k) {
  const auto& c = p.coeffs();
  if (c.empty()) return {};
  std::vector<CoefPoly> kpow{CoefPoly(1)};
  for (std::size_t e = 1; e < c.size(); ++e) kpow.push_back(kpow.back() * k);
  std::vector<CoefPoly> out(c.size());
  for (std::size_t n = 0; n < c.size(); ++n) {
    if (c[n].is_zero()) continue;
    for (std::size_t l = 0; l <= n; ++l) {
      const auto b = Rational::binomial(static_cast<unsigned>(n), static_cast<unsigned>(l));
      out[l] += b * (c[n] * kpow[n - l]);
    }
  }
  return DensePoly(std::move(out));
}

DensePoly falling_product(unsigned k) {
  DensePoly p(CoefPoly(1));
  for (unsigned s = 1; s <= k; ++s) p = p * DensePoly::x_plus(Rational(static_cast<long>(s)));
  return p;
}

std::vector<CoefPoly> truncated_exp(const CoefPoly& c, int q_max) {
  if (q_max < 0) throw PreconditionFailed("truncated_exp: q_max must be >= 0");
  std::vector<CoefPoly> out{CoefPoly(1)};
  for (int k = 1; k <= q_max; ++k) out.push_back(out.back() * c * Rational(1, k));
  return out;
}

std::pair<DensePoly, CoefPoly> divide_by_linear(const DensePoly& p, const Rational& c) {
  // Synthetic division by X - root with root = -c.
  const auto& a = p.coeffs();
  if (a.empty()) return {DensePoly{}, CoefPoly{}};
  const Rational root = -c;
  std::vector<CoefPoly> q(a.size() - 1);
  CoefPoly carry;
  for (std::size_t k = a.size(); k-- > 0;) {
    CoefPoly cur = a[k] + carry * root;
    if (k == 0) return {DensePoly(std::move(q)), cur};
    q[k - 1] = cur;
    carry = std::move(cur);
  }
  return {DensePoly(std::move(q)), CoefPoly{}};
}

}  // namespace gwdn
