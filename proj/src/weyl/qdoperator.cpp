#include "gwdn/qdoperator.hpp"

#include "gwdn/errors.hpp"

namespace gwdn {

namespace {
const DensePoly kZeroPoly;
}

QDOperator::QDOperator(CoefPoly constant) { add_slice(0, DensePoly(std::move(constant))); }

QDOperator::QDOperator(int power, DensePoly p) {
  if (power < 0) throw PreconditionFailed("negative q power in operator");
  add_slice(power, p);
}

const DensePoly& QDOperator::slice(int power) const {
  auto it = terms_.find(power);
  return it == terms_.end() ? kZeroPoly : it->second;
}

int QDOperator::d_order() const noexcept {
  int d = -1;
  for (const auto& [i, p] : terms_) d = std::max(d, p.degree());
  return d;
}

bool QDOperator::is_weighted_homogeneous(int shift) const {
  for (const auto& [i, p] : terms_)
    for (const auto& c : p.coeffs())
      if (!c.is_weighted_homogeneous(i + shift)) return false;
  return true;
}

void QDOperator::add_slice(int power, const DensePoly& p) {
  if (p.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(power, p);
  if (!inserted) {
    it->second += p;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

QDOperator& QDOperator::operator+=(const QDOperator& o) {
  for (const auto& [i, p] : o.terms_) add_slice(i, p);
  return *this;
}

QDOperator& QDOperator::operator-=(const QDOperator& o) {
  for (const auto& [i, p] : o.terms_) add_slice(i, -p);
  return *this;
}

QDOperator operator-(const QDOperator& a) {
  QDOperator r;
  for (const auto& [i, p] : a.terms_) r.add_slice(i, -p);
  return r;
}

QDOperator operator*(const QDOperator& a, const QDOperator& b) {
  // (q^i P(D)) (q^j Q(D)) = q^{i+j} P(D+j) Q(D)
  QDOperator r;
  for (const auto& [i, p] : a.terms_)
    for (const auto& [j, qq] : b.terms_)
      r.add_slice(i + j, shift_substitute(p, CoefPoly(Rational(j))) * qq);
  return r;
}

QDOperator dq_power(int k) {
  if (k < 1) throw PreconditionFailed("dq_power: k must be >= 1");
  return QDOperator(k, falling_product(static_cast<unsigned>(k)));
}

QDOperator regularize(const QDOperator& p) {
  QDOperator r;
  for (const auto& [i, slice] : p.terms())
    r.add_slice(i, slice * falling_product(static_cast<unsigned>(i)));
  return r;
}

QDOperator left_divide_by_D(const QDOperator& p) {
  // D q^i Q(D) = q^i (D+i) Q(D)
  QDOperator r;
  for (const auto& [i, slice] : p.terms()) {
    auto [quotient, remainder] = divide_by_linear(slice, Rational(i));
    if (!remainder.is_zero()) throw NotLeftDivisible(i, remainder.str());
    r.add_slice(i, quotient);
  }
  return r;
}

}  // namespace gwdn
