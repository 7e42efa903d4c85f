#pragma once

#include "gwdn/densepoly.hpp"

#include <map>

namespace gwdn {

/// Element of the ring generated by q and D = q d/dq over the a_ij, with D q = q (D + 1).
/// Stored in normal form sum_i q^i P_i(D), no zero slices.
class QDOperator {
 public:
  using TermMap = std::map<int, DensePoly>;

  QDOperator() = default;
  QDOperator(CoefPoly constant);  // NOLINT(google-explicit-constructor)
  QDOperator(long constant) : QDOperator(CoefPoly(constant)) {}  // NOLINT
  /// q^power * p(D).
  QDOperator(int power, DensePoly p);

  static QDOperator D() { return QDOperator(0, DensePoly::x()); }
  static QDOperator q(int power = 1) { return QDOperator(power, DensePoly(CoefPoly(1))); }

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// P_i(D); zero if absent.
  const DensePoly& slice(int power) const;
  int q_degree() const noexcept { return terms_.empty() ? -1 : terms_.rbegin()->first; }
  int d_order() const noexcept;

  /// Each q^m slice has coefficients of weighted degree m + shift.
  bool is_weighted_homogeneous(int shift = 0) const;

  template <typename F>
  QDOperator map_coeffs(F&& f) const {
    QDOperator r;
    for (const auto& [i, p] : terms_) r.add_slice(i, p.map_coeffs(f));
    return r;
  }

  QDOperator& operator+=(const QDOperator& o);
  QDOperator& operator-=(const QDOperator& o);
  friend QDOperator operator+(QDOperator a, const QDOperator& b) { return a += b; }
  friend QDOperator operator-(QDOperator a, const QDOperator& b) { return a -= b; }
  friend QDOperator operator-(const QDOperator& a);
  friend QDOperator operator*(const QDOperator& a, const QDOperator& b);
  friend bool operator==(const QDOperator&, const QDOperator&) = default;

  void add_slice(int power, const DensePoly& p);

 private:
  TermMap terms_;
};

inline QDOperator qd_multiply(const QDOperator& a, const QDOperator& b) { return a * b; }

/// (D q)^k = q^k (D+1)...(D+k).
QDOperator dq_power(int k);

/// q^i P_i(D) -> q^i P_i(D) (D+1)...(D+i).
QDOperator regularize(const QDOperator& p);

/// L with D L = p. Throws NotLeftDivisible when some slice has R_i(-i) != 0.
QDOperator left_divide_by_D(const QDOperator& p);

}  // namespace gwdn
