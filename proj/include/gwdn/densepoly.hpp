#pragma once

#include "gwdn/coefpoly.hpp"

#include <utility>
#include <vector>

namespace gwdn {

/// Univariate polynomial in an abstract variable X (standing for D, or for m + eps)
/// with CoefPoly coefficients. Index k holds the coefficient of X^k; trailing zeros trimmed.
class DensePoly {
 public:
  DensePoly() = default;
  explicit DensePoly(std::vector<CoefPoly> coeffs);
  DensePoly(CoefPoly constant);  // NOLINT(google-explicit-constructor)

  static DensePoly x();
  static DensePoly x_plus(const Rational& c);

  const std::vector<CoefPoly>& coeffs() const noexcept { return c_; }
  bool is_zero() const noexcept { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  const CoefPoly& coeff(std::size_t k) const;
  /// Number of leading zero coefficients, i.e. the multiplicity of the root X = 0.
  int mult0() const noexcept;

  CoefPoly evaluate(const CoefPoly& at) const;
  DensePoly derivative() const;
  DensePoly truncated(std::size_t len) const;

  template <typename F>
  DensePoly map_coeffs(F&& f) const {
    std::vector<CoefPoly> out;
    out.reserve(c_.size());
    for (const auto& c : c_) out.push_back(f(c));
    return DensePoly(std::move(out));
  }

  DensePoly& operator+=(const DensePoly& o);
  DensePoly& operator-=(const DensePoly& o);
  friend DensePoly operator+(DensePoly a, const DensePoly& b) { return a += b; }
  friend DensePoly operator-(DensePoly a, const DensePoly& b) { return a -= b; }
  friend DensePoly operator-(const DensePoly& a);
  friend DensePoly operator*(const DensePoly& a, const DensePoly& b);
  friend DensePoly operator*(const CoefPoly& c, const DensePoly& a);
  friend bool operator==(const DensePoly&, const DensePoly&) = default;

 private:
  void trim();
  std::vector<CoefPoly> c_;
};

/// P(X + k), expanded binomially.
DensePoly shift_substitute(const DensePoly& p, const CoefPoly& k);

/// (X+1)(X+2)...(X+k); 1 for k = 0.
DensePoly falling_product(unsigned k);

/// Coefficients of e^{c q} up to q^q_max.
std::vector<CoefPoly> truncated_exp(const CoefPoly& c, int q_max);

/// a*b mod X^len.
DensePoly mul_truncated(const DensePoly& a, const DensePoly& b, std::size_t len);

/// Quotient and remainder of P by (X + c).
std::pair<DensePoly, CoefPoly> divide_by_linear(const DensePoly& p, const Rational& c);

}  // namespace gwdn
