#pragma once

#include "gwdn/rational.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace gwdn {

/// The coupling a_ij. Weight j - i + 1; a_00 (weight 1) only appears in operator contexts.
struct CoefVar {
  std::uint32_t i = 0;
  std::uint32_t j = 0;

  int weight() const noexcept { return static_cast<int>(j) - static_cast<int>(i) + 1; }
  std::string name() const;

  friend auto operator<=>(const CoefVar&, const CoefVar&) = default;
};

/// Power product of a_ij, factors sorted by variable, exponents positive.
class Monomial {
 public:
  using Factor = std::pair<CoefVar, std::uint32_t>;

  Monomial() = default;
  explicit Monomial(CoefVar v, std::uint32_t e = 1);

  const std::vector<Factor>& factors() const noexcept { return factors_; }
  bool is_one() const noexcept { return factors_.empty(); }
  std::uint32_t degree() const noexcept;
  int weighted_degree() const noexcept;
  std::uint32_t exponent(CoefVar v) const noexcept;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Factor> factors_;
};

/// Graded lexicographic order: higher total degree first, then lexicographic with
/// a_0_0 > a_0_1 > ... > a_1_1 > ... Used as the canonical listing order.
struct TermOrder {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept;
};

/// Sparse polynomial over Q in the a_ij. Canonical: no zero coefficients, terms in TermOrder.
class CoefPoly {
 public:
  using TermMap = std::map<Monomial, Rational, TermOrder>;

  CoefPoly() = default;
  CoefPoly(Rational c);  // NOLINT(google-explicit-constructor)
  CoefPoly(long c) : CoefPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  /// a_ij with the index folding a_{j+1,j} = 1 and a_ij = 0 for i > j + 1.
  static CoefPoly var(std::uint32_t i, std::uint32_t j);
  static CoefPoly monomial(Rational c, Monomial m);

  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  /// Constant term (coefficient of the empty monomial).
  Rational constant_term() const;
  std::set<CoefVar> variables() const;

  /// Every monomial has weighted degree w (the zero polynomial qualifies for any w).
  bool is_weighted_homogeneous(int w) const;

  /// Replace each variable by the polynomial returned by `image`, or keep it when nullopt.
  CoefPoly substitute(const std::function<std::optional<CoefPoly>(CoefVar)>& image) const;

  CoefPoly pow(unsigned e) const;

  /// Canonical text, e.g. "7/6*a_0_0*a_0_1 + a_0_0^3 - 2".
  std::string str() const;

  CoefPoly& operator+=(const CoefPoly& o);
  CoefPoly& operator-=(const CoefPoly& o);
  CoefPoly& operator*=(const CoefPoly& o);
  CoefPoly& operator*=(const Rational& c);

  friend CoefPoly operator+(CoefPoly a, const CoefPoly& b) { return a += b; }
  friend CoefPoly operator-(CoefPoly a, const CoefPoly& b) { return a -= b; }
  friend CoefPoly operator*(const CoefPoly& a, const CoefPoly& b);
  friend CoefPoly operator*(CoefPoly a, const Rational& c) { return a *= c; }
  friend CoefPoly operator*(const Rational& c, CoefPoly a) { return a *= c; }
  friend CoefPoly operator-(const CoefPoly& a);
  friend bool operator==(const CoefPoly&, const CoefPoly&) = default;

  /// Adds c*m in place; drops the term if it cancels.
  void add_term(const Monomial& m, const Rational& c);

 private:
  TermMap terms_;
};

}  // namespace gwdn
