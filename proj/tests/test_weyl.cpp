#include "gwdn/dnbuild.hpp"
#include "gwdn/errors.hpp"
#include "gwdn/opmatrix.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace gwdn;
using oracle::op;

namespace {

QDOperator random_op(std::mt19937_64& rng) {
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  QDOperator r;
  for (int t = uniform(1, 3); t > 0; --t) {
    const int e = uniform(0, 2);
    QDOperator atom(CoefPoly(Rational(uniform(-4, 4))) * CoefPoly::var(0, static_cast<std::uint32_t>(uniform(0, 2))));
    atom = atom * QDOperator::q(uniform(0, 2));
    for (int k = 0; k < e; ++k) atom = atom * QDOperator::D();
    r += atom;
  }
  return r;
}

/// D - A for a random almost triangular A with small entries.
OpMatrix random_almost_triangular(std::mt19937_64& rng, std::size_t size) {
  OpMatrix a(size);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) {
      if (i == j + 1) a(i, j) = QDOperator(1);
      else if (i <= j) a(i, j) = random_op(rng);
    }
  return a.d_minus();
}

}  // namespace

TEST_CASE("multiplication examples") {
  const auto D = QDOperator::D(), q = QDOperator::q();
  CHECK(D * q == op("q*(D+1)"));
  CHECK(q * D == op("q*D"));
  CHECK((D - op("a_1_1*q")) * (D - op("a_0_0*q")) ==
        op("D^2 - q*(a_0_0*(D+1) + a_1_1*D) + a_0_0*a_1_1*q^2"));
}

TEST_CASE("associativity on random triples") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 40; ++t) {
    const auto a = random_op(rng), b = random_op(rng), c = random_op(rng);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("dq_power") {
  CHECK(dq_power(1) == op("q*(D+1)"));
  CHECK(dq_power(2) == op("q^2*(D+1)*(D+2)"));
  CHECK(dq_power(3).d_order() == 3);
  for (int k = 2; k <= 6; ++k) CHECK(dq_power(k) == dq_power(1) * dq_power(k - 1));
  CHECK(dq_power(4) == op("(D*q)^4"));
}

TEST_CASE("right determinant examples") {
  const auto one = OpMatrix::from_rows({{op("D - a_0_0*q")}});
  CHECK(right_determinant(one) == op("D - a_0_0*q"));
  const auto two = OpMatrix::from_rows({{op("D - a_0_0*q"), op("-a_0_1*q^2")}, {op("-1"), op("D - a_1_1*q")}});
  const auto expect = op("D^2 - q*(a_0_0*(D+1) + a_1_1*D) + q^2*(a_0_0*a_1_1 - a_0_1)");
  CHECK(right_determinant(two) == expect);
  CHECK(right_determinant_cofactor(two) == expect);
  const auto l3 = quantum_operator({2});
  CHECK(l3.slice(1) == op("-(a_0_0*(D+1)^2 + a_1_1*D*(D+1) + a_2_2*D^2)").slice(0));
  CHECK_THROWS_AS(OpMatrix::from_rows({{op("D"), op("q")}}), PreconditionFailed);
}

TEST_CASE("leading-minor recursion agrees with cofactor expansion") {
  std::mt19937_64 rng(5);
  for (std::size_t size = 1; size <= 4; ++size)
    for (int t = 0; t < 5; ++t) {
      const auto m = random_almost_triangular(rng, size);
      REQUIRE(m.is_almost_triangular());
      CHECK(right_determinant_leading_minors(m) == right_determinant_cofactor(m));
    }
}

TEST_CASE("general matrices use the cofactor path") {
  const auto m = OpMatrix::from_rows({{op("D"), op("q")}, {op("q"), op("D")}});
  CHECK_FALSE(m.is_almost_triangular());
  CHECK(right_determinant(m) == op("D^2 - q^2"));
  CHECK_THROWS_AS(right_determinant_leading_minors(m), PreconditionFailed);
}

TEST_CASE("antitranspose") {
  std::mt19937_64 rng(2);
  const auto m = random_almost_triangular(rng, 3);
  const auto t = antitranspose(m);
  CHECK(antitranspose(t) == m);
  for (std::size_t k = 0; k < 3; ++k) CHECK(t(2 - k, 2 - k) == m(k, k));
  CHECK(t(1, 0) == QDOperator(-1));
  CHECK(t(2, 1) == QDOperator(-1));
}

TEST_CASE("regularize") {
  for (int n = 1; n <= 4; ++n) {
    const auto p = std::to_string(n + 1);
    std::string factors;
    for (int k = 1; k <= n + 1; ++k) factors += "*(D+" + std::to_string(k) + ")";
    const auto lq = op(("D^" + p + " - " + p + "^" + p + "*q^" + p).c_str());
    CHECK(regularize(lq) == op(("D^" + p + " - " + p + "^" + p + "*q^" + p + factors).c_str()));
  }
  CHECK(regularize(op("D^2 + 3*D")) == op("D^2 + 3*D"));
  CHECK(regularize(op("a_1_1*q*D")) == op("a_1_1*q*D*(D+1)"));
}

TEST_CASE("left_divide_by_D") {
  CHECK(left_divide_by_D(op("D^2")) == op("D"));
  CHECK(left_divide_by_D(op("D - a_0_0*q*(D+1)")) == op("1 - a_0_0*q"));
  for (int n = 1; n <= 4; ++n) {
    const auto lq = op(("D^" + std::to_string(n + 1) + " - " + std::to_string(n + 1) + "^" +
                        std::to_string(n + 1) + "*q^" + std::to_string(n + 1))
                           .c_str());
    std::string factors;
    for (int k = 1; k <= n; ++k) factors += "*(D+" + std::to_string(k) + ")";
    const auto expect = op(("D^" + std::to_string(n) + " - " + std::to_string(n + 1) + "^" +
                            std::to_string(n + 1) + "*q^" + std::to_string(n + 1) + factors)
                               .c_str());
    CHECK(left_divide_by_D(regularize(lq)) == expect);
  }
  std::mt19937_64 rng(9);
  for (int t = 0; t < 20; ++t) {
    const auto x = random_op(rng);
    const auto product = QDOperator::D() * x;
    CHECK(QDOperator::D() * left_divide_by_D(product) == product);
  }
  try {
    left_divide_by_D(op("D + q*(D+2)"));
    FAIL("expected NotLeftDivisible");
  } catch (const NotLeftDivisible& e) {
    CHECK(e.q_power() == 1);
    CHECK(e.remainder() == "1");
  }
  CHECK_THROWS_AS(left_divide_by_D(op("1")), NotLeftDivisible);
}
