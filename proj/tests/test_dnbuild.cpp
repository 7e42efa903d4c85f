#include "gwdn/dnbuild.hpp"
#include "gwdn/frobenius.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace gwdn;
using oracle::op;
using oracle::poly;

TEST_CASE("connection matrix") {
  const auto a1 = connection_matrix({1});
  CHECK(a1(0, 0) == op("a_0_0*q"));
  CHECK(a1(0, 1) == op("a_0_1*q^2"));
  CHECK(a1(1, 0) == QDOperator(1));
  CHECK(a1(1, 1) == op("a_1_1*q"));
  CHECK(connection_matrix({2})(0, 2) == op("a_0_2*q^3"));
  CHECK(connection_matrix({2})(2, 0).is_zero());
  CHECK(connection_matrix({2, false})(0, 0).is_zero());
  for (int n = 1; n <= 4; ++n) CHECK(connection_matrix({n}).d_minus().is_almost_triangular());
}

TEST_CASE("quantum operator") {
  CHECK(quantum_operator({1}) == op("D^2 - q*(a_0_0*(D+1) + a_1_1*D) + q^2*(a_0_0*a_1_1 - a_0_1)"));
  for (int n = 1; n <= 4; ++n) {
    const auto lq = quantum_operator({n});
    CHECK(lq.slice(0) == op(("D^" + std::to_string(n + 1)).c_str()).slice(0));
    CHECK(lq.is_weighted_homogeneous());
    const auto p = std::to_string(n + 1);
    CHECK(specialize(lq, projective_space(n)) == op(("D^" + p + " - " + p + "^" + p + "*q^" + p).c_str()));
  }
}

TEST_CASE("dn operator") {
  CHECK(dn_operator({1}) == op("D - q*(a_0_0*(D+1) + a_1_1*D) + q^2*(a_0_0*a_1_1 - a_0_1)*(D+1)"));
  CHECK(dn_operator({1, false}) == op("D - q*a_1_1*D - q^2*a_0_1*(D+1)"));
  CHECK(dn_operator({2}).slice(0) == op("D^2").slice(0));
  for (int n = 1; n <= 4; ++n) {
    std::string factors;
    for (int k = 1; k <= n; ++k) factors += "*(D+" + std::to_string(k) + ")";
    const auto p = std::to_string(n + 1);
    const auto expect = op(("D^" + std::to_string(n) + " - " + p + "^" + p + "*q^" + p + factors).c_str());
    CHECK(specialize(dn_operator({n}), projective_space(n)) == expect);
  }
}

TEST_CASE("both constructions of L_N agree") {
  for (int n = 1; n <= 3; ++n)
    for (bool a00 : {true, false}) {
      const DNConfig cfg{n, a00, false};
      CAPTURE(n);
      const auto direct = dn_operator(cfg);
      CHECK(direct == dn_operator_via_regularization(cfg));
      CHECK(direct.is_weighted_homogeneous());
    }
}

TEST_CASE("restriction") {
  const auto l2 = analytic_solution(dn_operator({2}), 4);
  const auto l3 = analytic_solution(dn_operator({3}), 4);
  CHECK(l3.at(0, 4) - restrict_r_N(l3, 2).at(0, 4) == poly("3/32*a_0_3"));
  CHECK(restrict_r_N(l3, 2) == l2);
  CHECK(restrict_r_N(l2, 5) == l2);
  CHECK(restrict_r_N(poly("a_0_1*a_3_3"), 2).is_zero());
  CHECK(restrict_r_N(poly("a_0_0 + a_1_1"), 2, true) == poly("a_1_1"));
  CHECK(restrict_r_N(poly("a_0_0 + a_1_1"), 2, false) == poly("a_0_0 + a_1_1"));
}

TEST_CASE("specialize") {
  CHECK(specialize(quantum_operator({2}), projective_space(2)) == op("D^3 - 27*q^3"));
  CHECK(specialize(dn_operator({2}), Specialization{}) == dn_operator({2}));
  Specialization s;
  s.assignment[CoefVar{0, 0}] = Rational(1);
  CHECK(specialize(op("1 - a_0_0*q"), s) == op("1 - q"));
  CHECK(projective_space(2).assignment.at(CoefVar{0, 2}) == Rational(27));
}

TEST_CASE("symmetrize") {
  CHECK(symmetrize_dn(poly("a_1_2"), 2) == poly("a_0_1"));
  CHECK(symmetrize_dn(poly("a_1_1"), 2) == poly("a_1_1"));
  CHECK(symmetrize_dn(poly("a_2_2 + a_0_0"), 2) == poly("2*a_0_0"));
  const auto once = symmetrize_dn(dn_operator({3}), 3);
  CHECK(symmetrize_dn(once, 3) == once);
  CHECK(dn_operator({3, true, true}) == once);
}
