#include "gwdn/dnbuild.hpp"
#include "gwdn/errors.hpp"
#include "gwdn/frobenius.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace gwdn;
using oracle::op;
using oracle::poly;

namespace {

std::vector<QDOperator> built_operators(int n) {
  std::vector<QDOperator> ops;
  for (bool a00 : {true, false}) {
    const DNConfig cfg{n, a00, false};
    ops.push_back(quantum_operator(cfg));
    ops.push_back(regularize(quantum_operator(cfg)));
    ops.push_back(dn_operator(cfg));
  }
  return ops;
}

}  // namespace

TEST_CASE("analytic solutions of L_2 and L_3") {
  const auto s2 = analytic_solution(dn_operator({2}), 4);
  CHECK(s2.at(0, 0) == poly("1"));
  CHECK(s2.at(0, 1) == poly("a_0_0"));
  CHECK(s2.at(0, 2) == poly("1/2*a_0_1 + a_0_0^2"));
  CHECK(s2.at(0, 3) == poly("7/6*a_0_1*a_0_0 + a_0_0^3 + 1/3*a_0_1*a_1_1 + 2/9*a_0_2"));
  const auto q4 = poly(
      "23/12*a_0_1*a_0_0^2 + 1/4*a_0_1*a_1_1^2 + 3/8*a_0_1^2 + 1/8*a_2_2*a_0_2 + "
      "5/6*a_1_1*a_0_0*a_0_1 + 3/16*a_0_1*a_1_2 + 43/72*a_0_2*a_0_0 + a_0_0^4 + 1/6*a_0_2*a_1_1");
  CHECK(s2.at(0, 4) == q4);
  const auto s3 = analytic_solution(dn_operator({3}), 4);
  CHECK(s3.truncated(1, 3) == s2.truncated(1, 3));
  CHECK(s3.at(0, 4) == q4 + poly("3/32*a_0_3"));
  CHECK(oracle::all_zero(oracle::apply_naive(dn_operator({2}), s2.h_component(0))));
}

TEST_CASE("projective space analytic coefficient") {
  for (int n = 2; n <= 4; ++n) {
    const auto s = analytic_solution(specialize(dn_operator({n}), projective_space(n)), n + 1);
    CHECK(s.at(0, n + 1) == CoefPoly(Rational::factorial(static_cast<unsigned>(n + 1))));
  }
}

TEST_CASE("newton preconditions") {
  CHECK_THROWS_AS(newton_solve(dn_operator({2}), 3, 4), PreconditionFailed);
  try {
    newton_solve(op("D*(D-2) - q"), 1, 4);
    FAIL("expected IndicialNotInvertible");
  } catch (const IndicialNotInvertible& e) {
    CHECK(e.m() == 2);
  }
}

TEST_CASE("check_perturbed") {
  const auto lq = quantum_operator({2, false});
  const auto s = newton_solve(lq, 3, 5);
  CHECK(check_perturbed(lq, s).ok);
  auto broken = s;
  broken.at(1, 3) += CoefPoly(1);
  const auto r = check_perturbed(lq, broken);
  REQUIRE_FALSE(r.ok);
  CHECK(r.witness->q == 3);
  CHECK(r.witness->index == 1);
  for (int n = 2; n <= 4; ++n) {
    const auto pn = specialize(quantum_operator({n}), projective_space(n));
    CHECK(check_perturbed(pn, oracle::pn_I(n, 2 * (n + 1), n + 1)).ok);
  }
}

TEST_CASE("solver output passes the definition for every built operator") {
  for (int n = 1; n <= 3; ++n)
    for (const auto& p : built_operators(n)) {
      const int h = p.slice(0).mult0();
      const auto s = newton_solve(p, h, 6);
      CHECK(check_perturbed(p, s).ok);
      CHECK(s.is_weighted_homogeneous());
    }
}

TEST_CASE("uniqueness: the solution is forced coefficient by coefficient") {
  const auto p = dn_operator({2, false});
  const auto s = newton_solve(p, 2, 4);
  for (int m = 1; m <= 4; ++m)
    for (int i = 0; i < 2; ++i) {
      auto t = s;
      t.at(i, m) += poly("a_1_1");
      CHECK_FALSE(check_perturbed(p, t).ok);
    }
}

TEST_CASE("regularize_series") {
  PerturbedSeries s(2, 1);
  s.at(0, 0) = CoefPoly(1);
  s.at(0, 1) = poly("a_1_1");
  const auto r = regularize_series(s);
  CHECK(r.at(0, 0) == CoefPoly(1));
  CHECK(r.at(0, 1) == poly("a_1_1"));
  CHECK(r.at(1, 1) == poly("a_1_1"));
  CHECK(regularize_series(oracle::pn_I(2, 6, 3)) == oracle::pn_I_tilde(2, 6, 3));
}

TEST_CASE("hyperplane principle") {
  for (int n = 1; n <= 3; ++n)
    for (const auto& p : built_operators(n)) {
      const int h = p.slice(0).mult0();
      CHECK(regularize_series(newton_solve(p, h, 6)) == newton_solve(regularize(p), h, 6));
    }
}

TEST_CASE("Newton solutions of the regularized and DN operators agree mod h^N") {
  for (int n = 1; n <= 3; ++n) {
    const DNConfig cfg{n, true, false};
    const auto wide = regularize_series(newton_solve(quantum_operator(cfg), n + 1, 6));
    CHECK(wide.truncated(n, 6) == newton_solve(dn_operator(cfg), n, 6));
  }
}

TEST_CASE("log solutions") {
  const auto s = newton_solve(dn_operator({2}), 2, 3);
  const auto logs = log_solutions(s);
  REQUIRE(logs.size() == 2);
  CHECK(logs[0].components.size() == 1);
  CHECK(logs[0].components[0] == s.h_component(0));
  CHECK(logs[1].components[0] == s.h_component(1));
  CHECK(logs[1].components[1] == s.h_component(0));

  const auto three = log_solutions(newton_solve(quantum_operator({2}), 3, 2));
  std::vector<CoefPoly> half;
  for (const auto& c : newton_solve(quantum_operator({2}), 3, 2).h_component(0))
    half.push_back(c * Rational(1, 2));
  CHECK(three[2].components[2] == half);

  Specialization zero;
  for (std::uint32_t i = 0; i <= 2; ++i)
    for (std::uint32_t j = i; j <= 2; ++j) zero.assignment[{i, j}] = Rational(0);
  const auto trivial = log_solutions(newton_solve(specialize(dn_operator({2}), zero), 2, 3));
  CHECK(trivial[0].components == std::vector<std::vector<CoefPoly>>{{1, 0, 0, 0}});
  CHECK(trivial[1].components == std::vector<std::vector<CoefPoly>>{{0, 0, 0, 0}, {1, 0, 0, 0}});
}

TEST_CASE("derivative relations agree with the definition") {
  const auto l2 = dn_operator({2});
  CHECK(appendix_relations_check(l2, analytic_solution(l2, 6)).ok);
  const auto pn = specialize(quantum_operator({2}), projective_space(2));
  CHECK(appendix_relations_check(pn, oracle::pn_I(2, 6, 3)).ok);

  std::mt19937_64 rng(21);
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  for (int t = 0; t < 50; ++t) {
    const int n = uniform(1, 2);
    Specialization spec;
    for (std::uint32_t i = 0; i <= static_cast<std::uint32_t>(n); ++i)
      for (std::uint32_t j = i; j <= static_cast<std::uint32_t>(n); ++j)
        spec.assignment[{i, j}] = Rational(uniform(-4, 4), uniform(1, 2));
    const auto p = specialize(quantum_operator({n}), spec);
    auto s = newton_solve(p, n + 1, 6);
    for (int k = uniform(0, 2); k > 0; --k) s.at(uniform(0, n), uniform(1, 6)) += CoefPoly(Rational(uniform(1, 3)));
    const auto a = check_perturbed(p, s), b = appendix_relations_check(p, s);
    CHECK(a.ok == b.ok);
    if (!a.ok && !b.ok) {
      CHECK(a.witness->q == b.witness->q);
      CHECK(a.witness->index == b.witness->index);
    }
  }
}

TEST_CASE("general case shift") {
  const auto geometric = newton_solve(quantum_operator({2, false}), 3, 4);
  const auto shifted = general_case_shift(geometric, 4);
  CHECK(shifted == newton_solve(quantum_operator({2}), 3, 4));
  CHECK(shifted.at(0, 1) == poly("a_0_0"));
  CHECK(shifted.at(0, 2) == poly("1/4*a_0_1 + 1/2*a_0_0^2"));
  CHECK(regularize_series(shifted).at(0, 2) == poly("1/2*a_0_1 + a_0_0^2"));
  Specialization zero;
  zero.assignment[{0, 0}] = Rational(0);
  CHECK(specialize(shifted, zero) == geometric);
}
