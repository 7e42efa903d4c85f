#include "gwdn/dnbuild.hpp"
#include "gwdn/errors.hpp"
#include "gwdn/frobenius.hpp"
#include "gwdn/gwring.hpp"
#include "gwdn/suites.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace gwdn;
using oracle::poly;

namespace {

GWSymbol sym(const char* text) { return GWSymbol::parse(text); }

CoefPoly value(const char* text) {
  ReduceCache cache;
  return reduce(sym(text), cache);
}

}  // namespace

TEST_CASE("symbol text") {
  const auto s = sym("<t1 H^2, H^1, H_0>");
  REQUIRE(s.heads.size() == 2);
  CHECK(s.heads[0] == GWSlot{1, 2});
  CHECK(s.tail == GWSlot{0, 0});
  CHECK(s.str() == "<t1 H^2, H^1, H_0>");
  CHECK(sym("<t_2 H_0>") == GWSymbol({}, {2, 0}));
  CHECK(sym(" < H^1 ,H^2, t3 H_1 > ").str() == "<H^1, H^2, t3 H_1>");
  CHECK(canonicalize(s).latex() == "\\langle H^{1}, \\tau_{1}H^{2}, H_{0}\\rangle");
  CHECK_THROWS_AS(sym("<H^1, H^2>"), ParseError);
  CHECK_THROWS_AS(sym("<H_1, H^2>"), ParseError);
  CHECK_THROWS_AS(sym("H_1"), ParseError);
  CHECK_THROWS_AS(sym("<H_1> x"), ParseError);
}

TEST_CASE("canonicalize") {
  CHECK(canonicalize(sym("<H^2, H^1, H_3>")) == sym("<H^1, H^2, H_3>"));
  const auto c = canonicalize(sym("<t1 H^1, H^1, H_0>"));
  CHECK(canonicalize(c) == c);
  CHECK(c == sym("<H^1, t1 H^1, H_0>"));
}

TEST_CASE("degree") {
  for (int i = 0; i <= 4; ++i)
    for (int j = 0; j <= 4; ++j)
      CHECK(degree(GWSymbol({{0, 1}, {0, j}}, {0, i})) == j - i + 1);
  CHECK(degree(sym("<H^1, H^3, H_4>")) == 0);
  CHECK(degree(sym("<H_1>")) == 1);
  CHECK(degree(sym("<t2 H_0>")) == 4);
}

TEST_CASE("gw2") {
  CHECK(gw2_normalize(sym("<H^1, H^3, H_4>")) == Rational(1));
  for (int i = 0; i <= 4; ++i) CHECK(gw2_normalize(GWSymbol({{0, 0}, {0, i}}, {0, i})) == Rational(1));
  CHECK(gw2_normalize(sym("<t1 H^1, H^2, H_4>")) == Rational(0));
  CHECK(gw2_normalize(sym("<t1 H^0, t1 H^2, H^0, H^0, H_2>")) == Rational(2));
  CHECK(gw2_normalize(sym("<t2 H^0, H^0, H^0, H^0, H^0, t1 H_0>")) == Rational(3));
  CHECK_THROWS_AS(gw2_normalize(sym("<H_1>")), DegreeNonzero);
}

TEST_CASE("gw4 lift") {
  const auto lifted = gw4_lift(sym("<H_1>"));
  REQUIRE(lifted.size() == 1);
  CHECK(lifted[0].coef == CoefPoly(1));
  CHECK(lifted[0].factors == std::vector<GWSymbol>{sym("<H^1, H_1>")});
  CHECK(value("<H_1>") == poly("a_1_1"));
  CHECK(value("<t1 H_2>") == poly("a_2_2 - 2*a_1_1"));
  CHECK(value("<H_0>") == poly("1/4*a_0_1"));
  CHECK(value("<H^2, H_1>") == poly("1/2*a_1_2"));
  CHECK(value("<H^3, H_0>") == poly("1/4*a_0_3"));
  CHECK_THROWS_AS(gw4_lift(sym("<H^1, H^1, H_1>")), PreconditionFailed);
  CHECK_THROWS_AS(gw4_lift(sym("<H^2, H_3>")), PreconditionFailed);
}

TEST_CASE("gw5 strip") {
  for (const char* text : {"<t1 H^1, H^1, H_1>", "<t2 H^2, H^0, t1 H_3>", "<H^2, H^3, t2 H_1>",
                           "<t1 H^1, t1 H^2, H^2, H_0>"}) {
    const auto s = sym(text);
    CAPTURE(text);
    const auto count = gw5_choice_count(s);
    REQUIRE(count > 0);
    for (std::size_t c = 0; c < count; ++c)
      for (const auto& term : gw5_strip(s, c))
        for (const auto& f : term.factors) {
          CHECK(f.sum_d() < s.sum_d());
          CHECK(degree(f) >= 0);
          CHECK(termination_measure(f) < termination_measure(s));
        }
  }
  CHECK_THROWS_AS(gw5_strip(sym("<H^1, H^2, H_0>")), PreconditionFailed);
  CHECK_THROWS_AS(gw5_strip(sym("<t1 H^2, H_0>")), PreconditionFailed);
}

TEST_CASE("reduction order does not matter for GW5 forms") {
  const auto s = sym("<t1 H^1, H^1, H_1>");
  ReduceCache reference_cache;
  const auto reference = reduce(s, reference_cache);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    std::mt19937_64 rng(seed);
    ReduceCache fresh;
    CHECK(Reducer(fresh, &rng)(s) == reference);
  }
  CHECK(value("<t1 H^2, H^1, t1 H_2>") == value("<H^1, t1 H^2, t1 H_2>"));
}

TEST_CASE("gw6 and prime symbols") {
  CHECK(value("<H^0, H^2, H^3, H_2>").is_zero());
  CHECK(value("<H^0, H^2, H_0>").is_zero());
  for (int k = 0; k <= 4; ++k)
    for (int r = 0; r <= 3; ++r)
      for (int m = 1; m <= 3; ++m) {
        GWSymbol s({{0, k}}, {0, r});
        for (int c = 0; c < m; ++c) s.heads.push_back({0, 1});
        const int delta = degree(s);
        if (delta < 1 || k == 0) continue;
        CAPTURE(s.str());
        ReduceCache cache;
        CHECK(reduce(s, cache) ==
              CoefPoly(Rational(delta).pow(static_cast<unsigned>(m - 1))) *
                  CoefPoly::var(static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(k)));
      }
  const auto s = sym("<H^2, H^2, H_1>");
  REQUIRE(gw6_choice_count(s) == 1);
  for (const auto& term : gw6_shuffle(s))
    for (const auto& f : term.factors) CHECK(termination_measure(f) < termination_measure(s));
  ReduceCache base;
  const auto reference = reduce(s, base);
  CHECK(reference.is_weighted_homogeneous(degree(s)));
  const auto four = sym("<H^2, H^3, H^4, H_3>");
  CHECK(gw6_choice_count(four) == 3);
  ReduceCache c0;
  const auto v = reduce(four, c0);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    std::mt19937_64 rng(seed);
    ReduceCache fresh;
    CHECK(Reducer(fresh, &rng)(four) == v);
  }
  CHECK_THROWS_AS(gw6_shuffle(sym("<H^1, H^2, H_0>")), PreconditionFailed);
  CHECK_THROWS_AS(gw6_shuffle(sym("<t1 H^2, H^2, H_0>")), PreconditionFailed);
}

TEST_CASE("basis identities") {
  ReduceCache cache;
  for (std::uint32_t i = 0; i <= 4; ++i)
    for (std::uint32_t j = i; j <= 4; ++j) {
      const GWSymbol s({{0, 1}, {0, static_cast<int>(j)}}, {0, static_cast<int>(i)});
      CHECK(reduce(s, cache) == (i == 0 && j == 0 ? CoefPoly() : CoefPoly::var(i, j)));
    }
  for (int j = 0; j <= 5; ++j) CHECK(reduce(GWSymbol({{0, 1}, {0, j}}, {0, j + 1}), cache) == CoefPoly(1));
  CHECK(reduce(sym("<H^1, H^1, H_4>"), cache).is_zero());
  CHECK(reduce(GWSymbol({{-1, 2}}, {0, 0}), cache).is_zero());
  CHECK(reduce(GWSymbol({{0, 2}}, {0, -1}), cache).is_zero());
}

TEST_CASE("homogeneity and measure on random symbols") {
  const auto symbols = random_symbols(150, 99);
  ReduceCache cache;
  const auto values = reduce_batch(symbols, cache);
  for (std::size_t k = 0; k < symbols.size(); ++k) {
    CAPTURE(symbols[k].str());
    CHECK(values[k].is_weighted_homogeneous(degree(symbols[k])));
    CHECK(values[k].variables().count(CoefVar{0, 0}) == 0);
  }
  ReduceCache serial_cache;
  CHECK(reduce_batch_serial(symbols, serial_cache) == values);
}

TEST_CASE("confluence under randomized strategies") {
  CHECK(confluence_mismatches(random_symbols(100, 4), 20, 17) == 0);
}

TEST_CASE("string equation") {
  std::mt19937_64 rng(8);
  int checked = 0;
  while (checked < 60) {
    auto s = random_symbols(1, rng())[0];
    if (s.sum_d() == 0) continue;
    GWSymbol with_unit = s;
    with_unit.heads.push_back({0, 0});
    const int curve_degree = degree(with_unit);
    if (curve_degree < 0 || (curve_degree == 0 && s.n() < 3)) continue;
    CoefPoly rhs;
    ReduceCache cache;
    for (std::size_t k = 0; k < s.heads.size(); ++k) {
      GWSymbol lowered = s;
      lowered.heads[k].d -= 1;
      rhs += reduce(lowered, cache);
    }
    GWSymbol lowered = s;
    lowered.tail.d -= 1;
    rhs += reduce(lowered, cache);
    CAPTURE(with_unit.str());
    CHECK(reduce(with_unit, cache) == rhs);
    ++checked;
  }
}

TEST_CASE("universal I-series") {
  ReduceCache cache;
  const auto [I, It] = universal_I(2, 3, cache);
  CHECK(I.at(0, 0) == CoefPoly(1));
  CHECK(It.at(0, 0) == CoefPoly(1));
  CHECK(It.at(0, 1).is_zero());
  CHECK(It.at(1, 1) == poly("a_1_1"));
  CHECK(It.at(2, 1) == poly("a_2_2 - a_1_1"));
  CHECK(It.at(0, 2) == poly("1/2*a_0_1"));
  CHECK(It.at(1, 2) == poly("1/4*a_0_1 + 1/2*a_1_1^2 + 1/4*a_1_2"));
  CHECK(It.at(2, 2) == poly("-1/8*a_0_1 + 1/8*a_2_3 + 1/2*a_1_1*a_2_2 - 1/4*a_1_1^2 + 1/4*a_2_2^2"));
  CHECK(I.at(0, 2) == value("<H_0>"));
  ReduceCache serial;
  CHECK(universal_I_serial(2, 3, serial) == std::pair{I, It});
  CHECK_THROWS_AS(universal_I(0, 1, cache), PreconditionFailed);
}

TEST_CASE("universal I-series solves the operators") {
  ReduceCache cache;
  const auto [I, It] = universal_I(4, 4, cache);
  CHECK(I.is_weighted_homogeneous());
  for (int n = 1; n <= 3; ++n) {
    CAPTURE(n);
    const DNConfig cfg{n, false, false};
    CHECK(check_perturbed(quantum_operator(cfg), restrict_r_N(I.truncated(n + 1, 4), n)).ok);
    CHECK(check_perturbed(dn_operator(cfg), restrict_r_N(It.truncated(n, 4), n)).ok);
    const auto pn = specialize(restrict_r_N(It.truncated(n + 1, 4), n), projective_space(n));
    CHECK(pn == oracle::pn_I_tilde(n, 4, n + 1));
  }
}

TEST_CASE("flatness of Phi") {
  ReduceCache cache;
  const auto phi = phi_matrix(2, 2, cache);
  for (std::size_t a = 0; a <= 2; ++a)
    for (std::size_t b = 0; b <= 2; ++b) CHECK(phi.entry[a][b][0][0] == CoefPoly(a == b ? 1 : 0));
  const auto ok = phi_flatness(2, 2, cache);
  CHECK(ok.ok);
  CHECK(ok.identity_constant);
  CHECK(phi_flatness(1, 3, cache).ok);
  CHECK(phi_flatness(3, 2, cache).ok);

  auto broken = connection_matrix(DNConfig{2, false, false});
  broken(1, 2) = QDOperator();
  const auto bad = phi_flatness(2, 2, cache, &broken);
  CHECK_FALSE(bad.ok);
  REQUIRE(bad.witness.has_value());
  CHECK((*bad.witness)[0] == 1);
  CHECK_FALSE(bad.residual.is_zero());
}
