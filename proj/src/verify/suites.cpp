#include "gwdn/suites.hpp"

#include "gwdn/dnbuild.hpp"
#include "gwdn/errors.hpp"
#include "gwdn/frobenius.hpp"
#include "gwdn/gwring.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace gwdn {

bool SuiteReport::ok() const {
  return std::all_of(cases.begin(), cases.end(), [](const CaseResult& c) { return c.ok; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"paths",    "restriction", "universality",
                                              "appendix", "flatness",    "confluence"};
  return names;
}

std::vector<GWSymbol> random_symbols(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  std::vector<GWSymbol> out;
  while (out.size() < count) {
    const int n = uniform(1, 5);
    GWSymbol s;
    for (int k = 0; k + 1 < n; ++k) s.heads.push_back({0, uniform(0, 4)});
    s.tail = {0, uniform(0, 4)};
    for (int step = uniform(0, 3); step > 0; --step) {
      const int k = uniform(0, n - 1);
      (k == n - 1 ? s.tail : s.heads[static_cast<std::size_t>(k)]).d += 1;
    }
    const int delta = degree(s);
    if (delta >= 0 && delta <= 6) out.push_back(canonicalize(std::move(s)));
  }
  return out;
}

namespace {

int or_default(int value, int fallback) { return value > 0 ? value : fallback; }

SuiteReport paths(const SuiteOptions& o) {
  SuiteReport r{"paths", {}};
  for (int n = 1; n <= or_default(o.n, 3); ++n)
    for (bool a00 : {true, false}) {
      const DNConfig cfg{n, a00, false};
      const bool ok = dn_operator(cfg) == dn_operator_via_regularization(cfg);
      r.cases.push_back({"N=" + std::to_string(n) + (a00 ? " general" : " geometric"), ok, ""});
    }
  return r;
}

SuiteReport restriction(const SuiteOptions& o) {
  SuiteReport r{"restriction", {}};
  const int n1 = or_default(o.n, 2), q = or_default(o.q_max, 4);
  const auto small = analytic_solution(dn_operator({n1}), q);
  const auto large = analytic_solution(dn_operator({n1 + 1}), q);
  r.cases.push_back({"r_" + std::to_string(n1) + " of L_" + std::to_string(n1 + 1) +
                         " solution, q^" + std::to_string(q),
                     restrict_r_N(large, n1) == small, ""});
  return r;
}

SuiteReport universality(const SuiteOptions& o) {
  SuiteReport r{"universality", {}};
  const int n1 = or_default(o.n, 5), n2 = n1 + 2, q = or_default(o.q_max, 4);
  // solutions agree mod q^q, so compare through q^{q-1}
  const auto s1 = analytic_solution(dn_operator({n1}), q - 1);
  const auto s2 = analytic_solution(dn_operator({n2}), q - 1);
  r.cases.push_back({"L_" + std::to_string(n1) + " vs L_" + std::to_string(n2) + " mod q^" +
                         std::to_string(q),
                     s1 == s2, ""});
  return r;
}

std::string describe(const CheckResult& c) {
  if (c.ok) return "ok";
  return "fails at q^" + std::to_string(c.witness->q) + " index " + std::to_string(c.witness->index);
}

bool agree(const CheckResult& a, const CheckResult& b) {
  if (a.ok != b.ok) return false;
  return a.ok || (a.witness->q == b.witness->q && a.witness->index == b.witness->index);
}

CaseResult compare_checks(const std::string& name, const QDOperator& p, const PerturbedSeries& s,
                          bool expect_ok) {
  const auto direct = check_perturbed(p, s);
  const auto relations = appendix_relations_check(p, s);
  const bool ok = agree(direct, relations) && (!expect_ok || direct.ok);
  return {name, ok, describe(direct) + " / " + describe(relations)};
}

SuiteReport appendix(const SuiteOptions& o) {
  SuiteReport r{"appendix", {}};
  const int q = or_default(o.q_max, 6);
  for (int n = 1; n <= 2; ++n) {
    const DNConfig cfg{n};
    const auto dn = dn_operator(cfg);
    r.cases.push_back(compare_checks("L_" + std::to_string(n) + " analytic", dn,
                                     analytic_solution(dn, q), true));
    const auto lq = quantum_operator(DNConfig{n, false, false});
    r.cases.push_back(compare_checks("L^Q_" + std::to_string(n) + " perturbed", lq,
                                     newton_solve(lq, n + 1, q), true));
  }
  std::mt19937_64 rng(o.seed);
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const int fuzz = or_default(o.trials, 50);
  for (int t = 0; t < fuzz; ++t) {
    const int n = uniform(1, 2);
    const bool quantum = uniform(0, 1) == 1;
    Specialization spec;
    for (int i = 0; i <= n; ++i)
      for (int j = i; j <= n; ++j)
        spec.assignment[CoefVar{static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)}] =
            Rational(uniform(-3, 3));
    const DNConfig cfg{n, !quantum, false};
    const QDOperator p = specialize(quantum ? quantum_operator(cfg) : dn_operator(cfg), spec);
    const int h_max = quantum ? n + 1 : n;
    const int q_max = uniform(1, q);
    PerturbedSeries s = newton_solve(p, h_max, q_max);
    const bool perturb = uniform(0, 1) == 1;
    if (perturb) s.at(uniform(0, h_max - 1), uniform(1, q_max)) += CoefPoly(Rational(uniform(1, 5)));
    r.cases.push_back(compare_checks("fuzz " + std::to_string(t) + (perturb ? " perturbed" : ""), p,
                                     s, !perturb));
  }
  return r;
}

SuiteReport flatness(const SuiteOptions& o) {
  SuiteReport r{"flatness", {}};
  ReduceCache cache;
  const int n = or_default(o.n, 2), q = or_default(o.q_max, 2);
  const auto f = phi_flatness(n, q, cache);
  std::string detail = f.ok ? "" : "residual " + f.residual.str();
  r.cases.push_back({"constant term is the identity", f.identity_constant, ""});
  r.cases.push_back({"flat, N=" + std::to_string(n) + ", q^" + std::to_string(q), f.ok, detail});
  return r;
}

SuiteReport confluence(const SuiteOptions& o) {
  SuiteReport r{"confluence", {}};
  const auto symbols = random_symbols(static_cast<std::size_t>(or_default(o.symbols, 100)), o.seed);
  const int trials = or_default(o.trials, 10);
  const auto bad = confluence_mismatches(symbols, trials, o.seed);
  r.cases.push_back({std::to_string(symbols.size()) + " symbols x " + std::to_string(trials) +
                         " trials",
                     bad == 0, std::to_string(bad) + " mismatches"});
  ReduceCache cache;
  bool basis = true;
  for (std::uint32_t i = 0; i <= 4; ++i)
    for (std::uint32_t j = i; j <= 4; ++j) {
      const GWSymbol s({{0, 1}, {0, static_cast<int>(j)}}, {0, static_cast<int>(i)});
      const CoefPoly expect = (i == 0 && j == 0) ? CoefPoly() : CoefPoly::var(i, j);
      basis = basis && reduce(s, cache) == expect;
    }
  r.cases.push_back({"basis <H^1, H^j, H_i> = a_ij", basis, ""});
  return r;
}

}  // namespace

SuiteReport run_suite(const std::string& name, const SuiteOptions& opts) {
  static const std::map<std::string, SuiteReport (*)(const SuiteOptions&)> table{
      {"paths", paths},       {"restriction", restriction}, {"universality", universality},
      {"appendix", appendix}, {"flatness", flatness},       {"confluence", confluence}};
  auto it = table.find(name);
  if (it == table.end()) throw PreconditionFailed("unknown verification suite '" + name + "'");
  return it->second(opts);
}

}  // namespace gwdn
