#include "gwdn/errors.hpp"
#include "gwdn/gwring.hpp"

namespace gwdn {

namespace {

/// Canonical symbol, or nullopt when it denotes 0 by convention.
std::optional<GWSymbol> live(std::vector<GWSlot> heads, GWSlot tail) {
  GWSymbol s(std::move(heads), tail);
  if (s.has_negative_entry() || degree(s) < 0) return std::nullopt;
  return canonicalize(std::move(s));
}

void push(GWExpr& out, CoefPoly coef, std::vector<GWSymbol> factors) {
  out.push_back(GWTerm{std::move(coef), std::move(factors)});
}

/// Visits every split of `items` into (S1, S2), S1 given by the bits of a mask.
template <typename F>
void for_each_split(const std::vector<GWSlot>& items, F&& f) {
  const std::size_t count = std::size_t{1} << items.size();
  for (std::size_t mask = 0; mask < count; ++mask) {
    std::vector<GWSlot> s1, s2;
    for (std::size_t x = 0; x < items.size(); ++x) ((mask >> x) & 1U ? s1 : s2).push_back(items[x]);
    f(mask, s1, s2);
  }
}

std::vector<GWSlot> concat(std::vector<GWSlot> a, const std::vector<GWSlot>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

/// Sum over a >= 0 of first(a) * second(a), a bounded by degree(first(a)) >= 0.
template <typename First, typename Second, typename Skip>
void add_products(GWExpr& out, const CoefPoly& coef, First&& first, Second&& second, Skip&& skip) {
  for (int a = 0;; ++a) {
    GWSymbol f1 = first(a);
    if (degree(f1) < 0) break;
    if (skip(a)) continue;
    GWSymbol f2 = second(a);
    auto l1 = live(f1.heads, f1.tail);
    auto l2 = live(f2.heads, f2.tail);
    if (!l1 || !l2) continue;
    push(out, coef, {*l1, *l2});
  }
}

struct Gw5Option {
  bool first_form;
  std::size_t k;
  std::size_t l;
};

std::vector<Gw5Option> gw5_options(const GWSymbol& s) {
  std::vector<Gw5Option> opts;
  const std::size_t m = s.heads.size();
  for (std::size_t k = 0; k < m; ++k)
    if (s.heads[k].d > 0)
      for (std::size_t l = 0; l < m; ++l)
        if (l != k) opts.push_back({true, k, l});
  if (s.tail.d > 0)
    for (std::size_t k = 0; k < m; ++k)
      for (std::size_t l = k + 1; l < m; ++l) opts.push_back({false, k, l});
  return opts;
}

std::vector<std::pair<std::size_t, std::size_t>> gw6_options(const GWSymbol& s) {
  std::vector<std::pair<std::size_t, std::size_t>> opts;
  const auto& h = s.heads;
  for (std::size_t k = 0; k < h.size(); ++k)
    for (std::size_t l = 0; l < h.size(); ++l)
      if (k != l && h[k].e >= 2 && (h[k].e < h[l].e || (h[k].e == h[l].e && k < l)))
        opts.emplace_back(k, l);
  return opts;
}

std::vector<GWSlot> without(const std::vector<GWSlot>& h, std::size_t k, std::size_t l) {
  std::vector<GWSlot> rest;
  for (std::size_t x = 0; x < h.size(); ++x)
    if (x != k && x != l) rest.push_back(h[x]);
  return rest;
}

bool is_prime(const GWSymbol& s) { return s.sum_d() == 0; }

}  // namespace

Measure termination_measure(const GWSymbol& s) {
  long pairs = 0;
  for (std::size_t k = 0; k < s.heads.size(); ++k)
    for (std::size_t l = k + 1; l < s.heads.size(); ++l)
      pairs += static_cast<long>(s.heads[k].e) * s.heads[l].e;
  return {degree(s), s.sum_d(), std::max(0, 3 - s.n()), s.n(), pairs};
}

Rational gw2_normalize(const GWSymbol& s) {
  if (degree(s) != 0) throw DegreeNonzero("gw2_normalize needs degree 0, got " + s.str());
  const int total = s.sum_d();
  if (total != s.n() - 3) return Rational(0);
  Rational v = Rational::factorial(static_cast<unsigned>(total));
  for (const auto& h : s.heads) v /= Rational::factorial(static_cast<unsigned>(h.d));
  return v / Rational::factorial(static_cast<unsigned>(s.tail.d));
}

GWExpr gw4_lift(const GWSymbol& input) {
  const GWSymbol s = canonicalize(input);
  const int delta = degree(s);
  if (s.n() >= 3 || delta <= 0)
    throw PreconditionFailed("gw4_lift needs n < 3 and positive degree, got " + s.str());
  const Rational inv(1, delta);
  GWExpr out;
  auto lifted = s.heads;
  lifted.push_back({0, 1});
  if (auto x = live(lifted, s.tail)) push(out, inv, {*x});
  for (std::size_t k = 0; k < s.heads.size(); ++k) {
    auto h = s.heads;
    h[k] = {h[k].d - 1, h[k].e + 1};
    if (auto x = live(h, s.tail)) push(out, -inv, {*x});
  }
  if (auto x = live(s.heads, {s.tail.d - 1, s.tail.e - 1})) push(out, -inv, {*x});
  return out;
}

std::size_t gw5_choice_count(const GWSymbol& s) { return gw5_options(canonicalize(s)).size(); }

GWExpr gw5_strip(const GWSymbol& input, std::size_t choice) {
  const GWSymbol s = canonicalize(input);
  const auto opts = gw5_options(s);
  if (s.n() < 3 || s.sum_d() == 0 || opts.empty())
    throw PreconditionFailed("gw5_strip needs n >= 3 and a descendant, got " + s.str());
  const Gw5Option opt = opts.at(choice);
  const bool first_form = opt.first_form;
  const std::size_t k = opt.k, l = opt.l;
  const auto rest = without(s.heads, k, l);
  const GWSlot hk = s.heads[k], hl = s.heads[l];
  GWExpr out;
  auto none = [](int) { return false; };
  for_each_split(rest, [&](std::size_t, const auto& s1, const auto& s2) {
    if (first_form) {
      add_products(
          out, CoefPoly(1),
          [&](int a) { return GWSymbol(concat({{hk.d - 1, hk.e}}, s1), {0, a}); },
          [&](int a) { return GWSymbol(concat(concat({{0, a}}, s2), {hl}), s.tail); }, none);
    } else {
      add_products(
          out, CoefPoly(1), [&](int a) { return GWSymbol(concat(s1, {hk, hl}), {0, a}); },
          [&](int a) { return GWSymbol(concat({{0, a}}, s2), {s.tail.d - 1, s.tail.e}); }, none);
    }
  });
  return out;
}

std::size_t gw6_choice_count(const GWSymbol& s) { return gw6_options(canonicalize(s)).size(); }

GWExpr gw6_shuffle(const GWSymbol& input, std::size_t choice) {
  const GWSymbol s = canonicalize(input);
  const auto opts = gw6_options(s);
  bool small_exponent = false;
  for (const auto& h : s.heads) small_exponent = small_exponent || h.e < 2;
  if (!is_prime(s) || s.n() < 3 || small_exponent || opts.empty())
    throw PreconditionFailed("gw6_shuffle needs a prime symbol with head exponents >= 2, got " +
                             s.str());
  const std::size_t k = opts.at(choice).first, l = opts.at(choice).second;
  const int e1 = s.heads[k].e, e2 = s.heads[l].e;
  const auto rest = without(s.heads, k, l);
  const GWSlot tail{0, s.tail.e};
  GWExpr out;
  if (auto c = live(concat({{0, e1 - 1}, {0, e2 + 1}}, rest), tail)) push(out, CoefPoly(1), {*c});
  // sum <H^1, H^x2, S1, H_a> <H^a, S2, H^x3, H_r>, dropping the S1 empty, a = skip term
  auto side = [&](const CoefPoly& coef, int x2, int x3, int skip) {
    for_each_split(rest, [&](std::size_t mask, const auto& s1, const auto& s2) {
      add_products(
          out, coef, [&](int a) { return GWSymbol(concat({{0, 1}, {0, x2}}, s1), {0, a}); },
          [&](int a) { return GWSymbol(concat(concat({{0, a}}, s2), {{0, x3}}), tail); },
          [&](int a) { return mask == 0 && a == skip; });
    });
  };
  side(CoefPoly(1), e2, e1 - 1, e2 + 1);
  side(CoefPoly(-1), e1 - 1, e2, e1);
  return out;
}

}  // namespace gwdn
