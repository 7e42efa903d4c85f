#include "gwdn/coefpoly.hpp"

#include "gwdn/errors.hpp"

#include <algorithm>

namespace gwdn {

std::string CoefVar::name() const { return "a_" + std::to_string(i) + "_" + std::to_string(j); }

Monomial::Monomial(CoefVar v, std::uint32_t e) {
  if (e > 0) factors_.emplace_back(v, e);
}

std::uint32_t Monomial::degree() const noexcept {
  std::uint32_t d = 0;
  for (const auto& [v, e] : factors_) d += e;
  return d;
}

int Monomial::weighted_degree() const noexcept {
  int w = 0;
  for (const auto& [v, e] : factors_) w += v.weight() * static_cast<int>(e);
  return w;
}

std::uint32_t Monomial::exponent(CoefVar v) const noexcept {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                             [](const Factor& f, CoefVar x) { return f.first < x; });
  return (it != factors_.end() && it->first == v) ? it->second : 0;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto ia = a.factors_.begin(), ib = b.factors_.begin();
  while (ia != a.factors_.end() || ib != b.factors_.end()) {
    if (ib == b.factors_.end() || (ia != a.factors_.end() && ia->first < ib->first)) {
      r.factors_.push_back(*ia++);
    } else if (ia == a.factors_.end() || ib->first < ia->first) {
      r.factors_.push_back(*ib++);
    } else {
      r.factors_.emplace_back(ia->first, ia->second + ib->second);
      ++ia;
      ++ib;
    }
  }
  return r;
}

bool TermOrder::operator()(const Monomial& a, const Monomial& b) const noexcept {
  const auto da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  auto ia = fa.begin(), ib = fb.begin();
  for (; ia != fa.end() && ib != fb.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first < ib->first;  // a has the larger variable
    if (ia->second != ib->second) return ia->second > ib->second;
  }
  return ia != fa.end() && ib == fb.end();
}

CoefPoly::CoefPoly(Rational c) {
  if (!c.is_zero()) terms_.emplace(Monomial{}, std::move(c));
}

CoefPoly CoefPoly::var(std::uint32_t i, std::uint32_t j) {
  if (i == j + 1) return CoefPoly(1);
  if (i > j + 1) return CoefPoly();
  return monomial(1, Monomial(CoefVar{i, j}));
}

CoefPoly CoefPoly::monomial(Rational c, Monomial m) {
  CoefPoly p;
  if (!c.is_zero()) p.terms_.emplace(std::move(m), std::move(c));
  return p;
}

bool CoefPoly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational CoefPoly::constant_term() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Rational() : it->second;
}

std::set<CoefVar> CoefPoly::variables() const {
  std::set<CoefVar> vs;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m.factors()) vs.insert(v);
  return vs;
}

bool CoefPoly::is_weighted_homogeneous(int w) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [w](const auto& t) { return t.first.weighted_degree() == w; });
}

void CoefPoly::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

CoefPoly& CoefPoly::operator+=(const CoefPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

CoefPoly& CoefPoly::operator-=(const CoefPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

CoefPoly operator*(const CoefPoly& a, const CoefPoly& b) {
  CoefPoly r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

CoefPoly& CoefPoly::operator*=(const CoefPoly& o) { return *this = *this * o; }

CoefPoly& CoefPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

CoefPoly operator-(const CoefPoly& a) {
  CoefPoly r = a;
  for (auto& [m, v] : r.terms_) v = -v;
  return r;
}

CoefPoly CoefPoly::pow(unsigned e) const {
  CoefPoly r(1), base = *this;
  while (e > 0) {
    if (e & 1u) r *= base;
    e >>= 1u;
    if (e > 0) base *= base;
  }
  return r;
}

CoefPoly CoefPoly::substitute(const std::function<std::optional<CoefPoly>(CoefVar)>& image) const {
  std::map<CoefVar, std::optional<CoefPoly>> memo;
  CoefPoly r;
  for (const auto& [m, c] : terms_) {
    CoefPoly kept = CoefPoly::monomial(c, Monomial{});
    Monomial untouched;
    for (const auto& [v, e] : m.factors()) {
      auto it = memo.find(v);
      if (it == memo.end()) it = memo.emplace(v, image(v)).first;
      if (it->second)
        kept *= it->second->pow(e);
      else
        untouched = untouched * Monomial(v, e);
      if (kept.is_zero()) break;
    }
    if (kept.is_zero()) continue;
    for (const auto& [km, kc] : kept.terms_) r.add_term(km * untouched, kc);
  }
  return r;
}

std::string CoefPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c.sign() < 0;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    const Rational mag = c.abs();
    std::string body;
    if (!mag.is_one() || m.is_one()) body = mag.str();
    for (const auto& [v, e] : m.factors()) {
      if (!body.empty()) body += "*";
      body += v.name();
      if (e > 1) body += "^" + std::to_string(e);
    }
    out += body;
  }
  return out;
}

}  // namespace gwdn
