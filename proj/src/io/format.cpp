#include "gwdn/io.hpp"

#include <sstream>

namespace gwdn {

namespace {

struct Style {
  bool tex;
  std::string times;
  std::string open;
  std::string close;
};

const Style kText{false, "*", "(", ")"};
const Style kTex{true, " ", "\\left(", "\\right)"};

std::string power(const std::string& base, long e, const Style& st) {
  if (e == 1) return base;
  return base + "^" + (st.tex ? "{" + std::to_string(e) + "}" : std::to_string(e));
}

std::string rational_tex(const Rational& r) {
  if (r.is_integer()) return r.str();
  return "\\frac{" + r.value().get_num().get_str() + "}{" + r.value().get_den().get_str() + "}";
}

std::string var_tex(const CoefVar& v) {
  if (v.i < 10 && v.j < 10) return "a_{" + std::to_string(v.i) + std::to_string(v.j) + "}";
  return "a_{" + std::to_string(v.i) + "," + std::to_string(v.j) + "}";
}

/// Sign and body of one atom coef * suffix; multi-term coefficients are parenthesized.
std::pair<bool, std::string> atom(const CoefPoly& c, const std::vector<std::string>& suffix,
                                  const Style& st) {
  std::string tail;
  for (const auto& s : suffix) tail += (tail.empty() ? "" : st.times) + s;
  if (c.size() > 1) {
    const std::string inner = st.tex ? latex(c) : c.str();
    return {false, st.open + inner + st.close + (tail.empty() ? "" : st.times + tail)};
  }
  const auto& [m, r] = *c.terms().begin();
  std::string body;
  const Rational mag = r.abs();
  if (!mag.is_one() || (m.is_one() && tail.empty())) body = st.tex ? rational_tex(mag) : mag.str();
  for (const auto& [v, e] : m.factors())
    body += (body.empty() ? "" : st.times) + power(st.tex ? var_tex(v) : v.name(), e, st);
  if (!tail.empty()) body += (body.empty() ? "" : st.times) + tail;
  return {r.sign() < 0, body};
}

void append(std::string& out, const std::pair<bool, std::string>& a) {
  if (out.empty())
    out = (a.first ? "-" : "") + a.second;
  else
    out += (a.first ? " - " : " + ") + a.second;
}

std::string operator_text(const QDOperator& op, const Style& st) {
  std::string out;
  for (const auto& [i, p] : op.terms())
    for (int k = p.degree(); k >= 0; --k) {
      const CoefPoly& c = p.coeff(static_cast<std::size_t>(k));
      if (c.is_zero()) continue;
      std::vector<std::string> suffix;
      if (i != 0) suffix.push_back(power("q", i, st));
      if (k != 0) suffix.push_back(power("D", k, st));
      append(out, atom(c, suffix, st));
    }
  return out.empty() ? "0" : out;
}

std::string coefficient(const CoefPoly& c, const Style& st) { return st.tex ? latex(c) : c.str(); }

std::string series_text(const PerturbedSeries& s, const Style& st) {
  std::ostringstream out;
  for (int m = 0; m <= s.q_max(); ++m)
    for (int i = 0; i < s.h_max(); ++i) {
      const CoefPoly& c = s.at(i, m);
      if (c.is_zero()) continue;
      std::string key = "q^" + std::to_string(m);
      if (s.h_max() > 1) key += " h^" + std::to_string(i);
      if (st.tex)
        out << "[" << key << "] &= " << coefficient(c, st) << " \\\\\n";
      else
        out << key << ": " << coefficient(c, st) << "\n";
    }
  return out.str();
}

std::string logs_text(const std::vector<LogSolution>& sols, const Style& st) {
  std::ostringstream out;
  for (const auto& sol : sols) {
    out << (st.tex ? "% S_" : "S_") << sol.k << ":\n";
    for (std::size_t i = 0; i < sol.components.size(); ++i)
      for (std::size_t m = 0; m < sol.components[i].size(); ++m) {
        const CoefPoly& c = sol.components[i][m];
        if (c.is_zero()) continue;
        const std::string key = "t^" + std::to_string(i) + " q^" + std::to_string(m);
        if (st.tex)
          out << "[" << key << "] &= " << coefficient(c, st) << " \\\\\n";
        else
          out << "  " << key << ": " << coefficient(c, st) << "\n";
      }
  }
  return out.str();
}

}  // namespace

std::string format_operator(const QDOperator& op) { return operator_text(op, kText); }

std::string latex(const CoefPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [m, r] : p.terms()) append(out, atom(CoefPoly::monomial(r, m), {}, kTex));
  return out;
}

std::string latex(const QDOperator& op) { return operator_text(op, kTex); }

std::string format_series(const PerturbedSeries& s) { return series_text(s, kText); }
std::string latex(const PerturbedSeries& s) { return series_text(s, kTex); }

std::string format_log_solutions(const std::vector<LogSolution>& sols) {
  return logs_text(sols, kText);
}
std::string latex(const std::vector<LogSolution>& sols) { return logs_text(sols, kTex); }

}  // namespace gwdn
