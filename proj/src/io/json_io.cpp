#include "gwdn/errors.hpp"
#include "gwdn/io.hpp"

namespace gwdn {

using nlohmann::json;

namespace {

template <typename F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed ") + what + " JSON: " + e.what());
  }
}

CoefVar parse_var_name(const std::string& name) {
  const CoefPoly p = parse_coefpoly(name);
  const auto vars = p.variables();
  if (vars.size() != 1 || !(p == CoefPoly::var(vars.begin()->i, vars.begin()->j)))
    throw ParseError("expected a variable name a_i_j, got '" + name + "'");
  return *vars.begin();
}

}  // namespace

json to_json(const QDOperator& op) {
  json terms = json::array();
  for (const auto& [i, p] : op.terms()) {
    json poly = json::array();
    for (const auto& c : p.coeffs()) poly.push_back(c.str());
    terms.push_back({{"q", i}, {"poly", poly}});
  }
  return {{"terms", terms}};
}

json to_json(const PerturbedSeries& s) {
  json coeffs = json::array();
  for (int m = 0; m <= s.q_max(); ++m)
    for (int i = 0; i < s.h_max(); ++i)
      if (!s.at(i, m).is_zero()) coeffs.push_back({{"h", i}, {"q", m}, {"poly", s.at(i, m).str()}});
  return {{"h_max", s.h_max()}, {"q_max", s.q_max()}, {"coeffs", coeffs}};
}

json to_json(const std::vector<LogSolution>& sols) {
  json out = json::array();
  for (const auto& sol : sols) {
    json comps = json::array();
    for (const auto& series : sol.components) {
      json row = json::array();
      for (const auto& c : series) row.push_back(c.str());
      comps.push_back(row);
    }
    out.push_back({{"k", sol.k}, {"components", comps}});
  }
  return out;
}

json to_json(const GWSymbol& s) {
  json heads = json::array();
  for (const auto& h : s.heads) heads.push_back({h.d, h.e});
  return {{"heads", heads}, {"tail", {s.tail.d, s.tail.e}}};
}

json to_json(const Specialization& s) {
  json assign = json::object();
  for (const auto& [v, r] : s.assignment) assign[v.name()] = r.str();
  return {{"assign", assign}};
}

QDOperator operator_from_json(const json& j) {
  return guarded("operator", [&] {
    QDOperator op;
    for (const auto& t : j.at("terms")) {
      std::vector<CoefPoly> coeffs;
      for (const auto& c : t.at("poly")) coeffs.push_back(parse_coefpoly(c.get<std::string>()));
      op.add_slice(t.at("q").get<int>(), DensePoly(std::move(coeffs)));
    }
    return op;
  });
}

PerturbedSeries series_from_json(const json& j) {
  return guarded("series", [&] {
    const int h_max = j.at("h_max").get<int>(), q_max = j.at("q_max").get<int>();
    if (h_max < 1 || q_max < 0) throw ParseError("series JSON needs h_max >= 1, q_max >= 0");
    PerturbedSeries s(h_max, q_max);
    for (const auto& c : j.at("coeffs")) {
      const int h = c.at("h").get<int>(), q = c.at("q").get<int>();
      if (h < 0 || h >= h_max || q < 0 || q > q_max) throw ParseError("series index out of range");
      s.at(h, q) = parse_coefpoly(c.at("poly").get<std::string>());
    }
    return s;
  });
}

std::vector<LogSolution> log_solutions_from_json(const json& j) {
  return guarded("log solution", [&] {
    std::vector<LogSolution> out;
    for (const auto& sol : j) {
      LogSolution s;
      s.k = sol.at("k").get<int>();
      for (const auto& row : sol.at("components")) {
        std::vector<CoefPoly> series;
        for (const auto& c : row) series.push_back(parse_coefpoly(c.get<std::string>()));
        s.components.push_back(std::move(series));
      }
      out.push_back(std::move(s));
    }
    return out;
  });
}

GWSymbol symbol_from_json(const json& j) {
  return guarded("symbol", [&] {
    GWSymbol s;
    for (const auto& h : j.at("heads")) s.heads.push_back({h.at(0).get<int>(), h.at(1).get<int>()});
    const auto& t = j.at("tail");
    s.tail = {t.at(0).get<int>(), t.at(1).get<int>()};
    return s;
  });
}

Specialization specialization_from_json(const json& j) {
  return guarded("specialization", [&] {
    Specialization s;
    for (const auto& [name, value] : j.at("assign").items()) {
      const std::string text = value.is_string() ? value.get<std::string>() : value.dump();
      s.assignment[parse_var_name(name)] = Rational::parse(text);
    }
    return s;
  });
}

}  // namespace gwdn
