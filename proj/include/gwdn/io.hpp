#pragma once

#include "gwdn/dnbuild.hpp"
#include "gwdn/gwsymbol.hpp"
#include "gwdn/qdoperator.hpp"
#include "gwdn/series.hpp"

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace gwdn {

/// Expressions over the a_i_j, q and D with + - * / ^ and parentheses; D q = q (D + 1).
/// Division only by nonzero rational constants. Throws ParseError.
QDOperator parse_operator(std::string_view text);
/// As parse_operator, rejecting anything that involves q or D.
CoefPoly parse_coefpoly(std::string_view text);

/// Canonical text: atoms coef*q^i*D^k, ascending in q, descending in D.
std::string format_operator(const QDOperator& op);
std::string latex(const CoefPoly& p);
std::string latex(const QDOperator& op);

/// One line per nonzero coefficient, "q^m h^i: c" (the h part omitted when h_max = 1).
std::string format_series(const PerturbedSeries& s);
std::string latex(const PerturbedSeries& s);
/// "S_k:" followed by "t^i q^m: c" lines.
std::string format_log_solutions(const std::vector<LogSolution>& sols);
std::string latex(const std::vector<LogSolution>& sols);

nlohmann::json to_json(const QDOperator& op);
nlohmann::json to_json(const PerturbedSeries& s);
nlohmann::json to_json(const std::vector<LogSolution>& sols);
nlohmann::json to_json(const GWSymbol& s);
nlohmann::json to_json(const Specialization& s);

/// Inverse of to_json; throw ParseError on malformed input.
QDOperator operator_from_json(const nlohmann::json& j);
PerturbedSeries series_from_json(const nlohmann::json& j);
std::vector<LogSolution> log_solutions_from_json(const nlohmann::json& j);
GWSymbol symbol_from_json(const nlohmann::json& j);
Specialization specialization_from_json(const nlohmann::json& j);

}  // namespace gwdn
