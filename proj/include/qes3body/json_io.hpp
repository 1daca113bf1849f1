#pragma once

#include <json.hpp>

#include "qes3body/diff_operator.hpp"

namespace qes3body {

using json = nlohmann::ordered_json;

/// Canonical JSON for a polynomial: terms in canonical monomial order, big
/// integers as decimal strings. Round-trips bit-exact.
inline json poly_terms_to_json(const Polynomial& p) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) {
    terms.push_back({{"d", {m[0], m[1], m[2]}},
                     {"num", rational_num(c).str()},
                     {"den", rational_den(c).str()}});
  }
  return terms;
}

inline json poly_to_json(const Polynomial& p) {
  return {{"chart", chart_name(p.chart())}, {"terms", poly_terms_to_json(p)}};
}

inline Polynomial poly_terms_from_json(Chart chart, const json& terms) {
  Polynomial p(chart);
  for (const auto& t : terms) {
    MultiIndex m{t.at("d").at(0).get<int>(), t.at("d").at(1).get<int>(),
                 t.at("d").at(2).get<int>()};
    Rational c = make_rational(BigInt(t.at("num").get<std::string>()),
                               BigInt(t.at("den").get<std::string>()));
    p += Polynomial::monomial(chart, m, c);
  }
  return p;
}

inline Polynomial poly_from_json(const json& j) {
  return poly_terms_from_json(chart_from_name(j.at("chart").get<std::string>()),
                              j.at("terms"));
}

/// Canonical JSON for an operator: each term carries the derivative orders in
/// "d" and the coefficient as numerator/denominator polynomial term arrays.
inline json op_to_json(const DiffOperator& op) {
  json terms = json::array();
  for (const auto& [m, c] : op.terms()) {
    terms.push_back({{"d", {m[0], m[1], m[2]}},
                     {"num", poly_terms_to_json(c.num())},
                     {"den", poly_terms_to_json(c.den())}});
  }
  return {{"chart", chart_name(op.chart())}, {"terms", terms}};
}

inline DiffOperator op_from_json(const json& j) {
  Chart chart = chart_from_name(j.at("chart").get<std::string>());
  DiffOperator op(chart);
  for (const auto& t : j.at("terms")) {
    MultiIndex m{t.at("d").at(0).get<int>(), t.at("d").at(1).get<int>(),
                 t.at("d").at(2).get<int>()};
    Polynomial num = poly_terms_from_json(chart, t.at("num"));
    Polynomial den = poly_terms_from_json(chart, t.at("den"));
    op.add_term(m, RationalFunction(std::move(num), std::move(den)));
  }
  return op;
}

}  // namespace qes3body
