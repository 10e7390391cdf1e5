#pragma once

// {"basis":"falling","coeffs":["0","1","1/2"]}
// Coefficients are strings so that no value passes through floating point.

#include "factorial_transforms/polynomial.hpp"

#include <json.hpp>

#include <string>

namespace ft {

inline nlohmann::json to_json(const BasisPolynomial& p) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(to_string(c));
  return {{"basis", std::string(to_string(p.basis()))}, {"coeffs", coeffs}};
}

inline BasisPolynomial polynomial_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("polynomial JSON must be an object");
  if (!j.contains("basis") || !j.at("basis").is_string()) throw ParseError("polynomial JSON needs a string 'basis'");
  if (!j.contains("coeffs") || !j.at("coeffs").is_array()) throw ParseError("polynomial JSON needs an array 'coeffs'");
  for (const auto& item : j.items()) {
    if (item.key() != "basis" && item.key() != "coeffs") throw ParseError("unexpected key '" + item.key() + "'");
  }
  Basis basis = parse_basis(j.at("basis").get<std::string>());
  std::vector<Rational> coeffs;
  for (const auto& c : j.at("coeffs")) {
    if (c.is_string()) {
      coeffs.push_back(parse_rational(c.get<std::string>()));
    } else if (c.is_number_integer()) {
      coeffs.emplace_back(c.get<long long>());
    } else {
      throw ParseError("coefficients must be rational strings such as \"3/4\"");
    }
  }
  return BasisPolynomial(basis, std::move(coeffs));
}

inline BasisPolynomial parse_polynomial(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid polynomial JSON: ") + e.what());
  }
  return polynomial_from_json(j);
}

inline std::string dump_polynomial(const BasisPolynomial& p) { return to_json(p).dump(); }

}  // namespace ft
