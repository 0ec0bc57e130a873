#include "sobolev/json_io.hpp"

#include "sobolev/errors.hpp"

namespace sobolev {

nlohmann::json polynomial_to_json(const Polynomial& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"exp", e.orders()}, {"coef", c}});
  return {{"dimension", p.dimension()}, {"terms", std::move(terms)}};
}

Polynomial polynomial_from_json(const nlohmann::json& j) {
  try {
    const int dim = j.at("dimension").get<int>();
    Polynomial::Terms terms;
    for (const auto& t : j.at("terms")) {
      MultiIndex e(t.at("exp").get<std::vector<int>>());
      terms[e] += t.at("coef").get<double>();
    }
    return Polynomial(dim, std::move(terms));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed polynomial JSON: ") + e.what());
  }
}

nlohmann::json error_report_to_json(const ErrorReport& report) {
  nlohmann::json errors = nlohmann::json::array();
  for (const auto& e : report.errors) errors.push_back({{"alpha", e.alpha.orders()}, {"sup_error", e.sup_error}});
  nlohmann::json sigma = nlohmann::json::array();
  for (const auto& s : report.sigma) {
    sigma.push_back({{"retention", s.term.retention.orders()},
                     {"multiplicity", s.term.multiplicity},
                     {"bernstein_error", s.bernstein_error}});
  }
  return {{"errors", std::move(errors)}, {"sigma", std::move(sigma)}};
}

}  // namespace sobolev
