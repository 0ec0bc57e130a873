#pragma once

#include <json.hpp>

#include "sobolev/approximator.hpp"
#include "sobolev/polynomial.hpp"

namespace sobolev {

/// { "dimension": N, "terms": [ { "exp": [...], "coef": c }, ... ] } with
/// terms in graded-lex descending order.
nlohmann::json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const nlohmann::json& j);

/// { "errors": [ { "alpha": [...], "sup_error": e } ], "sigma": [ { "retention":
/// [...], "multiplicity": k, "bernstein_error": e } ] }
nlohmann::json error_report_to_json(const ErrorReport& report);

}  // namespace sobolev
