#pragma once

#include "hopfren/laurent.hpp"

#include <json.hpp>

namespace hopfren {

// Polynomial: [{monomial: {sym: exp}, num: "p", den: "q"}], terms in
// canonical order. Rationals travel as decimal strings.
nlohmann::json to_json(const Polynomial &p);
Polynomial polynomial_from_json(const nlohmann::json &j);

// {min_pow, trunc_order, terms: [{pow, poly}]}; an exact series has
// trunc_order null.
nlohmann::json to_json(const LaurentSeries &x);
LaurentSeries series_from_json(const nlohmann::json &j);

} // namespace hopfren
