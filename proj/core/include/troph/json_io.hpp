#pragma once

// JSON schemas for the file-facing types.
//   TropPoly:    [{"exp": [ints], "coef": "p/q" | "-inf"}, ...]
//   KPoly:       [{"exp": [ints], "coef": "<field element text>"}, ...]
//   GradedIdeal: {"n": int, "generators": [KPoly, ...]}

#include <string>

#include "troph/polyring.hpp"
#include "troph/tropical.hpp"

namespace troph {

std::string trop_poly_to_json(const TropPoly& phi);
TropPoly trop_poly_from_json(const std::string& text);

std::string kpoly_to_json(const KPoly& f);
KPoly kpoly_from_json(const std::string& text);

std::string ideal_to_json(const GradedIdeal& I);
GradedIdeal ideal_from_json(const std::string& text);

}  // namespace troph
