#pragma once

#include "json.hpp"
#include "ortho/jdt.hpp"
#include "ortho/schensted.hpp"

namespace ortho {

using json = nlohmann::json;

json to_json(const Tabloid& t);
Tabloid tabloid_from_json(const json& j);

json to_json(LieType t, const Shape& s);
Shape shape_from_json(const json& j);

json to_json(const OscillatingTableau& q);
OscillatingTableau oscillating_from_json(const json& j);

json to_json(const SkewTableau& t);
SkewTableau skew_from_json(const json& j);

LieType lietype_from_json(const json& j);

}  // namespace ortho
