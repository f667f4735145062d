#pragma once

#include <json.hpp>

#include "moduli/operads.hpp"

namespace moduli {

// Element wire format:
//   {"flavor":"complex","arity":3,"terms":[{"coeff":"3/2","tree":{...}}]}
//   {"flavor":"complex","arity":1,"scalar":"1"}
//   {"flavor":"real","k":2,"l":1,"terms":[...]}
//   {"flavor":"conjugate","arity":2,"terms":[...]}
// Trees use the tree wire format.

nlohmann::json element_to_json(const StrataSum& s);
StrataSum element_from_json(const nlohmann::json& j);

}  // namespace moduli
