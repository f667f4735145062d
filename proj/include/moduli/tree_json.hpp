#pragma once

#include <json.hpp>

#include "moduli/trees.hpp"

namespace moduli {

// Tree wire format. Complex:
//   {"vertices":[0,1],"edges":[[0,1]],"leaves":{"1":0,"2":0,"3":1,"4":1}}
// Real trees add a "real" member:
//   {"real":{"involution":{"0":0,...},"realLeaves":{"1":0,...},
//            "pairs":{"1":{"plus":1,"minus":2},...}}}
// Output is canonical-form deterministic.

nlohmann::json tree_to_json(const ComplexStableTree& t);
nlohmann::json tree_to_json(const RealStableTree& t);

bool json_is_real_tree(const nlohmann::json& j);
ComplexStableTree complex_tree_from_json(const nlohmann::json& j);
RealStableTree real_tree_from_json(const nlohmann::json& j);

}  // namespace moduli
