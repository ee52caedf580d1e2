#pragma once

#include <json.hpp>

#include "fliplab/signotope.hpp"
#include "fliplab/wiring.hpp"

namespace fliplab {

using json = nlohmann::json;

// {"n": int, "signs": "+-+..."} with signs in lex triple order.
json signotope_to_json(const Signotope& s);
Signotope signotope_from_json(const json& j);

// {"n": int, "word": [p, ...]} with 1-based swap positions.
json wiring_to_json(const WiringDiagram& w);
WiringDiagram wiring_from_json(const json& j);

}
