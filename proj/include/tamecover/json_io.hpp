#pragma once

#include "tamecover/building.hpp"
#include "tamecover/dl.hpp"
#include "tamecover/forms.hpp"
#include "tamecover/torseur.hpp"

#include <json.hpp>

namespace tamecover {

using json = nlohmann::json;

// {"d":2,"n":6,"beta":[2,4],"iso":3,"deg":1,
//  "terms":[{"coeff":"3/2","exp":[1,-2],"I":[1]}]}
json to_json(const IsoForm& w);
IsoForm iso_form_from_json(const json& j);

// {"d":2,"n":6,"beta":[2,4],"deg":1,"coords":[{"a":0,"I":[1],"coeff":"3"}]}
json to_json(const CohomClass& cls);

// {"n":6,"a":1,"beta":[2,4]}
json to_json(const TorseurClass& c);
TorseurClass torseur_from_json(const json& j);

json to_json(const FreeActionReport& rep);
json to_json(const CechE1Report& rep);
json to_json(const TruncatedBuilding& b);

} // namespace tamecover
