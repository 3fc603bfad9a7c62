#pragma once

#include <json.hpp>

#include "fqm/fqm.hpp"
#include "fqm/lattice.hpp"

namespace fqm {

using json = nlohmann::json;

// Integers are emitted as JSON numbers when they fit in 64 bits and as
// decimal strings beyond; both forms are accepted on input.
json zz_to_json(const ZZ& n);
ZZ zz_from_json(const json& j);

// {"orders":[d...], "q":["num/den"...], "b":[["num/den"...]...]}
json fqm_to_json(const Fqm& m);
Fqm fqm_from_json(const json& j);

// {"tag":"A","p":3,"r":2,"a":1} | {"tag":"B","r":1} | {"tag":"C","r":3}
json component_to_json(const JordanComponent& c);
JordanComponent component_from_json(const json& j);
json components_to_json(const std::vector<JordanComponent>& cs);
std::vector<JordanComponent> components_from_json(const json& j);

// {"gram":[[...]...]}
json lattice_to_json(const Lattice& l);
Lattice lattice_from_json(const json& j);

json element_to_json(const Element& e);

}  // namespace fqm
