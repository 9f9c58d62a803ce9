#pragma once

#include <string>

#include <json.hpp>

#include "lnec/code.hpp"
#include "lnec/network.hpp"
#include "lnec/primaries.hpp"

namespace lnec {

using Json = nlohmann::ordered_json;

inline constexpr int kCodeSchemaVersion = 1;

Json network_to_json(const Network& net);
Network network_from_json(const Json& j);

Json edge_set_to_json(const Network& net, const EdgeSet& set);

// Field, rate, the embedded network and every non-sink local kernel with
// explicit row and column labels. Rows of the source kernel are d'1..d'w.
Json code_to_json(const LnecCode& code);

// Accepts either the code object or any object carrying it under "code".
// The kernels are re-derived and every invariant re-checked.
LnecCode code_from_json(const Json& j);
LnecCode load_code(const std::string& path);

Json bound_to_json(const Network& net, const BoundReport& report);

}  // namespace lnec
