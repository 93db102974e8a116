#pragma once

#include <variant>

#include <json.hpp>

#include "moorediag/diagrams.hpp"

namespace moorediag {

using Json = nlohmann::ordered_json;

Json mat_to_json(const Mat& m);
Mat mat_from_json(const Json& j);

/// {"V": literal, "M": literal, "U": literal, "i": matrix, "p": matrix}
Json extension_to_json(const Extension& e);
Extension extension_from_json(const Json& j);

/// {"kind": "moore"|"eta"|"eed", "A": ..., "B": ..., "C": ..., maps...}
/// with a stable field order for golden tests.
Json diagram_to_json(const MooreDiagram& d);
Json diagram_to_json(const EtaDiagram& d);
Json diagram_to_json(const ExtEtaDiagram& d);

using AnyDiagram = std::variant<MooreDiagram, EtaDiagram, ExtEtaDiagram>;
AnyDiagram diagram_from_json(const Json& j);

}  // namespace moorediag
