#pragma once

#include <json.hpp>

#include "odrc/cycles.hpp"
#include "odrc/harness.hpp"
#include "odrc/orienter.hpp"
#include "odrc/rainbow.hpp"

namespace odrc {

using Json = nlohmann::ordered_json;

// kInf becomes the string "inf".
Json distance_json(long long d);

Json to_json(const Graph& g, const CycleCoverReport& r);
Json to_json(const OrientTrace& t);
Json to_json(const OrientationReport& r);
Json to_json(const ColorTrace& t);
Json to_json(const RainbowCertificate& c);
Json to_json(const TheoremReport& r);

// Inverse of to_json(ColorTrace); throws Error on malformed input. Ears are
// checked against g later by CertificateBuilder.
ColorTrace color_trace_from_json(const Json& j);

}  // namespace odrc
