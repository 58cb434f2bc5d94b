#pragma once

#include <nlohmann/json.hpp>

#include "trilink/braid.hpp"
#include "trilink/invariants.hpp"
#include "trilink/linking.hpp"
#include "trilink/rewriting.hpp"
#include "trilink/tensor.hpp"

namespace trilink {

// Canonical emitters: fixed key order, integers only.
using Json = nlohmann::ordered_json;

Json to_json(const LinkingMatrix& matrix);
Json to_json(const TripleLinkingTensor& tensor);
Json to_json(const BoundReport& report);
Json to_json(const TriplePointRecord& record);
Json to_json(const ValidationReport& report);

/// Reads {"m":..,"entries":[{"i","j","k","v"}...]}. Throws parse_error.
TripleLinkingTensor tensor_from_json(const Json& json);

/// Compact (indent < 0) or indented text with a trailing LF.
std::string dump(const Json& json, int indent = -1);

}  // namespace trilink
