#pragma once

// JSON and DOT encodings of every result type. Big integers are always
// decimal strings; counters that fit a machine word are JSON numbers.
// Each *_from_json inverts the matching to_json exactly.

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "ktinv/bratteli.hpp"
#include "ktinv/localization.hpp"
#include "ktinv/report.hpp"

namespace ktinv::io {

using nlohmann::json;

inline constexpr const char* kSchema = "ktinv/1";

/// "1,-2,0" -> {1, -2, 0}. Throws malformed_input on anything else.
std::vector<BigInt> parse_integer_list(std::string_view csv);
std::uint64_t parse_count(std::string_view text, const char* what);

json to_json(const BigInt& x);
BigInt bigint_from_json(const json& j);

json to_json(const RingElement& x);
RingElement ring_element_from_json(const json& j);

json to_json(const PositivityVerdict& v);
PositivityVerdict positivity_from_json(const json& j);

json to_json(const UnitVerdict& v);
UnitVerdict unit_from_json(const json& j);

json to_json(const PositiveUnitVerdict& v);
PositiveUnitVerdict positive_unit_from_json(const json& j);

json to_json(const DoublingResult& d);
DoublingResult doubling_from_json(const json& j);

json to_json(const HomotopyGroupDescriptor& d);
HomotopyGroupDescriptor descriptor_from_json(const json& j);

json to_json(const BratteliDiagram& d);
BratteliDiagram diagram_from_json(const json& j);

json to_json(const CollapseData& c);
CollapseData collapse_from_json(const json& j);

json to_json(const UnitCertificate& c);
UnitCertificate certificate_from_json(const json& j);

json to_json(const InvariantReport& r);
InvariantReport report_from_json(const json& j);

/// Adds the top-level "schema" field.
json document(json body);

/// Error payload {"schema","error","message"}.
json error_document(const std::string& kind, const std::string& message);

/// Graphviz digraph: one subgraph per level, node v_<level>_<char> labeled
/// "M_<b> (χ^<char>)", zero blocks omitted, edges labeled with the incidence
/// multiplicity.
std::string to_dot(const BratteliDiagram& d);

}  // namespace ktinv::io
