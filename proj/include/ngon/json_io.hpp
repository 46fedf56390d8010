#pragma once

// JSON encoding of every public value type. Readers throw ParseError on any
// schema violation; writers produce a fixed key order.

#include <string>

#include <nlohmann/json.hpp>

#include "ngon/compat_checker.hpp"
#include "ngon/hn_engine.hpp"
#include "ngon/moduli_classifier.hpp"

namespace ngon::io {

using Json = nlohmann::ordered_json;

/// Parses text, reporting the line of a syntax error in the ParseError message.
Json parse_text(const std::string& text);

Json to_json(const KClass& k);
Json to_json(ChargeVec c);
Json to_json(const PhasePoint& p);
Json to_json(const Slope& s);
Json to_json(const IntMat2& m);
Json to_json(const SL2Mat& m);
Json to_json(const CuspClass& c);
Json to_json(const IntMatrix& m);
Json to_json(const KAuto& a);
Json to_json(const CompatReport& r);
Json to_json(const Label& l);
Json to_json(const Summand& s);
Json to_json(const SheafObject& s);
Json to_json(const HNResult& h);
Json to_json(const HNPolygon& p);
Json to_json(const ModuliDescription& d);

KClass kclass_from_json(const Json& j);
ChargeVec charge_from_json(const Json& j);
PhasePoint phase_from_json(const Json& j);
Slope slope_from_json(const Json& j);
SL2Mat sl2_from_json(const Json& j);
IntMatrix matrix_from_json(const Json& j);
KAuto kauto_from_json(const Json& j);
Summand summand_from_json(const Json& j, int n);
SheafObject sheaf_from_json(const Json& j);

} // namespace ngon::io
