#pragma once

#include <string>

#include <json.hpp>

#include "baire/decompose.hpp"
#include "baire/oscillation.hpp"
#include "baire/witness.hpp"

namespace baire {

using nlohmann::json;

// Trees: a leaf is {"leaf":true}, any other node {"prefix":[...],"cycle":[...]}
// (an empty cycle is an isolated point with clopen prefix parts). Marks add
// "mark":bool and functions "value":"p/q" at every node. Parse errors carry
// the JSON path of the offending element.

json to_json(const Rat& r);
Rat rat_from_json(const json& j, const std::string& path = "$");

json to_json(const Space& s);
Space space_from_json(const json& j);

json to_json(const Mark& m);
Mark mark_from_json(const json& j);
/// Also requires the mark to sit on `space`.
Mark mark_from_json(const json& j, const Space& space);

json to_json(const PatternFn& f);
PatternFn fn_from_json(const json& j);

// Inside certificates and reports decorations are flat preorder tables:
// functions as arrays of rational strings, marks as strings of '0'/'1'.
json flat(const PatternFn& f);
json flat(const Mark& m);
PatternFn flat_fn(const json& j, const Space& space, const std::string& path);
Mark flat_mark(const json& j, const Space& space, const std::string& path);

json to_json(const DNormCertificate& c);
CertPtr cert_from_json(const json& j, const Space& space);

json to_json(const DiffClosed& d);
json to_json(const SimpleDCS& s);
json to_json(const OscReport& r);
json to_json(const DerivationTrail& t);
json to_json(const IndexReport& r);
json to_json(const DNormBounds& b);
json to_json(const CheckResult& r);
json to_json(const StaircaseResult& s);
json to_json(const SDApprox& a);
json to_json(const SdVerdict& v);
json to_json(const WitnessReport& w);
json to_json(const Prop15Report& p);

/// FNV-1a over the compact dump, as 16 hex digits.
std::string digest(const json& j);

}  // namespace baire
