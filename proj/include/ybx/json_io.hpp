#pragma once

#include <json.hpp>

#include <string>

#include "ybx/cross.hpp"
#include "ybx/hopf.hpp"
#include "ybx/matrix.hpp"
#include "ybx/report.hpp"
#include "ybx/set_maps.hpp"
#include "ybx/words.hpp"

namespace ybx {

// Plain (map-backed) json: object keys serialize in sorted order, which makes
// dump() output canonical and therefore safe to digest and byte-compare.
using Json = nlohmann::json;

Json read_json_file(const std::string& path);  // FileNotFound / ParseError
void write_json_file(const std::string& path, const Json& j);
Json parse_json_text(const std::string& text);  // ParseError
std::string canonical_json(const Json& j);      // sorted keys, minimal spacing

// The "kind" tag of an object; ParseError when absent or not a string.
std::string json_kind(const Json& j);

// {"kind":"set_yb","size":n,"table":[[x',y'],...]}, flat input index x*n+y.
FiniteYBMap yb_map_from_json(const Json& j);
Json yb_map_to_json(const FiniteYBMap& m);

// {"kind":"binop","size":n,"table":[...]} with table[x*n+y] = x <| y.
BinaryOpTable binop_from_json(const Json& j);
Json binop_to_json(const BinaryOpTable& op);

// {"kind":"group","size":n,"mult":[...]} row-major, identity at index 0.
GroupTable group_from_json(const Json& j);
Json group_to_json(const GroupTable& g);

// {"kind":"mapping","domain":d,"codomain":c,"table":[...]}.
SetMapping mapping_from_json(const Json& j);
Json mapping_to_json(const SetMapping& f);

// {"kind":"cross","size_c":m,"size_b":n,"table":[[c',b'],...]}, flat index c*n+b.
CrossMap cross_from_json(const Json& j);
Json cross_to_json(const CrossMap& r);

// {"kind":"matrix","rows":r,"cols":c,"entries":[...]} row-major; entries are
// rationals as "p/q" strings (integers also accepted on input).
Mat matrix_from_json(const Json& j);
Json matrix_to_json(const Mat& m);

// {"kind":"elem2","rows":dA,"cols":dB,"coeffs":[...]}: a two-leg element of
// A (x) B by coefficient matrix.
Mat elem2_from_json(const Json& j);
Json elem2_to_json(const Mat& m);

// {"kind":"hopf","dim":d,"mult":[...],"unit":[...],"comult":[...],
//  "counit":[...],"antipode":[...]}; antipode is row-major d*d.
HopfData hopf_from_json(const Json& j);
Json hopf_to_json(const HopfData& h);

// A word is an array of {"gen":"lambda","i":1,"j":2,"e":1}; "j" may be omitted
// for single-indexed families and "e" defaults to 1.  A wrapper object
// {"kind":"word","letters":[...]} is also accepted.
Word word_from_json(const Json& j);
Json word_to_json(const Word& w);

// {"kind":"presentation","name":...,"n":...,"generators":[...],"relators":[[...],...]}.
Json presentation_to_json(const Presentation& p);

// Extension output: a standard set_yb object carrying the pair layout used to
// flatten (b, c) -> b*|C| + c.
Json extension_to_json(const FiniteYBMap& ext, int size_b, int size_c);

// Serialized check outcome: passed, relations_checked, failures and info.
Json report_to_json(const CheckReport& r);

}  // namespace ybx
