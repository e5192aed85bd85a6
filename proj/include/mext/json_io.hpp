#pragma once

#include <json.hpp>

#include "mext/counting.hpp"
#include "mext/lfsr.hpp"
#include "mext/synthesis.hpp"

namespace mext {

inline constexpr const char* kVersion = "0.1.0";

using json = nlohmann::json;

// Matrix form: {"rows": r, "cols": c, "q": p, "data": [[row], [row], ...]}
json mat_to_json(const Mat& m);
Mat mat_from_json(const json& j);

// Polynomials travel as little-endian coefficient arrays.
json poly_to_json(const Poly& p);
Poly poly_from_json(PrimeField f, const json& j);

// {"q": p, "minpoly": [...], "state": <matrix>}
json multiseq_to_json(const MultiseqState& s);
MultiseqState multiseq_from_json(const json& j);

// {"q": p, "m": m, "b": b, "blocks": [<matrix>, ...]}
json lfsr_to_json(const LfsrSpec& spec);
LfsrSpec lfsr_from_json(const json& j);

// {"initial_state": <matrix>, "appended": [[d...], ...]}
json choices_to_json(const ChoiceScript& c);
ChoiceScript choices_from_json(const json& j);

// {"polys": {"3": [...], "4": [...], ...}}; values accept the text form too.
json ladder_to_json(const PolyLadder& ladder);
PolyLadder ladder_from_json(PrimeField f, const json& j);

// {"formula": x, "oracle": y|null, "match": bool|null, "parameters": {...}}
// Values that fit 64 bits are plain JSON numbers, larger ones decimal strings.
json count_report_to_json(const CountReport& report);

json biguint_to_json(const BigUint& v);

json lfsr_report_to_json(const LfsrReport& report);

}  // namespace mext
