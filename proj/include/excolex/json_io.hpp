#pragma once

#include "excolex/betti.hpp"
#include "excolex/colex.hpp"

#include <json.hpp>

#include <string>

namespace excolex {

using nlohmann::json;

json to_json(Monomial u);
/// Accepts [1,3,4] or, with allow_text, "e1e3e4".
Monomial monomial_from_json(const json& j, bool allow_text = false);
/// Parses "e1e3e4" (whitespace and '*' separators are ignored).
Monomial monomial_from_text(const std::string& text);

/// {"n": 5, "generators": [[1,2],[1,3,4]]}
json to_json(const MonomialIdeal& ideal);
/// Raw generators are minimalized.
MonomialIdeal ideal_from_json(const json& j, bool allow_text = false);

/// {"m": 6, "J": {...}, "steps": [{"degree": 2, "chosen": [[1,2], ...]}]}
json to_json(const ColexResult& result);

/// Numbers that fit in 64 bits are emitted as JSON integers, larger ones as strings.
json to_json(const BigInt& value);

/// {"subject": "ideal", "i_max": 10, "rows": [{"i": 0, "by_j": {"2": 3}, "total": 4}, ...]}
json to_json(const BettiTable& table);

json to_json(const ComparisonVerdict& verdict);
json to_json(const RevlexConditionReport& report);

}  // namespace excolex
