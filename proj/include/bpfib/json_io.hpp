#pragma once

#include <json.hpp>

#include "bpfib/mat2.hpp"
#include "bpfib/rational.hpp"
#include "bpfib/summation.hpp"

namespace bpfib {

// Rationals travel as "p/q" (or "p") strings so no precision is lost.

void to_json(nlohmann::json& j, const Rational& x);
void from_json(const nlohmann::json& j, Rational& x);

/// {"e11": "p/q", "e12": "p/q", "e21": "p/q", "e22": "p/q"}
void to_json(nlohmann::json& j, const Mat2& m);
void from_json(const nlohmann::json& j, Mat2& m);

/// {"n": int, "direct": Mat2, "closed": Mat2, "matches": bool}
void to_json(nlohmann::json& j, const SumReport& r);
void from_json(const nlohmann::json& j, SumReport& r);

}  // namespace bpfib
