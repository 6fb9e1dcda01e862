#pragma once

#include <string>

#include <json.hpp>

#include "spin7/cayley.hpp"
#include "spin7/scenario.hpp"

namespace spin7 {

enum class EmitFormat { Text, Json };

EmitFormat parse_format(const std::string& s); // "text" | "json"

/// Fixed-width trace table with conditions, assumptions, warnings, the final
/// block and any expected-value comparisons.
std::string emit_text(const Report& r);

nlohmann::ordered_json report_to_json(const Report& r);
Report report_from_json(const nlohmann::ordered_json& j);

bool operator==(const BlockInvariants& a, const BlockInvariants& b);
bool operator==(const GluingReport& a, const GluingReport& b);
bool operator==(const Report& a, const Report& b);

std::string emit_text(const CayleyReport& r);
nlohmann::ordered_json cayley_to_json(const CayleyReport& r);

std::string emit(const Report& r, EmitFormat f);

} // namespace spin7
