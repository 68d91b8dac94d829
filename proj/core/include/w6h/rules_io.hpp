#pragma once

#include <string>
#include <string_view>

#include "w6h/interrogative.hpp"

namespace w6h {

/// Reads a rule set from its JSON interchange form:
///   {"w6hVersion": 1, "rules": {"how": [["what"], ["which", "where"]], ...}}
/// Interrogatives missing from "rules" are independent. Throws Error on
/// malformed documents, unknown interrogative names, or a rule set that
/// fails validate_rules.
DependencyRuleSet rules_from_interchange(std::string_view json_text);

/// Inverse of rules_from_interchange; deterministic key order.
std::string rules_to_interchange(const DependencyRuleSet& rules);

} // namespace w6h
