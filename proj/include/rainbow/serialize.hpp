#pragma once

#include <string>

#include "rainbow/formulas.hpp"
#include "rainbow/solvers.hpp"

namespace rainbow {

// Documented JSON forms (snake_case keys, stable key order).
std::string to_json(const ValidationReport& r);
std::string to_json(const BetaAudit& a);
std::string to_json(const C14FormulaValue& v);
std::string to_json(const BoundResult& b);
std::string to_json(const SolverResult& r);

} // namespace rainbow
