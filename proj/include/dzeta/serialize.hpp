#ifndef DZETA_SERIALIZE_HPP
#define DZETA_SERIALIZE_HPP

#include <string>

#include <json.hpp>

#include "dzeta/enclosure.hpp"
#include "dzeta/zeta_expr.hpp"

namespace dzeta {

// ZetaExpr wire format (stable):
//   {"terms":[{"coeff":"p/q","atoms":[{"arg":n,"sign":1|-1}]}],"flags":[...]}
// Coefficients always carry an explicit denominator.  parse/emit round-trip
// exactly for normalized expressions.
nlohmann::ordered_json expr_to_json(const ZetaExpr& e);
ZetaExpr expr_from_json(const nlohmann::json& j);

// Enclosure wire format: {"value":"<decimal>","error_bound":"<decimal>"},
// decimals carry 21 significant digits so the long double round-trips
// exactly.  The human-readable form prints only the digits the bound
// guarantees.
nlohmann::ordered_json enclosure_to_json(const Enclosure& e);
Enclosure enclosure_from_json(const nlohmann::json& j);

std::string expr_to_text(const ZetaExpr& e);
// pi_powers rewrites zeta(2k;+1) atoms as rational multiples of pi^{2k}
std::string expr_to_latex(const ZetaExpr& e, bool pi_powers = false);

std::string enclosure_to_text(const Enclosure& e);

// 21 significant digits: exact round-trip through parse_long_double
std::string format_long_double_roundtrip(long double v);
long double parse_long_double(const std::string& s);

} // namespace dzeta

#endif
