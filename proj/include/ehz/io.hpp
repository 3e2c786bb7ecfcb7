#pragma once

#include <iosfwd>
#include <string>

#include "ehz/analytics.hpp"
#include "ehz/hecke.hpp"
#include "json.hpp"

namespace ehz {

using Json = nlohmann::ordered_json;

// {"ambient": n, "vertices": [[int, ...], ...]}; RangeError on malformed input
LatticePolytope polytope_from_json(const Json& j);
Json polytope_to_json(const LatticePolytope& P);
LatticePolytope read_polytope(std::istream& in);

// exact decimal like "1e-6" or "0.25", or "a/b"
Rational parse_decimal(const std::string& s);
// fixed-point digits of x, truncated toward zero
std::string decimal_string(const Rational& x, int digits);

Json to_json(const LaurentPoly& p);   // [[exponent, "c"], ...]
Json to_json(const BivariatePoly& p); // [[q-exp, t-exp, "c"], ...]
Json to_json(const RationalFunctionQT& f);
Json to_json(const LocalZeta& z);
Json to_json(const Interval& x);
Json to_json(const AsymptoticReport& r);
Json to_json(const DirichletCoefficients& c);
std::string to_csv(const DirichletCoefficients& c);

inline std::string type_name(ZetaType t) { return t == ZetaType::A ? "A" : "C"; }

}  // namespace ehz
