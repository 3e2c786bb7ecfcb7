#include "ehz/io.hpp"

#include <istream>
#include <sstream>

#include "ehz/errors.hpp"

namespace ehz {

LatticePolytope polytope_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("ambient") || !j.contains("vertices"))
    throw RangeError("polytope JSON needs \"ambient\" and \"vertices\"");
  if (!j["ambient"].is_number_integer()) throw RangeError("\"ambient\" must be an integer");
  const int ambient = j["ambient"].get<int>();
  std::vector<std::vector<long>> verts;
  for (const auto& v : j["vertices"]) {
    if (!v.is_array()) throw RangeError("each vertex must be an array");
    std::vector<long> row;
    for (const auto& x : v) {
      if (!x.is_number_integer()) throw RangeError("vertex coordinates must be integers");
      row.push_back(x.get<long>());
    }
    if (static_cast<int>(row.size()) != ambient) throw RangeError("vertex length differs from \"ambient\"");
    verts.push_back(std::move(row));
  }
  return LatticePolytope::from_integer(ambient, verts);
}

Json polytope_to_json(const LatticePolytope& P) {
  Json verts = Json::array();
  for (const auto& v : P.vertices()) {
    Json row = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) row.push_back(v(i).get_str());
    verts.push_back(row);
  }
  return Json{{"ambient", P.ambient()}, {"vertices", verts}};
}

LatticePolytope read_polytope(std::istream& in) {
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw RangeError(std::string("polytope JSON: ") + e.what());
  }
  return polytope_from_json(j);
}

Rational parse_decimal(const std::string& s) {
  if (s.find('/') != std::string::npos) return parse_rational(s);
  size_t epos = s.find_first_of("eE");
  std::string mant = s.substr(0, epos);
  long exp10 = 0;
  if (epos != std::string::npos) {
    try {
      size_t used = 0;
      exp10 = std::stol(s.substr(epos + 1), &used);
      if (used != s.size() - epos - 1) throw RangeError("bad exponent");
    } catch (const std::logic_error&) {
      throw RangeError("not a decimal number: " + s);
    }
  }
  size_t dot = mant.find('.');
  if (dot != std::string::npos) {
    exp10 -= static_cast<long>(mant.size() - dot - 1);
    mant.erase(dot, 1);
  }
  if (mant.empty() || mant == "-" || mant == "+") throw RangeError("not a decimal number: " + s);
  Rational r = parse_rational(mant[0] == '+' ? mant.substr(1) : mant);
  return r * rpow(Rational(10), exp10);
}

std::string decimal_string(const Rational& x, int digits) {
  Integer scale = ipow(Integer(10), static_cast<unsigned long>(digits));
  Integer v = floor_div(abs(x) * scale);
  std::string s = v.get_str();
  if (static_cast<int>(s.size()) <= digits) s.insert(0, static_cast<size_t>(digits) + 1 - s.size(), '0');
  if (digits > 0) s.insert(s.size() - static_cast<size_t>(digits), ".");
  return (x < 0 ? "-" : "") + s;
}

Json to_json(const LaurentPoly& p) {
  Json a = Json::array();
  for (const auto& [e, c] : p.terms()) a.push_back(Json::array({e, c.get_str()}));
  return a;
}

Json to_json(const BivariatePoly& p) {
  Json a = Json::array();
  for (const auto& [k, c] : p.terms()) a.push_back(Json::array({k.first, k.second, c.get_str()}));
  return a;
}

Json to_json(const RationalFunctionQT& f) {
  return Json{{"text", f.to_string()}, {"num", to_json(f.num())}, {"den", to_json(f.den())}};
}

Json to_json(const LocalZeta& z) {
  Json factors = Json::array();
  for (const auto& b : z.factors) factors.push_back(Json::array({b.a, b.b}));
  return Json{{"type", type_name(z.type)},
              {"n", z.n},
              {"ell", z.ell},
              {"value", to_json(z.value)},
              {"numerator", to_json(z.numerator)},
              {"denominator_factors", factors}};
}

Json to_json(const Interval& x) {
  return Json{{"lo", x.lo.get_str()}, {"hi", x.hi.get_str()}, {"approx", decimal_string((x.lo + x.hi) / 2, 12)}};
}

Json to_json(const AsymptoticReport& r) {
  return Json{{"type", type_name(r.type)},
              {"n", r.n},
              {"ell", r.ell},
              {"abscissa", r.abscissa.get_str()},
              {"pole_order", r.pole_order},
              {"constant_lo", r.constant.lo.get_str()},
              {"constant_hi", r.constant.hi.get_str()},
              {"constant", decimal_string((r.constant.lo + r.constant.hi) / 2, 12)},
              {"tauberian", to_json(r.tauberian)},
              {"cross_check", to_json(r.cross_check)},
              {"route", r.route},
              {"cross_route", r.cross_route},
              {"zeta_values_used", r.zeta_values_used},
              {"conditional", r.conditional}};
}

Json to_json(const DirichletCoefficients& c) {
  Json table = Json::object();
  for (long m = 1; m <= c.M; ++m)
    if (c[m] != 0) table[std::to_string(m)] = c[m].get_str();
  return Json{{"type", type_name(c.type)}, {"n", c.n}, {"ell", c.ell}, {"max_index", c.M}, {"table", table}};
}

std::string to_csv(const DirichletCoefficients& c) {
  std::ostringstream os;
  os << "m,coefficient\n";
  for (long m = 1; m <= c.M; ++m) os << m << "," << c[m].get_str() << "\n";
  return os.str();
}

}  // namespace ehz
