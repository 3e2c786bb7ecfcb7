#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ehz/core/laurent_poly.hpp"

namespace ehz {

// Polynomial in t with Laurent coefficients in q. Keys are (q-exponent, t-exponent).
class BivariatePoly {
 public:
  using Key = std::pair<int, int>;
  using Terms = std::map<Key, Rational>;

  BivariatePoly() = default;
  BivariatePoly(const Rational& c);  // NOLINT(implicit)
  BivariatePoly(long c) : BivariatePoly(Rational(c)) {}  // NOLINT(implicit)

  static BivariatePoly monomial(int qe, int te, const Rational& c = 1);
  // 1 - q^a t^b
  static BivariatePoly one_minus(int a, int b);
  // a(q) t^te
  static BivariatePoly from_q_poly(const LaurentPoly& a, int te = 0);
  static BivariatePoly from_t_coeffs(const std::vector<LaurentPoly>& c);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(int qe, int te) const;
  void add_term(int qe, int te, const Rational& c);

  int t_degree() const;
  int min_t() const;
  int min_q() const;
  int max_q() const;
  // gcd of all t-exponents (0 for the zero polynomial and for constants)
  int t_exponent_gcd() const;
  std::vector<LaurentPoly> t_coeffs() const;

  BivariatePoly& operator+=(const BivariatePoly& o);
  BivariatePoly& operator-=(const BivariatePoly& o);
  BivariatePoly& operator*=(const Rational& c);
  friend BivariatePoly operator+(BivariatePoly a, const BivariatePoly& b) { return a += b; }
  friend BivariatePoly operator-(BivariatePoly a, const BivariatePoly& b) { return a -= b; }
  friend BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b);
  friend BivariatePoly operator*(BivariatePoly a, const Rational& c) { return a *= c; }
  BivariatePoly operator-() const;
  friend bool operator==(const BivariatePoly& a, const BivariatePoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const BivariatePoly& a, const BivariatePoly& b) { return !(a == b); }

  BivariatePoly times_monomial(int qe, int te) const;
  BivariatePoly substitute_q_inverse() const;
  // exponent map (a,b) -> f(a,b); used for t -> t^k, t^n -> q^c t^n, ...
  BivariatePoly map_exponents(const std::function<Key(int, int)>& f) const;
  Rational eval(const Rational& q, const Rational& t) const;
  LaurentPoly eval_t(const Rational& t) const;  // stays symbolic in q

  std::string to_string() const;
  std::string to_latex() const;

 private:
  Terms terms_;
};

BivariatePoly pow(const BivariatePoly& a, unsigned e);

}  // namespace ehz
