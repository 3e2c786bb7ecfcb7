#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ehz/core/rational.hpp"

namespace ehz {

// Univariate Laurent polynomial over Q. Zero coefficients are never stored.
class LaurentPoly {
 public:
  using Terms = std::map<int, Rational>;

  LaurentPoly() = default;
  LaurentPoly(const Rational& c);  // NOLINT(implicit)
  LaurentPoly(long c) : LaurentPoly(Rational(c)) {}  // NOLINT(implicit)

  static LaurentPoly monomial(int e, const Rational& c = 1);
  // coefficients c[0] + c[1] Y + ... shifted by Y^lowest
  static LaurentPoly from_coeffs(const std::vector<long>& c, int lowest = 0);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  int degree() const;      // requires nonzero
  int min_degree() const;  // requires nonzero
  Rational coeff(int e) const;
  Rational leading_coeff() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Rational& c);
  void add_term(int e, const Rational& c);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
  friend LaurentPoly operator*(const Rational& c, LaurentPoly a) { return a *= c; }
  LaurentPoly operator-() const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  LaurentPoly shifted(int k) const;         // times Y^k
  LaurentPoly compose_power(int k) const;   // Y -> Y^k, k != 0
  Rational eval(const Rational& y) const;
  bool is_polynomial() const { return is_zero() || min_degree() >= 0; }
  bool is_palindromic() const;
  bool has_integer_coeffs() const;
  bool has_nonnegative_coeffs() const;

  std::string to_string(const std::string& var = "Y") const;
  std::string to_latex(const std::string& var = "Y") const;

 private:
  Terms terms_;
};

LaurentPoly pow(const LaurentPoly& a, unsigned e);

// Quotient and remainder in Q[Y] after moving both operands to polynomials with
// nonzero constant term (powers of Y are units). Remainder zero iff b | a.
std::pair<LaurentPoly, LaurentPoly> divmod(const LaurentPoly& a, const LaurentPoly& b);
std::optional<LaurentPoly> exact_div(const LaurentPoly& a, const LaurentPoly& b);

// gcd in Q[Y, 1/Y]: a polynomial with nonzero constant term and leading coefficient 1.
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace ehz
