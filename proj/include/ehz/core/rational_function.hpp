#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ehz/core/bivariate_poly.hpp"

namespace ehz {

// Coefficients of t^0 .. t^order of an expanded rational function.
struct TruncatedSeries {
  int order = 0;
  std::vector<LaurentPoly> coeffs;  // size order+1

  std::vector<Rational> eval_q(const Rational& q) const;
  TruncatedSeries operator*(const TruncatedSeries& o) const;
  TruncatedSeries operator+(const TruncatedSeries& o) const;
  bool operator==(const TruncatedSeries& o) const { return order == o.order && coeffs == o.coeffs; }
};

// Factor 1 - q^a t^b of a denominator known by construction.
struct Binomial {
  int a = 0;
  int b = 0;
  bool operator==(const Binomial& o) const { return a == o.a && b == o.b; }
  bool operator<(const Binomial& o) const { return a != o.a ? a < o.a : b < o.b; }
};

// Quotient of coprime polynomials in Q[q, 1/q][t], kept in canonical form:
// q-powers are chosen so the smallest q-exponent over num and den is 0 and the
// lexicographically least (q-exp, t-exp) term of den has coefficient 1.
class RationalFunctionQT {
 public:
  RationalFunctionQT() : den_(1) {}
  RationalFunctionQT(const BivariatePoly& num);  // NOLINT(implicit)
  RationalFunctionQT(long c) : RationalFunctionQT(BivariatePoly(c)) {}  // NOLINT(implicit)

  const BivariatePoly& num() const { return num_; }
  const BivariatePoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunctionQT operator+(const RationalFunctionQT& o) const;
  RationalFunctionQT operator-(const RationalFunctionQT& o) const;
  RationalFunctionQT operator*(const RationalFunctionQT& o) const;
  RationalFunctionQT operator/(const RationalFunctionQT& o) const;
  RationalFunctionQT operator-() const;
  bool operator==(const RationalFunctionQT& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RationalFunctionQT& o) const { return !(*this == o); }

  std::string to_string() const;

  friend RationalFunctionQT rf_normalize(const BivariatePoly& num, const BivariatePoly& den);
  friend RationalFunctionQT rf_from_factored(const BivariatePoly& num, const std::vector<Binomial>& den,
                                             std::vector<Binomial>* remaining);
  friend RationalFunctionQT rf_from_coprime(const BivariatePoly& num, const BivariatePoly& den);

 private:
  BivariatePoly num_;
  BivariatePoly den_;
};

// General constructor: exact gcd cancellation over Q[q, 1/q][t].
RationalFunctionQT rf_normalize(const BivariatePoly& num, const BivariatePoly& den);

// Caller guarantees gcd(num, den) = 1; only the unit is fixed.
RationalFunctionQT rf_from_coprime(const BivariatePoly& num, const BivariatePoly& den);

// num / prod(1 - q^a t^b), cancelling binomials that divide num. With g the gcd of all
// t-exponents, a factor linear in t^g is coprime to num unless it divides it; if any kept
// factor is not linear in t^g a full gcd is taken. *remaining lists the factors that did
// not divide num (they may still share a factor with it in the gcd case).
RationalFunctionQT rf_from_factored(const BivariatePoly& num, const std::vector<Binomial>& den,
                                    std::vector<Binomial>* remaining = nullptr);

RationalFunctionQT rf_substitute_q_inverse(const RationalFunctionQT& f);
// (q, t) -> (1/q, 1/t)
RationalFunctionQT rf_invert_qt(const RationalFunctionQT& f);
// every t-exponent e must be a multiple of n; t^e -> q^{c e / n} t^e
RationalFunctionQT rf_shift_t_power(const RationalFunctionQT& f, int n, int c);
RationalFunctionQT rf_times_monomial(const RationalFunctionQT& f, int qe, int te, const Rational& c = 1);

TruncatedSeries rf_expand(const RationalFunctionQT& f, int order);
Rational rf_evaluate(const RationalFunctionQT& f, const Rational& q0, const Rational& t0);

std::string rf_to_latex(const RationalFunctionQT& f);
// numerator over the given binomial factors; repeated factors are collected as powers
std::string rf_to_latex_factored(const BivariatePoly& num, const std::vector<Binomial>& den);

}  // namespace ehz
