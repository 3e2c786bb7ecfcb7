#include "ehz/core/rational.hpp"

#include "ehz/errors.hpp"

namespace ehz {

Rational parse_rational(const std::string& s) {
  Rational r;
  if (s.empty() || r.set_str(s, 10) != 0) throw RangeError("not a rational number: '" + s + "'");
  if (r.get_den() == 0) throw ZeroDenominator("zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

Integer ipow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Rational rpow(const Rational& base, long e) {
  if (e == 0) return 1;
  if (e < 0) {
    if (base == 0) throw ZeroDenominator("0 to a negative power");
    Rational inv = 1 / base;
    return rpow(inv, -e);
  }
  Integer n = ipow(base.get_num(), static_cast<unsigned long>(e));
  Integer d = ipow(base.get_den(), static_cast<unsigned long>(e));
  return Rational(n, d);
}

Integer floor_div(const Rational& x) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return r;
}

Integer ceil_div(const Rational& x) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return r;
}

long binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r.get_si();
}

}  // namespace ehz
