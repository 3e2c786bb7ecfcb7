#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ehz/core/laurent_poly.hpp"
#include "ehz/ehrhart.hpp"

namespace ehz {

// Closed real interval with rational end points.
struct Interval {
  Rational lo = 0;
  Rational hi = 0;

  Interval() = default;
  Interval(const Rational& x) : lo(x), hi(x) {}  // NOLINT(implicit)
  Interval(const Rational& l, const Rational& h);  // RangeError if l > h

  Rational width() const { return hi - lo; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool overlaps(const Interval& o) const { return lo <= o.hi && o.lo <= hi; }
  double mid() const;
  // end points rounded outward to multiples of 2^-bits
  Interval rounded(int bits) const;
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);
Interval operator/(const Interval& a, const Interval& b);  // ZeroDenominator if 0 in b
Interval ipow(const Interval& a, int e);

inline constexpr int kDyadicBits = 192;

// zeta(s) for integer s >= 2 (Euler-Maclaurin, remainder bounded by the first omitted term)
Interval zeta_value(int s);

// zeta(a s - b)^e
struct ZetaFactor {
  int a = 1;
  int b = 0;
  int e = 1;
};
using ZetaProduct = std::vector<ZetaFactor>;

// global series as zeta products, where known: type A for all n, type C for n <= 2
ZetaProduct zeta_product(ZetaType type, int n, int ell);
bool has_zeta_product(ZetaType type, int n);
std::string zeta_product_to_string(const ZetaProduct& z);

// Dirichlet coefficients 1..M of a zeta product (sparse convolution; e < 0 via Moebius)
std::vector<Rational> dirichlet_coeffs(const ZetaProduct& z, long M);

inline constexpr long kMaxDirichletIndex = 1000000;

struct DirichletCoefficients {
  ZetaType type = ZetaType::A;
  int n = 0;
  int ell = 0;
  long M = 0;
  std::vector<Rational> table;  // table[m] for 1 <= m <= M, table[0] = 0

  const Rational& operator[](long m) const;
};

// product of the local factors expanded at every prime p <= M
DirichletCoefficients global_coeffs(ZetaType type, int n, int ell, long M);

bool multiplicativity_check(const DirichletCoefficients& c, const std::vector<std::pair<long, long>>& pairs);
// re-derives C(a), C(b), C(ab) by coset enumeration and also compares them with the table
bool multiplicativity_oracle(ZetaType type, int n, int ell, const LatticePolytope& P,
                             const std::vector<std::pair<long, long>>& pairs);

struct Abscissa {
  Rational alpha;
  int pole_order = 1;
};
Abscissa abscissa(ZetaType type, int n, int ell);

// kind is 0 or n
LaurentPoly gamma_euler_factor(int n, int kind);

// prod over primes of num(1/p) / den(1/p); num(0) = den(0) = 1. Low-order behaviour is
// peeled off as zeta(d)^{e_d}; primes above the cut-off are covered by a tail bound.
Interval euler_product(const LaurentPoly& num, const LaurentPoly& den, const Rational& precision);
Interval gamma_value(int n, int kind, const Rational& precision);

// k_{n,l}: limit of Z(s) / zeta(n s - n alpha + 1)^{1 + delta}
Interval k_limit_zeta_product(const ZetaProduct& z, int n, const Abscissa& a);
Interval k_limit_euler(int n, int ell, const Rational& precision);  // from the local closed form

struct AsymptoticReport {
  ZetaType type = ZetaType::C;
  int n = 0;
  int ell = 0;
  Rational abscissa;
  int pole_order = 1;
  Interval constant;                   // normalization of the stated asymptotic
  Interval tauberian;                  // residue / (alpha (w-1)!), the Tauberian leading constant
  Interval cross_check;                // second route for the constant (equal to constant when none)
  std::string route;
  std::string cross_route;
  std::vector<std::string> zeta_values_used;
  bool conditional = false;            // relies on the l = n Igusa form
};

AsymptoticReport asymptotic_constant(ZetaType type, int n, int ell, const Rational& precision);

struct PartialSumProbe {
  long N = 0;
  Rational sum;
  Interval predicted;            // constant * N^alpha (log N)^delta
  Interval tauberian_predicted;
  double ratio = 0;              // sum / predicted (midpoint)
  double tauberian_ratio = 0;
};

PartialSumProbe partial_sum_probe(ZetaType type, int n, int ell, long N);

}  // namespace ehz
