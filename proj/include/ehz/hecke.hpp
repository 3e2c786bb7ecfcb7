#pragma once

#include <string>
#include <vector>

#include "ehz/core/rational_function.hpp"
#include "ehz/ehrhart.hpp"
#include "ehz/qcombinat.hpp"

namespace ehz {

struct EigenvaluePoly {
  ZetaType type = ZetaType::C;
  int n = 0;
  int k = 0;
  int ell = 0;
  LaurentPoly poly;
};

LaurentPoly delta_poly(int n, int k);
LaurentPoly phi_C(int n, int k, int ell);
LaurentPoly phi_A(int n, int k, int ell);
EigenvaluePoly eigenvalue_poly(ZetaType type, int n, int k, int ell);

// Exponents of the Satake parameters (x_0, x_1, ..., x_n) -> q^e.
std::vector<int> satake_exponents(int n, int ell);

enum class SatakeRoute { ClosedForm, Enumeration };

// Image of the k-th generator under Omega followed by the parameter specialization, at q = p.
// The enumeration route walks sublattices of Z^n (SizeLimit beyond n = 3 or p > 3).
Rational satake_image_eval(int n, int k, int ell, long p, SatakeRoute route = SatakeRoute::ClosedForm);

// Closed form for the number of class-k cosets containing p^{-i} x, x primitive (i = 1, 2).
Rational xi_formula(int n, int k, long p, int i);

struct LocalZeta {
  ZetaType type = ZetaType::C;
  int n = 0;
  int ell = 0;
  RationalFunctionQT value;           // reduced
  BivariatePoly numerator;            // over the full factor list below
  std::vector<Binomial> factors;      // denominator as a product of 1 - q^a t^b
};

inline constexpr int kZetaCMaxN = 8;
inline constexpr int kCommonDenMaxN = 5;
inline constexpr int kDirectMaxN = 4;

LocalZeta zeta_C(int n, int ell);
// the double sum over (I, J) with each Theta computed on its own
RationalFunctionQT zeta_C_commden(int n, int ell);
// term-by-term rational function sum of the defining double sum (small n, test route)
RationalFunctionQT zeta_C_direct(int n, int ell);
LocalZeta zeta_A(int n, int ell);

// Numerator of zeta_C over its common denominator with q = X and t^n = X^{-n alpha},
// alpha the abscissa of the global series.
LaurentPoly analytic_numerator(int n, int ell);

inline constexpr int kSymbolicCheckMaxN = 6;

bool check_functional_eq(int n, int ell);
bool check_reflection(int n, int ell);
bool check_igusa_l0(int n);
bool check_igusa_ln(int n);
// difference identity in l: psi-side (enumeration or closed form) against Phi-side at q = p
bool check_difference_identity(int n, int k, int ell, long p, SatakeRoute route = SatakeRoute::ClosedForm);

// Coefficients of t^{n m} (type C) or t^m (type A), m = 0..order, from coset enumeration.
std::vector<Rational> zeta_series_oracle(ZetaType type, int n, int ell, long p, const LatticePolytope& P, int order);
// the same coefficients read off the closed form at q = p
std::vector<Rational> zeta_series_formula(ZetaType type, int n, int ell, long p, int order);

bool tamagawa_check(int n, long p, int order);

std::string zeta_to_latex(const LocalZeta& z);

}  // namespace ehz
