#include "ehz/hecke.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "ehz/errors.hpp"
#include "ehz/lattice.hpp"

namespace ehz {

namespace {

LaurentPoly Y(int e) { return LaurentPoly::monomial(e); }

void check_nk(int n, int k, int lo) {
  if (n < 1) throw RangeError("n must be positive");
  if (k < lo || k > n) throw RangeError("k out of range");
}

}  // namespace

LaurentPoly delta_poly(int n, int k) {
  check_nk(n, k, 0);
  LaurentPoly r(1);
  for (int i = 1; i <= n - k; ++i) r *= LaurentPoly(1) + Y(k + i);
  if (k > 0) r *= qbinom(n, k).shifted((n - k + 1) * (n - k) / 2);
  return r;
}

LaurentPoly phi_C(int n, int k, int ell) {
  check_nk(n, k, 0);
  if (k == 0) {
    LaurentPoly r = Y(ell) + Y(n);
    for (int i = 1; i < n; ++i) r *= LaurentPoly(1) + Y(i);
    return r;
  }
  LaurentPoly b = Y(2 * ell) - Y(2 * ell - n + k) + Y(ell + n + k) - LaurentPoly::monomial(ell, 2) + Y(ell - n + k) + Y(2 * n) - Y(n + k);
  auto q = exact_div(delta_poly(n, k) * b, Y(2 * n) - LaurentPoly(1));
  ensure(q.has_value(), "phi_C: Y^{2n} - 1 does not divide the numerator");
  return *q;
}

LaurentPoly phi_A(int n, int k, int ell) {
  check_nk(n, k, 1);
  LaurentPoly r = qbinom(n - 1, k - 1).shifted(ell);
  if (k <= n - 1) r += qbinom(n - 1, k).shifted(k);
  return r;
}

EigenvaluePoly eigenvalue_poly(ZetaType type, int n, int k, int ell) {
  EigenvaluePoly e;
  e.type = type;
  e.n = n;
  e.k = k;
  e.ell = ell;
  e.poly = type == ZetaType::C ? phi_C(n, k, ell) : phi_A(n, k, ell);
  return e;
}

std::vector<int> satake_exponents(int n, int ell) {
  if (n < 1) throw RangeError("n must be positive");
  std::vector<int> e{ell};
  for (int i = 1; i < n; ++i) e.push_back(i);
  e.push_back(n - ell);
  return e;
}

namespace {

// sum over lattices of type (2^b, 1^a) of q^{-l delta_n}
Rational omega_enumerated(int n, int a, int b, int ell, long p) {
  Partition want = partition_2b1a(a, b);
  Rational s = 0;
  for_each_sublattice(n, p, a + 2 * b, [&](const IntMatrix& H, const std::vector<int>& d) {
    if (smith_type(H, p) == want) s += rpow(Rational(p), -static_cast<long>(ell) * d.back());
  });
  return s;
}

}  // namespace

Rational satake_image_eval(int n, int k, int ell, long p, SatakeRoute route) {
  check_nk(n, k, 0);
  if (p < 2) throw RangeError("p must be a prime");
  if (route == SatakeRoute::Enumeration && (n > 3 || p > 3))
    throw SizeLimit("enumeration route limited to n <= 3, p <= 3");
  const Rational q(p);
  std::vector<int> x = satake_exponents(n, ell);
  if (k == 0) {
    Rational r = rpow(q, x[0]);
    for (int i = 1; i <= n; ++i) r *= 1 + rpow(q, x[static_cast<size_t>(i)]);
    return r;
  }
  Rational s = 0;
  for (int a = k; a <= n; ++a)
    for (int b = 0; b <= n - a; ++b) {
      Rational w = route == SatakeRoute::ClosedForm ? psi_omega(n, a, b, ell, q) : omega_enumerated(n, a, b, ell, p);
      s += rpow(q, b * (a + b + 1)) * w * sym_rank_count(a, a - k, q);
    }
  return rpow(q, 2 * x[0]) * s;
}

Rational xi_formula(int n, int k, long p, int i) {
  check_nk(n, k, 1);
  const Rational q(p);
  Rational d = delta_poly(n, k).eval(q);
  if (i == 1) return (rpow(q, n + k) - 1) / (rpow(q, 2 * n) - 1) * d;
  if (i == 2) return (rpow(q, 2 * n) - rpow(q, n + k)) / (rpow(q, 4 * n) - rpow(q, 2 * n)) * d;
  throw RangeError("xi_formula needs i in {1, 2}");
}

namespace {

// X_i and Y_j of the closed form as (q-exponent) with t-exponent n
std::vector<Binomial> zeta_C_factors(int n, int ell) {
  std::vector<Binomial> f;
  for (int i = 1; i <= n; ++i) f.push_back({i * (i + 1) / 2 + i * (n - i), n});
  for (int j = 1; j <= n; ++j) f.push_back({j * (j + 1) / 2 + j * (n - j) - n + ell, n});
  return f;
}

void check_zeta_n(int n, int cap) {
  if (n < 1) throw RangeError("n must be positive");
  if (n > cap) throw SizeLimit("zeta assembly capped at n = " + std::to_string(cap));
}

// dense integer coefficients of a polynomial in Y, padded to width
std::vector<long long> dense(const LaurentPoly& p, size_t width) {
  std::vector<long long> v(width, 0);
  for (const auto& [e, c] : p.terms()) {
    ensure(e >= 0 && static_cast<size_t>(e) < width && c.get_den() == 1, "dense: unexpected term");
    v[static_cast<size_t>(e)] = c.get_num().get_si();
  }
  return v;
}

// Theta_{I,J} for all (I, J) by a Moebius transform over the 2n index bits; entry I | J << n
std::vector<std::vector<long long>> theta_table(int n) {
  const size_t width = static_cast<size_t>(n * n + 2 * n + 2);
  const Mask full = (Mask(1) << n) - 1;
  const size_t N = size_t(1) << (2 * n);
  std::vector<std::vector<long long>> T(N);
  for (size_t s = 0; s < N; ++s) T[s] = dense(psi_poly(n, Mask(s) & full, Mask(s >> n)), width);
  for (int bit = 0; bit < 2 * n; ++bit)
    for (size_t s = 0; s < N; ++s)
      if ((s >> bit) & 1u) {
        const auto& lo = T[s ^ (size_t(1) << bit)];
        auto& hi = T[s];
        for (size_t e = 0; e < width; ++e) hi[e] -= lo[e];
      }
  return T;
}

BivariatePoly commden_numerator(int n, int ell, const std::vector<std::vector<long long>>& T) {
  const Mask full = (Mask(1) << n) - 1;
  std::map<std::pair<int, int>, long long> acc;
  for (size_t s = 0; s < T.size(); ++s) {
    Mask I = Mask(s) & full, J = Mask(s >> n);
    int nj = __builtin_popcount(J);
    int shift = beta(n, I) + beta(n, J) + nj * (ell - n);
    int te = n * (__builtin_popcount(I) + nj);
    for (size_t e = 0; e < T[s].size(); ++e)
      if (T[s][e]) acc[{shift - static_cast<int>(e), te}] += T[s][e];
  }
  BivariatePoly num;
  for (const auto& [k, c] : acc)
    if (c) num.add_term(k.first, k.second, Rational(static_cast<long>(c)));
  return num;
}

}  // namespace

LocalZeta zeta_C(int n, int ell) {
  check_zeta_n(n, kZetaCMaxN);
  LocalZeta z;
  z.type = ZetaType::C;
  z.n = n;
  z.ell = ell;
  z.factors = zeta_C_factors(n, ell);
  z.numerator = commden_numerator(n, ell, theta_table(n));
  z.value = rf_from_factored(z.numerator, z.factors);
  return z;
}

LaurentPoly analytic_numerator(int n, int ell) {
  BivariatePoly num = zeta_C(n, ell).numerator;
  // t^n -> X^{-n alpha}, n alpha = C(n+1,2) + 1 + max(0, l - n)
  const int na = n * (n + 1) / 2 + 1 + std::max(0, ell - n);
  LaurentPoly out;
  for (const auto& [k, c] : num.terms()) out.add_term(k.first - (k.second / n) * na, c);
  return out;
}

RationalFunctionQT zeta_C_commden(int n, int ell) {
  check_zeta_n(n, kCommonDenMaxN);
  BivariatePoly num;
  for (int m = 0; m <= 2 * n; ++m)
    for (int k = 0; k <= m; ++k)
      for (Mask I = 0; I < (Mask(1) << n); ++I) {
        if (__builtin_popcount(I) != k) continue;
        for (Mask J = 0; J < (Mask(1) << n); ++J) {
          if (__builtin_popcount(J) != m - k) continue;
          LaurentPoly th = theta_poly(n, from_mask(I), from_mask(J)).compose_power(-1);
          num += BivariatePoly::from_q_poly(th.shifted(beta(n, I) + beta(n, J) + (m - k) * (ell - n)), m * n);
        }
      }
  BivariatePoly den(1);
  for (const auto& b : zeta_C_factors(n, ell)) den = den * BivariatePoly::one_minus(b.a, b.b);
  return rf_normalize(num, den);
}

RationalFunctionQT zeta_C_direct(int n, int ell) {
  check_zeta_n(n, kDirectMaxN);
  std::vector<Binomial> f = zeta_C_factors(n, ell);
  // every summand brought to the full denominator: X/(1-X) -> X, a missing index -> (1-X)
  BivariatePoly num;
  for (Mask I = 0; I < (Mask(1) << n); ++I)
    for (Mask J = 0; J < (Mask(1) << n); ++J) {
      BivariatePoly term = BivariatePoly::from_q_poly(psi_poly(n, I, J).compose_power(-1));
      const Mask S = I | (J << n);
      for (int i = 0; i < 2 * n; ++i) {
        const Binomial& x = f[static_cast<size_t>(i)];
        term = (S >> i) & 1u ? term.times_monomial(x.a, x.b) : term * BivariatePoly::one_minus(x.a, x.b);
      }
      num += term;
    }
  return rf_from_factored(num, f);
}

LocalZeta zeta_A(int n, int ell) {
  if (n < 1) throw RangeError("n must be positive");
  LocalZeta z;
  z.type = ZetaType::A;
  z.n = n;
  z.ell = ell;
  z.factors.push_back({ell, 1});
  for (int k = 1; k < n; ++k) z.factors.push_back({k, 1});
  z.numerator = BivariatePoly(1);
  z.value = rf_from_factored(z.numerator, z.factors);
  return z;
}

bool check_functional_eq(int n, int ell) {
  check_zeta_n(n, kSymbolicCheckMaxN);
  RationalFunctionQT z = zeta_C(n, ell).value;
  RationalFunctionQT rhs = rf_times_monomial(z, n * n + ell, 2 * n, n % 2 == 1 ? 1 : -1);
  return rf_invert_qt(z) == rhs;
}

bool check_reflection(int n, int ell) {
  check_zeta_n(n, kSymbolicCheckMaxN);
  return zeta_C(n, 2 * n - ell).value == rf_shift_t_power(zeta_C(n, ell).value, n, n - ell);
}

namespace {

bool igusa_form(int n, int ell, bool shifted_binomial) {
  check_zeta_n(n, kZetaCMaxN);
  const int top = n * (n + 1) / 2;
  std::vector<QTMonomial> X;
  for (int i = 1; i <= n; ++i) {
    int c = shifted_binomial ? i * (i - 1) / 2 : i * (i + 1) / 2;
    X.push_back({top - c, n});
  }
  std::vector<Binomial> den{{top, n}};
  for (const auto& x : X) den.push_back({x.qe, x.te});
  RationalFunctionQT rhs = rf_from_factored(igusa_numerator(n, X), den);
  return zeta_C(n, ell).value == rhs;
}

}  // namespace

bool check_igusa_l0(int n) { return igusa_form(n, 0, false); }
bool check_igusa_ln(int n) { return igusa_form(n, n, true); }

bool check_difference_identity(int n, int k, int ell, long p, SatakeRoute route) {
  const Rational q(p);
  Rational lhs = satake_image_eval(n, k, ell, p, route) - satake_image_eval(n, k, ell - 1, p, route);
  Rational rhs = phi_C(n, k, ell).eval(q) - phi_C(n, k, ell - 1).eval(q);
  return lhs == rhs;
}

std::vector<Rational> zeta_series_oracle(ZetaType type, int n, int ell, long p, const LatticePolytope& P, int order) {
  if (n < 1 || order < 0) throw RangeError("zeta_series_oracle: bad n or order");
  const int d = type == ZetaType::C ? 2 * n : n;
  if (P.ambient() != d) throw RangeError("polytope has the wrong ambient dimension");
  if (type == ZetaType::C && (n > 2 || n * order > 4)) throw SizeLimit("type C oracle limited to n <= 2, t-order n * order <= 4");
  if (type == ZetaType::A && (n > 3 || order > 3)) throw SizeLimit("type A oracle limited to n <= 3, order <= 3");
  if (p > 3) throw SizeLimit("oracle limited to p <= 3");
  std::vector<Rational> out;
  for (int m = 0; m <= order; ++m) {
    Integer det = ipow(Integer(p), static_cast<unsigned long>(type == ZetaType::C ? n * m : m));
    out.push_back(avg_coeff(P, ell, det, type));
  }
  return out;
}

std::vector<Rational> zeta_series_formula(ZetaType type, int n, int ell, long p, int order) {
  LocalZeta z = type == ZetaType::C ? zeta_C(n, ell) : zeta_A(n, ell);
  const int step = type == ZetaType::C ? n : 1;
  std::vector<Rational> all = rf_expand(z.value, step * order).eval_q(Rational(p));
  std::vector<Rational> out;
  for (int m = 0; m <= order; ++m) out.push_back(all[static_cast<size_t>(m * step)]);
  return out;
}

bool tamagawa_check(int n, long p, int order) {
  if (n < 1 || order < 0) throw RangeError("tamagawa_check: bad n or order");
  if (n > 3 || p > 3 || order > 3) throw SizeLimit("tamagawa_check limited to n <= 3, p <= 3, order <= 3");
  // coset counts by index and the generator counts (type (1^k)), both by enumeration
  std::vector<Rational> series, gen(static_cast<size_t>(n + 1), 0);
  gen[0] = 1;
  for (int m = 0; m <= std::max(order, n); ++m) {
    long total = 0;
    for_each_sublattice(n, p, m, [&](const IntMatrix& H, const std::vector<int>&) {
      ++total;
      if (m >= 1 && m <= n && smith_type(H, p) == Partition(std::vector<int>(static_cast<size_t>(m), 1)))
        gen[static_cast<size_t>(m)] += 1;
    });
    if (m <= order) series.push_back(Rational(total));
  }
  const Rational q(p);
  for (int m = 0; m <= order; ++m) {
    Rational c = 0;
    for (int k = 0; k <= std::min(m, n); ++k)
      c += ((k % 2) ? -1 : 1) * rpow(q, k * (k - 1) / 2) * gen[static_cast<size_t>(k)] * series[static_cast<size_t>(m - k)];
    if (c != (m == 0 ? 1 : 0)) return false;
  }
  return series == zeta_series_formula(ZetaType::A, n, 0, p, order);
}

std::string zeta_to_latex(const LocalZeta& z) { return rf_to_latex_factored(z.numerator, z.factors); }

}  // namespace ehz
