#include "ehz/analytics.hpp"

#include <mpfr.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "ehz/errors.hpp"
#include "ehz/hecke.hpp"
#include "ehz/qcombinat.hpp"

namespace ehz {

// ---------------------------------------------------------------- intervals

Interval::Interval(const Rational& l, const Rational& h) : lo(l), hi(h) {
  if (lo > hi) throw RangeError("interval with lo > hi");
}

double Interval::mid() const { return Rational((lo + hi) / 2).get_d(); }

Interval Interval::rounded(int bits) const {
  Integer scale = ipow(Integer(2), static_cast<unsigned long>(bits));
  Interval r;
  r.lo = Rational(floor_div(lo * scale), scale);
  r.hi = Rational(ceil_div(hi * scale), scale);
  r.lo.canonicalize();
  r.hi.canonicalize();
  return r;
}

Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
Interval operator-(const Interval& a, const Interval& b) { return {a.lo - b.hi, a.hi - b.lo}; }

Interval operator*(const Interval& a, const Interval& b) {
  Rational c[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(c, c + 4), *std::max_element(c, c + 4)};
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.lo <= 0 && b.hi >= 0) throw ZeroDenominator("interval division by an interval containing 0");
  return a * Interval(1 / b.hi, 1 / b.lo);
}

Interval ipow(const Interval& a, int e) {
  if (e < 0) return Interval(1) / ipow(a, -e);
  Interval r(1);
  for (int i = 0; i < e; ++i) r = (r * a).rounded(kDyadicBits);
  return r;
}

// ---------------------------------------------------------------- zeta values

namespace {

std::vector<Rational> bernoulli(int m) {
  // sum_{k=0}^{j} C(j+1, k) B_k = 0
  std::vector<Rational> B(static_cast<size_t>(m) + 1);
  B[0] = 1;
  for (int j = 1; j <= m; ++j) {
    Rational s = 0;
    for (int k = 0; k < j; ++k) s += Rational(binomial(j + 1, k)) * B[static_cast<size_t>(k)];
    B[static_cast<size_t>(j)] = -s / (j + 1);
  }
  return B;
}

}  // namespace

Interval zeta_value(int s) {
  if (s < 2) throw RangeError("zeta_value needs an integer s >= 2");
  static std::map<int, Interval> cache;
  auto it = cache.find(s);
  if (it != cache.end()) return it->second;
  const int N = 32, M = 30;
  static const std::vector<Rational> B = bernoulli(2 * M + 2);
  const Rational n(N);
  Rational sum = 0;
  for (int k = 1; k < N; ++k) sum += rpow(Rational(k), -s);
  sum += rpow(n, 1 - s) / (s - 1) + rpow(n, -s) / 2;
  // B_{2j}/(2j)! s(s+1)...(s+2j-2) N^{-s-2j+1}
  auto term = [&](int j) -> Rational {
    Rational rising = 1, fact = 1;
    for (int i = 0; i < 2 * j - 1; ++i) rising *= s + i;
    for (int i = 1; i <= 2 * j; ++i) fact *= i;
    return B[static_cast<size_t>(2 * j)] / fact * rising * rpow(n, -s - 2 * j + 1);
  };
  for (int j = 1; j <= M; ++j) sum += term(j);
  Rational err = abs(term(M + 1));
  Interval r = Interval(sum - err, sum + err).rounded(kDyadicBits);
  cache[s] = r;
  return r;
}

// ---------------------------------------------------------------- zeta products

bool has_zeta_product(ZetaType type, int n) { return type == ZetaType::A || n <= 2; }

ZetaProduct zeta_product(ZetaType type, int n, int ell) {
  if (n < 1) throw RangeError("n must be positive");
  if (type == ZetaType::A) {
    ZetaProduct z{{1, ell, 1}};
    for (int k = 1; k < n; ++k) z.push_back({1, k, 1});
    return z;
  }
  if (n == 1) return {{1, 1, 1}, {1, ell, 1}};
  if (n == 2) return {{2, 2, 1}, {2, 3, 1}, {2, ell, 1}, {2, ell + 1, 1}, {4, ell + 2, -1}};
  throw NotImplementedForParameters("no zeta product for type C with n >= 3");
}

std::string zeta_product_to_string(const ZetaProduct& z) {
  std::ostringstream num, den;
  auto arg = [](const ZetaFactor& f) {
    std::ostringstream o;
    o << "zeta(";
    if (f.a != 1) o << f.a;
    o << "s";
    if (f.b > 0) o << "-" << f.b;
    if (f.b < 0) o << "+" << -f.b;
    o << ")";
    return o.str();
  };
  for (const auto& f : z) {
    std::ostream& os = f.e > 0 ? num : den;
    for (int i = 0; i < std::abs(f.e); ++i) os << (os.tellp() > 0 ? " " : "") << arg(f);
  }
  std::string s = num.str().empty() ? "1" : num.str();
  if (!den.str().empty()) s += " / (" + den.str() + ")";
  return s;
}

namespace {

std::vector<int> moebius(long M) {
  std::vector<int> mu(static_cast<size_t>(M) + 1, 1);
  std::vector<bool> composite(static_cast<size_t>(M) + 1, false);
  for (long p = 2; p <= M; ++p) {
    if (composite[static_cast<size_t>(p)]) continue;
    for (long m = p; m <= M; m += p) {
      if (m > p) composite[static_cast<size_t>(m)] = true;
      mu[static_cast<size_t>(m)] = -mu[static_cast<size_t>(m)];
    }
    if (p <= M / p)
      for (long m = p * p; m <= M; m += p * p) mu[static_cast<size_t>(m)] = 0;
  }
  return mu;
}

std::vector<long> smallest_prime_factor(long M) {
  std::vector<long> spf(static_cast<size_t>(M) + 1, 0);
  for (long p = 2; p <= M; ++p) {
    if (spf[static_cast<size_t>(p)]) continue;
    for (long m = p; m <= M; m += p)
      if (!spf[static_cast<size_t>(m)]) spf[static_cast<size_t>(m)] = p;
  }
  return spf;
}

std::vector<long> primes_up_to(long P) {
  std::vector<long> out;
  auto spf = smallest_prime_factor(P);
  for (long p = 2; p <= P; ++p)
    if (spf[static_cast<size_t>(p)] == p) out.push_back(p);
  return out;
}

void check_M(long M) {
  if (M < 1) throw RangeError("coefficient bound must be positive");
  if (M > kMaxDirichletIndex) throw SizeLimit("coefficient tables capped at 10^6");
}

}  // namespace

std::vector<Rational> dirichlet_coeffs(const ZetaProduct& z, long M) {
  check_M(M);
  std::vector<Rational> c(static_cast<size_t>(M) + 1, 0);
  c[1] = 1;
  std::vector<int> mu;
  for (const auto& f : z) {
    if (f.a < 1) throw RangeError("zeta factor needs a >= 1");
    if (f.e < 0 && mu.empty()) mu = moebius(M);
    for (int rep = 0; rep < std::abs(f.e); ++rep) {
      std::vector<Rational> next(c.size(), 0);
      for (long k = 1;; ++k) {
        Integer ka = ipow(Integer(k), static_cast<unsigned long>(f.a));
        if (ka > M) break;
        const long step = ka.get_si();
        Rational w = rpow(Rational(k), f.b);
        if (f.e < 0) {
          if (mu[static_cast<size_t>(k)] == 0) continue;
          w *= mu[static_cast<size_t>(k)];
        }
        for (long m = 1; m * step <= M; ++m)
          if (c[static_cast<size_t>(m)] != 0) next[static_cast<size_t>(m * step)] += c[static_cast<size_t>(m)] * w;
      }
      c.swap(next);
    }
  }
  return c;
}

const Rational& DirichletCoefficients::operator[](long m) const {
  if (m < 1 || m > M) throw RangeError("coefficient index out of range");
  return table[static_cast<size_t>(m)];
}

DirichletCoefficients global_coeffs(ZetaType type, int n, int ell, long M) {
  check_M(M);
  DirichletCoefficients out;
  out.type = type;
  out.n = n;
  out.ell = ell;
  out.M = M;
  int order = 0;
  while ((Integer(1) << (order + 1)) <= M) ++order;
  LocalZeta z = type == ZetaType::C ? zeta_C(n, ell) : zeta_A(n, ell);
  TruncatedSeries series = rf_expand(z.value, order);
  auto spf = smallest_prime_factor(M);
  // local[p][e] = coefficient of t^e at q = p
  std::map<long, std::vector<Rational>> local;
  for (long p = 2; p <= M; ++p) {
    if (spf[static_cast<size_t>(p)] != p) continue;
    std::vector<Rational> v{1};
    Integer pe = p;
    for (int e = 1; pe <= M; ++e, pe *= p) v.push_back(series.coeffs[static_cast<size_t>(e)].eval(Rational(p)));
    local[p] = std::move(v);
  }
  out.table.assign(static_cast<size_t>(M) + 1, 0);
  out.table[1] = 1;
  for (long m = 2; m <= M; ++m) {
    long p = spf[static_cast<size_t>(m)], r = m;
    int e = 0;
    while (r % p == 0) {
      r /= p;
      ++e;
    }
    out.table[static_cast<size_t>(m)] = out.table[static_cast<size_t>(r)] * local[p][static_cast<size_t>(e)];
  }
  return out;
}

bool multiplicativity_check(const DirichletCoefficients& c, const std::vector<std::pair<long, long>>& pairs) {
  for (const auto& [a, b] : pairs) {
    if (a < 1 || b < 1 || std::gcd(a, b) != 1) throw RangeError("multiplicativity needs coprime positive pairs");
    if (c[a * b] != c[a] * c[b]) return false;
  }
  return true;
}

bool multiplicativity_oracle(ZetaType type, int n, int ell, const LatticePolytope& P,
                             const std::vector<std::pair<long, long>>& pairs) {
  long top = 1;
  for (const auto& [a, b] : pairs) top = std::max(top, a * b);
  DirichletCoefficients table = global_coeffs(type, n, ell, top);
  for (const auto& [a, b] : pairs) {
    if (a < 1 || b < 1 || std::gcd(a, b) != 1) throw RangeError("multiplicativity needs coprime positive pairs");
    Rational ca = avg_coeff(P, ell, a, type), cb = avg_coeff(P, ell, b, type), cab = avg_coeff(P, ell, a * b, type);
    if (cab != ca * cb) return false;
    if (ca != table[a] || cb != table[b] || cab != table[a * b]) return false;
  }
  return true;
}

Abscissa abscissa(ZetaType type, int n, int ell) {
  if (n < 1) throw RangeError("n must be positive");
  Abscissa r;
  if (type == ZetaType::C) {
    r.alpha = Rational(n + 1, 2) + Rational(1 + std::max(0, ell - n), n);
    r.alpha.canonicalize();
    r.pole_order = ell == n ? 2 : 1;
    return r;
  }
  // rightmost pole of zeta(s - l) prod zeta(s - k) and its multiplicity
  int top = std::max(n, ell + 1);
  int order = 0;
  for (const auto& f : zeta_product(type, n, ell))
    if (f.b + 1 == top) order += f.e;
  r.alpha = top;
  r.pole_order = order;
  return r;
}

LaurentPoly gamma_euler_factor(int n, int kind) {
  if (n < 1) throw RangeError("n must be positive");
  if (n > 8) throw SizeLimit("gamma factors capped at n = 8");
  if (kind != 0 && kind != n) throw RangeError("gamma kind must be 0 or n");
  if (kind == 0) return perm_distribution(n, [](const PermStat& w) { return w.binv + w.des; });
  return perm_distribution(n, [](const PermStat& w) { return w.binv + w.des - w.maj; });
}

// ---------------------------------------------------------------- Euler products

namespace {

using Series = std::vector<Rational>;  // truncated power series in Y

Series to_series(const LaurentPoly& p, int D) {
  Series s(static_cast<size_t>(D) + 1, 0);
  for (const auto& [e, c] : p.terms()) {
    if (e <= D) s[static_cast<size_t>(e)] = c;
  }
  return s;
}

// a / b with b(0) = 1
Series series_div(Series a, const Series& b) {
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 1; j <= i; ++j) a[i] -= b[j] * a[i - j];
  return a;
}

// times (1 - Y^d)^e for any integer e
Series times_cyclo(Series s, int d, long k) {
  const size_t D = s.size() - 1;
  for (long rep = 0; rep < std::abs(k); ++rep) {
    if (k > 0) {
      for (size_t i = D; i >= static_cast<size_t>(d); --i) s[i] -= s[i - static_cast<size_t>(d)];
    } else {
      for (size_t i = static_cast<size_t>(d); i <= D; ++i) s[i] += s[i - static_cast<size_t>(d)];
    }
  }
  return s;
}

LaurentPoly one_minus_pow(int d, long e) {
  LaurentPoly base = LaurentPoly(1) - LaurentPoly::monomial(d);
  return pow(base, static_cast<unsigned>(e));
}

// sum_j |c_j| x^j over j >= from
Rational abs_eval(const LaurentPoly& p, const Rational& x, int from) {
  Rational s = 0;
  for (const auto& [e, c] : p.terms())
    if (e >= from) s += abs(c) * rpow(x, e);
  return s;
}

struct Peeled {
  std::vector<std::pair<int, long>> exps;  // (d, e_d)
  Interval value;
};

Peeled euler_product_at(const LaurentPoly& num, const LaurentPoly& den, int D, long P) {
  Series s = series_div(to_series(num, D), to_series(den, D));
  Peeled out;
  for (int d = 1; d <= D; ++d) {
    const Rational& c = s[static_cast<size_t>(d)];
    if (c == 0) continue;
    if (d == 1) throw RangeError("Euler product diverges (linear term)");
    if (c.get_den() != 1) throw RangeError("Euler product: non-integral peeling exponent");
    if (abs(c) > 10000) throw SizeLimit("Euler product: peeling exponent too large");
    const long e = c.get_num().get_si();
    out.exps.emplace_back(d, e);
    s = times_cyclo(s, d, e);
  }
  // g = Ng / Dg = 1 + O(Y^{D+1})
  LaurentPoly Ng = num, Dg = den;
  for (const auto& [d, e] : out.exps) {
    if (e > 0) Ng *= one_minus_pow(d, e);
    else Dg *= one_minus_pow(d, -e);
  }
  LaurentPoly R = Ng - Dg;
  ensure(R.is_zero() || R.min_degree() > D, "euler_product: peeling left low-order terms");
  const Rational x = Rational(1, P);
  Rational S = abs_eval(R, x, 0) / rpow(x, D + 1);
  Rational lb = 1 - abs_eval(den, x, 1);
  for (const auto& [d, e] : out.exps)
    if (e < 0) lb *= rpow(1 - rpow(x, d), -e);
  ensure(lb > 0, "euler_product: cut-off too small for the denominator bound");
  Rational uP = S / lb * rpow(x, D + 1);
  ensure(uP < Rational(1, 2), "euler_product: cut-off too small for the tail bound");
  // sum_{p > P} |log g(1/p)| <= S/lb/(1 - uP) * P^{-D} / D
  Rational T = S / lb / (1 - uP) * rpow(x, D) / D;
  ensure(T < Rational(1, 2), "euler_product: tail bound too weak");
  Interval prod(1);
  for (long p : primes_up_to(P)) {
    const Rational y(1, p);
    Rational v = num.eval(y) / den.eval(y);
    for (const auto& [d, e] : out.exps) v *= rpow(1 - rpow(y, d), e);
    prod = (prod * Interval(v)).rounded(kDyadicBits);
  }
  prod = (prod * Interval(1 - T, 1 / (1 - T))).rounded(kDyadicBits);
  for (const auto& [d, e] : out.exps) prod = (prod * ipow(zeta_value(d), static_cast<int>(e))).rounded(kDyadicBits);
  out.value = prod;
  return out;
}

}  // namespace

Interval euler_product(const LaurentPoly& num, const LaurentPoly& den, const Rational& precision) {
  if (!num.is_polynomial() || !den.is_polynomial() || num.coeff(0) != 1 || den.coeff(0) != 1)
    throw RangeError("euler_product needs polynomials with constant term 1");
  if (precision <= 0) throw RangeError("precision must be positive");
  int D = 16;
  long P = 128;
  for (int attempt = 0; attempt < 6; ++attempt, D += 8, P *= 2) {
    try {
      Interval v = euler_product_at(num, den, D, P).value;
      if (v.width() <= precision) return v;
    } catch (const AssertionFailure&) {
      // bound not yet valid at this cut-off; enlarge
    }
  }
  throw SizeLimit("euler_product: requested precision not reached");
}

Interval gamma_value(int n, int kind, const Rational& precision) {
  return euler_product(gamma_euler_factor(n, kind), LaurentPoly(1), precision);
}

// ---------------------------------------------------------------- asymptotics

namespace {

struct PoleData {
  int order = 0;
  Interval coefficient{1};  // Z(s) ~ coefficient / (s - alpha)^order
  std::vector<std::string> zetas;
};

PoleData leading_pole(const ZetaProduct& z, const Rational& alpha) {
  PoleData r;
  for (const auto& f : z) {
    Rational v = f.a * alpha - f.b;
    if (v == 1) {
      r.order += f.e;
      r.coefficient = r.coefficient * ipow(Interval(Rational(1, f.a)), f.e);
      continue;
    }
    if (v.get_den() != 1 || v < 2) throw NotImplementedForParameters("zeta factor at a non-integer or small argument");
    int s = static_cast<int>(v.get_num().get_si());
    r.coefficient = (r.coefficient * ipow(zeta_value(s), f.e)).rounded(kDyadicBits);
    r.zetas.push_back("zeta(" + std::to_string(s) + ")" + (f.e == 1 ? "" : "^" + std::to_string(f.e)));
  }
  return r;
}

Rational factorial(int k) {
  Rational f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

// k = lim Z(s) / zeta(step (s - alpha) + 1)^w from the local closed form as an Euler product
Interval k_limit_local(ZetaType type, int n, int ell, const Abscissa& ab, const Rational& precision) {
  LocalZeta z = type == ZetaType::C ? zeta_C(n, ell) : zeta_A(n, ell);
  const int step = type == ZetaType::C ? n : 1;
  Rational sa = step * ab.alpha;
  ensure(sa.get_den() == 1, "k_limit: step * alpha is not an integer");
  const int na = static_cast<int>(sa.get_num().get_si());
  auto to_Y = [&](const BivariatePoly& f) {
    LaurentPoly out;
    for (const auto& [k, c] : f.terms()) {
      ensure(k.second % step == 0, "k_limit: t-exponent off the lattice");
      int e = (k.second / step) * na - k.first;
      ensure(e >= 0, "k_limit: local factor not holomorphic at the abscissa");
      out.add_term(e, c);
    }
    return out;
  };
  LaurentPoly num = to_Y(z.value.num()), den = to_Y(z.value.den());
  Rational c0 = den.coeff(0);
  ensure(c0 != 0, "k_limit: denominator vanishes at Y = 0");
  num *= 1 / c0;
  den *= 1 / c0;
  auto reduced = exact_div(den, pow(LaurentPoly(1) - LaurentPoly::monomial(1), static_cast<unsigned>(ab.pole_order)));
  ensure(reduced.has_value(), "k_limit: pole order does not match the local denominators");
  // exact_div may rescale; restore constant term 1
  LaurentPoly d = *reduced;
  Rational d0 = d.coeff(0);
  num *= 1 / d0;
  d *= 1 / d0;
  return euler_product(num, d, precision);
}

Rational remark_normalization(int n, int ell, int pole_order) {
  // 2n / ((1 + delta) (n^2 + max(n, 2l - n) + 2))
  return Rational(2 * n, pole_order * (n * n + std::max(n, 2 * ell - n) + 2));
}

}  // namespace

Interval k_limit_zeta_product(const ZetaProduct& z, int n, const Abscissa& a) {
  PoleData pd = leading_pole(z, a.alpha);
  ensure(pd.order == a.pole_order, "k_limit: pole order mismatch");
  return (pd.coefficient * ipow(Interval(Rational(n)), pd.order)).rounded(kDyadicBits);
}

Interval k_limit_euler(int n, int ell, const Rational& precision) {
  return k_limit_local(ZetaType::C, n, ell, abscissa(ZetaType::C, n, ell), precision);
}

AsymptoticReport asymptotic_constant(ZetaType type, int n, int ell, const Rational& precision) {
  if (precision <= 0) throw RangeError("precision must be positive");
  AsymptoticReport r;
  r.type = type;
  r.n = n;
  r.ell = ell;
  Abscissa ab = abscissa(type, n, ell);
  r.abscissa = ab.alpha;
  r.pole_order = ab.pole_order;
  const Rational work = precision / 16;
  const Interval tauber_norm = Interval(1 / (ab.alpha * factorial(ab.pole_order - 1)));

  if (type == ZetaType::A) {
    if (ell < 0) throw NotImplementedForParameters("type A asymptotics need l >= 0");
    PoleData pd = leading_pole(zeta_product(type, n, ell), ab.alpha);
    ensure(pd.order == ab.pole_order, "type A pole order mismatch");
    r.tauberian = (pd.coefficient * tauber_norm).rounded(kDyadicBits);
    r.constant = r.tauberian;
    r.zeta_values_used = pd.zetas;
    r.route = "residue of " + zeta_product_to_string(zeta_product(type, n, ell));
    r.cross_check = (k_limit_local(type, n, ell, ab, work) * tauber_norm).rounded(kDyadicBits);
    r.cross_route = "Euler product of local factors";
    ensure(r.cross_check.overlaps(r.constant), "type A constant: routes disagree");
    return r;
  }

  if (ell < 0 || ell > 2 * n) throw NotImplementedForParameters("type C asymptotics need l in [0, 2n]");
  const Rational norm = remark_normalization(n, ell, ab.pole_order);
  Interval k;
  if (has_zeta_product(type, n)) {
    PoleData pd = leading_pole(zeta_product(type, n, ell), ab.alpha);
    ensure(pd.order == ab.pole_order, "type C pole order mismatch");
    k = (pd.coefficient * ipow(Interval(Rational(n)), pd.order)).rounded(kDyadicBits);
    r.zeta_values_used = pd.zetas;
    r.route = "k-limit of " + zeta_product_to_string(zeta_product(type, n, ell));
  } else if (ell == 0 || ell == n || ell == 2 * n) {
    if (n > 8) throw SizeLimit("gamma route capped at n = 8");
    const int kind = ell == n ? n : 0;
    if (ell == n) {
      if (!check_igusa_ln(n)) throw NotImplementedForParameters("Igusa form at l = n fails for this n");
      r.conditional = true;
    }
    Interval g = gamma_value(n, kind, work);
    const int top = ell == n ? n - 1 : n;
    for (int i = 1; i <= top; ++i) {
      int s = i * (i + 1) / 2 + 1;
      g = (g * zeta_value(s)).rounded(kDyadicBits);
      r.zeta_values_used.push_back("zeta(" + std::to_string(s) + ")");
    }
    k = g;
    r.route = std::string("gamma_{n,") + (kind == 0 ? "0" : "n") + "} Euler product";
  } else {
    throw NotImplementedForParameters("type C constants for n >= 3 only at l in {0, n, 2n}");
  }
  r.constant = (k * Interval(norm)).rounded(kDyadicBits);
  r.tauberian = (k * ipow(Interval(Rational(1, n)), ab.pole_order) * tauber_norm).rounded(kDyadicBits);
  if (n <= 5) {
    r.cross_check = (k_limit_euler(n, ell, work) * Interval(norm)).rounded(kDyadicBits);
    r.cross_route = "Euler product of local factors";
    ensure(r.cross_check.overlaps(r.constant), "type C constant: routes disagree");
  } else {
    r.cross_check = r.constant;
    r.cross_route = "none";
  }
  return r;
}

namespace {

Rational mpfr_to_rational(const mpfr_t x) {
  Rational q;
  mpfr_get_q(q.get_mpq_t(), x);
  return q;
}

// [lo, hi] containing N^alpha (log N)^w
Interval growth(long N, const Rational& alpha, int w) {
  Interval out;
  for (int dir = 0; dir < 2; ++dir) {
    mpfr_rnd_t rnd = dir == 0 ? MPFR_RNDD : MPFR_RNDU;
    mpfr_t a, l;
    mpfr_inits2(256, a, l, static_cast<mpfr_ptr>(nullptr));
    Integer pw = ipow(Integer(N), alpha.get_num().get_ui());
    mpfr_set_z(a, pw.get_mpz_t(), rnd);
    mpfr_rootn_ui(a, a, alpha.get_den().get_ui(), rnd);
    mpfr_set_si(l, N, rnd);
    mpfr_log(l, l, rnd);
    for (int i = 0; i < w; ++i) mpfr_mul(a, a, l, rnd);
    (dir == 0 ? out.lo : out.hi) = mpfr_to_rational(a);
    mpfr_clears(a, l, static_cast<mpfr_ptr>(nullptr));
  }
  return out;
}

}  // namespace

PartialSumProbe partial_sum_probe(ZetaType type, int n, int ell, long N) {
  DirichletCoefficients c = global_coeffs(type, n, ell, N);
  PartialSumProbe r;
  r.N = N;
  for (long m = 1; m <= N; ++m) r.sum += c[m];
  AsymptoticReport rep = asymptotic_constant(type, n, ell, Rational(1, 1000000000));
  Interval g = growth(N, rep.abscissa, rep.pole_order - 1);
  r.predicted = (rep.constant * g).rounded(kDyadicBits);
  r.tauberian_predicted = (rep.tauberian * g).rounded(kDyadicBits);
  const double s = r.sum.get_d();
  r.ratio = r.predicted.mid() > 0 ? s / r.predicted.mid() : 0;
  r.tauberian_ratio = r.tauberian_predicted.mid() > 0 ? s / r.tauberian_predicted.mid() : 0;
  return r;
}

}  // namespace ehz
