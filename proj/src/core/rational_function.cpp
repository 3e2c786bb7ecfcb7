#include "ehz/core/rational_function.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>

#include "ehz/errors.hpp"

namespace ehz {

namespace {

// Polynomials in t with coefficients in Q[q, 1/q], dense in t.
using TPoly = std::vector<LaurentPoly>;

void trim(TPoly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

TPoly to_tpoly(const BivariatePoly& p) {
  if (p.is_zero()) return {};
  TPoly a = p.t_coeffs();
  trim(a);
  return a;
}

BivariatePoly from_tpoly(const TPoly& a) { return BivariatePoly::from_t_coeffs(a); }

int deg(const TPoly& a) { return static_cast<int>(a.size()) - 1; }

LaurentPoly content(const TPoly& a) {
  LaurentPoly g;
  for (const auto& c : a) {
    g = gcd(g, c);
    if (g.is_monomial()) break;  // already a unit
  }
  return g;
}

TPoly div_scalar(const TPoly& a, const LaurentPoly& c) {
  TPoly r;
  r.reserve(a.size());
  for (const auto& x : a) {
    auto q = exact_div(x, c);
    ensure(q.has_value(), "content division not exact");
    r.push_back(*q);
  }
  return r;
}

TPoly primitive(const TPoly& a) {
  if (a.empty()) return a;
  return div_scalar(a, content(a));
}

// lc(b)^k a - ... until deg < deg b
TPoly prem(TPoly a, const TPoly& b) {
  const LaurentPoly& lb = b.back();
  int db = deg(b);
  while (!a.empty() && deg(a) >= db) {
    LaurentPoly la = a.back();
    int shift = deg(a) - db;
    for (auto& x : a) x *= lb;
    for (int i = 0; i <= db; ++i) a[static_cast<size_t>(i + shift)] -= la * b[static_cast<size_t>(i)];
    trim(a);
  }
  return a;
}

std::optional<TPoly> try_div(TPoly a, const TPoly& b) {
  ensure(!b.empty(), "division by zero polynomial");
  if (a.empty()) return TPoly{};
  if (deg(a) < deg(b)) return std::nullopt;
  TPoly q(static_cast<size_t>(deg(a) - deg(b) + 1));
  const LaurentPoly& lb = b.back();
  int db = deg(b);
  while (!a.empty() && deg(a) >= db) {
    auto c = exact_div(a.back(), lb);
    if (!c) return std::nullopt;
    int shift = deg(a) - db;
    q[static_cast<size_t>(shift)] = *c;
    for (int i = 0; i <= db; ++i) a[static_cast<size_t>(i + shift)] -= *c * b[static_cast<size_t>(i)];
    ensure(a.back().is_zero(), "leading term did not cancel");
    trim(a);
  }
  if (!a.empty()) return std::nullopt;
  trim(q);
  return q;
}

// gcd over Q[q, 1/q][t] by the primitive polynomial remainder sequence
TPoly tgcd(const TPoly& a0, const TPoly& b0) {
  if (a0.empty()) return b0;
  if (b0.empty()) return a0;
  LaurentPoly c = gcd(content(a0), content(b0));
  TPoly a = primitive(a0), b = primitive(b0);
  if (deg(a) < deg(b)) std::swap(a, b);
  while (!b.empty()) {
    if (deg(b) == 0) {
      a = TPoly{LaurentPoly(1)};
      break;
    }
    TPoly r = prem(a, b);
    a = std::move(b);
    b = r.empty() ? TPoly{} : primitive(r);
  }
  for (auto& x : a) x *= c;
  return a;
}

}  // namespace

RationalFunctionQT::RationalFunctionQT(const BivariatePoly& num) : num_(num), den_(1) {
  if (num_.is_zero()) return;
  int k = std::min(num_.min_q(), 0);
  if (k < 0) {
    num_ = num_.times_monomial(-k, 0);
    den_ = BivariatePoly::monomial(-k, 0);
  }
}

namespace {

// Assumes num and den coprime; fixes the q-power unit and the scalar.
void canonicalize(BivariatePoly& num, BivariatePoly& den) {
  if (num.is_zero()) {
    den = BivariatePoly(1);
    return;
  }
  int k = std::min(num.min_q(), den.min_q());
  if (k != 0) {
    num = num.times_monomial(-k, 0);
    den = den.times_monomial(-k, 0);
  }
  Rational c = den.terms().begin()->second;
  if (c != 1) {
    Rational inv = 1 / c;
    num *= inv;
    den *= inv;
  }
}

}  // namespace

RationalFunctionQT rf_normalize(const BivariatePoly& num, const BivariatePoly& den) {
  if (den.is_zero()) throw ZeroDenominator("rational function with zero denominator");
  RationalFunctionQT r;
  if (num.is_zero()) return r;
  // work in T = t^g when every exponent is a multiple of g
  int g = std::gcd(num.t_exponent_gcd(), den.t_exponent_gcd());
  if (g == 0) g = 1;
  auto down = [g](int a, int b) { return BivariatePoly::Key{a, b / g}; };
  auto up = [g](int a, int b) { return BivariatePoly::Key{a, b * g}; };
  TPoly n = to_tpoly(g == 1 ? num : num.map_exponents(down));
  TPoly d = to_tpoly(g == 1 ? den : den.map_exponents(down));
  TPoly h = tgcd(n, d);
  if (!(deg(h) == 0 && h[0].is_monomial())) {
    auto nq = try_div(n, h);
    auto dq = try_div(d, h);
    ensure(nq && dq, "gcd does not divide");
    n = *nq;
    d = *dq;
  }
  r.num_ = from_tpoly(n);
  r.den_ = from_tpoly(d);
  if (g != 1) {
    r.num_ = r.num_.map_exponents(up);
    r.den_ = r.den_.map_exponents(up);
  }
  canonicalize(r.num_, r.den_);
  return r;
}

RationalFunctionQT rf_from_coprime(const BivariatePoly& num, const BivariatePoly& den) {
  if (den.is_zero()) throw ZeroDenominator("rational function with zero denominator");
  RationalFunctionQT r;
  r.num_ = num;
  r.den_ = den;
  canonicalize(r.num_, r.den_);
  return r;
}

RationalFunctionQT rf_from_factored(const BivariatePoly& num, const std::vector<Binomial>& den,
                                    std::vector<Binomial>* remaining) {
  std::vector<Binomial> factors = den;
  std::sort(factors.begin(), factors.end());
  for (const auto& f : factors)
    if (f.b <= 0) throw RangeError("denominator factor without t");
  RationalFunctionQT r;
  std::vector<Binomial> kept;
  if (num.is_zero()) {
    if (remaining) remaining->clear();
    return r;
  }
  int g = num.t_exponent_gcd();
  for (const auto& f : factors) g = std::gcd(g, f.b);
  auto down = [g](int a, int b) { return BivariatePoly::Key{a, b / g}; };
  auto up = [g](int a, int b) { return BivariatePoly::Key{a, b * g}; };
  TPoly n = to_tpoly(num.map_exponents(down));
  for (const auto& f : factors) {
    TPoly b = to_tpoly(BivariatePoly::one_minus(f.a, f.b / g));
    auto q = try_div(n, b);
    if (q) {
      n = std::move(*q);
    } else {
      kept.push_back(f);
    }
  }
  BivariatePoly d(1);
  bool linear = true;  // kept factors linear in t^g are coprime to n
  for (const auto& f : kept) {
    d = d * BivariatePoly::one_minus(f.a, f.b);
    if (f.b != g) linear = false;
  }
  if (!linear) {
    if (remaining) *remaining = kept;
    return rf_normalize(from_tpoly(n).map_exponents(up), d);
  }
  r.num_ = from_tpoly(n).map_exponents(up);
  r.den_ = d;
  canonicalize(r.num_, r.den_);
  if (remaining) *remaining = kept;
  return r;
}

RationalFunctionQT RationalFunctionQT::operator+(const RationalFunctionQT& o) const {
  if (den_ == o.den_) return rf_normalize(num_ + o.num_, den_);
  return rf_normalize(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunctionQT RationalFunctionQT::operator-(const RationalFunctionQT& o) const { return *this + (-o); }

RationalFunctionQT RationalFunctionQT::operator*(const RationalFunctionQT& o) const {
  return rf_normalize(num_ * o.num_, den_ * o.den_);
}

RationalFunctionQT RationalFunctionQT::operator/(const RationalFunctionQT& o) const {
  if (o.is_zero()) throw ZeroDenominator("division by the zero rational function");
  return rf_normalize(num_ * o.den_, den_ * o.num_);
}

RationalFunctionQT RationalFunctionQT::operator-() const {
  RationalFunctionQT r = *this;
  r.num_ = -r.num_;
  return r;
}

std::string RationalFunctionQT::to_string() const {
  if (den_ == BivariatePoly(1)) return "(" + num_.to_string() + ")";
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RationalFunctionQT rf_substitute_q_inverse(const RationalFunctionQT& f) {
  // q -> 1/q is a ring automorphism, so coprimality survives; only the unit changes
  return rf_from_coprime(f.num().substitute_q_inverse(), f.den().substitute_q_inverse());
}

RationalFunctionQT rf_invert_qt(const RationalFunctionQT& f) {
  int d = std::max(f.num().t_degree(), f.den().t_degree());
  auto inv = [d](int a, int b) { return BivariatePoly::Key{-a, d - b}; };
  // t -> 1/t times t^d; num and den cannot both pick up a power of t
  return rf_from_coprime(f.num().map_exponents(inv), f.den().map_exponents(inv));
}

RationalFunctionQT rf_shift_t_power(const RationalFunctionQT& f, int n, int c) {
  auto shift = [n, c](int a, int b) {
    if (b % n != 0) throw NonMultipleExponent("t-exponent " + std::to_string(b) + " not a multiple of " + std::to_string(n));
    return BivariatePoly::Key{a + c * (b / n), b};
  };
  return rf_from_coprime(f.num().map_exponents(shift), f.den().map_exponents(shift));
}

RationalFunctionQT rf_times_monomial(const RationalFunctionQT& f, int qe, int te, const Rational& c) {
  if (te == 0 || (te > 0 && f.den().min_t() == 0)) return rf_from_coprime(f.num().times_monomial(qe, te) * c, f.den());
  if (te >= 0) return rf_normalize(f.num().times_monomial(qe, te) * c, f.den());
  return rf_normalize(f.num().times_monomial(qe, 0) * c, f.den().times_monomial(0, -te));
}

TruncatedSeries rf_expand(const RationalFunctionQT& f, int order) {
  if (order < 0) throw RangeError("negative expansion order");
  std::vector<LaurentPoly> n = f.num().is_zero() ? std::vector<LaurentPoly>{} : f.num().t_coeffs();
  std::vector<LaurentPoly> d = f.den().t_coeffs();
  if (d.empty() || d[0].is_zero()) throw NotExpandable("denominator vanishes at t = 0");
  if (!d[0].is_monomial())
    throw NotExpandable("denominator at t = 0 is not a unit in Q[q, 1/q]: " + d[0].to_string("q"));
  int e0 = d[0].min_degree();
  LaurentPoly inv0 = LaurentPoly::monomial(-e0, 1 / d[0].coeff(e0));
  TruncatedSeries s;
  s.order = order;
  s.coeffs.resize(static_cast<size_t>(order) + 1);
  for (int k = 0; k <= order; ++k) {
    LaurentPoly acc = k < static_cast<int>(n.size()) ? n[static_cast<size_t>(k)] : LaurentPoly();
    for (int j = 1; j <= k && j < static_cast<int>(d.size()); ++j)
      if (!d[static_cast<size_t>(j)].is_zero()) acc -= d[static_cast<size_t>(j)] * s.coeffs[static_cast<size_t>(k - j)];
    s.coeffs[static_cast<size_t>(k)] = acc * inv0;
  }
  return s;
}

std::vector<Rational> TruncatedSeries::eval_q(const Rational& q) const {
  std::vector<Rational> r;
  r.reserve(coeffs.size());
  for (const auto& c : coeffs) r.push_back(c.eval(q));
  return r;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
  TruncatedSeries r;
  r.order = std::min(order, o.order);
  r.coeffs.assign(static_cast<size_t>(r.order) + 1, LaurentPoly());
  for (int i = 0; i <= r.order; ++i)
    for (int j = 0; i + j <= r.order; ++j)
      r.coeffs[static_cast<size_t>(i + j)] += coeffs[static_cast<size_t>(i)] * o.coeffs[static_cast<size_t>(j)];
  return r;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
  TruncatedSeries r;
  r.order = std::min(order, o.order);
  r.coeffs.resize(static_cast<size_t>(r.order) + 1);
  for (int i = 0; i <= r.order; ++i)
    r.coeffs[static_cast<size_t>(i)] = coeffs[static_cast<size_t>(i)] + o.coeffs[static_cast<size_t>(i)];
  return r;
}

Rational rf_evaluate(const RationalFunctionQT& f, const Rational& q0, const Rational& t0) {
  Rational d = f.den().eval(q0, t0);
  if (d == 0) throw PoleAtPoint("denominator vanishes at (" + q0.get_str() + ", " + t0.get_str() + ")");
  return f.num().eval(q0, t0) / d;
}

std::string rf_to_latex(const RationalFunctionQT& f) {
  if (f.den() == BivariatePoly(1)) return f.num().to_latex();
  return "\\frac{" + f.num().to_latex() + "}{" + f.den().to_latex() + "}";
}

std::string rf_to_latex_factored(const BivariatePoly& num, const std::vector<Binomial>& den) {
  std::map<Binomial, int> mult;
  for (const auto& b : den) ++mult[b];
  std::vector<std::pair<Binomial, int>> fs(mult.begin(), mult.end());
  // order factors by t-exponent, then q-exponent
  std::sort(fs.begin(), fs.end(), [](const auto& x, const auto& y) {
    return x.first.b != y.first.b ? x.first.b < y.first.b : x.first.a < y.first.a;
  });
  std::ostringstream os;
  for (const auto& [b, m] : fs) {
    os << "(1 - " << BivariatePoly::monomial(b.a, b.b).to_latex() << ")";
    if (m > 1) os << "^{" << m << "}";
  }
  std::string d = os.str();
  if (d.empty()) return num.to_latex();
  return "\\frac{" + num.to_latex() + "}{" + d + "}";
}

}  // namespace ehz
