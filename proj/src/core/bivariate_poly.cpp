#include "ehz/core/bivariate_poly.hpp"

#include <numeric>
#include <sstream>

#include "ehz/errors.hpp"

namespace ehz {

BivariatePoly::BivariatePoly(const Rational& c) {
  if (c != 0) terms_.emplace(Key{0, 0}, c);
}

BivariatePoly BivariatePoly::monomial(int qe, int te, const Rational& c) {
  BivariatePoly p;
  p.add_term(qe, te, c);
  return p;
}

BivariatePoly BivariatePoly::one_minus(int a, int b) {
  BivariatePoly p(1);
  p.add_term(a, b, -1);
  return p;
}

BivariatePoly BivariatePoly::from_q_poly(const LaurentPoly& a, int te) {
  BivariatePoly p;
  for (const auto& [e, c] : a.terms()) p.add_term(e, te, c);
  return p;
}

BivariatePoly BivariatePoly::from_t_coeffs(const std::vector<LaurentPoly>& c) {
  BivariatePoly p;
  for (size_t k = 0; k < c.size(); ++k)
    for (const auto& [e, v] : c[k].terms()) p.add_term(e, static_cast<int>(k), v);
  return p;
}

Rational BivariatePoly::coeff(int qe, int te) const {
  auto it = terms_.find(Key{qe, te});
  return it == terms_.end() ? Rational(0) : it->second;
}

void BivariatePoly::add_term(int qe, int te, const Rational& c) {
  if (c == 0) return;
  if (te < 0) throw RangeError("negative t-exponent in a bivariate polynomial");
  auto [it, inserted] = terms_.emplace(Key{qe, te}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int BivariatePoly::t_degree() const {
  int d = 0;
  for (const auto& kv : terms_) d = std::max(d, kv.first.second);
  return d;
}

int BivariatePoly::min_t() const {
  ensure(!terms_.empty(), "min_t of zero");
  int d = terms_.begin()->first.second;
  for (const auto& kv : terms_) d = std::min(d, kv.first.second);
  return d;
}

int BivariatePoly::min_q() const {
  ensure(!terms_.empty(), "min_q of zero");
  return terms_.begin()->first.first;
}

int BivariatePoly::max_q() const {
  ensure(!terms_.empty(), "max_q of zero");
  return terms_.rbegin()->first.first;
}

int BivariatePoly::t_exponent_gcd() const {
  int g = 0;
  for (const auto& kv : terms_) g = std::gcd(g, kv.first.second);
  return g;
}

std::vector<LaurentPoly> BivariatePoly::t_coeffs() const {
  std::vector<LaurentPoly> c(static_cast<size_t>(t_degree()) + 1);
  for (const auto& [k, v] : terms_) c[static_cast<size_t>(k.second)].add_term(k.first, v);
  return c;
}

BivariatePoly& BivariatePoly::operator+=(const BivariatePoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
  return *this;
}

BivariatePoly& BivariatePoly::operator-=(const BivariatePoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
  return *this;
}

BivariatePoly& BivariatePoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& kv : terms_) kv.second *= c;
  return *this;
}

BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b) {
  BivariatePoly r;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
  return r;
}

BivariatePoly BivariatePoly::operator-() const {
  BivariatePoly r = *this;
  for (auto& kv : r.terms_) kv.second = -kv.second;
  return r;
}

BivariatePoly BivariatePoly::times_monomial(int qe, int te) const {
  BivariatePoly r;
  for (const auto& [k, c] : terms_) r.add_term(k.first + qe, k.second + te, c);
  return r;
}

BivariatePoly BivariatePoly::substitute_q_inverse() const {
  BivariatePoly r;
  for (const auto& [k, c] : terms_) r.add_term(-k.first, k.second, c);
  return r;
}

BivariatePoly BivariatePoly::map_exponents(const std::function<Key(int, int)>& f) const {
  BivariatePoly r;
  for (const auto& [k, c] : terms_) {
    Key nk = f(k.first, k.second);
    r.add_term(nk.first, nk.second, c);
  }
  return r;
}

Rational BivariatePoly::eval(const Rational& q, const Rational& t) const {
  Rational r = 0;
  for (const auto& [k, c] : terms_) {
    if (k.first < 0 && q == 0) throw PoleAtPoint("negative q-power at q = 0");
    r += c * rpow(q, k.first) * rpow(t, k.second);
  }
  return r;
}

LaurentPoly BivariatePoly::eval_t(const Rational& t) const {
  LaurentPoly r;
  for (const auto& [k, c] : terms_) r.add_term(k.first, c * rpow(t, k.second));
  return r;
}

namespace {

std::string render(const BivariatePoly::Terms& terms, bool latex) {
  if (terms.empty()) return "0";
  // order by t-exponent, then q-exponent, both ascending
  std::map<std::pair<int, int>, Rational> byt;
  for (const auto& [k, c] : terms) byt.emplace(std::make_pair(k.second, k.first), c);
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c0] : byt) {
    Rational c = c0;
    bool neg = c < 0;
    if (neg) c = -c;
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    first = false;
    std::string mono;
    auto pw = [&](const char* v, int e) {
      if (e == 0) return std::string();
      if (e == 1) return std::string(v);
      return std::string(v) + (latex ? "^{" + std::to_string(e) + "}" : "^" + std::to_string(e));
    };
    mono = pw("q", k.second) + pw("t", k.first);
    if (mono.empty()) {
      os << c.get_str();
      continue;
    }
    if (c != 1) {
      if (c.get_den() == 1)
        os << c.get_str();
      else if (latex)
        os << "\\frac{" << c.get_num().get_str() << "}{" << c.get_den().get_str() << "}";
      else
        os << "(" << c.get_str() << ")";
    }
    os << mono;
  }
  return os.str();
}

}  // namespace

std::string BivariatePoly::to_string() const { return render(terms_, false); }
std::string BivariatePoly::to_latex() const { return render(terms_, true); }

BivariatePoly pow(const BivariatePoly& a, unsigned e) {
  BivariatePoly r(1), b = a;
  while (e) {
    if (e & 1u) r = r * b;
    e >>= 1u;
    if (e) b = b * b;
  }
  return r;
}

}  // namespace ehz
