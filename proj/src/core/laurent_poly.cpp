#include "ehz/core/laurent_poly.hpp"

#include <sstream>

#include "ehz/errors.hpp"

namespace ehz {

LaurentPoly::LaurentPoly(const Rational& c) {
  if (c != 0) terms_.emplace(0, c);
}

LaurentPoly LaurentPoly::monomial(int e, const Rational& c) {
  LaurentPoly p;
  if (c != 0) p.terms_.emplace(e, c);
  return p;
}

LaurentPoly LaurentPoly::from_coeffs(const std::vector<long>& c, int lowest) {
  LaurentPoly p;
  for (size_t i = 0; i < c.size(); ++i) p.add_term(lowest + static_cast<int>(i), c[i]);
  return p;
}

int LaurentPoly::degree() const {
  ensure(!terms_.empty(), "degree of zero polynomial");
  return terms_.rbegin()->first;
}

int LaurentPoly::min_degree() const {
  ensure(!terms_.empty(), "min degree of zero polynomial");
  return terms_.begin()->first;
}

Rational LaurentPoly::coeff(int e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational LaurentPoly::leading_coeff() const { return terms_.empty() ? Rational(0) : terms_.rbegin()->second; }

void LaurentPoly::add_term(int e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& kv : terms_) kv.second *= c;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& kv : r.terms_) kv.second = -kv.second;
  return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + k, c);
  return r;
}

LaurentPoly LaurentPoly::compose_power(int k) const {
  ensure(k != 0, "compose_power with k = 0");
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.add_term(e * k, c);
  return r;
}

Rational LaurentPoly::eval(const Rational& y) const {
  if (terms_.empty()) return 0;
  if (y == 0 && min_degree() < 0) throw PoleAtPoint("negative power evaluated at 0");
  Rational r = 0;
  for (const auto& [e, c] : terms_) r += c * rpow(y, e);
  return r;
}

bool LaurentPoly::is_palindromic() const {
  if (terms_.empty()) return true;
  int s = min_degree() + degree();
  for (const auto& [e, c] : terms_)
    if (coeff(s - e) != c) return false;
  return true;
}

bool LaurentPoly::has_integer_coeffs() const {
  for (const auto& kv : terms_)
    if (kv.second.get_den() != 1) return false;
  return true;
}

bool LaurentPoly::has_nonnegative_coeffs() const {
  for (const auto& kv : terms_)
    if (kv.second < 0) return false;
  return true;
}

namespace {

std::string power(const std::string& var, int e, bool latex) {
  if (e == 0) return "";
  if (e == 1) return var;
  if (latex) return var + "^{" + std::to_string(e) + "}";
  return var + "^" + std::to_string(e);
}

}  // namespace

static std::string render(const LaurentPoly::Terms& terms, const std::string& var, bool latex) {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    Rational c = it->second;
    int e = it->first;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    std::string mono = power(var, e, latex);
    if (mono.empty()) {
      os << c.get_str();
    } else {
      if (c != 1) {
        if (latex && c.get_den() != 1)
          os << "\\frac{" << c.get_num().get_str() << "}{" << c.get_den().get_str() << "}";
        else if (c.get_den() != 1)
          os << "(" << c.get_str() << ")";
        else
          os << c.get_str();
      }
      os << mono;
    }
  }
  return os.str();
}

std::string LaurentPoly::to_string(const std::string& var) const { return render(terms_, var, false); }
std::string LaurentPoly::to_latex(const std::string& var) const { return render(terms_, var, true); }

LaurentPoly pow(const LaurentPoly& a, unsigned e) {
  LaurentPoly r(1), b = a;
  while (e) {
    if (e & 1u) r *= b;
    e >>= 1u;
    if (e) b *= b;
  }
  return r;
}

std::pair<LaurentPoly, LaurentPoly> divmod(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw ZeroDenominator("polynomial division by zero");
  if (a.is_zero()) return {LaurentPoly(), LaurentPoly()};
  int sa = a.min_degree(), sb = b.min_degree();
  LaurentPoly rem = a.shifted(-sa);
  LaurentPoly div = b.shifted(-sb);
  int db = div.degree();
  Rational lc = div.leading_coeff();
  LaurentPoly quot;
  while (!rem.is_zero() && rem.degree() >= db) {
    int e = rem.degree() - db;
    Rational c = rem.leading_coeff() / lc;
    quot.add_term(e, c);
    for (const auto& [eb, cb] : div.terms()) rem.add_term(eb + e, -c * cb);
  }
  return {quot.shifted(sa - sb), rem.shifted(sa)};
}

std::optional<LaurentPoly> exact_div(const LaurentPoly& a, const LaurentPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() && b.is_zero()) return LaurentPoly();
  LaurentPoly x = a.is_zero() ? LaurentPoly() : a.shifted(-a.min_degree());
  LaurentPoly y = b.is_zero() ? LaurentPoly() : b.shifted(-b.min_degree());
  while (!y.is_zero()) {
    LaurentPoly r = divmod(x, y).second;
    x = std::move(y);
    y = r.is_zero() ? LaurentPoly() : r.shifted(-r.min_degree());
  }
  x = x.shifted(-x.min_degree());
  return x * (Rational(1) / x.leading_coeff());
}

}  // namespace ehz
