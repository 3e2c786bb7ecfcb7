#include "ehz/qcombinat.hpp"

#include <algorithm>
#include <sstream>

#include "ehz/errors.hpp"

namespace ehz {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw RangeError("negative part in partition");
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1]) throw RangeError("partition parts must be weakly decreasing");
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::size() const {
  int s = 0;
  for (int p : parts_) s += p;
  return s;
}

int Partition::operator[](int i) const {
  return (i >= 0 && i < length()) ? parts_[static_cast<size_t>(i)] : 0;
}

std::vector<int> Partition::inc(int n) const {
  if (length() > n) throw RangeError("partition has more than n parts");
  std::vector<int> r(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) r[static_cast<size_t>(i)] = (*this)[i] - (*this)[i + 1];
  return r;
}

bool Partition::contains(const Partition& mu) const {
  for (int i = 0; i < mu.length(); ++i)
    if (mu[i] > (*this)[i]) return false;
  return true;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ")";
  return os.str();
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> c(static_cast<size_t>(lambda[0]), 0);
  for (int p : lambda.parts())
    for (int j = 0; j < p; ++j) ++c[static_cast<size_t>(j)];
  return Partition(c);
}

Partition partition_2b1a(int a, int b) {
  std::vector<int> p(static_cast<size_t>(b), 2);
  p.insert(p.end(), static_cast<size_t>(a), 1);
  return Partition(p);
}

Mask to_mask(const Subset& s) {
  Mask m = 0;
  for (int i : s) {
    if (i < 1 || i > 32) throw RangeError("subset element out of range");
    m |= Mask(1) << (i - 1);
  }
  return m;
}

Subset from_mask(Mask m) {
  Subset s;
  for (int i = 1; m; ++i, m >>= 1)
    if (m & 1u) s.push_back(i);
  return s;
}

LaurentPoly qbinom(int a, int b) {
  if (b < 0 || a < 0 || b > a) throw RangeError("qbinom needs 0 <= b <= a");
  // Pascal rule binom(a,b) = binom(a-1,b-1) + Y^b binom(a-1,b)
  std::vector<LaurentPoly> row{LaurentPoly(1)};
  for (int r = 1; r <= a; ++r) {
    std::vector<LaurentPoly> next(static_cast<size_t>(r) + 1);
    next[0] = LaurentPoly(1);
    next[static_cast<size_t>(r)] = LaurentPoly(1);
    for (int k = 1; k < r; ++k)
      next[static_cast<size_t>(k)] = row[static_cast<size_t>(k - 1)] + row[static_cast<size_t>(k)].shifted(k);
    row = std::move(next);
  }
  return row[static_cast<size_t>(b)];
}

LaurentPoly qmultinom(int n, const Subset& S) {
  Subset s;
  for (int x : S) {
    if (x < 0 || x > n) throw RangeError("qmultinom: element outside [0, n]");
    if (x != 0) s.push_back(x);
  }
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  LaurentPoly r(1);
  int top = n;
  for (auto it = s.rbegin(); it != s.rend(); ++it) {
    r *= qbinom(top, *it);
    top = *it;
  }
  return r;
}

LaurentPoly psi_poly(int n, Mask I, Mask J) {
  if (n < 0 || n > 31) throw RangeError("psi_poly: n out of range");
  Mask full = n == 0 ? 0 : ((Mask(1) << n) - 1);
  if ((I & ~full) || (J & ~full)) throw RangeError("psi_poly: index set not inside [n]");
  // multinomial over (I-1) u (J-1) without 0
  Subset S;
  for (int x = 1; x <= n - 1; ++x)
    if ((I >> x) & 1u || (J >> x) & 1u) S.push_back(x);
  LaurentPoly r = qmultinom(n - 1, S);
  // lexicographically sorted poset (I x {0}) u ((J-1) x {1}); covers are adjacencies
  std::vector<std::pair<int, int>> P;
  for (int i = 1; i <= n; ++i)
    if ((I >> (i - 1)) & 1u) P.emplace_back(i, 0);
  for (int j = 1; j <= n; ++j)
    if ((J >> (j - 1)) & 1u) P.emplace_back(j - 1, 1);
  std::sort(P.begin(), P.end());
  for (size_t k = 0; k + 1 < P.size(); ++k) {
    if (P[k].second == 0 && P[k + 1].second == 1) {
      int i = P[k].first, j = P[k + 1].first;
      r *= LaurentPoly(1) - LaurentPoly::monomial(j - i + 1);
    }
  }
  return r;
}

LaurentPoly psi_poly(int n, const Subset& I, const Subset& J) { return psi_poly(n, to_mask(I), to_mask(J)); }

LaurentPoly theta_poly(int n, const Subset& I, const Subset& J) {
  Mask mi = to_mask(I), mj = to_mask(J);
  int ci = __builtin_popcount(mi), cj = __builtin_popcount(mj);
  LaurentPoly r;
  // A runs over subsets of I, B over subsets of J
  for (Mask a = mi;; a = (a - 1) & mi) {
    for (Mask b = mj;; b = (b - 1) & mj) {
      int sign = ((ci - __builtin_popcount(a)) + (cj - __builtin_popcount(b))) % 2 ? -1 : 1;
      LaurentPoly p = psi_poly(n, a, b);
      if (sign > 0)
        r += p;
      else
        r -= p;
      if (b == 0) break;
    }
    if (a == 0) break;
  }
  return r;
}

int beta(int n, Mask I) {
  int s = 0;
  for (int i = 1; i <= n; ++i)
    if ((I >> (i - 1)) & 1u) s += i * (i + 1) / 2 + i * (n - i);
  return s;
}

int beta(int n, const Subset& I) {
  for (int i : I)
    if (i < 1 || i > n) throw RangeError("beta: index outside [n]");
  return beta(n, to_mask(I));
}

void for_each_perm(int n, const std::function<void(const PermStat&)>& visit, int limit) {
  if (n < 1) throw RangeError("permutations need n >= 1");
  if (n > limit) throw SizeLimit("permutation enumeration capped at n = " + std::to_string(limit));
  PermStat s;
  s.perm.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) s.perm[static_cast<size_t>(i)] = i + 1;
  do {
    s.des = s.inv = s.maj = 0;
    s.descents = 0;
    int bsum = 0;
    for (int i = 0; i + 1 < n; ++i) {
      if (s.perm[static_cast<size_t>(i)] > s.perm[static_cast<size_t>(i + 1)]) {
        ++s.des;
        s.maj += i + 1;
        bsum += (i + 1) * (i + 2) / 2;
        s.descents |= Mask(1) << i;
      }
    }
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (s.perm[static_cast<size_t>(i)] > s.perm[static_cast<size_t>(j)]) ++s.inv;
    s.binv = s.inv + bsum;
    visit(s);
  } while (std::next_permutation(s.perm.begin(), s.perm.end()));
}

std::vector<PermStat> perm_stats(int n, int limit) {
  if (n > limit) throw SizeLimit("permutation list capped at n = " + std::to_string(limit));
  std::vector<PermStat> out;
  for_each_perm(n, [&](const PermStat& s) { out.push_back(s); }, limit);
  return out;
}

LaurentPoly perm_distribution(int n, const std::function<int(const PermStat&)>& f) {
  std::map<int, long long> counts;
  for_each_perm(n, [&](const PermStat& s) { ++counts[f(s)]; });
  LaurentPoly r;
  for (const auto& [e, c] : counts) r.add_term(e, Rational(static_cast<long>(c)));
  return r;
}

BivariatePoly igusa_numerator(int n, const std::vector<QTMonomial>& X) {
  if (static_cast<int>(X.size()) != n) throw RangeError("igusa: need exactly n monomials");
  if (n > 9) throw SizeLimit("igusa capped at n = 9");
  std::map<std::pair<int, int>, long long> acc;
  for_each_perm(n, [&](const PermStat& s) {
    int qe = -s.inv, te = 0;
    for (int i = 1; i < n; ++i)
      if ((s.descents >> (i - 1)) & 1u) {
        qe += X[static_cast<size_t>(i - 1)].qe;
        te += X[static_cast<size_t>(i - 1)].te;
      }
    ++acc[{qe, te}];
  });
  BivariatePoly num;
  for (const auto& [k, c] : acc) num.add_term(k.first, k.second, Rational(static_cast<long>(c)));
  return num;
}

RationalFunctionQT igusa(int n, const std::vector<QTMonomial>& X) {
  BivariatePoly num = igusa_numerator(n, X);
  bool factored = true;
  std::vector<Binomial> den;
  for (const auto& x : X) {
    if (x.te <= 0) factored = false;
    den.push_back({x.qe, x.te});
  }
  if (factored) return rf_from_factored(num, den);
  BivariatePoly d(1);
  for (const auto& x : X) d = d * BivariatePoly::one_minus(x.qe, x.te);
  return rf_normalize(num, d);
}

Rational sym_rank_count(int a, int r, const Rational& q) {
  if (a < 0 || r < 0 || r > a) throw RangeError("sym_rank_count needs 0 <= r <= a");
  int k = a - r;
  Rational qi = 1 / q;
  Rational v = rpow(q, a * (a + 1) / 2 - k * (k + 1) / 2) * qbinom(a, k).eval(qi);
  for (int d = 1; d <= (a - k + 1) / 2; ++d) v *= 1 - rpow(q, -2 * d + 1);
  return v;
}

bool qidentity_check(int m) {
  if (m < 0) throw RangeError("qidentity_check needs m >= 0");
  // X is carried by q, Y by t
  BivariatePoly lhs(1);
  for (int i = 1; i <= m; ++i) lhs = lhs * (BivariatePoly(1) + BivariatePoly::monomial(i, 1));
  BivariatePoly rhs;
  for (int j = 0; j <= m; ++j)
    rhs += BivariatePoly::from_q_poly(qbinom(m, j).shifted(j * (j + 1) / 2), j);
  return lhs == rhs;
}

}  // namespace ehz
