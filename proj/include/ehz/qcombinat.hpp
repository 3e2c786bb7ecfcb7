#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ehz/core/laurent_poly.hpp"
#include "ehz/core/rational_function.hpp"

namespace ehz {

// Weakly decreasing nonnegative parts, trailing zeros trimmed.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);  // throws RangeError unless weakly decreasing, >= 0

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;              // |lambda|
  int operator[](int i) const;   // 0-based, zero past the end
  // (lambda_1 - lambda_2, ..., lambda_{n-1} - lambda_n, lambda_n)
  std::vector<int> inc(int n) const;
  bool contains(const Partition& mu) const;
  std::string to_string() const;

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
  bool operator<(const Partition& o) const { return parts_ < o.parts_; }

 private:
  std::vector<int> parts_;
};

Partition conjugate(const Partition& lambda);
// (2^b, 1^a)
Partition partition_2b1a(int a, int b);

// Subsets of [n] are sorted vectors of distinct positive integers.
using Subset = std::vector<int>;
using Mask = std::uint32_t;  // bit i-1 set iff i in the subset
Mask to_mask(const Subset& s);
Subset from_mask(Mask m);

LaurentPoly qbinom(int a, int b);
// multinomial of n over S, zeros in S ignored
LaurentPoly qmultinom(int n, const Subset& S);
LaurentPoly psi_poly(int n, const Subset& I, const Subset& J);
LaurentPoly psi_poly(int n, Mask I, Mask J);
LaurentPoly theta_poly(int n, const Subset& I, const Subset& J);
int beta(int n, const Subset& I);
int beta(int n, Mask I);

struct PermStat {
  std::vector<int> perm;  // one-line notation, values 1..n
  int des = 0;
  int inv = 0;
  int maj = 0;
  int binv = 0;
  Mask descents = 0;
};

inline constexpr int kPermVisitLimit = 13;
inline constexpr int kPermListLimit = 10;

// Visits S_n in lexicographic order. SizeLimit for n > limit.
void for_each_perm(int n, const std::function<void(const PermStat&)>& visit, int limit = kPermVisitLimit);
std::vector<PermStat> perm_stats(int n, int limit = kPermListLimit);
// sum over S_n of Y^{f(w)}
LaurentPoly perm_distribution(int n, const std::function<int(const PermStat&)>& f);

struct QTMonomial {
  int qe = 0;
  int te = 0;
};

// Igusa function with Y = 1/q and monomials X_i = q^{qe} t^{te}
RationalFunctionQT igusa(int n, const std::vector<QTMonomial>& X);
// numerator polynomial only (denominator is prod (1 - X_i))
BivariatePoly igusa_numerator(int n, const std::vector<QTMonomial>& X);

// number of symmetric a x a matrices of rank r over F_q
Rational sym_rank_count(int a, int r, const Rational& q);

// prod_{i=1}^m (1 + X^i Y) == sum_j Y^j X^{C(j+1,2)} binom(m,j)_X, checked symbolically
bool qidentity_check(int m);

}  // namespace ehz
