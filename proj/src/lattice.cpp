#include "ehz/lattice.hpp"

#include <algorithm>
#include <numeric>

#include "ehz/errors.hpp"

namespace ehz {

namespace {

// a - f * b with overflow detection for machine integers
inline long long sub_mul(long long a, long long f, long long b) {
  long long prod, r;
  if (__builtin_mul_overflow(f, b, &prod) || __builtin_sub_overflow(a, prod, &r))
    throw RangeError("integer overflow in matrix normal form");
  return r;
}
inline Integer sub_mul(const Integer& a, const Integer& f, const Integer& b) { return a - f * b; }

inline long long fdiv(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}
inline Integer fdiv(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}
inline long long tdiv(long long a, long long b) { return a / b; }
inline Integer tdiv(const Integer& a, const Integer& b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}
inline bool is_zero(long long a) { return a == 0; }
inline bool is_zero(const Integer& a) { return a == 0; }
inline bool is_neg(long long a) { return a < 0; }
inline bool is_neg(const Integer& a) { return a < 0; }
inline bool abs_less(long long a, long long b) { return std::llabs(a) < std::llabs(b); }
inline bool abs_less(const Integer& a, const Integer& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()) < 0; }

IntMatrix to_integer(const Mat<long long>& A) {
  IntMatrix R(A.rows(), A.cols());
  for (Eigen::Index i = 0; i < A.size(); ++i) R(i) = Integer(static_cast<long>(A(i)));
  return R;
}

template <class S>
void row_sub(Mat<S>& A, Eigen::Index i, const S& f, Eigen::Index r) {
  if (is_zero(f)) return;
  for (Eigen::Index c = 0; c < A.cols(); ++c) A(i, c) = sub_mul(A(i, c), f, A(r, c));
}

template <class S>
void row_swap(Mat<S>& A, Eigen::Index i, Eigen::Index j) {
  if (i == j) return;
  for (Eigen::Index c = 0; c < A.cols(); ++c) std::swap(A(i, c), A(j, c));
}

}  // namespace

template <class S>
Mat<S> hermite_rows(const Mat<S>& M) {
  Mat<S> A = M;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < A.cols() && r < A.rows(); ++c) {
    for (;;) {
      Eigen::Index piv = -1;
      for (Eigen::Index i = r; i < A.rows(); ++i)
        if (!is_zero(A(i, c)) && (piv < 0 || abs_less(A(i, c), A(piv, c)))) piv = i;
      if (piv < 0) break;
      row_swap(A, piv, r);
      bool done = true;
      for (Eigen::Index i = r + 1; i < A.rows(); ++i) {
        if (is_zero(A(i, c))) continue;
        row_sub(A, i, tdiv(A(i, c), A(r, c)), r);
        if (!is_zero(A(i, c))) done = false;
      }
      if (done) break;
    }
    if (is_zero(A(r, c))) continue;
    if (is_neg(A(r, c)))
      for (Eigen::Index k = 0; k < A.cols(); ++k) A(r, k) = -A(r, k);
    for (Eigen::Index i = 0; i < r; ++i) row_sub(A, i, fdiv(A(i, c), A(r, c)), r);
    ++r;
  }
  return A.topRows(r);
}

template <class S>
Mat<S> hnf(const Mat<S>& M) {
  if (M.rows() != M.cols()) throw SingularMatrix("hnf needs a square matrix");
  Mat<S> H = hermite_rows(M);
  if (H.rows() != M.rows()) throw SingularMatrix("matrix is singular");
  for (Eigen::Index i = 0; i < H.rows(); ++i)
    if (is_zero(H(i, i))) throw SingularMatrix("matrix is singular");
  return H;
}

template Mat<long long> hermite_rows(const Mat<long long>&);
template Mat<Integer> hermite_rows(const Mat<Integer>&);
template Mat<long long> hnf(const Mat<long long>&);
template Mat<Integer> hnf(const Mat<Integer>&);

Integer determinant(const IntMatrix& M) {
  if (M.rows() != M.cols()) throw RangeError("determinant of a non-square matrix");
  IntMatrix A = M;
  const Eigen::Index n = A.rows();
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (A(k, k) == 0) {
      Eigen::Index s = k + 1;
      while (s < n && A(s, k) == 0) ++s;
      if (s == n) return 0;
      row_swap(A, k, s);
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j < n; ++j) {
        Integer v = A(k, k) * A(i, j) - A(i, k) * A(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        A(i, j) = v;
      }
    prev = A(k, k);
  }
  return sign * A(n - 1, n - 1);
}

std::vector<Integer> smith_diagonal(const IntMatrix& M) {
  IntMatrix A = M;
  const Eigen::Index R = A.rows(), C = A.cols();
  std::vector<Integer> d;
  for (Eigen::Index t = 0; t < std::min(R, C); ++t) {
    // smallest nonzero entry in the trailing block as pivot
    for (;;) {
      Eigen::Index pi = -1, pj = -1;
      for (Eigen::Index i = t; i < R; ++i)
        for (Eigen::Index j = t; j < C; ++j)
          if (A(i, j) != 0 && (pi < 0 || mpz_cmpabs(A(i, j).get_mpz_t(), A(pi, pj).get_mpz_t()) < 0)) {
            pi = i;
            pj = j;
          }
      if (pi < 0) {
        while (static_cast<Eigen::Index>(d.size()) < std::min(R, C)) d.push_back(0);
        std::sort(d.begin(), d.end(), [](const Integer& a, const Integer& b) {
          if (a == 0) return false;
          if (b == 0) return true;
          return a < b;
        });
        return d;
      }
      row_swap(A, t, pi);
      if (pj != t)
        for (Eigen::Index i = 0; i < R; ++i) std::swap(A(i, t), A(i, pj));
      bool clean = true;
      for (Eigen::Index i = t + 1; i < R; ++i) {
        Integer f = tdiv(A(i, t), A(t, t));
        row_sub(A, i, f, t);
        if (A(i, t) != 0) clean = false;
      }
      for (Eigen::Index j = t + 1; j < C; ++j) {
        Integer f = tdiv(A(t, j), A(t, t));
        if (f != 0)
          for (Eigen::Index i = 0; i < R; ++i) A(i, j) -= f * A(i, t);
        if (A(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // pivot must divide the rest; otherwise fold an offending row in
      Eigen::Index bad = -1;
      for (Eigen::Index i = t + 1; i < R && bad < 0; ++i)
        for (Eigen::Index j = t + 1; j < C; ++j)
          if (A(i, j) % A(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      for (Eigen::Index j = 0; j < C; ++j) A(t, j) += A(bad, j);
    }
    d.push_back(abs(A(t, t)));
  }
  return d;
}

int valuation(const Integer& x, long p) {
  if (x == 0) throw RangeError("valuation of zero");
  Integer y = abs(x);
  int v = 0;
  while (mpz_divisible_ui_p(y.get_mpz_t(), static_cast<unsigned long>(p))) {
    mpz_divexact_ui(y.get_mpz_t(), y.get_mpz_t(), static_cast<unsigned long>(p));
    ++v;
  }
  return v;
}

Partition smith_type(const IntMatrix& M, long p) {
  if (M.rows() != M.cols() || determinant(M) == 0) throw SingularMatrix("smith_type needs a nonsingular matrix");
  std::vector<int> parts;
  for (const Integer& d : smith_diagonal(M)) parts.push_back(valuation(d, p));
  std::sort(parts.rbegin(), parts.rend());
  return Partition(parts);
}

std::vector<int> hermite_delta(const IntMatrix& H, long p) {
  std::vector<int> d;
  for (Eigen::Index i = 0; i < H.rows(); ++i) d.push_back(valuation(H(i, i), p));
  return d;
}

IntMatrix to_int_matrix(const std::vector<std::vector<long>>& rows) {
  const Eigen::Index r = static_cast<Eigen::Index>(rows.size());
  const Eigen::Index c = r ? static_cast<Eigen::Index>(rows[0].size()) : 0;
  IntMatrix M(r, c);
  for (Eigen::Index i = 0; i < r; ++i) {
    if (static_cast<Eigen::Index>(rows[static_cast<size_t>(i)].size()) != c) throw RangeError("ragged matrix");
    for (Eigen::Index j = 0; j < c; ++j) M(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
  }
  return M;
}

std::vector<std::vector<std::string>> matrix_strings(const IntMatrix& M) {
  std::vector<std::vector<std::string>> out(static_cast<size_t>(M.rows()));
  for (Eigen::Index i = 0; i < M.rows(); ++i)
    for (Eigen::Index j = 0; j < M.cols(); ++j) out[static_cast<size_t>(i)].push_back(M(i, j).get_str());
  return out;
}

// ---------------------------------------------------------------------------
// sublattices

namespace {

void compositions(int m, int n, std::vector<int>& cur, const std::function<void(const std::vector<int>&)>& f) {
  if (static_cast<int>(cur.size()) == n - 1) {
    cur.push_back(m);
    f(cur);
    cur.pop_back();
    return;
  }
  for (int a = 0; a <= m; ++a) {
    cur.push_back(a);
    compositions(m - a, n, cur, f);
    cur.pop_back();
  }
}

long lpow(long p, int e) {
  long r = 1;
  for (int i = 0; i < e; ++i) {
    if (__builtin_mul_overflow(r, p, &r)) throw SizeLimit("power overflow");
  }
  return r;
}

}  // namespace

Integer count_sublattices(int n, long p, int m) {
  if (n < 1 || m < 0) throw RangeError("count_sublattices needs n >= 1, m >= 0");
  Integer total = 0;
  std::vector<int> cur;
  compositions(m, n, cur, [&](const std::vector<int>& d) {
    Integer c = 1;
    for (int j = 0; j < n; ++j) c *= ipow(Integer(p), static_cast<unsigned long>(d[static_cast<size_t>(j)] * j));
    total += c;
  });
  return total;
}

void for_each_sublattice(int n, long p, int m,
                         const std::function<void(const IntMatrix&, const std::vector<int>&)>& visit) {
  std::vector<int> cur;
  compositions(m, n, cur, [&](const std::vector<int>& d) {
    IntMatrix H = IntMatrix::Zero(n, n);
    std::vector<long> diag(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
      diag[static_cast<size_t>(i)] = lpow(p, d[static_cast<size_t>(i)]);
      H(i, i) = diag[static_cast<size_t>(i)];
    }
    // free entries (i, j), i < j, ranging over [0, diag_j)
    std::vector<std::pair<int, int>> slots;
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < j; ++i) slots.emplace_back(i, j);
    std::function<void(size_t)> rec = [&](size_t s) {
      if (s == slots.size()) {
        visit(H, d);
        return;
      }
      auto [i, j] = slots[s];
      for (long v = 0; v < diag[static_cast<size_t>(j)]; ++v) {
        H(i, j) = v;
        rec(s + 1);
      }
      H(i, j) = 0;
    };
    rec(0);
  });
}

std::vector<SublatticeRecord> enumerate_sublattices(int n, long p, int m, long limit) {
  if (count_sublattices(n, p, m) > limit) throw SizeLimit("too many sublattices to enumerate");
  std::vector<SublatticeRecord> out;
  for_each_sublattice(n, p, m, [&](const IntMatrix& H, const std::vector<int>& d) {
    SublatticeRecord r;
    r.basis = H;
    r.type = smith_type(H, p);
    r.delta = d;
    r.projection_type = n > 1 ? smith_type(H.topLeftCorner(n - 1, n - 1), p) : Partition();
    r.index = ipow(Integer(p), static_cast<unsigned long>(m));
    out.push_back(std::move(r));
  });
  std::sort(out.begin(), out.end(), [](const SublatticeRecord& a, const SublatticeRecord& b) {
    for (Eigen::Index i = 0; i < a.basis.size(); ++i) {
      if (a.basis(i) != b.basis(i)) return a.basis(i) < b.basis(i);
    }
    return false;
  });
  return out;
}

// ---------------------------------------------------------------------------
// counting formulas

Rational birkhoff_count(const Partition& lambda, const Partition& mu, const Rational& q) {
  if (!lambda.contains(mu)) throw ContainmentError("mu is not contained in lambda");
  Partition lc = conjugate(lambda), mc = conjugate(mu);
  Rational qi = 1 / q;
  Rational r = 1;
  for (int a = 0; a < lc.length(); ++a) {
    int la = lc[a], ma = mc[a], mnext = mc[a + 1];
    r *= rpow(q, static_cast<long>(ma) * (la - ma)) * qbinom(la - mnext, la - ma).eval(qi);
  }
  return r;
}

Rational alpha_count(int n, int a, int b, const Rational& q) {
  if (n < 0 || a < 0 || b < 0 || a + b > n) return 0;
  Rational qi = 1 / q;
  return rpow(q, static_cast<long>(a + b) * (n - a - b) + static_cast<long>(b) * (n - b)) *
         qmultinom(n, {b, a + b}).eval(qi);
}

Rational psi_omega(int n, int a, int b, int ell, const Rational& q) {
  if (a < 0 || b < 0 || a + b > n) throw RangeError("psi_omega needs a, b >= 0 and a + b <= n");
  Rational r = alpha_count(n - 1, a, b, q);
  r += rpow(q, 2 * n - a - 2 * b - 2 * ell) * alpha_count(n - 1, a, b - 1, q);
  r += rpow(q, n - b - ell) * ((1 - rpow(q, -a - 1)) * alpha_count(n - 1, a + 1, b - 1, q) +
                               rpow(q, -a) * alpha_count(n - 1, a - 1, b, q));
  return r;
}

bool is_horizontal_strip(const Partition& lambda, const Partition& mu, int n) {
  if (lambda.length() > n || mu.length() > n - 1) return false;
  for (int i = 0; i < n; ++i) {
    if (lambda[i] < mu[i]) return false;
    if (mu[i] < lambda[i + 1]) return false;
  }
  return true;
}

std::pair<Mask, Mask> wn_sets(const Partition& lambda, const Partition& mu, int n) {
  if (!is_horizontal_strip(lambda, mu, n)) throw NotHorizontalStrip("(lambda, mu) is not a horizontal strip pair");
  Partition lc = conjugate(lambda), mc = conjugate(mu);
  Mask I = 0, J = 0;
  for (int a = 0; a < lc.length(); ++a) {
    if (lc[a] == mc[a] + 1) I |= Mask(1) << (lc[a] - 1);
    if (lc[a] == mc[a]) J |= Mask(1) << lc[a];  // element lc[a] + 1
  }
  return {I, J};
}

std::pair<Partition, Partition> wn_minimal_pair(int n, Mask I, Mask J) {
  if (J & 1u) throw RangeError("1 is never in J");
  std::vector<int> m1, m2;
  for (int i = 1; i <= n; ++i) {
    if ((I >> (i - 1)) & 1u) {
      m1.push_back(i);
      if (i > 1) m2.push_back(i - 1);
    }
    if ((J >> (i - 1)) & 1u) {
      m1.push_back(i - 1);
      m2.push_back(i - 1);
    }
  }
  std::sort(m1.rbegin(), m1.rend());
  std::sort(m2.rbegin(), m2.rend());
  return {conjugate(Partition(m1)), conjugate(Partition(m2))};
}

Rational ecard(const Partition& lambda, const Partition& mu, int n, const Rational& q) {
  auto [I, J] = wn_sets(lambda, mu, n);
  Rational r = psi_poly(n, I, J).eval(1 / q);
  Partition lc = conjugate(lambda), mc = conjugate(mu);
  long e = 0;
  for (int a = 0; a < lc.length(); ++a) {
    if (lc[a] != mc[a])
      e += static_cast<long>(lc[a]) * (n - lc[a]);
    else
      e += static_cast<long>(mc[a]) * (n - 1 - mc[a]);
  }
  return r * rpow(q, e);
}

RationalFunctionQT hs_series_formula(int n, const std::vector<QTMonomial>& x, QTMonomial y) {
  if (n < 1 || static_cast<int>(x.size()) != n) throw RangeError("hs_series_formula needs n monomials");
  if (n > 8) throw SizeLimit("hs_series_formula capped at n = 8");
  // A_i = q^{i(n-i)} x_i y, B_j = q^{j(n-1-j)} x_j
  std::vector<QTMonomial> A(static_cast<size_t>(n)), B(static_cast<size_t>(n - 1));
  for (int i = 1; i <= n; ++i)
    A[static_cast<size_t>(i - 1)] = {i * (n - i) + x[static_cast<size_t>(i - 1)].qe + y.qe,
                                     x[static_cast<size_t>(i - 1)].te + y.te};
  for (int j = 1; j < n; ++j)
    B[static_cast<size_t>(j - 1)] = {j * (n - 1 - j) + x[static_cast<size_t>(j - 1)].qe, x[static_cast<size_t>(j - 1)].te};
  BivariatePoly num;
  for (Mask I = 0; I < (Mask(1) << n); ++I)
    for (Mask J = 0; J < (Mask(1) << (n - 1)); ++J) {
      BivariatePoly term = BivariatePoly::from_q_poly(psi_poly(n, I, J << 1).compose_power(-1));
      for (int i = 0; i < n; ++i)
        term = term * (((I >> i) & 1u) ? BivariatePoly::monomial(A[static_cast<size_t>(i)].qe, A[static_cast<size_t>(i)].te)
                                       : BivariatePoly::one_minus(A[static_cast<size_t>(i)].qe, A[static_cast<size_t>(i)].te));
      for (int j = 0; j < n - 1; ++j)
        term = term * (((J >> j) & 1u) ? BivariatePoly::monomial(B[static_cast<size_t>(j)].qe, B[static_cast<size_t>(j)].te)
                                       : BivariatePoly::one_minus(B[static_cast<size_t>(j)].qe, B[static_cast<size_t>(j)].te));
      num += term;
    }
  std::vector<Binomial> den;
  bool factored = true;
  for (const auto& a : A) {
    den.push_back({a.qe, a.te});
    if (a.te <= 0) factored = false;
  }
  for (const auto& b : B) {
    den.push_back({b.qe, b.te});
    if (b.te <= 0) factored = false;
  }
  if (factored) return rf_from_factored(num, den);
  BivariatePoly d(1);
  for (const auto& f : den) d = d * BivariatePoly::one_minus(f.a, f.b);
  return rf_normalize(num, d);
}

HSTable hs_series_oracle(int n, long p, int max_index_exp) {
  HSTable t;
  for (int m = 0; m <= max_index_exp; ++m) {
    if (count_sublattices(n, p, m) > kEnumerationLimit) throw SizeLimit("hs_series_oracle: enumeration too large");
    for_each_sublattice(n, p, m, [&](const IntMatrix& H, const std::vector<int>& d) {
      t[{smith_type(H, p).inc(n), d.back()}] += 1;
    });
  }
  return t;
}

HSTable hs_series_table_formula(int n, const Rational& q, int max_index_exp) {
  // expand each geometric factor: m_I(i) >= 1 for i in I, m_J(j) >= 1 for j in J
  HSTable t;
  Rational qi = 1 / q;
  for (Mask I = 0; I < (Mask(1) << n); ++I)
    for (Mask J = 0; J < (Mask(1) << (n - 1)); ++J) {
      Rational psi = psi_poly(n, I, J << 1).eval(qi);
      std::vector<int> vars;  // positive for I-variables, negative for J-variables
      for (int i = 1; i <= n; ++i)
        if ((I >> (i - 1)) & 1u) vars.push_back(i);
      for (int j = 1; j < n; ++j)
        if ((J >> (j - 1)) & 1u) vars.push_back(-j);
      std::vector<int> inc(static_cast<size_t>(n), 0);
      std::function<void(size_t, int, int, Rational)> rec = [&](size_t k, int weight, int dn, Rational c) {
        if (k == vars.size()) {
          t[{inc, dn}] += psi * c;
          return;
        }
        int v = vars[k];
        int idx = v > 0 ? v : -v;
        Rational unit = v > 0 ? rpow(q, idx * (n - idx)) : rpow(q, idx * (n - 1 - idx));
        Rational cc = c;
        for (int mult = 1; weight + mult * idx <= max_index_exp; ++mult) {
          cc *= unit;
          inc[static_cast<size_t>(idx - 1)] += mult;
          rec(k + 1, weight + mult * idx, dn + (v > 0 ? mult : 0), cc);
          inc[static_cast<size_t>(idx - 1)] -= mult;
        }
      };
      rec(0, 0, 0, Rational(1));
    }
  for (auto it = t.begin(); it != t.end();) it = it->second == 0 ? t.erase(it) : std::next(it);
  return t;
}

// ---------------------------------------------------------------------------
// Lagrangians over F_p

long lagrangian_count_oracle(int n, long p, bool through_line) {
  const int N = 2 * n;
  double est = std::pow(static_cast<double>(p), n * n) * (1 << N);
  if (est > 5e7) throw SizeLimit("lagrangian_count_oracle: search space too large");
  long count = 0;
  // reduced row echelon forms of n x 2n matrices of rank n
  for (unsigned piv = 0; piv < (1u << N); ++piv) {
    if (__builtin_popcount(piv) != n) continue;
    std::vector<int> pc;
    for (int c = 0; c < N; ++c)
      if ((piv >> c) & 1u) pc.push_back(c);
    std::vector<std::pair<int, int>> freec;  // (row, col) free entries
    for (int r = 0; r < n; ++r)
      for (int c = pc[static_cast<size_t>(r)] + 1; c < N; ++c)
        if (!((piv >> c) & 1u)) freec.emplace_back(r, c);
    std::vector<std::vector<long>> E(static_cast<size_t>(n), std::vector<long>(static_cast<size_t>(N), 0));
    for (int r = 0; r < n; ++r) E[r][static_cast<size_t>(pc[static_cast<size_t>(r)])] = 1;
    std::function<void(size_t)> rec = [&](size_t s) {
      if (s == freec.size()) {
        auto omega = [&](const std::vector<long>& u, const std::vector<long>& v) {
          long w = 0;
          for (int i = 0; i < n; ++i) w += u[i] * v[i + n] - u[i + n] * v[i];
          return ((w % p) + p) % p;
        };
        for (int a = 0; a < n; ++a)
          for (int b = a + 1; b < n; ++b)
            if (omega(E[a], E[b]) != 0) return;
        if (through_line) {
          // e_1 lies in the row space iff column 0 is a pivot of a row that is e_1
          bool has = false;
          for (int r = 0; r < n; ++r) {
            bool unit = E[r][0] == 1;
            for (int c = 1; c < N && unit; ++c)
              if (E[r][c] != 0) unit = false;
            if (unit) has = true;
          }
          if (!has) return;
        }
        ++count;
        return;
      }
      auto [r, c] = freec[s];
      for (long v = 0; v < p; ++v) {
        E[r][c] = v;
        rec(s + 1);
      }
      E[r][c] = 0;
    };
    rec(0);
  }
  return count;
}

// ---------------------------------------------------------------------------
// symplectic lattices

IntMatrix standard_form(int n) {
  IntMatrix J = IntMatrix::Zero(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    J(i, i + n) = 1;
    J(i + n, i) = -1;
  }
  return J;
}

namespace {

// x J y^T on row vectors
Integer omega(const IntMatrix& A, Eigen::Index i, const IntMatrix& B, Eigen::Index j, int n) {
  Integer w = 0;
  for (int k = 0; k < n; ++k) w += A(i, k) * B(j, k + n) - A(i, k + n) * B(j, k);
  return w;
}

bool ext_gcd_combination(const std::vector<Integer>& vals, std::vector<Integer>& coef) {
  // coefficients with sum coef_k vals_k = gcd
  coef.assign(vals.size(), 0);
  Integer g = 0;
  for (size_t k = 0; k < vals.size(); ++k) {
    if (vals[k] == 0) continue;
    Integer ng, s, t;
    mpz_gcdext(ng.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), g.get_mpz_t(), vals[k].get_mpz_t());
    for (size_t j = 0; j < k; ++j) coef[j] *= s;
    coef[k] = t;
    g = ng;
  }
  return g == 1;
}

}  // namespace

IntMatrix symplectic_basis(const IntMatrix& H, const Integer& kappa) {
  const int N = static_cast<int>(H.rows());
  const int n = N / 2;
  // Gram-Schmidt on the lattice vectors themselves, form divided by kappa
  IntMatrix vecs = H;
  IntMatrix E(n, N), F(n, N);
  for (int step = 0; step < n; ++step) {
    IntMatrix e = vecs.row(0);
    std::vector<Integer> vals(static_cast<size_t>(vecs.rows()));
    for (Eigen::Index k = 0; k < vecs.rows(); ++k) {
      Integer w = omega(e, 0, vecs, k, n);
      if (w % kappa != 0) throw AssertionFailure("lattice form not divisible by the similitude");
      vals[static_cast<size_t>(k)] = w / kappa;
    }
    std::vector<Integer> coef;
    if (!ext_gcd_combination(vals, coef)) throw AssertionFailure("lattice form is not unimodular");
    IntMatrix f = IntMatrix::Zero(1, N);
    for (Eigen::Index k = 0; k < vecs.rows(); ++k)
      if (coef[static_cast<size_t>(k)] != 0)
        for (int c = 0; c < N; ++c) f(0, c) += coef[static_cast<size_t>(k)] * vecs(k, c);
    E.row(step) = e;
    F.row(step) = f;
    // project the remaining vectors onto the orthogonal complement of <e, f>
    IntMatrix proj(vecs.rows(), N);
    for (Eigen::Index k = 0; k < vecs.rows(); ++k) {
      Integer wf = omega(vecs, k, f, 0, n) / kappa, we = omega(vecs, k, e, 0, n) / kappa;
      for (int c = 0; c < N; ++c) proj(k, c) = vecs(k, c) - wf * e(0, c) + we * f(0, c);
    }
    vecs = hermite_rows(proj);
    if (vecs.rows() != N - 2 * (step + 1)) throw AssertionFailure("symplectic reduction lost rank");
  }
  IntMatrix M(N, N);
  M.topRows(n) = E;
  M.bottomRows(n) = F;
  IntMatrix J = standard_form(n);
  IntMatrix G = M * J * M.transpose();
  if (G != J * kappa) throw AssertionFailure("symplectic basis check failed");
  return M;
}

int hecke_class_of(const Partition& type, int n, int m) {
  if (m == 1) {
    if (type == Partition(std::vector<int>(static_cast<size_t>(n), 1))) return 0;
    return -1;
  }
  if (m == 2) {
    for (int k = 1; k <= n; ++k) {
      std::vector<int> parts(static_cast<size_t>(n - k), 2);
      parts.insert(parts.end(), static_cast<size_t>(2 * k), 1);
      if (type == Partition(parts)) return k;
    }
  }
  return -1;
}

std::vector<SymplecticCoset> enumerate_symplectic_lattices(int n, const Integer& kappa, long limit) {
  if (n < 1 || kappa < 1) throw RangeError("enumerate_symplectic_lattices needs n >= 1, kappa >= 1");
  if (!kappa.fits_slong_p() || kappa > 1000) throw SizeLimit("similitude too large to enumerate");
  const long k = kappa.get_si();
  const int N = 2 * n;
  std::vector<long> divisors;
  for (long d = 1; d <= k; ++d)
    if (k % d == 0) divisors.push_back(d);
  Integer target = ipow(kappa, static_cast<unsigned long>(n));

  std::vector<SymplecticCoset> out;
  Mat<long long> H = Mat<long long>::Zero(N, N);
  auto form = [&](int a, int b) {
    long long w = 0;
    for (int c = 0; c < n; ++c) w += H(a, c) * H(b, c + n) - H(a, c + n) * H(b, c);
    return w;
  };
  // rows are filled from the last one upwards
  std::function<void(int, const Integer&)> rec = [&](int row, const Integer& prod) {
    if (row < 0) {
      if (prod != target) return;
      if (static_cast<long>(out.size()) >= limit) throw SizeLimit("too many symplectic cosets");
      SymplecticCoset s;
      s.hnf = to_integer(H);
      s.similitude = kappa;
      s.rep = symplectic_basis(s.hnf, kappa);
      s.elementary_divisors = smith_diagonal(s.hnf);
      out.push_back(std::move(s));
      return;
    }
    for (long d : divisors) {
      Integer np = prod * d;
      if (target % np != 0) continue;
      // remaining rows contribute at most kappa each
      if (np * ipow(kappa, static_cast<unsigned long>(row)) < target) continue;
      for (int c = 0; c < N; ++c) H(row, c) = 0;
      H(row, row) = d;
      std::function<void(int)> fill = [&](int col) {
        if (col == N) {
          for (int b = row + 1; b < N; ++b)
            if (form(row, b) % k != 0) return;
          rec(row - 1, np);
          return;
        }
        for (long long v = 0; v < H(col, col); ++v) {
          H(row, col) = v;
          fill(col + 1);
        }
        H(row, col) = 0;
      };
      fill(row + 1);
    }
    for (int c = 0; c < N; ++c) H(row, c) = 0;
  };
  rec(N - 1, Integer(1));
  std::sort(out.begin(), out.end(), [](const SymplecticCoset& a, const SymplecticCoset& b) {
    for (Eigen::Index i = 0; i < a.hnf.size(); ++i)
      if (a.hnf(i) != b.hnf(i)) return a.hnf(i) < b.hnf(i);
    return false;
  });
  return out;
}

std::vector<SymplecticCoset> enumerate_symplectic_cosets(int n, long p, int m, long limit) {
  if (m < 0) throw RangeError("similitude exponent must be >= 0");
  auto out = enumerate_symplectic_lattices(n, ipow(Integer(p), static_cast<unsigned long>(m)), limit);
  for (auto& s : out) {
    std::vector<int> parts;
    for (const auto& d : s.elementary_divisors) parts.push_back(valuation(d, p));
    std::sort(parts.rbegin(), parts.rend());
    s.type = Partition(parts);
    s.hecke_class = hecke_class_of(s.type, n, m);
  }
  return out;
}

long xi_count(int n, int k, long p, const IntVector& x) {
  if (x.size() != 2 * n) throw RangeError("xi_count: vector of wrong length");
  long c = 0;
  for (const auto& s : enumerate_symplectic_cosets(n, p, 2)) {
    if (s.hecke_class != k) continue;
    // x in rep^{-1} Z^{2n}  iff  rep x integral (x may be rational through a common denominator)
    IntVector y = s.rep * x;
    Integer den = ipow(Integer(p), 2);  // x is passed scaled by p^2
    bool in = true;
    for (Eigen::Index i = 0; i < y.size(); ++i)
      if (y(i) % den != 0) in = false;
    if (in) ++c;
  }
  return c;
}

long xi_oracle(int n, int k, long p, int i) {
  if (k < 1 || k > n - 1) throw RangeError("xi_oracle needs k in [n-1]");
  if (i != 1 && i != 2) throw RangeError("xi_oracle needs i in {1, 2}");
  // x = p^{-i} e_1, encoded scaled by p^2
  IntVector x = IntVector::Zero(2 * n);
  x(0) = ipow(Integer(p), static_cast<unsigned long>(2 - i));
  return xi_count(n, k, p, x);
}

}  // namespace ehz
