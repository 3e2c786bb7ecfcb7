#include "ehz/ehrhart.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "ehz/errors.hpp"

namespace ehz {

namespace {

using RatRow = std::vector<Rational>;

// reduced row echelon form; returns pivot columns
std::vector<int> rref(std::vector<RatRow>& rows, int cols) {
  std::vector<int> piv;
  size_t r = 0;
  for (int c = 0; c < cols && r < rows.size(); ++c) {
    size_t s = r;
    while (s < rows.size() && rows[s][static_cast<size_t>(c)] == 0) ++s;
    if (s == rows.size()) continue;
    std::swap(rows[s], rows[r]);
    Rational inv = 1 / rows[r][static_cast<size_t>(c)];
    for (auto& v : rows[r]) v *= inv;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][static_cast<size_t>(c)] == 0) continue;
      Rational f = rows[i][static_cast<size_t>(c)];
      for (int k = 0; k < cols; ++k) rows[i][static_cast<size_t>(k)] -= f * rows[r][static_cast<size_t>(k)];
    }
    piv.push_back(c);
    ++r;
  }
  rows.resize(r);
  return piv;
}

std::vector<RatRow> nullspace(std::vector<RatRow> rows, int cols) {
  auto piv = rref(rows, cols);
  std::vector<RatRow> basis;
  std::vector<bool> is_piv(static_cast<size_t>(cols), false);
  for (int c : piv) is_piv[static_cast<size_t>(c)] = true;
  for (int f = 0; f < cols; ++f) {
    if (is_piv[static_cast<size_t>(f)]) continue;
    RatRow v(static_cast<size_t>(cols), 0);
    v[static_cast<size_t>(f)] = 1;
    for (size_t r = 0; r < piv.size(); ++r) v[static_cast<size_t>(piv[r])] = -rows[r][static_cast<size_t>(f)];
    basis.push_back(v);
  }
  return basis;
}

Rational dot(const RatRow& a, const RatVector& x) {
  Rational s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * x(static_cast<Eigen::Index>(i));
  return s;
}

// scale a x <= b to coprime integers, keeping direction
std::pair<std::vector<Integer>, Integer> primitive(const RatRow& a, const Rational& b) {
  Integer l = b.get_den();
  for (const auto& v : a) l = lcm(l, Integer(v.get_den()));
  std::vector<Integer> ai;
  Integer g = 0;
  for (const auto& v : a) {
    Integer x = Integer(v * l);
    ai.push_back(x);
    g = gcd(g, x);
  }
  Integer bi = Integer(b * l);
  g = gcd(g, bi);
  if (g == 0) return {ai, bi};
  for (auto& x : ai) x /= g;
  bi /= g;
  return {ai, bi};
}

struct Constraint {
  std::vector<Integer> a;
  Integer b;
  bool operator<(const Constraint& o) const { return a != o.a ? a < o.a : b < o.b; }
};

void normalize(Constraint& c) {
  Integer g = 0;
  for (const auto& x : c.a) g = gcd(g, x);
  if (g == 0) return;
  for (auto& x : c.a) x /= g;
  // a z <= b with integral a / g: floor keeps the same integer points but changes the
  // real projection, so keep b rational-exact by dividing only when divisible
  if (c.b % g == 0)
    c.b /= g;
  else
    for (auto& x : c.a) x *= g;
}

}  // namespace

// ---------------------------------------------------------------------------

LatticePolytope::LatticePolytope(int ambient, std::vector<RatVector> vertices) : ambient_(ambient) {
  if (ambient < 0) throw RangeError("negative ambient dimension");
  if (ambient > kMaxAmbient) throw DimensionLimit("ambient dimension above " + std::to_string(kMaxAmbient));
  if (vertices.empty()) throw RangeError("polytope needs at least one vertex");
  for (const auto& v : vertices) {
    if (v.size() != ambient) throw RangeError("vertex of wrong dimension");
    bool dup = false;
    for (const auto& w : vertices_)
      if (w == v) dup = true;
    if (!dup) vertices_.push_back(v);
  }
}

LatticePolytope LatticePolytope::from_integer(int ambient, const std::vector<std::vector<long>>& vertices) {
  std::vector<RatVector> vs;
  for (const auto& v : vertices) {
    if (static_cast<int>(v.size()) != ambient) throw RangeError("vertex of wrong dimension");
    RatVector x(ambient);
    for (int i = 0; i < ambient; ++i) x(i) = v[static_cast<size_t>(i)];
    vs.push_back(x);
  }
  return LatticePolytope(ambient, vs);
}

LatticePolytope LatticePolytope::transformed(const RatMatrix& M) const {
  std::vector<RatVector> vs;
  for (const auto& v : vertices_) {
    RatVector w = RatVector::Zero(M.rows());
    for (Eigen::Index i = 0; i < M.rows(); ++i)
      for (Eigen::Index j = 0; j < M.cols(); ++j) w(i) += M(i, j) * v(j);
    vs.push_back(w);
  }
  return LatticePolytope(static_cast<int>(M.rows()), vs);
}

LatticePolytope LatticePolytope::transformed(const IntMatrix& M) const {
  RatMatrix R(M.rows(), M.cols());
  for (Eigen::Index i = 0; i < M.size(); ++i) R(i) = Rational(M(i));
  return transformed(R);
}

LatticePolytope LatticePolytope::dilated(const Rational& m) const {
  std::vector<RatVector> vs;
  for (const auto& v : vertices_) {
    RatVector w = v;
    for (Eigen::Index i = 0; i < w.size(); ++i) w(i) *= m;
    vs.push_back(w);
  }
  return LatticePolytope(ambient_, vs);
}

HalfSpaces facets(const LatticePolytope& P) {
  const int n = P.ambient();
  const auto& V = P.vertices();
  std::set<Constraint> out;
  auto add = [&](const RatRow& a, const Rational& b) {
    auto [ai, bi] = primitive(a, b);
    out.insert({ai, bi});
  };
  std::vector<RatRow> diffs;
  for (size_t i = 1; i < V.size(); ++i) {
    RatRow d(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) d[static_cast<size_t>(k)] = V[i](k) - V[0](k);
    diffs.push_back(d);
  }
  std::vector<RatRow> W = diffs;
  rref(W, n);
  const int r = static_cast<int>(W.size());
  // affine hull
  for (const auto& c : nullspace(W, n)) {
    Rational b = dot(c, V[0]);
    RatRow neg = c;
    for (auto& x : neg) x = -x;
    add(c, b);
    add(neg, -b);
  }
  if (r > 0) {
    // facets: r affinely independent vertices span a hyperplane of the hull
    std::vector<int> pick(static_cast<size_t>(r));
    std::function<void(int, int)> choose = [&](int pos, int start) {
      if (pos == r) {
        // normal a = sum lambda_i W_i orthogonal to the r-1 differences
        std::vector<RatRow> sys;
        for (int j = 1; j < r; ++j) {
          RatRow row(static_cast<size_t>(r));
          for (int i = 0; i < r; ++i) {
            Rational s = 0;
            for (int k = 0; k < n; ++k)
              s += W[static_cast<size_t>(i)][static_cast<size_t>(k)] *
                   (V[static_cast<size_t>(pick[static_cast<size_t>(j)])](k) - V[static_cast<size_t>(pick[0])](k));
            row[static_cast<size_t>(i)] = s;
          }
          sys.push_back(row);
        }
        auto ns = nullspace(sys, r);
        if (ns.size() != 1) return;
        RatRow a(static_cast<size_t>(n), 0);
        for (int i = 0; i < r; ++i)
          for (int k = 0; k < n; ++k)
            a[static_cast<size_t>(k)] += ns[0][static_cast<size_t>(i)] * W[static_cast<size_t>(i)][static_cast<size_t>(k)];
        Rational b = dot(a, V[static_cast<size_t>(pick[0])]);
        bool le = true, ge = true;
        for (const auto& v : V) {
          Rational s = dot(a, v);
          if (s > b) le = false;
          if (s < b) ge = false;
        }
        if (le) add(a, b);
        if (ge) {
          for (auto& x : a) x = -x;
          add(a, -b);
        }
        return;
      }
      for (int i = start; i < static_cast<int>(V.size()); ++i) {
        pick[static_cast<size_t>(pos)] = i;
        choose(pos + 1, i + 1);
      }
    };
    choose(0, 0);
  }
  HalfSpaces H;
  for (const auto& c : out) {
    H.A.push_back(c.a);
    H.b.push_back(c.b);
  }
  return H;
}

HalfSpaces pull_back(const HalfSpaces& H, const RatMatrix& B) {
  HalfSpaces R;
  for (size_t i = 0; i < H.A.size(); ++i) {
    RatRow a(static_cast<size_t>(B.cols()), 0);
    for (Eigen::Index j = 0; j < B.cols(); ++j)
      for (Eigen::Index k = 0; k < B.rows(); ++k) a[static_cast<size_t>(j)] += Rational(H.A[i][static_cast<size_t>(k)]) * B(k, j);
    auto [ai, bi] = primitive(a, Rational(H.b[i]));
    // primitive() may rescale b; keep the dilate factor linear by scaling both sides
    R.A.push_back(ai);
    R.b.push_back(bi);
  }
  return R;
}

namespace {

using i128 = __int128;

long long to_ll(const Integer& x) {
  if (!x.fits_slong_p()) throw RangeError("coefficient too large for point counting");
  return x.get_si();
}

i128 floor_div128(i128 a, i128 b) {
  i128 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}
i128 ceil_div128(i128 a, i128 b) { return -floor_div128(-a, b); }

struct SmallConstraint {
  std::vector<long long> a;
  long long b;
};

// Fourier-Motzkin: systems[k] involves only z_0..z_k
std::vector<std::vector<SmallConstraint>> projections(const std::vector<Constraint>& cons, int n, bool& empty) {
  std::vector<std::vector<Constraint>> sys(static_cast<size_t>(n));
  sys[static_cast<size_t>(n - 1)] = cons;
  empty = false;
  for (int k = n - 1; k >= 1; --k) {
    std::set<Constraint> next;
    std::vector<const Constraint*> pos, neg;
    for (const auto& c : sys[static_cast<size_t>(k)]) {
      int s = sgn(c.a[static_cast<size_t>(k)]);
      if (s > 0)
        pos.push_back(&c);
      else if (s < 0)
        neg.push_back(&c);
      else
        next.insert(c);
    }
    for (const auto* p : pos)
      for (const auto* q : neg) {
        Integer fp = -q->a[static_cast<size_t>(k)], fq = p->a[static_cast<size_t>(k)];
        Constraint c;
        c.a.resize(static_cast<size_t>(n));
        for (int j = 0; j < n; ++j) c.a[static_cast<size_t>(j)] = fp * p->a[static_cast<size_t>(j)] + fq * q->a[static_cast<size_t>(j)];
        c.b = fp * p->b + fq * q->b;
        normalize(c);
        next.insert(c);
      }
    sys[static_cast<size_t>(k - 1)].clear();
    for (const auto& c : next) {
      bool zero = std::all_of(c.a.begin(), c.a.end(), [](const Integer& x) { return x == 0; });
      if (zero) {
        if (c.b < 0) empty = true;
        continue;
      }
      sys[static_cast<size_t>(k - 1)].push_back(c);
    }
  }
  std::vector<std::vector<SmallConstraint>> out(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k)
    for (const auto& c : sys[static_cast<size_t>(k)]) {
      SmallConstraint s;
      for (const auto& x : c.a) s.a.push_back(to_ll(x));
      s.b = to_ll(c.b);
      out[static_cast<size_t>(k)].push_back(s);
    }
  return out;
}

}  // namespace

Integer count_integer_points(const HalfSpaces& H, long dilate) {
  const int n = H.A.empty() ? 0 : static_cast<int>(H.A[0].size());
  if (n == 0) {
    for (const auto& b : H.b)
      if (b * dilate < 0) return 0;
    return 1;
  }
  std::vector<Constraint> cons;
  for (size_t i = 0; i < H.A.size(); ++i) {
    Constraint c{H.A[i], H.b[i] * dilate};
    normalize(c);
    cons.push_back(c);
  }
  bool empty = false;
  auto sys = projections(cons, n, empty);
  if (empty) return 0;
  std::vector<long long> z(static_cast<size_t>(n), 0);
  Integer total = 0;
  long long acc = 0;  // flushed into total periodically
  std::function<void(int)> rec = [&](int k) {
    bool has_lo = false, has_hi = false;
    i128 lo = 0, hi = 0;
    for (const auto& c : sys[static_cast<size_t>(k)]) {
      i128 rhs = c.b;
      for (int j = 0; j < k; ++j) rhs -= static_cast<i128>(c.a[static_cast<size_t>(j)]) * z[static_cast<size_t>(j)];
      long long ak = c.a[static_cast<size_t>(k)];
      if (ak > 0) {
        i128 u = floor_div128(rhs, ak);
        if (!has_hi || u < hi) hi = u;
        has_hi = true;
      } else if (ak < 0) {
        i128 l = ceil_div128(-rhs, -ak);
        if (!has_lo || l > lo) lo = l;
        has_lo = true;
      } else if (rhs < 0) {
        return;
      }
    }
    if (!has_lo || !has_hi) throw UnboundedInput("polytope is unbounded");
    if (hi < lo) return;
    if (k == n - 1) {
      acc += static_cast<long long>(hi - lo + 1);
      if (acc > (1LL << 60)) {
        total += Integer(static_cast<long>(acc));
        acc = 0;
      }
      return;
    }
    for (i128 v = lo; v <= hi; ++v) {
      z[static_cast<size_t>(k)] = static_cast<long long>(v);
      rec(k + 1);
    }
  };
  rec(0);
  total += Integer(static_cast<long>(acc));
  return total;
}

RatMatrix inverse(const RatMatrix& M) {
  const Eigen::Index n = M.rows();
  if (M.cols() != n) throw SingularMatrix("inverse of a non-square matrix");
  std::vector<RatRow> rows(static_cast<size_t>(n), RatRow(static_cast<size_t>(2 * n), 0));
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) rows[static_cast<size_t>(i)][static_cast<size_t>(j)] = M(i, j);
    rows[static_cast<size_t>(i)][static_cast<size_t>(n + i)] = 1;
  }
  auto piv = rref(rows, static_cast<int>(2 * n));
  if (static_cast<Eigen::Index>(piv.size()) < n || piv[static_cast<size_t>(n - 1)] != n - 1)
    throw SingularMatrix("matrix is singular");
  RatMatrix R(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) R(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(n + j)];
  return R;
}

RatMatrix superlattice_basis(const IntMatrix& H) {
  RatMatrix R(H.rows(), H.cols());
  for (Eigen::Index i = 0; i < H.size(); ++i) R(i) = Rational(H(i));
  return inverse(R);
}

namespace {

RatMatrix identity(int n) {
  RatMatrix I = RatMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) I(i, i) = 1;
  return I;
}

EhrhartPolynomial interpolate(const HalfSpaces& H, int d) {
  // forward differences at m = 0..d, E(0) = 1
  std::vector<Rational> vals{Rational(1)};
  for (int m = 1; m <= d; ++m) vals.push_back(Rational(count_integer_points(H, m)));
  std::vector<Rational> diff = vals, newton;
  for (int k = 0; k <= d; ++k) {
    newton.push_back(diff[0]);
    for (size_t i = 0; i + 1 < diff.size(); ++i) diff[i] = diff[i + 1] - diff[i];
    diff.pop_back();
  }
  // sum_k newton_k * binom(m, k) in the monomial basis
  EhrhartPolynomial E;
  E.coeffs.assign(static_cast<size_t>(d + 1), 0);
  std::vector<Rational> falling{Rational(1)};  // m (m-1) ... (m-k+1)
  Rational fact = 1;
  for (int k = 0; k <= d; ++k) {
    if (k > 0) {
      std::vector<Rational> next(falling.size() + 1, 0);
      for (size_t i = 0; i < falling.size(); ++i) {
        next[i + 1] += falling[i];
        next[i] -= falling[i] * (k - 1);
      }
      falling = next;
      fact *= k;
    }
    for (size_t i = 0; i < falling.size(); ++i) E.coeffs[i] += newton[static_cast<size_t>(k)] * falling[i] / fact;
  }
  for (int m = d + 1; m <= d + 2; ++m)
    if (E.eval(m) != Rational(count_integer_points(H, m)))
      throw InterpolationInconsistent("lattice-point counts are not polynomial in the dilate");
  return E;
}

}  // namespace

Integer count_points(const LatticePolytope& P, long dilate, const RatMatrix& basis) {
  if (dilate < 0) throw RangeError("dilate must be nonnegative");
  return count_integer_points(pull_back(facets(P), basis), dilate);
}

Integer count_points(const LatticePolytope& P, long dilate) { return count_points(P, dilate, identity(P.ambient())); }

Rational EhrhartPolynomial::coeff(int l) const {
  return (l >= 0 && l < static_cast<int>(coeffs.size())) ? coeffs[static_cast<size_t>(l)] : Rational(0);
}

Rational EhrhartPolynomial::eval(const Rational& m) const {
  Rational r = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) r = r * m + *it;
  return r;
}

EhrhartPolynomial ehrhart_poly(const LatticePolytope& P, const RatMatrix& basis) {
  return interpolate(pull_back(facets(P), basis), P.ambient());
}

EhrhartPolynomial ehrhart_poly(const LatticePolytope& P) { return ehrhart_poly(P, identity(P.ambient())); }

std::vector<Rational> hecke_action_values(const std::vector<SymplecticCoset>& cosets, int ell, const LatticePolytope& P) {
  std::vector<Rational> out;
  HalfSpaces H = facets(P);
  for (const auto& s : cosets) {
    if (s.rep.rows() != P.ambient()) throw RangeError("coset size does not match the polytope dimension");
    Rational a = ehrhart_poly(P.transformed(s.rep)).coeff(ell);
    Rational b = interpolate(pull_back(H, superlattice_basis(s.hnf)), P.ambient()).coeff(ell);
    if (a != b) throw AssertionFailure("Hecke action routes disagree");
    out.push_back(a);
  }
  return out;
}

Rational hecke_action(const std::vector<SymplecticCoset>& cosets, int ell, const LatticePolytope& P) {
  Rational s = 0;
  for (const auto& v : hecke_action_values(cosets, ell, P)) s += v;
  return s;
}

std::vector<IntMatrix> enumerate_hnf_det(int n, const Integer& m, long limit) {
  if (n < 1 || m < 1) throw RangeError("enumerate_hnf_det needs n >= 1, m >= 1");
  if (!m.fits_slong_p()) throw SizeLimit("determinant too large");
  const long M = m.get_si();
  std::vector<IntMatrix> out;
  IntMatrix H = IntMatrix::Zero(n, n);
  std::function<void(int, long)> diag = [&](int i, long rest) {
    if (i == n - 1) {
      H(i, i) = rest;
      std::vector<std::pair<int, int>> slots;
      for (int j = 0; j < n; ++j)
        for (int r = 0; r < j; ++r) slots.emplace_back(r, j);
      std::function<void(size_t)> fill = [&](size_t s) {
        if (s == slots.size()) {
          if (static_cast<long>(out.size()) >= limit) throw SizeLimit("too many lattices");
          out.push_back(H);
          return;
        }
        auto [r, j] = slots[s];
        for (long v = 0; v < H(j, j); ++v) {
          H(r, j) = v;
          fill(s + 1);
        }
        H(r, j) = 0;
      };
      fill(0);
      return;
    }
    for (long d = 1; d <= rest; ++d)
      if (rest % d == 0) {
        H(i, i) = d;
        diag(i + 1, rest / d);
      }
  };
  diag(0, M);
  return out;
}

Rational avg_coeff(const LatticePolytope& P, int ell, const Integer& m, ZetaType type) {
  const int d = P.ambient();
  HalfSpaces H = facets(P);
  Rational base = interpolate(H, d).coeff(ell);
  if (base == 0) throw ZeroCoefficient("the l-th Ehrhart coefficient of the polytope vanishes");
  if (m < 1) throw RangeError("co-index must be positive");
  Rational sum = 0;
  if (type == ZetaType::A) {
    for (const auto& L : enumerate_hnf_det(d, m)) sum += interpolate(pull_back(H, superlattice_basis(L)), d).coeff(ell);
    return sum / base;
  }
  if (d % 2 != 0) throw RangeError("type C needs an even ambient dimension");
  const int n = d / 2;
  Integer kappa;
  mpz_root(kappa.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(n));
  if (ipow(kappa, static_cast<unsigned long>(n)) != m) return 0;
  for (const auto& s : enumerate_symplectic_lattices(n, kappa))
    sum += interpolate(pull_back(H, superlattice_basis(s.hnf)), d).coeff(ell);
  return sum / base;
}

std::vector<Rational> tree_values(const LatticePolytope& P, long p, int radius, int ell) {
  if (P.ambient() != 2) throw RangeError("tree values need a polygon");
  HalfSpaces H = facets(P);
  std::vector<Rational> out;
  if (radius == 0) {
    out.push_back(interpolate(H, 2).coeff(ell));
    return out;
  }
  for (const auto& s : enumerate_sublattices(2, p, radius)) {
    if (s.type != Partition({radius})) continue;
    out.push_back(interpolate(pull_back(H, superlattice_basis(s.basis)), 2).coeff(ell));
  }
  return out;
}

}  // namespace ehz
