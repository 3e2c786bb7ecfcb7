#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ehz/core/rational_function.hpp"
#include "ehz/eigen_gmp.hpp"
#include "ehz/qcombinat.hpp"

namespace ehz {

// Row-style Hermite normal form: the lattice is the row span, the result is upper
// triangular with positive diagonal and 0 <= h_ij < h_jj above the diagonal.
// Instantiated for long long (overflow checked, RangeError) and Integer.
template <class S>
Mat<S> hnf(const Mat<S>& M);  // SingularMatrix unless square of full rank
// Independent rows of the Hermite form of an arbitrary matrix (pivot columns reduced).
template <class S>
Mat<S> hermite_rows(const Mat<S>& M);

Integer determinant(const IntMatrix& M);  // Bareiss
// Smith normal form diagonal d_1 | d_2 | ... (nonnegative)
std::vector<Integer> smith_diagonal(const IntMatrix& M);
int valuation(const Integer& x, long p);  // x != 0
// p-adic elementary divisor exponents, decreasing
Partition smith_type(const IntMatrix& M, long p);
// v_p of the diagonal of an HNF basis
std::vector<int> hermite_delta(const IntMatrix& hnf_basis, long p);

IntMatrix to_int_matrix(const std::vector<std::vector<long>>& rows);
std::vector<std::vector<std::string>> matrix_strings(const IntMatrix& M);

struct SublatticeRecord {
  IntMatrix basis;              // HNF
  Partition type;               // Smith type
  std::vector<int> delta;       // Hermite composition
  Partition projection_type;    // type of the projection to the first n-1 coordinates
  Integer index;
};

inline constexpr long kEnumerationLimit = 2000000;

// All sublattices of Z^n of index p^m, sorted by basis entries. SizeLimit beyond the limit.
std::vector<SublatticeRecord> enumerate_sublattices(int n, long p, int m, long limit = kEnumerationLimit);
Integer count_sublattices(int n, long p, int m);
// visit without storing
void for_each_sublattice(int n, long p, int m, const std::function<void(const IntMatrix&, const std::vector<int>&)>& visit);

Rational birkhoff_count(const Partition& lambda, const Partition& mu, const Rational& q);
Rational alpha_count(int n, int a, int b, const Rational& q);  // 0 outside a,b >= 0, a+b <= n
Rational psi_omega(int n, int a, int b, int ell, const Rational& q);

// horizontal strip pairs: lambda in P_n, mu in P_{n-1}, lambda_i >= mu_i >= lambda_{i+1}
bool is_horizontal_strip(const Partition& lambda, const Partition& mu, int n);
std::pair<Mask, Mask> wn_sets(const Partition& lambda, const Partition& mu, int n);
std::pair<Partition, Partition> wn_minimal_pair(int n, Mask I, Mask J);
Rational ecard(const Partition& lambda, const Partition& mu, int n, const Rational& q);

// Formula with monomial specializations x_i and y.
RationalFunctionQT hs_series_formula(int n, const std::vector<QTMonomial>& x, QTMonomial y);

// key: (inc(lambda), delta_n); value: count (oracle) or coefficient at q (formula)
using HSTable = std::map<std::pair<std::vector<int>, int>, Rational>;
HSTable hs_series_oracle(int n, long p, int max_index_exp);
HSTable hs_series_table_formula(int n, const Rational& q, int max_index_exp);

// Lagrangian subspaces of F_p^{2n}, optionally containing the line spanned by e_1.
long lagrangian_count_oracle(int n, long p, bool through_line);

// standard alternating form J = [[0, I], [-I, 0]]
IntMatrix standard_form(int n);

struct SymplecticCoset {
  IntMatrix hnf;                       // row-HNF of the lattice Z^{2n} rep
  IntMatrix rep;                       // rep J rep^T = similitude J
  Integer similitude;
  std::vector<Integer> elementary_divisors;
  Partition type;                      // p-adic Smith type (prime-power similitude only)
  int hecke_class = -1;                // k in [n]_0, or -1 when not a generator class
};

// All cosets Gamma g with g integral of similitude kappa (any positive integer).
std::vector<SymplecticCoset> enumerate_symplectic_lattices(int n, const Integer& kappa, long limit = kEnumerationLimit);
std::vector<SymplecticCoset> enumerate_symplectic_cosets(int n, long p, int m, long limit = kEnumerationLimit);
// k such that Smith type is (1^n) at m = 1 or (2^{n-k}, 1^{2k}) at m = 2; -1 otherwise
int hecke_class_of(const Partition& type, int n, int m);
// basis change to a symplectic basis of the lattice spanned by the rows of H
IntMatrix symplectic_basis(const IntMatrix& H, const Integer& kappa);

// number of cosets of class k containing x in their lattice (columns of rep^{-1})
long xi_count(int n, int k, long p, const IntVector& x);
long xi_oracle(int n, int k, long p, int i);

}  // namespace ehz
