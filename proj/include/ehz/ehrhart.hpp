#pragma once

#include <vector>

#include "ehz/eigen_gmp.hpp"
#include "ehz/lattice.hpp"

namespace ehz {

enum class ZetaType { A, C };

inline constexpr int kMaxAmbient = 4;

class LatticePolytope {
 public:
  LatticePolytope() = default;
  // duplicates removed; DimensionLimit above kMaxAmbient, RangeError if empty or ragged
  LatticePolytope(int ambient, std::vector<RatVector> vertices);
  static LatticePolytope from_integer(int ambient, const std::vector<std::vector<long>>& vertices);

  int ambient() const { return ambient_; }
  const std::vector<RatVector>& vertices() const { return vertices_; }
  LatticePolytope transformed(const IntMatrix& M) const;  // v -> M v
  LatticePolytope transformed(const RatMatrix& M) const;
  LatticePolytope dilated(const Rational& m) const;

 private:
  int ambient_ = 0;
  std::vector<RatVector> vertices_;
};

// A x <= b; the affine hull of a lower-dimensional polytope appears as pairs of rows
struct HalfSpaces {
  std::vector<std::vector<Integer>> A;
  std::vector<Integer> b;
};

HalfSpaces facets(const LatticePolytope& P);
// half-spaces of P pulled back along x = B z
HalfSpaces pull_back(const HalfSpaces& H, const RatMatrix& B);
// integer points of {z : A z <= dilate * b}
Integer count_integer_points(const HalfSpaces& H, long dilate);

// #(dilate * P  intersected with  B Z^n), B the column basis of a superlattice of Z^n
Integer count_points(const LatticePolytope& P, long dilate, const RatMatrix& basis);
Integer count_points(const LatticePolytope& P, long dilate);

struct EhrhartPolynomial {
  std::vector<Rational> coeffs;  // c_0 .. c_n
  Rational coeff(int l) const;
  Rational eval(const Rational& m) const;
  bool operator==(const EhrhartPolynomial& o) const { return coeffs == o.coeffs; }
};

EhrhartPolynomial ehrhart_poly(const LatticePolytope& P, const RatMatrix& basis);
EhrhartPolynomial ehrhart_poly(const LatticePolytope& P);

// column basis of {x : H x integral}, i.e. H^{-1}
RatMatrix superlattice_basis(const IntMatrix& H);
RatMatrix inverse(const RatMatrix& M);  // SingularMatrix

// per-coset values of the l-th coefficient; both routes (rep * P against Z^n, and P against
// the lattice rep^{-1} Z^n via the HNF) are computed and must agree
std::vector<Rational> hecke_action_values(const std::vector<SymplecticCoset>& cosets, int ell, const LatticePolytope& P);
Rational hecke_action(const std::vector<SymplecticCoset>& cosets, int ell, const LatticePolytope& P);

// all row-HNF matrices of determinant m
std::vector<IntMatrix> enumerate_hnf_det(int n, const Integer& m, long limit = kEnumerationLimit);

// average of the l-th coefficient over superlattices of co-index m (symplectic in type C)
Rational avg_coeff(const LatticePolytope& P, int ell, const Integer& m, ZetaType type);

// l-th coefficients over the p-primitive lattices at distance r from Z^2 in the tree,
// i.e. superlattices with cyclic quotient of order p^r
std::vector<Rational> tree_values(const LatticePolytope& P, long p, int radius, int ell = 1);

}  // namespace ehz
