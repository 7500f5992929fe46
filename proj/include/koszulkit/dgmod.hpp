// Bigraded dg-modules over S(V) and Lambda(V) at a point, the Koszul-duality
// functors with their explicit differentials, regradings, and bidegree-wise
// cohomology.
//
// Conventions (all realized over a point, where dg-modules are bigraded
// vector spaces):
//   S-side:  generators act with bidegree (+2,-2), commute, even Leibniz.
//   T-side:  generators act with bidegree (-1,+2), anticommute and square
//            to zero, odd Leibniz d(y m) = -y d(m).
//   plain:   generators act with bidegree (0,-2) (regraded modules /
//            complexes of internally graded modules).
// The functor A = Hom(Lambda(V), -) places the dual of the k-th wedge in
// bidegree (k,-2k); B = S(V) (x) - is computed on a finite window, which is
// exact there: every bidegree inside the window is complete, so cohomology
// is trustworthy wherever the neighbouring cohomological degrees are also
// inside.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "koszulkit/matrix.hpp"

namespace kk::dg {

using linalg::Field;
using linalg::Rat;

struct Bidegree {
  int i = 0, j = 0;
  bool operator==(const Bidegree& o) const { return i == o.i && j == o.j; }
  bool operator<(const Bidegree& o) const { return std::tie(i, j) < std::tie(o.i, o.j); }
};

enum class AlgebraSide { symmetric, exterior, plain };

// Column-sparse linear map between the module's own basis and itself.
struct LinearMap {
  int rows = 0, cols = 0;
  std::vector<std::vector<std::pair<int, Rat>>> col;  // sorted by row index

  static LinearMap zero(int rows, int cols);
  void add_entry(const Field& f, int r, int c, const Rat& v);
  std::vector<std::pair<int, Rat>> apply(const Field& f,
                                         const std::vector<std::pair<int, Rat>>& v) const;
  LinearMap compose(const Field& f, const LinearMap& inner) const;  // this ∘ inner
  LinearMap plus(const Field& f, const LinearMap& o) const;
  LinearMap negated(const Field& f) const;
  bool is_zero(const Field& f) const;
  bool equals(const Field& f, const LinearMap& o) const;
};

struct DgModule {
  Field field = Field::rationals();
  AlgebraSide side = AlgebraSide::symmetric;
  int dim_v = 0;
  std::vector<Bidegree> deg;
  std::vector<std::string> labels;  // optional; empty or one per basis element
  LinearMap diff;
  std::vector<LinearMap> act;

  int dim() const { return static_cast<int>(deg.size()); }
  std::string label(int k) const;
};

Bidegree action_degree(AlgebraSide side);

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
  std::string to_string() const;
};
ValidationReport validate(const DgModule& m);

struct CohomologyTable {
  std::map<Bidegree, int> dims;  // nonzero entries only
  std::map<Bidegree, std::vector<std::vector<Rat>>> representatives;

  bool operator==(const CohomologyTable& o) const { return dims == o.dims; }
  int dim_at(Bidegree b) const;
  std::string to_string() const;
};
CohomologyTable cohomology(const DgModule& m, bool with_representatives = false);

struct Window {
  int i0 = 0, i1 = 0, j0 = 0, j1 = 0;
  bool contains(Bidegree b) const { return b.i >= i0 && b.i <= i1 && b.j >= j0 && b.j <= j1; }
  bool nonempty() const { return i0 <= i1 && j0 <= j1; }
};

// Hom(Lambda(V), m) with differential d1 + d2; output is a T-module.
DgModule functor_A(const DgModule& m);
// S(V) (x) n truncated to the window; output is an S-module.
DgModule functor_B(const DgModule& n, const Window& w);

// Cohomology of B(…) is exact at (i,j) when (i-1,j) and (i+1,j) lie in the
// window; an additional application of A pulls in the bidegrees
// (i-k, j+2k), k = 0..dim_v.
bool b_output_trusted(const Window& w, Bidegree b);
bool ab_roundtrip_trusted(const Window& w, int dim_v, Bidegree b);

// Free rank-1 exterior module with the left-multiplication action.
DgModule free_exterior(Field f, int dim_v);
// Hom(Lambda(V), k): dual wedges with the contraction-style action; under B
// this produces the classical Koszul complex.
DgModule dual_free_exterior(Field f, int dim_v);
// Trivial one-dimensional module at a bidegree, zero actions (valid on
// either side).
DgModule trivial_module(Field f, int dim_v, AlgebraSide side, Bidegree at = {});
// Koszul complex S(V) (x) Lambda(V) on a window sized by `extra`.
DgModule koszul_complex(Field f, int dim_v, int extra = 2);
Window koszul_window(int dim_v, int extra = 2);

DgModule shift(const DgModule& m, int a, int b);  // m[a]<b>, d picks up (-1)^a
DgModule direct_sum(const DgModule& a, const DgModule& b);

DgModule regrade_xi(const DgModule& m);          // S-module -> plain, (i,j) -> (i+j, j)
DgModule regrade_xi_inverse(const DgModule& m);  // plain -> S-module
DgModule zeta(const DgModule& c);                // plain complex -> S-style, (i,j) -> (i-j, j)
DgModule zeta_inverse(const DgModule& m);

// psi: Lambda(V) -> Lambda(V)^vee (x) det(V) [n]<2n>, e_I -> ±(e_{I^c})^*.
// Rows and columns are indexed by subsets of {0..n-1} as bitmasks.
struct PsiDuality {
  int dim_v = 0;
  linalg::Matrix matrix;
  static int sign_entry(int subset_I, int dim_v);  // 0 row convention helper
};
PsiDuality psi_top_duality(Field f, int dim_v);

}  // namespace kk::dg
