// Finite-dimensional graded algebras: graded radical, projective covers,
// minimal graded resolutions, the Koszulity test, the Yoneda/quadratic dual,
// and the endomorphism-ring criterion pipeline.
//
// Scope notes. Everything here is for finite-dimensional algebras (the
// symmetric-algebra base is specialized away). Semisimple quotients are
// assumed split (every simple block a matrix algebra over the base field);
// this covers path algebras of quivers and all bundled examples, and the
// idempotent machinery verifies what it produces. Radical computation uses
// the trace form over Q and the characteristic-polynomial-coefficient chain
// over F_p (the trace form alone is wrong in small characteristic); the
// result is certified: two-sided graded ideal, nilpotent, semisimple
// quotient.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "koszulkit/matrix.hpp"
#include "koszulkit/subspace.hpp"

namespace kk::alg {

using linalg::Field;
using linalg::Matrix;
using linalg::Rat;
using linalg::Subspace;

using Vec = std::vector<Rat>;

struct GradedAlgebra {
  Field field = Field::rationals();
  std::vector<long> degree;
  std::vector<std::string> labels;
  Vec unit;
  // mult[a][b] = coordinates of e_a * e_b
  std::vector<std::vector<Vec>> mult;

  int dim() const { return static_cast<int>(degree.size()); }
  std::string label(int k) const;
  Vec multiply(const Vec& x, const Vec& y) const;
  Matrix left_mult(const Vec& x) const;
  Matrix right_mult(const Vec& x) const;
  bool is_nonneg_graded() const;
  long degree_of(const Vec& x) const;  // -1 homogeneity marker: throws if mixed
  bool is_homogeneous(const Vec& x) const;
};

struct AlgebraValidation {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};
AlgebraValidation validate_algebra(const GradedAlgebra& a);

// The Jacobson radical (= graded radical here); certified before returning.
Subspace graded_radical(const GradedAlgebra& a);

// A graded module over `a`, value-semantic: one action matrix per algebra
// basis element.
struct GradedModule {
  std::vector<long> degree;
  std::vector<Matrix> act;

  int dim() const { return static_cast<int>(degree.size()); }
  Matrix action_of(const GradedAlgebra& a, const Vec& x) const;
};

GradedModule regular_module(const GradedAlgebra& a);
GradedModule shift_module(const GradedModule& m, long d);  // M<d>: degrees shift up by d
GradedModule direct_sum(const GradedModule& x, const GradedModule& y);
// Submodule spanned by the given vectors (closed under the action).
GradedModule submodule(const GradedAlgebra& a, const GradedModule& m,
                       const std::vector<Vec>& spanning, std::vector<Vec>* basis_out = nullptr);
// Quotient by the submodule spanned by `spanning` (must be action-stable).
GradedModule quotient_module(const GradedAlgebra& a, const GradedModule& m,
                             const std::vector<Vec>& spanning,
                             std::vector<Vec>* section_out = nullptr,
                             Matrix* projection_out = nullptr);
bool modules_equal_dims(const GradedModule& x, const GradedModule& y);

// rad(A)·M inside M.
std::vector<Vec> radical_submodule(const GradedAlgebra& a, const GradedModule& m);

struct SimpleClass {
  Vec idempotent;        // primitive, homogeneous of degree 0, in A
  GradedModule cover;    // P_i = A e_i, generator in degree 0
  Vec cover_generator;   // coordinates of e_i inside cover basis
  GradedModule simple;   // L_i = P_i / rad P_i, e_i-component in degree 0
};

struct SimplesAndCovers {
  std::vector<SimpleClass> classes;
  // multiplicity extraction data: for a module M and class i, the
  // multiplicity of L_i<d> in a semisimple M equals dim (e_i M)_d.
};
SimplesAndCovers simples_and_covers(const GradedAlgebra& a);

// key (class index, internal degree) -> multiplicity
using TopDecomposition = std::map<std::pair<int, long>, int>;
TopDecomposition decompose_semisimple(const GradedAlgebra& a, const SimplesAndCovers& sc,
                                      const GradedModule& m);

struct ResolutionStep {
  TopDecomposition multiplicities;  // P_i<d> summands
  GradedModule projective;
  std::vector<Vec> generator_positions;  // one generator vector per summand copy
  std::vector<int> generator_class;
  std::vector<long> generator_degree;
  Matrix map_to_previous;  // projective -> previous step's module (or the resolved module)
};

struct Resolution {
  GradedModule target;
  std::vector<ResolutionStep> steps;
};

Resolution minimal_graded_resolution(const GradedAlgebra& a, const SimplesAndCovers& sc,
                                     const GradedModule& m, int n_max);

struct KoszulVerdict {
  bool koszul = false;
  int checked_to = 0;
  int fails_at = -1;          // step index when not Koszul
  std::vector<long> offending_degrees;
  std::string reason;         // non-resolution failures (grading, A0)
  std::string to_string() const;
};
KoszulVerdict is_koszul(const GradedAlgebra& a, int n_max);

// (n, m) -> dim Ext^n(L_i, L_j<m>), read off the minimal resolution of L_i.
std::map<std::pair<int, long>, int> ext_bigraded_dims(const GradedAlgebra& a, int i, int j,
                                                      int n_max);
bool ext_vanishing_check(const GradedAlgebra& a, int n_max);

// Yoneda algebra (⊕_n Ext^n_A(L, L))^op on L = ⊕ class representatives,
// truncated at n_max; graded by cohomological degree.
GradedAlgebra ext_algebra(const GradedAlgebra& a, int n_max);

struct CriterionReport {
  GradedAlgebra b;                  // End_A(⊕ P_i)^op = e A e with its grading
  std::vector<Vec> b_basis_in_a;    // embedding of B's basis into A
  bool b_nonneg_graded = false;
  bool b0_semisimple = false;
  KoszulVerdict b_koszul;
};
// Requires ext_vanishing_check(a, n_max); throws with a diagnostic otherwise.
CriterionReport endomorphism_ring_B(const GradedAlgebra& a, int n_max);

// Layers rad^n M / rad^{n+1} M as (class, degree) -> multiplicity.
std::vector<TopDecomposition> radical_layers(const GradedAlgebra& a, const SimplesAndCovers& sc,
                                             const GradedModule& m);

// Hom_A(⊕ P_i, M) = ⊕ e_i M as a module over B = endomorphism ring.
GradedModule morita_transport(const GradedAlgebra& a, const SimplesAndCovers& sc,
                              const CriterionReport& br, const GradedModule& m);

}  // namespace kk::alg
