// Extended affine Weyl group W'_aff = W ⋉ X.
//
// Elements are kept in the normal form w = v·t_x (finite part v, translation
// x); the t_lambda·v form used in some formulas converts via
// t_lambda·v = v·t_{v^{-1}lambda}. The dot action at a level p > h is
// (v·t_x) ∙ lambda = v(lambda + p·x + rho) - rho.
//
// Facets and upper closures: for a weight lambda the facet records, for each
// positive root, either a wall <lambda+rho,a^vee> = n·p or the open strip
// n·p < <lambda+rho,a^vee> < (n+1)·p. A weight mu lies in the upper closure
// of a facet when it matches all wall data exactly and meets every strip
// condition with the upper wall allowed: n·p < <mu+rho,a^vee> <= (n+1)·p.
// The source this convention is drawn from leaves the facet formalism to a
// standard reference; the rule here reproduces the anchored consequences
// (the -rho translation picks out exactly tau_0) and is fixed so tests are
// deterministic.
#pragma once

#include <optional>
#include <vector>

#include "koszulkit/rootsystem.hpp"

namespace kk::affine {

using roots::Int;
using roots::RootSystemPtr;
using roots::Vec;
using roots::Weight;
using roots::WeylElement;

struct ExtAffineWeylElement {
  WeylElement finite;  // v
  Weight translation;  // x, fundamental-weight coordinates

  bool operator==(const ExtAffineWeylElement& o) const {
    return finite == o.finite && translation == o.translation;
  }
  bool operator<(const ExtAffineWeylElement& o) const {
    if (!(finite == o.finite)) return finite < o.finite;
    return translation < o.translation;
  }
};

struct Facet {
  Int p = 0;
  struct Entry {
    bool wall = false;
    Int n = 0;
  };
  std::vector<Entry> per_root;  // indexed like RootSystem::positive_roots()
};

// A length-zero element together with its t_pi·v data (pi dominant).
struct OmegaElement {
  ExtAffineWeylElement elt;
  Weight dominant;  // pi (zero weight for the identity)
  WeylElement finite;
};

// Letters of the affine Coxeter generators: 0..rank-1 the finite simple
// reflections, kAffineLetter the extra reflection s_0.
inline constexpr int kAffineLetter = -1;

class AffineWeyl {
 public:
  explicit AffineWeyl(RootSystemPtr rs);

  const RootSystemPtr& root_system() const { return rs_; }

  ExtAffineWeylElement identity() const;
  ExtAffineWeylElement translation(const Weight& x) const;  // t_x
  ExtAffineWeylElement from_finite(const WeylElement& v) const;
  ExtAffineWeylElement from_t_v(const Weight& lam, const WeylElement& v) const;  // t_lam·v
  ExtAffineWeylElement simple(int i) const;  // finite s_i
  ExtAffineWeylElement affine_s0() const;    // s_theta · t_{-theta}, theta^vee the highest coroot

  ExtAffineWeylElement multiply(const ExtAffineWeylElement& a, const ExtAffineWeylElement& b) const;
  ExtAffineWeylElement inverse(const ExtAffineWeylElement& a) const;

  Weight dot_action(const ExtAffineWeylElement& w, const Weight& lam, Int p) const;
  Int length(const ExtAffineWeylElement& w) const;

  bool in_C0(const Weight& lam, Int p) const;
  bool in_closure_C0(const Weight& lam, Int p) const;
  bool is_regular(const Weight& lam, Int p) const;
  bool is_restricted_dominant(const Weight& lam, Int p) const;

  // W^0 characterization is independent of p: for each v in W take
  // <lambda, alpha_i^vee> = 0 or 1 according to the sign of v^{-1}(alpha_i),
  // and emit t_lambda·v.
  std::vector<ExtAffineWeylElement> enumerate_W0() const;
  ExtAffineWeylElement tau0() const;  // t_rho · w_0
  Int tau0_length_by_sum() const;     // sum over R+ of (<rho,a^vee> - 1)

  Facet facet_of(const Weight& lam, Int p) const;
  bool upper_closure_contains(const Facet& f, const Weight& mu) const;

  std::optional<Weight> translate_simple(const ExtAffineWeylElement& w, const Weight& target_mu0,
                                         Int p) const;

  std::vector<std::pair<int, Int>> singular_walls(const Weight& mu, Int p) const;
  bool is_parabolic_singularity(const Weight& mu, const std::vector<int>& simple_subset, Int p) const;
  std::vector<ExtAffineWeylElement> W0_mu(const Weight& mu0, Int p) const;

  // w = omega · s_{i1} ... s_{ik} with k = l(w); letters as above.
  std::pair<ExtAffineWeylElement, std::vector<int>> reduced_decomposition(
      const ExtAffineWeylElement& w) const;
  ExtAffineWeylElement apply_letter(const ExtAffineWeylElement& w, int letter) const;

  // The length-zero subgroup; |Omega| = |X/Y| = det of the Cartan matrix.
  const std::vector<OmegaElement>& omega_group() const;
  Int cartan_determinant() const;

 private:
  void require_level(Int p) const;
  RootSystemPtr rs_;
  mutable std::mutex omega_mutex_;
  mutable std::optional<std::vector<OmegaElement>> omega_cache_;
};

}  // namespace kk::affine
