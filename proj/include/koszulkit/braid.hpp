// Extended affine braid group: words, the canonical lift, and a truncated
// Demazure-Lusztig representation used to certify relation identities.
//
// The word problem is not solved here. Equality of braid words is certified
// only as an identity of partial operators on a finite W-stable box of
// weights, which is a necessary condition and is all the identities below
// require. Operators act on Laurent-polynomial combinations of monomials
// e^x; a composite is defined on the monomials whose intermediate images
// stay inside the box.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "koszulkit/affine.hpp"
#include "koszulkit/laurent.hpp"

namespace kk::braid {

using affine::AffineWeyl;
using affine::ExtAffineWeylElement;
using affine::OmegaElement;
using roots::Int;
using roots::RootSystemPtr;
using roots::Vec;
using roots::Weight;

struct BraidLetter {
  enum class Kind { t, theta };
  Kind kind = Kind::t;
  int alpha = -1;     // simple-root index for T letters
  int exponent = 1;   // +1 or -1 for T letters
  Weight x;           // translation weight for theta letters

  static BraidLetter T(int alpha, int exponent = 1) { return {Kind::t, alpha, exponent, {}}; }
  static BraidLetter Theta(Weight w) { return {Kind::theta, -1, 1, std::move(w)}; }
  bool operator==(const BraidLetter& o) const {
    return kind == o.kind && alpha == o.alpha && exponent == o.exponent && x == o.x;
  }
};

using BraidWord = std::vector<BraidLetter>;

BraidWord word_inverse(const BraidWord& w);
BraidWord free_reduce(BraidWord w);  // cancel adjacent T T^{-1} and theta_x theta_{-x}
std::string word_to_string(const BraidWord& w);

// Sparse Laurent combination of box monomials.
using HeckeVector = std::map<int, Laurent>;

// Partial operator: one column per box monomial, absent when undefined.
struct PartialOp {
  std::vector<std::optional<HeckeVector>> col;
};

struct AgreeStats {
  long compared = 0;  // columns defined on both sides
  long mismatches = 0;
  bool certified() const { return compared > 0 && mismatches == 0; }
};

class TruncatedHeckeSpace {
 public:
  // Box: all weights x with |<x, alpha^vee>| <= radius for every positive
  // root; this set is stable under the finite Weyl group.
  TruncatedHeckeSpace(RootSystemPtr rs, Int radius);

  const RootSystemPtr& root_system() const { return rs_; }
  Int radius() const { return radius_; }
  int size() const { return static_cast<int>(weights_.size()); }
  const Weight& weight(int i) const { return weights_[i]; }
  std::optional<int> index_of(const Weight& w) const;

  // One letter applied to a sparse vector; nullopt when a monomial leaves
  // the box (theta letters; T letters are total).
  std::optional<HeckeVector> apply_letter(const BraidLetter& l, const HeckeVector& v) const;
  PartialOp apply_word(const BraidWord& w) const;
  PartialOp identity_op() const;

  static AgreeStats agree(const PartialOp& a, const PartialOp& b);

 private:
  RootSystemPtr rs_;
  Int radius_;
  std::vector<Weight> weights_;
  std::map<Vec, int> index_;
};

struct RelationReport {
  std::string relation;
  long instances_checked = 0;
  long monomials_compared = 0;
  long failures = 0;
};

// The four defining relation families, certified instance by instance.
std::vector<RelationReport> verify_relations(const TruncatedHeckeSpace& space);

class BraidLift {
 public:
  explicit BraidLift(RootSystemPtr rs);

  const AffineWeyl& affine() const { return aw_; }

  // Canonical lift C built from the reduced decomposition: finite simple
  // reflections become T letters; s_0 and length-zero parts go through
  // theta letters via dominant translation factorizations.
  BraidWord canonical_lift(const ExtAffineWeylElement& w) const;
  BraidWord lift_finite_word(const std::vector<int>& word, int exponent = 1) const;
  BraidWord word_s0() const;                          // theta_beta · C(s_beta)^{-1}
  BraidWord word_omega(const OmegaElement& om) const; // theta_pi · C(v^{-1})^{-1}

  struct Conjugation {
    int beta = -1;  // simple-root index
    BraidWord b0;
    bool via_omega = false;  // which branch produced it
  };
  // beta and b0 with C(s_0) = b0 · C(s_beta) · b0^{-1}; the identity is the
  // caller's to certify in a truncated representation.
  Conjugation find_affine_conjugation() const;

 private:
  RootSystemPtr rs_;
  AffineWeyl aw_;
  int theta_index_;  // root whose coroot is the highest coroot
};

}  // namespace kk::braid
