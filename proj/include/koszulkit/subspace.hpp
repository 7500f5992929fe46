// Subspaces of k^n in canonical reduced-echelon form.
//
// The basis is always the RREF of any spanning set, so equal subspaces have
// identical representations and equality is a plain comparison.
#pragma once

#include <vector>

#include "koszulkit/matrix.hpp"

namespace kk::linalg {

class Subspace {
 public:
  Subspace(Field f, std::size_t ambient_dim) : field_(f), ambient_(ambient_dim) {}

  static Subspace span(Field f, std::size_t ambient_dim, std::vector<std::vector<Rat>> vectors);
  static Subspace full(Field f, std::size_t ambient_dim);

  const Field& field() const { return field_; }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<std::vector<Rat>>& basis() const { return basis_; }

  Subspace sum(const Subspace& o) const;
  Subspace intersection(const Subspace& o) const;
  // dim of the image of this subspace in ambient/o; equals dim(this) - dim(this ∩ o).
  std::size_t quotient_dim(const Subspace& o) const;
  bool contains(const std::vector<Rat>& v) const;
  bool contains(const Subspace& o) const;

  bool operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && field_ == o.field_ && basis_ == o.basis_;
  }

 private:
  void check_compatible(const Subspace& o) const;
  Field field_;
  std::size_t ambient_;
  std::vector<std::vector<Rat>> basis_;  // RREF rows, no zero rows
};

}  // namespace kk::linalg
