// Laurent polynomials over Q in the variable v, with q = v^2.
//
// The Hecke parameter needs a square root: the mixed relation
// theta_x = T_a theta_{x-a} T_a forces T theta T to carry a factor q against
// the bare Demazure-Lusztig normalization, so the certified operators are
// scaled by v^{-1}. Working in Z[v,v^{-1}] coefficients keeps all four
// relation families exact.
#pragma once

#include <string>
#include <vector>

#include "koszulkit/field.hpp"

namespace kk::braid {

using linalg::Rat;

class Laurent {
 public:
  Laurent() = default;
  static Laurent monomial(int exp, const Rat& coef = Rat(1));
  static Laurent one() { return monomial(0); }
  static Laurent q() { return monomial(2); }

  bool is_zero() const { return coef_.empty(); }
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(coef_.size()) - 1; }
  Rat coefficient(int exp) const;

  Laurent operator+(const Laurent& o) const;
  Laurent operator-(const Laurent& o) const;
  Laurent operator*(const Laurent& o) const;
  Laurent operator-() const;
  Laurent& operator+=(const Laurent& o) { return *this = *this + o; }
  bool operator==(const Laurent& o) const { return lo_ == o.lo_ && coef_ == o.coef_; }
  bool operator!=(const Laurent& o) const { return !(*this == o); }

  std::string to_string() const;  // powers of v

 private:
  void normalize();
  int lo_ = 0;
  std::vector<Rat> coef_;  // coef_[k] multiplies v^{lo_+k}; empty means zero
};

}  // namespace kk::braid
