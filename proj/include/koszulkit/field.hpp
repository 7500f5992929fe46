// Exact scalar arithmetic over Q or F_p.
//
// Every computation in this project is linear over the prime field or over
// Q, so an algebraically closed base field is never needed; the two kinds
// here cover everything. No floating point anywhere.
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace kk::linalg {

using Rat = mpq_class;

class Field {
 public:
  enum class Kind { rationals, prime };

  static Field rationals() { return Field(Kind::rationals, 0); }
  static Field prime(long p);

  Kind kind() const { return kind_; }
  long p() const { return p_; }
  bool is_prime_field() const { return kind_ == Kind::prime; }

  // Canonical representative: reduced fraction over Q, integer in [0,p)
  // over F_p (rational input a/b is mapped to a * b^{-1} mod p).
  Rat reduce(const Rat& x) const;

  Rat add(const Rat& a, const Rat& b) const;
  Rat sub(const Rat& a, const Rat& b) const;
  Rat mul(const Rat& a, const Rat& b) const;
  Rat div(const Rat& a, const Rat& b) const;
  Rat inv(const Rat& a) const;
  Rat neg(const Rat& a) const;
  Rat from_long(long n) const { return reduce(Rat(n)); }

  bool is_zero(const Rat& a) const { return sgn(a.get_num()) == 0; }
  bool eq(const Rat& a, const Rat& b) const { return reduce(a) == reduce(b); }

  std::string to_string(const Rat& a) const;   // "a" or "a/b"
  Rat parse(const std::string& s) const;

  bool operator==(const Field& o) const { return kind_ == o.kind_ && p_ == o.p_; }
  bool operator!=(const Field& o) const { return !(*this == o); }

  std::string name() const;

 private:
  Field(Kind k, long p) : kind_(k), p_(p) {}
  Kind kind_;
  long p_;
};

}  // namespace kk::linalg
