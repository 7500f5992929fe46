#include "koszulkit/field.hpp"

namespace kk::linalg {

namespace {

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

Field Field::prime(long p) {
  if (!is_prime(p)) throw std::invalid_argument("Field::prime: " + std::to_string(p) + " is not prime");
  return Field(Kind::prime, p);
}

Rat Field::reduce(const Rat& x) const {
  if (kind_ == Kind::rationals) {
    Rat r = x;
    r.canonicalize();
    return r;
  }
  mpz_class num = x.get_num(), den = x.get_den();
  mpz_class pz(p_);
  mpz_class d = den % pz;
  if (sgn(d) == 0) throw std::domain_error("denominator divisible by p");
  mpz_class dinv;
  if (mpz_invert(dinv.get_mpz_t(), d.get_mpz_t(), pz.get_mpz_t()) == 0)
    throw std::domain_error("no inverse mod p");
  mpz_class v = (num % pz) * dinv % pz;
  if (sgn(v) < 0) v += pz;
  return Rat(v);
}

// mpq arithmetic keeps canonical form on canonical inputs, so the rational
// case skips reduce(); prime-field values are integers and stay on the
// numerator.
Rat Field::add(const Rat& a, const Rat& b) const {
  if (kind_ == Kind::rationals) return Rat(a + b);
  mpz_class v = (a.get_num() + b.get_num()) % mpz_class(p_);
  if (sgn(v) < 0) v += p_;
  return Rat(v);
}

Rat Field::sub(const Rat& a, const Rat& b) const {
  if (kind_ == Kind::rationals) return Rat(a - b);
  mpz_class v = (a.get_num() - b.get_num()) % mpz_class(p_);
  if (sgn(v) < 0) v += p_;
  return Rat(v);
}

Rat Field::mul(const Rat& a, const Rat& b) const {
  if (kind_ == Kind::rationals) return Rat(a * b);
  mpz_class v = (a.get_num() * b.get_num()) % mpz_class(p_);
  if (sgn(v) < 0) v += p_;
  return Rat(v);
}

Rat Field::inv(const Rat& a) const {
  if (is_zero(a)) throw std::domain_error("division by zero");
  if (kind_ == Kind::rationals) return reduce(Rat(1 / a));
  mpz_class v = a.get_num() % mpz_class(p_), pz(p_);
  if (sgn(v) < 0) v += pz;
  mpz_class vinv;
  if (mpz_invert(vinv.get_mpz_t(), v.get_mpz_t(), pz.get_mpz_t()) == 0)
    throw std::domain_error("division by zero mod p");
  return Rat(vinv);
}

Rat Field::div(const Rat& a, const Rat& b) const { return mul(a, inv(b)); }
Rat Field::neg(const Rat& a) const { return reduce(Rat(-a)); }

std::string Field::to_string(const Rat& a) const {
  Rat r = reduce(a);
  return r.get_str();
}

Rat Field::parse(const std::string& s) const {
  Rat r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
  r.canonicalize();
  return reduce(r);
}

std::string Field::name() const {
  return kind_ == Kind::rationals ? "Q" : "F" + std::to_string(p_);
}

}  // namespace kk::linalg
