#include "koszulkit/laurent.hpp"

#include <sstream>

namespace kk::braid {

Laurent Laurent::monomial(int exp, const Rat& coef) {
  Laurent l;
  if (sgn(coef.get_num()) == 0) return l;
  l.lo_ = exp;
  l.coef_ = {coef};
  return l;
}

Rat Laurent::coefficient(int exp) const {
  if (is_zero() || exp < lo_ || exp > hi()) return Rat(0);
  return coef_[exp - lo_];
}

void Laurent::normalize() {
  std::size_t lead = 0;
  while (lead < coef_.size() && sgn(coef_[lead].get_num()) == 0) ++lead;
  if (lead == coef_.size()) {
    coef_.clear();
    lo_ = 0;
    return;
  }
  std::size_t tail = coef_.size();
  while (sgn(coef_[tail - 1].get_num()) == 0) --tail;
  coef_ = std::vector<Rat>(coef_.begin() + lead, coef_.begin() + tail);
  lo_ += static_cast<int>(lead);
}

Laurent Laurent::operator+(const Laurent& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  int nlo = std::min(lo_, o.lo_), nhi = std::max(hi(), o.hi());
  Laurent r;
  r.lo_ = nlo;
  r.coef_.assign(nhi - nlo + 1, Rat(0));
  for (std::size_t k = 0; k < coef_.size(); ++k) r.coef_[lo_ - nlo + k] += coef_[k];
  for (std::size_t k = 0; k < o.coef_.size(); ++k) r.coef_[o.lo_ - nlo + k] += o.coef_[k];
  r.normalize();
  return r;
}

Laurent Laurent::operator-() const {
  Laurent r = *this;
  for (auto& c : r.coef_) c = -c;
  return r;
}

Laurent Laurent::operator-(const Laurent& o) const { return *this + (-o); }

Laurent Laurent::operator*(const Laurent& o) const {
  if (is_zero() || o.is_zero()) return Laurent();
  Laurent r;
  r.lo_ = lo_ + o.lo_;
  r.coef_.assign(coef_.size() + o.coef_.size() - 1, Rat(0));
  for (std::size_t a = 0; a < coef_.size(); ++a)
    for (std::size_t b = 0; b < o.coef_.size(); ++b) r.coef_[a + b] += coef_[a] * o.coef_[b];
  r.normalize();
  return r;
}

std::string Laurent::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int e = lo(); e <= hi(); ++e) {
    Rat c = coefficient(e);
    if (sgn(c.get_num()) == 0) continue;
    if (!first) os << (sgn(c.get_num()) > 0 ? "+" : "");
    first = false;
    if (e == 0) {
      os << c.get_str();
    } else {
      if (c == Rat(-1)) os << "-";
      else if (c != Rat(1)) os << c.get_str() << "*";
      os << "v";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

}  // namespace kk::braid
