#include "koszulkit/affine.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace kk::affine {

namespace {

Int floor_div(Int a, Int b) {
  Int q = a / b, r = a % b;
  return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

}  // namespace

AffineWeyl::AffineWeyl(RootSystemPtr rs) : rs_(std::move(rs)) {
  if (!rs_) throw std::invalid_argument("AffineWeyl: null root system");
}

void AffineWeyl::require_level(Int p) const {
  if (p <= rs_->coxeter_number())
    throw std::invalid_argument("level p must exceed the Coxeter number h = " +
                                std::to_string(rs_->coxeter_number()));
}

ExtAffineWeylElement AffineWeyl::identity() const {
  return {WeylElement::identity(rs_->rank()), Weight{Vec(rs_->rank(), 0)}};
}

ExtAffineWeylElement AffineWeyl::translation(const Weight& x) const {
  return {WeylElement::identity(rs_->rank()), x};
}

ExtAffineWeylElement AffineWeyl::from_finite(const WeylElement& v) const {
  return {v, Weight{Vec(rs_->rank(), 0)}};
}

ExtAffineWeylElement AffineWeyl::from_t_v(const Weight& lam, const WeylElement& v) const {
  return {v, rs_->inverse(v).act(lam)};
}

ExtAffineWeylElement AffineWeyl::simple(int i) const { return from_finite(rs_->simple_reflection(i)); }

ExtAffineWeylElement AffineWeyl::affine_s0() const {
  const auto& theta = rs_->positive_roots()[rs_->highest_coroot_index()];
  return {rs_->reflection(theta), -Weight{theta.fw}};
}

ExtAffineWeylElement AffineWeyl::multiply(const ExtAffineWeylElement& a,
                                          const ExtAffineWeylElement& b) const {
  if (a.finite.rank != rs_->rank() || b.finite.rank != rs_->rank())
    throw std::invalid_argument("multiply: rank mismatch with root system");
  // (v t_x)(u t_y) = (v u) t_{u^{-1} x + y}
  WeylElement u_inv = rs_->inverse(b.finite);
  return {a.finite * b.finite, u_inv.act(a.translation) + b.translation};
}

ExtAffineWeylElement AffineWeyl::inverse(const ExtAffineWeylElement& a) const {
  WeylElement v_inv = rs_->inverse(a.finite);
  return {v_inv, -a.finite.act(a.translation)};
}

Weight AffineWeyl::dot_action(const ExtAffineWeylElement& w, const Weight& lam, Int p) const {
  require_level(p);
  Weight shifted = lam + w.translation.scaled(p) + rs_->rho();
  return w.finite.act(shifted) - rs_->rho();
}

Int AffineWeyl::length(const ExtAffineWeylElement& w) const {
  Int len = 0;
  for (int idx = 0; idx < rs_->num_positive(); ++idx) {
    Int pairing = rs_->pairing(w.translation, rs_->positive_roots()[idx]);
    if (rs_->sends_root_negative(w.finite, idx))
      len += std::abs(1 + pairing);
    else
      len += std::abs(pairing);
  }
  return len;
}

bool AffineWeyl::in_C0(const Weight& lam, Int p) const {
  require_level(p);
  Weight s = lam + rs_->rho();
  for (const auto& alpha : rs_->positive_roots()) {
    Int m = rs_->pairing(s, alpha);
    if (m <= 0 || m >= p) return false;
  }
  return true;
}

bool AffineWeyl::in_closure_C0(const Weight& lam, Int p) const {
  require_level(p);
  Weight s = lam + rs_->rho();
  for (const auto& alpha : rs_->positive_roots()) {
    Int m = rs_->pairing(s, alpha);
    if (m < 0 || m > p) return false;
  }
  return true;
}

bool AffineWeyl::is_regular(const Weight& lam, Int p) const {
  require_level(p);
  Weight s = lam + rs_->rho();
  for (const auto& alpha : rs_->positive_roots())
    if (rs_->pairing(s, alpha) % p == 0) return false;
  return true;
}

bool AffineWeyl::is_restricted_dominant(const Weight& lam, Int p) const {
  require_level(p);
  for (int i = 0; i < rs_->rank(); ++i)
    if (lam.fw[i] < 0 || lam.fw[i] > p - 1) return false;
  return true;
}

std::vector<ExtAffineWeylElement> AffineWeyl::enumerate_W0() const {
  std::vector<ExtAffineWeylElement> out;
  for (const auto& v : rs_->enumerate_weyl()) {
    WeylElement v_inv = rs_->inverse(v);
    Weight lam{Vec(rs_->rank(), 0)};
    for (int i = 0; i < rs_->rank(); ++i)
      if (rs_->sends_root_negative(v_inv, rs_->simple_index_of(i))) lam.fw[i] = 1;
    out.push_back(ExtAffineWeylElement{v, v_inv.act(lam)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

ExtAffineWeylElement AffineWeyl::tau0() const {
  return from_t_v(rs_->rho(), rs_->w0());  // = (w0, -rho)
}

Int AffineWeyl::tau0_length_by_sum() const {
  Int s = 0;
  for (const auto& alpha : rs_->positive_roots()) s += rs_->pairing(rs_->rho(), alpha) - 1;
  return s;
}

Facet AffineWeyl::facet_of(const Weight& lam, Int p) const {
  require_level(p);
  Facet f;
  f.p = p;
  Weight s = lam + rs_->rho();
  for (const auto& alpha : rs_->positive_roots()) {
    Int m = rs_->pairing(s, alpha);
    Facet::Entry e;
    if (m % p == 0) {
      e.wall = true;
      e.n = m / p;
    } else {
      e.wall = false;
      e.n = floor_div(m, p);
    }
    f.per_root.push_back(e);
  }
  return f;
}

bool AffineWeyl::upper_closure_contains(const Facet& f, const Weight& mu) const {
  Weight s = mu + rs_->rho();
  for (int idx = 0; idx < rs_->num_positive(); ++idx) {
    Int m = rs_->pairing(s, rs_->positive_roots()[idx]);
    const auto& e = f.per_root[idx];
    if (e.wall) {
      if (m != e.n * f.p) return false;
    } else {
      // walls may be reached from above only
      if (!(e.n * f.p < m && m <= (e.n + 1) * f.p)) return false;
    }
  }
  return true;
}

std::optional<Weight> AffineWeyl::translate_simple(const ExtAffineWeylElement& w,
                                                   const Weight& target_mu0, Int p) const {
  require_level(p);
  if (!in_closure_C0(target_mu0, p))
    throw std::invalid_argument("translate_simple: target weight not in the closure of C0");
  Weight zero{Vec(rs_->rank(), 0)};
  if (!is_restricted_dominant(dot_action(w, zero, p), p))
    throw std::invalid_argument("translate_simple: element is not in W0");
  Facet f = facet_of(dot_action(w, zero, p), p);
  Weight target = dot_action(w, target_mu0, p);
  if (upper_closure_contains(f, target)) return target;
  return std::nullopt;
}

std::vector<std::pair<int, Int>> AffineWeyl::singular_walls(const Weight& mu, Int p) const {
  require_level(p);
  std::vector<std::pair<int, Int>> walls;
  Weight s = mu + rs_->rho();
  for (int idx = 0; idx < rs_->num_positive(); ++idx) {
    Int m = rs_->pairing(s, rs_->positive_roots()[idx]);
    if (m % p == 0) walls.emplace_back(idx, m / p);
  }
  return walls;
}

bool AffineWeyl::is_parabolic_singularity(const Weight& mu, const std::vector<int>& simple_subset,
                                          Int p) const {
  auto walls = singular_walls(mu, p);
  std::set<int> expected;
  for (int idx = 0; idx < rs_->num_positive(); ++idx) {
    const auto& rc = rs_->positive_roots()[idx].on_simple_roots;
    bool supported = true;
    for (int j = 0; j < rs_->rank() && supported; ++j)
      if (rc[j] != 0 &&
          std::find(simple_subset.begin(), simple_subset.end(), j) == simple_subset.end())
        supported = false;
    if (supported) expected.insert(idx);
  }
  std::set<int> actual;
  for (const auto& [idx, n] : walls) {
    if (n != 0) return false;
    actual.insert(idx);
  }
  return actual == expected;
}

std::vector<ExtAffineWeylElement> AffineWeyl::W0_mu(const Weight& mu0, Int p) const {
  require_level(p);
  if (!in_closure_C0(mu0, p)) throw std::invalid_argument("W0_mu: weight not in the closure of C0");
  Weight zero{Vec(rs_->rank(), 0)};
  std::vector<ExtAffineWeylElement> out;
  for (const auto& w : enumerate_W0()) {
    Facet f = facet_of(dot_action(w, zero, p), p);
    if (upper_closure_contains(f, dot_action(w, mu0, p))) out.push_back(w);
  }
  return out;
}

ExtAffineWeylElement AffineWeyl::apply_letter(const ExtAffineWeylElement& w, int letter) const {
  return multiply(w, letter == kAffineLetter ? affine_s0() : simple(letter));
}

std::pair<ExtAffineWeylElement, std::vector<int>> AffineWeyl::reduced_decomposition(
    const ExtAffineWeylElement& w) const {
  std::vector<int> rev;
  ExtAffineWeylElement cur = w;
  Int len = length(cur);
  while (len > 0) {
    bool moved = false;
    for (int letter = kAffineLetter; letter < rs_->rank() && !moved; ++letter) {
      ExtAffineWeylElement next = apply_letter(cur, letter);
      Int nlen = length(next);
      if (nlen == len - 1) {
        cur = next;
        len = nlen;
        rev.push_back(letter);
        moved = true;
      }
    }
    if (!moved) throw std::logic_error("no descent found; length function inconsistent");
  }
  return {cur, std::vector<int>(rev.rbegin(), rev.rend())};
}

Int AffineWeyl::cartan_determinant() const {
  // Bareiss on a copy of the Cartan matrix
  int n = rs_->rank();
  std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = rs_->cartan(i, j);
  Int denom = 1, sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int swap_row = -1;
      for (int r = k + 1; r < n; ++r)
        if (a[r][k] != 0) { swap_row = r; break; }
      if (swap_row < 0) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / denom;
    denom = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

const std::vector<OmegaElement>& AffineWeyl::omega_group() const {
  std::lock_guard<std::mutex> lock(omega_mutex_);
  if (omega_cache_) return *omega_cache_;
  std::vector<OmegaElement> omega;
  Weight zero{Vec(rs_->rank(), 0)};
  omega.push_back({identity(), zero, WeylElement::identity(rs_->rank())});
  std::set<ExtAffineWeylElement> seen{identity()};
  for (int i = 0; i < rs_->rank(); ++i) {
    Weight pi = rs_->fundamental_weight(i);
    for (const auto& v : rs_->enumerate_weyl()) {
      ExtAffineWeylElement cand = from_t_v(pi, v);
      if (length(cand) == 0 && !seen.count(cand)) {
        seen.insert(cand);
        omega.push_back({cand, pi, v});
      }
    }
  }
  Int expected = cartan_determinant();
  if (expected < 0) expected = -expected;
  if (static_cast<Int>(omega.size()) != expected)
    throw std::logic_error("length-zero subgroup has unexpected order");
  omega_cache_ = std::move(omega);
  return *omega_cache_;
}

}  // namespace kk::affine
