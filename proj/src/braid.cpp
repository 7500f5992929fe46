#include "koszulkit/braid.hpp"

#include <algorithm>
#include <stdexcept>

namespace kk::braid {

BraidWord word_inverse(const BraidWord& w) {
  BraidWord out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    BraidLetter l = *it;
    if (l.kind == BraidLetter::Kind::t)
      l.exponent = -l.exponent;
    else
      l.x = -l.x;
    out.push_back(std::move(l));
  }
  return out;
}

BraidWord free_reduce(BraidWord w) {
  BraidWord out;
  for (auto& l : w) {
    bool cancels = false;
    if (!out.empty()) {
      const BraidLetter& prev = out.back();
      if (l.kind == BraidLetter::Kind::t && prev.kind == BraidLetter::Kind::t)
        cancels = prev.alpha == l.alpha && prev.exponent == -l.exponent;
      if (l.kind == BraidLetter::Kind::theta && prev.kind == BraidLetter::Kind::theta)
        cancels = (prev.x + l.x).is_zero();
    }
    if (cancels)
      out.pop_back();
    else if (l.kind == BraidLetter::Kind::theta && l.x.is_zero())
      ;  // theta_0 = 1
    else
      out.push_back(std::move(l));
  }
  return out;
}

std::string word_to_string(const BraidWord& w) {
  if (w.empty()) return "1";
  std::string s;
  for (const auto& l : w) {
    if (!s.empty()) s += " ";
    if (l.kind == BraidLetter::Kind::t) {
      s += "T" + std::to_string(l.alpha);
      if (l.exponent < 0) s += "^-1";
    } else {
      s += "theta" + l.x.to_string();
    }
  }
  return s;
}

TruncatedHeckeSpace::TruncatedHeckeSpace(RootSystemPtr rs, Int radius)
    : rs_(std::move(rs)), radius_(radius) {
  if (radius_ < 2) throw std::invalid_argument("box radius must be at least 2");
  const int n = rs_->rank();
  Vec lo(n, -radius_), cur(n);
  // |<x, alpha_i^vee>| = |x_i| <= radius already bounds the search cube
  std::vector<Int> coords(n, -radius_);
  for (;;) {
    Weight x{Vec(coords.begin(), coords.end())};
    bool inside = true;
    for (const auto& alpha : rs_->positive_roots())
      if (std::abs(rs_->pairing(x, alpha)) > radius_) {
        inside = false;
        break;
      }
    if (inside) weights_.push_back(x);
    int k = n - 1;
    while (k >= 0 && coords[k] == radius_) coords[k--] = -radius_;
    if (k < 0) break;
    ++coords[k];
  }
  std::sort(weights_.begin(), weights_.end());
  for (int i = 0; i < size(); ++i) index_[weights_[i].fw] = i;
}

std::optional<int> TruncatedHeckeSpace::index_of(const Weight& w) const {
  auto it = index_.find(w.fw);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<HeckeVector> TruncatedHeckeSpace::apply_letter(const BraidLetter& l,
                                                             const HeckeVector& v) const {
  HeckeVector out;
  auto add = [&](int idx, const Laurent& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = out.emplace(idx, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) out.erase(it);
    }
  };
  if (l.kind == BraidLetter::Kind::theta) {
    for (const auto& [idx, coef] : v) {
      auto target = index_of(weight(idx) + l.x);
      if (!target) return std::nullopt;  // leaves the box: undefined here
      add(*target, coef);
    }
    return out;
  }
  // Demazure-Lusztig, Bernstein normalization scaled by v^{-1}:
  //   Ttil e^y = v^{-1} ( q e^{s y} + (q-1) (e^y - e^{s y}) / (1 - e^{-a}) )
  // and Ttil^{-1} = Ttil - (v - v^{-1}).
  const auto& alpha = rs_->simple_root(l.alpha);
  Weight alpha_wt{alpha.fw};
  const Laurent vinv = Laurent::monomial(-1);
  const Laurent qm1 = Laurent::q() - Laurent::one();
  for (const auto& [idx, coef] : v) {
    Weight y = weight(idx);
    Int k = rs_->pairing(y, alpha);
    Weight sy = y - alpha_wt.scaled(k);
    auto sy_idx = index_of(sy);
    if (!sy_idx) throw std::logic_error("box is not W-stable");
    add(*sy_idx, coef * vinv * Laurent::q());
    // (e^y - e^{sy}) / (1 - e^{-alpha}): a geometric string inside the box
    if (k > 0) {
      for (Int j = 0; j < k; ++j) {
        auto t = index_of(y - alpha_wt.scaled(j));
        if (!t) throw std::logic_error("alpha-string left the box");
        add(*t, coef * vinv * qm1);
      }
    } else if (k < 0) {
      for (Int j = 1; j <= -k; ++j) {
        auto t = index_of(y + alpha_wt.scaled(j));
        if (!t) throw std::logic_error("alpha-string left the box");
        add(*t, -(coef * vinv * qm1));
      }
    }
    if (l.exponent < 0) {
      // subtract (v - v^{-1}) e^y
      add(idx, -(coef * (Laurent::monomial(1) - Laurent::monomial(-1))));
    }
  }
  return out;
}

PartialOp TruncatedHeckeSpace::apply_word(const BraidWord& w) const {
  PartialOp op;
  op.col.resize(size());
  for (int j = 0; j < size(); ++j) {
    std::optional<HeckeVector> cur = HeckeVector{{j, Laurent::one()}};
    for (auto it = w.rbegin(); it != w.rend() && cur; ++it) cur = apply_letter(*it, *cur);
    op.col[j] = std::move(cur);
  }
  return op;
}

PartialOp TruncatedHeckeSpace::identity_op() const { return apply_word({}); }

AgreeStats TruncatedHeckeSpace::agree(const PartialOp& a, const PartialOp& b) {
  AgreeStats st;
  for (std::size_t j = 0; j < a.col.size() && j < b.col.size(); ++j) {
    if (!a.col[j] || !b.col[j]) continue;
    ++st.compared;
    if (*a.col[j] != *b.col[j]) ++st.mismatches;
  }
  return st;
}

namespace {

int braid_order(const AffineWeyl& aw, const ExtAffineWeylElement& a,
                const ExtAffineWeylElement& b) {
  auto prod = aw.multiply(a, b);
  auto acc = prod;
  for (int m = 1; m <= 8; ++m) {
    if (acc == aw.identity()) return m;
    acc = aw.multiply(acc, prod);
  }
  return -1;
}

}  // namespace

std::vector<RelationReport> verify_relations(const TruncatedHeckeSpace& space) {
  const auto& rs = space.root_system();
  AffineWeyl aw(rs);
  std::vector<RelationReport> reports;

  auto check = [&](RelationReport& rep, const BraidWord& lhs, const BraidWord& rhs) {
    auto st = TruncatedHeckeSpace::agree(space.apply_word(lhs), space.apply_word(rhs));
    ++rep.instances_checked;
    rep.monomials_compared += st.compared;
    rep.failures += st.mismatches;
  };

  {  // (1) braid relations between finite generators
    RelationReport rep{"braid(T_a,T_b)"};
    for (int i = 0; i < rs->rank(); ++i)
      for (int j = i + 1; j < rs->rank(); ++j) {
        int m = braid_order(aw, aw.simple(i), aw.simple(j));
        if (m <= 0) throw std::logic_error("could not determine a braid order");
        BraidWord lhs, rhs;
        for (int k = 0; k < m; ++k) {
          lhs.push_back(BraidLetter::T(k % 2 == 0 ? i : j));
          rhs.push_back(BraidLetter::T(k % 2 == 0 ? j : i));
        }
        check(rep, lhs, rhs);
      }
    reports.push_back(rep);
  }
  {  // (2) theta_x theta_y = theta_{x+y}
    RelationReport rep{"theta_x theta_y = theta_{x+y}"};
    for (int a = 0; a < space.size(); ++a)
      for (int b = 0; b < space.size(); ++b) {
        const Weight &x = space.weight(a), &y = space.weight(b);
        check(rep, {BraidLetter::Theta(x), BraidLetter::Theta(y)}, {BraidLetter::Theta(x + y)});
      }
    reports.push_back(rep);
  }
  {  // (3) T_a theta_x = theta_x T_a when <x,a^vee> = 0
    RelationReport rep{"T_a theta_x = theta_x T_a when <x,a>=0"};
    for (int i = 0; i < rs->rank(); ++i)
      for (int a = 0; a < space.size(); ++a) {
        const Weight& x = space.weight(a);
        if (rs->pairing(x, rs->simple_root(i)) != 0) continue;
        check(rep, {BraidLetter::T(i), BraidLetter::Theta(x)},
              {BraidLetter::Theta(x), BraidLetter::T(i)});
      }
    reports.push_back(rep);
  }
  {  // (4) theta_x = T_a theta_{x-a} T_a when <x,a^vee> = 1
    RelationReport rep{"theta_x = T_a theta_{x-a} T_a when <x,a>=1"};
    for (int i = 0; i < rs->rank(); ++i)
      for (int a = 0; a < space.size(); ++a) {
        const Weight& x = space.weight(a);
        if (rs->pairing(x, rs->simple_root(i)) != 1) continue;
        Weight xa = x - Weight{rs->simple_root(i).fw};
        check(rep, {BraidLetter::Theta(x)},
              {BraidLetter::T(i), BraidLetter::Theta(xa), BraidLetter::T(i)});
      }
    reports.push_back(rep);
  }
  return reports;
}

BraidLift::BraidLift(RootSystemPtr rs) : rs_(rs), aw_(rs), theta_index_(rs->highest_coroot_index()) {
  // C(s_0) = theta_beta C(s_beta)^{-1} needs l(t_beta) = 1 + l(s_beta)
  const auto& theta = rs_->positive_roots()[theta_index_];
  Int lt = aw_.length(aw_.translation(Weight{theta.fw}));
  Int ls = rs_->length(rs_->reflection(theta));
  if (lt != 1 + ls) throw std::logic_error("canonical lift of s_0: lengths do not add");
}

BraidWord BraidLift::lift_finite_word(const std::vector<int>& word, int exponent) const {
  BraidWord out;
  if (exponent >= 0) {
    for (int i : word) out.push_back(BraidLetter::T(i));
  } else {
    for (auto it = word.rbegin(); it != word.rend(); ++it) out.push_back(BraidLetter::T(*it, -1));
  }
  return out;
}

BraidWord BraidLift::word_s0() const {
  const auto& theta = rs_->positive_roots()[theta_index_];
  BraidWord out{BraidLetter::Theta(Weight{theta.fw})};
  auto inv = lift_finite_word(rs_->reduced_word(rs_->reflection(theta)), -1);
  out.insert(out.end(), inv.begin(), inv.end());
  return out;
}

BraidWord BraidLift::word_omega(const OmegaElement& om) const {
  if (om.elt == aw_.identity()) return {};
  BraidWord out{BraidLetter::Theta(om.dominant)};
  auto inv = lift_finite_word(rs_->reduced_word(rs_->inverse(om.finite)), -1);
  out.insert(out.end(), inv.begin(), inv.end());
  return out;
}

BraidWord BraidLift::canonical_lift(const ExtAffineWeylElement& w) const {
  auto [omega, word] = aw_.reduced_decomposition(w);
  const OmegaElement* om = nullptr;
  for (const auto& o : aw_.omega_group())
    if (o.elt == omega) om = &o;
  if (!om) throw std::logic_error("length-zero part not found in Omega");
  BraidWord out = word_omega(*om);
  for (int letter : word) {
    if (letter == affine::kAffineLetter) {
      auto s0 = word_s0();
      out.insert(out.end(), s0.begin(), s0.end());
    } else {
      out.push_back(BraidLetter::T(letter));
    }
  }
  return free_reduce(std::move(out));
}

BraidLift::Conjugation BraidLift::find_affine_conjugation() const {
  auto s0 = aw_.affine_s0();
  const auto& omega = aw_.omega_group();
  for (const auto& om : omega) {
    if (om.elt == aw_.identity()) continue;
    // omega s0 omega^{-1} = s_beta, so s0 = omega^{-1} s_beta omega and the
    // conjugator lifting to b0 is C(omega)^{-1}
    auto conj = aw_.multiply(aw_.multiply(om.elt, s0), aw_.inverse(om.elt));
    for (int i = 0; i < rs_->rank(); ++i)
      if (conj == aw_.simple(i)) return {i, word_inverse(word_omega(om)), true};
  }
  if (omega.size() > 1)
    throw std::logic_error("nontrivial Omega but no conjugation to a finite simple reflection");
  // X = Y: use a simple root with a length-3 braid relation against s_0,
  // then C(s_0) = (C(s_b) C(s_0)) C(s_b) (C(s_b) C(s_0))^{-1}.
  for (int i = 0; i < rs_->rank(); ++i) {
    if (braid_order(aw_, s0, aw_.simple(i)) == 3) {
      BraidWord b0{BraidLetter::T(i)};
      auto ws0 = word_s0();
      b0.insert(b0.end(), ws0.begin(), ws0.end());
      return {i, b0, false};
    }
  }
  throw std::logic_error("no simple root with a length-3 braid relation against s_0");
}

}  // namespace kk::braid
