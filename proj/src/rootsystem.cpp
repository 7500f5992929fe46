#include "koszulkit/rootsystem.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace kk::roots {

Weight Weight::operator+(const Weight& o) const {
  Weight r = *this;
  for (std::size_t i = 0; i < fw.size(); ++i) r.fw[i] += o.fw[i];
  return r;
}

Weight Weight::operator-(const Weight& o) const {
  Weight r = *this;
  for (std::size_t i = 0; i < fw.size(); ++i) r.fw[i] -= o.fw[i];
  return r;
}

Weight Weight::operator-() const { return scaled(-1); }

Weight Weight::scaled(Int c) const {
  Weight r = *this;
  for (auto& x : r.fw) x *= c;
  return r;
}

bool Weight::is_zero() const {
  return std::all_of(fw.begin(), fw.end(), [](Int x) { return x == 0; });
}

std::string Weight::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < fw.size(); ++i) os << (i ? "," : "") << fw[i];
  os << ")";
  return os.str();
}

WeylElement WeylElement::identity(int rank) {
  WeylElement w;
  w.rank = rank;
  w.mat.assign(static_cast<std::size_t>(rank) * rank, 0);
  for (int i = 0; i < rank; ++i) w.mat[i * rank + i] = 1;
  return w;
}

bool WeylElement::is_identity() const { return *this == identity(rank); }

Weight WeylElement::act(const Weight& lam) const {
  Weight out;
  out.fw.assign(rank, 0);
  for (int r = 0; r < rank; ++r)
    for (int c = 0; c < rank; ++c) out.fw[r] += mat[r * rank + c] * lam.fw[c];
  return out;
}

WeylElement WeylElement::operator*(const WeylElement& o) const {
  WeylElement out;
  out.rank = rank;
  out.mat.assign(static_cast<std::size_t>(rank) * rank, 0);
  for (int r = 0; r < rank; ++r)
    for (int k = 0; k < rank; ++k) {
      Int a = mat[r * rank + k];
      if (a == 0) continue;
      for (int c = 0; c < rank; ++c) out.mat[r * rank + c] += a * o.mat[k * rank + c];
    }
  return out;
}

namespace {

struct TypeInfo {
  char family;
  int rank;
};

TypeInfo parse_type(const std::string& s) {
  if (s.size() < 2) throw std::invalid_argument("unknown Cartan type: " + s);
  char fam = s[0];
  int rank = 0;
  try {
    rank = std::stoi(s.substr(1));
  } catch (...) {
    throw std::invalid_argument("unknown Cartan type: " + s);
  }
  auto ok = [&](bool cond) {
    if (!cond) throw std::invalid_argument("unknown Cartan type: " + s);
  };
  switch (fam) {
    case 'A': ok(rank >= 1 && rank <= 8); break;
    case 'B': ok(rank >= 2 && rank <= 8); break;
    case 'C': ok(rank >= 2 && rank <= 8); break;
    case 'D': ok(rank >= 3 && rank <= 8); break;
    case 'E': ok(rank >= 6 && rank <= 8); break;
    case 'F': ok(rank == 4); break;
    case 'G': ok(rank == 2); break;
    default: ok(false);
  }
  return {fam, rank};
}

// cartan[i][j] = <alpha_j, alpha_i^vee>; sym[i] symmetrizes it.
void fill_cartan(const TypeInfo& t, Vec& cartan, Vec& sym) {
  const int n = t.rank;
  cartan.assign(static_cast<std::size_t>(n) * n, 0);
  sym.assign(n, 1);
  auto C = [&](int i, int j) -> Int& { return cartan[i * n + j]; };
  for (int i = 0; i < n; ++i) C(i, i) = 2;
  auto chain_edge = [&](int i, int j) { C(i, j) = -1; C(j, i) = -1; };
  switch (t.family) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) chain_edge(i, i + 1);
      break;
    case 'B':
      for (int i = 0; i + 2 < n; ++i) chain_edge(i, i + 1);
      C(n - 2, n - 1) = -1;
      C(n - 1, n - 2) = -2;
      for (int i = 0; i < n - 1; ++i) sym[i] = 2;
      break;
    case 'C':
      for (int i = 0; i + 2 < n; ++i) chain_edge(i, i + 1);
      C(n - 2, n - 1) = -2;
      C(n - 1, n - 2) = -1;
      sym[n - 1] = 2;
      break;
    case 'D':
      for (int i = 0; i + 3 < n; ++i) chain_edge(i, i + 1);
      if (n >= 3) {
        chain_edge(n - 3, n - 2);
        chain_edge(n - 3, n - 1);
      }
      break;
    case 'E':
      // Bourbaki: chain 1-3-4-5-6(-7-8), node 2 hangs off 4 (1-based)
      chain_edge(0, 2);
      chain_edge(2, 3);
      chain_edge(3, 4);
      chain_edge(4, 5);
      if (n >= 7) chain_edge(5, 6);
      if (n >= 8) chain_edge(6, 7);
      chain_edge(1, 3);
      break;
    case 'F':
      chain_edge(0, 1);
      C(1, 2) = -1;
      C(2, 1) = -2;
      chain_edge(2, 3);
      sym[0] = sym[1] = 2;
      break;
    case 'G':
      C(0, 1) = -3;
      C(1, 0) = -1;
      sym[1] = 3;
      break;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (sym[i] * C(i, j) != sym[j] * C(j, i))
        throw std::logic_error("Cartan matrix symmetrizer check failed");
}

int expected_num_positive(const TypeInfo& t) {
  const int n = t.rank;
  switch (t.family) {
    case 'A': return n * (n + 1) / 2;
    case 'B':
    case 'C': return n * n;
    case 'D': return n * (n - 1);
    case 'E': return n == 6 ? 36 : (n == 7 ? 63 : 120);
    case 'F': return 24;
    case 'G': return 6;
  }
  return -1;
}

}  // namespace

Int RootSystem::weyl_order_from_type() const {
  TypeInfo t = parse_type(type_);
  auto fact = [](int n) { Int f = 1; for (int i = 2; i <= n; ++i) f *= i; return f; };
  switch (t.family) {
    case 'A': return fact(t.rank + 1);
    case 'B':
    case 'C': return fact(t.rank) << t.rank;
    case 'D': return fact(t.rank) << (t.rank - 1);
    case 'E': return t.rank == 6 ? 51840 : (t.rank == 7 ? 2903040 : 696729600LL);
    case 'F': return 1152;
    case 'G': return 12;
  }
  return -1;
}

std::shared_ptr<const RootSystem> RootSystem::build(const std::string& cartan_type) {
  TypeInfo t = parse_type(cartan_type);
  auto rs = std::shared_ptr<RootSystem>(new RootSystem());
  rs->type_ = cartan_type;
  rs->rank_ = t.rank;
  fill_cartan(t, rs->cartan_, rs->sym_);
  rs->generate();
  if (rs->num_positive() != expected_num_positive(t))
    throw std::logic_error("positive-root closure produced the wrong count for " + cartan_type);
  return rs;
}

void RootSystem::generate() {
  const int n = rank_;
  // closure under simple reflections, in root coordinates
  auto pair_simple = [&](const Vec& rc, int i) {
    Int s = 0;
    for (int j = 0; j < n; ++j) s += rc[j] * cartan(i, j);
    return s;
  };
  std::set<Vec> seen;
  std::deque<Vec> queue;
  for (int i = 0; i < n; ++i) {
    Vec rc(n, 0);
    rc[i] = 1;
    seen.insert(rc);
    queue.push_back(rc);
  }
  while (!queue.empty()) {
    Vec rc = queue.front();
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      Vec img = rc;
      img[i] -= pair_simple(rc, i);
      bool positive = std::all_of(img.begin(), img.end(), [](Int x) { return x >= 0; });
      if (positive && !seen.count(img)) {
        seen.insert(img);
        queue.push_back(img);
      }
    }
  }

  for (const Vec& rc : seen) {
    PositiveRoot r;
    r.on_simple_roots = rc;
    r.fw.assign(n, 0);
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j) r.fw[k] += rc[j] * cartan(k, j);
    // (alpha,alpha)/2 with (alpha_j,alpha_k) = sym[j]*cartan(j,k)
    Int norm2 = 0;
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) norm2 += rc[j] * rc[k] * sym_[j] * cartan(j, k);
    if (norm2 <= 0 || norm2 % 2 != 0) throw std::logic_error("bad root norm");
    Int d_alpha = norm2 / 2;
    r.coroot_on_simples.assign(n, 0);
    for (int j = 0; j < n; ++j) {
      Int num = rc[j] * sym_[j];
      if (num % d_alpha != 0) throw std::logic_error("non-integral coroot");
      r.coroot_on_simples[j] = num / d_alpha;
    }
    r.height = 0;
    for (Int c : rc) r.height += c;
    positive_.push_back(std::move(r));
  }
  std::sort(positive_.begin(), positive_.end(), [](const PositiveRoot& a, const PositiveRoot& b) {
    return std::tie(a.height, a.on_simple_roots) < std::tie(b.height, b.on_simple_roots);
  });

  simple_index_.assign(n, -1);
  for (int idx = 0; idx < num_positive(); ++idx) {
    const auto& rc = positive_[idx].on_simple_roots;
    fw_to_root_[positive_[idx].fw] = idx;
    if (positive_[idx].height == 1)
      for (int i = 0; i < n; ++i)
        if (rc[i] == 1) simple_index_[i] = idx;
  }

  // highest root = unique root of maximal height
  highest_root_ = num_positive() - 1;
  coxeter_number_ = positive_.back().height + 1;

  // highest coroot: maximal coroot height; must dominate all others
  Int best = -1;
  for (int idx = 0; idx < num_positive(); ++idx) {
    Int h = 0;
    for (Int c : positive_[idx].coroot_on_simples) h += c;
    if (h > best) {
      best = h;
      highest_coroot_ = idx;
    }
  }
  for (int idx = 0; idx < num_positive(); ++idx)
    for (int j = 0; j < n; ++j)
      if (positive_[highest_coroot_].coroot_on_simples[j] < positive_[idx].coroot_on_simples[j])
        throw std::logic_error("highest coroot is not dominant");

  // longest element by descent from rho to -rho
  Weight mu = rho();
  WeylElement w = WeylElement::identity(n);
  for (;;) {
    int i = -1;
    for (int k = 0; k < n; ++k)
      if (mu.fw[k] > 0) { i = k; break; }
    if (i < 0) break;
    mu = simple_reflection(i).act(mu);
    w = simple_reflection(i) * w;
  }
  if (!(-w.act(rho()) == rho())) throw std::logic_error("w0 computation failed");
  w0_ = w;
}

Weight RootSystem::rho() const {
  Weight r;
  r.fw.assign(rank_, 1);
  return r;
}

Weight RootSystem::fundamental_weight(int i) const {
  Weight r;
  r.fw.assign(rank_, 0);
  r.fw[i] = 1;
  return r;
}

Int RootSystem::pairing(const Weight& lam, const Vec& coroot_on_simples) const {
  Int s = 0;
  for (int j = 0; j < rank_; ++j) s += coroot_on_simples[j] * lam.fw[j];
  return s;
}

bool RootSystem::is_dominant(const Weight& lam) const {
  return std::all_of(lam.fw.begin(), lam.fw.end(), [](Int x) { return x >= 0; });
}

WeylElement RootSystem::simple_reflection(int i) const {
  WeylElement s = WeylElement::identity(rank_);
  for (int k = 0; k < rank_; ++k) s.mat[k * rank_ + i] -= cartan(k, i);
  return s;
}

WeylElement RootSystem::reflection(const PositiveRoot& alpha) const {
  // s_alpha(lambda) = lambda - <lambda, alpha^vee> alpha
  WeylElement s = WeylElement::identity(rank_);
  for (int k = 0; k < rank_; ++k)
    for (int j = 0; j < rank_; ++j) s.mat[k * rank_ + j] -= alpha.fw[k] * alpha.coroot_on_simples[j];
  return s;
}

int RootSystem::signed_root_lookup(const Weight& fw_vector) const {
  auto it = fw_to_root_.find(fw_vector.fw);
  if (it != fw_to_root_.end()) return it->second + 1;
  Vec negated(fw_vector.fw);
  for (auto& x : negated) x = -x;
  it = fw_to_root_.find(negated);
  if (it != fw_to_root_.end()) return -(it->second + 1);
  throw std::invalid_argument("vector is not a root: " + fw_vector.to_string());
}

bool RootSystem::sends_root_negative(const WeylElement& w, int root_index) const {
  Weight img = w.act(Weight{positive_[root_index].fw});
  return signed_root_lookup(img) < 0;
}

Int RootSystem::length(const WeylElement& w) const {
  Int len = 0;
  for (int idx = 0; idx < num_positive(); ++idx)
    if (sends_root_negative(w, idx)) ++len;
  return len;
}

std::vector<int> RootSystem::reduced_word(const WeylElement& w) const {
  std::vector<int> rev;
  WeylElement cur = w;
  for (;;) {
    int i = -1;
    // right descent: w(alpha_i) < 0
    for (int k = 0; k < rank_ && i < 0; ++k)
      if (sends_root_negative(cur, simple_index_[k])) i = k;
    if (i < 0) break;
    cur = cur * simple_reflection(i);
    rev.push_back(i);
  }
  if (!cur.is_identity()) throw std::logic_error("descent did not reach the identity");
  return {rev.rbegin(), rev.rend()};
}

WeylElement RootSystem::from_word(const std::vector<int>& word) const {
  WeylElement w = WeylElement::identity(rank_);
  for (int i : word) w = w * simple_reflection(i);
  return w;
}

WeylElement RootSystem::inverse(const WeylElement& w) const {
  auto word = reduced_word(w);
  std::vector<int> rev(word.rbegin(), word.rend());
  return from_word(rev);
}

const std::vector<WeylElement>& RootSystem::enumerate_weyl(std::size_t cap) const {
  std::lock_guard<std::mutex> lock(enum_mutex_);
  if (weyl_cache_) return *weyl_cache_;
  std::set<WeylElement> seen;
  std::deque<WeylElement> queue;
  WeylElement e = WeylElement::identity(rank_);
  seen.insert(e);
  queue.push_back(e);
  while (!queue.empty()) {
    WeylElement w = queue.front();
    queue.pop_front();
    for (int i = 0; i < rank_; ++i) {
      WeylElement ws = w * simple_reflection(i);
      if (!seen.count(ws)) {
        if (seen.size() >= cap)
          throw std::runtime_error("Weyl group enumeration exceeds cap for " + type_);
        seen.insert(ws);
        queue.push_back(ws);
      }
    }
  }
  weyl_cache_.emplace(seen.begin(), seen.end());
  return *weyl_cache_;
}

}  // namespace kk::roots
