#include "koszulkit/dgmod.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "koszulkit/subspace.hpp"

namespace kk::dg {

LinearMap LinearMap::zero(int rows, int cols) {
  LinearMap m;
  m.rows = rows;
  m.cols = cols;
  m.col.resize(cols);
  return m;
}

void LinearMap::add_entry(const Field& f, int r, int c, const Rat& v) {
  if (f.is_zero(v)) return;
  auto& entries = col[c];
  auto it = std::lower_bound(entries.begin(), entries.end(), r,
                             [](const auto& e, int row) { return e.first < row; });
  if (it != entries.end() && it->first == r) {
    it->second = f.add(it->second, v);
    if (f.is_zero(it->second)) entries.erase(it);
  } else {
    entries.insert(it, {r, f.reduce(v)});
  }
}

std::vector<std::pair<int, Rat>> LinearMap::apply(
    const Field& f, const std::vector<std::pair<int, Rat>>& v) const {
  std::map<int, Rat> acc;
  for (const auto& [c, coef] : v)
    for (const auto& [r, entry] : col[c]) {
      auto [it, fresh] = acc.emplace(r, f.mul(entry, coef));
      if (!fresh) it->second = f.add(it->second, f.mul(entry, coef));
    }
  std::vector<std::pair<int, Rat>> out;
  for (auto& [r, val] : acc)
    if (!f.is_zero(val)) out.emplace_back(r, val);
  return out;
}

LinearMap LinearMap::compose(const Field& f, const LinearMap& inner) const {
  if (cols != inner.rows) throw std::invalid_argument("LinearMap::compose: shape mismatch");
  LinearMap out = zero(rows, inner.cols);
  for (int c = 0; c < inner.cols; ++c) out.col[c] = apply(f, inner.col[c]);
  return out;
}

LinearMap LinearMap::plus(const Field& f, const LinearMap& o) const {
  if (rows != o.rows || cols != o.cols) throw std::invalid_argument("LinearMap::plus: shape mismatch");
  LinearMap out = zero(rows, cols);
  for (int c = 0; c < cols; ++c) {
    for (const auto& [r, v] : col[c]) out.add_entry(f, r, c, v);
    for (const auto& [r, v] : o.col[c]) out.add_entry(f, r, c, v);
  }
  return out;
}

LinearMap LinearMap::negated(const Field& f) const {
  LinearMap out = *this;
  for (auto& c : out.col)
    for (auto& [r, v] : c) v = f.neg(v);
  return out;
}

bool LinearMap::is_zero(const Field& f) const {
  for (const auto& c : col)
    for (const auto& [r, v] : c)
      if (!f.is_zero(v)) return false;
  return true;
}

bool LinearMap::equals(const Field& f, const LinearMap& o) const {
  if (rows != o.rows || cols != o.cols) return false;
  for (int c = 0; c < cols; ++c) {
    if (col[c].size() != o.col[c].size()) return false;
    for (std::size_t k = 0; k < col[c].size(); ++k)
      if (col[c][k].first != o.col[c][k].first ||
          !f.is_zero(f.sub(col[c][k].second, o.col[c][k].second)))
        return false;
  }
  return true;
}

std::string DgModule::label(int k) const {
  if (k < static_cast<int>(labels.size()) && !labels[k].empty()) return labels[k];
  return "e" + std::to_string(k);
}

Bidegree action_degree(AlgebraSide side) {
  switch (side) {
    case AlgebraSide::symmetric: return {2, -2};
    case AlgebraSide::exterior: return {-1, 2};
    case AlgebraSide::plain: return {0, -2};
  }
  return {};
}

namespace {

bool map_respects_degrees(const DgModule& m, const LinearMap& f, Bidegree shift) {
  for (int c = 0; c < f.cols; ++c)
    for (const auto& [r, v] : f.col[c]) {
      (void)v;
      if (m.deg[r].i != m.deg[c].i + shift.i || m.deg[r].j != m.deg[c].j + shift.j) return false;
    }
  return true;
}

}  // namespace

ValidationReport validate(const DgModule& m) {
  ValidationReport rep;
  const Field& f = m.field;
  const int n = m.dim();
  if (m.diff.rows != n || m.diff.cols != n) {
    rep.violations.push_back("differential has wrong shape");
    return rep;
  }
  if (static_cast<int>(m.act.size()) != m.dim_v) {
    rep.violations.push_back("expected one action map per generator of V");
    return rep;
  }
  for (const auto& a : m.act)
    if (a.rows != n || a.cols != n) {
      rep.violations.push_back("action map has wrong shape");
      return rep;
    }

  if (!map_respects_degrees(m, m.diff, {1, 0}))
    rep.violations.push_back("differential entry violates bidegree (+1,0)");
  Bidegree ad = action_degree(m.side);
  for (int k = 0; k < m.dim_v; ++k)
    if (!map_respects_degrees(m, m.act[k], ad))
      rep.violations.push_back("action of generator " + std::to_string(k) +
                               " violates its bidegree");

  if (!m.diff.compose(f, m.diff).is_zero(f)) rep.violations.push_back("d∘d != 0");

  const bool odd = m.side == AlgebraSide::exterior;
  for (int k = 0; k < m.dim_v; ++k) {
    LinearMap da = m.diff.compose(f, m.act[k]);
    LinearMap ad2 = m.act[k].compose(f, m.diff);
    LinearMap lhs = odd ? da.plus(f, ad2) : da.plus(f, ad2.negated(f));
    if (!lhs.is_zero(f))
      rep.violations.push_back("Leibniz rule fails for generator " + std::to_string(k));
  }
  for (int k = 0; k < m.dim_v; ++k)
    for (int l = k; l < m.dim_v; ++l) {
      if (odd && l == k) {
        if (!m.act[k].compose(f, m.act[k]).is_zero(f))
          rep.violations.push_back("generator " + std::to_string(k) + " does not square to zero");
        continue;
      }
      if (l == k) continue;
      LinearMap kl = m.act[k].compose(f, m.act[l]);
      LinearMap lk = m.act[l].compose(f, m.act[k]);
      LinearMap probe = odd ? kl.plus(f, lk) : kl.plus(f, lk.negated(f));
      if (!probe.is_zero(f))
        rep.violations.push_back("generators " + std::to_string(k) + "," + std::to_string(l) +
                                 (odd ? " do not anticommute" : " do not commute"));
    }
  return rep;
}

std::string ValidationReport::to_string() const {
  if (ok()) return "valid";
  std::string s;
  for (const auto& v : violations) s += v + "\n";
  return s;
}

int CohomologyTable::dim_at(Bidegree b) const {
  auto it = dims.find(b);
  return it == dims.end() ? 0 : it->second;
}

std::string CohomologyTable::to_string() const {
  std::ostringstream os;
  for (const auto& [b, d] : dims) os << "(" << b.i << "," << b.j << "): " << d << "\n";
  return os.str();
}

CohomologyTable cohomology(const DgModule& m, bool with_representatives) {
  const Field& f = m.field;
  std::map<Bidegree, std::vector<int>> groups;
  for (int k = 0; k < m.dim(); ++k) groups[m.deg[k]].push_back(k);
  std::map<int, int> local;  // global index -> position within its group
  for (const auto& [b, idxs] : groups)
    for (std::size_t p = 0; p < idxs.size(); ++p) local[idxs[p]] = static_cast<int>(p);

  CohomologyTable table;
  for (const auto& [b, idxs] : groups) {
    const Bidegree next{b.i + 1, b.j}, prev{b.i - 1, b.j};
    const int dim_here = static_cast<int>(idxs.size());
    // outgoing differential
    int next_dim = groups.count(next) ? static_cast<int>(groups.at(next).size()) : 0;
    linalg::Matrix d_out(f, next_dim, dim_here);
    for (int c = 0; c < dim_here; ++c)
      for (const auto& [r, v] : m.diff.col[idxs[c]])
        if (m.deg[r] == next) d_out.set(local[r], c, v);
    auto kernel = d_out.kernel();  // zero rows: the kernel is everything
    // incoming image
    std::vector<std::vector<Rat>> image_rows;
    if (groups.count(prev)) {
      for (int src : groups.at(prev)) {
        std::vector<Rat> v(dim_here, Rat(0));
        bool nonzero = false;
        for (const auto& [r, val] : m.diff.col[src])
          if (m.deg[r] == b) {
            v[local[r]] = f.reduce(val);
            nonzero = true;
          }
        if (nonzero) image_rows.push_back(std::move(v));
      }
    }
    auto image_pivots = linalg::row_reduce(f, image_rows);
    int h = static_cast<int>(kernel.size() - image_rows.size());
    if (h < 0) throw std::logic_error("image not contained in kernel; module invalid");
    if (h == 0) continue;
    table.dims[b] = h;
    if (with_representatives) {
      auto span = image_rows;
      std::vector<std::vector<Rat>> reps;
      for (const auto& kvec : kernel) {
        auto probe = span;
        probe.push_back(kvec);
        auto pivots = linalg::row_reduce(f, probe);
        if (probe.size() > span.size()) {
          span = std::move(probe);
          std::vector<Rat> global(m.dim(), Rat(0));
          for (int c = 0; c < dim_here; ++c) global[idxs[c]] = kvec[c];
          reps.push_back(std::move(global));
          if (static_cast<int>(reps.size()) == h) break;
        }
      }
      table.representatives[b] = std::move(reps);
    }
  }
  return table;
}

namespace {

int sign_below(int mask, int k) {  // (-1)^{#{i in mask : i < k}}
  int count = __builtin_popcount(mask & ((1 << k) - 1));
  return count % 2 == 0 ? 1 : -1;
}

}  // namespace

DgModule functor_A(const DgModule& m) {
  if (m.side != AlgebraSide::symmetric)
    throw std::invalid_argument("functor_A expects a module over the symmetric side");
  const Field& f = m.field;
  const int n = m.dim_v, dim = m.dim(), subsets = 1 << n;
  DgModule out;
  out.field = f;
  out.side = AlgebraSide::exterior;
  out.dim_v = n;
  auto index = [&](int I, int b) { return I * dim + b; };
  out.deg.resize(subsets * dim);
  out.labels.resize(subsets * dim);
  for (int I = 0; I < subsets; ++I) {
    int k = __builtin_popcount(I);
    for (int b = 0; b < dim; ++b) {
      out.deg[index(I, b)] = {m.deg[b].i + k, m.deg[b].j - 2 * k};
      out.labels[index(I, b)] = "w" + std::to_string(I) + "*" + m.label(b);
    }
  }
  out.diff = LinearMap::zero(out.dim(), out.dim());
  for (int I = 0; I < subsets; ++I) {
    int k = __builtin_popcount(I);
    for (int b = 0; b < dim; ++b) {
      // d1(phi)(t) = (-1)^{deg t} d_M(phi(t))
      for (const auto& [r, v] : m.diff.col[b])
        out.diff.add_entry(f, index(I, r), index(I, b), k % 2 == 0 ? v : f.neg(v));
      // d2(phi)(t) = -sum_k y_k^* phi(y_k t)
      for (int g = 0; g < n; ++g) {
        if (!(I & (1 << g))) continue;
        int sgn_g = sign_below(I, g);
        for (const auto& [r, v] : m.act[g].col[b])
          out.diff.add_entry(f, index(I & ~(1 << g), r), index(I, b),
                             sgn_g > 0 ? f.neg(v) : v);
      }
    }
  }
  // (t·phi)(s) = (-1)^{deg(t)(deg(t)+1)/2} phi(t s) with deg the exterior
  // degree, so a generator acts by -phi(y ∧ s).
  out.act.assign(n, LinearMap::zero(out.dim(), out.dim()));
  for (int g = 0; g < n; ++g)
    for (int I = 0; I < subsets; ++I) {
      if (!(I & (1 << g))) continue;
      int sgn_g = -sign_below(I, g);
      for (int b = 0; b < dim; ++b)
        out.act[g].add_entry(f, index(I & ~(1 << g), b), index(I, b),
                             f.from_long(sgn_g));
    }
  return out;
}

namespace {

void enumerate_multidegrees(int vars, int bound, std::vector<int>& cur,
                            std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == vars) {
    out.push_back(cur);
    return;
  }
  for (int v = 0; v + std::accumulate(cur.begin(), cur.end(), 0) <= bound; ++v) {
    cur.push_back(v);
    enumerate_multidegrees(vars, bound, cur, out);
    cur.pop_back();
  }
}

std::string multidegree_label(const std::vector<int>& a) {
  std::string s = "y^(";
  for (std::size_t k = 0; k < a.size(); ++k) s += (k ? "," : "") + std::to_string(a[k]);
  return s + ")";
}

}  // namespace

DgModule functor_B(const DgModule& nmod, const Window& w) {
  if (nmod.side != AlgebraSide::exterior)
    throw std::invalid_argument("functor_B expects a module over the exterior side");
  if (!w.nonempty()) throw std::invalid_argument("functor_B: empty window");
  const Field& f = nmod.field;
  const int n = nmod.dim_v, dim = nmod.dim();

  int bound = 0;
  for (int b = 0; b < dim; ++b) {
    int by_i = (w.i1 - nmod.deg[b].i) / 2, by_j = (nmod.deg[b].j - w.j0) / 2;
    bound = std::max(bound, std::min(by_i, by_j));
  }
  std::vector<std::vector<int>> monomials;
  std::vector<int> cur;
  enumerate_multidegrees(n, bound, cur, monomials);

  DgModule out;
  out.field = f;
  out.side = AlgebraSide::symmetric;
  out.dim_v = n;
  std::map<std::pair<int, int>, int> index;  // (monomial idx, b) -> basis idx
  for (std::size_t a = 0; a < monomials.size(); ++a) {
    int total = std::accumulate(monomials[a].begin(), monomials[a].end(), 0);
    for (int b = 0; b < dim; ++b) {
      Bidegree bd{2 * total + nmod.deg[b].i, -2 * total + nmod.deg[b].j};
      if (!w.contains(bd)) continue;
      index[{static_cast<int>(a), b}] = out.dim();
      out.deg.push_back(bd);
      out.labels.push_back(multidegree_label(monomials[a]) + nmod.label(b));
    }
  }
  std::map<std::vector<int>, int> monomial_index;
  for (std::size_t a = 0; a < monomials.size(); ++a) monomial_index[monomials[a]] = static_cast<int>(a);

  out.diff = LinearMap::zero(out.dim(), out.dim());
  out.act.assign(n, LinearMap::zero(out.dim(), out.dim()));
  for (const auto& [key, idx] : index) {
    auto [a, b] = key;
    // d3 = id (x) d_N
    for (const auto& [r, v] : nmod.diff.col[b]) {
      auto it = index.find({a, r});
      if (it != index.end()) out.diff.add_entry(f, it->second, idx, v);
    }
    // d4(s (x) n) = sum_k s y_k^* (x) y_k n, and the module structure s -> y_k s
    for (int g = 0; g < n; ++g) {
      auto bumped = monomials[a];
      ++bumped[g];
      auto mit = monomial_index.find(bumped);
      if (mit == monomial_index.end()) continue;
      for (const auto& [r, v] : nmod.act[g].col[b]) {
        auto it = index.find({mit->second, r});
        if (it != index.end()) out.diff.add_entry(f, it->second, idx, v);
      }
      auto self = index.find({mit->second, b});
      if (self != index.end()) out.act[g].add_entry(f, self->second, idx, f.from_long(1));
    }
  }
  return out;
}

bool b_output_trusted(const Window& w, Bidegree b) {
  return w.contains(b) && w.contains({b.i - 1, b.j}) && w.contains({b.i + 1, b.j});
}

bool ab_roundtrip_trusted(const Window& w, int dim_v, Bidegree b) {
  for (int k = 0; k <= dim_v; ++k)
    for (int d = -1; d <= 1; ++d)
      if (!w.contains({b.i + d - k, b.j + 2 * k})) return false;
  return true;
}

DgModule free_exterior(Field f, int dim_v) {
  const int subsets = 1 << dim_v;
  DgModule m;
  m.field = f;
  m.side = AlgebraSide::exterior;
  m.dim_v = dim_v;
  m.deg.resize(subsets);
  m.labels.resize(subsets);
  for (int I = 0; I < subsets; ++I) {
    int k = __builtin_popcount(I);
    m.deg[I] = {-k, 2 * k};
    m.labels[I] = "w" + std::to_string(I);
  }
  m.diff = LinearMap::zero(subsets, subsets);
  m.act.assign(dim_v, LinearMap::zero(subsets, subsets));
  for (int g = 0; g < dim_v; ++g)
    for (int I = 0; I < subsets; ++I) {
      if (I & (1 << g)) continue;
      m.act[g].add_entry(f, I | (1 << g), I, Rat(sign_below(I, g)));
    }
  return m;
}

DgModule trivial_module(Field f, int dim_v, AlgebraSide side, Bidegree at) {
  DgModule m;
  m.field = f;
  m.side = side;
  m.dim_v = dim_v;
  m.deg = {at};
  m.labels = {"k"};
  m.diff = LinearMap::zero(1, 1);
  m.act.assign(dim_v, LinearMap::zero(1, 1));
  return m;
}

Window koszul_window(int dim_v, int extra) {
  return {-dim_v - 1, 2 * (extra + 1), -2 * (extra + 1), 2 * dim_v};
}

DgModule dual_free_exterior(Field f, int dim_v) {
  // Hom(Lambda(V), k): the dual wedges with the contraction-style action.
  return functor_A(trivial_module(f, dim_v, AlgebraSide::symmetric));
}

DgModule koszul_complex(Field f, int dim_v, int extra) {
  if (dim_v < 1 || dim_v > 6) throw std::invalid_argument("koszul_complex: dim_v out of range");
  return functor_B(dual_free_exterior(f, dim_v), koszul_window(dim_v, extra));
}

DgModule shift(const DgModule& m, int a, int b) {
  DgModule out = m;
  for (auto& d : out.deg) d = {d.i - a, d.j + b};
  if (a % 2 != 0) out.diff = out.diff.negated(m.field);
  return out;
}

DgModule direct_sum(const DgModule& a, const DgModule& b) {
  if (a.field != b.field || a.side != b.side || a.dim_v != b.dim_v)
    throw std::invalid_argument("direct_sum: incompatible modules");
  DgModule out = a;
  const int offset = a.dim();
  out.deg.insert(out.deg.end(), b.deg.begin(), b.deg.end());
  out.labels.resize(a.dim());
  for (int k = 0; k < a.dim(); ++k) out.labels[k] = a.label(k) + ".l";
  for (int k = 0; k < b.dim(); ++k) out.labels.push_back(b.label(k) + ".r");
  auto embed = [&](LinearMap& big, const LinearMap& small) {
    big.rows = big.cols = a.dim() + b.dim();
    big.col.resize(big.cols);
    for (int c = 0; c < small.cols; ++c)
      for (const auto& [r, v] : small.col[c]) big.add_entry(a.field, r + offset, c + offset, v);
  };
  embed(out.diff, b.diff);
  for (int g = 0; g < a.dim_v; ++g) embed(out.act[g], b.act[g]);
  return out;
}

namespace {

DgModule reindex(const DgModule& m, AlgebraSide new_side, int di_from_j) {
  // new (i,j) = (i + di_from_j * j, j)
  DgModule out = m;
  out.side = new_side;
  for (auto& d : out.deg) d = {d.i + di_from_j * d.j, d.j};
  return out;
}

}  // namespace

DgModule regrade_xi(const DgModule& m) {
  if (m.side != AlgebraSide::symmetric) throw std::invalid_argument("xi expects a symmetric-side module");
  return reindex(m, AlgebraSide::plain, 1);
}

DgModule regrade_xi_inverse(const DgModule& m) {
  if (m.side != AlgebraSide::plain) throw std::invalid_argument("xi-inverse expects a plain module");
  return reindex(m, AlgebraSide::symmetric, -1);
}

DgModule zeta(const DgModule& c) {
  if (c.side != AlgebraSide::plain) throw std::invalid_argument("zeta expects a plain complex");
  return reindex(c, AlgebraSide::symmetric, -1);
}

DgModule zeta_inverse(const DgModule& m) {
  if (m.side != AlgebraSide::symmetric)
    throw std::invalid_argument("zeta-inverse expects a symmetric-side module");
  return reindex(m, AlgebraSide::plain, 1);
}

int PsiDuality::sign_entry(int subset_I, int dim_v) {
  int k = __builtin_popcount(subset_I);
  int sign = (k * (k + 1) / 2) % 2 == 0 ? 1 : -1;
  // wedge sign of sorting I followed by its complement
  int inversions = 0;
  for (int x = 0; x < dim_v; ++x)
    if (subset_I & (1 << x))
      inversions += __builtin_popcount(~subset_I & ((1 << x) - 1) & ((1 << dim_v) - 1));
  if (inversions % 2 != 0) sign = -sign;
  return sign;
}

PsiDuality psi_top_duality(Field f, int dim_v) {
  if (dim_v < 1 || dim_v > 6) throw std::invalid_argument("psi_top_duality: dim_v out of range");
  const int subsets = 1 << dim_v;
  PsiDuality psi{dim_v, linalg::Matrix(f, subsets, subsets)};
  for (int I = 0; I < subsets; ++I) {
    int comp = ~I & (subsets - 1);
    psi.matrix.set(comp, I, Rat(PsiDuality::sign_entry(I, dim_v)));
  }
  return psi;
}

}  // namespace kk::dg
