#include "koszulkit/subspace.hpp"

#include <stdexcept>

namespace kk::linalg {

Subspace Subspace::span(Field f, std::size_t ambient_dim, std::vector<std::vector<Rat>> vectors) {
  for (auto& v : vectors) {
    if (v.size() != ambient_dim) throw std::invalid_argument("Subspace::span: vector of wrong length");
    for (auto& e : v) e = f.reduce(e);
  }
  row_reduce(f, vectors);
  Subspace s(f, ambient_dim);
  s.basis_ = std::move(vectors);
  return s;
}

Subspace Subspace::full(Field f, std::size_t ambient_dim) {
  std::vector<std::vector<Rat>> rows(ambient_dim, std::vector<Rat>(ambient_dim, Rat(0)));
  for (std::size_t i = 0; i < ambient_dim; ++i) rows[i][i] = Rat(1);
  return span(f, ambient_dim, std::move(rows));
}

void Subspace::check_compatible(const Subspace& o) const {
  if (ambient_ != o.ambient_ || field_ != o.field_)
    throw std::invalid_argument("subspace operation: ambient dimension or field mismatch");
}

Subspace Subspace::sum(const Subspace& o) const {
  check_compatible(o);
  auto rows = basis_;
  rows.insert(rows.end(), o.basis_.begin(), o.basis_.end());
  return span(field_, ambient_, std::move(rows));
}

Subspace Subspace::intersection(const Subspace& o) const {
  // Zassenhaus: reduce [A|A; B|0], rows with zero left half carry the
  // intersection in the right half.
  check_compatible(o);
  std::vector<std::vector<Rat>> rows;
  for (const auto& a : basis_) {
    std::vector<Rat> r(2 * ambient_);
    for (std::size_t c = 0; c < ambient_; ++c) r[c] = r[ambient_ + c] = a[c];
    rows.push_back(std::move(r));
  }
  for (const auto& b : o.basis_) {
    std::vector<Rat> r(2 * ambient_, Rat(0));
    for (std::size_t c = 0; c < ambient_; ++c) r[c] = b[c];
    rows.push_back(std::move(r));
  }
  row_reduce(field_, rows);
  std::vector<std::vector<Rat>> inter;
  for (const auto& r : rows) {
    bool left_zero = true;
    for (std::size_t c = 0; c < ambient_ && left_zero; ++c)
      if (!field_.is_zero(r[c])) left_zero = false;
    if (left_zero) inter.emplace_back(r.begin() + ambient_, r.end());
  }
  return span(field_, ambient_, std::move(inter));
}

std::size_t Subspace::quotient_dim(const Subspace& o) const {
  check_compatible(o);
  return dim() - intersection(o).dim();
}

bool Subspace::contains(const std::vector<Rat>& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("contains: length mismatch");
  // reduce v against the echelon basis
  std::vector<Rat> w(v);
  for (auto& e : w) e = field_.reduce(e);
  for (const auto& row : basis_) {
    std::size_t piv = 0;
    while (piv < ambient_ && field_.is_zero(row[piv])) ++piv;
    if (piv == ambient_) continue;
    if (field_.is_zero(w[piv])) continue;
    Rat factor = w[piv];
    for (std::size_t c = piv; c < ambient_; ++c)
      w[c] = field_.sub(w[c], field_.mul(factor, row[c]));
  }
  for (const auto& e : w)
    if (!field_.is_zero(e)) return false;
  return true;
}

bool Subspace::contains(const Subspace& o) const {
  check_compatible(o);
  for (const auto& b : o.basis_)
    if (!contains(b)) return false;
  return true;
}

}  // namespace kk::linalg
