#include "koszulkit/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace kk::linalg {

Matrix Matrix::identity(Field f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, Rat(1));
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.ent_[c * rows_ + r] = ent_[r * cols_ + c];
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_ || field_ != o.field_) throw std::invalid_argument("matrix product shape/field mismatch");
  Matrix res(field_, rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rat& a = ent_[r * cols_ + k];
      if (sgn(a.get_num()) == 0) continue;
      for (std::size_t c = 0; c < o.cols_; ++c) {
        const Rat& b = o.ent_[k * o.cols_ + c];
        if (sgn(b.get_num()) == 0) continue;
        res.ent_[r * o.cols_ + c] += a * b;
      }
    }
  for (auto& e : res.ent_) e = field_.reduce(e);
  return res;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum shape mismatch");
  Matrix res(field_, rows_, cols_);
  for (std::size_t i = 0; i < ent_.size(); ++i) res.ent_[i] = field_.reduce(Rat(ent_[i] + o.ent_[i]));
  return res;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix diff shape mismatch");
  Matrix res(field_, rows_, cols_);
  for (std::size_t i = 0; i < ent_.size(); ++i) res.ent_[i] = field_.reduce(Rat(ent_[i] - o.ent_[i]));
  return res;
}

Matrix Matrix::scaled(const Rat& c) const {
  Matrix res(field_, rows_, cols_);
  for (std::size_t i = 0; i < ent_.size(); ++i) res.ent_[i] = field_.reduce(Rat(ent_[i] * c));
  return res;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && field_ == o.field_ && ent_ == o.ent_;
}

bool Matrix::is_zero() const {
  for (const auto& e : ent_)
    if (sgn(e.get_num()) != 0) return false;
  return true;
}

std::vector<Rat> Matrix::apply(const std::vector<Rat>& v) const {
  if (v.size() != cols_) throw std::invalid_argument("apply: length mismatch");
  std::vector<Rat> out(rows_, Rat(0));
  for (std::size_t r = 0; r < rows_; ++r) {
    Rat acc(0);
    for (std::size_t c = 0; c < cols_; ++c) acc += ent_[r * cols_ + c] * v[c];
    out[r] = field_.reduce(acc);
  }
  return out;
}

std::vector<std::size_t> row_reduce(const Field& f, std::vector<std::vector<Rat>>& rows) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t n = rows[0].size();
  std::size_t piv_row = 0;
  for (std::size_t col = 0; col < n && piv_row < rows.size(); ++col) {
    std::size_t sel = piv_row;
    while (sel < rows.size() && f.is_zero(rows[sel][col])) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[piv_row], rows[sel]);
    Rat inv = f.inv(rows[piv_row][col]);
    for (std::size_t c = col; c < n; ++c) rows[piv_row][c] = f.mul(rows[piv_row][c], inv);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == piv_row || f.is_zero(rows[r][col])) continue;
      Rat factor = rows[r][col];
      for (std::size_t c = col; c < n; ++c)
        rows[r][c] = f.sub(rows[r][c], f.mul(factor, rows[piv_row][c]));
    }
    pivots.push_back(col);
    ++piv_row;
  }
  rows.resize(pivots.size());
  return pivots;
}

std::pair<Matrix, std::size_t> Matrix::rref() const {
  std::vector<std::vector<Rat>> rows(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    rows[r].resize(cols_);
    for (std::size_t c = 0; c < cols_; ++c) rows[r][c] = field_.reduce(ent_[r * cols_ + c]);
  }
  auto pivots = row_reduce(field_, rows);
  Matrix out(field_, rows_, cols_);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols_; ++c) out.ent_[r * cols_ + c] = rows[r][c];
  return {out, pivots.size()};
}

std::vector<std::vector<Rat>> Matrix::kernel() const {
  std::vector<std::vector<Rat>> rows(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    rows[r].resize(cols_);
    for (std::size_t c = 0; c < cols_; ++c) rows[r][c] = field_.reduce(ent_[r * cols_ + c]);
  }
  auto pivots = row_reduce(field_, rows);
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rat>> basis;
  for (std::size_t free_col = 0; free_col < cols_; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Rat> v(cols_, Rat(0));
    v[free_col] = field_.from_long(1);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = field_.neg(rows[r][free_col]);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::vector<Rat>> Matrix::column_space_basis() const {
  std::vector<std::vector<Rat>> cols(cols_);
  for (std::size_t c = 0; c < cols_; ++c) {
    cols[c].resize(rows_);
    for (std::size_t r = 0; r < rows_; ++r) cols[c][r] = field_.reduce(ent_[r * cols_ + c]);
  }
  row_reduce(field_, cols);
  return cols;
}

bool Matrix::solve(const std::vector<Rat>& b, std::vector<Rat>& x) const {
  if (b.size() != rows_) throw std::invalid_argument("solve: length mismatch");
  // eliminate on the augmented system
  std::vector<std::vector<Rat>> rows(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    rows[r].resize(cols_ + 1);
    for (std::size_t c = 0; c < cols_; ++c) rows[r][c] = field_.reduce(ent_[r * cols_ + c]);
    rows[r][cols_] = field_.reduce(b[r]);
  }
  auto pivots = row_reduce(field_, rows);
  x.assign(cols_, Rat(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == cols_) return false;  // pivot in the b column: inconsistent
    x[pivots[r]] = rows[r][cols_];
  }
  return true;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r == 0 ? "[" : " ");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "[") << field_.to_string(at(r, c));
    os << "]" << (r + 1 == rows_ ? "]" : "\n");
  }
  return os.str();
}

}  // namespace kk::linalg
