#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "koszulkit/matrix.hpp"
#include "koszulkit/subspace.hpp"

using namespace kk::linalg;

namespace {

Matrix from_rows(Field f, std::vector<std::vector<long>> rows) {
  Matrix m(f, rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m.set(r, c, Rat(rows[r][c]));
  return m;
}

Matrix random_matrix(Field f, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  Matrix m(f, rows, cols);
  std::uniform_int_distribution<long> d(-4, 4);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, Rat(d(rng)));
  return m;
}

}  // namespace

TEST_CASE("rref of identity and zero") {
  auto F = Field::rationals();
  auto [ri, rk] = Matrix::identity(F, 3).rref();
  CHECK(ri == Matrix::identity(F, 3));
  CHECK(rk == 3);
  auto [rz, rkz] = Matrix::zero(F, 2, 4).rref();
  CHECK(rz.is_zero());
  CHECK(rkz == 0);
}

TEST_CASE("rref rank-1 example, hand elimination") {
  // [[1,2],[2,4]] -> row2 - 2*row1 = 0, rref = [[1,2],[0,0]], rank 1
  auto F = Field::rationals();
  auto [r, rk] = from_rows(F, {{1, 2}, {2, 4}}).rref();
  CHECK(rk == 1);
  CHECK(r == from_rows(F, {{1, 2}, {0, 0}}));
}

TEST_CASE("kernels") {
  auto F = Field::rationals();
  CHECK(Matrix::identity(F, 4).kernel().empty());
  CHECK(Matrix::zero(F, 2, 3).kernel().size() == 3);

  // x + y = 0 over F5: kernel spanned by (-1,1) = (4,1); canonical form (1,4)
  auto F5 = Field::prime(5);
  auto ker = from_rows(F5, {{1, 1}}).kernel();
  auto sub = Subspace::span(F5, 2, ker);
  REQUIRE(sub.dim() == 1);
  CHECK(sub.basis()[0][0] == Rat(1));
  CHECK(sub.basis()[0][1] == Rat(4));
}

TEST_CASE("solve") {
  auto F = Field::rationals();
  auto m = from_rows(F, {{1, 2}, {3, 4}});
  std::vector<Rat> x;
  REQUIRE(m.solve({Rat(5), Rat(11)}, x));
  CHECK(m.apply(x) == std::vector<Rat>{Rat(5), Rat(11)});
  // inconsistent system
  auto sing = from_rows(F, {{1, 2}, {2, 4}});
  CHECK_FALSE(sing.solve({Rat(1), Rat(0)}, x));
}

TEST_CASE("subspace lattice operations") {
  auto F = Field::rationals();
  auto a = Subspace::span(F, 3, {{Rat(1), Rat(0), Rat(1)}, {Rat(0), Rat(1), Rat(0)}});
  CHECK(a.intersection(a) == a);
  CHECK(a.sum(a) == a);

  // complementary coordinate planes of k^4
  auto u = Subspace::span(F, 4, {{Rat(1), Rat(0), Rat(0), Rat(0)}, {Rat(0), Rat(1), Rat(0), Rat(0)}});
  auto w = Subspace::span(F, 4, {{Rat(0), Rat(0), Rat(1), Rat(0)}, {Rat(0), Rat(0), Rat(0), Rat(1)}});
  CHECK(u.intersection(w).dim() == 0);
  CHECK(u.sum(w) == Subspace::full(F, 4));

  // two planes in k^3 meet in the line through (1,1,1)
  auto v = Subspace::span(F, 3, {{Rat(1), Rat(1), Rat(0)}, {Rat(0), Rat(0), Rat(1)}});
  auto line = a.intersection(v);
  CHECK(line.dim() == 1);
  CHECK(line.contains({Rat(1), Rat(1), Rat(1)}));
}

TEST_CASE("subspace errors") {
  auto F = Field::rationals();
  auto a = Subspace::full(F, 2);
  auto b = Subspace::full(F, 3);
  CHECK_THROWS_AS((void)a.sum(b), std::invalid_argument);
}

TEST_CASE("properties: rref idempotent, rank of transpose, dim formula") {
  std::mt19937_64 rng(20240811);
  for (Field F : {Field::rationals(), Field::prime(5), Field::prime(2)}) {
    for (int trial = 0; trial < 25; ++trial) {
      auto m = random_matrix(F, 3 + trial % 4, 2 + trial % 5, rng);
      auto [r1, k1] = m.rref();
      auto [r2, k2] = r1.rref();
      CHECK(r1 == r2);
      CHECK(k1 == k2);
      CHECK(m.rank() == m.transpose().rank());

      std::size_t n = m.cols();
      auto a = Subspace::span(F, n, random_matrix(F, 2, n, rng).kernel());
      auto b = Subspace::span(F, n, random_matrix(F, 2, n, rng).kernel());
      CHECK(a.dim() + b.dim() == a.sum(b).dim() + a.intersection(b).dim());
      CHECK(a.quotient_dim(b) == a.dim() - a.intersection(b).dim());
      CHECK(a.sum(b).contains(a));
      CHECK(a.contains(a.intersection(b)));
    }
  }
}

TEST_CASE("prime field sanity") {
  CHECK_THROWS_AS(Field::prime(6), std::invalid_argument);
  auto F7 = Field::prime(7);
  CHECK(F7.parse("1/2") == Rat(4));  // 2^{-1} = 4 mod 7
  CHECK(F7.add(Rat(5), Rat(4)) == Rat(2));
  CHECK(F7.inv(Rat(3)) == Rat(5));
}
