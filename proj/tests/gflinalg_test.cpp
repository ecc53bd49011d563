#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <optional>
#include <vector>

#include "graphcodes/gflinalg.hpp"
#include "graphcodes/rng.hpp"

using namespace graphcodes;

namespace {

Matrix random_matrix(const Field& f, std::size_t rows, std::size_t cols,
                     Rng& rng) {
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      m.set(r, c, {rng.below(f.order())});
    }
  }
  return m;
}

Matrix full_column_rank_matrix(const Field& f, std::size_t rows,
                               std::size_t cols, Rng& rng) {
  for (;;) {
    Matrix m = random_matrix(f, rows, cols, rng);
    if (rank(m) == cols) return m;
  }
}

std::vector<FieldElement> random_vector(const Field& f, std::size_t n,
                                        Rng& rng) {
  std::vector<FieldElement> v(n);
  for (auto& e : v) e = {rng.below(f.order())};
  return v;
}

}  // namespace

TEST_CASE("rank of stock matrices") {
  const Field f2(1);
  CHECK(rank(Matrix::identity(f2, 3)) == 3);
  CHECK(rank(Matrix(f2, 4, 5)) == 0);

  Matrix equal_rows(f2, 2, 2);
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t c = 0; c < 2; ++c) equal_rows.set(r, c, f2.one());
  }
  CHECK(rank(equal_rows) == 1);

  const Field f8(3);
  CHECK(rank(Matrix::identity(f8, 6)) == 6);
  CHECK(rank(Matrix(f8, 2, 3)) == 0);
}

TEST_CASE("rank is invariant under transposition") {
  Rng rng(7);
  for (unsigned deg : {1u, 3u, 8u}) {
    const Field f(deg);
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t r = 1 + rng.below(8), c = 1 + rng.below(8);
      const Matrix m = random_matrix(f, r, c, rng);
      CHECK(rank(m) == rank(m.transposed()));
    }
  }
}

TEST_CASE("nullspace dimension of stock matrices") {
  const Field f2(1);
  CHECK(nullspace_dim(Matrix(f2, 5, 5)) == 5);
  CHECK(nullspace_dim(Matrix::identity(f2, 5)) == 0);
}

TEST_CASE("nullspace basis spans the kernel") {
  Rng rng(11);
  for (unsigned deg : {1u, 4u}) {
    const Field f(deg);
    for (int trial = 0; trial < 30; ++trial) {
      const std::size_t r = 1 + rng.below(7), c = 1 + rng.below(7);
      const Matrix m = random_matrix(f, r, c, rng);
      const Matrix basis = nullspace_basis(m);
      CHECK(basis.rows() == nullspace_dim(m));
      CHECK(rank(basis) == basis.rows());  // independent rows
      for (std::size_t i = 0; i < basis.rows(); ++i) {
        std::vector<FieldElement> v(c);
        for (std::size_t j = 0; j < c; ++j) v[j] = basis.at(i, j);
        for (FieldElement y : mat_vec(m, v)) CHECK(y == f.zero());
      }
    }
  }
}

TEST_CASE("solve_unique recovers planted solutions") {
  Rng rng(23);
  for (unsigned deg : {1u, 3u, 8u}) {
    const Field f(deg);
    for (int trial = 0; trial < 30; ++trial) {
      const std::size_t cols = 1 + rng.below(6);
      const std::size_t rows = cols + rng.below(4);
      const Matrix a = full_column_rank_matrix(f, rows, cols, rng);
      const std::vector<FieldElement> x = random_vector(f, cols, rng);
      CHECK(solve_unique(a, mat_vec(a, x)) == x);
    }
  }
}

TEST_CASE("solve_unique distinguishes its two failure modes") {
  const Field f(1);

  Matrix dependent(f, 2, 2);  // two equal columns
  dependent.set(0, 0, f.one());
  dependent.set(0, 1, f.one());
  std::vector<FieldElement> b0 = {f.one(), f.zero()};
  CHECK_THROWS_WITH_AS(solve_unique(dependent, b0),
                       "linear system is underdetermined", SolveError);

  Matrix tall(f, 2, 1);  // full column rank, but b outside the column space
  tall.set(0, 0, f.one());
  std::vector<FieldElement> b1 = {f.zero(), f.one()};
  CHECK_THROWS_WITH_AS(solve_unique(tall, b1), "linear system has no solution",
                       SolveError);

  try {
    solve_unique(tall, b1);
  } catch (const SolveError& e) {
    CHECK(e.kind() == SolveError::Kind::inconsistent);
  }
  CHECK_THROWS_AS(solve_unique(tall, std::vector<FieldElement>{}),
                  std::invalid_argument);
}

TEST_CASE("solve_erasures completes systematic parities") {
  Rng rng(31);
  for (unsigned deg : {1u, 5u}) {
    const Field f(deg);
    for (int trial = 0; trial < 25; ++trial) {
      const std::size_t k = 1 + rng.below(5), r = 1 + rng.below(4);
      // Constraints [P | I]: the last r cells are parities of the first k.
      Matrix c(f, r, k + r);
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
          c.set(i, j, {rng.below(f.order())});
        }
        c.set(i, k + i, f.one());
      }
      Matrix basis = nullspace_basis(c);
      REQUIRE(basis.rows() == k);
      std::vector<FieldElement> word(k + r, f.zero());
      for (std::size_t i = 0; i < k; ++i) {
        const FieldElement coeff{rng.below(f.order())};
        for (std::size_t j = 0; j < k + r; ++j) {
          word[j] = f.add(word[j], f.mul(coeff, basis.at(i, j)));
        }
      }

      std::vector<std::optional<FieldElement>> cells(word.begin(), word.end());
      for (std::size_t j = k; j < k + r; ++j) cells[j].reset();
      CHECK(solve_erasures(c, cells) == word);

      // Erasing any single cell is also recoverable when its column is live.
      for (std::size_t j = 0; j < k + r; ++j) {
        bool live = false;
        for (std::size_t i = 0; i < r; ++i) live |= c.at(i, j).bits != 0;
        if (!live) continue;
        std::vector<std::optional<FieldElement>> one(word.begin(), word.end());
        one[j].reset();
        CHECK(solve_erasures(c, one) == word);
      }
    }
  }
}

TEST_CASE("solve_erasures flags violated and ambiguous patterns") {
  const Field f(1);
  Matrix c(f, 1, 3);  // single parity: x0 + x1 + x2 = 0
  for (std::size_t j = 0; j < 3; ++j) c.set(0, j, f.one());

  std::vector<std::optional<FieldElement>> bad = {f.one(), f.zero(), f.zero()};
  CHECK_THROWS_AS(solve_erasures(c, bad), SolveError);

  std::vector<std::optional<FieldElement>> two = {f.one(), std::nullopt,
                                                  std::nullopt};
  CHECK_THROWS_AS(solve_erasures(c, two), SolveError);

  std::vector<std::optional<FieldElement>> ok = {f.one(), f.one(),
                                                 std::nullopt};
  CHECK(solve_erasures(c, ok)[2] == f.zero());
}

TEST_CASE("matrix product basics") {
  Rng rng(41);
  const Field f(3);
  const Matrix a = random_matrix(f, 4, 5, rng);
  CHECK(mat_mul(a, Matrix::identity(f, 5)) == a);
  CHECK(mat_mul(Matrix::identity(f, 4), a) == a);

  const Matrix b = random_matrix(f, 5, 3, rng);
  const std::vector<FieldElement> x = random_vector(f, 3, rng);
  CHECK(mat_vec(mat_mul(a, b), x) == mat_vec(a, mat_vec(b, x)));
}
