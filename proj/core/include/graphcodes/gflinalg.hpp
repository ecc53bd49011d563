#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "graphcodes/errors.hpp"
#include "graphcodes/gf2m.hpp"

namespace graphcodes {

// Row-major matrix over a GF(2^m).  Degree-1 fields are stored as packed
// machine-word bit rows, larger fields densely; the interface is the same.
class Matrix {
 public:
  Matrix(const Field& field, std::size_t rows, std::size_t cols);
  static Matrix identity(const Field& field, std::size_t n);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  FieldElement at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, FieldElement v);

  Matrix transposed() const;

  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  friend struct MatrixInternals;

  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  bool packed_;                       // degree-1 fast path
  std::size_t words_per_row_ = 0;
  std::vector<std::uint64_t> words_;  // packed storage
  std::vector<FieldElement> dense_;   // dense storage
};

// Rank via Gaussian elimination.  Pivot selection is deterministic: columns
// left to right, first row with a nonzero entry.
std::size_t rank(const Matrix& m);

// cols - rank: dimension of the right kernel {x : M x = 0}.
std::size_t nullspace_dim(const Matrix& m);

// Basis of the right kernel, one vector per row; rows() == nullspace_dim(m).
Matrix nullspace_basis(const Matrix& m);

// The unique x with A x = b.  Throws SolveError(inconsistent) when no x
// exists, then SolveError(underdetermined) when the solution is not unique.
std::vector<FieldElement> solve_unique(const Matrix& a,
                                       std::span<const FieldElement> b);

// Completes a partially erased vector subject to `constraints * cells == 0`.
// Known entries are kept verbatim; unknown ones are solved for.  Throws
// SolveError as solve_unique does (a fully known but violated system is
// inconsistent).
std::vector<FieldElement> solve_erasures(
    const Matrix& constraints,
    std::span<const std::optional<FieldElement>> cells);

std::vector<FieldElement> mat_vec(const Matrix& m,
                                  std::span<const FieldElement> x);
Matrix mat_mul(const Matrix& a, const Matrix& b);

}  // namespace graphcodes
