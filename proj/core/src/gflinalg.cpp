#include "graphcodes/gflinalg.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace graphcodes {
namespace {

constexpr std::size_t kWordBits = 64;

std::size_t words_for(std::size_t bits) {
  return (bits + kWordBits - 1) / kWordBits;
}

// Augmented elimination workspace over GF(2), packed one bit per entry.
class PackedSystem {
 public:
  PackedSystem(const Matrix& a, std::span<const FieldElement> b)
      : nrows_(a.rows()),
        acols_(a.cols()),
        total_(a.cols() + (b.empty() ? 0 : 1)),
        wpr_(words_for(total_)),
        w_(nrows_ * wpr_, 0) {
    for (std::size_t r = 0; r < nrows_; ++r) {
      for (std::size_t c = 0; c < acols_; ++c) {
        if (a.at(r, c).bits) set_bit(r, c);
      }
      if (!b.empty() && b[r].bits) set_bit(r, acols_);
    }
  }

  std::size_t rows() const { return nrows_; }
  std::size_t pivot_cols() const { return acols_; }
  bool is_zero(std::size_t r, std::size_t c) const {
    return (w_[r * wpr_ + c / kWordBits] >> (c % kWordBits) & 1) == 0;
  }
  FieldElement entry(const Field& f, std::size_t r, std::size_t c) const {
    return is_zero(r, c) ? f.zero() : f.one();
  }
  void swap_rows(std::size_t r1, std::size_t r2) {
    std::swap_ranges(w_.begin() + r1 * wpr_, w_.begin() + (r1 + 1) * wpr_,
                     w_.begin() + r2 * wpr_);
  }
  void normalize_row(std::size_t, std::size_t) {}
  // row r += row p; row p is zero left of its pivot, so whole-row xor is safe
  void axpy(std::size_t r, std::size_t p, std::size_t) {
    for (std::size_t k = 0; k < wpr_; ++k) w_[r * wpr_ + k] ^= w_[p * wpr_ + k];
  }

 private:
  void set_bit(std::size_t r, std::size_t c) {
    w_[r * wpr_ + c / kWordBits] |= std::uint64_t{1} << (c % kWordBits);
  }

  std::size_t nrows_, acols_, total_, wpr_;
  std::vector<std::uint64_t> w_;
};

// Same workspace for larger fields, stored densely.
class DenseSystem {
 public:
  DenseSystem(const Matrix& a, std::span<const FieldElement> b)
      : f_(a.field()),
        nrows_(a.rows()),
        acols_(a.cols()),
        total_(a.cols() + (b.empty() ? 0 : 1)),
        e_(nrows_ * total_) {
    for (std::size_t r = 0; r < nrows_; ++r) {
      for (std::size_t c = 0; c < acols_; ++c) e_[r * total_ + c] = a.at(r, c);
      if (!b.empty()) e_[r * total_ + acols_] = b[r];
    }
  }

  std::size_t rows() const { return nrows_; }
  std::size_t pivot_cols() const { return acols_; }
  bool is_zero(std::size_t r, std::size_t c) const {
    return e_[r * total_ + c].bits == 0;
  }
  FieldElement entry(const Field&, std::size_t r, std::size_t c) const {
    return e_[r * total_ + c];
  }
  void swap_rows(std::size_t r1, std::size_t r2) {
    std::swap_ranges(e_.begin() + r1 * total_, e_.begin() + (r1 + 1) * total_,
                     e_.begin() + r2 * total_);
  }
  void normalize_row(std::size_t r, std::size_t c) {
    const FieldElement s = f_.inv(e_[r * total_ + c]);
    for (std::size_t k = c; k < total_; ++k) {
      e_[r * total_ + k] = f_.mul(s, e_[r * total_ + k]);
    }
  }
  void axpy(std::size_t r, std::size_t p, std::size_t c) {
    const FieldElement factor = e_[r * total_ + c];
    for (std::size_t k = c; k < total_; ++k) {
      e_[r * total_ + k] =
          f_.add(e_[r * total_ + k], f_.mul(factor, e_[p * total_ + k]));
    }
  }

 private:
  Field f_;
  std::size_t nrows_, acols_, total_;
  std::vector<FieldElement> e_;
};

// Reduced row echelon form, eliminating above and below each pivot.
// Deterministic: columns scanned left to right, first nonzero row wins.
// Returns the pivot column of each pivot row in order.
template <class System>
std::vector<std::size_t> run_rref(System& s) {
  std::vector<std::size_t> pivots;
  std::size_t prow = 0;
  for (std::size_t c = 0; c < s.pivot_cols() && prow < s.rows(); ++c) {
    std::size_t sel = prow;
    while (sel < s.rows() && s.is_zero(sel, c)) ++sel;
    if (sel == s.rows()) continue;
    s.swap_rows(sel, prow);
    s.normalize_row(prow, c);
    for (std::size_t r = 0; r < s.rows(); ++r) {
      if (r != prow && !s.is_zero(r, c)) s.axpy(r, prow, c);
    }
    pivots.push_back(c);
    ++prow;
  }
  return pivots;
}

bool is_packed_field(const Field& f) { return f.degree() == 1; }

template <class System>
std::vector<FieldElement> solve_with(const Matrix& a,
                                     std::span<const FieldElement> b) {
  // The augmented column must be materialized even for an all-zero b so the
  // inconsistency scan below has something to look at.
  static const FieldElement kZero{0};
  std::vector<FieldElement> rhs(b.begin(), b.end());
  if (rhs.empty()) rhs.assign(a.rows(), kZero);

  System s(a, rhs);
  const std::vector<std::size_t> pivots = run_rref(s);
  for (std::size_t r = pivots.size(); r < a.rows(); ++r) {
    if (!s.is_zero(r, a.cols())) {
      throw SolveError(SolveError::Kind::inconsistent,
                       "linear system has no solution");
    }
  }
  if (pivots.size() < a.cols()) {
    throw SolveError(SolveError::Kind::underdetermined,
                     "linear system is underdetermined");
  }
  std::vector<FieldElement> x(a.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    x[pivots[r]] = s.entry(a.field(), r, a.cols());
  }
  return x;
}

template <class System>
Matrix nullspace_with(const Matrix& m) {
  System s(m, {});
  const std::vector<std::size_t> pivots = run_rref(s);

  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  Matrix basis(m.field(), m.cols() - pivots.size(), m.cols());
  std::size_t out = 0;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    basis.set(out, f, m.field().one());
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      basis.set(out, pivots[r], s.entry(m.field(), r, f));
    }
    ++out;
  }
  return basis;
}

}  // namespace

Matrix::Matrix(const Field& field, std::size_t rows, std::size_t cols)
    : field_(field),
      rows_(rows),
      cols_(cols),
      packed_(is_packed_field(field)) {
  if (packed_) {
    words_per_row_ = words_for(cols);
    words_.assign(rows * words_per_row_, 0);
  } else {
    dense_.assign(rows * cols, field.zero());
  }
}

Matrix Matrix::identity(const Field& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, field.one());
  return m;
}

FieldElement Matrix::at(std::size_t r, std::size_t c) const {
  assert(r < rows_ && c < cols_);
  if (packed_) {
    const std::uint64_t bit =
        words_[r * words_per_row_ + c / kWordBits] >> (c % kWordBits) & 1;
    return {bit};
  }
  return dense_[r * cols_ + c];
}

void Matrix::set(std::size_t r, std::size_t c, FieldElement v) {
  assert(r < rows_ && c < cols_);
  assert(field_.contains(v));
  if (packed_) {
    std::uint64_t& word = words_[r * words_per_row_ + c / kWordBits];
    const std::uint64_t mask = std::uint64_t{1} << (c % kWordBits);
    word = (word & ~mask) | (v.bits ? mask : 0);
  } else {
    dense_[r * cols_ + c] = v;
  }
}

Matrix Matrix::transposed() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t.set(c, r, at(r, c));
  }
  return t;
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (a.field_ != b.field_ || a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    return false;
  }
  if (a.packed_) return a.words_ == b.words_;
  return a.dense_ == b.dense_;
}

std::size_t rank(const Matrix& m) {
  if (m.field().degree() == 1) {
    PackedSystem s(m, {});
    return run_rref(s).size();
  }
  DenseSystem s(m, {});
  return run_rref(s).size();
}

std::size_t nullspace_dim(const Matrix& m) { return m.cols() - rank(m); }

Matrix nullspace_basis(const Matrix& m) {
  return m.field().degree() == 1 ? nullspace_with<PackedSystem>(m)
                                 : nullspace_with<DenseSystem>(m);
}

std::vector<FieldElement> solve_unique(const Matrix& a,
                                       std::span<const FieldElement> b) {
  if (b.size() != a.rows()) {
    throw std::invalid_argument("solve_unique: rhs length mismatch");
  }
  return a.field().degree() == 1 ? solve_with<PackedSystem>(a, b)
                                 : solve_with<DenseSystem>(a, b);
}

std::vector<FieldElement> solve_erasures(
    const Matrix& constraints,
    std::span<const std::optional<FieldElement>> cells) {
  if (cells.size() != constraints.cols()) {
    throw std::invalid_argument("solve_erasures: cell count mismatch");
  }
  const Field& f = constraints.field();

  std::vector<std::size_t> unknown;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    if (!cells[c]) unknown.push_back(c);
  }

  // Move the known part to the right-hand side: A restricted to unknown
  // columns, b = sum of known contributions (self-inverse under xor).
  Matrix a(f, constraints.rows(), unknown.size());
  std::vector<FieldElement> b(constraints.rows(), f.zero());
  for (std::size_t r = 0; r < constraints.rows(); ++r) {
    for (std::size_t u = 0; u < unknown.size(); ++u) {
      a.set(r, u, constraints.at(r, unknown[u]));
    }
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (cells[c]) b[r] = f.add(b[r], f.mul(constraints.at(r, c), *cells[c]));
    }
  }

  const std::vector<FieldElement> x = solve_unique(a, b);
  std::vector<FieldElement> full(cells.size());
  for (std::size_t c = 0; c < cells.size(); ++c) {
    if (cells[c]) full[c] = *cells[c];
  }
  for (std::size_t u = 0; u < unknown.size(); ++u) full[unknown[u]] = x[u];
  return full;
}

std::vector<FieldElement> mat_vec(const Matrix& m,
                                  std::span<const FieldElement> x) {
  if (x.size() != m.cols()) {
    throw std::invalid_argument("mat_vec: dimension mismatch");
  }
  const Field& f = m.field();
  std::vector<FieldElement> y(m.rows(), f.zero());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      y[r] = f.add(y[r], f.mul(m.at(r, c), x[c]));
    }
  }
  return y;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows() || !(a.field() == b.field())) {
    throw std::invalid_argument("mat_mul: dimension mismatch");
  }
  const Field& f = a.field();
  Matrix out(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const FieldElement aik = a.at(i, k);
      if (aik.bits == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out.set(i, j, f.add(out.at(i, j), f.mul(aik, b.at(k, j))));
      }
    }
  }
  return out;
}

}  // namespace graphcodes
