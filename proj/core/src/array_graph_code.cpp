#include "graphcodes/array_graph_code.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace graphcodes {
namespace {

// Maximum bipartite matching (rows to columns of the nonzero support) by
// augmenting paths; the matching size equals the minimum vertex cover.
class Matching {
 public:
  explicit Matching(const Matrix& m)
      : rows_(m.rows()), cols_(m.cols()), adj_(rows_) {
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) {
        if (m.at(r, c).bits != 0) adj_[r].push_back(c);
      }
    }
  }

  int size() {
    match_of_col_.assign(cols_, npos);
    int total = 0;
    for (std::size_t r = 0; r < rows_; ++r) {
      visited_.assign(cols_, false);
      if (augment(r)) ++total;
    }
    return total;
  }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  bool augment(std::size_t r) {
    for (std::size_t c : adj_[r]) {
      if (visited_[c]) continue;
      visited_[c] = true;
      if (match_of_col_[c] == npos || augment(match_of_col_[c])) {
        match_of_col_[c] = r;
        return true;
      }
    }
    return false;
  }

  std::size_t rows_, cols_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::size_t> match_of_col_;
  std::vector<bool> visited_;
};

std::vector<int> checked_failed_set(int n, int budget,
                                    std::span<const int> failed) {
  std::vector<int> j(failed.begin(), failed.end());
  std::sort(j.begin(), j.end());
  j.erase(std::unique(j.begin(), j.end()), j.end());
  for (int t : j) {
    if (t < 0 || t >= n) throw std::out_of_range("failed node out of range");
  }
  if (static_cast<int>(j.size()) > budget) {
    throw DecodeError(DecodeError::Kind::beyond_budget,
                      "more failed nodes than the code corrects");
  }
  return j;
}

}  // namespace

int cover_weight(const Matrix& m) { return Matching(m).size(); }

int cover_weight_brute(const Matrix& m) {
  if (m.rows() > 20) {
    throw std::invalid_argument("cover_weight_brute: matrix too large");
  }
  int best = static_cast<int>(m.rows() + m.cols());
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << m.rows()); ++s) {
    // columns must cover whatever the row set s does not
    int size = __builtin_popcountll(s);
    for (std::size_t c = 0; c < m.cols(); ++c) {
      for (std::size_t r = 0; r < m.rows(); ++r) {
        if (m.at(r, c).bits != 0 && (s >> r & 1) == 0) {
          ++size;
          break;
        }
      }
    }
    best = std::min(best, size);
  }
  return best;
}

ArrayGraphCode::ArrayGraphCode(int n, int rho)
    : n_(n), rho_(rho), parity_check_(Field(1), 0, 0) {
  if (rho < 1 || 2 * rho >= n || n > 32) {
    throw std::invalid_argument(
        "array code needs 1 <= rho and 2 rho < n <= 32");
  }
  const Field big(static_cast<unsigned>(n));
  const Field bin(1);
  const int r = 2 * rho;

  // Binary expansion of the q-power parity checks: equation (t, b) says bit
  // b of sum_j (x^j)^(2^t) * column_j vanishes, with column j read as the
  // field element sum_i gamma_{i,j} x^i.
  Matrix h(bin, static_cast<std::size_t>(r) * n,
           static_cast<std::size_t>(n) * n);
  for (int t = 0; t < r; ++t) {
    for (int j = 0; j < n; ++j) {
      const FieldElement hj = big.frob(big.element(std::uint64_t{1} << j),
                                       static_cast<unsigned>(t));
      for (int i = 0; i < n; ++i) {
        const FieldElement contrib =
            big.mul(hj, big.element(std::uint64_t{1} << i));
        for (int b = 0; b < n; ++b) {
          if (contrib.bits >> b & 1) {
            h.set(static_cast<std::size_t>(t) * n + b,
                  static_cast<std::size_t>(i) * n + j, bin.one());
          }
        }
      }
    }
  }
  parity_check_ = std::move(h);

  // The bottom 2 rho rows must be completable from any top rows: the
  // parity submatrix on those cells has to be invertible.
  Matrix bottom(bin, parity_check_.rows(), redundancy());
  std::size_t col = 0;
  for (int i = n_ - r; i < n_; ++i) {
    for (int j = 0; j < n_; ++j, ++col) {
      for (std::size_t row = 0; row < parity_check_.rows(); ++row) {
        bottom.set(row, col,
                   parity_check_.at(row, static_cast<std::size_t>(i) * n_ + j));
      }
    }
  }
  if (rank(bottom) != redundancy()) {
    throw std::logic_error("parity rows do not complete systematically");
  }
}

DirectedGraph ArrayGraphCode::encode(const Matrix& info) const {
  const int top = n_ - 2 * rho_;
  if (info.rows() != static_cast<std::size_t>(top) ||
      info.cols() != static_cast<std::size_t>(n_) ||
      info.field().degree() != 1) {
    throw std::invalid_argument("info block has the wrong shape or field");
  }
  ErasedGraph eg(field(), n_);
  for (int i = 0; i < top; ++i) {
    for (int j = 0; j < n_; ++j) eg.set_cell(i, j, info.at(i, j));
  }
  return complete(eg);
}

bool ArrayGraphCode::check(const DirectedGraph& g) const {
  if (g.node_count() != n_ || g.field().degree() != 1) return false;
  std::vector<FieldElement> flat;
  flat.reserve(static_cast<std::size_t>(n_) * n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) flat.push_back(g.label(i, j));
  }
  for (FieldElement s : mat_vec(parity_check_, flat)) {
    if (s.bits != 0) return false;
  }
  return true;
}

DirectedGraph ArrayGraphCode::decode(const ErasedGraph& eg,
                                     std::span<const int> failed) const {
  if (eg.node_count() != n_ || eg.field().degree() != 1) {
    throw std::invalid_argument("erased graph has the wrong shape or field");
  }
  const std::vector<int> j = checked_failed_set(n_, rho_, failed);
  std::vector<bool> is_failed(n_, false);
  for (int t : j) is_failed[t] = true;
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b) {
      if (!eg.cell(a, b) && !is_failed[a] && !is_failed[b]) {
        throw std::invalid_argument(
            "unknown cell outside the declared failed nodes");
      }
    }
  }
  return complete(eg);
}

DirectedGraph ArrayGraphCode::complete(const ErasedGraph& eg) const {
  if (eg.node_count() != n_ || eg.field().degree() != 1) {
    throw std::invalid_argument("erased graph has the wrong shape or field");
  }
  std::vector<std::optional<FieldElement>> cells;
  cells.reserve(static_cast<std::size_t>(n_) * n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) cells.push_back(eg.cell(i, j));
  }
  std::vector<FieldElement> solved;
  try {
    solved = solve_erasures(parity_check_, cells);
  } catch (const SolveError& e) {
    if (e.kind() == SolveError::Kind::underdetermined) {
      throw DecodeError(DecodeError::Kind::beyond_budget,
                        "erasure pattern is not uniquely completable");
    }
    throw DecodeError(DecodeError::Kind::inconsistent,
                      "known cells fit no codeword");
  }
  DirectedGraph g(field(), n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      g.set_label(i, j, solved[static_cast<std::size_t>(i) * n_ + j]);
    }
  }
  return g;
}

}  // namespace graphcodes
