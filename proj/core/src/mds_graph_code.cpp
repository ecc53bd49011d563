#include "graphcodes/mds_graph_code.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace graphcodes {
namespace {

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

MdsGraphCode::MdsGraphCode(int n, int rho)
    : n_(n), mds_(MdsCode::make(n, rho)) {}

DirectedGraph MdsGraphCode::encode(const Matrix& info) const {
  const int k = info_side();
  if (info.rows() != static_cast<std::size_t>(k) ||
      info.cols() != static_cast<std::size_t>(k) ||
      !(info.field() == field())) {
    throw std::invalid_argument("info block has the wrong shape or field");
  }

  DirectedGraph g(field(), n_);
  // first n-rho columns: systematic encode downward
  std::vector<FieldElement> symbols(k);
  for (int m = 0; m < k; ++m) {
    for (int i = 0; i < k; ++i) symbols[i] = info.at(i, m);
    const auto column = mds_.encode(symbols);
    for (int i = 0; i < n_; ++i) g.set_label(i, m, column[i]);
  }
  // then every row: systematic encode rightward
  for (int i = 0; i < n_; ++i) {
    for (int m = 0; m < k; ++m) symbols[m] = g.label(i, m);
    const auto row = mds_.encode(symbols);
    for (int j = 0; j < n_; ++j) g.set_label(i, j, row[j]);
  }
  return g;
}

bool MdsGraphCode::check(const DirectedGraph& g) const {
  if (g.node_count() != n_ || !(g.field() == field())) return false;
  std::vector<FieldElement> word(n_);
  for (int m = 0; m < info_side(); ++m) {
    for (int i = 0; i < n_; ++i) word[i] = g.label(i, m);
    if (!mds_.check(word)) return false;
  }
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) word[j] = g.label(i, j);
    if (!mds_.check(word)) return false;
  }
  return true;
}

DirectedGraph MdsGraphCode::decode(const ErasedGraph& eg,
                                   std::span<const int> failed) const {
  if (eg.node_count() != n_ || !(eg.field() == field())) {
    throw std::invalid_argument("erased graph has the wrong shape or field");
  }
  const std::vector<int> j = checked_failed_set(n_, erasure_budget(), failed);

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

  ErasedGraph work = eg;
  const auto decode_row = [&](int i) {
    std::vector<std::optional<FieldElement>> cells(n_);
    for (int c = 0; c < n_; ++c) cells[c] = work.cell(i, c);
    const auto word = mds_.decode(cells);
    for (int c = 0; c < n_; ++c) work.set_cell(i, c, word[c]);
  };

  // surviving rows have at most rho erasures each
  for (int i = 0; i < n_; ++i) {
    if (!is_failed[i]) decode_row(i);
  }
  // the systematic columns are now only missing the failed rows
  for (int m = 0; m < info_side(); ++m) {
    std::vector<std::optional<FieldElement>> cells(n_);
    for (int r = 0; r < n_; ++r) cells[r] = work.cell(r, m);
    const auto word = mds_.decode(cells);
    for (int r = 0; r < n_; ++r) work.set_cell(r, m, word[r]);
  }
  // failed rows now know their first n-rho cells
  for (int t : j) decode_row(t);

  return work.reveal();
}

Matrix MdsGraphCode::constraint_matrix() const {
  const Matrix& h = mds_.parity_check();
  const int rho = erasure_budget();
  const auto cell = [&](int i, int jj) { return i * n_ + jj; };

  Matrix c(field(), redundancy(), static_cast<std::size_t>(n_) * n_);
  std::size_t row = 0;
  for (int m = 0; m < info_side(); ++m) {
    for (int r = 0; r < rho; ++r, ++row) {
      for (int i = 0; i < n_; ++i) c.set(row, cell(i, m), h.at(r, i));
    }
  }
  for (int i = 0; i < n_; ++i) {
    for (int r = 0; r < rho; ++r, ++row) {
      for (int jj = 0; jj < n_; ++jj) c.set(row, cell(i, jj), h.at(r, jj));
    }
  }
  return c;
}

}  // namespace graphcodes
