#include "graphcodes/mdsrs.hpp"

#include <cassert>
#include <stdexcept>

namespace graphcodes {
namespace {

unsigned field_degree_for_length(int n) {
  // smallest m with 2^m + 1 >= n, at least 1
  unsigned m = 1;
  while ((std::uint64_t{1} << m) + 1 < static_cast<std::uint64_t>(n)) ++m;
  return m;
}

// Row of the interpolation system for one evaluation point: the monomial
// basis 1, x, .., x^(k-1) evaluated there; at infinity only the top
// coefficient survives.
std::vector<FieldElement> monomial_row(const Field& f, EvalPoint p, int k) {
  std::vector<FieldElement> row(k, f.zero());
  if (p.at_infinity) {
    row[k - 1] = f.one();
    return row;
  }
  FieldElement power = f.one();
  for (int t = 0; t < k; ++t) {
    row[t] = power;
    power = f.mul(power, p.x);
  }
  return row;
}

}  // namespace

MdsCode MdsCode::make(int length, int erasure_budget) {
  if (erasure_budget < 1 || erasure_budget >= length) {
    throw std::invalid_argument("erasure budget must be in [1, length)");
  }
  const Field field(field_degree_for_length(length));
  return MdsCode(field, length, length - erasure_budget);
}

MdsCode::MdsCode(const Field& field, int n, int k)
    : field_(field),
      n_(n),
      k_(k),
      generator_(field, k, n),
      parity_check_(field, 0, 0) {
  points_.reserve(n);
  points_.push_back({false, field_.zero()});
  const FieldElement alpha = find_generator(field_);
  FieldElement power = alpha;
  for (int i = 1; i < n && i < static_cast<int>(field_.order()); ++i) {
    points_.push_back({false, power});
    power = field_.mul(power, alpha);
  }
  if (static_cast<int>(points_.size()) < n) points_.push_back({true, {}});
  assert(static_cast<int>(points_.size()) == n);

  // Systematic generator row i: the Lagrange basis polynomial through the
  // first k points that is 1 at point i, evaluated everywhere.
  for (int i = 0; i < k_; ++i) {
    // denom = prod_{j<k, j!=i} (x_i - x_j)
    FieldElement denom = field_.one();
    for (int j = 0; j < k_; ++j) {
      if (j != i) {
        denom = field_.mul(denom, field_.add(points_[i].x, points_[j].x));
      }
    }
    const FieldElement scale = field_.inv(denom);

    // numerator coefficients of prod_{j<k, j!=i} (x - x_j)
    std::vector<FieldElement> coeff(k_, field_.zero());
    coeff[0] = field_.one();
    int deg = 0;
    for (int j = 0; j < k_; ++j) {
      if (j == i) continue;
      for (int t = deg + 1; t > 0; --t) {
        coeff[t] = field_.add(field_.mul(coeff[t], points_[j].x),
                              t > 0 ? coeff[t - 1] : field_.zero());
      }
      coeff[0] = field_.mul(coeff[0], points_[j].x);
      ++deg;
    }

    for (int c = 0; c < n_; ++c) {
      if (points_[c].at_infinity) {
        generator_.set(i, c, field_.mul(scale, coeff[k_ - 1]));
        continue;
      }
      // Horner
      FieldElement v = field_.zero();
      for (int t = k_ - 1; t >= 0; --t) {
        v = field_.add(field_.mul(v, points_[c].x), coeff[t]);
      }
      generator_.set(i, c, field_.mul(scale, v));
    }
  }
  parity_check_ = nullspace_basis(generator_);
  assert(parity_check_.rows() == static_cast<std::size_t>(n_ - k_));
}

std::vector<FieldElement> MdsCode::encode(
    std::span<const FieldElement> info) const {
  if (info.size() != static_cast<std::size_t>(k_)) {
    throw std::invalid_argument("info length must equal the code dimension");
  }
  std::vector<FieldElement> word(n_, field_.zero());
  for (int i = 0; i < k_; ++i) {
    if (info[i].bits == 0) continue;
    for (int c = 0; c < n_; ++c) {
      word[c] = field_.add(word[c], field_.mul(info[i], generator_.at(i, c)));
    }
  }
  return word;
}

bool MdsCode::check(std::span<const FieldElement> word) const {
  if (word.size() != static_cast<std::size_t>(n_)) {
    throw std::invalid_argument("word length must equal the code length");
  }
  for (FieldElement s : mat_vec(parity_check_, word)) {
    if (s.bits != 0) return false;
  }
  return true;
}

std::vector<FieldElement> MdsCode::decode(
    std::span<const std::optional<FieldElement>> word) const {
  if (word.size() != static_cast<std::size_t>(n_)) {
    throw std::invalid_argument("word length must equal the code length");
  }
  std::vector<int> known;
  known.reserve(n_);
  for (int c = 0; c < n_; ++c) {
    if (word[c]) known.push_back(c);
  }
  if (static_cast<int>(known.size()) < k_) {
    throw DecodeError(DecodeError::Kind::beyond_budget,
                      "too many erasures for the code");
  }

  // Interpolate the message polynomial from every known position at once;
  // elimination simultaneously checks that they all agree on one codeword.
  Matrix a(field_, known.size(), k_);
  std::vector<FieldElement> b;
  b.reserve(known.size());
  for (std::size_t r = 0; r < known.size(); ++r) {
    const auto row = monomial_row(field_, points_[known[r]], k_);
    for (int t = 0; t < k_; ++t) a.set(r, t, row[t]);
    b.push_back(*word[known[r]]);
  }
  std::vector<FieldElement> coeff;
  try {
    coeff = solve_unique(a, b);
  } catch (const SolveError& e) {
    if (e.kind() == SolveError::Kind::inconsistent) {
      throw DecodeError(DecodeError::Kind::inconsistent,
                        "known cells fit no codeword");
    }
    throw;  // underdetermined cannot happen: any k points interpolate
  }

  std::vector<FieldElement> out(n_);
  for (int c = 0; c < n_; ++c) {
    if (word[c]) {
      out[c] = *word[c];
      continue;
    }
    const auto row = monomial_row(field_, points_[c], k_);
    FieldElement v = field_.zero();
    for (int t = 0; t < k_; ++t) {
      v = field_.add(v, field_.mul(row[t], coeff[t]));
    }
    out[c] = v;
  }
  return out;
}

}  // namespace graphcodes
