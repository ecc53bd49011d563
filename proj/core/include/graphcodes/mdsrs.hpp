#pragma once

#include <optional>
#include <span>
#include <vector>

#include "graphcodes/errors.hpp"
#include "graphcodes/gf2m.hpp"
#include "graphcodes/gflinalg.hpp"

namespace graphcodes {

// Reed-Solomon evaluation point: an element of the field, or the formal
// point at infinity where a polynomial "evaluates" to its degree-(k-1)
// coefficient.
struct EvalPoint {
  bool at_infinity = false;
  FieldElement x{};
};

// [n, k, n-k+1] MDS code over GF(2^m), realized as (singly extended)
// Reed-Solomon.  The field is the smallest binary extension with
// 2^m + 1 >= n; evaluation points are 0, followed by ascending powers of
// the smallest field generator, plus the point at infinity when length
// 2^m + 1 is required.  Encoding is systematic in the first k positions.
class MdsCode {
 public:
  // length n, erasure budget rho; k = n - rho.  Throws
  // std::invalid_argument unless 1 <= rho < n.
  static MdsCode make(int length, int erasure_budget);

  int length() const { return n_; }
  int dimension() const { return k_; }
  int erasure_budget() const { return n_ - k_; }
  const Field& field() const { return field_; }
  std::span<const EvalPoint> eval_points() const { return points_; }

  // Systematic generator, k x n, identity in the first k columns.
  const Matrix& generator() const { return generator_; }
  // Dual basis, (n-k) x n; a word w is a codeword iff parity_check * w = 0.
  const Matrix& parity_check() const { return parity_check_; }

  std::vector<FieldElement> encode(std::span<const FieldElement> info) const;
  bool check(std::span<const FieldElement> word) const;

  // Fills Unknown cells with the unique agreeing codeword.  Throws
  // DecodeError(beyond_budget) past n-k erasures and
  // DecodeError(inconsistent) when the known cells fit no codeword.
  std::vector<FieldElement> decode(
      std::span<const std::optional<FieldElement>> word) const;

 private:
  MdsCode(const Field& field, int n, int k);

  Field field_;
  int n_;
  int k_;
  std::vector<EvalPoint> points_;
  Matrix generator_;
  Matrix parity_check_;
};

}  // namespace graphcodes
