#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace graphcodes {

// Element of a binary extension field GF(2^m), 1 <= m <= 32.  The bits of
// `bits` are the coefficients of the representing polynomial, LSB = constant
// term.  An element is meaningful only together with the Field it came from;
// elements of different fields must not be mixed.
struct FieldElement {
  std::uint64_t bits = 0;

  friend constexpr bool operator==(FieldElement, FieldElement) = default;
};

// Arithmetic in GF(2)[x] / (p(x)) for a fixed irreducible p of degree m.
// Every degree uses one canonical modulus (the lowest-weight irreducible,
// ties broken by smallest value), so two Field objects of equal degree are
// interchangeable.
class Field {
 public:
  // Throws std::invalid_argument unless 1 <= degree <= 32.
  explicit Field(unsigned degree);

  unsigned degree() const { return degree_; }
  // Modulus polynomial encoded as a bit vector, degree+1 bits set at most.
  std::uint64_t modulus() const { return modulus_; }
  std::uint64_t order() const { return std::uint64_t{1} << degree_; }

  FieldElement zero() const { return {0}; }
  FieldElement one() const { return {1}; }
  // Validated construction; throws std::invalid_argument if bits >= order().
  FieldElement element(std::uint64_t bits) const;
  bool contains(FieldElement a) const { return a.bits < order(); }

  FieldElement add(FieldElement a, FieldElement b) const {
    return {a.bits ^ b.bits};
  }
  FieldElement sub(FieldElement a, FieldElement b) const { return add(a, b); }
  FieldElement mul(FieldElement a, FieldElement b) const;
  // Multiplicative inverse via extended Euclid; throws std::domain_error
  // on the zero element.
  FieldElement inv(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const {
    return mul(a, inv(b));
  }
  // Frobenius power: a^(2^k).  Repeated squaring, k reduced mod degree().
  FieldElement frob(FieldElement a, unsigned k) const;
  FieldElement pow(FieldElement a, std::uint64_t e) const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  unsigned degree_;
  std::uint64_t modulus_;
};

// Smallest element (by bit pattern) generating the multiplicative group.
FieldElement find_generator(const Field& f);

// Lowercase hex without leading zeros: {0} -> "0", {0x1b} -> "1b".
std::string to_hex(FieldElement a);
// Inverse of to_hex.  Throws std::invalid_argument on malformed input or a
// value outside the field.
FieldElement parse_hex(const Field& f, std::string_view text);

}  // namespace graphcodes
