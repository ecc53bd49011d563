#include "graphcodes/gf2m.hpp"

#include <array>
#include <bit>
#include <cassert>
#include <cstdio>
#include <stdexcept>
#include <vector>

namespace graphcodes {
namespace {

// Canonical modulus per degree: the irreducible polynomial with fewest
// nonzero terms, smallest encoding among ties.  Index 0 unused.
constexpr std::array<std::uint64_t, 33> kModulus = {
    0,          0x3,        0x7,       0xb,        0x13,       0x25,
    0x43,       0x83,       0x11b,     0x203,      0x409,      0x805,
    0x1009,     0x201b,     0x4021,    0x8003,     0x1002b,    0x20009,
    0x40009,    0x80027,    0x100009,  0x200005,   0x400003,   0x800021,
    0x100001b,  0x2000009,  0x400001b, 0x8000027,  0x10000003, 0x20000005,
    0x40000003, 0x80000009, 0x10000008d,
};

int poly_deg(std::uint64_t p) {
  return p == 0 ? -1 : 63 - std::countl_zero(p);
}

// Carry-less product in GF(2)[x]; callers keep degrees below 32.
std::uint64_t clmul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t acc = 0;
  while (b != 0) {
    acc ^= a << std::countr_zero(b);
    b &= b - 1;
  }
  return acc;
}

// Remainder of a modulo p in GF(2)[x].
std::uint64_t poly_mod(std::uint64_t a, std::uint64_t p) {
  const int dp = poly_deg(p);
  for (int d = poly_deg(a); d >= dp; d = poly_deg(a)) {
    a ^= p << (d - dp);
  }
  return a;
}

std::uint64_t poly_div(std::uint64_t a, std::uint64_t p) {
  const int dp = poly_deg(p);
  std::uint64_t q = 0;
  for (int d = poly_deg(a); d >= dp; d = poly_deg(a)) {
    q |= std::uint64_t{1} << (d - dp);
    a ^= p << (d - dp);
  }
  return q;
}

}  // namespace

Field::Field(unsigned degree) : degree_(degree) {
  if (degree < 1 || degree > 32) {
    throw std::invalid_argument("field degree must be in [1, 32]");
  }
  modulus_ = kModulus[degree];
}

FieldElement Field::element(std::uint64_t bits) const {
  if (bits >= order()) {
    throw std::invalid_argument("element bits exceed field order");
  }
  return {bits};
}

FieldElement Field::mul(FieldElement a, FieldElement b) const {
  assert(contains(a) && contains(b));
  return {poly_mod(clmul(a.bits, b.bits), modulus_)};
}

FieldElement Field::inv(FieldElement a) const {
  assert(contains(a));
  if (a.bits == 0) {
    throw std::domain_error("zero has no multiplicative inverse");
  }
  // Extended Euclid on (modulus, a); the Bezout coefficient of a is the
  // inverse.  All intermediate degrees stay below 2*degree_, so plain
  // carry-less arithmetic suffices.
  std::uint64_t r0 = modulus_, r1 = a.bits;
  std::uint64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    const std::uint64_t q = poly_div(r0, r1);
    const std::uint64_t r2 = r0 ^ clmul(q, r1);
    const std::uint64_t t2 = t0 ^ clmul(q, t1);
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  assert(r0 == 1);
  return {poly_mod(t0, modulus_)};
}

FieldElement Field::frob(FieldElement a, unsigned k) const {
  assert(contains(a));
  for (unsigned t = k % degree_; t > 0; --t) {
    a = mul(a, a);
  }
  return a;
}

FieldElement Field::pow(FieldElement a, std::uint64_t e) const {
  assert(contains(a));
  FieldElement acc = one();
  FieldElement base = a;
  while (e != 0) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

FieldElement find_generator(const Field& f) {
  const std::uint64_t group = f.order() - 1;
  std::vector<std::uint64_t> prime_factors;
  std::uint64_t rest = group;
  for (std::uint64_t p = 2; p * p <= rest; ++p) {
    if (rest % p == 0) {
      prime_factors.push_back(p);
      while (rest % p == 0) rest /= p;
    }
  }
  if (rest > 1) prime_factors.push_back(rest);

  for (std::uint64_t bits = 1; bits < f.order(); ++bits) {
    const FieldElement g{bits};
    bool ok = true;
    for (std::uint64_t p : prime_factors) {
      if (f.pow(g, group / p) == f.one()) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw std::logic_error("multiplicative group has no generator");
}

std::string to_hex(FieldElement a) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "%llx",
                static_cast<unsigned long long>(a.bits));
  return buf;
}

FieldElement parse_hex(const Field& f, std::string_view text) {
  if (text.empty() || text.size() > 16) {
    throw std::invalid_argument("bad field element token");
  }
  if (text.size() > 1 && text.front() == '0') {
    throw std::invalid_argument("bad field element token: leading zero");
  }
  std::uint64_t bits = 0;
  for (char c : text) {
    int digit;
    if (c >= '0' && c <= '9') {
      digit = c - '0';
    } else if (c >= 'a' && c <= 'f') {
      digit = c - 'a' + 10;
    } else {
      throw std::invalid_argument("bad field element token: not lowercase hex");
    }
    bits = bits << 4 | static_cast<std::uint64_t>(digit);
  }
  if (!f.contains({bits})) {
    throw std::invalid_argument("field element token out of range");
  }
  return {bits};
}

}  // namespace graphcodes
