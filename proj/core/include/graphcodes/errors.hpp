#pragma once

#include <stdexcept>
#include <string>

namespace graphcodes {

// Malformed serialized input (graph or matrix files).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A linear system that cannot be solved uniquely.
class SolveError : public std::runtime_error {
 public:
  enum class Kind {
    underdetermined,  // more than one solution
    inconsistent,     // no solution
  };

  SolveError(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// Erasure decoding failed: the pattern exceeds the code's budget, or the
// received cells are not consistent with any codeword.
class DecodeError : public std::runtime_error {
 public:
  enum class Kind {
    beyond_budget,  // more failures than the code guarantees to correct
    inconsistent,   // survivors satisfy no codeword
  };

  DecodeError(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

}  // namespace graphcodes
