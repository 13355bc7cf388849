#pragma once

#include <stdexcept>
#include <string>

namespace aperylab {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EmptyInput : Error {
  EmptyInput() : Error("generator list is empty") {}
};

struct ZeroGenerator : Error {
  ZeroGenerator() : Error("generators must be positive integers") {}
};

struct GcdNotOne : Error {
  GcdNotOne() : Error("gcd of the generators must be 1") {}
};

struct InvalidModulus : Error {
  explicit InvalidModulus(long long n)
      : Error("modulus " + std::to_string(n) + " is not a positive semigroup element") {}
};

struct NotInSemigroup : Error {
  explicit NotInSemigroup(long long s)
      : Error(std::to_string(s) + " is not an element of the semigroup") {}
};

struct WrongEmbdim : Error {
  explicit WrongEmbdim(int got, int want)
      : Error("operation requires embedding dimension " + std::to_string(want) +
              ", got " + std::to_string(got)) {}
};

struct WrongShape : Error {
  explicit WrongShape(const std::string& what) : Error(what) {}
};

struct NotCoprime : Error {
  NotCoprime() : Error("parameters must be pairwise coprime") {}
};

struct NotDecreasing : Error {
  NotDecreasing() : Error("parameters must be strictly decreasing integers > 1") {}
};

struct BoundTooLarge : Error {
  explicit BoundTooLarge(const std::string& what) : Error(what) {}
};

struct Overflow : Error {
  explicit Overflow(const std::string& what) : Error(what) {}
};

// Violation of a structural fact the implementation relies on; indicates a bug.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace aperylab
