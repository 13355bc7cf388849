#pragma once

#include <optional>
#include <vector>

#include "aperylab/errors.hpp"
#include "aperylab/order_oracle.hpp"

namespace aperylab {

/// Apéry set of the ideal (level)·M with respect to `modulus`:
/// values[i] is the least element of the ideal congruent to i mod modulus.
/// level 0 means the semigroup itself.
struct AperySet {
  Value modulus = 0;
  int level = 0;
  std::vector<Value> values;

  bool operator==(const AperySet&) const = default;
};

/// A representation s = sum coefficients[i] * n_i whose coefficient total
/// equals ord(s).
struct MaximalExpression {
  Value element = 0;
  std::vector<Value> coefficients;

  Value order() const;

  bool operator==(const MaximalExpression&) const = default;
};

struct InvariantReport {
  Value multiplicity = 0;
  int embdim = 0;
  int reduction_number = 0;
  Value n_reduction = 0;  // size of (blow-up semigroup \ S)
  Value frobenius = 0;
  Value conductor = 0;
  Value genus = 0;
  int type = 0;
  std::vector<Value> pseudo_frobenius;
  bool is_symmetric = false;

  bool operator==(const InvariantReport&) const = default;
};

/// Numerical semigroup held by its unique minimal generating system.
///
/// Construction accepts any generating set with gcd 1: duplicates and
/// redundant generators are dropped, so `generators()` is always the minimal
/// system in increasing order. All queries are logically const; they fill
/// lazy caches (order table, reduction number, invariants), so an instance
/// must be confined to one thread while queries run. Distinct instances are
/// independent.
class NumericalSemigroup {
 public:
  explicit NumericalSemigroup(std::vector<Value> raw_generators);

  const std::vector<Value>& generators() const noexcept { return gens_; }
  Value multiplicity() const noexcept { return gens_.front(); }
  int embdim() const noexcept { return static_cast<int>(gens_.size()); }

  bool contains(Value s) const;

  /// Largest coefficient total over representations of s; nullopt if s is
  /// not in the semigroup.
  std::optional<int> ord(Value s) const;

  /// ord(s) or -1; avoids the optional on hot paths.
  int ord_or_neg(Value s) const { return oracle_.ord_or_neg(s); }

  /// Membership in the ideal (level)·M.
  bool in_ideal(Value s, int level) const;

  /// Ap(S) with respect to the multiplicity, indexed by residue class.
  const std::vector<Value>& apery_values() const noexcept { return apery0_; }

  Value frobenius() const noexcept { return frobenius_; }
  Value conductor() const noexcept { return conductor_; }

  AperySet apery_set(int level) const;
  AperySet apery_set(int level, Value modulus) const;

  /// Least r with Ap((r+1)M) = Ap(rM) + e componentwise.
  int reduction_number() const;

  const InvariantReport& invariants() const;

  /// The lexicographically greatest maximal expression of s: the coefficient
  /// of n_1 is maximized first, then n_2 given n_1, and so on.
  MaximalExpression canonical_max_expression(Value s) const;

  bool operator==(const NumericalSemigroup& other) const { return gens_ == other.gens_; }

 private:
  std::vector<Value> gens_;
  mutable OrderOracle oracle_;
  std::vector<Value> apery0_;
  Value frobenius_ = 0;
  Value conductor_ = 0;
  mutable std::optional<int> reduction_;
  mutable std::optional<InvariantReport> invariants_;

  std::vector<Value> next_apery_row(const std::vector<Value>& row, int level) const;
};

/// Reduces a raw generating set to the minimal system of the semigroup it
/// generates. Throws EmptyInput / ZeroGenerator / GcdNotOne.
std::vector<Value> minimal_generating_system(std::vector<Value> raw);

}  // namespace aperylab
