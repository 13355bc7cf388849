#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace aperylab {

using Value = std::int64_t;

/// Dense table of representation orders for a fixed generator list.
///
/// ord(s) is the largest coefficient sum over representations of s as a
/// nonnegative combination of the generators; entries of -1 mark integers
/// outside the semigroup. The table extends itself on demand (at least
/// doubling each time). Instances are not synchronized: keep each oracle on
/// a single thread, or guard it externally.
class OrderOracle {
 public:
  explicit OrderOracle(std::vector<Value> generators);

  /// Exclusive upper end of the computed range.
  Value bound() const noexcept { return static_cast<Value>(table_.size()); }

  /// Grows the table so that all s < exclusive_bound are computed.
  void ensure(Value exclusive_bound);

  std::optional<int> ord(Value s);

  /// ord(s), or -1 when s is not in the semigroup. Hot-path variant.
  int ord_or_neg(Value s);

  bool contains(Value s) { return ord_or_neg(s) >= 0; }

 private:
  std::vector<Value> gens_;
  std::vector<std::int32_t> table_;
};

}  // namespace aperylab
