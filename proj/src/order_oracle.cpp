#include "aperylab/order_oracle.hpp"

#include <algorithm>

#include "aperylab/errors.hpp"

namespace aperylab {

namespace {
// Dense tables above this size are refused rather than thrashing memory.
constexpr Value kMaxTableEntries = 200'000'000;
}  // namespace

OrderOracle::OrderOracle(std::vector<Value> generators) : gens_(std::move(generators)) {
  table_.push_back(0);  // ord(0) = 0
}

void OrderOracle::ensure(Value exclusive_bound) {
  if (exclusive_bound <= bound()) return;
  if (exclusive_bound > kMaxTableEntries) {
    throw BoundTooLarge("order table of " + std::to_string(exclusive_bound) +
                        " entries exceeds the dense-table limit");
  }
  Value target = std::min(std::max(exclusive_bound, 2 * bound()), kMaxTableEntries);
  const std::size_t old_size = table_.size();
  table_.resize(static_cast<std::size_t>(target), -1);
  for (std::size_t s = old_size; s < table_.size(); ++s) {
    std::int32_t best = -1;
    for (Value g : gens_) {
      if (g > static_cast<Value>(s)) break;
      const std::int32_t below = table_[s - static_cast<std::size_t>(g)];
      if (below >= 0 && below + 1 > best) best = below + 1;
    }
    table_[s] = best;
  }
}

std::optional<int> OrderOracle::ord(Value s) {
  const int v = ord_or_neg(s);
  if (v < 0) return std::nullopt;
  return v;
}

int OrderOracle::ord_or_neg(Value s) {
  if (s < 0) return -1;
  ensure(s + 1);
  return table_[static_cast<std::size_t>(s)];
}

}  // namespace aperylab
