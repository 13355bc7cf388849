#include "aperylab/hilbert_predicates.hpp"

#include <algorithm>

namespace aperylab {

GrowthWitness growth_witness(const NumericalSemigroup& s, int k) {
  if (k < 1 || k > s.reduction_number()) {
    throw Error("growth witness level must lie in 1..r");
  }
  const Value e = s.multiplicity();
  GrowthWitness w;
  w.k = k;

  const Value drop_top = s.frobenius() + e + static_cast<Value>(k - 1) * e;
  for (Value x = 0; x <= drop_top; ++x) {
    if (s.ord_or_neg(x) == k - 1 && s.ord_or_neg(x + e) > k) w.drops.push_back(x);
  }
  const Value climb_top = s.frobenius() + e + static_cast<Value>(k) * e;
  for (Value y = 0; y <= climb_top; ++y) {
    if (s.ord_or_neg(y) != k) continue;
    if (!s.in_ideal(y - e, k - 1)) w.climbs.push_back(y);
  }
  return w;
}

BalancedStatus balanced_status(const NumericalSemigroup& s) {
  const auto& g = s.generators();
  const int b = s.embdim();
  if (b <= 3) return BalancedStatus::vacuously_balanced;
  // 1-based generator indices i != j in {2, ..., b-1}.
  for (int i = 2; i <= b - 1; ++i) {
    for (int j = 2; j <= b - 1; ++j) {
      if (i == j) continue;
      if (g[i - 1] + g[j - 1] != g[i - 2] + g[j]) return BalancedStatus::not_balanced;
    }
  }
  return BalancedStatus::balanced;
}

bool has_cyclic_1_torsion(const NumericalSemigroup& s,
                          std::span<const TorsionElement> torsion) {
  const int b = s.embdim();
  for (const auto& t : torsion) {
    if (t.tord != 1) continue;
    const auto expr = s.canonical_max_expression(t.value + s.multiplicity());
    if (expr.coefficients[0] != 0) return false;
    int interior_support = 0;
    for (int i = 1; i + 1 < b; ++i) interior_support += expr.coefficients[i] != 0;
    if (interior_support > 1) return false;
  }
  return true;
}

bool has_cyclic_1_torsion(const NumericalSemigroup& s) {
  return has_cyclic_1_torsion(s, torsion_set(s));
}

bool null_products(const NumericalSemigroup& s, std::span<const TorsionElement> torsion) {
  for (const auto& t : torsion) {
    const auto rx = s.canonical_max_expression(t.value);
    const auto ry = s.canonical_max_expression(t.value + s.multiplicity());
    for (std::size_t i = 0; i < rx.coefficients.size(); ++i) {
      if (rx.coefficients[i] != 0 && ry.coefficients[i] != 0) return false;
    }
  }
  return true;
}

bool null_products(const NumericalSemigroup& s) { return null_products(s, torsion_set(s)); }

HilbertMonotonicity hilbert_monotonicity(const NumericalSemigroup& s) {
  const auto h = hilbert_function(s);
  for (std::size_t n = 1; n < h.size(); ++n) {
    if (h[n] < h[n - 1]) return HilbertMonotonicity{false, static_cast<int>(n)};
  }
  return HilbertMonotonicity{true, std::nullopt};
}

bool subtorsion_closure_check(const NumericalSemigroup& s) {
  for (const auto& t : torsion_set(s)) {
    const auto rx = s.canonical_max_expression(t.value);
    const auto ry =
        s.canonical_max_expression(t.value + static_cast<Value>(t.tord) * s.multiplicity());
    for (std::size_t j = 0; j < rx.coefficients.size(); ++j) {
      if (rx.coefficients[j] == 0 || ry.coefficients[j] == 0) continue;
      const Value decremented = t.value - s.generators()[j];
      const auto sub_tord = torsion_order(s, decremented);
      if (!sub_tord || *sub_tord > t.tord) return false;
    }
  }
  return true;
}

bool all_torsion_order_one(std::span<const TorsionElement> torsion) {
  return std::all_of(torsion.begin(), torsion.end(),
                     [](const TorsionElement& t) { return t.tord == 1; });
}

PredicateFlags predicate_flags(const NumericalSemigroup& s) {
  const auto torsion = torsion_set(s);
  PredicateFlags flags;
  flags.balanced = balanced_status(s);
  flags.cyclic_1_torsion = has_cyclic_1_torsion(s, torsion);
  flags.hilbert_nondecreasing = hilbert_monotonicity(s).nondecreasing;
  flags.null_products = null_products(s, torsion);
  flags.all_tord_one = all_torsion_order_one(torsion);
  return flags;
}

}  // namespace aperylab
