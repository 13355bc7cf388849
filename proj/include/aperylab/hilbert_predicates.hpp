#pragma once

#include <optional>
#include <span>
#include <vector>

#include "aperylab/apery_table.hpp"
#include "aperylab/semigroup.hpp"

namespace aperylab {

/// The two finite sets controlling the k-th Hilbert difference:
/// drops[x]: ord(x) = k-1 and ord(x + n_1) > k;
/// climbs[y]: ord(y) = k and y - n_1 is not in (k-1)M.
/// H(k) - H(k-1) = #climbs - #drops.
struct GrowthWitness {
  int k = 0;
  std::vector<Value> drops;   // D_k
  std::vector<Value> climbs;  // C_k

  bool operator==(const GrowthWitness&) const = default;
};

enum class BalancedStatus {
  not_balanced,
  balanced,
  vacuously_balanced,  // fewer than four generators: no interior pairs exist
};

inline bool balanced_holds(BalancedStatus b) { return b != BalancedStatus::not_balanced; }

struct HilbertMonotonicity {
  bool nondecreasing = true;
  std::optional<int> first_decrease;

  bool operator==(const HilbertMonotonicity&) const = default;
};

struct PredicateFlags {
  BalancedStatus balanced = BalancedStatus::vacuously_balanced;
  bool cyclic_1_torsion = true;
  bool hilbert_nondecreasing = true;
  bool null_products = true;
  bool all_tord_one = true;

  bool operator==(const PredicateFlags&) const = default;
};

GrowthWitness growth_witness(const NumericalSemigroup& s, int k);

/// Interior-generator identities n_i + n_j = n_{i-1} + n_{j+1}.
BalancedStatus balanced_status(const NumericalSemigroup& s);

/// Every 1-torsion shift x + n_1 has canonical expression supported on at
/// most one interior generator plus the largest one.
bool has_cyclic_1_torsion(const NumericalSemigroup& s);
bool has_cyclic_1_torsion(const NumericalSemigroup& s, std::span<const TorsionElement> torsion);

/// Canonical expressions of x and x + n_1 share no support, for all torsion x.
bool null_products(const NumericalSemigroup& s);
bool null_products(const NumericalSemigroup& s, std::span<const TorsionElement> torsion);

HilbertMonotonicity hilbert_monotonicity(const NumericalSemigroup& s);

/// Decrementing a coordinate shared by the expressions of x and x + tord*n_1
/// lands on another torsion element of no larger torsion order.
bool subtorsion_closure_check(const NumericalSemigroup& s);

bool all_torsion_order_one(std::span<const TorsionElement> torsion);

PredicateFlags predicate_flags(const NumericalSemigroup& s);

}  // namespace aperylab
