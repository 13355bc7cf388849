#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "aperylab/apery_table.hpp"
#include "aperylab/semigroup.hpp"

namespace aperylab {

enum class Embdim3Case {
  cohen_macaulay,
  buchsbaum,
  two_buchsbaum_first,   // T = {k_S n_3, k_S n_3 + n_1}
  two_buchsbaum_second,  // T = {k_S n_3, k_S n_3 + n_2}
  two_buchsbaum_third,   // T = {k_S n_3, (k_S - 1) n_3}
  deeper,
};

std::string to_string(Embdim3Case c);
std::optional<Embdim3Case> embdim3_case_from_string(const std::string& s);

/// The Apéry set of a 3-generated semigroup arranged by the n_3-coefficient
/// of the unique maximal expression k*n_3 + j*n_2: row k holds
/// k*n_3, k*n_3 + n_2, ..., k*n_3 + h[k]*n_2.
struct Embdim3Canonical {
  int k_s = 0;
  std::vector<int> h;
  std::vector<std::vector<Value>> rows;

  bool operator==(const Embdim3Canonical&) const = default;
};

struct ClassificationReport {
  bool is_cm = false;
  bool is_gorenstein_ring = false;
  bool is_m_pure = false;
  bool is_gorenstein_tangent_cone = false;
  int buchsbaum_index = 0;
  int torsion_length = 0;
  std::optional<Embdim3Case> embdim3_case;

  bool operator==(const ClassificationReport&) const = default;
};

struct Mult4Criterion {
  bool not_cohen_macaulay = false;
  bool reduction_is_three = false;

  bool operator==(const Mult4Criterion&) const = default;
};

struct TorsionBoundReport {
  int buchsbaum_index = 0;
  int torsion_length = 0;
  int apery_torsion_count = 0;
  bool torsion_within_bound = true;  // 4*len <= k(k+1)^2
  bool apery_within_bound = true;    // 4*count <= (k+1)^2
  long long torsion_slack_quarters = 0;
  long long apery_slack_quarters = 0;
};

/// Construction and prediction battery for semigroups generated by
/// n_i = prod_{j != i} k_j with k_1 > ... > k_b > 1 pairwise coprime.
struct UniqueBettiReport {
  std::vector<Value> ks;
  NumericalSemigroup semigroup;
  std::vector<Value> predicted_apery;  // sorted
  int predicted_reduction = 0;
  bool minimal_system_ok = false;
  bool apery_ok = false;
  bool symmetric_ok = false;
  bool m_pure_ok = false;
  bool gorenstein_cone_ok = false;
  bool reduction_ok = false;

  bool all_ok() const {
    return minimal_system_ok && apery_ok && symmetric_ok && m_pure_ok && gorenstein_cone_ok &&
           reduction_ok;
  }
};

/// Annihilation test at exactly degree k: every torsion value shifted by any
/// order-k element must gain more than k in order. k = 0 asks for no torsion
/// at all. Monotone in k.
bool is_k_buchsbaum(const NumericalSemigroup& s, std::span<const TorsionElement> torsion, int k);
bool is_k_buchsbaum(const NumericalSemigroup& s, int k);

/// Least k for which is_k_buchsbaum holds; 0 exactly in the Cohen-Macaulay
/// case, and never larger than the torsion length.
int buchsbaum_index(const NumericalSemigroup& s, std::span<const TorsionElement> torsion);
int buchsbaum_index(const NumericalSemigroup& s);

/// Order symmetry of the Apéry set, ord(w_i) + ord(w_{e-1-i}) = ord(w_{e-1})
/// on the sorted set. Combined with symmetry and a Cohen-Macaulay cone this
/// characterizes the Gorenstein tangent cone.
bool is_m_pure(const NumericalSemigroup& s);
bool is_gorenstein_tangent_cone(const NumericalSemigroup& s);

Embdim3Canonical embdim3_canonical(const NumericalSemigroup& s);
Embdim3Case embdim3_classify(const NumericalSemigroup& s);

/// Multiplicity-4 shortcut: the cone fails to be Cohen-Macaulay exactly when
/// n_3 + 4 = 3 n_2, exactly when r = 3.
Mult4Criterion mult4_criterion(const NumericalSemigroup& s);

TorsionBoundReport embdim3_torsion_bound_check(const NumericalSemigroup& s);

UniqueBettiReport unique_betti_semigroup(const std::vector<Value>& ks);

ClassificationReport classify(const NumericalSemigroup& s);

}  // namespace aperylab
