#include "aperylab/classification.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace aperylab {

std::string to_string(Embdim3Case c) {
  switch (c) {
    case Embdim3Case::cohen_macaulay: return "CM";
    case Embdim3Case::buchsbaum: return "Buchsbaum";
    case Embdim3Case::two_buchsbaum_first: return "2B-first";
    case Embdim3Case::two_buchsbaum_second: return "2B-second";
    case Embdim3Case::two_buchsbaum_third: return "2B-third";
    case Embdim3Case::deeper: return "deeper";
  }
  throw InternalError("unreachable embdim3 case");
}

std::optional<Embdim3Case> embdim3_case_from_string(const std::string& s) {
  for (auto c : {Embdim3Case::cohen_macaulay, Embdim3Case::buchsbaum,
                 Embdim3Case::two_buchsbaum_first, Embdim3Case::two_buchsbaum_second,
                 Embdim3Case::two_buchsbaum_third, Embdim3Case::deeper}) {
    if (to_string(c) == s) return c;
  }
  return std::nullopt;
}

bool is_k_buchsbaum(const NumericalSemigroup& s, std::span<const TorsionElement> torsion,
                    int k) {
  if (k < 0) throw Error("annihilation degree must be nonnegative");
  if (torsion.empty()) return true;
  if (k == 0) return false;

  // Degree-exactly-k multipliers; the graded ring is generated in degree one,
  // so these decide annihilation by the full k-th power.
  const Value e = s.multiplicity();
  const Value top = s.frobenius() + e + static_cast<Value>(k) * e;
  for (Value y = 1; y <= top; ++y) {
    if (s.ord_or_neg(y) != k) continue;
    for (const auto& t : torsion) {
      if (s.ord_or_neg(t.value + y) <= t.ord + k) return false;
    }
  }
  return true;
}

bool is_k_buchsbaum(const NumericalSemigroup& s, int k) {
  const auto torsion = torsion_set(s);
  return is_k_buchsbaum(s, torsion, k);
}

int buchsbaum_index(const NumericalSemigroup& s, std::span<const TorsionElement> torsion) {
  if (torsion.empty()) return 0;
  const int limit = static_cast<int>(torsion.size());
  for (int k = 1; k <= limit; ++k) {
    if (is_k_buchsbaum(s, torsion, k)) return k;
  }
  throw InternalError("annihilation degree exceeded the torsion length bound");
}

int buchsbaum_index(const NumericalSemigroup& s) {
  const auto torsion = torsion_set(s);
  return buchsbaum_index(s, torsion);
}

bool is_m_pure(const NumericalSemigroup& s) {
  std::vector<Value> apery(s.apery_values());
  std::sort(apery.begin(), apery.end());
  std::vector<int> orders(apery.size());
  for (std::size_t i = 0; i < apery.size(); ++i) orders[i] = s.ord_or_neg(apery[i]);
  for (std::size_t i = 0; i < apery.size(); ++i) {
    if (orders[i] + orders[apery.size() - 1 - i] != orders.back()) return false;
  }
  return true;
}

bool is_gorenstein_tangent_cone(const NumericalSemigroup& s) {
  return torsion_set(s).empty() && s.invariants().is_symmetric && is_m_pure(s);
}

Embdim3Canonical embdim3_canonical(const NumericalSemigroup& s) {
  if (s.embdim() != 3) throw WrongEmbdim(s.embdim(), 3);
  const Value n2 = s.generators()[1];
  const Value n3 = s.generators()[2];

  // Each Apéry element has exactly one maximal expression k*n3 + j*n2.
  std::vector<std::pair<int, int>> kj;
  int k_s = 0;
  for (Value w : s.apery_values()) {
    const int o = s.ord_or_neg(w);
    int hits = 0;
    int k_found = -1;
    for (int k = 0; k <= o; ++k) {
      if (w - static_cast<Value>(k) * n3 == static_cast<Value>(o - k) * n2) {
        ++hits;
        k_found = k;
      }
    }
    if (hits != 1) throw InternalError("Apéry element without unique n2/n3 maximal expression");
    kj.emplace_back(k_found, o - k_found);
    k_s = std::max(k_s, k_found);
  }

  Embdim3Canonical canon;
  canon.k_s = k_s;
  canon.h.assign(static_cast<std::size_t>(k_s) + 1, -1);
  for (auto [k, j] : kj) {
    canon.h[static_cast<std::size_t>(k)] = std::max(canon.h[static_cast<std::size_t>(k)], j);
  }

  std::size_t total = 0;
  for (int k = 0; k <= k_s; ++k) {
    const int h_k = canon.h[static_cast<std::size_t>(k)];
    if (h_k < 0) throw InternalError("canonical ordering has an empty row");
    if (k > 0 && h_k > canon.h[static_cast<std::size_t>(k - 1)]) {
      throw InternalError("canonical row widths must be non-increasing");
    }
    std::vector<Value> row;
    for (int j = 0; j <= h_k; ++j) {
      row.push_back(static_cast<Value>(k) * n3 + static_cast<Value>(j) * n2);
    }
    total += row.size();
    canon.rows.push_back(std::move(row));
  }
  if (total != s.apery_values().size()) {
    throw InternalError("canonical rows do not exhaust the Apéry set");
  }
  for (std::size_t k = 0; k < canon.rows.size(); ++k) {
    for (std::size_t j = 0; j < canon.rows[k].size(); ++j) {
      const Value w = canon.rows[k][j];
      const Value e = s.multiplicity();
      if (s.apery_values()[static_cast<std::size_t>(w % e)] != w ||
          s.ord_or_neg(w) != static_cast<int>(k + j)) {
        throw InternalError("canonical row entry is not the expected Apéry element");
      }
    }
  }
  return canon;
}

Embdim3Case embdim3_classify(const NumericalSemigroup& s) {
  const Embdim3Canonical canon = embdim3_canonical(s);
  const Value n1 = s.generators()[0];
  const Value n2 = s.generators()[1];
  const Value n3 = s.generators()[2];
  const Value top = static_cast<Value>(canon.k_s) * n3;

  if (!is_torsion_value(s, top)) return Embdim3Case::cohen_macaulay;

  std::vector<Value> torsion;
  for (const auto& t : torsion_set(s)) torsion.push_back(t.value);

  const auto is_exactly = [&torsion](std::vector<Value> shape) {
    std::sort(shape.begin(), shape.end());
    return torsion == shape;
  };
  if (is_exactly({top})) return Embdim3Case::buchsbaum;
  if (is_exactly({top, top + n1})) return Embdim3Case::two_buchsbaum_first;
  if (is_exactly({top, top + n2})) return Embdim3Case::two_buchsbaum_second;
  if (canon.k_s >= 2 && is_exactly({top, top - n3})) return Embdim3Case::two_buchsbaum_third;
  return Embdim3Case::deeper;
}

Mult4Criterion mult4_criterion(const NumericalSemigroup& s) {
  if (s.embdim() != 3) throw WrongEmbdim(s.embdim(), 3);
  if (s.multiplicity() != 4) throw WrongShape("multiplicity-4 criterion needs e = 4");
  Mult4Criterion crit;
  crit.not_cohen_macaulay = s.generators()[2] + 4 == 3 * s.generators()[1];
  crit.reduction_is_three = s.reduction_number() == 3;
  return crit;
}

TorsionBoundReport embdim3_torsion_bound_check(const NumericalSemigroup& s) {
  if (s.embdim() != 3) throw WrongEmbdim(s.embdim(), 3);
  const auto torsion = torsion_set(s);

  TorsionBoundReport rep;
  rep.torsion_length = static_cast<int>(torsion.size());
  rep.buchsbaum_index = buchsbaum_index(s, torsion);
  for (const auto& t : torsion) {
    const Value e = s.multiplicity();
    if (s.apery_values()[static_cast<std::size_t>(t.value % e)] == t.value) {
      ++rep.apery_torsion_count;
    }
  }
  const long long k = rep.buchsbaum_index;
  rep.torsion_slack_quarters = k * (k + 1) * (k + 1) - 4LL * rep.torsion_length;
  rep.apery_slack_quarters = (k + 1) * (k + 1) - 4LL * rep.apery_torsion_count;
  rep.torsion_within_bound = rep.torsion_slack_quarters >= 0;
  rep.apery_within_bound = rep.apery_slack_quarters >= 0;
  return rep;
}

namespace {

Value checked_product(const std::vector<Value>& factors) {
  Value acc = 1;
  for (Value f : factors) {
    if (acc > 0 && f > 0 && acc > (Value{1} << 62) / f) {
      throw Overflow("generator product exceeds 64 bits");
    }
    acc *= f;
  }
  return acc;
}

}  // namespace

UniqueBettiReport unique_betti_semigroup(const std::vector<Value>& ks) {
  if (ks.size() < 2) throw NotDecreasing();
  for (std::size_t i = 0; i < ks.size(); ++i) {
    if (ks[i] <= 1) throw NotDecreasing();
    if (i > 0 && ks[i] >= ks[i - 1]) throw NotDecreasing();
  }
  for (std::size_t i = 0; i < ks.size(); ++i) {
    for (std::size_t j = i + 1; j < ks.size(); ++j) {
      if (std::gcd(ks[i], ks[j]) != 1) throw NotCoprime();
    }
  }

  // ks is strictly decreasing, so gens[i] = product / ks[i] is strictly
  // increasing and ks[i] stays paired with gens[i].
  const Value product = checked_product(ks);
  std::vector<Value> gens;
  for (Value k : ks) gens.push_back(product / k);

  UniqueBettiReport rep{ks, NumericalSemigroup(gens), {}, 0, false, false, false, false,
                        false, false};
  rep.minimal_system_ok = rep.semigroup.generators() == gens;

  // Predicted Apéry set: the coefficient box over the generators past the
  // multiplicity.
  std::vector<Value> box{0};
  for (std::size_t i = 1; i < gens.size(); ++i) {
    const Value k_i = ks[i];
    std::vector<Value> grown;
    grown.reserve(box.size() * static_cast<std::size_t>(k_i));
    for (Value base : box) {
      for (Value lambda = 0; lambda < k_i; ++lambda) grown.push_back(base + lambda * gens[i]);
    }
    box = std::move(grown);
    rep.predicted_reduction += static_cast<int>(k_i - 1);
  }
  std::sort(box.begin(), box.end());
  rep.predicted_apery = std::move(box);

  std::vector<Value> actual(rep.semigroup.apery_values());
  std::sort(actual.begin(), actual.end());
  rep.apery_ok = actual == rep.predicted_apery;
  rep.symmetric_ok = rep.semigroup.invariants().is_symmetric;
  rep.m_pure_ok = is_m_pure(rep.semigroup);
  rep.gorenstein_cone_ok = is_gorenstein_tangent_cone(rep.semigroup);
  rep.reduction_ok = rep.semigroup.reduction_number() == rep.predicted_reduction;
  return rep;
}

ClassificationReport classify(const NumericalSemigroup& s) {
  const auto torsion = torsion_set(s);
  ClassificationReport rep;
  rep.torsion_length = static_cast<int>(torsion.size());
  rep.is_cm = torsion.empty();
  rep.is_gorenstein_ring = s.invariants().is_symmetric;
  rep.is_m_pure = is_m_pure(s);
  rep.is_gorenstein_tangent_cone = rep.is_cm && rep.is_gorenstein_ring && rep.is_m_pure;
  rep.buchsbaum_index = buchsbaum_index(s, torsion);
  if (s.embdim() == 3) rep.embdim3_case = embdim3_classify(s);
  return rep;
}

}  // namespace aperylab
