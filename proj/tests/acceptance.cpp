// Acceptance suite: golden reproductions and exhaustive property sweeps.
// Prints one PASS/FAIL line per criterion; exits nonzero when any fails.

#include <algorithm>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "aperylab/classification.hpp"
#include "aperylab/hilbert_predicates.hpp"
#include "aperylab/io.hpp"
#include "aperylab/sweep.hpp"
#include "oracles.hpp"

using namespace aperylab;

namespace {

int failures = 0;
std::ostringstream detail;

void report(int number, const std::string& name, bool ok) {
  std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << number << ": " << name << '\n';
  if (!ok) {
    ++failures;
    if (!detail.str().empty()) std::cout << detail.str();
  }
  detail.str("");
  detail.clear();
}

bool expect(bool cond, const std::string& what) {
  if (!cond) detail << "      failed: " << what << '\n';
  return cond;
}

template <typename T>
std::string show(const std::vector<T>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out + "]";
}

std::vector<Value> torsion_values(const std::vector<TorsionElement>& torsion) {
  std::vector<Value> out;
  for (const auto& t : torsion) out.push_back(t.value);
  return out;
}

// ---- golden reproductions -------------------------------------------------

bool criterion1() {
  const NumericalSemigroup s({4, 11, 29});
  const auto table = build_table(s);
  bool ok = expect(table.rows == std::vector<std::vector<Value>>{{0, 29, 22, 11},
                                                                 {4, 29, 22, 11},
                                                                 {8, 33, 22, 15},
                                                                 {12, 33, 26, 19}},
                   "Apéry table rows");
  ok &= expect(s.reduction_number() == 3, "r = 3");
  ok &= expect(hilbert_function(s) == std::vector<int>{1, 3, 3, 4}, "H = {1,3,3,4}");
  const auto& inv = s.invariants();
  ok &= expect(inv.n_reduction == 5, "rho = 5");
  ok &= expect(inv.conductor == 26, "conductor = 26");
  ok &= expect(inv.genus == 14, "genus = 14");
  ok &= expect(inv.type == 2, "type = 2");
  const auto tc = tangent_cone_structure(table);
  ok &= expect(tc.free_shifts == std::vector<int>{0, 1, 2, 3}, "free shifts {0,1,2,3}");
  ok &= expect(tc.torsion_summands.size() == 1 && tc.torsion_summands[0].shift == 1 &&
                   tc.torsion_summands[0].nilpotency == 1,
               "one torsion summand (shift 1, order 1)");
  return ok;
}

bool criterion2() {
  const NumericalSemigroup s({5, 6, 14});
  const auto table = build_table(s);
  bool ok = expect(table.rows == std::vector<std::vector<Value>>{{0, 6, 12, 18, 14},
                                                                 {5, 6, 12, 18, 14},
                                                                 {10, 11, 12, 18, 19},
                                                                 {15, 16, 17, 18, 24},
                                                                 {20, 21, 22, 23, 24}},
                   "Apéry table rows");
  ok &= expect(hilbert_function(s) == std::vector<int>{1, 3, 4, 4, 5}, "H = {1,3,4,4,5}");
  const auto tc = tangent_cone_structure(table);
  ok &= expect(tc.torsion_summands.size() == 1 && tc.torsion_summands[0].shift == 1 &&
                   tc.torsion_summands[0].nilpotency == 2,
               "torsion summand (shift 1, order 2)");
  ok &= expect(embdim3_classify(s) == Embdim3Case::two_buchsbaum_first,
               "classification 2B-first");
  return ok;
}

bool criterion3() {
  const NumericalSemigroup s({7, 8, 17});
  const auto table = build_table(s);
  bool ok = expect(table.rows == std::vector<std::vector<Value>>{{0, 8, 16, 17, 25, 33, 34},
                                                                 {7, 8, 16, 17, 25, 33, 34},
                                                                 {14, 15, 16, 24, 25, 33, 34},
                                                                 {21, 22, 23, 24, 32, 33, 41},
                                                                 {28, 29, 30, 31, 32, 40, 41},
                                                                 {35, 36, 37, 38, 39, 40, 48},
                                                                 {42, 43, 44, 45, 46, 47, 48}},
                   "Apéry table rows");
  ok &= expect(hilbert_function(s) == std::vector<int>{1, 3, 5, 5, 6, 6, 7},
               "H = {1,3,5,5,6,6,7}");
  const auto tc = tangent_cone_structure(table);
  std::vector<int> shifts;
  bool orders_one = true;
  for (const auto& t : tc.torsion_summands) {
    shifts.push_back(t.shift);
    orders_one &= t.nilpotency == 1;
  }
  ok &= expect(shifts == std::vector<int>{1, 2, 3, 2, 4} && orders_one,
               "five torsion summands, shifts {1,2,3,2,4}, all order 1");
  return ok;
}

bool criterion4() {
  const NumericalSemigroup s({8, 11, 18});
  bool ok = expect(embdim3_canonical(s).k_s == 2, "k_S = 2");
  ok &= expect(is_torsion_value(s, 36), "36 in T");
  ok &= expect(!is_torsion_value(s, 18), "18 not in T");
  ok &= expect(embdim3_classify(s) == Embdim3Case::two_buchsbaum_second,
               "classification 2B-second");
  ok &= expect(render_apery_table(build_table(s), ColumnOrder::paper) ==
                   "Ap(S)  |  0 11 18 22 29 33 36 47\n"
                   "Ap(M)  |  8 11 18 22 29 33 36 47\n"
                   "Ap(2M) | 16 19 26 22 29 33 36 47\n"
                   "Ap(3M) | 24 27 34 30 37 33 44 47\n"
                   "Ap(4M) | 32 35 42 38 45 41 44 55\n"
                   "Ap(5M) | 40 43 50 46 53 49 52 55\n",
               "printed table layout");
  return ok;
}

bool criterion5() {
  const NumericalSemigroup s({6, 7, 16});
  const auto torsion = torsion_set(s);
  bool ok = expect(torsion_values(torsion) == std::vector<Value>{16, 22, 23, 29},
                   "T = {16,22,23,29}");
  ok &= expect(torsion.size() == 4, "torsion length 4");
  ok &= expect(buchsbaum_index(s, torsion) == 3, "buchsbaum index 3");
  return ok;
}

bool criterion6() {
  const NumericalSemigroup s({10, 17, 23, 82});
  const auto torsion = torsion_set(s);
  bool ok = expect(torsion_values(torsion) == std::vector<Value>{82, 92},
                   "torsion classes at 82 and 92");
  ok &= expect(torsion.size() == 2, "torsion length 2");
  ok &= expect(buchsbaum_index(s, torsion) == 1, "buchsbaum index 1");
  ok &= expect(hilbert_function(s) == std::vector<int>{1, 4, 5, 7, 9, 9, 10},
               "H = {1,4,5,7,9,9,10}");
  return ok;
}

bool criterion7() {
  const NumericalSemigroup s({11, 18, 104, 118});
  std::vector<Value> one_torsion;
  for (const auto& t : torsion_set(s)) {
    if (t.tord == 1) one_torsion.push_back(t.value);
  }
  bool ok = expect(one_torsion == std::vector<Value>{115, 133, 151, 169},
                   "1-torsion values {115,133,151,169}");
  ok &= expect(has_cyclic_1_torsion(s), "cyclic 1-torsion");
  ok &= expect(balanced_status(s) == BalancedStatus::not_balanced, "not balanced");
  ok &= expect(buchsbaum_index(s) > 1, "buchsbaum index > 1");
  ok &= expect(hilbert_function(s) == std::vector<int>{1, 4, 7, 7, 7, 7, 7, 8, 9, 10, 11},
               "H = {1,4,7,7,7,7,7,8,9,10,11}");
  return ok;
}

bool criterion8() {
  const NumericalSemigroup a({4, 5, 6});
  const NumericalSemigroup b({4, 5, 7});
  const NumericalSemigroup c({4, 5, 11});
  bool ok = expect(torsion_set(a).empty() && a.reduction_number() == 2, "<4,5,6> CM, r = 2");
  ok &= expect(torsion_set(b).empty() && b.reduction_number() == 2, "<4,5,7> CM, r = 2");
  const auto torsion = torsion_set(c);
  ok &= expect(!torsion.empty() && c.reduction_number() == 3, "<4,5,11> not CM, r = 3");
  ok &= expect(buchsbaum_index(c, torsion) == 1 && torsion.size() == 1,
               "<4,5,11> Buchsbaum with torsion length 1");
  return ok;
}

// ---- exhaustive sweeps ----------------------------------------------------

bool sweep_clean(SweepSpec spec, std::uint64_t& enumerated) {
  const auto result = run_sweep(spec);
  enumerated = result.count_enumerated;
  bool ok = expect(result.count_enumerated > 0, "sweep enumerated nothing");
  for (const auto& ev : result.contradiction_events) {
    ok &= expect(false, "contradiction " + ev.statement + " at " + show(ev.generators));
  }
  return ok;
}

bool criterion9() {
  SweepSpec spec;
  spec.embdim = 2;
  spec.max_generator = 40;
  spec.threads = 4;
  std::uint64_t n = 0;
  // embdim2-closed-forms covers r, conductor, genus, CM, Gorenstein cone and
  // the strict staircase; a clean sweep is the criterion.
  return sweep_clean(spec, n);
}

bool criterion10() {
  SweepSpec spec;
  spec.embdim = 3;
  spec.max_generator = 40;
  spec.threads = 4;
  std::uint64_t n = 0;
  bool ok = sweep_clean(spec, n);
  ok &= expect(n >= 5000, "expected thousands of 3-generated semigroups");

  // Spot-check the theorem shapes directly on top of the sweep checks.
  const auto result = run_sweep(spec);
  for (const auto& rec : result.records) {
    const NumericalSemigroup s(rec.generators);
    const auto canon = embdim3_canonical(s);
    const Value top = static_cast<Value>(canon.k_s) * s.generators()[2];
    const bool cm = rec.classification.is_cm;
    ok &= expect(cm == !is_torsion_value(s, top), "CM iff k_S n_3 not torsion");
    if (rec.classification.buchsbaum_index == 1) {
      ok &= expect(torsion_values(rec.torsion) == std::vector<Value>{top},
                   "Buchsbaum iff T = {k_S n_3} at " + show(rec.generators));
    }
    if (!ok) break;
  }
  return ok;
}

bool criterion11() {
  SweepSpec spec;
  spec.embdim = 4;
  spec.max_generator = 30;
  spec.threads = 4;
  std::uint64_t n = 0;
  bool ok = sweep_clean(spec, n);
  ok &= expect(n >= 5000, "expected thousands of 4-generated semigroups");

  spec.filters = {"buchsbaum", "hilbert-decreasing"};
  ok &= expect(run_sweep(spec).count_matched == 0,
               "a Buchsbaum cone never pairs with a decreasing Hilbert function");
  spec.filters = {"balanced", "hilbert-decreasing"};
  ok &= expect(run_sweep(spec).count_matched == 0,
               "a balanced semigroup never has a decreasing Hilbert function");
  spec.filters = {"cyclic-1-torsion", "hilbert-decreasing"};
  ok &= expect(run_sweep(spec).count_matched == 0,
               "cyclic 1-torsion never pairs with a decreasing Hilbert function");
  return ok;
}

bool criterion12() {
  bool ok = true;
  int count = 0;
  for (Value k3 = 2; k3 * (k3 + 1) * (k3 + 2) <= 400; ++k3) {
    for (Value k2 = k3 + 1; k2 * k3 * (k2 + 1) <= 400; ++k2) {
      if (std::gcd(k2, k3) != 1) continue;
      for (Value k1 = k2 + 1; k1 * k2 * k3 <= 400; ++k1) {
        if (std::gcd(k1, k2) != 1 || std::gcd(k1, k3) != 1) continue;
        ++count;
        const auto rep = unique_betti_semigroup({k1, k2, k3});
        ok &= expect(rep.all_ok(), "prediction battery at k = (" + std::to_string(k1) + "," +
                                       std::to_string(k2) + "," + std::to_string(k3) + ")");
      }
    }
  }
  ok &= expect(count >= 20, "expected a nontrivial family of triples");
  return ok;
}

bool criterion13() {
  std::mt19937 rng(20250810);
  bool ok = true;
  for (int round = 0; round < 500 && ok; ++round) {
    const NumericalSemigroup s(oracles::random_tuple(rng, 5, 60));
    const auto rec = analyze(s);
    const auto& g = s.generators();

    // Representation order against the exhaustive maximizer.
    const Value top = s.conductor() + 2 * s.multiplicity();
    for (Value v = 0; v <= top; ++v) {
      if (oracles::brute_max_order(g, v) != s.ord_or_neg(v)) {
        ok = expect(false, "order mismatch at " + std::to_string(v) + " in " + show(g));
        break;
      }
    }

    if (torsion_from_landings(rec.apery_table) != rec.torsion) {
      ok = expect(false, "torsion route mismatch in " + show(g));
    }
    if (hilbert_from_structure(rec.tangent_cone) != rec.hilbert) {
      ok = expect(false, "Hilbert route mismatch in " + show(g));
    }
    for (int k = 1; k <= s.reduction_number(); ++k) {
      const auto w = growth_witness(s, k);
      if (rec.hilbert[static_cast<std::size_t>(k)] - rec.hilbert[static_cast<std::size_t>(k - 1)] !=
          static_cast<int>(w.climbs.size()) - static_cast<int>(w.drops.size())) {
        ok = expect(false, "difference formula fails at k=" + std::to_string(k) + " in " +
                               show(g));
      }
    }

    const auto& inv = rec.invariants;
    const Value e = inv.multiplicity;
    const Value c = inv.conductor;
    const Value d = inv.genus;
    const Value tau = inv.type;
    ok &= expect(inv.reduction_number <= e - 1, "r <= e-1 in " + show(g));
    ok &= expect(inv.n_reduction >= e - 1, "rho >= e-1 in " + show(g));
    ok &= expect(2 * (c - d) <= c && c <= (tau + 1) * (c - d),
                 "conductor-genus-type relations in " + show(g));
    ok &= expect(((tau == 1) == (c == 2 * d)) && ((c == 2 * d) == inv.is_symmetric),
                 "symmetry characterization in " + show(g));
  }
  return ok;
}

}  // namespace

int main() {
  report(1, "<4,11,29> golden data", criterion1());
  report(2, "<5,6,14> golden data", criterion2());
  report(3, "<7,8,17> golden data", criterion3());
  report(4, "<8,11,18> golden data", criterion4());
  report(5, "<6,7,16> golden data", criterion5());
  report(6, "<10,17,23,82> golden data", criterion6());
  report(7, "<11,18,104,118> golden data", criterion7());
  report(8, "multiplicity-4 family", criterion8());
  report(9, "embdim-2 sweep, generators <= 40", criterion9());
  report(10, "embdim-3 sweep, generators <= 40", criterion10());
  report(11, "embdim-4 sweep, generators <= 30", criterion11());
  report(12, "unique-Betti battery, products <= 400", criterion12());
  report(13, "cross-oracle on 500 random semigroups", criterion13());

  if (failures) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all 13 criteria passed\n";
  return 0;
}
