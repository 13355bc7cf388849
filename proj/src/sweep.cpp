#include "aperylab/sweep.hpp"

#include <algorithm>
#include <future>
#include <numeric>

namespace aperylab {

namespace {

std::uint64_t saturating_binomial(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    if (acc > cap) return cap + 1;
    acc = acc * (n - k + i) / i;
  }
  return static_cast<std::uint64_t>(std::min<unsigned __int128>(acc, cap + 1));
}

std::uint64_t candidate_count(const SweepSpec& spec, int b, std::uint64_t cap) {
  const Value lo = std::max<Value>(1, spec.min_multiplicity.value_or(1));
  const Value hi = std::min(spec.max_generator, spec.max_multiplicity.value_or(spec.max_generator));
  std::uint64_t total = 0;
  for (Value m = lo; m <= hi; ++m) {
    total += saturating_binomial(static_cast<std::uint64_t>(spec.max_generator - m),
                                 static_cast<std::uint64_t>(b - 1), cap);
    if (total > cap) return cap + 1;
  }
  return total;
}

bool tuple_gcd_is_one(const std::vector<Value>& tuple) {
  Value g = 0;
  for (Value v : tuple) g = std::gcd(g, v);
  return g == 1;
}

void emit_tuples(const SweepSpec& spec, int b, std::vector<std::vector<Value>>& out) {
  const Value lo = std::max<Value>(1, spec.min_multiplicity.value_or(1));
  const Value hi = std::min(spec.max_generator, spec.max_multiplicity.value_or(spec.max_generator));
  if (lo > hi) return;

  std::vector<Value> tuple(static_cast<std::size_t>(b));
  // Ascending-combination walk with the first slot restricted to the
  // multiplicity range.
  const auto descend = [&](auto&& self, int depth) -> void {
    if (depth == b) {
      if (!tuple_gcd_is_one(tuple)) return;
      if (minimal_generating_system(tuple) == tuple) out.push_back(tuple);
      return;
    }
    const Value first = depth == 0 ? lo : tuple[static_cast<std::size_t>(depth - 1)] + 1;
    const Value last = depth == 0 ? hi : spec.max_generator;
    for (Value v = first; v <= last; ++v) {
      tuple[static_cast<std::size_t>(depth)] = v;
      self(self, depth + 1);
    }
  };
  descend(descend, 0);
}

}  // namespace

std::vector<std::vector<Value>> enumerate_minimal_tuples(const SweepSpec& spec) {
  if (spec.max_generator < 1) throw Error("max generator bound must be positive");
  if (spec.embdim && *spec.embdim < 1) throw Error("embedding dimension must be positive");

  std::uint64_t candidates = 0;
  const int b_lo = spec.embdim.value_or(1);
  const int b_hi = spec.embdim.value_or(static_cast<int>(spec.max_generator));
  for (int b = b_lo; b <= b_hi; ++b) {
    candidates += candidate_count(spec, b, spec.ceiling);
    if (candidates > spec.ceiling) {
      throw BoundTooLarge("candidate tuple count exceeds the ceiling of " +
                          std::to_string(spec.ceiling));
    }
  }

  std::vector<std::vector<Value>> tuples;
  for (int b = b_lo; b <= b_hi; ++b) emit_tuples(spec, b, tuples);
  return tuples;
}

std::vector<NumericalSemigroup> enumerate_semigroups(const SweepSpec& spec) {
  std::vector<NumericalSemigroup> out;
  for (auto& tuple : enumerate_minimal_tuples(spec)) out.emplace_back(std::move(tuple));
  return out;
}

void validate_filter_name(const std::string& name) {
  static const AnalysisRecord probe{.generators = {1},
                                    .invariants = {},
                                    .apery_table = {},
                                    .tangent_cone = {},
                                    .hilbert = {1},
                                    .hilbert_stable = 1,
                                    .torsion = {},
                                    .classification = {},
                                    .flags = {}};
  filter_matches(name, probe);
}

bool filter_matches(const std::string& name, const AnalysisRecord& rec) {
  const auto& cls = rec.classification;
  if (name == "cm") return cls.is_cm;
  if (name == "not-cm") return !cls.is_cm;
  if (name == "buchsbaum") return cls.buchsbaum_index <= 1;
  if (name == "buchsbaum-not-cm") return cls.buchsbaum_index == 1;
  if (name == "balanced") return balanced_holds(rec.flags.balanced);
  if (name == "not-balanced") return !balanced_holds(rec.flags.balanced);
  if (name == "symmetric" || name == "gorenstein-ring") return rec.invariants.is_symmetric;
  if (name == "not-symmetric") return !rec.invariants.is_symmetric;
  if (name == "gorenstein-cone") return cls.is_gorenstein_tangent_cone;
  if (name == "m-pure") return cls.is_m_pure;
  if (name == "hilbert-decreasing") return !rec.flags.hilbert_nondecreasing;
  if (name == "hilbert-nondecreasing") return rec.flags.hilbert_nondecreasing;
  if (name == "cyclic-1-torsion") return rec.flags.cyclic_1_torsion;
  if (const auto eq = name.find('='); eq != std::string::npos) {
    const std::string head = name.substr(0, eq);
    int k = 0;
    try {
      k = std::stoi(name.substr(eq + 1));
    } catch (const std::exception&) {
      throw Error("bad filter argument in '" + name + "'");
    }
    if (head == "k-buchsbaum") return cls.buchsbaum_index <= k;
    if (head == "buchsbaum-index") return cls.buchsbaum_index == k;
  }
  throw Error("unknown filter '" + name + "'");
}

namespace {

bool in_sorted(const std::vector<Value>& values, Value v) {
  return std::binary_search(values.begin(), values.end(), v);
}

std::vector<Value> torsion_values(const AnalysisRecord& rec) {
  std::vector<Value> out;
  for (const auto& t : rec.torsion) out.push_back(t.value);
  return out;
}

}  // namespace

std::vector<std::string> cross_checks(const NumericalSemigroup& s, const AnalysisRecord& rec) {
  std::vector<std::string> violated;
  const auto fail = [&violated](const std::string& id) { violated.push_back(id); };

  const Value e = s.multiplicity();
  const int b = s.embdim();
  const int r = s.reduction_number();
  const auto& inv = rec.invariants;
  const auto& cls = rec.classification;

  {
    const Value c = inv.conductor;
    const Value d = inv.genus;
    const Value tau = inv.type;
    bool ok = inv.reduction_number <= e - 1 && b <= e && inv.n_reduction >= e - 1 &&
              2 * (c - d) <= c && c <= (tau + 1) * (c - d) && inv.conductor == inv.frobenius + 1;
    ok = ok && ((tau == 1) == (c == 2 * d)) && ((c == 2 * d) == inv.is_symmetric);
    if (!ok) fail("invariant-relations");
  }

  {
    bool no_true_landings = true;
    for (const auto& p : column_profiles(rec.apery_table)) {
      if (p.true_landings > 0) no_true_landings = false;
    }
    const bool ok = cls.is_cm == rec.torsion.empty() &&
                    cls.is_cm == (cls.buchsbaum_index == 0) && cls.is_cm == no_true_landings &&
                    cls.torsion_length == static_cast<int>(rec.torsion.size());
    if (!ok) fail("cm-characterization");
  }

  if (torsion_from_landings(rec.apery_table) != rec.torsion ||
      rec.tangent_cone.torsion_length != static_cast<int>(rec.torsion.size())) {
    fail("torsion-direct-equals-landing");
  }

  if (hilbert_from_structure(rec.tangent_cone) != rec.hilbert) {
    fail("hilbert-direct-equals-structure");
  }

  std::vector<GrowthWitness> witnesses;
  for (int k = 1; k <= r; ++k) witnesses.push_back(growth_witness(s, k));
  {
    bool ok = true;
    for (int k = 1; k <= r; ++k) {
      const auto& w = witnesses[static_cast<std::size_t>(k - 1)];
      if (rec.hilbert[static_cast<std::size_t>(k)] - rec.hilbert[static_cast<std::size_t>(k - 1)] !=
          static_cast<int>(w.climbs.size()) - static_cast<int>(w.drops.size())) {
        ok = false;
      }
    }
    if (!ok) fail("delta-h-count");
  }

  {
    bool ok = true;
    for (const auto& w : witnesses) {
      for (Value x : w.drops) {
        if (torsion_order(s, x) != std::optional<int>(1)) ok = false;
      }
    }
    if (!ok) fail("d-k-torsion-order-one");
  }

  {
    bool ok = true;
    const Value top = s.frobenius() + e + static_cast<Value>(r) * e;
    for (std::size_t gi = 0; gi < std::min<std::size_t>(2, rec.generators.size()); ++gi) {
      for (Value v = rec.generators[gi]; v <= top; v += rec.generators[gi]) {
        if (is_torsion_value(s, v)) ok = false;
      }
    }
    if (!ok) fail("never-torsion-multiples");
  }

  {
    bool ok = true;
    for (Value v : rec.apery_table.rows.back()) {
      const int o = s.ord_or_neg(v);
      if (s.ord_or_neg(v + e) != o + 1 || s.ord_or_neg(v + 2 * e) != o + 2) ok = false;
    }
    if (!ok) fail("stabilized-growth");
  }

  if (cls.is_cm) {
    const auto gamma = gamma_values(s);
    bool ok = gamma.has_value();
    if (ok) {
      int acc = 1;
      for (int k = 1; k <= r; ++k) {
        const int g = (*gamma)[static_cast<std::size_t>(k - 1)];
        acc += g;
        if (g <= 0 || rec.hilbert[static_cast<std::size_t>(k)] != acc) ok = false;
      }
    }
    if (!ok) fail("gamma-cm-increasing");
  }

  {
    bool ok = true;
    for (const auto& w : witnesses) {
      for (Value x : w.drops) {
        const auto shift = s.canonical_max_expression(x + e);
        if (shift.coefficients[0] != 0) {
          ok = false;
          continue;
        }
        const Value l_x = s.ord_or_neg(x + e) - s.ord_or_neg(x) - 1;
        Value interior = 0;
        for (int i = 1; i + 1 < b; ++i) interior += shift.coefficients[static_cast<std::size_t>(i)];
        if (!(l_x < interior)) ok = false;

        // One explicit climb witness built from the shift expression.
        Value budget = l_x;
        Value y = 0;
        for (std::size_t i = 1; i < shift.coefficients.size(); ++i) {
          const Value take = std::min(budget, shift.coefficients[i]);
          budget -= take;
          y += (shift.coefficients[i] - take) * s.generators()[i];
        }
        if (budget != 0 || !in_sorted(w.climbs, y)) ok = false;
      }
    }
    if (!ok) fail("lemma-land");
  }

  if (!subtorsion_closure_check(s)) fail("subtorsion-closure");

  if (cls.torsion_length == 1 && !rec.flags.hilbert_nondecreasing) {
    fail("lambda-one-nondecreasing");
  }

  if (balanced_holds(rec.flags.balanced) && !rec.flags.cyclic_1_torsion) {
    fail("balanced-implies-cyclic-1-torsion");
  }

  if (rec.flags.cyclic_1_torsion && !rec.flags.hilbert_nondecreasing) {
    fail("cyclic-1-torsion-nondecreasing");
  }

  if (b == 2) {
    const Value n1 = rec.generators[0];
    const Value n2 = rec.generators[1];
    bool ok = inv.reduction_number == n1 - 1 && inv.conductor == n1 * n2 - n1 - n2 + 1 &&
              2 * inv.genus == inv.conductor && inv.type == 1 && cls.is_cm &&
              cls.is_gorenstein_tangent_cone && inv.n_reduction == n1 * (n1 - 1) / 2;
    for (std::size_t n = 0; n < rec.hilbert.size(); ++n) {
      if (rec.hilbert[n] != static_cast<int>(n) + 1) ok = false;
    }
    if (!ok) fail("embdim2-closed-forms");
  }

  if (b == 3) {
    if (!rec.flags.hilbert_nondecreasing) fail("embdim3-nondecreasing");

    {
      const auto tag = *cls.embdim3_case;
      const int k = cls.buchsbaum_index;
      bool ok = true;
      switch (tag) {
        case Embdim3Case::cohen_macaulay: ok = k == 0; break;
        case Embdim3Case::buchsbaum: ok = k == 1; break;
        case Embdim3Case::two_buchsbaum_first:
        case Embdim3Case::two_buchsbaum_second:
        case Embdim3Case::two_buchsbaum_third: ok = k == 2; break;
        case Embdim3Case::deeper: ok = k >= 3; break;
      }
      if (!ok) fail("embdim3-classify-consistency");
    }

    {
      const int k = cls.buchsbaum_index;
      const int len = cls.torsion_length;
      if (((k == 1) != (len == 1)) || ((k == 2) != (len == 2))) {
        fail("embdim3-lambda-matches-index");
      }
    }

    {
      const auto bound = embdim3_torsion_bound_check(s);
      if (!bound.torsion_within_bound || !bound.apery_within_bound) {
        fail("embdim3-torsion-bounds");
      }
    }

    const auto canon = embdim3_canonical(s);
    const Value n3 = s.generators()[2];
    {
      bool ok = true;
      for (std::size_t k = 0; k < canon.rows.size(); ++k) {
        std::optional<int> row_tord;
        bool row_mixed = false;
        for (Value w : canon.rows[k]) {
          const auto t = torsion_order(s, w);
          if (w == canon.rows[k].front()) {
            row_tord = t;
          } else if (t != row_tord) {
            row_mixed = true;
          }
        }
        if (row_mixed) ok = false;
        if (k == 0 && row_tord.has_value()) ok = false;
      }
      if (!ok) fail("embdim3-row-rigidity");

      // A torsion row forces every higher row to be torsion with torsion
      // order no larger; adjacent pairs chain up to the full statement.
      ok = true;
      for (int k = 1; k < canon.k_s; ++k) {
        const auto lower = torsion_order(s, static_cast<Value>(k) * n3);
        if (!lower) continue;
        const auto upper = torsion_order(s, static_cast<Value>(k + 1) * n3);
        if (!upper || *upper > *lower) ok = false;
      }
      if (!ok) fail("embdim3-upward-propagation");

      ok = true;
      const auto tvals = torsion_values(rec);
      for (int k = 1; k <= canon.k_s; ++k) {
        bool row_hit = false;
        for (Value w : canon.rows[static_cast<std::size_t>(k)]) {
          if (in_sorted(tvals, w)) row_hit = true;
        }
        if (row_hit != is_torsion_value(s, static_cast<Value>(k) * n3)) ok = false;
      }
      if (!ok) fail("embdim3-row-test");
    }

    {
      bool ok = true;
      for (const auto& t : rec.torsion) {
        const auto rx = s.canonical_max_expression(t.value);
        const auto ry =
            s.canonical_max_expression(t.value + static_cast<Value>(t.tord) * e);
        if (ry.coefficients[0] != 0 || rx.coefficients[2] == 0 ||
            ry.coefficients[1] <= rx.coefficients[1]) {
          ok = false;
        }
      }
      if (!ok) fail("embdim3-lemma-rs");
    }
  }

  if (b == 4) {
    if (cls.buchsbaum_index <= 1 && !rec.flags.hilbert_nondecreasing) {
      fail("embdim4-buchsbaum-nondecreasing");
    }
    if (rec.flags.all_tord_one && rec.flags.null_products && !rec.flags.hilbert_nondecreasing) {
      fail("embdim4-tord1-null-nondecreasing");
    }
  }

  return violated;
}

namespace {

struct ChunkOutput {
  std::vector<AnalysisRecord> matched;
  std::vector<ContradictionEvent> events;
  std::vector<AperyTordFlag> flags;
  std::uint64_t enumerated = 0;
};

ChunkOutput process_range(const SweepSpec& spec, const std::vector<std::vector<Value>>& tuples,
                          std::size_t lo, std::size_t hi) {
  ChunkOutput out;
  for (std::size_t i = lo; i < hi; ++i) {
    const NumericalSemigroup s(tuples[i]);
    const AnalysisRecord rec = analyze(s);
    ++out.enumerated;

    for (const auto& id : cross_checks(s, rec)) {
      out.events.push_back(ContradictionEvent{rec.generators, id});
    }
    for (const auto& t : rec.torsion) {
      const bool in_apery =
          s.apery_values()[static_cast<std::size_t>(t.value % s.multiplicity())] == t.value;
      if (in_apery && t.tord >= s.reduction_number() - 1) {
        out.flags.push_back(
            AperyTordFlag{rec.generators, t.value, t.tord, s.reduction_number()});
      }
    }

    bool matched = true;
    for (const auto& f : spec.filters) matched = matched && filter_matches(f, rec);
    if (matched) out.matched.push_back(rec);
  }
  return out;
}

}  // namespace

SweepResult run_sweep(const SweepSpec& spec) {
  for (const auto& f : spec.filters) validate_filter_name(f);

  const auto tuples = enumerate_minimal_tuples(spec);
  SweepResult result;
  result.spec = spec;

  const int threads = std::max(1, spec.threads);
  std::vector<ChunkOutput> chunks;
  if (threads == 1 || tuples.size() < 2) {
    chunks.push_back(process_range(spec, tuples, 0, tuples.size()));
  } else {
    const std::size_t chunk_count = std::min<std::size_t>(tuples.size(),
                                                          static_cast<std::size_t>(threads) * 4);
    std::vector<std::future<ChunkOutput>> futures;
    for (std::size_t c = 0; c < chunk_count; ++c) {
      const std::size_t lo = tuples.size() * c / chunk_count;
      const std::size_t hi = tuples.size() * (c + 1) / chunk_count;
      futures.push_back(std::async(std::launch::async, process_range, std::cref(spec),
                                   std::cref(tuples), lo, hi));
    }
    for (auto& f : futures) chunks.push_back(f.get());
  }

  for (auto& chunk : chunks) {
    result.count_enumerated += chunk.enumerated;
    result.count_matched += chunk.matched.size();
    std::move(chunk.matched.begin(), chunk.matched.end(), std::back_inserter(result.records));
    std::move(chunk.events.begin(), chunk.events.end(),
              std::back_inserter(result.contradiction_events));
    std::move(chunk.flags.begin(), chunk.flags.end(),
              std::back_inserter(result.tord_flags));
  }
  return result;
}

nlohmann::ordered_json sweep_summary_json(const SweepResult& result) {
  nlohmann::ordered_json j;
  j["version"] = kSchemaVersion;
  nlohmann::ordered_json spec;
  if (result.spec.embdim) {
    spec["embdim"] = *result.spec.embdim;
  } else {
    spec["embdim"] = nullptr;
  }
  spec["max_generator"] = result.spec.max_generator;
  if (result.spec.min_multiplicity) spec["min_multiplicity"] = *result.spec.min_multiplicity;
  if (result.spec.max_multiplicity) spec["max_multiplicity"] = *result.spec.max_multiplicity;
  spec["filters"] = result.spec.filters;
  spec["emit"] = result.spec.emit;
  spec["ceiling"] = result.spec.ceiling;
  spec["threads"] = result.spec.threads;
  j["spec"] = std::move(spec);
  j["count_enumerated"] = result.count_enumerated;
  j["count_matched"] = result.count_matched;
  j["contradiction_events"] = nlohmann::ordered_json::array();
  for (const auto& ev : result.contradiction_events) {
    j["contradiction_events"].push_back(
        nlohmann::ordered_json{{"generators", ev.generators}, {"statement", ev.statement}});
  }
  j["tord_flags"] = nlohmann::ordered_json::array();
  for (const auto& f : result.tord_flags) {
    j["tord_flags"].push_back(nlohmann::ordered_json{{"generators", f.generators},
                                                            {"witness", f.witness},
                                                            {"tord", f.tord},
                                                            {"reduction_number", f.reduction_number}});
  }
  return j;
}

}  // namespace aperylab
