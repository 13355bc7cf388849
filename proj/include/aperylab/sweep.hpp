#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "aperylab/io.hpp"

namespace aperylab {

struct SweepSpec {
  std::optional<int> embdim;
  Value max_generator = 0;
  std::optional<Value> min_multiplicity;
  std::optional<Value> max_multiplicity;
  std::vector<std::string> filters;  // conjunction; empty matches everything
  std::vector<std::string> emit;     // top-level record fields to keep, empty = all
  std::uint64_t ceiling = 10'000'000;
  int threads = 1;

  bool operator==(const SweepSpec&) const = default;
};

struct ContradictionEvent {
  std::vector<Value> generators;
  std::string statement;

  bool operator==(const ContradictionEvent&) const = default;
};

/// Apéry torsion element whose torsion order reaches r - 1; tracked as a
/// statistic, not a failure.
struct AperyTordFlag {
  std::vector<Value> generators;
  Value witness = 0;
  int tord = 0;
  int reduction_number = 0;

  bool operator==(const AperyTordFlag&) const = default;
};

struct SweepResult {
  SweepSpec spec;
  std::uint64_t count_enumerated = 0;
  std::uint64_t count_matched = 0;
  std::vector<AnalysisRecord> records;  // matched semigroups, enumeration order
  std::vector<ContradictionEvent> contradiction_events;
  std::vector<AperyTordFlag> tord_flags;
};

/// All minimal generating tuples within the box, in lexicographic order
/// (ascending embdim first when none is fixed). Tuples whose minimal system
/// is smaller are skipped. Throws BoundTooLarge when the number of candidate
/// tuples exceeds the ceiling.
std::vector<std::vector<Value>> enumerate_minimal_tuples(const SweepSpec& spec);

std::vector<NumericalSemigroup> enumerate_semigroups(const SweepSpec& spec);

/// True when the record satisfies the named predicate. Throws on unknown
/// names. Names: cm, not-cm, buchsbaum, buchsbaum-not-cm, k-buchsbaum=K,
/// buchsbaum-index=K, balanced, not-balanced, symmetric, not-symmetric,
/// gorenstein-ring, gorenstein-cone, m-pure, hilbert-decreasing,
/// hilbert-nondecreasing, cyclic-1-torsion.
bool filter_matches(const std::string& name, const AnalysisRecord& rec);

/// Throws on names filter_matches would reject.
void validate_filter_name(const std::string& name);

/// Statement ids of every consistency check that fails on this semigroup:
/// dual-route computations, classification identities, and monotonicity
/// implications. Expected empty.
std::vector<std::string> cross_checks(const NumericalSemigroup& s, const AnalysisRecord& rec);

SweepResult run_sweep(const SweepSpec& spec);

nlohmann::ordered_json sweep_summary_json(const SweepResult& result);

}  // namespace aperylab
