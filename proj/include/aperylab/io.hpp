#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "aperylab/apery_table.hpp"
#include "aperylab/classification.hpp"
#include "aperylab/hilbert_predicates.hpp"
#include "aperylab/semigroup.hpp"

namespace aperylab {

inline constexpr const char* kSchemaVersion = "apery-lab/1";

enum class ColumnOrder {
  residue,  // residue classes 0, 1, ..., e-1 left to right
  paper,    // columns sorted by their Ap(S) entry
};

/// Full per-semigroup report; the serialization schema is fixed (version
/// "apery-lab/1") and round-trip stable.
struct AnalysisRecord {
  std::vector<Value> generators;
  InvariantReport invariants;
  AperyTable apery_table;
  TangentConeStructure tangent_cone;
  std::vector<int> hilbert;
  int hilbert_stable = 0;
  std::vector<TorsionElement> torsion;
  ClassificationReport classification;
  PredicateFlags flags;

  bool operator==(const AnalysisRecord&) const = default;
};

AnalysisRecord analyze(const NumericalSemigroup& s);

nlohmann::ordered_json record_to_json(const AnalysisRecord& rec);
AnalysisRecord record_from_json(const nlohmann::json& j);

std::string render_apery_table(const AperyTable& table, ColumnOrder order = ColumnOrder::residue);

std::string csv_header();
std::string csv_line(const AnalysisRecord& rec);

std::string human_report(const AnalysisRecord& rec);

}  // namespace aperylab
