#pragma once

#include <optional>
#include <vector>

#include "aperylab/semigroup.hpp"

namespace aperylab {

/// Rows m = 0..r of Ap(mM) with respect to the multiplicity, one column per
/// residue class. Column 0 is 0, e, 2e, ..., re.
struct AperyTable {
  Value multiplicity = 0;
  int reduction_number = 0;
  std::vector<std::vector<Value>> rows;

  bool operator==(const AperyTable&) const = default;
};

/// Maximal run of equal values in a column; rows [start, end] all carry the
/// same entry. Runs of a single row do not count.
struct Landing {
  int start = 0;
  int end = 0;

  bool operator==(const Landing&) const = default;
};

/// Landing data of one table column. Landings are listed top to bottom; the
/// first starts at row 0, the remaining `true_landings` ones start later.
/// For true landing j (1-based): torsion_shifts[j-1] is the row where the
/// previous landing ends, gap_lengths[j-1] the climb between them, and
/// landing_lengths[j-1] its own length. free_shift is the row where the last
/// landing ends; first_order is where the first one ends, i.e. the order of
/// the column's Apéry element.
struct ColumnProfile {
  int residue = 0;
  std::vector<Landing> landings;
  int true_landings = 0;
  std::vector<int> torsion_shifts;
  std::vector<int> gap_lengths;
  std::vector<int> landing_lengths;
  int free_shift = 0;
  int first_order = 0;

  bool operator==(const ColumnProfile&) const = default;
};

struct TorsionElement {
  Value value = 0;
  int ord = 0;
  int tord = 0;

  bool operator==(const TorsionElement&) const = default;
};

struct TorsionSummand {
  int shift = 0;       // degree of the generator
  int nilpotency = 0;  // power of the reduction that kills it
  Value generator_value = 0;

  bool operator==(const TorsionSummand&) const = default;
};

/// Graded decomposition of the tangent cone over the fiber cone of the
/// minimal reduction: a free summand per Apéry column plus cyclic torsion
/// summands, one per true landing.
struct TangentConeStructure {
  std::vector<int> free_shifts;  // sorted, always contains 0, size = multiplicity
  std::vector<TorsionSummand> torsion_summands;
  int torsion_length = 0;

  bool operator==(const TangentConeStructure&) const = default;
};

AperyTable build_table(const NumericalSemigroup& s);

std::vector<ColumnProfile> column_profiles(const AperyTable& table);

/// All torsion values with their orders, from the defining condition
/// ord(s + c*n_1) > ord(s) + c tested over the table entries. Sorted by value.
std::vector<TorsionElement> torsion_set(const NumericalSemigroup& s);

/// The same set read off the landings of the table; independent route used
/// for cross-checking. Sorted by value.
std::vector<TorsionElement> torsion_from_landings(const AperyTable& table);

bool is_torsion_value(const NumericalSemigroup& s, Value v);
std::optional<int> torsion_order(const NumericalSemigroup& s, Value v);

TangentConeStructure tangent_cone_structure(const AperyTable& table);
TangentConeStructure tangent_cone_structure(const NumericalSemigroup& s);

/// H(0..r); counts each stratum directly from the order table. H(r) equals
/// the multiplicity and the function is constant from there on.
std::vector<int> hilbert_function(const NumericalSemigroup& s);

/// Hilbert function reconstructed from shifts alone; must agree with the
/// direct count.
std::vector<int> hilbert_from_structure(const TangentConeStructure& tc);

/// Present only when the tangent cone is Cohen-Macaulay: gamma[k-1] counts
/// the columns whose free shift is k, for k = 1..r.
std::optional<std::vector<int>> gamma_values(const NumericalSemigroup& s);

}  // namespace aperylab
