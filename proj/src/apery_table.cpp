#include "aperylab/apery_table.hpp"

#include <algorithm>
#include <set>

namespace aperylab {

AperyTable build_table(const NumericalSemigroup& s) {
  const int r = s.reduction_number();
  AperyTable table;
  table.multiplicity = s.multiplicity();
  table.reduction_number = r;
  table.rows.reserve(static_cast<std::size_t>(r) + 1);
  for (int m = 0; m <= r; ++m) table.rows.push_back(s.apery_set(m).values);

  for (int m = 0; m < r; ++m) {
    for (std::size_t i = 0; i < table.rows[m].size(); ++i) {
      const Value step = table.rows[m + 1][i] - table.rows[m][i];
      if (step != 0 && step != table.multiplicity) {
        throw InternalError("Apéry table rows are not stacked");
      }
    }
  }
  return table;
}

std::vector<ColumnProfile> column_profiles(const AperyTable& table) {
  const int row_count = static_cast<int>(table.rows.size());
  std::vector<ColumnProfile> profiles;
  if (table.multiplicity < 2) return profiles;

  for (Value i = 1; i < table.multiplicity; ++i) {
    ColumnProfile p;
    p.residue = static_cast<int>(i);

    int run_start = 0;
    for (int n = 1; n <= row_count; ++n) {
      const bool run_ends = n == row_count ||
                            table.rows[n][static_cast<std::size_t>(i)] !=
                                table.rows[run_start][static_cast<std::size_t>(i)];
      if (!run_ends) continue;
      if (n - run_start >= 2) p.landings.push_back(Landing{run_start, n - 1});
      run_start = n;
    }
    if (p.landings.empty() || p.landings.front().start != 0) {
      throw InternalError("column stair must open with a landing at row 0");
    }

    p.first_order = p.landings.front().end;
    p.free_shift = p.landings.back().end;
    p.true_landings = static_cast<int>(p.landings.size()) - 1;
    for (std::size_t j = 1; j < p.landings.size(); ++j) {
      p.torsion_shifts.push_back(p.landings[j - 1].end);
      p.gap_lengths.push_back(p.landings[j].start - p.landings[j - 1].end);
      p.landing_lengths.push_back(p.landings[j].end - p.landings[j].start);
    }
    profiles.push_back(std::move(p));
  }
  return profiles;
}

std::vector<TorsionElement> torsion_set(const NumericalSemigroup& s) {
  const AperyTable table = build_table(s);
  const int r = table.reduction_number;
  const Value n1 = s.multiplicity();

  std::set<Value> seen;
  std::vector<TorsionElement> out;
  for (const auto& row : table.rows) {
    for (Value v : row) {
      if (!seen.insert(v).second) continue;
      const int o = s.ord_or_neg(v);
      for (int c = 1; c <= r - o; ++c) {
        if (s.ord_or_neg(v + c * n1) > o + c) {
          out.push_back(TorsionElement{v, o, c});
          break;
        }
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const TorsionElement& a, const TorsionElement& b) { return a.value < b.value; });
  return out;
}

std::vector<TorsionElement> torsion_from_landings(const AperyTable& table) {
  std::vector<TorsionElement> out;
  for (const auto& p : column_profiles(table)) {
    for (std::size_t j = 1; j < p.landings.size(); ++j) {
      const int from = p.landings[j - 1].end;
      const int to = p.landings[j].start;
      for (int n = from; n < to; ++n) {
        out.push_back(TorsionElement{
            table.rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(p.residue)], n,
            to - n});
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const TorsionElement& a, const TorsionElement& b) { return a.value < b.value; });
  return out;
}

std::optional<int> torsion_order(const NumericalSemigroup& s, Value v) {
  if (!s.contains(v)) return std::nullopt;
  const int o = s.ord_or_neg(v);
  const int r = s.reduction_number();
  const Value n1 = s.multiplicity();
  for (int c = 1; c <= r - o; ++c) {
    if (s.ord_or_neg(v + c * n1) > o + c) return c;
  }
  return std::nullopt;
}

bool is_torsion_value(const NumericalSemigroup& s, Value v) {
  return torsion_order(s, v).has_value();
}

TangentConeStructure tangent_cone_structure(const AperyTable& table) {
  TangentConeStructure tc;
  tc.free_shifts.push_back(0);
  for (const auto& p : column_profiles(table)) {
    tc.free_shifts.push_back(p.free_shift);
    Value generator = table.rows[0][static_cast<std::size_t>(p.residue)];
    for (int j = 0; j < p.true_landings; ++j) {
      tc.torsion_summands.push_back(
          TorsionSummand{p.torsion_shifts[static_cast<std::size_t>(j)],
                         p.gap_lengths[static_cast<std::size_t>(j)], generator});
      tc.torsion_length += p.gap_lengths[static_cast<std::size_t>(j)];
      generator += static_cast<Value>(p.gap_lengths[static_cast<std::size_t>(j)]) *
                   table.multiplicity;
    }
  }
  std::sort(tc.free_shifts.begin(), tc.free_shifts.end());
  return tc;
}

TangentConeStructure tangent_cone_structure(const NumericalSemigroup& s) {
  return tangent_cone_structure(build_table(s));
}

std::vector<int> hilbert_function(const NumericalSemigroup& s) {
  const int r = s.reduction_number();
  const Value e = s.multiplicity();
  const Value top = s.frobenius() + e + static_cast<Value>(r) * e;
  std::vector<int> h(static_cast<std::size_t>(r) + 1, 0);
  for (Value v = 0; v <= top; ++v) {
    const int o = s.ord_or_neg(v);
    if (o >= 0 && o <= r) ++h[static_cast<std::size_t>(o)];
  }
  if (h.back() != e) throw InternalError("Hilbert function did not stabilize at e");
  return h;
}

std::vector<int> hilbert_from_structure(const TangentConeStructure& tc) {
  int top = 0;
  for (int f : tc.free_shifts) top = std::max(top, f);
  for (const auto& t : tc.torsion_summands) top = std::max(top, t.shift + t.nilpotency - 1);
  std::vector<int> h(static_cast<std::size_t>(top) + 1, 0);
  for (int n = 0; n <= top; ++n) {
    int count = 0;
    for (int f : tc.free_shifts) count += f <= n;
    for (const auto& t : tc.torsion_summands) count += t.shift <= n && n < t.shift + t.nilpotency;
    h[static_cast<std::size_t>(n)] = count;
  }
  return h;
}

std::optional<std::vector<int>> gamma_values(const NumericalSemigroup& s) {
  const AperyTable table = build_table(s);
  const auto profiles = column_profiles(table);
  for (const auto& p : profiles) {
    if (p.true_landings > 0) return std::nullopt;
  }
  std::vector<int> gamma(static_cast<std::size_t>(table.reduction_number), 0);
  for (const auto& p : profiles) {
    if (p.free_shift >= 1) ++gamma[static_cast<std::size_t>(p.free_shift - 1)];
  }
  for (int g : gamma) {
    if (g <= 0) throw InternalError("free shifts of a Cohen-Macaulay cone must fill 1..r");
  }
  return gamma;
}

}  // namespace aperylab
