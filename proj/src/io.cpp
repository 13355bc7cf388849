#include "aperylab/io.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace aperylab {

using nlohmann::json;
using nlohmann::ordered_json;

AnalysisRecord analyze(const NumericalSemigroup& s) {
  AnalysisRecord rec;
  rec.generators = s.generators();
  rec.invariants = s.invariants();
  rec.apery_table = build_table(s);
  rec.tangent_cone = tangent_cone_structure(rec.apery_table);
  rec.hilbert = hilbert_function(s);
  rec.hilbert_stable = static_cast<int>(s.multiplicity());
  rec.torsion = torsion_set(s);
  rec.classification = classify(s);
  rec.flags = predicate_flags(s);
  return rec;
}

ordered_json record_to_json(const AnalysisRecord& rec) {
  ordered_json j;
  j["version"] = kSchemaVersion;
  j["generators"] = rec.generators;

  ordered_json inv;
  inv["multiplicity"] = rec.invariants.multiplicity;
  inv["embdim"] = rec.invariants.embdim;
  inv["reduction_number"] = rec.invariants.reduction_number;
  inv["n_reduction"] = rec.invariants.n_reduction;
  inv["frobenius"] = rec.invariants.frobenius;
  inv["conductor"] = rec.invariants.conductor;
  inv["genus"] = rec.invariants.genus;
  inv["type"] = rec.invariants.type;
  inv["pseudo_frobenius"] = rec.invariants.pseudo_frobenius;
  inv["is_symmetric"] = rec.invariants.is_symmetric;
  j["invariants"] = std::move(inv);

  j["apery_table"] = rec.apery_table.rows;

  ordered_json cone;
  cone["free_shifts"] = rec.tangent_cone.free_shifts;
  cone["torsion"] = ordered_json::array();
  for (const auto& t : rec.tangent_cone.torsion_summands) {
    cone["torsion"].push_back(ordered_json{
        {"shift", t.shift}, {"order", t.nilpotency}, {"generator_value", t.generator_value}});
  }
  j["tangent_cone"] = std::move(cone);

  j["hilbert"] = rec.hilbert;
  j["hilbert_stable"] = rec.hilbert_stable;

  j["torsion_set"] = ordered_json::array();
  for (const auto& t : rec.torsion) {
    j["torsion_set"].push_back(
        ordered_json{{"value", t.value}, {"ord", t.ord}, {"tord", t.tord}});
  }

  ordered_json cls;
  cls["is_cm"] = rec.classification.is_cm;
  cls["is_gorenstein_ring"] = rec.classification.is_gorenstein_ring;
  cls["is_m_pure"] = rec.classification.is_m_pure;
  cls["is_gorenstein_tangent_cone"] = rec.classification.is_gorenstein_tangent_cone;
  cls["buchsbaum_index"] = rec.classification.buchsbaum_index;
  cls["torsion_length"] = rec.classification.torsion_length;
  if (rec.classification.embdim3_case) {
    cls["embdim3_case"] = to_string(*rec.classification.embdim3_case);
  } else {
    cls["embdim3_case"] = nullptr;
  }
  j["classification"] = std::move(cls);

  ordered_json flags;
  flags["balanced"] = balanced_holds(rec.flags.balanced);
  flags["balanced_vacuous"] = rec.flags.balanced == BalancedStatus::vacuously_balanced;
  flags["cyclic_1_torsion"] = rec.flags.cyclic_1_torsion;
  flags["hilbert_nondecreasing"] = rec.flags.hilbert_nondecreasing;
  flags["null_products"] = rec.flags.null_products;
  flags["all_tord_one"] = rec.flags.all_tord_one;
  j["flags"] = std::move(flags);
  return j;
}

AnalysisRecord record_from_json(const json& j) {
  if (j.at("version").get<std::string>() != kSchemaVersion) {
    throw Error("unsupported record version");
  }
  AnalysisRecord rec;
  rec.generators = j.at("generators").get<std::vector<Value>>();

  const auto& inv = j.at("invariants");
  rec.invariants.multiplicity = inv.at("multiplicity").get<Value>();
  rec.invariants.embdim = inv.at("embdim").get<int>();
  rec.invariants.reduction_number = inv.at("reduction_number").get<int>();
  rec.invariants.n_reduction = inv.at("n_reduction").get<Value>();
  rec.invariants.frobenius = inv.at("frobenius").get<Value>();
  rec.invariants.conductor = inv.at("conductor").get<Value>();
  rec.invariants.genus = inv.at("genus").get<Value>();
  rec.invariants.type = inv.at("type").get<int>();
  rec.invariants.pseudo_frobenius = inv.at("pseudo_frobenius").get<std::vector<Value>>();
  rec.invariants.is_symmetric = inv.at("is_symmetric").get<bool>();

  rec.apery_table.rows = j.at("apery_table").get<std::vector<std::vector<Value>>>();
  rec.apery_table.multiplicity = rec.generators.front();
  rec.apery_table.reduction_number = static_cast<int>(rec.apery_table.rows.size()) - 1;

  const auto& cone = j.at("tangent_cone");
  rec.tangent_cone.free_shifts = cone.at("free_shifts").get<std::vector<int>>();
  for (const auto& t : cone.at("torsion")) {
    rec.tangent_cone.torsion_summands.push_back(
        TorsionSummand{t.at("shift").get<int>(), t.at("order").get<int>(),
                       t.at("generator_value").get<Value>()});
    rec.tangent_cone.torsion_length += t.at("order").get<int>();
  }

  rec.hilbert = j.at("hilbert").get<std::vector<int>>();
  rec.hilbert_stable = j.at("hilbert_stable").get<int>();

  for (const auto& t : j.at("torsion_set")) {
    rec.torsion.push_back(TorsionElement{t.at("value").get<Value>(), t.at("ord").get<int>(),
                                         t.at("tord").get<int>()});
  }

  const auto& cls = j.at("classification");
  rec.classification.is_cm = cls.at("is_cm").get<bool>();
  rec.classification.is_gorenstein_ring = cls.at("is_gorenstein_ring").get<bool>();
  rec.classification.is_m_pure = cls.at("is_m_pure").get<bool>();
  rec.classification.is_gorenstein_tangent_cone =
      cls.at("is_gorenstein_tangent_cone").get<bool>();
  rec.classification.buchsbaum_index = cls.at("buchsbaum_index").get<int>();
  rec.classification.torsion_length = cls.at("torsion_length").get<int>();
  if (!cls.at("embdim3_case").is_null()) {
    rec.classification.embdim3_case =
        embdim3_case_from_string(cls.at("embdim3_case").get<std::string>());
    if (!rec.classification.embdim3_case) throw Error("unknown embdim3 case tag");
  }

  const auto& flags = j.at("flags");
  if (flags.at("balanced_vacuous").get<bool>()) {
    rec.flags.balanced = BalancedStatus::vacuously_balanced;
  } else if (flags.at("balanced").get<bool>()) {
    rec.flags.balanced = BalancedStatus::balanced;
  } else {
    rec.flags.balanced = BalancedStatus::not_balanced;
  }
  rec.flags.cyclic_1_torsion = flags.at("cyclic_1_torsion").get<bool>();
  rec.flags.hilbert_nondecreasing = flags.at("hilbert_nondecreasing").get<bool>();
  rec.flags.null_products = flags.at("null_products").get<bool>();
  rec.flags.all_tord_one = flags.at("all_tord_one").get<bool>();
  return rec;
}

std::string render_apery_table(const AperyTable& table, ColumnOrder order) {
  const std::size_t cols = table.rows.front().size();
  std::vector<std::size_t> perm(cols);
  std::iota(perm.begin(), perm.end(), 0);
  if (order == ColumnOrder::paper) {
    std::sort(perm.begin(), perm.end(), [&table](std::size_t a, std::size_t b) {
      return table.rows[0][a] < table.rows[0][b];
    });
  }

  std::vector<std::string> labels;
  for (std::size_t m = 0; m < table.rows.size(); ++m) {
    if (m == 0) {
      labels.emplace_back("Ap(S)");
    } else if (m == 1) {
      labels.emplace_back("Ap(M)");
    } else {
      labels.emplace_back("Ap(" + std::to_string(m) + "M)");
    }
  }
  std::size_t label_width = 0;
  for (const auto& l : labels) label_width = std::max(label_width, l.size());
  std::size_t cell_width = 1;
  for (const auto& row : table.rows) {
    for (Value v : row) cell_width = std::max(cell_width, std::to_string(v).size());
  }

  std::ostringstream out;
  for (std::size_t m = 0; m < table.rows.size(); ++m) {
    out << labels[m] << std::string(label_width - labels[m].size(), ' ') << " |";
    for (std::size_t c : perm) {
      const std::string cell = std::to_string(table.rows[m][c]);
      out << ' ' << std::string(cell_width - cell.size(), ' ') << cell;
    }
    out << '\n';
  }
  return out.str();
}

std::string csv_header() {
  return "generators,e,b,r,torsion_length,buchsbaum_index,is_cm,is_symmetric,gorenstein_cone,"
         "hilbert";
}

namespace {

template <typename T>
std::string join(const std::vector<T>& values, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

}  // namespace

std::string csv_line(const AnalysisRecord& rec) {
  std::ostringstream out;
  out << join(rec.generators, " ") << ',' << rec.invariants.multiplicity << ','
      << rec.invariants.embdim << ',' << rec.invariants.reduction_number << ','
      << rec.classification.torsion_length << ',' << rec.classification.buchsbaum_index << ','
      << (rec.classification.is_cm ? 1 : 0) << ',' << (rec.invariants.is_symmetric ? 1 : 0)
      << ',' << (rec.classification.is_gorenstein_tangent_cone ? 1 : 0) << ','
      << join(rec.hilbert, ";");
  return out.str();
}

std::string human_report(const AnalysisRecord& rec) {
  std::ostringstream out;
  out << "S = <" << join(rec.generators, ",") << ">\n";
  const auto& inv = rec.invariants;
  out << "e = " << inv.multiplicity << "  b = " << inv.embdim << "  r = " << inv.reduction_number
      << "  rho = " << inv.n_reduction << '\n';
  out << "frobenius = " << inv.frobenius << "  conductor = " << inv.conductor
      << "  genus = " << inv.genus << "  type = " << inv.type << '\n';
  out << "pseudo-frobenius: " << join(inv.pseudo_frobenius, " ") << '\n';
  out << "symmetric: " << (inv.is_symmetric ? "yes" : "no") << '\n';
  out << "hilbert: " << join(rec.hilbert, " ") << " ->\n";

  out << "tangent cone: free shifts " << join(rec.tangent_cone.free_shifts, " ");
  if (rec.tangent_cone.torsion_summands.empty()) {
    out << " ; no torsion\n";
  } else {
    out << " ; torsion";
    for (const auto& t : rec.tangent_cone.torsion_summands) {
      out << " (shift " << t.shift << ", order " << t.nilpotency << ", gen " << t.generator_value
          << ")";
    }
    out << '\n';
  }

  if (rec.torsion.empty()) {
    out << "torsion set: empty\n";
  } else {
    out << "torsion set:";
    for (const auto& t : rec.torsion) {
      out << ' ' << t.value << " (ord " << t.ord << ", tord " << t.tord << ")";
    }
    out << '\n';
  }

  const auto& cls = rec.classification;
  out << "classification: cm=" << (cls.is_cm ? "yes" : "no")
      << " gorenstein-ring=" << (cls.is_gorenstein_ring ? "yes" : "no")
      << " m-pure=" << (cls.is_m_pure ? "yes" : "no")
      << " gorenstein-cone=" << (cls.is_gorenstein_tangent_cone ? "yes" : "no")
      << " buchsbaum-index=" << cls.buchsbaum_index
      << " torsion-length=" << cls.torsion_length;
  if (cls.embdim3_case) out << " embdim3-case=" << to_string(*cls.embdim3_case);
  out << '\n';

  const auto& f = rec.flags;
  out << "flags: balanced="
      << (f.balanced == BalancedStatus::vacuously_balanced
              ? "vacuous"
              : (f.balanced == BalancedStatus::balanced ? "yes" : "no"))
      << " cyclic-1-torsion=" << (f.cyclic_1_torsion ? "yes" : "no")
      << " hilbert-nondecreasing=" << (f.hilbert_nondecreasing ? "yes" : "no")
      << " null-products=" << (f.null_products ? "yes" : "no")
      << " all-tord-one=" << (f.all_tord_one ? "yes" : "no") << '\n';
  return out.str();
}

}  // namespace aperylab
