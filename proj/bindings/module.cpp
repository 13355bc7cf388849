#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "aperylab/io.hpp"
#include "aperylab/sweep.hpp"

namespace py = pybind11;
using namespace aperylab;

namespace {

nlohmann::ordered_json unique_betti_report_json(const std::vector<Value>& ks) {
  const auto rep = unique_betti_semigroup(ks);
  nlohmann::ordered_json j;
  j["ks"] = rep.ks;
  j["generators"] = rep.semigroup.generators();
  j["predicted_apery"] = rep.predicted_apery;
  j["predicted_reduction"] = rep.predicted_reduction;
  j["checks"] = {{"minimal_system", rep.minimal_system_ok},
                 {"apery", rep.apery_ok},
                 {"symmetric", rep.symmetric_ok},
                 {"m_pure", rep.m_pure_ok},
                 {"gorenstein_cone", rep.gorenstein_cone_ok},
                 {"reduction", rep.reduction_ok}};
  j["all_ok"] = rep.all_ok();
  return j;
}

ColumnOrder order_from_string(const std::string& name) {
  if (name == "residue") return ColumnOrder::residue;
  if (name == "paper") return ColumnOrder::paper;
  throw Error("unknown column order '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Apéry tables, tangent cone structure, and Buchsbaum classification "
            "of numerical semigroups";

  py::register_exception<Error>(m, "SemigroupError", PyExc_ValueError);

  py::class_<NumericalSemigroup>(m, "Semigroup")
      .def(py::init<std::vector<Value>>(), py::arg("generators"),
           "Builds the semigroup and reduces the input to its minimal system.")
      .def_property_readonly("generators", &NumericalSemigroup::generators)
      .def_property_readonly("multiplicity", &NumericalSemigroup::multiplicity)
      .def_property_readonly("embdim", &NumericalSemigroup::embdim)
      .def_property_readonly("frobenius", &NumericalSemigroup::frobenius)
      .def_property_readonly("conductor", &NumericalSemigroup::conductor)
      .def("__contains__", &NumericalSemigroup::contains)
      .def("contains", &NumericalSemigroup::contains, py::arg("s"))
      .def(
          "ord", [](const NumericalSemigroup& s, Value v) { return s.ord(v); }, py::arg("s"),
          "Largest coefficient total over representations; None outside the semigroup.")
      .def(
          "apery_set",
          [](const NumericalSemigroup& s, int level, std::optional<Value> modulus) {
            return modulus ? s.apery_set(level, *modulus).values : s.apery_set(level).values;
          },
          py::arg("level") = 0, py::arg("modulus") = std::nullopt)
      .def("apery_table", [](const NumericalSemigroup& s) { return build_table(s).rows; })
      .def("reduction_number", &NumericalSemigroup::reduction_number)
      .def(
          "canonical_max_expression",
          [](const NumericalSemigroup& s, Value v) {
            return s.canonical_max_expression(v).coefficients;
          },
          py::arg("s"))
      .def("hilbert", [](const NumericalSemigroup& s) { return hilbert_function(s); })
      .def(
          "torsion",
          [](const NumericalSemigroup& s) {
            std::vector<std::tuple<Value, int, int>> out;
            for (const auto& t : torsion_set(s)) out.emplace_back(t.value, t.ord, t.tord);
            return out;
          },
          "Torsion values as (value, ord, tord) triples.")
      .def("buchsbaum_index", [](const NumericalSemigroup& s) { return buchsbaum_index(s); })
      .def(
          "is_k_buchsbaum", [](const NumericalSemigroup& s, int k) { return is_k_buchsbaum(s, k); },
          py::arg("k"))
      .def(
          "render_table",
          [](const NumericalSemigroup& s, const std::string& order) {
            return render_apery_table(build_table(s), order_from_string(order));
          },
          py::arg("order") = "residue")
      .def("analyze_json",
           [](const NumericalSemigroup& s) { return record_to_json(analyze(s)).dump(); })
      .def("__repr__", [](const NumericalSemigroup& s) {
        std::string out = "Semigroup([";
        for (std::size_t i = 0; i < s.generators().size(); ++i) {
          if (i) out += ", ";
          out += std::to_string(s.generators()[i]);
        }
        return out + "])";
      });

  m.def(
      "analyze_json",
      [](const std::vector<Value>& gens) {
        return record_to_json(analyze(NumericalSemigroup(gens))).dump();
      },
      py::arg("generators"));

  m.def(
      "unique_betti_json",
      [](const std::vector<Value>& ks) { return unique_betti_report_json(ks).dump(); },
      py::arg("ks"));

  m.def(
      "render_table",
      [](const std::vector<Value>& gens, const std::string& order) {
        return render_apery_table(build_table(NumericalSemigroup(gens)),
                                  order_from_string(order));
      },
      py::arg("generators"), py::arg("order") = "residue");

  m.def(
      "sweep_json",
      [](std::optional<int> embdim, Value max_gen, std::optional<Value> min_mult,
         std::optional<Value> max_mult, const std::vector<std::string>& filters,
         std::uint64_t ceiling, int threads, bool include_records) {
        SweepSpec spec;
        spec.embdim = embdim;
        spec.max_generator = max_gen;
        spec.min_multiplicity = min_mult;
        spec.max_multiplicity = max_mult;
        spec.filters = filters;
        spec.ceiling = ceiling;
        spec.threads = threads;
        const auto result = run_sweep(spec);
        nlohmann::ordered_json j;
        j["summary"] = sweep_summary_json(result);
        if (include_records) {
          j["records"] = nlohmann::ordered_json::array();
          for (const auto& rec : result.records) j["records"].push_back(record_to_json(rec));
        }
        return j.dump();
      },
      py::arg("embdim") = std::nullopt, py::arg("max_gen") = 0,
      py::arg("min_mult") = std::nullopt, py::arg("max_mult") = std::nullopt,
      py::arg("filters") = std::vector<std::string>{}, py::arg("ceiling") = 10'000'000,
      py::arg("threads") = 1, py::arg("include_records") = false);
}
