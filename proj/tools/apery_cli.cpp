// Command-line front end: analyze single semigroups, sweep generator boxes,
// and check the unique-Betti-element construction.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "aperylab/io.hpp"
#include "aperylab/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitInvalidSemigroup = 3;
constexpr int kExitContradiction = 4;
constexpr int kExitCeiling = 5;

std::vector<aperylab::Value> parse_int_list(const std::string& text) {
  std::vector<aperylab::Value> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t next = text.find(',', pos);
    if (next == std::string::npos) next = text.size();
    const std::string token = text.substr(pos, next - pos);
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(token, &used);
    } catch (const std::exception&) {
      throw aperylab::Error("cannot parse integer '" + token + "'");
    }
    if (used != token.size() || v <= 0) {
      throw aperylab::Error("cannot parse positive integer '" + token + "'");
    }
    out.push_back(v);
    pos = next + 1;
  }
  if (out.empty()) throw aperylab::Error("empty integer list");
  return out;
}

int analyze_one(const std::string& gen_list, bool as_json, bool with_table,
                aperylab::ColumnOrder order) {
  std::vector<aperylab::Value> gens;
  try {
    gens = parse_int_list(gen_list);
  } catch (const aperylab::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    const aperylab::NumericalSemigroup s(gens);
    const auto rec = aperylab::analyze(s);
    if (as_json) {
      std::cout << aperylab::record_to_json(rec).dump() << '\n';
    } else {
      std::cout << aperylab::human_report(rec);
      if (with_table) std::cout << aperylab::render_apery_table(rec.apery_table, order);
    }
    return kExitOk;
  } catch (const aperylab::GcdNotOne& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalidSemigroup;
  } catch (const aperylab::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

int run_analyze(const std::string& gen_list, const std::string& batch_path, bool as_json,
                bool with_table, const std::string& order_name) {
  aperylab::ColumnOrder order = aperylab::ColumnOrder::residue;
  if (order_name == "paper") {
    order = aperylab::ColumnOrder::paper;
  } else if (order_name != "residue") {
    std::cerr << "error: unknown column order '" << order_name << "'\n";
    return kExitUsage;
  }

  if (batch_path.empty()) return analyze_one(gen_list, as_json, with_table, order);

  std::ifstream in(batch_path);
  if (!in) {
    std::cerr << "error: cannot open batch file '" << batch_path << "'\n";
    return kExitUsage;
  }
  std::string line;
  int worst = kExitOk;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r')) {
      line.pop_back();
    }
    std::size_t start = 0;
    while (start < line.size() && (line[start] == ' ' || line[start] == '\t')) ++start;
    line.erase(0, start);
    if (line.empty()) continue;
    worst = std::max(worst, analyze_one(line, as_json, with_table, order));
  }
  return worst;
}

int run_sweep_cmd(const aperylab::SweepSpec& spec, const std::string& out_path,
                  const std::string& csv_path) {
  aperylab::SweepResult result;
  try {
    result = aperylab::run_sweep(spec);
  } catch (const aperylab::BoundTooLarge& e) {
    std::cerr << "error: " << e.what() << " (use --force to override)\n";
    return kExitCeiling;
  } catch (const aperylab::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  const auto emit_record = [&spec](const aperylab::AnalysisRecord& rec) {
    auto j = aperylab::record_to_json(rec);
    if (spec.emit.empty()) return j;
    nlohmann::ordered_json picked;
    picked["version"] = j["version"];
    picked["generators"] = j["generators"];
    for (const auto& field : spec.emit) {
      if (j.contains(field)) picked[field] = j[field];
    }
    return picked;
  };

  std::ostream* records_out = &std::cout;
  std::ofstream file_out;
  if (!out_path.empty()) {
    file_out.open(out_path);
    if (!file_out) {
      std::cerr << "error: cannot open '" << out_path << "' for writing\n";
      return kExitUsage;
    }
    records_out = &file_out;
  }
  for (const auto& rec : result.records) {
    *records_out << emit_record(rec).dump() << '\n';
  }
  if (file_out.is_open()) file_out.close();

  if (!csv_path.empty()) {
    std::ofstream csv(csv_path);
    if (!csv) {
      std::cerr << "error: cannot open '" << csv_path << "' for writing\n";
      return kExitUsage;
    }
    csv << aperylab::csv_header() << '\n';
    for (const auto& rec : result.records) csv << aperylab::csv_line(rec) << '\n';
  }

  // Summary goes to stdout when the records went to a file, otherwise to the
  // diagnostic stream so the JSONL on stdout stays machine-readable.
  const std::string summary = aperylab::sweep_summary_json(result).dump();
  if (!out_path.empty()) {
    std::cout << summary << '\n';
  } else {
    std::cerr << summary << '\n';
  }

  return result.contradiction_events.empty() ? kExitOk : kExitContradiction;
}

int run_unique_betti(const std::string& k_list) {
  std::vector<aperylab::Value> ks;
  try {
    ks = parse_int_list(k_list);
  } catch (const aperylab::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    const auto rep = aperylab::unique_betti_semigroup(ks);
    std::cout << "S = <";
    for (std::size_t i = 0; i < rep.semigroup.generators().size(); ++i) {
      std::cout << (i ? "," : "") << rep.semigroup.generators()[i];
    }
    std::cout << ">\n";
    const auto verdict = [](bool ok) { return ok ? "ok" : "VIOLATION"; };
    std::cout << "minimal system: " << verdict(rep.minimal_system_ok) << '\n';
    std::cout << "apery box (" << rep.predicted_apery.size()
              << " elements): " << verdict(rep.apery_ok) << '\n';
    std::cout << "symmetric: " << verdict(rep.symmetric_ok) << '\n';
    std::cout << "m-pure: " << verdict(rep.m_pure_ok) << '\n';
    std::cout << "gorenstein tangent cone: " << verdict(rep.gorenstein_cone_ok) << '\n';
    std::cout << "reduction number = " << rep.predicted_reduction << ": "
              << verdict(rep.reduction_ok) << '\n';
    return rep.all_ok() ? kExitOk : kExitContradiction;
  } catch (const aperylab::NotCoprime& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalidSemigroup;
  } catch (const aperylab::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Apéry tables, tangent cone structure, and Buchsbaum classification "
               "of numerical semigroups"};
  app.require_subcommand(1);

  std::string gen_list;
  std::string batch_path;
  bool as_json = false;
  bool with_table = false;
  std::string order_name = "residue";
  auto* analyze_cmd = app.add_subcommand("analyze", "Full report for one semigroup");
  analyze_cmd->add_option("generators", gen_list, "Comma-separated generators, e.g. 4,11,29");
  analyze_cmd->add_option("--batch", batch_path,
                          "File with one generator list per line; '#' starts a comment");
  analyze_cmd->add_flag("--json", as_json, "Emit one JSON record per semigroup");
  analyze_cmd->add_flag("--table", with_table, "Render the Apéry table");
  analyze_cmd->add_option("--column-order", order_name, "Table column order: residue|paper")
      ->capture_default_str();

  aperylab::SweepSpec spec;
  int embdim = 0;
  long long max_gen = 0;
  long long min_mult = 0;
  long long max_mult = 0;
  bool force = false;
  std::string out_path;
  std::string csv_path;
  auto* sweep_cmd = app.add_subcommand("sweep", "Enumerate semigroups and batch-classify them");
  sweep_cmd->add_option("--embdim", embdim, "Fix the embedding dimension");
  sweep_cmd->add_option("--max-gen", max_gen, "Largest allowed generator")->required();
  sweep_cmd->add_option("--min-mult", min_mult, "Smallest allowed multiplicity");
  sweep_cmd->add_option("--max-mult", max_mult, "Largest allowed multiplicity");
  sweep_cmd->add_option("--filter", spec.filters,
                        "Predicate filter, repeatable (conjunction); see docs for names");
  sweep_cmd->add_option("--emit", spec.emit,
                        "Top-level record fields to keep in the JSONL output");
  sweep_cmd->add_option("--out", out_path, "Write JSONL records here instead of stdout");
  sweep_cmd->add_option("--csv", csv_path, "Also write a CSV summary of matched records");
  sweep_cmd->add_option("--ceiling", spec.ceiling, "Candidate-tuple guard")
      ->capture_default_str();
  sweep_cmd->add_flag("--force", force, "Lift the candidate-tuple guard");
  sweep_cmd->add_option("--threads", spec.threads, "Worker threads")->capture_default_str();

  std::string k_list;
  auto* ub_cmd = app.add_subcommand(
      "unique-betti", "Build n_i = prod(k_j, j != i) and verify its predicted structure");
  ub_cmd->add_option("ks", k_list, "Strictly decreasing pairwise-coprime integers > 1, e.g. 5,3,2")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (analyze_cmd->parsed()) {
    if (gen_list.empty() && batch_path.empty()) {
      std::cerr << "error: need a generator list or --batch FILE\n";
      return kExitUsage;
    }
    return run_analyze(gen_list, batch_path, as_json, with_table, order_name);
  }

  if (sweep_cmd->parsed()) {
    if (embdim > 0) spec.embdim = embdim;
    spec.max_generator = max_gen;
    if (min_mult > 0) spec.min_multiplicity = min_mult;
    if (max_mult > 0) spec.max_multiplicity = max_mult;
    if (force) spec.ceiling = std::uint64_t{1} << 62;
    return run_sweep_cmd(spec, out_path, csv_path);
  }

  return run_unique_betti(k_list);
}
