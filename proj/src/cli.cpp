#include "clusterghz/cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "clusterghz/bell.hpp"
#include "clusterghz/cluster_state.hpp"
#include "clusterghz/ghz_forms.hpp"
#include "clusterghz/tables.hpp"

namespace clusterghz {

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailure = 1;
constexpr int kUsageError = 2;

struct RunConfig {
  int n = 0;
  int j = 0;
  bool grand = false;
  std::string format = "json";
  bool golden = false;
  std::uint64_t seed = 20081215;  // reserved for reproducibility flags
  int limit_statevector = kDefaultStatevectorLimit;
  int limit_dense = kDefaultDenseLimit;
  int limit_lhv = kDefaultLhvLimit;
  std::string out_path;
  std::string which;
  std::string form_file;
};

// Writes to --out when given, otherwise to the attached stream.
int emit(const RunConfig& cfg, std::ostream& out, std::ostream& err,
         const std::string& text, int status) {
  if (cfg.out_path.empty()) {
    out << text;
    return status;
  }
  std::ofstream file(cfg.out_path, std::ios::binary);
  if (!file) {
    err << "error: cannot open output file '" << cfg.out_path << "'\n";
    return kUsageError;
  }
  file << text;
  return status;
}

std::string fixed9(double v) {
  if (v == 0.0) v = 0.0;  // avoid "-0.000000000"
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9f", v);
  return buf;
}

std::string form_text_line(const GhzForm& f) {
  std::string line;
  for (const auto& row : f.rows) {
    if (!line.empty()) line += " ";
    line += letters(row.word) + (row.eigenvalue > 0 ? ":+1" : ":-1");
  }
  return line;
}

int cmd_enumerate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto forms = enumerate_forms(cfg.n);
  const StateVector psi = build_cluster_state(cfg.n, cfg.limit_statevector);
  bool all_ok = true;
  for (const auto& f : forms) all_ok = all_ok && verify_contradiction(f, psi);

  std::string text;
  if (cfg.format == "json") {
    nlohmann::json doc;
    doc["n"] = cfg.n;
    doc["count"] = forms.size();
    doc["all_verified"] = all_ok;
    doc["forms"] = nlohmann::json::array();
    for (const auto& f : forms) doc["forms"].push_back(form_to_json(f));
    text = doc.dump(2) + "\n";
  } else if (cfg.format == "text") {
    text = "count " + std::to_string(forms.size()) + "\n";
    for (const auto& f : forms) text += form_text_line(f) + "\n";
  } else if (cfg.format == "csv") {
    text = "n,row1,eig1,row2,eig2,row3,eig3,row4,eig4,j,middle,reversed\n";
    for (const auto& f : forms) {
      text += std::to_string(f.n);
      for (const auto& row : f.rows)
        text += "," + letters(row.word) + "," + std::to_string(row.eigenvalue);
      text += "," + std::to_string(f.provenance.j) + "," +
              std::to_string(f.provenance.middle) + "," +
              (f.provenance.reversed ? "true" : "false") + "\n";
    }
  } else {
    err << "error: enumerate supports formats json, csv, text\n";
    return kUsageError;
  }
  return emit(cfg, out, err, text, all_ok ? kOk : kVerifyFailure);
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::ifstream file(cfg.form_file);
  if (!file) {
    err << "error: cannot read form file '" << cfg.form_file << "'\n";
    return kUsageError;
  }
  nlohmann::json doc;
  try {
    file >> doc;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed JSON: " << e.what() << "\n";
    return kUsageError;
  }
  const GhzForm form = form_from_json(doc);
  const StateVector psi = build_cluster_state(form.n, cfg.limit_statevector);

  std::string text;
  for (const auto& row : form.rows) {
    int actual = 0;
    if (eigenstate_check(row.word, psi, +1)) actual = +1;
    else if (eigenstate_check(row.word, psi, -1)) actual = -1;
    text += "row " + letters(row.word) + " expected " +
            (row.eigenvalue > 0 ? "+1" : "-1") + " actual " +
            (actual == 0 ? std::string("none")
                         : (actual > 0 ? std::string("+1") : std::string("-1"))) +
            (actual == row.eigenvalue ? " ok" : " MISMATCH") + "\n";
  }
  const bool ok = verify_contradiction(form, psi);
  text += ok ? "contradiction verified\n" : "verification FAILED\n";
  return emit(cfg, out, err, text, ok ? kOk : kVerifyFailure);
}

nlohmann::json terms_json(const BellOperator& b) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : b.terms)
    terms.push_back({{"coeff", t.coeff}, {"pauli", letters(t.word)}});
  return terms;
}

int cmd_bell(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const StateVector psi = build_cluster_state(cfg.n, cfg.limit_statevector);
  nlohmann::json doc;
  doc["n"] = cfg.n;
  doc["j"] = cfg.j;
  doc["grand"] = cfg.grand;

  BellOperator b;
  if (cfg.grand) {
    b = grand_bell_operator(cfg.n, cfg.j);
    if (cfg.j >= 1 && cfg.j + 2 <= cfg.n) {
      const BellOperator grouped = grand_bell_operator_grouped(cfg.n, cfg.j);
      doc["factorizations_agree"] = term_map(b) == term_map(grouped);
    }
  } else {
    b = standard_bell_operator(cfg.n, cfg.j, FamilyChoice{0, 0},
                               FamilyChoice{0, 0});
    doc["square_identity"] = bell_square_check(b, cfg.limit_dense);
    doc["lhv_party_bound"] = lhv_party_bound(b);
  }
  doc["terms"] = terms_json(b);
  doc["quantum_value"] = quantum_value(b, psi);
  if (cfg.n <= cfg.limit_lhv)
    doc["lhv_qubit_bound"] = lhv_qubit_bound(b, cfg.limit_lhv);
  else
    doc["lhv_qubit_note"] =
        "skipped: n exceeds the assignment-scan limit " +
        std::to_string(cfg.limit_lhv);
  if (cfg.n <= cfg.limit_dense) {
    const SpectralSummary s = max_eigen_check(b, psi, cfg.limit_dense);
    doc["spectrum"] = {{"max_eigenvalue", s.max_eigenvalue},
                       {"multiplicity", s.multiplicity},
                       {"matches_cluster_state", s.matches_state}};
  } else {
    doc["spectrum_note"] =
        "skipped: n exceeds the dense limit " + std::to_string(cfg.limit_dense);
  }

  std::string text;
  if (cfg.format == "json") {
    text = doc.dump(2) + "\n";
  } else if (cfg.format == "text") {
    for (const auto& [key, value] : doc.items())
      if (key != "terms") text += key + ": " + value.dump() + "\n";
    text += "terms:";
    for (const auto& t : b.terms)
      text += std::string(" ") + (t.coeff > 0 ? "+" : "-") + letters(t.word);
    text += "\n";
  } else {
    err << "error: bell supports formats json, text\n";
    return kUsageError;
  }
  return emit(cfg, out, err, text, kOk);
}

int cmd_tables(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::string rendered;
  const std::string* golden = nullptr;
  if (cfg.which == "I") {
    rendered = render_table_i();
    golden = &golden_table_i();
  } else if (cfg.which == "II") {
    rendered = render_table_ii();
    golden = &golden_table_ii();
  } else if (cfg.which == "III") {
    rendered = render_table_iii(cfg.n);
    if (cfg.golden) golden = &golden_table_iii(cfg.n);  // throws outside 4..6
  } else {
    err << "error: --which must be one of I, II, III\n";
    return kUsageError;
  }

  if (cfg.golden) {
    if (rendered == *golden)
      return emit(cfg, out, err, "golden match: table " + cfg.which + "\n", kOk);
    return emit(cfg, out, err,
                "golden MISMATCH: table " + cfg.which + "\n--- regenerated\n" +
                    rendered + "--- reference\n" + *golden,
                kVerifyFailure);
  }
  return emit(cfg, out, err, rendered, kOk);
}

int cmd_state(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const StateVector psi = build_cluster_state(cfg.n, cfg.limit_statevector);
  std::string text;
  const std::uint64_t dim = 1ull << cfg.n;
  for (std::uint64_t idx = 0; idx < dim; ++idx) {
    std::string bits;
    for (int a = cfg.n - 1; a >= 0; --a) bits += ((idx >> a) & 1) ? '1' : '0';
    const std::complex<double> amp = psi.amps[static_cast<Eigen::Index>(idx)];
    text += "|" + bits + "> " + fixed9(amp.real()) + " " + fixed9(amp.imag()) +
            "\n";
  }
  return emit(cfg, out, err, text, kOk);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"GHZ arguments and Bell operators for 1D cluster states"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "output format (json|csv|text)");
    sub->add_option("--out", cfg.out_path, "write output to a file");
    sub->add_option("--seed", cfg.seed, "seed for randomized runs (reserved)");
    sub->add_option("--limit-statevector", cfg.limit_statevector,
                    "largest n for dense state construction")
        ->check(CLI::PositiveNumber);
    sub->add_option("--limit-dense", cfg.limit_dense,
                    "largest n for dense matrices and spectra")
        ->check(CLI::PositiveNumber);
    sub->add_option("--limit-lhv", cfg.limit_lhv,
                    "largest n for qubit-level assignment scans")
        ->check(CLI::PositiveNumber);
  };

  CLI::App* enumerate =
      app.add_subcommand("enumerate", "enumerate all GHZ-argument forms");
  enumerate->add_option("--n", cfg.n, "qubit count")->required();
  add_common(enumerate);

  CLI::App* verify =
      app.add_subcommand("verify", "check a form file against the cluster state");
  verify->add_option("file", cfg.form_file, "form JSON file")->required();
  add_common(verify);

  CLI::App* bell =
      app.add_subcommand("bell", "Bell operator report for one grouping");
  bell->add_option("--n", cfg.n, "qubit count")->required();
  bell->add_option("--j", cfg.j, "grouping index (middle site j+1)")->required();
  bell->add_flag("--grand", cfg.grand, "use the grand operator");
  add_common(bell);

  CLI::App* tables = app.add_subcommand("tables", "emit an operator table");
  tables->add_option("--which", cfg.which, "table to emit: I, II or III")
      ->required();
  tables->add_option("--n", cfg.n, "chain length (table III)");
  tables->add_flag("--golden", cfg.golden, "compare against reference data");
  add_common(tables);

  CLI::App* state = app.add_subcommand("state", "dump cluster-state amplitudes");
  state->add_option("--n", cfg.n, "qubit count")->required();
  add_common(state);

  std::vector<const char*> argv;
  argv.push_back("clusterghz");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help and friends
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    if (enumerate->parsed()) return cmd_enumerate(cfg, out, err);
    if (verify->parsed()) return cmd_verify(cfg, out, err);
    if (bell->parsed()) return cmd_bell(cfg, out, err);
    if (tables->parsed()) return cmd_tables(cfg, out, err);
    if (state->parsed()) return cmd_state(cfg, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  err << "error: no subcommand\n";
  return kUsageError;
}

}  // namespace clusterghz
