// drgcheck: exact feasibility checks for distance-regular graph intersection
// arrays, plus a brute-force oracle on small named graphs.
//
// Exit codes: 0 when the run completed (verdicts are data, not failures),
// 2 on usage errors (bad flags, unknown oracle name, unreadable batch file),
// 1 on internal errors (a replay step deviating from its pinned value).

#include <cstdio>
#include <exception>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "drg/oracle.hpp"
#include "drg/report.hpp"

namespace {

void print_rows(const std::vector<drg::CheckResult>& rows) {
  for (const auto& r : rows) {
    std::printf("  %-24s %-15s %s\n", r.id.c_str(), drg::to_string(r.status),
                r.message.c_str());
    for (const auto& [k, v] : r.witnesses) std::printf("      %s = %s\n", k.c_str(), v.c_str());
  }
}

std::string verification_to_json(const drg::OracleVerification& v) {
  nlohmann::ordered_json j;
  j["name"] = v.name;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& r : v.rows) {
    nlohmann::ordered_json row;
    row["id"] = r.id;
    row["status"] = drg::to_string(r.status);
    row["witnesses"] = nlohmann::ordered_json::object();
    for (const auto& [k, val] : r.witnesses) row["witnesses"][k] = val;
    row["message"] = r.message;
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  j["all_ok"] = v.all_ok;
  return j.dump(2) + "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "drgcheck: exact feasibility checks for distance-regular graph "
      "intersection arrays"};
  app.require_subcommand(1);

  std::string array_text;
  bool check_json = false;
  long long max_s = 0;
  int precision_bits = 512;
  CLI::App* check = app.add_subcommand(
      "check", "run the full check pipeline on one intersection array");
  check->add_option("array", array_text, "intersection array, e.g. \"{80,54,12;1,6,60}\"")
      ->required();
  check->add_flag("--json", check_json, "emit the machine-readable report");
  check->add_option("--max-s", max_s, "claw-scan coclique-size limit (default: a_1 + 2)");
  check->add_option("--precision-bits", precision_bits,
                    "multiplicity certification budget (default: 512)")
      ->check(CLI::PositiveNumber);

  std::string batch_path;
  bool batch_json = false;
  int workers = 1;
  CLI::App* batch = app.add_subcommand(
      "batch", "check every array in a file (one per line, '#' comments)");
  batch->add_option("path", batch_path, "batch file")->required();
  batch->add_flag("--json", batch_json, "emit the machine-readable report");
  batch->add_option("--workers", workers, "parallel workers (output order is fixed)")
      ->check(CLI::Range(1, 256));

  bool replay_json = false;
  CLI::App* replay = app.add_subcommand(
      "replay-paper",
      "re-run the bundled ten-step non-existence chain for {80,54,12;1,6,60}");
  replay->add_flag("--json", replay_json, "emit the machine-readable report");

  CLI::App* oracle =
      app.add_subcommand("oracle", "brute-force ground truth on small named graphs");
  oracle->require_subcommand(1);
  CLI::App* oracle_list = oracle->add_subcommand("list", "list the available graph families");
  std::string graph_name;
  bool verify_json = false;
  CLI::App* oracle_verify_cmd = oracle->add_subcommand(
      "verify", "cross-check analytic results against brute force on one graph");
  oracle_verify_cmd->add_option("name", graph_name, "graph name, e.g. petersen or cube(3)")
      ->required();
  oracle_verify_cmd->add_flag("--json", verify_json, "emit the machine-readable report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // --help is a completed run; everything else is usage
  }

  try {
    if (check->parsed()) {
      drg::CheckOptions opt;
      opt.max_s = drg::Int(max_s);
      opt.precision_bits = precision_bits;
      drg::FeasibilityReport rep = drg::run_checks_on_line(array_text, opt);
      std::fputs((check_json ? drg::report_to_json(rep) : drg::report_to_text(rep)).c_str(),
                 stdout);
      return 0;
    }

    if (batch->parsed()) {
      drg::BatchOptions opt;
      opt.workers = workers;
      drg::BatchResult res;
      try {
        res = drg::batch_run(batch_path, opt);
      } catch (const std::runtime_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
      }
      std::fputs((batch_json ? drg::batch_to_json(res) : drg::batch_to_text(res)).c_str(),
                 stdout);
      return 0;
    }

    if (replay->parsed()) {
      drg::ReplayResult res = drg::replay_paper();
      std::fputs((replay_json ? drg::replay_to_json(res) : drg::replay_to_text(res)).c_str(),
                 stdout);
      if (!res.ok) {
        std::fprintf(stderr, "error: %s\n", res.diagnostic.c_str());
        return 1;
      }
      return 0;
    }

    if (oracle_list->parsed()) {
      for (const std::string& line : drg::oracle_catalog()) std::printf("%s\n", line.c_str());
      return 0;
    }

    if (oracle_verify_cmd->parsed()) {
      drg::OracleVerification v;
      try {
        v = drg::oracle_verify(graph_name);
      } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
      }
      if (verify_json) {
        std::fputs(verification_to_json(v).c_str(), stdout);
      } else {
        std::printf("oracle: %s\n", v.name.c_str());
        print_rows(v.rows);
        std::printf("%s\n", v.all_ok ? "all rows consistent"
                                     : "INCONSISTENT: some row failed");
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return 1;
  }
  return 2;  // unreachable: require_subcommand(1) guarantees a branch above
}
