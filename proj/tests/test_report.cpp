// The composed pipeline: verdict semantics, the worked-example replay with
// its abort hook, batch evaluation, and deterministic rendering.

#include "doctest.h"

#include "drg/report.hpp"

#include "json.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <stdexcept>

using namespace drg;

namespace {

FeasibilityReport check_line(const std::string& text) { return run_checks_on_line(text); }

const CheckResult* find_row(const FeasibilityReport& r, const std::string& id) {
  for (const auto& row : r.checks)
    if (row.id == id) return &row;
  return nullptr;
}

int count_fails(const FeasibilityReport& r) {
  int n = 0;
  for (const auto& row : r.checks)
    if (row.status == CheckStatus::Fail) ++n;
  return n;
}

}  // namespace

TEST_CASE("pinned array: every check runs, ladder consistency fails") {
  FeasibilityReport r = check_line("{80,54,12;1,6,60}");
  CHECK(r.verdict == Verdict::InfeasibleIfGeometric);
  CHECK(r.checks.size() == 11);
  CHECK(r.array.has_value());
  CHECK(r.spectrum.has_value());

  const CheckResult* kb = find_row(r, "geom_kb");
  REQUIRE(kb != nullptr);
  CHECK(kb->status == CheckStatus::Fail);
  CHECK(kb->witnesses.at("tau_2") == "2");
  CHECK(kb->witnesses.at("psi_1") == "3");
  CHECK(count_fails(r) == 2);  // geom_kb + the coclique-size cap at s = 6

  const CheckResult* claw = find_row(r, "claw_local");
  REQUIRE(claw != nullptr);
  CHECK(claw->status == CheckStatus::Equality);  // first claw row is s = 5
}

TEST_CASE("clean arrays come back NO_OBSTRUCTION") {
  FeasibilityReport cube = check_line("{3,2,1;1,2,3}");
  CHECK(cube.verdict == Verdict::NoObstruction);
  CHECK(cube.checks.size() == 10);
  CHECK(count_fails(cube) == 0);

  FeasibilityReport clebsch = check_line("{5,4;1,2}");
  CHECK(clebsch.verdict == Verdict::NoObstruction);
  CHECK(count_fails(clebsch) == 0);
}

TEST_CASE("basic failure stops the pipeline") {
  FeasibilityReport r = check_line("{4,2;1,3}");  // n = 23/3
  CHECK(r.verdict == Verdict::Infeasible);
  CHECK(r.checks.size() == 4);  // just the basic battery
  CHECK(!r.spectrum.has_value());
  const CheckResult* row = find_row(r, "basic_k_integrality");
  REQUIRE(row != nullptr);
  CHECK(row->status == CheckStatus::Fail);
}

TEST_CASE("non-integral multiplicities alone sink an array") {
  FeasibilityReport r = check_line("{8,5;1,1}");
  CHECK(r.verdict == Verdict::Infeasible);
  CHECK(!r.spectrum.has_value());
  const CheckResult* row = find_row(r, "multiplicity_integrality");
  REQUIRE(row != nullptr);
  CHECK(row->status == CheckStatus::Fail);
}

TEST_CASE("unconditional claw failure is INFEASIBLE and keeps executing") {
  FeasibilityReport r = check_line("{22,16;1,1}");
  CHECK(r.verdict == Verdict::Infeasible);

  const CheckResult* claw = find_row(r, "claw_local");
  REQUIRE(claw != nullptr);
  CHECK(claw->status == CheckStatus::Fail);
  CHECK(claw->witnesses.at("s") == "4");
  CHECK(claw->witnesses.at("lhs") == "1/3");
  CHECK(claw->witnesses.at("forced_coclique_size") == "4");

  // the geometric rows are still present (NOT_APPLICABLE: zeta = 25/3)
  const CheckResult* geo = find_row(r, "geom_solve");
  REQUIRE(geo != nullptr);
  CHECK(geo->status == CheckStatus::NotApplicable);
  CHECK(geo->witnesses.at("reason") == "clique size non-integral");

  // same verdict for the irrational-spectrum cousin
  FeasibilityReport r2 = check_line("{5,3,1;1,1,5}");
  CHECK(r2.verdict == Verdict::Infeasible);
  const CheckResult* claw2 = find_row(r2, "claw_local");
  REQUIRE(claw2 != nullptr);
  CHECK(claw2->witnesses.at("forced_coclique_size") == "3");
  const CheckResult* geo2 = find_row(r2, "geom_solve");
  REQUIRE(geo2 != nullptr);
  CHECK(geo2->witnesses.at("reason") == "irrational smallest eigenvalue");
}

TEST_CASE("a realized but non-geometric array gets the conditional verdict") {
  FeasibilityReport r = check_line("{6,1;1,6}");  // 4 pairs, cocktail-party
  CHECK(r.verdict == Verdict::InfeasibleIfGeometric);
  const CheckResult* kb = find_row(r, "geom_kb");
  REQUIRE(kb != nullptr);
  CHECK(kb->status == CheckStatus::Fail);
  CHECK(count_fails(r) == 1);  // nothing else fails
}

TEST_CASE("parse failures become ERROR reports, not exceptions") {
  FeasibilityReport r = check_line("nope");
  CHECK(r.verdict == Verdict::Error);
  CHECK(r.input == "nope");
  CHECK(!r.array.has_value());
  CHECK(!r.derived.has_value());
  CHECK(!r.spectrum.has_value());
  REQUIRE(r.checks.size() == 1);
  CHECK(r.checks[0].id == "parse");
  CHECK(r.checks[0].status == CheckStatus::Fail);
  CHECK(r.checks[0].witnesses.count("position") == 1);
}

TEST_CASE("max_s option extends the claw scan") {
  CheckOptions opt;
  opt.max_s = Int(10);

  // all-pass scan: a single summary row reporting how far it looked
  FeasibilityReport r = run_checks_on_line("{4,3,2,1;1,2,3,4}", opt);
  const CheckResult* claw = find_row(r, "claw_local");
  REQUIRE(claw != nullptr);
  CHECK(claw->status == CheckStatus::Pass);
  CHECK(claw->witnesses.at("s_max") == "10");

  // extending past the forced coclique size can surface a FAIL that is only
  // a size cap (here: the local graph has 3 vertices, so no 4-coclique);
  // the verdict must stay NO_OBSTRUCTION
  FeasibilityReport p = run_checks_on_line("{3,2;1,1}", opt);
  const CheckResult* row = find_row(p, "claw_local");
  REQUIRE(row != nullptr);
  CHECK(row->status == CheckStatus::Equality);  // s = 3 is extremal
  CHECK(row->witnesses.at("s") == "3");
  CHECK(p.verdict == Verdict::NoObstruction);
}

TEST_CASE("replay: all ten steps match their pins") {
  ReplayResult res = replay_paper();
  CHECK(res.ok);
  CHECK(res.diagnostic.empty());
  REQUIRE(res.steps.size() == 10);

  const char* titles[10] = {
      "core parameters",       "spectrum",          "clique bounds",
      "local eigenvalue floor", "local claw bound",  "equality-case counts",
      "clique interlacing scan", "coclique mu mass", "clique ladder",
      "ladder consistency"};
  for (int i = 0; i < 10; ++i) {
    CAPTURE(i);
    CHECK(res.steps[i].number == i + 1);
    CHECK(res.steps[i].title == titles[i]);
    CHECK(res.steps[i].ok);
    CHECK(res.steps[i].expected == res.steps[i].actual);
  }
  CHECK(res.steps[0].expected == "n=945 a=(25,62,20) k=(80,720,144)");
  CHECK(res.steps[1].expected == "80^1 26^80 5^144 -4^720");
  CHECK(res.steps[2].expected == "bound=21 local=20");
  CHECK(res.steps[3].expected == "-3");
  CHECK(res.steps[4].expected == "s=5 EQUALITY; s=6 FAIL lhs=76/15");
  CHECK(res.steps[5].expected == "N(2)=33 N(3)=17 N(4)=6");
  CHECK(res.steps[6].expected == "55/55 FAIL");
  CHECK(res.steps[7].expected == "24");
  CHECK(res.steps[8].expected == "zeta=21 tau=(1,2,4) psi=(1,3,15)");
  CHECK(res.steps[9].expected == "tau_2=2 < psi_1=3: FAIL");

  // success upgrades the verdict through the certified premise row
  CHECK(res.report.verdict == Verdict::Infeasible);
  CHECK(res.report.checks.size() == 72);
  const CheckResult* premise = nullptr;
  for (const auto& row : res.report.checks)
    if (row.id == "geometric_premise") premise = &row;
  REQUIRE(premise != nullptr);
  CHECK(premise->status == CheckStatus::Pass);

  // determinism: two replays render byte-identically
  CHECK(replay_to_json(res) == replay_to_json(replay_paper()));
}

TEST_CASE("replay aborts on the first mismatching step") {
  ReplayOptions opt;
  opt.expected_override[3] = "bound=99 local=98";
  ReplayResult res = replay_paper(opt);
  CHECK(!res.ok);
  REQUIRE(res.steps.size() == 3);
  CHECK(res.steps[2].ok == false);
  CHECK(res.steps[2].actual == "bound=21 local=20");
  CHECK(res.diagnostic.find("step 3") != std::string::npos);
  CHECK(res.diagnostic.find("clique bounds") != std::string::npos);
  CHECK(res.report.verdict == Verdict::Error);

  // a mismatch on the last step still yields all 10 steps but not ok
  ReplayOptions opt10;
  opt10.expected_override[10] = "tau_2=3 >= psi_1=3";
  ReplayResult res10 = replay_paper(opt10);
  CHECK(!res10.ok);
  CHECK(res10.steps.size() == 10);
  CHECK(res10.report.verdict == Verdict::Error);
}

TEST_CASE("batch: comments, blanks, and bad lines never abort") {
  std::vector<std::string> lines = {
      "# a comment line",
      "",
      "{80,54,12;1,6,60}",
      "{3,2,1;1,2,3}   # trailing comment",
      "nope",
      "   ",
      "{4,2;1,3}",
  };
  BatchResult b = batch_run_lines(lines);
  REQUIRE(b.reports.size() == 4);
  CHECK(b.reports[0].verdict == Verdict::InfeasibleIfGeometric);
  CHECK(b.reports[1].verdict == Verdict::NoObstruction);
  CHECK(b.reports[2].verdict == Verdict::Error);
  CHECK(b.reports[3].verdict == Verdict::Infeasible);

  // every verdict name is present in the summary, even when zero
  REQUIRE(b.verdict_counts.size() == 4);
  CHECK(b.verdict_counts.at("NO_OBSTRUCTION") == 1);
  CHECK(b.verdict_counts.at("INFEASIBLE") == 1);
  CHECK(b.verdict_counts.at("INFEASIBLE_IF_GEOMETRIC") == 1);
  CHECK(b.verdict_counts.at("ERROR") == 1);

  BatchResult empty = batch_run_lines({});
  CHECK(empty.reports.empty());
  REQUIRE(empty.verdict_counts.size() == 4);
  for (const auto& [name, count] : empty.verdict_counts) {
    CAPTURE(name);
    CHECK(count == 0);
  }
}

TEST_CASE("batch: parallel evaluation is byte-identical to serial") {
  std::vector<std::string> lines;
  for (int i = 0; i < 30; ++i) {
    lines.push_back("{3,2,1;1,2,3}");
    lines.push_back("{80,54,12;1,6,60}");
    lines.push_back("{4,2;1,3}");
    lines.push_back("bad line " + std::to_string(i));
  }
  BatchOptions serial;
  serial.workers = 1;
  BatchOptions parallel;
  parallel.workers = 4;
  CHECK(batch_to_json(batch_run_lines(lines, serial)) ==
        batch_to_json(batch_run_lines(lines, parallel)));
  CHECK(batch_to_text(batch_run_lines(lines, serial)) ==
        batch_to_text(batch_run_lines(lines, parallel)));
}

TEST_CASE("batch: file input") {
  const char* path = "batch_input_test.txt";
  {
    std::ofstream f(path);
    f << "# header\n{3,2,1;1,2,3}\n\n{2,1;1,1}\n";
  }
  BatchResult b = batch_run(path);
  std::remove(path);
  REQUIRE(b.reports.size() == 2);
  CHECK(b.reports[0].verdict == Verdict::NoObstruction);
  CHECK(b.reports[1].verdict == Verdict::NoObstruction);

  CHECK_THROWS_AS(batch_run("definitely_missing_file.txt"), std::runtime_error);
}

TEST_CASE("JSON output is stable, parseable, and schema-shaped") {
  FeasibilityReport r = check_line("{80,54,12;1,6,60}");
  std::string js = report_to_json(r);
  CHECK(report_to_json(check_line("{80,54,12;1,6,60}")) == js);  // deterministic

  auto j = nlohmann::ordered_json::parse(js);
  CHECK(j.dump(2) + "\n" == js);  // canonical indentation round-trip

  // key order: array, n, spectrum, checks, verdict
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"array", "n", "spectrum", "checks", "verdict"});
  CHECK(j["n"] == "945");
  CHECK(j["verdict"] == "INFEASIBLE_IF_GEOMETRIC");
  CHECK(j["array"]["b"][0] == "80");
  CHECK(j["array"]["c"][2] == "60");
  CHECK(j["spectrum"].size() == 4);
  CHECK(j["spectrum"][0]["value"] == "80");
  CHECK(j["spectrum"][0]["multiplicity"] == 1);
  CHECK(j["checks"].size() == 11);
  CHECK(j["checks"][0].contains("id"));
  CHECK(j["checks"][0].contains("status"));
  CHECK(j["checks"][0].contains("witnesses"));
  CHECK(j["checks"][0].contains("message"));

  // ERROR reports keep the offending input and null out structure
  auto e = nlohmann::ordered_json::parse(report_to_json(check_line("garbage")));
  CHECK(e["array"].is_null());
  CHECK(e["input"] == "garbage");
  CHECK(e["n"].is_null());
  CHECK(e["spectrum"].is_null());
  CHECK(e["verdict"] == "ERROR");

  // irrational eigenvalues encode as minimal polynomial + enclosure
  auto p = nlohmann::ordered_json::parse(report_to_json(check_line("{2,1;1,1}")));
  auto& val = p["spectrum"][1]["value"];
  REQUIRE(val.is_object());
  CHECK(val.contains("minpoly"));
  CHECK(val.contains("interval"));
  CHECK(val["minpoly"].size() == 3);  // x^2 + x - 1: three coefficients
}

TEST_CASE("text output spot checks") {
  std::string t = report_to_text(check_line("{80,54,12;1,6,60}"));
  CHECK(t.find("{80,54,12;1,6,60}") != std::string::npos);
  CHECK(t.find("80^1 26^80 5^144 -4^720") != std::string::npos);
  CHECK(t.find("INFEASIBLE_IF_GEOMETRIC") != std::string::npos);
  CHECK(t.find("geom_kb") != std::string::npos);

  std::string bad = report_to_text(check_line("junk"));
  CHECK(bad.find("input:    junk") != std::string::npos);
  CHECK(bad.find("ERROR") != std::string::npos);

  std::string rep = replay_to_text(replay_paper());
  CHECK(rep.find("all 10 steps match their pinned values") != std::string::npos);
  CHECK(rep.find("INFEASIBLE") != std::string::npos);

  ReplayOptions opt;
  opt.expected_override[2] = "wrong";
  std::string ab = replay_to_text(replay_paper(opt));
  CHECK(ab.find("ABORT") != std::string::npos);
  CHECK(ab.find("MISMATCH") != std::string::npos);

  std::string bt = batch_to_text(batch_run_lines({"{3,2,1;1,2,3}", "junk"}));
  CHECK(bt.find("summary:") != std::string::npos);
  CHECK(bt.find("total=2") != std::string::npos);
}
