#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "qdisc/cli.hpp"
#include "qdisc/output.hpp"
#include "qdisc/verify.hpp"
#include "support.hpp"

using namespace qdisc;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "qdisc");
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> result;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) result.push_back(line);
  return result;
}

std::vector<std::string> fields(const std::string& line) {
  std::vector<std::string> result;
  std::istringstream in(line);
  for (std::string f; std::getline(in, f, ',');) result.push_back(f);
  return result;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("compute at infinite acceleration") {
  const Run r = run({"compute", "--p", "1", "--ra", "0.7853981634", "--rb", "0.7853981634",
                     "--channel", "none", "--pair", "I-I"});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["d_numeric"].get<double>() == doctest::Approx(0.0138888889).epsilon(1e-10));
  CHECK(doc["branch_ok"] == 1);
  CHECK(doc["pair"] == "I-I");
  CHECK(doc["bloch"]["t"].size() == 9);
  CHECK(doc["bloch"]["x"][2].get<double>() == -0.5);
  CHECK(doc["lambda_max"].get<double>() == doctest::Approx(13.0 / 36));
}

TEST_CASE("compute at the maximally mixed point") {
  for (const char* r : {"0", "0.3", "0.785"}) {
    const Run run_result = run({"compute", "--p", "0.5", "--ra", r, "--channel", "none", "--pair", "I-I"});
    REQUIRE(run_result.code == 0);
    CHECK(nlohmann::json::parse(run_result.out)["d_numeric"].get<double>() == 0.0);
  }
}

TEST_CASE("compute reports the bit-flip disagreement") {
  const Run r = run({"compute", "--p", "1", "--ra", "0", "--rb", "0", "--channel", "bit-flip", "--k",
                     "0.5", "--pair", "I-I", "--format", "csv"});
  REQUIRE(r.code == 0);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 2);
  const auto header = fields(rows[0]);
  const auto values = fields(rows[1]);
  REQUIRE(header.size() == values.size());
  REQUIRE(header.size() == 9 + 3 + 15);
  CHECK(values[6] == "0");
  CHECK(values[7] == "0.0277777777778");
  CHECK(values[8] == "0");
  CHECK(header.back() == "t33");
}

TEST_CASE("usage errors exit with 1 and one diagnostic line") {
  const std::vector<std::vector<std::string>> bad = {
      {},
      {"compute"},
      {"compute", "--p", "1/3"},
      {"compute", "--p", "1", "--k", "1/3", "--channel", "phase-flip"},
      {"compute", "--p", "1", "--ra", "0.9"},
      {"compute", "--p", "1", "--ra", "-0.1"},
      {"compute", "--p", "1", "--ra", "nan"},
      {"compute", "--p", "1,0"},
      {"compute", "--p", "1", "--pair", "I-III"},
      {"compute", "--p", "1", "--format", "xml"},
      {"compute", "--p", "1", "--channel", "depolarizing"},
      {"sweep", "--k", "0.1", "--k-steps", "3", "--channel", "phase-flip"},
      {"sweep", "--r-steps", "0"},
      {"sweep", "--pairs", "I-I,"},
      {"sweep", "--p", "0.6", "--p-steps", "3"},
      {"verify", "--grid", "medium"},
      {"verify", "--seed", "-4"},
      {"frobnicate"},
  };
  for (const auto& args : bad) {
    const Run r = run(args);
    CAPTURE(r.err);
    CHECK(r.code == 1);
    CHECK(r.out.empty());
    CHECK(lines(r.err).size() == 1);
  }
}

TEST_CASE("help exits with 0") {
  const Run r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("sweep") != std::string::npos);
}

TEST_CASE("noiseless sweep over three Werner parameters") {
  const Run r = run({"sweep", "--channel", "none", "--p", "1.0", "--p", "0.6", "--p", "0.8",
                     "--r-steps", "101", "--pairs", "I-I,I-II,II-II"});
  REQUIRE(r.code == 0);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 1 + 3 * 101 * 3);
  CHECK(rows[0] == "channel,p,k,r_a,r_b,pair,d_numeric,d_closed_form,branch_ok");

  // p sorted ascending, then r, then pair.
  const auto first = fields(rows[1]);
  CHECK(first[1] == "0.6");
  CHECK(first[5] == "I-I");
  CHECK(std::strtod(first[6].c_str(), nullptr) == doctest::Approx(0.04 / 18).epsilon(1e-11));
  CHECK(fields(rows[2])[5] == "I-II");
  CHECK(fields(rows[3])[5] == "II-II");
  CHECK(std::strtod(fields(rows[3])[6].c_str(), nullptr) == 0.0);
  CHECK(fields(rows[4])[3] == fields(rows[4])[4]);
  CHECK(fields(rows.back())[1] == "1");
  CHECK(fields(rows.back())[3] == "0.785398163397");
}

TEST_CASE("phase-damping sweep at r = 0") {
  const Run r = run({"sweep", "--channel", "phase-damping", "--k", "0.333333", "--p", "1",
                     "--r-steps", "11", "--pairs", "I-I"});
  REQUIRE(r.code == 0);
  const auto row = fields(lines(r.out)[1]);
  CHECK(row[2] == "0.333333");
  CHECK(std::strtod(row[6].c_str(), nullptr) == doctest::Approx(0.0246914).epsilon(1e-6));
}

TEST_CASE("single-r sweep is still a CSV") {
  const Run r = run({"sweep", "--r-steps", "1", "--p", "1", "--channel", "bit-flip", "--k-steps", "3"});
  REQUIRE(r.code == 0);
  const auto rows = lines(r.out);
  CHECK(rows.size() == 1 + 3 * 4);
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(fields(rows[i])[3] == "0");
}

TEST_CASE("CSV values reproduce the computed discord") {
  GridSpec spec;
  spec.channel = ChannelKind::kPhaseFlip;
  spec.p.steps = 5;
  spec.k.steps = 5;
  spec.r.steps = 9;
  const auto records = discrepancy_map(spec);
  const Run r = run({"sweep", "--channel", "phase-flip", "--p-steps", "5", "--k-steps", "5",
                     "--r-steps", "9"});
  REQUIRE(r.code == 0);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 1 + records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto f = fields(rows[i + 1]);
    CHECK(std::abs(std::strtod(f[6].c_str(), nullptr) - records[i].d_numeric) <= 5e-13);
    CHECK(std::abs(std::strtod(f[7].c_str(), nullptr) - records[i].d_closed) <= 5e-13);
    CHECK(f[8] == (records[i].branch_ok ? "1" : "0"));
  }
}

TEST_CASE("sweep writes to --out and reports unwritable paths") {
  const auto path = std::filesystem::temp_directory_path() / "qdisc_cli_test.csv";
  const Run ok = run({"sweep", "--p", "1", "--r-steps", "3", "--out", path.string()});
  REQUIRE(ok.code == 0);
  CHECK(ok.out.empty());
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(lines(buf.str()).size() == 1 + 3 * 4);
  std::filesystem::remove(path);

  const Run bad = run({"sweep", "--p", "1", "--out", "/nonexistent-dir/out.csv"});
  CHECK(bad.code == 1);
  CHECK(lines(bad.err).size() == 1);
}

TEST_CASE("sweep output is byte-identical across runs") {
  const std::vector<std::string> args{"sweep", "--channel", "bit-flip", "--p-steps", "4",
                                      "--k-steps", "4", "--r-steps", "21"};
  CHECK(run(args).out == run(args).out);
}

TEST_CASE("verify exit code follows its report") {
  const Run a = run({"verify", "--grid", "coarse", "--seed", "42"});
  const Run b = run({"verify", "--grid", "coarse", "--seed", "42"});
  CHECK(a.out == b.out);
  CHECK(a.out.find("branch-violation points found: ") != std::string::npos);
  const bool any_fail = a.out.find("[FAIL]") != std::string::npos;
  CHECK(a.code == (any_fail ? 2 : 0));
}

TEST_CASE("perturbed closed form fails verification") {
  VerifyOptions options;
  options.closed_form = [](const ScenarioParams& p) { return closed_form_discord(p) * (1 + 1e-6); };
  const VerifyReport report = run_verification(options);
  CHECK_FALSE(report.all_passed());
  for (const auto& suite : report.suites)
    if (suite.name == "analytic.closed-form-agreement") CHECK_FALSE(suite.passed);
}

TEST_CASE("real formatting") {
  CHECK(format_real(-0.0) == "0");
  CHECK(format_real(1.0 / 3) == "0.333333333333");
  CHECK(format_real(2.5e-20) == "2.5e-20");
  CHECK(round_to_output_precision(1.0 / 3) == 0.333333333333);
}

}  // TEST_SUITE
