#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "doctest.h"
#include "largecover/cli.hpp"

namespace fs = std::filesystem;
using largecover::cli::run;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const fs::path dir = fs::temp_directory_path() / "largecover_cli_test";
  fs::create_directories(dir);
  const fs::path p = dir / name;
  std::ofstream(p) << text;
  return p.string();
}

const char* kToy = "p setsystem 8 8 8\n0\n1\n2\n3\n4\n5\n6\n7\n";

}  // namespace

TEST_CASE("params prints the schedule arithmetic") {
  const Result r = invoke({"params", "--sigma", "0.2", "--n", "20"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["schema"] == 1);
  CHECK(j["schedule"]["zeta"] == 0.2);
  CHECK(j["schedule"]["beta"].get<double>() == doctest::Approx(0.01));
  CHECK(j["schedule"]["sample_rate_log2"].get<double>() == doctest::Approx(-4.0));
  CHECK(j["schedule"]["repeats"] == 20);
  CHECK(j["linsat_exponent"]["exponent"].get<double>() == doctest::Approx(0.3399).epsilon(0.002));
  CHECK(j["lambda_r"][1]["r"] == 3);
  CHECK(j["lambda_r"][1]["sandwich"] == true);

  const json bad = json::parse(invoke({"params", "--sigma", "0.5", "--n", "10"}).out);
  CHECK(bad["schedule"].contains("error"));
  CHECK(bad["solver_schedule"]["zeta"] == 0.2499);
}

TEST_CASE("solve-cover on the planted singleton toy") {
  const std::string path = write_temp("toy.ss", kToy);
  const Result r = invoke({"solve-cover", "--input", path, "--size", "8", "--seed", "1"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["verdict"]["answer"] == "YES");
  CHECK(j["verdict"]["sets"].size() == 8);
  CHECK(j["stats"]["layer_count"].get<int>() == static_cast<int>(j["stats"]["layers"].size()));
  CHECK_FALSE(j.contains("runtime_ms"));

  // Full determinism.
  CHECK(invoke({"solve-cover", "--input", path, "--size", "8", "--seed", "1"}).out == r.out);
  CHECK(json::parse(invoke({"solve-cover", "--input", path, "--seed", "1", "--timing"}).out).contains("runtime_ms"));
}

TEST_CASE("verify re-checks reports and catches tampering") {
  const std::string path = write_temp("toy2.ss", kToy);
  const Result r = invoke({"solve-cover", "--input", path, "--seed", "3"});
  REQUIRE(r.code == 0);
  const std::string report = write_temp("report.json", r.out);
  const Result ok = invoke({"verify", "--input", path, "--report", report});
  CHECK(ok.code == 0);
  CHECK(json::parse(ok.out)["valid"] == true);

  json tampered = json::parse(r.out);
  tampered["verdict"]["sets"] = json::array({0, 1});
  const std::string bad = write_temp("bad.json", tampered.dump());
  CHECK(invoke({"verify", "--input", path, "--report", bad}).code == largecover::cli::kSoundness);
}

TEST_CASE("every solver subcommand answers and verifies") {
  const std::string graph = write_temp("c5.graph", "p edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n");
  const Result c3 = invoke({"chromatic", "--graph", graph, "--colors", "3"});
  REQUIRE(c3.code == 0);
  CHECK(json::parse(c3.out)["verdict"]["answer"] == "YES");
  const std::string c3r = write_temp("c3.json", c3.out);
  CHECK(invoke({"verify", "--input", graph, "--report", c3r}).code == 0);
  CHECK(json::parse(invoke({"chromatic", "--graph", graph, "--colors", "2"}).out)["verdict"]["answer"] == "NO");

  const std::string lin = write_temp("id.linsat", "p linsat 4 4 2\n1000\n0100\n0010\n0001\n1100\n1 1 1 1\n");
  const Result l = invoke({"linsat", "--input", lin, "--seed", "2"});
  REQUIRE(l.code == 0);
  const json lj = json::parse(l.out);
  CHECK(lj["verdict"]["answer"] == "YES");
  CHECK(lj["verdict"]["x"] == "1100");
  CHECK(invoke({"verify", "--input", lin, "--report", write_temp("l.json", l.out)}).code == 0);

  const std::string fam = write_temp("fam.ss", "p setsystem 3 4 3\n0 1 2\n0\n1\n2\n");
  const Result f = invoke({"few-sets", "--input", fam, "--r", "2", "--mode", "partition"});
  REQUIRE(f.code == 0);
  CHECK(json::parse(f.out)["verdict"]["answer"] == "YES");
  CHECK(invoke({"verify", "--input", fam, "--report", write_temp("f.json", f.out)}).code == 0);

  const Result p = invoke({"solve-partition", "--oracle", "singleton", "--n", "8", "--size", "8"});
  REQUIRE(p.code == 0);
  CHECK(json::parse(p.out)["verdict"]["answer"] == "YES");

  const std::string singles = write_temp("singles.ss", kToy);
  const Result pe = invoke({"solve-partition", "--input", singles});
  REQUIRE(pe.code == 0);
  CHECK(json::parse(pe.out)["verdict"]["sets"].size() == 8);
  CHECK(invoke({"verify", "--input", singles, "--report", write_temp("pe.json", pe.out)}).code == 0);

  // Independent pairs exceed the oracle size bound at this n.
  CHECK(invoke({"solve-partition", "--oracle", "independent-set:" + graph, "--size", "5"}).code ==
        largecover::cli::kHypothesis);
  const std::string k4 = write_temp("k4.graph", "p edge 4 6\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n");
  const Result pi = invoke({"solve-partition", "--oracle", "independent-set:" + k4, "--size", "4"});
  CHECK(pi.code == 0);
}

TEST_CASE("oracle-check reports zero false positives") {
  const Result r = invoke({"oracle-check", "--solver", "linsat", "--sweep", "small", "--seed", "7"});
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["false_positives"] == 0);
  CHECK(j["summary"].get<std::string>() == "0 false positives / " + std::to_string(j["runs"].get<int>()) + " runs");
  for (const char* s : {"folklore", "few-sets", "isd"}) {
    const Result e = invoke({"oracle-check", "--solver", s, "--seed", "7"});
    CHECK(e.code == 0);
    CHECK(json::parse(e.out)["mismatches"] == 0);
  }
  CHECK(invoke({"oracle-check", "--solver", "nope"}).code == largecover::cli::kUsage);
}

TEST_CASE("rate-estimate and the Wilson interval") {
  const std::string path = write_temp("toy3.ss", kToy);
  const Result r = invoke({"rate-estimate", "--instance", path, "--runs", "20", "--seed", "1"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["runs"] == 20);
  CHECK(j["rate"].get<double>() >= 0.5);
  CHECK(j["wilson95"][0].get<double>() <= j["rate"].get<double>());

  const auto w = largecover::cli::wilson_interval(50, 100);
  CHECK(w.lo == doctest::Approx(0.40383).epsilon(1e-4));
  CHECK(w.hi == doctest::Approx(0.59617).epsilon(1e-4));
  const auto zero = largecover::cli::wilson_interval(0, 10);
  CHECK(zero.lo == 0.0);
  CHECK(zero.hi == doctest::Approx(0.27753).epsilon(1e-4));
}

TEST_CASE("exit codes") {
  using namespace largecover::cli;
  CHECK(invoke({"--help"}).code == kAnswered);
  CHECK(invoke({}).code == kUsage);
  CHECK(invoke({"solve-cover", "--bogus"}).code == kUsage);
  CHECK(invoke({"solve-cover", "--input", "x", "--seed", "abc"}).code == kUsage);
  CHECK(invoke({"solve-cover", "--input", "/nonexistent/file.ss"}).code == kIo);
  const std::string bad = write_temp("bad.ss", "p setsystem 2 1 1\n0 5\n");
  const Result parse = invoke({"solve-cover", "--input", bad});
  CHECK(parse.code == kParse);
  CHECK(parse.err.find("line 2") != std::string::npos);

  std::string big = "p setsystem 30 1 1\n";
  for (int e = 0; e < 30; ++e) big += std::to_string(e) + " ";
  big += "\n";
  CHECK(invoke({"few-sets", "--input", write_temp("big.ss", big), "--r", "31"}).code == kGuard);

  const std::string whole = write_temp("whole.ss", "p setsystem 4 2 2\n0 1 2 3\n0\n");
  CHECK(invoke({"solve-partition", "--input", whole}).code == kHypothesis);
}
