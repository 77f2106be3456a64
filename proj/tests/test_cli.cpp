#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unistd.h>

#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

#include "cli_runner.hpp"

using nlohmann::json;
using test_helpers::CommandResult;
using test_helpers::run_cli;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name, const std::string& content = "") {
    path = std::string("/tmp/linebcast_test_") + std::to_string(getpid()) + "_" + name;
    if (!content.empty()) {
      std::ofstream out(path);
      out << content;
    }
  }
  ~TempFile() { std::remove(path.c_str()); }
};

const char* kFiveNode = R"({"positions":[0,1,3,4,7],"source":2})";

}  // namespace

TEST_CASE("assign subcommand on the worked example") {
  TempFile net("five.json", kFiveNode);

  CommandResult dist = run_cli("assign --algo distributed --net " + net.path + " --alpha 2");
  REQUIRE(dist.exit_code == 0);
  json doc = json::parse(dist.output);
  CHECK(doc["ranges"] == json::array({0, 1, 2, 3, 0}));
  CHECK(doc["cost"] == 14.0);
  CHECK(doc["algorithm"] == "distributed");
  CHECK(doc["bm"].is_null());

  CommandResult sub = run_cli("assign --algo suboptimal --net " + net.path + " --alpha 2");
  REQUIRE(sub.exit_code == 0);
  CHECK(json::parse(sub.output)["cost"] == 11.0);

  CommandResult opt = run_cli("assign --algo optimal --net " + net.path + " --alpha 2");
  REQUIRE(opt.exit_code == 0);
  CHECK(json::parse(opt.output)["cost"] == 11.0);
  CHECK(json::parse(opt.output)["bm"].is_null());

  CommandResult ident = run_cli("assign --algo identical --net " + net.path +
                                " --alpha 2 --pc 0.99 --lambda 0.03 --length 5000");
  REQUIRE(ident.exit_code == 0);
  doc = json::parse(ident.output);
  CHECK(doc["ranges"].size() == 5);
  CHECK(std::abs(doc["ranges"][0].get<double>() - 320.14) < 0.01);
}

TEST_CASE("oracle subcommand certifies the example") {
  TempFile net("five_oracle.json", kFiveNode);
  CommandResult r = run_cli("oracle --net " + net.path + " --alpha 2");
  REQUIRE(r.exit_code == 0);
  json doc = json::parse(r.output);
  CHECK(doc["cost"] == 11.0);
  CHECK(doc["algorithm"] == "oracle");
}

TEST_CASE("protocol subcommand emits the trace") {
  TempFile net("five_proto.json", kFiveNode);
  CommandResult r = run_cli("protocol --net " + net.path);
  REQUIRE(r.exit_code == 0);
  json doc = json::parse(r.output);
  CHECK(doc["rounds"].size() == 2);
  CHECK(doc["rounds"][0][0]["node"] == 2);
  CHECK(doc["assignment"] == json::array({0, 1, 2, 3, 0}));
}

TEST_CASE("gen output round-trips through every consumer") {
  CommandResult gen = run_cli("gen --mode uniform --n 12 --length 400 --seed 9");
  REQUIRE(gen.exit_code == 0);
  json doc = json::parse(gen.output);
  CHECK(doc["positions"].size() == 12);
  CHECK(doc["seed"] == 9);
  TempFile net("roundtrip.json", gen.output);

  CHECK(run_cli("assign --algo optimal --net " + net.path).exit_code == 0);
  CHECK(run_cli("assign --algo suboptimal --net " + net.path).exit_code == 0);
  CHECK(run_cli("assign --algo distributed --net " + net.path).exit_code == 0);
  CHECK(run_cli("protocol --net " + net.path).exit_code == 0);

  CommandResult small = run_cli("gen --mode expgap --n 6 --lambda 0.05 --seed 10");
  REQUIRE(small.exit_code == 0);
  TempFile net6("roundtrip6.json", small.output);
  CHECK(run_cli("oracle --net " + net6.path).exit_code == 0);
}

TEST_CASE("gen batches one JSON object per line") {
  CommandResult batch = run_cli("gen --mode expgap --n 4 --lambda 0.1 --seed 3 --count 5");
  REQUIRE(batch.exit_code == 0);
  int lines = 0;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = batch.output.find('\n', start);
    if (end == std::string::npos) break;
    json doc = json::parse(batch.output.substr(start, end - start));
    CHECK(doc["positions"].size() == 4);
    start = end + 1;
    ++lines;
  }
  CHECK(lines == 5);
}

TEST_CASE("identical flags reproduce identical bytes") {
  const std::string cmd = "gen --mode uniform --n 30 --length 1000 --seed 77 --count 3";
  CHECK(run_cli(cmd).output == run_cli(cmd).output);
  CHECK(run_cli(cmd).output != run_cli("gen --mode uniform --n 30 --length 1000 --seed 78 --count 3").output);

  const std::string sweep =
      "sweep --lambdas 0.01 --trials 40 --alpha 2 --seed 5 --length 2000 --format csv";
  const std::string once = run_cli(sweep + " --workers 1").output;
  CHECK(!once.empty());
  CHECK(once == run_cli(sweep + " --workers 3").output);
}

TEST_CASE("hist subcommand") {
  CommandResult r = run_cli(
      "hist --kind bm --lambda 0.02 --length 2500 --trials 50 --seed 8 --format json");
  REQUIRE(r.exit_code == 0);
  json doc = json::parse(r.output);
  CHECK(doc.contains("histogram"));
  CHECK(doc["seed"] == 8);

  CommandResult csv = run_cli(
      "hist --kind diff --pair suboptimal-optimal --lambda 0.02 --length 2500 --trials 50 "
      "--seed 8 --format csv");
  REQUIRE(csv.exit_code == 0);
  CHECK(csv.output.rfind("bin_lo,bin_hi,count\n", 0) == 0);
}

TEST_CASE("exit codes") {
  TempFile edge("edge.json", R"({"positions":[0,5],"source":0})");
  TempFile bad("bad.json", R"({"positions":[0,5]})");

  CHECK(run_cli("frobnicate").exit_code == 1);                     // unknown subcommand
  CHECK(run_cli("assign --algo optimal").exit_code == 1);          // missing required flag
  CHECK(run_cli("assign --algo optimal --net /no/such/file.json").exit_code == 2);
  CHECK(run_cli("assign --algo suboptimal --net " + edge.path).exit_code == 1);
  CHECK(run_cli("assign --algo optimal --net " + bad.path).exit_code == 1);
  CHECK(run_cli("gen --mode adv_a --r1 50 --r2 100 --eps1 1").exit_code == 1);
  CHECK(run_cli("gen --mode uniform --n 12 --out /no/such/dir/x.json").exit_code == 2);
  CHECK(run_cli("oracle --net " + edge.path + " --max-n 99").exit_code == 1);
  CHECK(run_cli("assign --algo optimal --net " + edge.path).exit_code == 0);
}
