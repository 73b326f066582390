#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

// Runs the built binary through the shell, capturing stdout+stderr.
RunResult run(const std::string& args, const std::string& env_prefix = "") {
  static int counter = 0;
  const auto capture = std::filesystem::temp_directory_path() /
                       ("bpos_cli_out_" + std::to_string(counter++) + ".txt");
  const std::string cmd = env_prefix + std::string(BPOS_CLI_PATH) + " " + args + " > " +
                          capture.string() + " 2>&1";
  const int raw = std::system(cmd.c_str());
  RunResult r;
  if (raw != -1 && WIFEXITED(raw)) r.code = WEXITSTATUS(raw);
  std::ifstream in(capture);
  std::stringstream ss;
  ss << in.rdbuf();
  r.out = ss.str();
  std::filesystem::remove(capture);
  return r;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("analyze prints the verdict table") {
  auto r = run("analyze -n 2 -s 5 -d 4 -m 2^5");
  REQUIRE(r.code == 0);
  CHECK(contains(r.out, "effective: Holds"));
  CHECK(contains(r.out, "movable: Fails"));
  CHECK(contains(r.out, "sldim = 1"));
  CHECK(contains(r.out, "multiplicity 2"));
}

TEST_CASE("analyze json output parses and is byte stable") {
  auto r1 = run("analyze -n 2 -s 8 -d 3 -m 1^8 --json");
  auto r2 = run("analyze -n 2 -s 8 -d 3 -m 1^8 --json");
  REQUIRE(r1.code == 0);
  CHECK(r1.out == r2.out);
  auto j = nlohmann::json::parse(r1.out);
  CHECK(j["chi"] == 2);
  CHECK(j["sldim"].is_null());
  CHECK(j["verdicts"]["nef"]["status"] == "Unknown");
  CHECK(j["class"]["m"].size() == 8);
}

TEST_CASE("analyze expectation gate drives the exit code") {
  CHECK(run("analyze -n 2 -s 5 -d 4 -m 2^5 --expect-holds effective").code == 0);
  CHECK(run("analyze -n 2 -s 5 -d 4 -m 2^5 --expect-holds movable").code == 1);
  CHECK(run("analyze -n 2 -s 5 -d 4 -m 2^5 --expect-holds bogus").code == 2);
}

TEST_CASE("usage errors exit 2, help exits 0") {
  CHECK(run("--help").code == 0);
  CHECK(run("analyze --help").code == 0);
  CHECK(run("analyze -n 2 -d 4").code == 2);
  CHECK(run("analyze -n 2 -s 9 -d 4 -m 2^5").code == 2);
  CHECK(run("analyze -n 2 -s 5 -d 4 -m 2,x,2,2,2").code == 2);
  CHECK(run("nosuchcommand").code == 2);
}

TEST_CASE("transform reports split-off components") {
  auto sig = run("transform -n 2 -s 5 -d 4 -m 2^5 --sigma");
  REQUIRE(sig.code == 0);
  CHECK(contains(sig.out, "split off first:"));
  CHECK(contains(sig.out, "2 x [2H - 1E1 - 1E2 - 1E3 - 1E4 - 1E5] along ({}, 1)"));

  auto lin = run("transform -n 2 -s 3 -d 1 -m 1,1,0 --level 1 --json");
  REQUIRE(lin.code == 0);
  auto j = nlohmann::json::parse(lin.out);
  CHECK(j["space"] == "linear");
  CHECK(j["d"] == 0);
  REQUIRE(j["splits"].size() == 1);
  CHECK(j["splits"][0]["multiplicity"] == 1);

  CHECK(run("transform -n 2 -s 4 -d 1 -m 1^4 --sigma").code == 2);
  CHECK(run("transform -n 2 -s 5 -d 4 -m 2^5").code == 2);  // no space chosen
}

TEST_CASE("fnef modes") {
  auto table = run("fnef -n 2 --boundary-table");
  REQUIRE(table.code == 0);
  CHECK(contains(table.out, "pairings match"));

  auto holds = run("fnef -n 3 --from-divisor 2,-2,-1,-1,-1,-1");
  REQUIRE(holds.code == 0);
  CHECK(contains(holds.out, "f-nef: Holds"));

  auto fails = run("fnef -n 3 --class 'd=0,m_{1,2}=-1' --witnesses 1");
  REQUIRE(fails.code == 0);
  CHECK(contains(fails.out, "pairs to -1"));
  CHECK(contains(fails.out, "(1,2,6 | 3 | 4 | 5)"));

  CHECK(run("fnef -n 3 --class 'd=0,m_{1,2}=-1' --expect-holds").code == 1);
  CHECK(run("fnef -n 10 --boundary-table").code == 2);
  CHECK(run("fnef -n 3 --class 'd=0,m_{1,2,3}=-1'").code == 2);  // |I| = n rejected
}

TEST_CASE("oracle pins the quartic dimension and records the seed") {
  auto r = run("oracle -n 2 -d 4 -m 2^5 --json --seed 7");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["h0"] == 1);
  CHECK(j["seed"] == 7);
  CHECK(j["per_trial"].size() >= 3);

  auto env = run("oracle -n 2 -d 2 -m 1,1 --json", "BPOS_SEED=42 ");
  REQUIRE(env.code == 0);
  CHECK(nlohmann::json::parse(env.out)["seed"] == 42);

  CHECK(run("oracle -n 3 -d 60 -m 1,1").code == 2);  // oversize
}

TEST_CASE("sweep writes a resumable jsonl file") {
  const auto path = std::filesystem::temp_directory_path() / "bpos_cli_sweep.jsonl";
  std::filesystem::remove(path);
  auto first = run("sweep -n 2 --d-max 1 --m-max 1 -o " + path.string() + " --json");
  REQUIRE(first.code == 0);
  auto j = nlohmann::json::parse(first.out);
  CHECK(j["total"].get<long long>() > 0);
  CHECK(j["disagree"] == 0);

  std::ifstream in(path);
  std::string line;
  long long lines = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto rec = nlohmann::json::parse(line);
    CHECK(rec.contains("h0"));
    CHECK(rec.contains("match"));
    CHECK(rec.contains("seed"));
    ++lines;
  }
  CHECK(lines == j["total"].get<long long>());

  auto again = run("sweep -n 2 --d-max 1 --m-max 1 -o " + path.string() + " --resume --json");
  REQUIRE(again.code == 0);
  auto j2 = nlohmann::json::parse(again.out);
  CHECK(j2["skipped"] == j["total"]);
  std::filesystem::remove(path);

  CHECK(run("sweep -n 2 --d-max 0 --m-max 0 -o /nonexistent-dir/x.jsonl").code == 3);
}

TEST_CASE("lc prints discrepancy data") {
  auto r = run("lc -n 4 -s 7 -d 4 -m 3^7 --epsilon 1/2");
  REQUIRE(r.code == 0);
  CHECK(contains(r.out, "discrepancy = -1"));
  CHECK(contains(r.out, "lc: Holds"));

  auto bad = run("lc -n 4 -s 7 -d 4 -m 3^7 --epsilon 1");
  REQUIRE(bad.code == 0);
  CHECK(contains(bad.out, "lc: Fails"));

  auto iv = run("lc -n 4 -s 7 -d 20 -m 10^7 --interval");
  REQUIRE(iv.code == 0);
  CHECK(contains(iv.out, "[3/10, 1]"));

  CHECK(run("lc -n 4 -s 7 -d 4 -m 3^7 --epsilon abc").code == 2);
  CHECK(run("lc -n 4 -s 7 -d 4 -m 3^7 --epsilon 3/2").code == 2);  // outside [0,1]
}

TEST_CASE("fujita prints both adjoint verdicts") {
  auto r = run("fujita -n 2 -s 5 -d 5 -m 1^5");
  REQUIRE(r.code == 0);
  CHECK(contains(r.out, "globally generated: Holds"));
  CHECK(contains(r.out, "very ample: Holds"));
  CHECK(contains(r.out, "fujita: Holds"));

  CHECK(run("fujita -n 2 -s 5 -d 4 -m 2^5 --expect-holds").code == 1);
}

}  // TEST_SUITE
