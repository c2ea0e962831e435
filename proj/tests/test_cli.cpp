#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

std::string qlab_bin() {
  const char* bin = std::getenv("QLAB_BIN");
  REQUIRE(bin != nullptr);
  return bin;
}

std::string golden_dir() {
  const char* dir = std::getenv("QLAB_GOLDEN_DIR");
  REQUIRE(dir != nullptr);
  return dir;
}

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& cmdline, const std::string& stdin_data = "") {
  std::string tmp_in = "/tmp/qlab_test_in.json";
  std::string cmd = cmdline;
  if (!stdin_data.empty()) {
    std::ofstream f(tmp_in, std::ios::binary);
    f << stdin_data;
    f.close();
    cmd += " < " + tmp_in;
  }
  cmd += " 2>/dev/null";
  std::array<char, 4096> buf;
  RunResult res;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), got);
  int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  REQUIRE(f.good());
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

const char* kA3RadSquare = R"({
  "vertices": ["1","2","3"],
  "arrows": [{"id":"alpha","from":"1","to":"2"},{"id":"beta","from":"2","to":"3"}],
  "relations": [[{"coeff":"1","path":["alpha","beta"]}]],
  "n": 1})";

}  // namespace

TEST_CASE("pipeline: gen abelian 4,4 into classify gives Tame(3)") {
  RunResult gen = run(qlab_bin() + std::string(" gen abelian --orders 4,4"));
  REQUIRE(gen.exit_code == 0);
  RunResult cls = run(qlab_bin() + std::string(" classify --n 2"), gen.out);
  REQUIRE(cls.exit_code == 0);
  auto j = nlohmann::json::parse(cls.out);
  CHECK(j["verdict"] == "Tame");
  CHECK(j["d"] == 3);
  CHECK(j["gk_estimate"] == 3);
}

TEST_CASE("dual is byte-idempotent on canonical files") {
  RunResult fam = run(qlab_bin() + std::string(" gen relations --family sr --s 4 --r 4"));
  REQUIRE(fam.exit_code == 0);
  RunResult d1 = run(qlab_bin() + std::string(" dual"), fam.out);
  REQUIRE(d1.exit_code == 0);
  RunResult d2 = run(qlab_bin() + std::string(" dual"), d1.out);
  REQUIRE(d2.exit_code == 0);
  RunResult d3 = run(qlab_bin() + std::string(" dual"), d2.out);
  REQUIRE(d3.exit_code == 0);
  CHECK(d1.out == d3.out);
}

TEST_CASE("report golden file for the A3 trivial extension") {
  RunResult ext = run(qlab_bin() + std::string(" trivext"), kA3RadSquare);
  REQUIRE(ext.exit_code == 0);
  RunResult rep = run(qlab_bin() + std::string(" report --n 1 --tmax 6"), ext.out);
  REQUIRE(rep.exit_code == 0);
  std::string golden = read_file(golden_dir() + "/a3_trivext_report.json");
  CHECK(rep.out == golden);
}

TEST_CASE("exit code 2 on malformed input") {
  RunResult r = run(qlab_bin() + std::string(" dual"), "{broken");
  CHECK(r.exit_code == 2);
}

TEST_CASE("exit code 3 on mathematical obstructions") {
  // A2 path algebra: trivial extension is not quadratic
  std::string a2 = R"({"vertices":["1","2"],
    "arrows":[{"id":"a","from":"1","to":"2"}],"relations":[]})";
  RunResult r = run(qlab_bin() + std::string(" trivext"), a2);
  CHECK(r.exit_code == 3);
  // classify of a non-Loewy-bounded algebra (free loop never vanishes)
  std::string loop = R"({"vertices":["v"],
    "arrows":[{"id":"l","from":"v","to":"v"}],"relations":[]})";
  RunResult c = run(qlab_bin() + std::string(" classify --n 0"), loop);
  CHECK(c.exit_code == 3);
}

TEST_CASE("cover, slice, mutate round trip") {
  RunResult fam = run(qlab_bin() + std::string(" gen relations --family sr --s 4 --r 4"));
  REQUIRE(fam.exit_code == 0);
  RunResult cov =
      run(qlab_bin() + std::string(" cover --mode separated --from 0 --to 3"), fam.out);
  REQUIRE(cov.exit_code == 0);
  auto wdoc = nlohmann::json::parse(cov.out);
  CHECK(wdoc["kind"] == "window");
  CHECK(wdoc["step"] == 3);
  RunResult sl = run(qlab_bin() + std::string(" slice --at 0"), cov.out);
  REQUIRE(sl.exit_code == 0);
  auto sdoc = nlohmann::json::parse(sl.out);
  CHECK(sdoc["kind"] == "slice");
  // mutate one source and back
  RunResult m1 = run(qlab_bin() + std::string(" mutate --vertex 0,0@0"), sl.out);
  REQUIRE(m1.exit_code == 0);
  RunResult m2 = run(qlab_bin() + std::string(" mutate --vertex 0,0@3"), m1.out);
  REQUIRE(m2.exit_code == 0);
  CHECK(nlohmann::json::parse(m2.out)["quiver"] == sdoc["quiver"]);
  // mutating a middle vertex is a mathematical error
  RunResult bad = run(qlab_bin() + std::string(" mutate --vertex 0,0@1"), sl.out);
  CHECK(bad.exit_code == 3);
}

TEST_CASE("hilbert of the xi pipeline example") {
  RunResult gen = run(qlab_bin() +
                      std::string(" gen ade --family A --l 5 --loops --relations xi --J \"\""));
  REQUIRE(gen.exit_code == 0);
  RunResult h = run(qlab_bin() + std::string(" hilbert --tmax 3"), gen.out);
  REQUIRE(h.exit_code == 0);
  auto j = nlohmann::json::parse(h.out);
  for (const auto& [vertex, row] : j["hilbert_per_vertex"].items()) {
    CHECK(row == nlohmann::json::parse(R"(["1","3","3","1"])"));
  }
}

TEST_CASE("chartable command") {
  std::string table = R"({
    "classes": [1, 1, 1, 1, 1],
    "table": [
      [1, 1, 1, 1, 1],
      [[1,0], [0.309016994374947,0.951056516295154], [-0.809016994374947,0.587785252292473],
       [-0.809016994374947,-0.587785252292473], [0.309016994374947,-0.951056516295154]],
      [[1,0], [-0.809016994374947,0.587785252292473], [0.309016994374947,-0.951056516295154],
       [0.309016994374947,0.951056516295154], [-0.809016994374947,-0.587785252292473]],
      [[1,0], [-0.809016994374947,-0.587785252292473], [0.309016994374947,0.951056516295154],
       [0.309016994374947,-0.951056516295154], [-0.809016994374947,0.587785252292473]],
      [[1,0], [0.309016994374947,-0.951056516295154], [-0.809016994374947,-0.587785252292473],
       [-0.809016994374947,0.587785252292473], [0.309016994374947,0.951056516295154]]
    ]})";
  std::ofstream f("/tmp/qlab_chartable.json", std::ios::binary);
  f << table;
  f.close();
  RunResult r = run(qlab_bin() +
                    std::string(" gen chartable --file /tmp/qlab_chartable.json --faithful 1"));
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["vertices"].size() == 5);
  CHECK(j["arrows"].size() == 5);
}

TEST_CASE("report on the McKay torus ties all evidence together") {
  RunResult gen = run(qlab_bin() + std::string(" gen abelian --orders 4,4"));
  REQUIRE(gen.exit_code == 0);
  RunResult rep = run(qlab_bin() + std::string(" report --n 2 --tmax 4"), gen.out);
  REQUIRE(rep.exit_code == 0);
  auto j = nlohmann::json::parse(rep.out);
  CHECK(j["schema"] == "qlab-report/1");
  CHECK(j["stable_translation"]["stable"] == true);
  CHECK(j["stable_translation"]["tau_trivial"] == true);
  CHECK(j["koszul"]["koszul_up_to_depth"] == true);
  CHECK(j["classification"]["verdict"] == "Tame");
  CHECK(j["classification"]["d"] == 3);
  CHECK(j["classification"]["gk_estimate"] == 3);
  for (const auto& [vertex, row] : j["hilbert_per_vertex"].items())
    CHECK(row == nlohmann::json::parse(R"(["1","3","3","1","0"])"));
}

TEST_CASE("classify rejects the unbounded dual side with exit 3") {
  RunResult fam = run(qlab_bin() + std::string(" gen relations --family sr --s 4 --r 4 --dual"));
  REQUIRE(fam.exit_code == 0);
  RunResult cls = run(qlab_bin() + std::string(" classify --n 2"), fam.out);
  CHECK(cls.exit_code == 3);
}

TEST_CASE("dot output") {
  RunResult r = run(qlab_bin() + std::string(" dual --format dot"), kA3RadSquare);
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("digraph") != std::string::npos);
  CHECK(r.out.find("alpha") != std::string::npos);
}
