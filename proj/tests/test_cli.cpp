#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "bsymb/cli.hpp"
#include "bsymb/fixtures.hpp"
#include "bsymb/io.hpp"
#include "bsymb/tables.hpp"

using namespace bsymb;
namespace fs = std::filesystem;

namespace {

struct CoutCapture {
  std::ostringstream buf;
  std::streambuf* old;
  CoutCapture() : old(std::cout.rdbuf(buf.rdbuf())) {}
  ~CoutCapture() { std::cout.rdbuf(old); }
  std::string text() const { return buf.str(); }
};

int run_cli(const std::vector<std::string>& args, std::string* out = nullptr) {
  CoutCapture cap;
  int rc = cli::run(args);
  if (out) *out = cap.text();
  return rc;
}

fs::path fresh_dir(const std::string& tag) {
  fs::path p = fs::temp_directory_path() / ("bsymb-test-" + tag);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

}  // namespace

TEST_CASE("construct: pair codes, tilings, rejections") {
  fs::path dir = fresh_dir("construct");

  std::string out;
  int rc = run_cli({"construct", "--family", "pg2", "--q", "3", "--n", "13", "--b", "2",
                    "--out", dir.string(), "--format", "json"},
                   &out);
  CHECK(rc == 0);
  auto doc = nlohmann::json::parse(out);
  CHECK(doc["schema"] == 1);
  CHECK(doc["report"]["d_b"] == 5);
  CHECK(doc["report"]["is_mds"] == true);
  CHECK(doc["report"]["M"] == "59049");  // 3^10
  CHECK(fs::exists(dir / "pg2-q3-b2-n13.matrix"));
  CHECK(fs::exists(dir / "pg2-q3-b2-n13.ordering"));
  CHECK(fs::exists(dir / "pg2-q3-b2-n13.report.json"));

  rc = run_cli({"construct", "--family", "tiling", "--q", "2", "--b", "5", "--n", "15",
                "--out", dir.string(), "--format", "json"},
               &out);
  CHECK(rc == 0);
  doc = nlohmann::json::parse(out);
  CHECK(doc["report"]["d_b"] == 10);
  CHECK(doc["report"]["is_mds"] == true);

  // the constacyclic family needs b >= 4
  rc = run_cli({"construct", "--family", "constacyclic", "--q", "2", "--b", "3",
                "--out", dir.string()},
               &out);
  CHECK(rc == 1);
}

TEST_CASE("construct: constacyclic certified and uncertified exits") {
  fs::path dir = fresh_dir("consta");
  std::string out;
  int rc = run_cli({"construct", "--family", "constacyclic", "--q", "2", "--b", "4",
                    "--out", dir.string(), "--format", "json"},
                   &out);
  CHECK(rc == 0);
  auto doc = nlohmann::json::parse(out);
  CHECK(doc["report"]["d_b"] == 9);
  CHECK(doc["report"]["certified"] == true);
  CHECK(doc["cert_weight"] == 5);
  CHECK(fs::exists(dir / "constacyclic-q2-b4-n31.matrix"));

  // starved certification completes the build but exits 2
  rc = run_cli({"construct", "--family", "constacyclic", "--q", "2", "--b", "4",
                "--budget-words", "100", "--out", dir.string(), "--format", "json"},
               &out);
  CHECK(rc == 2);
}

TEST_CASE("emitted files re-verify bit-identically") {
  fs::path dir = fresh_dir("roundtrip");
  std::string out;

  struct Case {
    std::vector<std::string> args;
    std::string mode;
  };
  for (auto [args, mode] : std::vector<Case>{
           {{"construct", "--family", "pg2", "--q", "4", "--n", "21", "--b", "2"}, "projective"},
           {{"construct", "--family", "vectors", "--q", "2", "--b", "3", "--n", "12",
             "--seed", "0"}, "vector"},
           {{"construct", "--family", "greedy", "--q", "2", "--b", "3", "--n", "15",
             "--seed", "0"}, "projective"},
           {{"construct", "--family", "constacyclic", "--q", "2", "--b", "4"}, "projective"}}) {
    args.push_back("--out");
    args.push_back(dir.string());
    args.push_back("--format");
    args.push_back("json");
    REQUIRE(run_cli(args, &out) == 0);
    auto doc = nlohmann::json::parse(out);

    std::string mfile = doc["matrix"];
    std::string bytes = read_text_file(mfile);
    CHECK(format_matrix(parse_matrix(bytes)) == bytes);
    int b = doc["report"]["b"];
    CHECK(run_cli({"verify", mfile, "--b", std::to_string(b), "--mode", mode}, &out) == 0);

    if (doc.contains("ordering")) {
      std::string ofile = doc["ordering"];
      std::string obytes = read_text_file(ofile);
      CHECK(format_ordering(parse_ordering(obytes)) == obytes);
      CHECK(run_cli({"verify", ofile}, &out) == 0);
    }
  }
}

TEST_CASE("order emits orderings that verify") {
  fs::path dir = fresh_dir("order");
  std::string out;
  REQUIRE(run_cli({"order", "--family", "greedy", "--q", "3", "--b", "3", "--r", "3", "--n",
                   "40", "--seed", "0", "--out", dir.string(), "--format", "json"},
                  &out) == 0);
  auto doc = nlohmann::json::parse(out);
  std::string ofile = doc["ordering"];
  CHECK(run_cli({"verify", ofile, "--format", "json"}, &out) == 0);
  auto vdoc = nlohmann::json::parse(out);
  CHECK(vdoc["validation"]["ok"] == true);
  CHECK(vdoc["report"]["d_b"] == 7);

  // concat consumes emitted ordering files
  Ordering s1{Field::of_order(3), 5, 5, OrderingMode::vector_space, {}};
  for (int i = 0; i < 4; ++i) {
    std::vector<uint32_t> e(5, 0);
    e[i] = 1;
    s1.points.push_back(e);
  }
  Ordering s2 = s1;
  s1.points.push_back({0, 0, 0, 0, 1});
  s2.points.push_back({1, 1, 1, 1, 1});
  write_text_file((dir / "a.ordering").string(), format_ordering(s1));
  write_text_file((dir / "b.ordering").string(), format_ordering(s2));
  REQUIRE(run_cli({"construct", "--family", "concat", "--q", "3", "--b", "5", "--in",
                   (dir / "a.ordering").string(), "--in", (dir / "b.ordering").string(),
                   "--out", dir.string(), "--format", "json"},
                  &out) == 0);
  doc = nlohmann::json::parse(out);
  CHECK(doc["report"]["d_b"] == 10);
  CHECK(doc["report"]["is_mds"] == true);
  CHECK(doc["report"]["M"] == "243");
}

TEST_CASE("verify rejects corrupted files with a line number") {
  fs::path dir = fresh_dir("badfile");
  write_text_file((dir / "bad.matrix").string(), "field 2^1\ndims 3 7\n1 0 1\n");
  std::string out;
  CHECK(run_cli({"verify", (dir / "bad.matrix").string(), "--b", "2"}, &out) == 1);

  // wrong token count points at the offending line
  try {
    parse_matrix("field 2^1\ndims 2 3\n1 0 1\n1 0\n");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::parse_error);
    CHECK(std::string(e.what()).find("line 4") != std::string::npos);
  }

  // an invalid ordering is a failed verification, not a crash
  write_text_file((dir / "dup.ordering").string(),
                  "pg 2 2 2 projective\n0 0 1\n0 0 1\n0 1 0\n");
  CHECK(run_cli({"verify", (dir / "dup.ordering").string()}, &out) == 1);
}

TEST_CASE("mindist") {
  fs::path dir = fresh_dir("mindist");
  write_text_file((dir / "ham.matrix").string(), format_matrix(pg22_reference(7)));
  std::string out;
  int rc = run_cli({"mindist", (dir / "ham.matrix").string(), "--b", "1", "--format", "json"},
                   &out);
  CHECK(rc == 0);
  auto doc = nlohmann::json::parse(out);
  CHECK(doc["report"]["d_b"] == 3);

  rc = run_cli({"mindist", (dir / "ham.matrix").string(), "--b", "2", "--method",
                "certified", "--format", "json"},
               &out);
  CHECK(rc == 0);
  CHECK(nlohmann::json::parse(out)["report"]["d_b"] == 5);
}

TEST_CASE("tables runs all fixtures") {
  std::string out;
  CHECK(run_cli({"tables"}, &out) == 0);
  CHECK(out.find("all fixtures pass") != std::string::npos);
  CHECK(out.find("table1-n7") != std::string::npos);
  CHECK(out.find("table2-n15") != std::string::npos);

  CHECK(builtin_fixtures().size() == 17);  // n 3..7 plus n 4..15

  // flipping one matrix bit is caught and named
  auto fixtures = builtin_fixtures();
  Fixture broken = fixtures[3];  // table1-n6
  broken.matrix.at(1, 4) ^= 1;
  FixtureOutcome o = run_fixture(broken);
  CHECK(!o.pass);
  CHECK(o.name == "table1-n6");
}

TEST_CASE("feasible") {
  std::string out;
  CHECK(run_cli({"feasible", "--n", "16", "--b", "3", "--q", "2", "--format", "json"}, &out) == 0);
  CHECK(nlohmann::json::parse(out)["feasible"] == false);
  CHECK(run_cli({"feasible", "--n", "15", "--b", "3", "--q", "2", "--format", "json"}, &out) == 0);
  CHECK(nlohmann::json::parse(out)["feasible"] == true);
  CHECK(run_cli({"feasible", "--n", "7", "--b", "2", "--q", "2", "--format", "json"}, &out) == 0);
  CHECK(nlohmann::json::parse(out)["feasible"] == true);
}

TEST_CASE("bad invocations exit 1") {
  std::string out;
  CHECK(run_cli({"construct", "--family", "warp", "--q", "2", "--n", "5"}, &out) == 1);
  CHECK(run_cli({"verify", "/nonexistent/file"}, &out) == 1);
  CHECK(run_cli({"construct", "--family", "pg2", "--q", "6", "--n", "10", "--b", "2"}, &out) == 1);
}
