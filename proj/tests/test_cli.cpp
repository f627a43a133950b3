#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cannon/automata.hpp"
#include "cannon/cayley.hpp"
#include "cannon/cli.hpp"
#include "cannon/fellow.hpp"
#include "cannon/report.hpp"

using namespace cannon;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "cannon");
  std::ostringstream out, err;
  const int status = run_cli(args, out, err);
  return {status, out.str(), err.str()};
}

std::size_t line_count(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("cannon_test_" + name);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("ball subcommand") {
  const Run r0 = run({"ball", "--radius", "0"});
  CHECK(r0.status == 0);
  CHECK(r0.out == "x,y,layer,dist\n0,0,bottom,0\n");

  const Run r1 = run({"ball", "--radius", "1"});
  CHECK(r1.out == "x,y,layer,dist\n-1,0,bottom,1\n0,0,bottom,0\n1,0,bottom,1\n0,0,top,1\n");

  const Run r12 = run({"ball", "--radius", "12"});
  CHECK(line_count(r12.out) == 1 + ball(12).size());

  const Run dot = run({"ball", "--radius", "2", "--format", "dot"});
  CHECK(dot.out == export_dot(ball(2)));

  const Run big = run({"ball", "--radius", "15"});
  CHECK(big.status == 2);
  CHECK(big.err.rfind("error: bound:", 0) == 0);
  CHECK(run({"ball", "--format", "json"}).status == 2);
}

TEST_CASE("check-theorem5 subcommand") {
  const Run small = run({"check-theorem5", "--max-len", "3"});
  CHECK(small.status == 0);
  CHECK(small.out.find("40 cases, 0 mismatches") != std::string::npos);

  const Run full = run({"check-theorem5"});
  CHECK(full.status == 0);
  CHECK(full.out.find("265720 cases, 0 mismatches") != std::string::npos);

  CHECK(run({"check-theorem5", "--max-len", "12"}).status == 2);
}

TEST_CASE("check-theorem5 reports a corrupted acceptor") {
  const Dfa good = build_geodesic_acceptor();
  // Drop an accepting state other than the start: the one reached by "a".
  const Dfa bad = with_accepting(good, good.next(good.start(), Letter::a), false);
  const auto path = temp_path("bad.dfa");
  std::ofstream(path) << to_text(bad);
  const Run r = run({"check-theorem5", "--max-len", "4", "--acceptor", path.string()});
  CHECK(r.status == 1);
  CHECK(r.out.find("FAIL") != std::string::npos);
  CHECK(r.out.find("mismatch: 'a': acceptor rejects") != std::string::npos);
  std::filesystem::remove(path);

  CHECK(run({"check-theorem5", "--acceptor", "/nonexistent/file"}).status == 2);
}

TEST_CASE("check-lemmas subcommand") {
  const Run r = run({"check-lemmas", "--max-len", "8", "--radius", "10"});
  CHECK(r.status == 0);
  CHECK(line_count(r.out) == 5);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("fftp-scan subcommand") {
  const Run two = run({"fftp-scan", "--max-len", "2"});
  CHECK(two.status == 0);
  CHECK(two.out ==
        "word,endpoint,word_len,geo_len,min_k,witness\n"
        "aA,\"(0,0,bottom)\",2,0,1,\n"
        "Aa,\"(0,0,bottom)\",2,0,1,\n"
        "tt,\"(0,0,bottom)\",2,0,1,\n"
        "\n"
        "len,count_nongeodesic,max_min_k\n"
        "2,3,1\n");

  const auto rows = temp_path("rows.csv");
  const Run five = run({"fftp-scan", "--max-len", "5", "--out", rows.string()});
  const std::string expected_row = "5,203," + std::to_string(min_fftp_constant(parse_word("tatat")).min_k) + "\n";
  CHECK(five.out.find(expected_row) != std::string::npos);

  const Run seven = run({"fftp-scan", "--max-len", "7", "--out", rows.string()});
  CHECK(slurp(rows).find("ta^2ta^2t,\"(2,2,top)\",7,5,6,a^2ta^2\n") != std::string::npos);
  std::filesystem::remove(rows);

  const Run json = run({"fftp-scan", "--max-len", "3", "--format", "json"});
  const auto doc = nlohmann::json::parse(json.out);
  CHECK(doc.contains("config"));
  CHECK(doc["config"]["max_len"] == 3);
  CHECK(doc["rows"].size() == 18);
  CHECK(doc["summary"][1]["len"] == 3);
  CHECK(doc["rows"][0]["endpoint"] == "(0,0,bottom)");

  CHECK(run({"fftp-scan", "--max-len", "13"}).status == 2);
  CHECK(run({"fftp-scan", "--workers", "0"}).status == 2);
}

TEST_CASE("witness subcommand") {
  const Run two = run({"witness", "--n", "2"});
  CHECK(two.status == 0);
  CHECK(two.out.find("ta^2ta^2t,\"(2,2,top)\",7,5,6,a^2ta^2\n") != std::string::npos);
  CHECK(two.out.find("3,\"(0,2,top)\",\"(2,0,top)\",6\n") != std::string::npos);

  const Run one = run({"witness", "--n", "1"});
  CHECK(one.out.find(",ata\n") != std::string::npos);

  const Run zero = run({"witness", "--n", "0"});
  CHECK(zero.status == 2);
  CHECK(zero.err.rfind("error: bound:", 0) == 0);
  CHECK(run({"witness", "--n", "7"}).status == 2);

  const Run json = run({"witness", "--n", "2", "--format", "json"});
  const auto doc = nlohmann::json::parse(json.out);
  CHECK(doc["min_k"] == 6);
  CHECK(doc["steps"].size() == 8);
}

TEST_CASE("automaton subcommand") {
  const Run dump = run({"automaton", "dump"});
  CHECK(dump.out == to_text(build_geodesic_acceptor()));
  const Run min = run({"automaton", "minimize"});
  CHECK(parse_dfa(min.out).num_states() == minimize(build_geodesic_acceptor()).num_states());

  const auto path = temp_path("min.dfa");
  std::ofstream(path) << min.out;
  CHECK(run({"automaton", "compare", "--in", path.string()}).out == "equivalent\n");

  std::ofstream(path) << to_text(universal_dfa(full_alphabet()));
  const Run diff = run({"automaton", "compare", "--in", path.string()});
  CHECK(diff.status == 1);
  CHECK(diff.out == "different\n");
  std::filesystem::remove(path);

  CHECK(run({"automaton", "random", "--seed", "4"}).out == run({"automaton", "random", "--seed", "4"}).out);
  CHECK(run({"automaton", "explode"}).status == 2);
}

TEST_CASE("geodesics subcommand") {
  CHECK(run({"geodesics", "--max-len", "1"}).out == "\na\nA\nt\n");
  CHECK(run({"geodesics", "--target", "(2,3,bottom)"}).out == "a^2ta^3t\nata^3ta\nta^3ta^2\n");
  const Run counts = run({"geodesics", "--counts", "--radius", "1"});
  CHECK(counts.out.rfind("target,count\n\"(-1,-1,bottom)\",2\n", 0) == 0);
  CHECK(line_count(counts.out) == 19);
  CHECK(run({"geodesics", "--target", "(1,2)"}).status == 2);
}

TEST_CASE("usage errors") {
  CHECK(run({}).status == 2);
  CHECK(run({"frobnicate"}).status == 2);
  CHECK(run({"--help"}).status == 0);
  const Run help = run({"ball", "--help"});
  CHECK(help.out.find("max 14") != std::string::npos);
}
