#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "lamsub/cli.hpp"
#include "lamsub/prover.hpp"

using namespace lamsub;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fx(const std::string& name) { return std::string(LAMSUB_FIXTURES) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST_CASE("prove") {
  auto r = run_cli({"prove", "-g", fx("german.gram"), "vp/[np&acc&dat] , [np&acc&dat] => vp"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.starts_with("/L"));
  CHECK(r.out.find("\n  Ax") != std::string::npos);
  // exactly one /L node and two axioms
  std::size_t lines = std::count(r.out.begin(), r.out.end(), '\n');
  CHECK(lines == 3);

  auto no = run_cli({"prove", "-g", fx("german.gram"), "vp/[np&acc&dat], [np&acc] => vp"});
  CHECK(no.code == kExitNegative);
  CHECK(no.out.starts_with("not provable"));

  auto sep = run_cli({"--regime", "NL", "prove", "-g", fx("toy.gram"), "(c3/c2, c2/c3) => c3/c3"});
  CHECK(sep.code == kExitNegative);
  auto sep_l = run_cli({"--regime", "L", "prove", "-g", fx("toy.gram"), "c3/c2, c2/c3 => c3/c3"});
  CHECK(sep_l.code == kExitOk);

  auto cut = run_cli({"prove", "-g", fx("toy.gram"), "--cut", "--cut-depth", "2", "c1 => c3"});
  CHECK(cut.code == kExitOk);
}

TEST_CASE("prove --json round-trips") {
  auto r = run_cli({"prove", "--json", "-g", fx("german.gram"), "vp/[np&acc&dat], [np&acc&dat] => vp"});
  REQUIRE(r.code == kExitOk);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["provable"] == true);
  auto p = proof_from_json(j["proof"]);
  CHECK(proof_to_json(*p) == j["proof"]);
  CHECK(p->rule == RuleName::SlashL);
}

TEST_CASE("entail") {
  auto r = run_cli({"entail", "cat:np & case:acc", "cat:np"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "Entailed\n");
  auto d = run_cli({"entail", "cat:np", "cat:vp"});
  CHECK(d.code == kExitNegative);
  CHECK(d.out == "Disentailed\n");
  auto b = run_cli({"entail", "--json", "cat:np", "case:acc"});
  CHECK(b.code == kExitNegative);
  CHECK(nlohmann::json::parse(b.out)["verdict"] == "Blocked");
}

TEST_CASE("member") {
  auto r = run_cli({"member", "-g", fx("german.gram"), "Er findet und hilft Männer und Kindern"});
  CHECK(r.code == kExitNegative);
  CHECK(r.out.starts_with("reject"));
  auto a = run_cli({"member", "--json", "-g", fx("german.gram"), "Er findet und hilft Frauen"});
  CHECK(a.code == kExitOk);
  auto j = nlohmann::json::parse(a.out);
  CHECK(j["accepted"] == true);
  CHECK(j["coordinations"].size() == 1);

  auto l = run_cli({"member", "-g", fx("persuade.gram"), "Kim persuades Sandy to_leave"});
  CHECK(l.code == kExitOk);
  CHECK(l.out.find("readings: 1") != std::string::npos);
  auto c = run_cli({"member", "-g", fx("clash.gram"), "Kim sleep"});
  CHECK(c.code == kExitNegative);

  auto unknown = run_cli({"member", "-g", fx("german.gram"), "Er schläft"});
  CHECK(unknown.code == kExitInput);
}

TEST_CASE("compile-out") {
  auto r = run_cli({"compile-out", "-g", fx("appendix.gram")});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("w (4): b1/(b1/b1) b1/(b1/b2) b2/(b1/b1) b2/(b1/b2)") != std::string::npos);
  auto c = run_cli({"compile-out", "-g", fx("toy.gram"), "--check", "4"});
  CHECK(c.code == kExitOk);
  CHECK(c.out.find("120 strings") != std::string::npos);
  CHECK(c.out.find("0 mismatches") != std::string::npos);
  auto conj = run_cli({"compile-out", "-g", fx("english.gram")});
  CHECK(conj.code == kExitConfig);
}

TEST_CASE("errors") {
  auto bad = temp_file("lamsub_bad.gram", "base prop\nlex a : s\nlex b : s/(\ngoal s\n");
  auto r = run_cli({"member", "-g", bad, "a"});
  CHECK(r.code == kExitInput);
  CHECK(r.err.find("line 3") != std::string::npos);
  CHECK(run_cli({"prove", "-g", fx("german.gram"), "vp/ => vp"}).code == kExitInput);
  CHECK(run_cli({"prove", "vp => vp"}).code == kExitInput);  // no grammar
  CHECK(run_cli({"frobnicate"}).code == kExitInput);
  CHECK(run_cli({}).code == kExitInput);
  CHECK(run_cli({"--help"}).code == kExitOk);
  CHECK(run_cli({"prove", "-g", "/nonexistent/x.gram", "a => a"}).code == kExitInput);
}

TEST_CASE("batch") {
  std::string script = "# smoke\n"
                       "grammar " + fx("german.gram") + "\n"
                       "expect 0 prove \"vp/[np&acc&dat], [np&acc&dat] => vp\"\n"
                       "expect 1 member \"Er findet und hilft Männer und Kindern\"\n"
                       "expect 0 member \"Er findet und hilft Frauen\"\n"
                       "expect 0 entail \"cat:np & case:acc\" cat:np\n"
                       "grammar " + fx("english.gram") + "\n"
                       "expect 3 compile-out\n"
                       "expect 2 member \"Kim sneezed\"\n";
  auto path = temp_file("lamsub_batch.txt", script);
  auto seq = run_cli({"batch", path});
  CHECK(seq.code == kExitOk);
  CHECK(seq.out.find("6/6 passed") != std::string::npos);
  auto par = run_cli({"batch", "--parallel", path});
  CHECK(par.code == kExitOk);
  CHECK(par.out == seq.out);

  auto failing = temp_file("lamsub_batch_fail.txt", "expect 0 entail cat:np cat:vp\n");
  auto f = run_cli({"batch", failing});
  CHECK(f.code == kExitNegative);
  CHECK(f.out.find("FAIL") != std::string::npos);

  auto broken = temp_file("lamsub_batch_broken.txt", "frob\n");
  CHECK(run_cli({"batch", broken}).code == kExitInput);
}

TEST_CASE("deterministic output") {
  std::vector<std::string> args{"member", "--json", "-g", fx("english.gram"), "Kim became wealthy and a_Republican"};
  auto a = run_cli(args);
  auto b = run_cli(args);
  CHECK(a.out == b.out);
}
