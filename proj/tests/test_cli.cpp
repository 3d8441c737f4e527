#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "pcclosure/commands.hpp"

using nlohmann::json;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = pcc::run_cli(args, out, err);
  return CliResult{code, out.str(), err.str()};
}

// RAII temp file holding sequence text.
struct TempSeq {
  std::string path;
  explicit TempSeq(const std::string& content, const std::string& name) {
    path = std::string("cli_test_") + name + ".seq";
    std::ofstream f(path);
    f << content;
  }
  ~TempSeq() { std::remove(path.c_str()); }
};

const char* kDemoE =
    "rank = 2\nprefix = [t2]\ntail.u = t2^2 - t2\ntail.b = (0,1)\ntail.n0 = 0\n";
const char* kDemoEPrime =
    "rank = 2\nprefix = [t2^2]\ntail.u = t2^3 - t2^2\ntail.b = (0,1)\ntail.n0 = 0\n";

std::vector<std::string> split_lines(const std::string& s) {
  std::vector<std::string> lines;
  std::istringstream in(s);
  std::string l;
  while (std::getline(in, l))
    if (!l.empty()) lines.push_back(l);
  return lines;
}

}  // namespace

TEST_CASE("cli validate") {
  TempSeq e(kDemoE, "validate_ok");
  CliResult r = run({"validate", e.path});
  CHECK(r.code == 0);
  CHECK(r.out.find("pseudo-convergent") != std::string::npos);

  TempSeq bad("rank = 2\nprefix = [t2, t2]\ntail.u = t2^3\ntail.b = (0,1)\ntail.n0 = 1\n",
              "validate_bad");
  CliResult rb = run({"validate", bad.path});
  CHECK(rb.code == 2);
  CHECK(rb.out.empty());  // diagnostics go to the error stream
  CHECK(rb.err.find("index 0") != std::string::npos);
}

TEST_CASE("cli term and gauge") {
  TempSeq e(kDemoE, "term");
  CHECK(run({"term", e.path, "3"}).out == "t2^4\n");
  CHECK(run({"gauge", e.path, "5"}).out == "(0,6)\n");
  CHECK(run({"term", e.path}).code == 2);
  CliResult j = run({"--json", "term", e.path, "3"});
  json parsed = json::parse(j.out);
  CHECK(parsed["term"] == "t2^4");
  CHECK(parsed["valuation"] == json::array({0, 4}));
}

TEST_CASE("cli classify exit codes and certificates") {
  TempSeq e(kDemoE, "classify_e");
  TempSeq ep(kDemoEPrime, "classify_ep");

  CliResult member = run({"classify", e.path, "--elem", "t2^5"});
  CHECK(member.code == 0);
  CHECK(member.out.find("coset(4)") != std::string::npos);

  CliResult outside = run({"classify", ep.path, "--elem", "t2 + t1"});
  CHECK(outside.code == 1);
  CHECK(outside.out.find("gauge-undershoot") != std::string::npos);

  CliResult jm = run({"--json", "classify", e.path, "--elem", "t2 + t1"});
  json parsed = json::parse(jm.out);
  CHECK(parsed["verdict"]["kind"] == "coset");
  CHECK(parsed["verdict"]["k"] == 0);
  CHECK(parsed["v_alpha_minus_sigma"] == json::array({0, 1}));
  CHECK(jm.code == 0);

  CHECK(run({"classify", e.path, "--elem", "t9"}).code == 2);
}

TEST_CASE("cli equal") {
  TempSeq e(kDemoE, "equal_e");
  TempSeq ep(kDemoEPrime, "equal_ep");
  CliResult r = run({"equal", e.path, ep.path});
  CHECK(r.code == 1);
  CHECK(r.out.find("gauge mismatch at n=0: (0,1) != (0,2)") != std::string::npos);
  CHECK(run({"equal", e.path, e.path}).code == 0);
}

TEST_CASE("cli hn and expand") {
  TempSeq e(kDemoE, "hn");
  CliResult h = run({"hn", e.path, "1", "--eval", "t2 + t1"});
  CHECK(h.code == 0);
  CHECK(h.out.find("H_1") != std::string::npos);
  CHECK(h.out.find("in V: yes") != std::string::npos);

  CliResult cap = run({"--max-degree", "4", "hn", e.path, "9"});
  CHECK(cap.code == 2);

  CliResult x = run({"expand", e.path, "--poly", "X"});
  CHECK(x.code == 0);
  CHECK(x.out.find("a[0] = t2") != std::string::npos);
  CHECK(x.out.find("integer-valued: yes") != std::string::npos);

  CliResult bad = run({"expand", e.path, "--poly", "X/2 + 1/t2"});
  CHECK(bad.out.find("integer-valued: no") != std::string::npos);
}

TEST_CASE("cli closure and print-spec") {
  TempSeq e(kDemoE, "closure");
  CliResult c = run({"closure", e.path});
  CHECK(c.code == 0);
  CHECK(c.out.find("sigma = 0") != std::string::npos);
  CHECK(c.out.find("P_1") != std::string::npos);

  CliResult p = run({"print-spec", e.path});
  CHECK(p.code == 0);
  CHECK(p.out.find("rank = 2") != std::string::npos);
  CHECK(p.out.find("tail.n0 = 0") != std::string::npos);
}

TEST_CASE("cli demo succeeds for ranks 2 through 4") {
  for (int rank = 2; rank <= 4; ++rank) {
    CliResult r = run({"demo", "nontopological", "--rank", std::to_string(rank)});
    CHECK(r.code == 0);
    CHECK(r.out.find("[FAIL]") == std::string::npos);
  }
  CHECK(run({"demo", "nontopological", "--rank", "1"}).code == 2);
}

TEST_CASE("cli json demo emits one object per check") {
  CliResult r = run({"--json", "demo", "nontopological", "--rank", "2"});
  CHECK(r.code == 0);
  auto lines = split_lines(r.out);
  CHECK(lines.size() >= 9);
  bool saw_summary = false;
  for (const auto& l : lines) {
    json obj = json::parse(l);
    CHECK(obj.contains("command"));
    if (obj.contains("demo_ok")) {
      CHECK(obj["demo_ok"] == true);
      saw_summary = true;
    } else {
      CHECK(obj["ok"] == true);
    }
  }
  CHECK(saw_summary);
}

TEST_CASE("cli errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"term", "no_such_file.seq", "1"}).code == 2);
  CHECK(run({"--horizon"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("exit codes are stable under json mode") {
  TempSeq e(kDemoE, "stable_e");
  TempSeq ep(kDemoEPrime, "stable_ep");
  for (std::vector<std::string> base :
       {std::vector<std::string>{"classify", e.path, "--elem", "1"},
        std::vector<std::string>{"equal", e.path, ep.path},
        std::vector<std::string>{"classify", e.path, "--elem", "t2^7"}}) {
    int plain = run(base).code;
    std::vector<std::string> with_json = base;
    with_json.insert(with_json.begin(), "--json");
    CHECK(plain == run(with_json).code);
  }
}
