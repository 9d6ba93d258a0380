#include <json.hpp>

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "coxeter/corpus.hpp"
#include "support.hpp"

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(COXETER_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string a2() { return std::string("-g ") + COXETER_CORPUS_DIR + "/A2.cox"; }

}  // namespace

TEST_CASE("normalize") {
  auto r = run(a2() + " normalize 't s t'");
  CHECK(r.code == 0);
  CHECK(r.out == "s t s\n");
}

TEST_CASE("pc") {
  auto r = run(a2() + " pc 's t s'");
  CHECK(r.code == 0);
  CHECK(r.out == "representative: s\ngenerators: {t}\nrank: 1\nstatus: Exact\n");
}

TEST_CASE("length") {
  auto r = run(a2() + " length 's s'");
  CHECK(r.code == 0);
  CHECK(r.out == "0\n");
}

TEST_CASE("json output carries the same result") {
  auto text = run(a2() + " pc 's t s'");
  auto js = run("--json " + a2() + " pc 's t s'");
  CHECK(js.code == 0);
  auto doc = nlohmann::json::parse(js.out);
  CHECK(doc["command"] == "pc");
  CHECK(doc["status"] == "ok");
  CHECK(doc["inputs"]["words"][0] == "s t s");
  CHECK(doc["result"]["representative"] == "s");
  CHECK(doc["result"]["generators"] == "{t}");
  CHECK(doc["result"]["rank"] == 1);
  CHECK(doc["result"]["status"] == "Exact");
  CHECK(text.out.find("representative: s") != std::string::npos);

  auto norm = nlohmann::json::parse(run("--json " + a2() + " normalize 't s t'").out);
  CHECK(norm["result"]["word"] == "s t s");
  CHECK(norm["result"]["length"] == 3);
}

TEST_CASE("other subcommands") {
  CHECK(run(a2() + " mult 's t' 't'").out == "s\n");
  CHECK(run("-g I2inf reflect 3 2").out == "s t s t s\n");
  CHECK(run("-g A2 locate '-1 1'").out == "w: s\nsubset: {t}\ndominant: (1, 0)\n");
  CHECK(run("-g A3 intersect e 'a b' e 'b c'").out == "representative: e\ngenerators: {b}\nrank: 1\n");
  CHECK(run("-g I2inf pc 's t' --radius 6").out ==
        "representative: e\ngenerators: {s,t}\nrank: 2\nstatus: RadiusLimited\n");
  auto roots = run("-g B2 roots --depth 3");
  CHECK(roots.code == 0);
  CHECK(std::count(roots.out.begin(), roots.out.end(), '\n') == 4);
  CHECK(run("-g B3 validate").out.find("order 48") != std::string::npos);
  // sqrt(2) = 2cos(pi/4) = theta^3 - 3 theta with theta = 2cos(pi/12).
  CHECK(run("-g B3 reflect 0 1 'theta^3-3*theta'").out == "c b c\n");
  CHECK(run("-g B3 reflect 1 1 1").code == 1);
}

TEST_CASE("exit codes") {
  CHECK(run(a2() + " normalize 's x'").code == 1);
  CHECK(run("-g I2inf pc 's'").code == 1);
  CHECK(run("-g A2 reflect 0.5 1").code == 1);
  CHECK(run(a2() + " frobnicate").code == 2);
  CHECK(run(a2() + " normalize").code == 2);
  CHECK(run("normalize 's'").code == 2);
  auto err = nlohmann::json::parse(run("--json -g A2 normalize 's x'").out);
  CHECK(err["status"] == "error");
  CHECK(err["result"]["error"] == "UnknownGenerator");
}

TEST_CASE("verify and oracle-compare") {
  auto v = run("verify --suite product-orders");
  CHECK(v.code == 0);
  CHECK(v.out.rfind("PASS product-orders", 0) == 0);
  auto o = nlohmann::json::parse(run("--json -g B3 oracle-compare").out);
  CHECK(o["status"] == "ok");
  CHECK(o["result"]["elements"] == 48);
  CHECK(o["result"]["intersection_mismatches"] == 0);
  CHECK(o["result"]["closure_mismatches"] == 0);
}

TEST_CASE("shipped group files match the built-in corpus") {
  for (const auto& entry : coxeter::corpus()) {
    auto m = coxeter::load_group_file(std::string(COXETER_CORPUS_DIR) + "/" + entry.name + ".cox");
    CHECK(m == entry.matrix);
  }
}
