#include <doctest.h>

#include <sstream>

#include "ccsp/cli.hpp"
#include "ccsp/operational.hpp"
#include "support.hpp"

using namespace ccsp;
using namespace ccsp::test;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("check") {
  const auto r = run({"check", "skip"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("result: holds") != std::string::npos);

  const auto mutant = run({"check", "a", "--mutant", "universal"});
  CHECK(mutant.code == kExitMismatch);
  CHECK(mutant.out.find("missing in DT:\n  <a,bot>\n  <bot>\n") !=
        std::string::npos);
}

TEST_CASE("traces and dtraces print sorted sets") {
  CHECK(run({"traces", "a ||{a,b} b"}).out == "<bot>\n");
  CHECK(run({"traces", "a ; b"}).out ==
        "<a,b,bot>\n<a,b,ok>\n<a,bot>\n<bot>\n");
  CHECK(run({"dtraces", "a ; b"}).out == run({"traces", "a ; b"}).out);
  CHECK(run({"traces", "a % r"}).out ==
        "(<a,bot>, <bot>)\n(<a,ok>, <bot>)\n(<a,ok>, <r,bot>)\n"
        "(<a,ok>, <r,ok>)\n(<bot>, <bot>)\n");
}

TEST_CASE("lts") {
  const auto r = run({"lts", "a"});
  CHECK(r.code == kExitOk);
  CHECK(r.out ==
        "a --a--> skip\n"
        "a --bot--> 0\n"
        "skip --bot--> 0\n"
        "skip --ok--> 0\n");
  CHECK(run({"lts", "a ; b ; c", "--bound", "2"}).code == kExitBound);
}

TEST_CASE("step follows the chosen transitions") {
  const auto r = run({"step", "a ; b"}, "1\n1\n2\n");
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("trace: <a,b,ok>") != std::string::npos);

  const auto retry = run({"step", "a"}, "9\nx\n2\n");
  CHECK(retry.out.find("enter a number") != std::string::npos);
  CHECK(retry.out.find("trace: <bot>") != std::string::npos);

  const auto comp = run({"step", "a % r"}, "1\n2\n");
  CHECK(comp.out.find("trace: <a,ok>") != std::string::npos);
  CHECK(comp.out.find("compensation: r") != std::string::npos);

  const auto eof = run({"step", "a"}, "");
  CHECK(eof.code == kExitOk);
  CHECK(eof.out.find("session ended") != std::string::npos);
}

TEST_CASE("step sessions end in a derived trace") {
  const auto term = S("(a ; b) ||{} (c /> throw)");
  const auto dt = derived_traces_standard(term);
  // Always take the first offered option.
  std::string ones;
  for (int i = 0; i < 20; ++i) ones += "1\n";
  const auto r = run({"step", "(a ; b) ||{} (c /> throw)"}, ones);
  const auto pos = r.out.find("trace: ");
  REQUIRE(pos != std::string::npos);
  const std::string line = r.out.substr(pos + 7, r.out.find('\n', pos) - pos - 7);
  bool found = false;
  for (const auto& t : dt) found = found || render_trace(t) == line;
  CHECK(found);
}

TEST_CASE("fuzz") {
  const auto r = run({"fuzz", "--count", "100", "--size", "6", "--alphabet",
                      "a,b", "--seed", "1"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("failed: 0") != std::string::npos);

  const auto mutant = run({"fuzz", "--count", "20", "--size", "5", "--seed",
                           "1", "--mutant", "universal"});
  CHECK(mutant.code == kExitMismatch);
  CHECK(mutant.out.find("counterexample") != std::string::npos);

  CHECK(run({"fuzz", "--count", "10", "--lemma", "dead"}).code == kExitOk);
  CHECK(run({"fuzz", "--count", "10", "--sort", "compensable"}).code ==
        kExitOk);
  CHECK(run({"fuzz", "--count", "5", "--bound", "1"}).code == kExitBound);
}

TEST_CASE("usage and parse errors") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"traces"}).code == kExitUsage);
  const auto bad = run({"traces", "a ; ; b"});
  CHECK(bad.code == kExitUsage);
  CHECK(bad.err.find("column 5") != std::string::npos);
  CHECK(run({"traces", "a ; b % c"}).code == kExitUsage);
  CHECK(run({"fuzz", "--alphabet", "a,,b"}).code == kExitUsage);
  CHECK(run({"fuzz", "--lemma", "nope"}).code == kExitUsage);
  CHECK(run({"fuzz", "--mutant", "nope"}).code == kExitUsage);
  CHECK(run({"fuzz", "--size", "2", "--sort", "compensable"}).code ==
        kExitUsage);
  CHECK(run({"example", "carbroker", "--models", "3"}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("car broker example") {
  const auto r = run({"example", "carbroker", "--models", "1", "--quotes", "1"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.rfind("system: ", 0) == 0);
  CHECK(r.out.find("traces:\n") != std::string::npos);
  CHECK(r.out.find("reply.yes") != std::string::npos);

  const auto bounded = run({"example", "carbroker", "--bound", "5"});
  CHECK(bounded.code == kExitOk);
  CHECK(bounded.out.find("omitted") != std::string::npos);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"fuzz", "--count", "50", "--seed", "9",
                                      "--mutant", "reverse"};
  CHECK(run(args).out == run(args).out);
}
