#include <doctest.h>

#include <deque>
#include <set>

#include "ccsp/correspondence.hpp"
#include "ccsp/operational.hpp"
#include "support.hpp"

using namespace ccsp;
using namespace ccsp::test;

namespace {

const StandardTerm kSkip = StandardTerm::skip();
const StandardTerm kNull = StandardTerm::null();

}  // namespace

TEST_CASE("standard normal steps") {
  CHECK(normal_steps_standard(atom("a")) ==
        NormalSteps{{Event("a"), kSkip}});
  CHECK(normal_steps_standard(S("a ||{a} a")) ==
        NormalSteps{{Event("a"), StandardTerm::par({Event("a")}, kSkip, kSkip)}});
  CHECK(normal_steps_standard(S("a ||{} b")) ==
        NormalSteps{{Event("a"), StandardTerm::par({}, kSkip, atom("b"))},
                    {Event("b"), StandardTerm::par({}, atom("a"), kSkip)}});
  // Fused successor: b is offered directly once a has ticked.
  CHECK(normal_steps_standard(S("skip ; b")) ==
        NormalSteps{{Event("b"), kSkip}});
  CHECK(normal_steps_standard(S("throw /> b")) ==
        NormalSteps{{Event("b"), kSkip}});
}

TEST_CASE("standard terminal steps") {
  CHECK(terminal_steps_standard(S("throw")) ==
        TerminalSteps{{bang, kNull}, {bot, kNull}});
  CHECK(terminal_steps_standard(S("a ||{a} skip")) ==
        TerminalSteps{{bot, kNull}});
  CHECK(terminal_steps_standard(S("skip ||{} throw")) ==
        TerminalSteps{{bang, kNull}, {bot, kNull}});
  CHECK(terminal_steps_standard(S("yield")) ==
        TerminalSteps{{ok, kNull}, {query, kNull}, {bot, kNull}});
  CHECK(terminal_steps_standard(atom("a")) == TerminalSteps{{bot, kNull}});
}

TEST_CASE("compensable normal steps") {
  CHECK(normal_steps_compensable(C("a % r")) ==
        CompNormalSteps{{Event("a"), CompensableTerm::pair(kSkip, atom("r"))}});
  const auto skipp = desugar_keyword(Keyword::skipp);
  CHECK(normal_steps_compensable(C("skipp ; (b % skip)")) ==
        CompNormalSteps{{Event("b"), attach(kSkip, skipp)}});
  CHECK(normal_steps_compensable(C("(a % skip) ||{a} (a % skip)")) ==
        CompNormalSteps{{Event("a"), CompensableTerm::par({Event("a")}, skipp,
                                                          skipp)}});
}

TEST_CASE("compensable terminal steps") {
  CHECK(terminal_steps_compensable(C("skip % r")) ==
        CompTerminalSteps{{ok, atom("r")}, {bot, kNull}});
  CHECK(terminal_steps_compensable(C("throw % r")) ==
        CompTerminalSteps{{bang, kSkip}, {bot, kNull}});
  CHECK(terminal_steps_compensable(C("(skip % r) ||{} (skip % s)")) ==
        CompTerminalSteps{{ok, StandardTerm::par({}, atom("r"), atom("s"))},
                          {bot, kNull}});
}

TEST_CASE("attach puts the compensation behind the continuation") {
  CHECK(attach(atom("r"), C("b % s")) ==
        CompensableTerm::seq(CompensableTerm::pair(kSkip, atom("r")),
                             C("b % s")));
}

TEST_CASE("derived traces") {
  CHECK(derived_traces_standard(atom("a")) ==
        TraceSet{tr({"a"}, ok), tr({"a"}, bot), tr(bot)});
  CHECK(derived_traces_standard(kSkip) == TraceSet{tr(ok), tr(bot)});
  CHECK(derived_traces_standard(S("a ||{a,b} b")) == TraceSet{tr(bot)});
  CHECK(derived_traces_compensable(C("a % r")) ==
        PairSet{{tr({"a"}, ok), tr({"r"}, ok)},
                {tr({"a"}, ok), tr({"r"}, bot)},
                {tr({"a"}, ok), tr(bot)},
                {tr({"a"}, bot), tr(bot)},
                {tr(bot), tr(bot)}});
  CHECK(derived_traces_compensable(C("throww")) ==
        PairSet{{tr(bang), tr(ok)}, {tr(bang), tr(bot)}, {tr(bot), tr(bot)}});
  CHECK(derived_traces_compensable(C("(a % skip) ||{a,b} (b % skip)")) ==
        PairSet{{tr(bot), tr(bot)}});
  CHECK_THROWS_AS(derived_traces_standard(kNull), std::invalid_argument);
}

TEST_CASE("every reachable non-null state has a bottom step") {
  GenConfig cfg;
  cfg.alphabet = {Event("a"), Event("b")};
  std::size_t states = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    cfg.seed = seed;
    Engine engine;
    std::set<AnyTerm> seen;
    std::deque<AnyTerm> queue;
    auto push = [&](AnyTerm t) {
      if (seen.insert(t).second) queue.push_back(std::move(t));
    };
    push(generate_standard(cfg));
    push(generate_compensable(cfg));
    while (!queue.empty()) {
      const AnyTerm state = queue.front();
      queue.pop_front();
      ++states;
      if (const auto* p = std::get_if<StandardTerm>(&state)) {
        if (p->is_null()) continue;
        CHECK(engine.terminal_steps(*p).contains({bot, kNull}));
        for (const auto& [e, next] : engine.normal_steps(*p)) push(next);
        for (const auto& [w, next] : engine.terminal_steps(*p)) {
          CHECK(next.is_null());
          push(next);
        }
      } else {
        const auto& pp = std::get<CompensableTerm>(state);
        if (pp.is_null()) continue;
        CHECK(engine.terminal_steps(pp).contains({bot, kNull}));
        for (const auto& [e, next] : engine.normal_steps(pp)) push(next);
        for (const auto& [w, next] : engine.terminal_steps(pp)) push(next);
      }
    }
  }
  CHECK(states > 1000);
}

TEST_CASE("prefix property of derived traces") {
  GenConfig cfg;
  cfg.alphabet = {Event("a"), Event("b"), Event("c")};
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    cfg.seed = seed;
    const auto dt = derived_traces_standard(generate_standard(cfg));
    for (const auto& t : dt)
      for (std::size_t k = 0; k < t.events.size(); ++k) {
        Trace prefix{{t.events.begin(), t.events.begin() + k}, bot};
        CHECK(dt.contains(prefix));
      }
  }
}

TEST_CASE("state bound") {
  Engine engine({}, 3);
  CHECK_THROWS_AS(engine.derived_traces(S("a ; b ; c ; a ; b")),
                  EngineBoundExceeded);
}

TEST_CASE("mutated rule sets") {
  RuleSet no_bottom;
  no_bottom.universal_bottom = false;
  Engine engine(no_bottom);
  CHECK_FALSE(engine.terminal_steps(atom("a")).contains({bot, kNull}));

  RuleSet forward_order;
  forward_order.reverse_compensation = false;
  Engine fwd(forward_order);
  const auto dt = fwd.derived_traces(C("a % r ; b % s"));
  CHECK(dt.contains({tr({"a", "b"}, ok), tr({"r", "s"}, ok)}));
}
