#include <doctest.h>

#include <algorithm>

#include "ccsp/carbroker.hpp"
#include "ccsp/correspondence.hpp"
#include "ccsp/denotational.hpp"
#include "support.hpp"

using namespace ccsp;
using namespace ccsp::test;

namespace {

std::ptrdiff_t position(const Trace& t, const std::string& name) {
  const auto it = std::find(t.events.begin(), t.events.end(), Event(name));
  return it == t.events.end() ? -1 : it - t.events.begin();
}

bool is_cancellation(const Event& e) { return e.name().rfind("cancel", 0) == 0; }

}  // namespace

TEST_CASE("construction") {
  const auto parts = build_carbroker_parts({1, 1});
  CHECK(parts.system == build_carbroker({1, 1}));
  const auto names = alphabet(parts.system);
  for (const char* name :
       {"order.m1", "rfq", "quote.m1.q1", "reqLoan.m1.q1", "reply.yes",
        "reply.no", "cancelOrder.m1", "cancelLoan", "ack"})
    CHECK(names.contains(Event(name)));
  CHECK(parts.a == SyncSet{Event("order.m1"), Event("quote.m1.q1"),
                           Event("ack")});
  CHECK(parts.b == SyncSet{Event("rfq"), Event("quote.m1.q1"),
                           Event("order.m1")});
  CHECK(parts.c == SyncSet{Event("reqLoan.m1.q1"), Event("reply.yes"),
                           Event("reply.no")});
  CHECK(parts.block.kind() == StdKind::block);
  CHECK(parts.buyer.kind() == StdKind::block);
  CHECK(parts.loanstar.kind() == StdKind::block);

  const auto bigger = build_carbroker_parts({2, 2});
  CHECK(alphabet(bigger.system).contains(Event("quote.m2.q2")));
  CHECK(bigger.a.size() == 2 + 4 + 1);
}

TEST_CASE("limits") {
  CHECK_THROWS_AS(build_carbroker({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(build_carbroker({3, 1}), std::invalid_argument);
  CHECK_THROWS_AS(build_carbroker({1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(build_carbroker({1, 3}), std::invalid_argument);
}

TEST_CASE("derived traces equal the denotation on the broker block") {
  const auto parts = build_carbroker_parts({1, 1});
  CHECK(check_theorem1_standard(parts.block).holds);
}

TEST_CASE("a refused loan cancels the order") {
  const auto parts = build_carbroker_parts({1, 1});
  std::size_t refused = 0;
  for (const auto& t : eval_standard(parts.block)) {
    if (t.terminal != ok) continue;
    const auto no = position(t, "reply.no");
    if (no < 0) continue;
    ++refused;
    CHECK(position(t, "cancelOrder.m1") > no);
    CHECK(position(t, "cancelLoan") > no);
    CHECK(position(t, "cancelQuote.m1.q1") > no);
  }
  CHECK(refused > 0);
}

TEST_CASE("an accepted loan completes without cancellations") {
  const auto system = build_carbroker({1, 1});
  bool found = false;
  for (const auto& t : eval_standard(system)) {
    if (t.terminal != ok || position(t, "reply.yes") < 0) continue;
    if (std::none_of(t.events.begin(), t.events.end(), is_cancellation)) {
      found = true;
      CHECK(position(t, "ack") > position(t, "reply.yes"));
    }
  }
  CHECK(found);
}

TEST_CASE("larger configurations stay tractable") {
  const auto system = build_carbroker({2, 2});
  CHECK(check_theorem1_standard(system).holds);
}
