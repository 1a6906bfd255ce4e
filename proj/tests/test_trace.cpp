#include <doctest.h>

#include <map>
#include <vector>

#include "ccsp/trace.hpp"
#include "support.hpp"

using namespace ccsp;
using namespace ccsp::test;

namespace {

const Terminal kTerminals[] = {ok, bang, query, bot};

// The terminal synchronisation table: the seven printed entries, completed
// by commutativity and the bottom column.
std::map<std::pair<Terminal, Terminal>, Terminal> table_one() {
  std::map<std::pair<Terminal, Terminal>, Terminal> t;
  auto put = [&](Terminal a, Terminal b, Terminal r) {
    t[{a, b}] = r;
    t[{b, a}] = r;
  };
  put(bang, bang, bang);
  put(bang, query, bang);
  put(bang, ok, bang);
  put(query, query, query);
  put(query, ok, query);
  put(ok, ok, ok);
  for (Terminal w : kTerminals) put(bot, w, bot);
  return t;
}

// The relational definition of trace parallel composition, transcribed
// clause by clause.  Independent of the library's constructive version.
bool syn_parallel(Terminal w3, Terminal w1, Terminal w2) {
  if (w3 == bot) return w1 == bot || w2 == bot;
  if (w1 == bot || w2 == bot) return false;
  return table_one().at({w1, w2}) == w3;
}

bool full_parallel(const SyncSet& x, std::span<const Event> s1, Terminal w1,
                   std::span<const Event> s2, Terminal w2,
                   std::span<const Event> s3, Terminal w3) {
  auto in_x = [&](const Event& e) { return x.contains(e); };
  if (s3.empty()) {
    return (s1.empty() && s2.empty() && syn_parallel(w3, w1, w2)) ||
           (!s1.empty() && in_x(s1[0]) && s2.empty() && w3 == bot) ||
           (!s2.empty() && in_x(s2[0]) && s1.empty() && w3 == bot) ||
           (!s1.empty() && in_x(s1[0]) && !s2.empty() && in_x(s2[0]) &&
            s1[0] != s2[0] && w3 == bot);
  }
  const Event& a = s3[0];
  if (in_x(a))
    return !s1.empty() && !s2.empty() && s1[0] == a && s2[0] == a &&
           full_parallel(x, s1.subspan(1), w1, s2.subspan(1), w2,
                         s3.subspan(1), w3);
  return (!s1.empty() && s1[0] == a &&
          full_parallel(x, s1.subspan(1), w1, s2, w2, s3.subspan(1), w3)) ||
         (!s2.empty() && s2[0] == a &&
          full_parallel(x, s1, w1, s2.subspan(1), w2, s3.subspan(1), w3));
}

bool full_parallel(const SyncSet& x, const Trace& p, const Trace& q,
                   const Trace& r) {
  return full_parallel(x, p.events, p.terminal, q.events, q.terminal,
                       r.events, r.terminal);
}

// All traces with up to `max_len` events over `events`.
std::vector<Trace> universe(const std::vector<Event>& events,
                            std::size_t max_len) {
  std::vector<std::vector<Event>> seqs{{}};
  for (std::size_t i = 0; i < seqs.size(); ++i)
    if (seqs[i].size() < max_len)
      for (const auto& e : events) {
        auto s = seqs[i];
        s.push_back(e);
        seqs.push_back(std::move(s));
      }
  std::vector<Trace> out;
  for (const auto& s : seqs)
    for (Terminal w : kTerminals) out.push_back(Trace{s, w});
  return out;
}

TraceSet oracle_parallel(const SyncSet& x, const Trace& p, const Trace& q) {
  std::vector<Event> events = p.events;
  events.insert(events.end(), q.events.begin(), q.events.end());
  TraceSet out;
  for (const auto& r : universe(events, p.events.size() + q.events.size()))
    if (full_parallel(x, p, q, r)) out.insert(r);
  return out;
}

std::vector<SyncSet> subsets(const std::vector<Event>& events) {
  std::vector<SyncSet> out;
  for (unsigned mask = 0; mask < (1u << events.size()); ++mask) {
    SyncSet x;
    for (std::size_t i = 0; i < events.size(); ++i)
      if (mask & (1u << i)) x.insert(events[i]);
    out.push_back(x);
  }
  return out;
}

}  // namespace

TEST_CASE("sync_terminal matches the synchronisation table") {
  const auto table = table_one();
  CHECK(table.size() == 16);
  for (Terminal a : kTerminals)
    for (Terminal b : kTerminals) {
      CAPTURE(terminal_name(a));
      CAPTURE(terminal_name(b));
      CHECK(sync_terminal(a, b) == table.at({a, b}));
    }
  CHECK(sync_terminal(bang, query) == bang);
  CHECK(sync_terminal(query, ok) == query);
  CHECK(sync_terminal(bot, bang) == bot);
  CHECK(sync_terminal(ok, ok) == ok);
}

TEST_CASE("sync_terminal is commutative, associative and idempotent") {
  for (Terminal a : kTerminals) {
    CHECK(sync_terminal(a, a) == a);
    for (Terminal b : kTerminals) {
      CHECK(sync_terminal(a, b) == sync_terminal(b, a));
      for (Terminal c : kTerminals)
        CHECK(sync_terminal(a, sync_terminal(b, c)) ==
              sync_terminal(sync_terminal(a, b), c));
    }
  }
}

TEST_CASE("sync_event") {
  CHECK(sync_event(Event("a"), Event("a")) == Event("a"));
  CHECK_FALSE(sync_event(Event("a"), Event("b")).has_value());
  CHECK(sync_event(Event("c.1"), Event("c.1")) == Event("c.1"));
}

TEST_CASE("seq_traces cuts on every terminal but tick") {
  CHECK(seq_traces(tr({"a"}, ok), tr({"b"}, bang)) == tr({"a", "b"}, bang));
  CHECK(seq_traces(tr({"a"}, bang), tr({"b"}, ok)) == tr({"a"}, bang));
  CHECK(seq_traces(tr({"a"}, bot), tr({"b"}, ok)) == tr({"a"}, bot));
  CHECK(seq_traces(tr({"a"}, query), tr({"b"}, ok)) == tr({"a"}, query));
  CHECK(seq_traces(tr(ok), tr(ok)) == tr(ok));
}

TEST_CASE("parallel_traces examples") {
  const SyncSet none;
  const SyncSet a{Event("a")};
  const SyncSet ab{Event("a"), Event("b")};
  CHECK(parallel_traces(none, tr({"a"}, ok), tr({"b"}, bang)) ==
        TraceSet{tr({"a", "b"}, bang), tr({"b", "a"}, bang)});
  CHECK(parallel_traces(a, tr({"a"}, ok), tr({"a"}, ok)) ==
        TraceSet{tr({"a"}, ok)});
  CHECK(parallel_traces(ab, tr({"a"}, ok), tr({"b"}, ok)) ==
        TraceSet{tr(bot)});
  CHECK(parallel_traces(a, tr({"a"}, ok), tr(ok)) == TraceSet{tr(bot)});
}

TEST_CASE("parallel_traces agrees with the relational definition") {
  const std::vector<Event> events{Event("a"), Event("b"), Event("c")};
  const auto traces = universe(events, 2);
  std::size_t compared = 0;
  for (const auto& x : subsets(events))
    for (const auto& p : traces)
      for (const auto& q : traces) {
        const auto got = parallel_traces(x, p, q);
        CHECK_FALSE(got.empty());
        if (got != oracle_parallel(x, p, q)) {
          FAIL_CHECK(render_trace(p) << " || " << render_trace(q));
        }
        ++compared;
      }
  CHECK(compared == 8 * traces.size() * traces.size());
}

TEST_CASE("parallel_traces with longer operands") {
  const SyncSet x{Event("a")};
  const auto p = tr({"a", "b", "a"}, ok);
  const auto q = tr({"c", "a", "a"}, bang);
  CHECK(parallel_traces(x, p, q) == oracle_parallel(x, p, q));
  CHECK(parallel_traces({}, p, q) == oracle_parallel({}, p, q));
}

TEST_CASE("parallel_pairs examples") {
  const SyncSet none;
  const SyncSet ab{Event("a"), Event("b")};
  CHECK(parallel_pairs(none, {tr(ok), tr(ok)}, {tr(ok), tr(ok)}) ==
        PairSet{{tr(ok), tr(ok)}});
  CHECK(parallel_pairs(ab, {tr({"a"}, ok), tr(ok)}, {tr({"b"}, ok), tr(ok)}) ==
        PairSet{{tr(bot), tr(bot)}});
  CHECK(parallel_pairs(none, {tr({"a"}, bang), tr({"r"}, ok)},
                       {tr(ok), tr(ok)}) ==
        PairSet{{tr({"a"}, bang), tr({"r"}, ok)}});
}

TEST_CASE("parallel_pairs agrees with the relational definition") {
  const std::vector<Event> events{Event("a"), Event("b")};
  const auto traces = universe(events, 1);
  for (const auto& x : subsets(events))
    for (const auto& p : traces)
      for (const auto& p1 : traces)
        for (const auto& q : traces)
          for (const auto& q1 : traces) {
            PairSet want;
            for (const auto& r : oracle_parallel(x, p, q)) {
              if (r.terminal == bot) {
                want.insert({r, tr(bot)});
                continue;
              }
              for (const auto& r1 : oracle_parallel(x, p1, q1))
                want.insert({r, r1});
            }
            CHECK(parallel_pairs(x, {p, p1}, {q, q1}) == want);
          }
}

TEST_CASE("rendering") {
  CHECK(render_trace(tr({"a", "b"}, bang)) == "<a,b,!>");
  CHECK(render_trace(tr(bot)) == "<bot>");
  CHECK(render_trace(tr({"a"}, query)) == "<a,?>");
  CHECK(render_pair({tr({"a"}, ok), tr({"r"}, ok)}) == "(<a,ok>, <r,ok>)");
}

TEST_CASE("render_trace is injective on a small universe") {
  const auto traces = universe({Event("a"), Event("b")}, 3);
  std::set<std::string> seen;
  for (const auto& t : traces) seen.insert(render_trace(t));
  CHECK(seen.size() == traces.size());
}
