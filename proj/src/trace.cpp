#include "ccsp/trace.hpp"

#include <map>
#include <utility>

namespace ccsp {

Trace bottom_trace() { return Trace{{}, Terminal::bot}; }

Trace make_trace(std::initializer_list<std::string_view> events,
                 Terminal terminal) {
  Trace t;
  t.events.reserve(events.size());
  for (auto e : events) t.events.emplace_back(std::string(e));
  t.terminal = terminal;
  return t;
}

Trace seq_traces(const Trace& p, const Trace& q) {
  if (p.terminal != Terminal::tick) return p;
  Trace r;
  r.events.reserve(p.events.size() + q.events.size());
  r.events = p.events;
  r.events.insert(r.events.end(), q.events.begin(), q.events.end());
  r.terminal = q.terminal;
  return r;
}

Terminal sync_terminal(Terminal w1, Terminal w2) noexcept {
  if (w1 == Terminal::bot || w2 == Terminal::bot) return Terminal::bot;
  if (w1 == Terminal::bang || w2 == Terminal::bang) return Terminal::bang;
  if (w1 == Terminal::query || w2 == Terminal::query) return Terminal::query;
  return Terminal::tick;
}

std::optional<Event> sync_event(const Event& a, const Event& b) {
  if (a == b) return a;
  return std::nullopt;
}

namespace {

// Suffix results are memoised on (i, j), the positions reached in p and q.
// Stored traces are suffixes of the final result.
class ParallelTraces {
 public:
  ParallelTraces(const SyncSet& x, const Trace& p, const Trace& q)
      : x_(x), p_(p), q_(q) {}

  const TraceSet& run(std::size_t i, std::size_t j) {
    const auto key = std::make_pair(i, j);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    TraceSet out = compute(i, j);
    return memo_.emplace(key, std::move(out)).first->second;
  }

 private:
  bool synced(const Event& e) const { return x_.contains(e); }

  void prefix_into(TraceSet& out, const Event& e, const TraceSet& rest) {
    for (const auto& r : rest) {
      Trace t;
      t.events.reserve(r.events.size() + 1);
      t.events.push_back(e);
      t.events.insert(t.events.end(), r.events.begin(), r.events.end());
      t.terminal = r.terminal;
      out.insert(std::move(t));
    }
  }

  TraceSet compute(std::size_t i, std::size_t j) {
    const bool p_done = i == p_.events.size();
    const bool q_done = j == q_.events.size();
    TraceSet out;
    if (p_done && q_done) {
      out.insert(Trace{{}, sync_terminal(p_.terminal, q_.terminal)});
      return out;
    }
    if (q_done) {
      const Event& a = p_.events[i];
      if (synced(a)) {
        out.insert(bottom_trace());
      } else {
        prefix_into(out, a, run(i + 1, j));
      }
      return out;
    }
    if (p_done) {
      const Event& b = q_.events[j];
      if (synced(b)) {
        out.insert(bottom_trace());
      } else {
        prefix_into(out, b, run(i, j + 1));
      }
      return out;
    }
    const Event& a = p_.events[i];
    const Event& b = q_.events[j];
    const bool a_in = synced(a);
    const bool b_in = synced(b);
    if (a_in && b_in) {
      if (auto s = sync_event(a, b)) {
        prefix_into(out, *s, run(i + 1, j + 1));
      } else {
        out.insert(bottom_trace());
      }
      return out;
    }
    if (!a_in) prefix_into(out, a, run(i + 1, j));
    if (!b_in) prefix_into(out, b, run(i, j + 1));
    return out;
  }

  const SyncSet& x_;
  const Trace& p_;
  const Trace& q_;
  std::map<std::pair<std::size_t, std::size_t>, TraceSet> memo_;
};

}  // namespace

TraceSet parallel_traces(const SyncSet& x, const Trace& p, const Trace& q) {
  ParallelTraces engine(x, p, q);
  return engine.run(0, 0);
}

PairSet parallel_pairs(const SyncSet& x, const TracePair& pp,
                       const TracePair& qq) {
  PairSet out;
  const TraceSet forwards = parallel_traces(x, pp.forward, qq.forward);
  std::optional<TraceSet> compensations;
  for (const auto& r : forwards) {
    if (r.terminal == Terminal::bot) {
      out.insert(TracePair{r, bottom_trace()});
      continue;
    }
    if (!compensations)
      compensations = parallel_traces(x, pp.compensation, qq.compensation);
    for (const auto& rc : *compensations) out.insert(TracePair{r, rc});
  }
  return out;
}

std::string_view terminal_name(Terminal w) noexcept {
  switch (w) {
    case Terminal::tick:
      return "ok";
    case Terminal::bang:
      return "!";
    case Terminal::query:
      return "?";
    case Terminal::bot:
      return "bot";
  }
  return "?";
}

std::string render_trace(const Trace& t) {
  std::string out = "<";
  for (const auto& e : t.events) {
    out += e.name();
    out += ',';
  }
  out += terminal_name(t.terminal);
  out += '>';
  return out;
}

std::string render_pair(const TracePair& tt) {
  return "(" + render_trace(tt.forward) + ", " +
         render_trace(tt.compensation) + ")";
}

}  // namespace ccsp
