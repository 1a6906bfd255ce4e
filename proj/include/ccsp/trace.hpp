#pragma once

// Trace algebra: completed traces, trace pairs, sequential concatenation with
// the bottom cut, terminal and event synchronisation, and parallel
// composition of traces over a synchronisation set.

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ccsp/terms.hpp"

namespace ccsp {

/// A finite event sequence followed by exactly one terminal symbol.
struct Trace {
  std::vector<Event> events;
  Terminal terminal = Terminal::tick;

  friend bool operator==(const Trace&, const Trace&) = default;
  friend auto operator<=>(const Trace&, const Trace&) = default;
};

/// Forward behaviour and the compensation installed by it.
struct TracePair {
  Trace forward;
  Trace compensation;

  friend bool operator==(const TracePair&, const TracePair&) = default;
  friend auto operator<=>(const TracePair&, const TracePair&) = default;
};

using TraceSet = std::set<Trace>;
using PairSet = std::set<TracePair>;

/// <bot>
Trace bottom_trace();

/// Convenience constructor used heavily by tests: trace({"a", "b"}, bang).
Trace make_trace(std::initializer_list<std::string_view> events,
                 Terminal terminal);

/// Sequential composition: tick splices the continuation, every other
/// terminal (including the bottom cut) absorbs it.
Trace seq_traces(const Trace& p, const Trace& q);

/// Terminal synchronisation table: bot absorbs everything, then
/// bang > query > tick.
Terminal sync_terminal(Terminal w1, Terminal w2) noexcept;

/// Event synchronisation.  std::nullopt is the failed synchronisation of two
/// different events, which callers turn into a bottom cut.
std::optional<Event> sync_event(const Event& a, const Event& b);

/// All traces of p running in parallel with q, synchronising on `x`.
/// The result is never empty.
TraceSet parallel_traces(const SyncSet& x, const Trace& p, const Trace& q);

/// Parallel composition of trace pairs.  A partial forward result carries
/// the compensation <bot>; otherwise compensations compose in parallel.
PairSet parallel_pairs(const SyncSet& x, const TracePair& pp,
                       const TracePair& qq);

std::string_view terminal_name(Terminal w) noexcept;

/// "<a,b,!>" with terminals ok, !, ?, bot.
std::string render_trace(const Trace& t);
/// "(<a,ok>, <r,ok>)"
std::string render_pair(const TracePair& tt);

}  // namespace ccsp
