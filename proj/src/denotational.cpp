#include "ccsp/denotational.hpp"

#include <atomic>
#include <map>
#include <stdexcept>

namespace ccsp {

namespace {

std::atomic<bool> g_audit_enabled{false};
std::atomic<std::size_t> g_audit_checked{0};
std::atomic<std::size_t> g_audit_violations{0};

Trace bottom_prefix(const Trace& t, std::size_t len) {
  Trace r;
  r.events.assign(t.events.begin(), t.events.begin() + len);
  r.terminal = Terminal::bot;
  return r;
}

Trace concat_events(const Trace& p, const Trace& q) {
  Trace r = p;
  r.events.insert(r.events.end(), q.events.begin(), q.events.end());
  r.terminal = q.terminal;
  return r;
}

void audit(const TraceSet& traces) {
  if (!g_audit_enabled.load(std::memory_order_relaxed)) return;
  g_audit_checked.fetch_add(1, std::memory_order_relaxed);
  if (!closure_violations(traces).empty())
    g_audit_violations.fetch_add(1, std::memory_order_relaxed);
}

void audit(const PairSet& pairs) {
  if (!g_audit_enabled.load(std::memory_order_relaxed)) return;
  g_audit_checked.fetch_add(1, std::memory_order_relaxed);
  if (!closure_violations(pairs).empty())
    g_audit_violations.fetch_add(1, std::memory_order_relaxed);
}

TraceSet eval_std(const StandardTerm& term);
PairSet eval_comp(const CompensableTerm& term);

TraceSet eval_std_nominal(const StandardTerm& term) {
  TraceSet out;
  switch (term.kind()) {
    case StdKind::atom:
      out.insert(Trace{{term.event()}, Terminal::tick});
      break;
    case StdKind::skip:
      out.insert(Trace{{}, Terminal::tick});
      break;
    case StdKind::throw_:
      out.insert(Trace{{}, Terminal::bang});
      break;
    case StdKind::yield:
      out.insert(Trace{{}, Terminal::query});
      out.insert(Trace{{}, Terminal::tick});
      break;
    case StdKind::seq: {
      const TraceSet ps = eval_std(term.left());
      const TraceSet qs = eval_std(term.right());
      for (const auto& p : ps) {
        if (p.terminal != Terminal::tick) {
          out.insert(p);
          continue;
        }
        for (const auto& q : qs) out.insert(seq_traces(p, q));
      }
      break;
    }
    case StdKind::choice: {
      out = eval_std(term.left());
      const TraceSet qs = eval_std(term.right());
      out.insert(qs.begin(), qs.end());
      break;
    }
    case StdKind::handler: {
      const TraceSet ps = eval_std(term.left());
      const TraceSet qs = eval_std(term.right());
      for (const auto& p : ps) {
        if (p.terminal != Terminal::bang) {
          out.insert(p);
          continue;
        }
        for (const auto& q : qs) out.insert(concat_events(p, q));
      }
      break;
    }
    case StdKind::par: {
      const TraceSet ps = eval_std(term.left());
      const TraceSet qs = eval_std(term.right());
      for (const auto& p : ps)
        for (const auto& q : qs) {
          TraceSet rs = parallel_traces(term.sync(), p, q);
          out.insert(rs.begin(), rs.end());
        }
      break;
    }
    case StdKind::block: {
      for (const auto& [p, pc] : eval_comp(term.body())) {
        switch (p.terminal) {
          case Terminal::tick:
          case Terminal::bot:
            out.insert(p);
            break;
          case Terminal::bang:
            out.insert(concat_events(p, pc));
            break;
          case Terminal::query:
            // nothing outside the block to yield to
            break;
        }
      }
      break;
    }
    case StdKind::null:
      throw std::invalid_argument("the null process has no trace denotation");
  }
  return out;
}

PairSet eval_comp_nominal(const CompensableTerm& term) {
  PairSet out;
  switch (term.kind()) {
    case CompKind::pair: {
      const TraceSet fs = eval_std(term.forward());
      std::optional<TraceSet> cs;
      for (const auto& p : fs) {
        switch (p.terminal) {
          case Terminal::tick:
            if (!cs) cs = eval_std(term.compensation());
            for (const auto& c : *cs) out.insert(TracePair{p, c});
            break;
          case Terminal::bang:
          case Terminal::query:
            // failed forward: the empty compensation SKIP
            out.insert(TracePair{p, Trace{{}, Terminal::tick}});
            out.insert(TracePair{p, bottom_trace()});
            break;
          case Terminal::bot:
            out.insert(TracePair{p, bottom_trace()});
            break;
        }
      }
      break;
    }
    case CompKind::seq: {
      const PairSet first = eval_comp(term.left());
      std::optional<PairSet> second;
      for (const auto& [p, pc] : first) {
        switch (p.terminal) {
          case Terminal::tick:
            if (!second) second = eval_comp(term.right());
            for (const auto& [q, qc] : *second)
              out.insert(TracePair{seq_traces(p, q), seq_traces(qc, pc)});
            break;
          case Terminal::bang:
          case Terminal::query:
            out.insert(TracePair{p, pc});
            break;
          case Terminal::bot:
            out.insert(TracePair{p, bottom_trace()});
            break;
        }
      }
      break;
    }
    case CompKind::choice: {
      out = eval_comp(term.left());
      const PairSet rhs = eval_comp(term.right());
      out.insert(rhs.begin(), rhs.end());
      break;
    }
    case CompKind::par: {
      const PairSet lhs = eval_comp(term.left());
      const PairSet rhs = eval_comp(term.right());
      // Forward and compensation compositions repeat across pairs.
      std::map<std::pair<Trace, Trace>, TraceSet> memo;
      auto compose = [&](const Trace& a, const Trace& b) -> const TraceSet& {
        auto key = std::make_pair(a, b);
        auto it = memo.find(key);
        if (it == memo.end())
          it = memo.emplace(std::move(key), parallel_traces(term.sync(), a, b))
                   .first;
        return it->second;
      };
      for (const auto& pp : lhs)
        for (const auto& qq : rhs) {
          for (const auto& r : compose(pp.forward, qq.forward)) {
            if (r.terminal == Terminal::bot) {
              out.insert(TracePair{r, bottom_trace()});
              continue;
            }
            for (const auto& rc : compose(pp.compensation, qq.compensation))
              out.insert(TracePair{r, rc});
          }
        }
      break;
    }
    case CompKind::null:
      throw std::invalid_argument(
          "the null compensable process has no trace denotation");
  }
  return out;
}

TraceSet eval_std(const StandardTerm& term) {
  TraceSet out = eval_std_nominal(term);
  close_standard(out);
  audit(out);
  return out;
}

PairSet eval_comp(const CompensableTerm& term) {
  PairSet out = eval_comp_nominal(term);
  close_compensable(out);
  audit(out);
  return out;
}

}  // namespace

StandardDenotation eval_standard(const StandardTerm& term) {
  return eval_std(term);
}

CompensableDenotation eval_compensable(const CompensableTerm& term) {
  return eval_comp(term);
}

// Every state on the way to a terminal can still fail, including the last
// one, so the bottom prefixes run up to the full event sequence.
void close_standard(TraceSet& traces) {
  TraceSet extra;
  extra.insert(bottom_trace());
  for (const auto& t : traces)
    for (std::size_t k = 0; k <= t.events.size(); ++k)
      extra.insert(bottom_prefix(t, k));
  traces.merge(extra);
}

void close_compensable(PairSet& pairs) {
  PairSet extra;
  extra.insert(TracePair{bottom_trace(), bottom_trace()});
  for (const auto& [p, pc] : pairs) {
    for (std::size_t k = 0; k <= p.events.size(); ++k)
      extra.insert(TracePair{bottom_prefix(p, k), bottom_trace()});
    if (p.terminal == Terminal::bot) continue;
    for (std::size_t k = 0; k <= pc.events.size(); ++k)
      extra.insert(TracePair{p, bottom_prefix(pc, k)});
  }
  pairs.merge(extra);
}

std::vector<std::string> closure_violations(const TraceSet& traces) {
  std::vector<std::string> out;
  if (!traces.contains(bottom_trace())) out.push_back("missing <bot>");
  for (const auto& t : traces)
    for (std::size_t k = 0; k < t.events.size(); ++k)
      if (!traces.contains(bottom_prefix(t, k)))
        out.push_back(render_trace(t) + " lacks prefix " +
                      render_trace(bottom_prefix(t, k)));
  return out;
}

std::vector<std::string> closure_violations(const PairSet& pairs) {
  std::vector<std::string> out;
  if (!pairs.contains(TracePair{bottom_trace(), bottom_trace()}))
    out.push_back("missing (<bot>, <bot>)");
  for (const auto& tt : pairs) {
    const auto& [p, pc] = tt;
    if (p.terminal == Terminal::bot && pc != bottom_trace())
      out.push_back(render_pair(tt) +
                    " is partial but carries a compensation");
    for (std::size_t k = 0; k < p.events.size(); ++k) {
      TracePair want{bottom_prefix(p, k), bottom_trace()};
      if (!pairs.contains(want))
        out.push_back(render_pair(tt) + " lacks forward prefix " +
                      render_pair(want));
    }
    for (std::size_t k = 0; k < pc.events.size(); ++k) {
      TracePair want{p, bottom_prefix(pc, k)};
      if (!pairs.contains(want))
        out.push_back(render_pair(tt) + " lacks compensation prefix " +
                      render_pair(want));
    }
  }
  return out;
}

void ClosureAudit::enable(bool on) noexcept { g_audit_enabled.store(on); }
bool ClosureAudit::enabled() noexcept { return g_audit_enabled.load(); }

void ClosureAudit::reset() noexcept {
  g_audit_checked.store(0);
  g_audit_violations.store(0);
}

std::size_t ClosureAudit::checked() noexcept { return g_audit_checked.load(); }
std::size_t ClosureAudit::violations() noexcept {
  return g_audit_violations.load();
}

}  // namespace ccsp
