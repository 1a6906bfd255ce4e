#include "ccsp/operational.hpp"

#include <algorithm>

namespace ccsp {

namespace {

Trace prepend(const Event& e, const Trace& t) {
  Trace r;
  r.events.reserve(t.events.size() + 1);
  r.events.push_back(e);
  r.events.insert(r.events.end(), t.events.begin(), t.events.end());
  r.terminal = t.terminal;
  return r;
}

template <class Steps>
bool has_label(const Steps& steps, Terminal w) {
  return std::any_of(steps.begin(), steps.end(),
                     [w](const auto& s) { return s.first == w; });
}

// Failed synchronisation: one side wants an event of X while the other can
// terminate, or both sides want different events of X.
template <class NormalA, class TerminalA, class NormalB, class TerminalB>
bool deadlocks(const SyncSet& x, const NormalA& na, const TerminalA& ta,
               const NormalB& nb, const TerminalB& tb) {
  auto wants_sync = [&](const auto& steps) {
    return std::any_of(steps.begin(), steps.end(),
                       [&](const auto& s) { return x.contains(s.first); });
  };
  if (wants_sync(na) && !tb.empty()) return true;
  if (wants_sync(nb) && !ta.empty()) return true;
  for (const auto& [a1, _1] : na) {
    if (!x.contains(a1)) continue;
    for (const auto& [a2, _2] : nb)
      if (x.contains(a2) && a1 != a2) return true;
  }
  return false;
}

}  // namespace

CompensableTerm attach(StandardTerm compensation, CompensableTerm qq) {
  return CompensableTerm::seq(
      CompensableTerm::pair(StandardTerm::skip(), std::move(compensation)),
      std::move(qq));
}

Engine::Engine(RuleSet rules, std::size_t state_bound)
    : rules_(rules), state_bound_(state_bound) {}

const NormalSteps& Engine::normal_steps(const StandardTerm& p) {
  if (auto it = normal_memo_.find(p); it != normal_memo_.end())
    return it->second;
  NormalSteps steps = compute_normal(p);
  return normal_memo_.emplace(p, std::move(steps)).first->second;
}

const TerminalSteps& Engine::terminal_steps(const StandardTerm& p) {
  if (auto it = terminal_memo_.find(p); it != terminal_memo_.end())
    return it->second;
  TerminalSteps steps = compute_terminal(p);
  return terminal_memo_.emplace(p, std::move(steps)).first->second;
}

const CompNormalSteps& Engine::normal_steps(const CompensableTerm& pp) {
  if (auto it = cnormal_memo_.find(pp); it != cnormal_memo_.end())
    return it->second;
  CompNormalSteps steps = compute_normal(pp);
  return cnormal_memo_.emplace(pp, std::move(steps)).first->second;
}

const CompTerminalSteps& Engine::terminal_steps(const CompensableTerm& pp) {
  if (auto it = cterminal_memo_.find(pp); it != cterminal_memo_.end())
    return it->second;
  CompTerminalSteps steps = compute_terminal(pp);
  return cterminal_memo_.emplace(pp, std::move(steps)).first->second;
}

NormalSteps Engine::compute_normal(const StandardTerm& p) {
  NormalSteps out;
  switch (p.kind()) {
    case StdKind::atom:
      out.emplace(p.event(), StandardTerm::skip());
      break;
    case StdKind::seq: {
      const auto& lhs = p.left();
      for (const auto& [a, next] : normal_steps(lhs))
        out.emplace(a, StandardTerm::seq(next, p.right()));
      if (has_label(terminal_steps(lhs), Terminal::tick)) {
        const auto& rhs = normal_steps(p.right());
        out.insert(rhs.begin(), rhs.end());
      }
      break;
    }
    case StdKind::choice: {
      out = normal_steps(p.left());
      const auto& rhs = normal_steps(p.right());
      out.insert(rhs.begin(), rhs.end());
      break;
    }
    case StdKind::handler: {
      const auto& lhs = p.left();
      for (const auto& [a, next] : normal_steps(lhs))
        out.emplace(a, StandardTerm::handler(next, p.right()));
      if (has_label(terminal_steps(lhs), Terminal::bang)) {
        const auto& rhs = normal_steps(p.right());
        out.insert(rhs.begin(), rhs.end());
      }
      break;
    }
    case StdKind::par: {
      const auto& x = p.sync();
      const auto& lhs = normal_steps(p.left());
      const auto& rhs = normal_steps(p.right());
      for (const auto& [a, next] : lhs) {
        if (x.contains(a)) {
          for (const auto& [b, next_r] : rhs)
            if (b == a) out.emplace(a, StandardTerm::par(x, next, next_r));
        } else {
          out.emplace(a, StandardTerm::par(x, next, p.right()));
        }
      }
      for (const auto& [b, next] : rhs)
        if (!x.contains(b))
          out.emplace(b, StandardTerm::par(x, p.left(), next));
      break;
    }
    case StdKind::block: {
      const auto& body = p.body();
      for (const auto& [a, next] : normal_steps(body))
        out.emplace(a, StandardTerm::block(next));
      for (const auto& [w, comp] : terminal_steps(body)) {
        if (w != Terminal::bang) continue;
        const auto& cs = normal_steps(comp);
        out.insert(cs.begin(), cs.end());
      }
      break;
    }
    case StdKind::skip:
    case StdKind::throw_:
    case StdKind::yield:
    case StdKind::null:
      break;
  }
  return out;
}

TerminalSteps Engine::compute_terminal(const StandardTerm& p) {
  TerminalSteps out;
  if (p.is_null()) return out;
  const auto null = StandardTerm::null();
  if (rules_.universal_bottom) out.emplace(Terminal::bot, null);
  switch (p.kind()) {
    case StdKind::skip:
      out.emplace(Terminal::tick, null);
      break;
    case StdKind::throw_:
      out.emplace(Terminal::bang, null);
      break;
    case StdKind::yield:
      out.emplace(Terminal::query, null);
      out.emplace(Terminal::tick, null);
      break;
    case StdKind::seq:
      for (const auto& [w, _] : terminal_steps(p.left())) {
        if (w != Terminal::tick) {
          out.emplace(w, null);
          continue;
        }
        for (const auto& [w2, _2] : terminal_steps(p.right()))
          out.emplace(w2, null);
      }
      break;
    case StdKind::choice: {
      out.insert(terminal_steps(p.left()).begin(),
                 terminal_steps(p.left()).end());
      const auto& rhs = terminal_steps(p.right());
      out.insert(rhs.begin(), rhs.end());
      break;
    }
    case StdKind::handler:
      for (const auto& [w, _] : terminal_steps(p.left())) {
        if (w != Terminal::bang) {
          out.emplace(w, null);
          continue;
        }
        for (const auto& [w2, _2] : terminal_steps(p.right()))
          out.emplace(w2, null);
      }
      break;
    case StdKind::par: {
      const auto& tl = terminal_steps(p.left());
      const auto& tr = terminal_steps(p.right());
      for (const auto& [w1, _1] : tl)
        for (const auto& [w2, _2] : tr) out.emplace(sync_terminal(w1, w2), null);
      if (rules_.deadlock_clauses &&
          deadlocks(p.sync(), normal_steps(p.left()), tl,
                    normal_steps(p.right()), tr))
        out.emplace(Terminal::bot, null);
      break;
    }
    case StdKind::block:
      for (const auto& [w, comp] : terminal_steps(p.body())) {
        switch (w) {
          case Terminal::tick:
          case Terminal::bot:
            out.emplace(w, null);
            break;
          case Terminal::bang:
            for (const auto& [w2, _] : terminal_steps(comp))
              out.emplace(w2, null);
            break;
          case Terminal::query:
            break;
        }
      }
      break;
    case StdKind::atom:
    case StdKind::null:
      break;
  }
  return out;
}

CompNormalSteps Engine::compute_normal(const CompensableTerm& pp) {
  CompNormalSteps out;
  switch (pp.kind()) {
    case CompKind::pair:
      for (const auto& [a, next] : normal_steps(pp.forward()))
        out.emplace(a, CompensableTerm::pair(next, pp.compensation()));
      break;
    case CompKind::seq: {
      for (const auto& [a, next] : normal_steps(pp.left()))
        out.emplace(a, CompensableTerm::seq(next, pp.right()));
      for (const auto& [w, comp] : terminal_steps(pp.left())) {
        if (w != Terminal::tick) continue;
        for (const auto& [a, next] : normal_steps(pp.right()))
          out.emplace(a, attach(comp, next));
      }
      break;
    }
    case CompKind::choice: {
      out = normal_steps(pp.left());
      const auto& rhs = normal_steps(pp.right());
      out.insert(rhs.begin(), rhs.end());
      break;
    }
    case CompKind::par: {
      const auto& x = pp.sync();
      const auto& lhs = normal_steps(pp.left());
      const auto& rhs = normal_steps(pp.right());
      for (const auto& [a, next] : lhs) {
        if (x.contains(a)) {
          for (const auto& [b, next_r] : rhs)
            if (b == a) out.emplace(a, CompensableTerm::par(x, next, next_r));
        } else {
          out.emplace(a, CompensableTerm::par(x, next, pp.right()));
        }
      }
      for (const auto& [b, next] : rhs)
        if (!x.contains(b))
          out.emplace(b, CompensableTerm::par(x, pp.left(), next));
      break;
    }
    case CompKind::null:
      break;
  }
  return out;
}

CompTerminalSteps Engine::compute_terminal(const CompensableTerm& pp) {
  CompTerminalSteps out;
  if (pp.is_null()) return out;
  const auto null = StandardTerm::null();
  if (rules_.universal_bottom) out.emplace(Terminal::bot, null);
  switch (pp.kind()) {
    case CompKind::pair:
      for (const auto& [w, _] : terminal_steps(pp.forward())) {
        switch (w) {
          case Terminal::tick:
            out.emplace(w, pp.compensation());
            break;
          case Terminal::bang:
          case Terminal::query:
            out.emplace(w, StandardTerm::skip());
            break;
          case Terminal::bot:
            out.emplace(w, null);
            break;
        }
      }
      break;
    case CompKind::seq:
      for (const auto& [w, first] : terminal_steps(pp.left())) {
        if (w != Terminal::tick) {
          out.emplace(w, first);
          continue;
        }
        for (const auto& [w2, second] : terminal_steps(pp.right())) {
          if (w2 == Terminal::bot) {
            out.emplace(w2, null);
          } else if (rules_.reverse_compensation) {
            out.emplace(w2, StandardTerm::seq(second, first));
          } else {
            out.emplace(w2, StandardTerm::seq(first, second));
          }
        }
      }
      break;
    case CompKind::choice: {
      out.insert(terminal_steps(pp.left()).begin(),
                 terminal_steps(pp.left()).end());
      const auto& rhs = terminal_steps(pp.right());
      out.insert(rhs.begin(), rhs.end());
      break;
    }
    case CompKind::par: {
      const auto& tl = terminal_steps(pp.left());
      const auto& tr = terminal_steps(pp.right());
      for (const auto& [w1, c1] : tl)
        for (const auto& [w2, c2] : tr) {
          const Terminal w = sync_terminal(w1, w2);
          if (w == Terminal::bot) {
            out.emplace(w, null);
          } else {
            out.emplace(w, StandardTerm::par(pp.sync(), c1, c2));
          }
        }
      if (rules_.deadlock_clauses &&
          deadlocks(pp.sync(), normal_steps(pp.left()), tl,
                    normal_steps(pp.right()), tr))
        out.emplace(Terminal::bot, null);
      break;
    }
    case CompKind::null:
      break;
  }
  return out;
}

void Engine::charge_state() {
  if (++states_ > state_bound_)
    throw EngineBoundExceeded("LTS exceeds the state bound of " +
                              std::to_string(state_bound_) + " states");
}

const TraceSet& Engine::derived_traces(const StandardTerm& p) {
  if (p.is_null())
    throw std::invalid_argument("derived traces of the null process");
  if (auto it = dt_memo_.find(p); it != dt_memo_.end()) return it->second;
  charge_state();
  TraceSet out;
  for (const auto& [w, _] : terminal_steps(p)) out.insert(Trace{{}, w});
  // Memo entries are node-based, so references survive the recursion.
  for (const auto& [a, next] : normal_steps(p))
    for (const auto& t : derived_traces(next)) out.insert(prepend(a, t));
  return dt_memo_.emplace(p, std::move(out)).first->second;
}

const ForwardSet& Engine::forward_traces(const CompensableTerm& pp) {
  if (pp.is_null())
    throw std::invalid_argument("forward traces of the null process");
  if (auto it = ft_memo_.find(pp); it != ft_memo_.end()) return it->second;
  charge_state();
  ForwardSet out;
  for (const auto& [w, residual] : terminal_steps(pp))
    out.emplace(Trace{{}, w}, residual);
  for (const auto& [a, next] : normal_steps(pp))
    for (const auto& [t, residual] : forward_traces(next))
      out.emplace(prepend(a, t), residual);
  return ft_memo_.emplace(pp, std::move(out)).first->second;
}

PairSet Engine::derived_traces(const CompensableTerm& pp) {
  PairSet out;
  const ForwardSet forwards = forward_traces(pp);
  for (const auto& [t, residual] : forwards) {
    if (t.terminal == Terminal::bot) {
      out.insert(TracePair{t, bottom_trace()});
      continue;
    }
    for (const auto& tc : derived_traces(residual)) out.insert(TracePair{t, tc});
  }
  return out;
}

NormalSteps normal_steps_standard(const StandardTerm& p) {
  Engine e;
  return e.normal_steps(p);
}

TerminalSteps terminal_steps_standard(const StandardTerm& p) {
  Engine e;
  return e.terminal_steps(p);
}

CompNormalSteps normal_steps_compensable(const CompensableTerm& pp) {
  Engine e;
  return e.normal_steps(pp);
}

CompTerminalSteps terminal_steps_compensable(const CompensableTerm& pp) {
  Engine e;
  return e.terminal_steps(pp);
}

TraceSet derived_traces_standard(const StandardTerm& p) {
  Engine e;
  return e.derived_traces(p);
}

PairSet derived_traces_compensable(const CompensableTerm& pp) {
  Engine e;
  return e.derived_traces(pp);
}

}  // namespace ccsp
