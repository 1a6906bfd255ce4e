#pragma once

// Small-step operational semantics and derived traces.
//
// There are no silent transitions: whenever a construct "behaves as" its
// successor (P;Q after P ticks, P|>Q after P throws, [PP] after PP throws,
// PP;QQ after PP ticks) the successor's transitions are surfaced directly.

#include <cstddef>
#include <stdexcept>
#include <set>
#include <unordered_map>
#include <utility>

#include "ccsp/terms.hpp"
#include "ccsp/trace.hpp"

namespace ccsp {

using NormalSteps = std::set<std::pair<Event, StandardTerm>>;
using TerminalSteps = std::set<std::pair<Terminal, StandardTerm>>;
using CompNormalSteps = std::set<std::pair<Event, CompensableTerm>>;
/// Terminal steps of a compensable term target the installed compensation
/// (or the null process for bot).
using CompTerminalSteps = std::set<std::pair<Terminal, StandardTerm>>;
/// Forward traces of a compensable term with the state they leave behind.
using ForwardSet = std::set<std::pair<Trace, StandardTerm>>;

/// Switches for individual rule groups.  Everything is on in the real
/// semantics; the mutation tests turn single groups off.
struct RuleSet {
  bool universal_bottom = true;       // P -bot-> 0 for every P != 0
  bool deadlock_clauses = true;       // bot on failed synchronisation
  bool reverse_compensation = true;   // PP;QQ installs Q;P, not P;Q

  friend bool operator==(const RuleSet&, const RuleSet&) = default;
};

inline constexpr std::size_t kDefaultStateBound = 1'000'000;

class EngineBoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// attach(P, QQ) = (SKIP / P) ; QQ -- QQ with P accumulated behind its
/// compensation.
CompensableTerm attach(StandardTerm compensation, CompensableTerm qq);

/// Step functions and LTS enumeration.  Results are memoised per engine; an
/// engine is not thread-safe, distinct engines are independent.
class Engine {
 public:
  explicit Engine(RuleSet rules = {},
                  std::size_t state_bound = kDefaultStateBound);

  const RuleSet& rules() const noexcept { return rules_; }

  const NormalSteps& normal_steps(const StandardTerm& p);
  const TerminalSteps& terminal_steps(const StandardTerm& p);
  const CompNormalSteps& normal_steps(const CompensableTerm& pp);
  const CompTerminalSteps& terminal_steps(const CompensableTerm& pp);

  /// DT(P).  Throws std::invalid_argument for the null process and
  /// EngineBoundExceeded when more than `state_bound` states are visited.
  const TraceSet& derived_traces(const StandardTerm& p);
  /// DT(PP): partial forwards pair with <bot>, completed forwards with the
  /// derived traces of the installed compensation.
  PairSet derived_traces(const CompensableTerm& pp);
  /// All PP -t-> R with R the residual compensation (0 when t is partial).
  const ForwardSet& forward_traces(const CompensableTerm& pp);

  /// Distinct states whose derived traces have been enumerated or are
  /// being enumerated.
  std::size_t states_visited() const noexcept { return states_; }

 private:
  NormalSteps compute_normal(const StandardTerm& p);
  TerminalSteps compute_terminal(const StandardTerm& p);
  CompNormalSteps compute_normal(const CompensableTerm& pp);
  CompTerminalSteps compute_terminal(const CompensableTerm& pp);
  void charge_state();

  RuleSet rules_;
  std::size_t state_bound_;
  std::size_t states_ = 0;
  std::unordered_map<StandardTerm, NormalSteps> normal_memo_;
  std::unordered_map<StandardTerm, TerminalSteps> terminal_memo_;
  std::unordered_map<CompensableTerm, CompNormalSteps> cnormal_memo_;
  std::unordered_map<CompensableTerm, CompTerminalSteps> cterminal_memo_;
  std::unordered_map<StandardTerm, TraceSet> dt_memo_;
  std::unordered_map<CompensableTerm, ForwardSet> ft_memo_;
};

// Free-function forms with the default rule set.
NormalSteps normal_steps_standard(const StandardTerm& p);
TerminalSteps terminal_steps_standard(const StandardTerm& p);
CompNormalSteps normal_steps_compensable(const CompensableTerm& pp);
CompTerminalSteps terminal_steps_compensable(const CompensableTerm& pp);
TraceSet derived_traces_standard(const StandardTerm& p);
PairSet derived_traces_compensable(const CompensableTerm& pp);

}  // namespace ccsp
