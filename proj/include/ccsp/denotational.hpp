#pragma once

// Compositional trace semantics T(P) and T(PP).

#include <cstddef>
#include <string>
#include <vector>

#include "ccsp/terms.hpp"
#include "ccsp/trace.hpp"

namespace ccsp {

using StandardDenotation = TraceSet;
using CompensableDenotation = PairSet;

/// Throws std::invalid_argument for the null process.
StandardDenotation eval_standard(const StandardTerm& term);
CompensableDenotation eval_compensable(const CompensableTerm& term);

/// Adds <bot> and p<bot> for every event prefix p, the full sequence
/// included.
void close_standard(TraceSet& traces);

/// Adds (<bot>,<bot>), (p<bot>,<bot>) for forward prefixes and (p, p'<bot>)
/// for compensation prefixes of completed forwards.
void close_compensable(PairSet& pairs);

/// Human-readable descriptions of every violated bottom-closure axiom.
std::vector<std::string> closure_violations(const TraceSet& traces);
/// Also checks that partial forward traces carry the compensation <bot>.
std::vector<std::string> closure_violations(const PairSet& pairs);

/// Every denotation produced by eval_* is re-checked against the closure
/// axioms while the audit is enabled.  Counters are process-wide.
struct ClosureAudit {
  static void enable(bool on) noexcept;
  static bool enabled() noexcept;
  static void reset() noexcept;
  static std::size_t checked() noexcept;
  static std::size_t violations() noexcept;
};

}  // namespace ccsp
