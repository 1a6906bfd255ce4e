#pragma once

// Executable correspondence between the trace semantics and the operational
// semantics: DT = T checked as exact set equality on concrete terms, the
// supporting lemmas for sequence and parallel composition, a bounded random
// term generator and a shrinking fuzz campaign driver.

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ccsp/operational.hpp"
#include "ccsp/terms.hpp"
#include "ccsp/trace.hpp"

namespace ccsp {

struct CheckStats {
  std::size_t states = 0;
  std::size_t traces = 0;
  std::chrono::duration<double> elapsed{};
};

/// Outcome of comparing the two sides of an equation.  Differences are
/// rendered items (traces, pairs, or trace/residual pairs for the forward
/// lemmas) so one report type serves every check.
struct CheckReport {
  AnyTerm term;
  bool holds = false;
  std::vector<std::string> missing_in_dt;  // in T (right side) but not DT
  std::vector<std::string> missing_in_t;   // in DT (left side) but not T
  CheckStats stats;
};

/// Each check runs on a fresh engine; EngineBoundExceeded propagates.
CheckReport check_theorem1_standard(
    const StandardTerm& p, const RuleSet& rules = {},
    std::size_t state_bound = kDefaultStateBound);
CheckReport check_theorem1_compensable(
    const CompensableTerm& pp, const RuleSet& rules = {},
    std::size_t state_bound = kDefaultStateBound);
CheckReport check_theorem1(const AnyTerm& term, const RuleSet& rules = {},
                           std::size_t state_bound = kDefaultStateBound);

enum class LemmaKind : std::uint8_t { seq, synstd, nondead, dead };

struct StandardOperands {
  StandardTerm p;
  StandardTerm q;
  SyncSet x;  // ignored by the seq lemma
};

struct CompensableOperands {
  CompensableTerm pp;
  CompensableTerm qq;
  SyncSet x;
};

using LemmaInstance = std::variant<StandardOperands, CompensableOperands>;

/// seq:     (P;Q) -t-> 0        iff t = p;q with P -p-> 0, Q -q-> 0
/// synstd:  (P||X Q) -t-> 0     iff t in p||X q with P -p-> 0, Q -q-> 0
/// nondead: (PP||X QQ) -t-> R, last(t) != bot
///                              iff t in p||X q, PP -p-> P, QQ -q-> Q,
///                                  R = P||X Q
/// dead:    (PP||X QQ) -t-> 0, last(t) = bot
///                              iff t in p||X q, p, q forward traces of T(PP),
///                                  T(QQ)
/// The left side is always enumerated on the composite term; the right side
/// combines operand enumerations with the trace-level operator.  Throws
/// std::invalid_argument if the operands have the wrong sort.
CheckReport check_lemma(LemmaKind kind, const LemmaInstance& instance,
                        const RuleSet& rules = {},
                        std::size_t state_bound = kDefaultStateBound);

/// Every derived pair of PP ||X QQ must fall under exactly one of the
/// non-deadlocking and deadlocking forward lemmas.
struct PartitionReport {
  std::size_t derived = 0;
  std::size_t nondead = 0;
  std::size_t dead = 0;
  std::vector<std::string> violations;
};

PartitionReport check_lemma_partition(const CompensableOperands& operands,
                                      const RuleSet& rules = {});

struct GenConfig {
  std::uint64_t seed = 0;
  std::size_t max_size = 7;
  std::vector<Event> alphabet;
  double sync_density = 0.5;
};

/// Throws std::invalid_argument for an empty alphabet, a zero size bound,
/// sync_density outside [0,1], or a bound too small for the sort (the
/// smallest compensable term has three nodes).
StandardTerm generate_standard(const GenConfig& cfg);
CompensableTerm generate_compensable(const GenConfig& cfg);
AnyTerm generate_term(const GenConfig& cfg, Sort sort);

std::size_t term_size(const AnyTerm& term) noexcept;

/// Smallest term reachable from `term` by replacing operators with their
/// same-sort children and shrinking sync sets, for which `still_fails`
/// keeps returning true.  Greedy; `term` itself must fail.
template <class Pred>
AnyTerm shrink(const AnyTerm& term, Pred still_fails);

/// Candidates one shrink step away, smallest first.
std::vector<AnyTerm> shrink_candidates(const AnyTerm& term);

struct Counterexample {
  std::size_t index = 0;  // position in the campaign
  AnyTerm original;
  AnyTerm shrunk;
  CheckReport report;  // report for the shrunk term
};

struct CampaignSummary {
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t engine_errors = 0;
  std::optional<Counterexample> first_counterexample;
};

struct CampaignOptions {
  bool standard = true;
  bool compensable = true;
  std::optional<LemmaKind> lemma;  // run a lemma instead of the theorem
  RuleSet rules;
  unsigned threads = 0;  // 0 = hardware concurrency
  std::size_t state_bound = kDefaultStateBound;
};

/// Checks `count` generated terms of each selected sort (or `count` lemma
/// instances).  Item i is generated from a seed derived from (cfg.seed, i),
/// so the summary depends only on (cfg, count, options).
CampaignSummary run_campaign(const GenConfig& cfg, std::size_t count,
                             const CampaignOptions& options = {});

/// Seed for item `index` of a campaign seeded with `seed`.
std::uint64_t item_seed(std::uint64_t seed, std::uint64_t index) noexcept;

// ---------------------------------------------------------------------------

template <class Pred>
AnyTerm shrink(const AnyTerm& term, Pred still_fails) {
  AnyTerm best = term;
  bool progress = true;
  while (progress) {
    progress = false;
    for (auto& candidate : shrink_candidates(best)) {
      if (still_fails(candidate)) {
        best = std::move(candidate);
        progress = true;
        break;
      }
    }
  }
  return best;
}

}  // namespace ccsp
