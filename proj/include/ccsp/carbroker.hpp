#pragma once

// The car-broker web service: a buyer, a broker and a supplier negotiating a
// car purchase, and a loan provider, over finite sets of car models and
// quotes.  Channel values are folded into dotted event names.

#include <cstddef>
#include <stdexcept>

#include "ccsp/terms.hpp"

namespace ccsp {

struct CarBrokerConfig {
  std::size_t models = 1;            // car models m1..mM
  std::size_t quotes_per_model = 1;  // quotes q1..qQ offered for each model

  static constexpr std::size_t kMaxModels = 2;
  static constexpr std::size_t kMaxQuotes = 2;
};

/// The participants and sync sets, exposed for inspection and testing.
struct CarBroker {
  StandardTerm buyer;       // a transaction block
  CompensableTerm broker;
  CompensableTerm supplier;
  StandardTerm loanstar;    // a transaction block
  StandardTerm block;       // [[ broker ||B supplier ]]
  StandardTerm system;      // (buyer ||A block) ||C loanstar
  SyncSet a;                // buyer <-> broker block
  SyncSet b;                // broker <-> supplier
  SyncSet c;                // system <-> loanstar
};

/// Throws std::invalid_argument when a count is zero or over its limit.
CarBroker build_carbroker_parts(const CarBrokerConfig& cfg);
StandardTerm build_carbroker(const CarBrokerConfig& cfg);

}  // namespace ccsp
