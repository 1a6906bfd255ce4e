#include "ccsp/correspondence.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <random>
#include <stdexcept>
#include <thread>

#include "ccsp/denotational.hpp"
#include "ccsp/syntax.hpp"

namespace ccsp {

namespace {

using Clock = std::chrono::steady_clock;

template <class Set, class Render>
void diff_into(const Set& want, const Set& have, Render render,
               std::vector<std::string>& out) {
  for (const auto& item : want)
    if (!have.contains(item)) out.push_back(render(item));
}

template <class Set, class Render>
CheckReport compare_sets(AnyTerm term, const Set& left, const Set& right,
                         Render render) {
  CheckReport report{std::move(term), false, {}, {}, {}};
  diff_into(right, left, render, report.missing_in_dt);
  diff_into(left, right, render, report.missing_in_t);
  report.holds = report.missing_in_dt.empty() && report.missing_in_t.empty();
  report.stats.traces = std::max(left.size(), right.size());
  return report;
}

std::string render_forward(const std::pair<Trace, StandardTerm>& item) {
  return "(" + render_trace(item.first) + ", " + to_source(item.second) + ")";
}

}  // namespace

CheckReport check_theorem1_standard(const StandardTerm& p,
                                    const RuleSet& rules,
                                    std::size_t state_bound) {
  const auto start = Clock::now();
  Engine engine(rules, state_bound);
  const TraceSet& dt = engine.derived_traces(p);
  const TraceSet t = eval_standard(p);
  CheckReport report = compare_sets(p, dt, t, render_trace);
  report.stats.states = engine.states_visited();
  report.stats.elapsed = Clock::now() - start;
  return report;
}

CheckReport check_theorem1_compensable(const CompensableTerm& pp,
                                       const RuleSet& rules,
                                       std::size_t state_bound) {
  const auto start = Clock::now();
  Engine engine(rules, state_bound);
  const PairSet dt = engine.derived_traces(pp);
  const PairSet t = eval_compensable(pp);
  CheckReport report = compare_sets(pp, dt, t, render_pair);
  report.stats.states = engine.states_visited();
  report.stats.elapsed = Clock::now() - start;
  return report;
}

CheckReport check_theorem1(const AnyTerm& term, const RuleSet& rules,
                           std::size_t state_bound) {
  if (const auto* p = std::get_if<StandardTerm>(&term))
    return check_theorem1_standard(*p, rules, state_bound);
  return check_theorem1_compensable(std::get<CompensableTerm>(term), rules,
                                    state_bound);
}

namespace {

CheckReport lemma_seq(const StandardOperands& ops, const RuleSet& rules,
                   std::size_t bound) {
  Engine engine(rules, bound);
  const StandardTerm composite = StandardTerm::seq(ops.p, ops.q);
  const TraceSet left = engine.derived_traces(composite);
  TraceSet right;
  const TraceSet& ps = engine.derived_traces(ops.p);
  const TraceSet& qs = engine.derived_traces(ops.q);
  for (const auto& p : ps)
    for (const auto& q : qs) right.insert(seq_traces(p, q));
  CheckReport report = compare_sets(composite, left, right, render_trace);
  report.stats.states = engine.states_visited();
  return report;
}

CheckReport lemma_synstd(const StandardOperands& ops, const RuleSet& rules,
                   std::size_t bound) {
  Engine engine(rules, bound);
  const StandardTerm composite = StandardTerm::par(ops.x, ops.p, ops.q);
  const TraceSet left = engine.derived_traces(composite);
  TraceSet right;
  const TraceSet& ps = engine.derived_traces(ops.p);
  const TraceSet& qs = engine.derived_traces(ops.q);
  for (const auto& p : ps)
    for (const auto& q : qs) right.merge(parallel_traces(ops.x, p, q));
  CheckReport report = compare_sets(composite, left, right, render_trace);
  report.stats.states = engine.states_visited();
  return report;
}

CheckReport lemma_nondead(const CompensableOperands& ops, const RuleSet& rules,
                   std::size_t bound) {
  Engine engine(rules, bound);
  const CompensableTerm composite =
      CompensableTerm::par(ops.x, ops.pp, ops.qq);
  ForwardSet left;
  for (const auto& item : engine.forward_traces(composite))
    if (item.first.terminal != Terminal::bot) left.insert(item);
  ForwardSet right;
  const ForwardSet& ps = engine.forward_traces(ops.pp);
  const ForwardSet& qs = engine.forward_traces(ops.qq);
  for (const auto& [p, pc] : ps)
    for (const auto& [q, qc] : qs)
      for (const auto& t : parallel_traces(ops.x, p, q)) {
        if (t.terminal == Terminal::bot) continue;
        right.emplace(t, StandardTerm::par(ops.x, pc, qc));
      }
  CheckReport report = compare_sets(composite, left, right, render_forward);
  report.stats.states = engine.states_visited();
  return report;
}

CheckReport lemma_dead(const CompensableOperands& ops, const RuleSet& rules,
                   std::size_t bound) {
  Engine engine(rules, bound);
  const CompensableTerm composite =
      CompensableTerm::par(ops.x, ops.pp, ops.qq);
  TraceSet left;
  for (const auto& [t, residual] : engine.forward_traces(composite))
    if (t.terminal == Terminal::bot && residual.is_null()) left.insert(t);
  TraceSet p_forwards;
  for (const auto& tt : eval_compensable(ops.pp)) p_forwards.insert(tt.forward);
  TraceSet q_forwards;
  for (const auto& tt : eval_compensable(ops.qq)) q_forwards.insert(tt.forward);
  TraceSet right;
  for (const auto& p : p_forwards)
    for (const auto& q : q_forwards)
      for (const auto& t : parallel_traces(ops.x, p, q))
        if (t.terminal == Terminal::bot) right.insert(t);
  CheckReport report = compare_sets(composite, left, right, render_trace);
  report.stats.states = engine.states_visited();
  return report;
}

}  // namespace

CheckReport check_lemma(LemmaKind kind, const LemmaInstance& instance,
                        const RuleSet& rules, std::size_t state_bound) {
  const auto start = Clock::now();
  auto run = [&]() -> CheckReport {
    if (kind == LemmaKind::seq || kind == LemmaKind::synstd) {
      const auto* ops = std::get_if<StandardOperands>(&instance);
      if (!ops) throw std::invalid_argument("lemma needs standard operands");
      return kind == LemmaKind::seq ? lemma_seq(*ops, rules, state_bound)
                                    : lemma_synstd(*ops, rules, state_bound);
    }
    const auto* ops = std::get_if<CompensableOperands>(&instance);
    if (!ops) throw std::invalid_argument("lemma needs compensable operands");
    return kind == LemmaKind::nondead ? lemma_nondead(*ops, rules, state_bound)
                                      : lemma_dead(*ops, rules, state_bound);
  };
  CheckReport report = run();
  report.stats.elapsed = Clock::now() - start;
  return report;
}

PartitionReport check_lemma_partition(const CompensableOperands& ops,
                                      const RuleSet& rules) {
  Engine engine(rules);
  const CompensableTerm composite =
      CompensableTerm::par(ops.x, ops.pp, ops.qq);

  // Right-hand sides of the two forward lemmas.
  ForwardSet live;
  TraceSet dead;
  const ForwardSet& ps = engine.forward_traces(ops.pp);
  const ForwardSet& qs = engine.forward_traces(ops.qq);
  for (const auto& [p, pc] : ps)
    for (const auto& [q, qc] : qs)
      for (const auto& t : parallel_traces(ops.x, p, q)) {
        if (t.terminal == Terminal::bot) {
          dead.insert(t);
        } else {
          live.emplace(t, StandardTerm::par(ops.x, pc, qc));
        }
      }

  PartitionReport report;
  std::map<Trace, std::vector<StandardTerm>> residuals;
  for (const auto& [t, residual] : engine.forward_traces(composite))
    residuals[t].push_back(residual);
  const PairSet derived = engine.derived_traces(composite);
  report.derived = derived.size();
  for (const auto& tt : derived) {
    const auto& [t, tc] = tt;
    // Live clause: some residual reached by t is the parallel
    // composition of operand compensations and derives tc.
    bool in_live = false;
    if (t.terminal != Terminal::bot) {
      for (const auto& residual : residuals[t]) {
        if (residual.is_null()) continue;
        if (live.contains({t, residual}) &&
            engine.derived_traces(residual).contains(tc))
          in_live = true;
      }
    }
    const bool in_dead = t.terminal == Terminal::bot && tc == bottom_trace() &&
                         dead.contains(t);
    if (in_live) ++report.nondead;
    if (in_dead) ++report.dead;
    if (in_live == in_dead)
      report.violations.push_back(render_pair(tt) +
                                  (in_live ? " matches both lemmas"
                                           : " matches neither lemma"));
  }
  return report;
}

// ---------------------------------------------------------------------------
// Generator

namespace {

class TermGenerator {
 public:
  explicit TermGenerator(const GenConfig& cfg)
      : cfg_(cfg),
        rng_(cfg.seed),
        std_ok_(cfg.max_size + 1, false),
        comp_ok_(cfg.max_size + 1, false) {
    if (cfg.alphabet.empty())
      throw std::invalid_argument("generator alphabet is empty");
    if (cfg.max_size < 1) throw std::invalid_argument("max_size must be >= 1");
    if (!(cfg.sync_density >= 0.0 && cfg.sync_density <= 1.0))
      throw std::invalid_argument("sync_density must lie in [0,1]");
    // Sizes that admit at least one term of each sort.
    for (std::size_t n = 1; n <= cfg.max_size; ++n) {
      std_ok_[n] = n == 1 || split_exists(n, std_ok_) || comp_ok_[n - 1];
      comp_ok_[n] = split_exists(n, std_ok_) || split_exists(n, comp_ok_);
    }
  }

  StandardTerm standard() { return std_of_size(pick_size(std_ok_)); }
  CompensableTerm compensable() { return comp_of_size(pick_size(comp_ok_)); }

  // A sync set drawn on its own, for lemma instances.
  static SyncSet sync_for(const GenConfig& cfg) {
    return TermGenerator(cfg).sync_set();
  }

 private:
  enum class Ctor { seq, choice, handler, par, block, pair };

  std::uint64_t below(std::uint64_t n) { return rng_() % n; }

  bool coin(double p) {
    return static_cast<double>(rng_() >> 11) * 0x1.0p-53 < p;
  }

  // Uniform over admissible sizes in the upper half of [1, max_size].
  std::size_t pick_size(const std::vector<bool>& ok) {
    std::vector<std::size_t> sizes;
    for (std::size_t n = std::max<std::size_t>(1, (cfg_.max_size + 1) / 2);
         n <= cfg_.max_size; ++n)
      if (ok[n]) sizes.push_back(n);
    if (sizes.empty())
      for (std::size_t n = 1; n <= cfg_.max_size; ++n)
        if (ok[n]) sizes.push_back(n);
    if (sizes.empty())
      throw std::invalid_argument("max_size " + std::to_string(cfg_.max_size) +
                                  " admits no term of the requested sort");
    return sizes[below(sizes.size())];
  }

  // Can n - 1 nodes be divided between two operands admissible under `ok`?
  static bool split_exists(std::size_t n, const std::vector<bool>& ok) {
    for (std::size_t l = 1; l + 1 < n; ++l)
      if (ok[l] && ok[n - 1 - l]) return true;
    return false;
  }

  std::size_t split(std::size_t n, const std::vector<bool>& ok) {
    std::vector<std::size_t> lefts;
    for (std::size_t l = 1; l + 1 < n; ++l)
      if (ok[l] && ok[n - 1 - l]) lefts.push_back(l);
    return lefts[below(lefts.size())];
  }

  SyncSet sync_set() {
    SyncSet x;
    for (const auto& e : cfg_.alphabet)
      if (coin(cfg_.sync_density)) x.insert(e);
    return x;
  }

  StandardTerm leaf() {
    const auto k = below(cfg_.alphabet.size() + 3);
    if (k < cfg_.alphabet.size()) return StandardTerm::atom(cfg_.alphabet[k]);
    switch (k - cfg_.alphabet.size()) {
      case 0:
        return StandardTerm::skip();
      case 1:
        return StandardTerm::throw_();
      default:
        return StandardTerm::yield();
    }
  }

  StandardTerm std_of_size(std::size_t n) {
    if (n == 1) return leaf();
    std::vector<Ctor> ctors;
    if (split_exists(n, std_ok_))
      ctors.insert(ctors.end(),
                   {Ctor::seq, Ctor::choice, Ctor::handler, Ctor::par});
    if (comp_ok_[n - 1]) ctors.push_back(Ctor::block);
    const Ctor c = ctors[below(ctors.size())];
    if (c == Ctor::block) return StandardTerm::block(comp_of_size(n - 1));
    SyncSet x = c == Ctor::par ? sync_set() : SyncSet{};
    const std::size_t l = split(n, std_ok_);
    StandardTerm p = std_of_size(l);
    StandardTerm q = std_of_size(n - 1 - l);
    switch (c) {
      case Ctor::seq:
        return StandardTerm::seq(std::move(p), std::move(q));
      case Ctor::choice:
        return StandardTerm::choice(std::move(p), std::move(q));
      case Ctor::handler:
        return StandardTerm::handler(std::move(p), std::move(q));
      default:
        return StandardTerm::par(std::move(x), std::move(p), std::move(q));
    }
  }

  CompensableTerm comp_of_size(std::size_t n) {
    std::vector<Ctor> ctors;
    if (split_exists(n, std_ok_)) ctors.push_back(Ctor::pair);
    if (split_exists(n, comp_ok_))
      ctors.insert(ctors.end(), {Ctor::seq, Ctor::choice, Ctor::par});
    const Ctor c = ctors[below(ctors.size())];
    if (c == Ctor::pair) {
      const std::size_t l = split(n, std_ok_);
      StandardTerm p = std_of_size(l);
      return CompensableTerm::pair(std::move(p), std_of_size(n - 1 - l));
    }
    SyncSet x = c == Ctor::par ? sync_set() : SyncSet{};
    const std::size_t l = split(n, comp_ok_);
    CompensableTerm pp = comp_of_size(l);
    CompensableTerm qq = comp_of_size(n - 1 - l);
    switch (c) {
      case Ctor::seq:
        return CompensableTerm::seq(std::move(pp), std::move(qq));
      case Ctor::choice:
        return CompensableTerm::choice(std::move(pp), std::move(qq));
      default:
        return CompensableTerm::par(std::move(x), std::move(pp),
                                    std::move(qq));
    }
  }

  const GenConfig& cfg_;
  std::mt19937_64 rng_;
  std::vector<bool> std_ok_;
  std::vector<bool> comp_ok_;
};

}  // namespace

StandardTerm generate_standard(const GenConfig& cfg) {
  return TermGenerator(cfg).standard();
}

CompensableTerm generate_compensable(const GenConfig& cfg) {
  return TermGenerator(cfg).compensable();
}

AnyTerm generate_term(const GenConfig& cfg, Sort sort) {
  if (sort == Sort::standard) return generate_standard(cfg);
  return generate_compensable(cfg);
}

std::size_t term_size(const AnyTerm& term) noexcept {
  return std::visit([](const auto& t) { return t.size(); }, term);
}

// ---------------------------------------------------------------------------
// Shrinking

namespace {

std::vector<SyncSet> smaller_sync_sets(const SyncSet& x) {
  std::vector<SyncSet> out;
  for (const auto& e : x) {
    SyncSet y = x;
    y.erase(e);
    out.push_back(std::move(y));
  }
  return out;
}

std::vector<StandardTerm> shrink_std(const StandardTerm& t);
std::vector<CompensableTerm> shrink_comp(const CompensableTerm& t);

std::vector<StandardTerm> shrink_std(const StandardTerm& t) {
  std::vector<StandardTerm> out;
  switch (t.kind()) {
    case StdKind::seq:
    case StdKind::choice:
    case StdKind::handler:
    case StdKind::par: {
      out.push_back(t.left());
      out.push_back(t.right());
      auto rebuild = [&](SyncSet x, StandardTerm p, StandardTerm q) {
        switch (t.kind()) {
          case StdKind::seq:
            return StandardTerm::seq(std::move(p), std::move(q));
          case StdKind::choice:
            return StandardTerm::choice(std::move(p), std::move(q));
          case StdKind::handler:
            return StandardTerm::handler(std::move(p), std::move(q));
          default:
            return StandardTerm::par(std::move(x), std::move(p), std::move(q));
        }
      };
      for (auto& l : shrink_std(t.left()))
        out.push_back(rebuild(t.sync(), std::move(l), t.right()));
      for (auto& r : shrink_std(t.right()))
        out.push_back(rebuild(t.sync(), t.left(), std::move(r)));
      if (t.kind() == StdKind::par)
        for (auto& x : smaller_sync_sets(t.sync()))
          out.push_back(rebuild(std::move(x), t.left(), t.right()));
      break;
    }
    case StdKind::block:
      for (auto& b : shrink_comp(t.body()))
        out.push_back(StandardTerm::block(std::move(b)));
      break;
    default:
      break;
  }
  return out;
}

std::vector<CompensableTerm> shrink_comp(const CompensableTerm& t) {
  std::vector<CompensableTerm> out;
  switch (t.kind()) {
    case CompKind::pair:
      for (auto& f : shrink_std(t.forward()))
        out.push_back(CompensableTerm::pair(std::move(f), t.compensation()));
      for (auto& c : shrink_std(t.compensation()))
        out.push_back(CompensableTerm::pair(t.forward(), std::move(c)));
      break;
    case CompKind::seq:
    case CompKind::choice:
    case CompKind::par: {
      out.push_back(t.left());
      out.push_back(t.right());
      auto rebuild = [&](SyncSet x, CompensableTerm p, CompensableTerm q) {
        switch (t.kind()) {
          case CompKind::seq:
            return CompensableTerm::seq(std::move(p), std::move(q));
          case CompKind::choice:
            return CompensableTerm::choice(std::move(p), std::move(q));
          default:
            return CompensableTerm::par(std::move(x), std::move(p),
                                        std::move(q));
        }
      };
      for (auto& l : shrink_comp(t.left()))
        out.push_back(rebuild(t.sync(), std::move(l), t.right()));
      for (auto& r : shrink_comp(t.right()))
        out.push_back(rebuild(t.sync(), t.left(), std::move(r)));
      if (t.kind() == CompKind::par)
        for (auto& x : smaller_sync_sets(t.sync()))
          out.push_back(rebuild(std::move(x), t.left(), t.right()));
      break;
    }
    case CompKind::null:
      break;
  }
  return out;
}

}  // namespace

std::vector<AnyTerm> shrink_candidates(const AnyTerm& term) {
  std::vector<AnyTerm> out;
  if (const auto* p = std::get_if<StandardTerm>(&term)) {
    for (auto& c : shrink_std(*p)) out.emplace_back(std::move(c));
  } else {
    for (auto& c : shrink_comp(std::get<CompensableTerm>(term)))
      out.emplace_back(std::move(c));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const AnyTerm& a, const AnyTerm& b) {
                     return term_size(a) < term_size(b);
                   });
  return out;
}

// ---------------------------------------------------------------------------
// Campaigns

std::uint64_t item_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

enum class Outcome { pass, fail, engine_error };

struct ItemResult {
  Outcome outcome = Outcome::pass;
  std::optional<Counterexample> counterexample;
};

// A lemma instance packed into one term so it can be shrunk like any other
// term: the composite P;Q, P||X Q or PP||X QQ.
AnyTerm lemma_composite(LemmaKind kind, const LemmaInstance& inst) {
  if (kind == LemmaKind::seq) {
    const auto& ops = std::get<StandardOperands>(inst);
    return StandardTerm::seq(ops.p, ops.q);
  }
  if (kind == LemmaKind::synstd) {
    const auto& ops = std::get<StandardOperands>(inst);
    return StandardTerm::par(ops.x, ops.p, ops.q);
  }
  const auto& ops = std::get<CompensableOperands>(inst);
  return CompensableTerm::par(ops.x, ops.pp, ops.qq);
}

std::optional<LemmaInstance> lemma_operands(LemmaKind kind,
                                            const AnyTerm& composite) {
  if (kind == LemmaKind::seq || kind == LemmaKind::synstd) {
    const auto* t = std::get_if<StandardTerm>(&composite);
    const StdKind want = kind == LemmaKind::seq ? StdKind::seq : StdKind::par;
    if (!t || t->kind() != want) return std::nullopt;
    return StandardOperands{t->left(), t->right(), t->sync()};
  }
  const auto* t = std::get_if<CompensableTerm>(&composite);
  if (!t || t->kind() != CompKind::par) return std::nullopt;
  return CompensableOperands{t->left(), t->right(), t->sync()};
}

class ItemChecker {
 public:
  ItemChecker(const CampaignOptions& options) : options_(options) {}

  // nullopt when the engine bound fires or the term is not a lemma shape.
  std::optional<CheckReport> check(const AnyTerm& term) const {
    try {
      if (!options_.lemma) return check_theorem1(term, options_.rules, options_.state_bound);
      auto inst = lemma_operands(*options_.lemma, term);
      if (!inst) return std::nullopt;
      return check_lemma(*options_.lemma, *inst, options_.rules,
                         options_.state_bound);
    } catch (const EngineBoundExceeded&) {
      return std::nullopt;
    }
  }

  ItemResult run(std::size_t index, const AnyTerm& term) const {
    ItemResult result;
    auto report = check(term);
    if (!report) {
      result.outcome = Outcome::engine_error;
      return result;
    }
    if (report->holds) return result;
    result.outcome = Outcome::fail;
    auto fails = [this](const AnyTerm& t) {
      auto r = check(t);
      return r && !r->holds;
    };
    AnyTerm shrunk = shrink(term, fails);
    result.counterexample =
        Counterexample{index, term, shrunk, *check(shrunk)};
    return result;
  }

 private:
  const CampaignOptions& options_;
};

}  // namespace

CampaignSummary run_campaign(const GenConfig& cfg, std::size_t count,
                             const CampaignOptions& options) {
  // Work items: (campaign index, term).
  std::vector<AnyTerm> terms;
  if (options.lemma) {
    const bool standard_ops = *options.lemma == LemmaKind::seq ||
                              *options.lemma == LemmaKind::synstd;
    for (std::size_t i = 0; i < count; ++i) {
      GenConfig c = cfg;
      c.seed = item_seed(cfg.seed, 2 * i);
      GenConfig d = cfg;
      d.seed = item_seed(cfg.seed, 2 * i + 1);
      SyncSet x = TermGenerator::sync_for(d);
      LemmaInstance inst =
          standard_ops
              ? LemmaInstance{StandardOperands{generate_standard(c),
                                               generate_standard(d), x}}
              : LemmaInstance{CompensableOperands{generate_compensable(c),
                                                  generate_compensable(d), x}};
      terms.push_back(lemma_composite(*options.lemma, inst));
    }
  } else {
    for (std::size_t i = 0; i < count; ++i) {
      GenConfig c = cfg;
      c.seed = item_seed(cfg.seed, i);
      if (options.standard) terms.push_back(generate_standard(c));
      // A separate stream so the two sorts are not built from one draw
      // sequence.
      c.seed = item_seed(~cfg.seed, i);
      if (options.compensable) terms.push_back(generate_compensable(c));
    }
  }

  std::vector<ItemResult> results(terms.size());
  const ItemChecker checker(options);
  unsigned workers = options.threads ? options.threads
                                     : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(
      std::min<std::size_t>(workers, std::max<std::size_t>(1, terms.size())));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < terms.size(); i = next++)
      results[i] = checker.run(i, terms[i]);
  };
  std::vector<std::jthread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  pool.clear();

  CampaignSummary summary;
  for (auto& r : results) {
    switch (r.outcome) {
      case Outcome::pass:
        ++summary.passed;
        break;
      case Outcome::engine_error:
        ++summary.engine_errors;
        break;
      case Outcome::fail: {
        ++summary.failed;
        auto& best = summary.first_counterexample;
        const auto key = [](const Counterexample& c) {
          return std::make_pair(term_size(c.shrunk), c.index);
        };
        if (!best || key(*r.counterexample) < key(*best))
          best = std::move(r.counterexample);
        break;
      }
    }
  }
  return summary;
}

}  // namespace ccsp
