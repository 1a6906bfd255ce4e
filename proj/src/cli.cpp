#include "ccsp/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <deque>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "ccsp/carbroker.hpp"
#include "ccsp/correspondence.hpp"
#include "ccsp/denotational.hpp"
#include "ccsp/operational.hpp"
#include "ccsp/syntax.hpp"

namespace ccsp {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<Event> parse_alphabet(const std::string& text) {
  std::vector<Event> out;
  std::set<std::string> seen;
  std::stringstream ss(text);
  std::string name;
  while (std::getline(ss, name, ',')) {
    if (name.empty() || is_reserved_event_name(name))
      throw UsageError("bad alphabet entry '" + name + "'");
    if (seen.insert(name).second) out.emplace_back(name);
  }
  if (out.empty()) throw UsageError("alphabet is empty");
  return out;
}

template <class Set, class Render>
void print_sorted(const Set& items, Render render, std::ostream& out) {
  std::vector<std::string> lines;
  lines.reserve(items.size());
  for (const auto& item : items) lines.push_back(render(item));
  std::sort(lines.begin(), lines.end());
  for (const auto& line : lines) out << line << '\n';
}

void print_lines(std::vector<std::string> lines, const char* heading,
                 std::ostream& out) {
  if (lines.empty()) return;
  std::sort(lines.begin(), lines.end());
  out << heading << ":\n";
  for (const auto& line : lines) out << "  " << line << '\n';
}

void print_report(const CheckReport& report, bool timing, std::ostream& out) {
  out << "term: " << to_source(report.term) << '\n';
  out << "result: " << (report.holds ? "holds" : "fails") << '\n';
  out << "states: " << report.stats.states << '\n';
  out << "traces: " << report.stats.traces << '\n';
  if (timing) out << "elapsed: " << report.stats.elapsed.count() << "s\n";
  print_lines(report.missing_in_dt, "missing in DT", out);
  print_lines(report.missing_in_t, "missing in T", out);
}

// One labelled transition of either sort.
struct Move {
  std::string label;
  AnyTerm target;
  bool terminal;
};

std::vector<Move> moves(Engine& engine, const AnyTerm& state) {
  std::vector<Move> out;
  auto add = [&](const auto& normal, const auto& terminal) {
    for (const auto& [e, t] : normal) out.push_back({e.name(), t, false});
    for (const auto& [w, t] : terminal)
      out.push_back({std::string(terminal_name(w)), t, true});
  };
  if (const auto* p = std::get_if<StandardTerm>(&state)) {
    if (!p->is_null()) add(engine.normal_steps(*p), engine.terminal_steps(*p));
  } else {
    const auto& pp = std::get<CompensableTerm>(state);
    if (!pp.is_null())
      add(engine.normal_steps(pp), engine.terminal_steps(pp));
  }
  return out;
}

void dump_lts(const AnyTerm& start, std::size_t bound, std::ostream& out) {
  Engine engine;
  std::set<AnyTerm> seen{start};
  std::deque<AnyTerm> queue{start};
  while (!queue.empty()) {
    AnyTerm state = std::move(queue.front());
    queue.pop_front();
    const std::string from = to_source(state);
    std::vector<std::string> lines;
    for (auto& m : moves(engine, state)) {
      lines.push_back(from + " --" + m.label + "--> " + to_source(m.target));
      if (seen.insert(m.target).second) {
        if (seen.size() > bound)
          throw EngineBoundExceeded("more than " + std::to_string(bound) +
                                    " states");
        queue.push_back(std::move(m.target));
      }
    }
    std::sort(lines.begin(), lines.end());
    for (const auto& line : lines) out << line << '\n';
  }
}

int step_session(const AnyTerm& start, std::istream& in, std::ostream& out) {
  Engine engine;
  AnyTerm state = start;
  Trace trace{{}, Terminal::tick};
  for (;;) {
    auto options = moves(engine, state);
    std::sort(options.begin(), options.end(),
              [](const Move& a, const Move& b) {
                return std::make_pair(a.terminal, a.label) <
                       std::make_pair(b.terminal, b.label);
              });
    out << "state: " << to_source(state) << '\n';
    for (std::size_t i = 0; i < options.size(); ++i)
      out << "  " << i + 1 << ") " << options[i].label << " --> "
          << to_source(options[i].target) << '\n';
    std::size_t choice = 0;
    for (;;) {
      out << "choice> " << std::flush;
      std::string line;
      if (!std::getline(in, line)) {
        out << "\nsession ended before termination\n";
        return kExitOk;
      }
      std::istringstream ls(line);
      if (ls >> choice && choice >= 1 && choice <= options.size()) break;
      out << "enter a number from 1 to " << options.size() << '\n';
    }
    const Move& m = options[choice - 1];
    if (!m.terminal) {
      trace.events.emplace_back(m.label);
      state = m.target;
      continue;
    }
    for (Terminal w : {Terminal::tick, Terminal::bang, Terminal::query,
                       Terminal::bot})
      if (terminal_name(w) == m.label) trace.terminal = w;
    out << "trace: " << render_trace(trace) << '\n';
    if (std::holds_alternative<CompensableTerm>(state))
      out << "compensation: " << to_source(m.target) << '\n';
    return kExitOk;
  }
}

RuleSet mutant_rules(const std::string& mutant) {
  RuleSet rules;
  if (mutant == "universal") rules.universal_bottom = false;
  else if (mutant == "deadlock") rules.deadlock_clauses = false;
  else if (mutant == "reverse") rules.reverse_compensation = false;
  else if (!mutant.empty()) throw UsageError("unknown mutant '" + mutant + "'");
  return rules;
}

std::optional<LemmaKind> lemma_kind(const std::string& name) {
  if (name.empty()) return std::nullopt;
  if (name == "seq") return LemmaKind::seq;
  if (name == "synstd") return LemmaKind::synstd;
  if (name == "nondead") return LemmaKind::nondead;
  if (name == "dead") return LemmaKind::dead;
  throw UsageError("unknown lemma '" + name + "'");
}

struct FuzzArgs {
  std::size_t count = 100;
  std::size_t size = 7;
  std::string alphabet = "a,b,c";
  std::uint64_t seed = 0;
  std::string lemma;
  std::string sort = "both";
  double sync_density = 0.5;
  std::string mutant;
  unsigned threads = 0;
};

int run_fuzz(const FuzzArgs& args, std::size_t bound, bool timing,
             std::ostream& out) {
  GenConfig cfg;
  cfg.seed = args.seed;
  cfg.max_size = args.size;
  cfg.alphabet = parse_alphabet(args.alphabet);
  cfg.sync_density = args.sync_density;
  CampaignOptions options;
  options.standard = args.sort != "compensable";
  options.compensable = args.sort != "standard";
  options.lemma = lemma_kind(args.lemma);
  options.rules = mutant_rules(args.mutant);
  options.threads = args.threads;
  options.state_bound = bound;

  const CampaignSummary summary = run_campaign(cfg, args.count, options);
  out << "passed: " << summary.passed << '\n';
  out << "failed: " << summary.failed << '\n';
  out << "engine errors: " << summary.engine_errors << '\n';
  if (const auto& cx = summary.first_counterexample) {
    out << "counterexample at item " << cx->index << '\n';
    out << "original: " << to_source(cx->original) << '\n';
    out << "shrunk (size " << term_size(cx->shrunk)
        << "): " << to_source(cx->shrunk) << '\n';
    print_report(cx->report, timing, out);
  }
  if (summary.failed > 0) return kExitMismatch;
  if (summary.engine_errors > 0) return kExitBound;
  return kExitOk;
}

int run_carbroker(std::size_t models, std::size_t quotes, std::size_t bound,
                  std::ostream& out) {
  CarBrokerConfig cfg{models, quotes};
  const StandardTerm system = [&] {
    try {
      return build_carbroker(cfg);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();
  out << "system: " << to_source(system) << '\n';
  try {
    Engine engine({}, bound);
    const TraceSet& traces = engine.derived_traces(system);
    out << "traces:\n";
    print_sorted(traces, render_trace, out);
  } catch (const EngineBoundExceeded&) {
    out << "traces: omitted, state bound exceeded\n";
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err) {
  CLI::App app{"Compensating CSP: trace and operational semantics"};
  app.name("ccsp");
  app.require_subcommand(1);

  std::string term_text;
  std::size_t bound = kDefaultStateBound;
  bool timing = false;

  auto term_command = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("term", term_text, "term in the ASCII syntax")->required();
    return sub;
  };
  auto* traces = term_command("traces", "print the trace denotation");
  auto* dtraces = term_command("dtraces", "print the derived traces");
  auto* lts = term_command("lts", "print every reachable transition");
  auto* step = term_command("step", "step through transitions interactively");
  auto* check = term_command("check", "compare derived traces and denotation");
  std::string check_mutant;
  check->add_option("--mutant", check_mutant,
                    "disable a rule group: universal, deadlock or reverse");
  check->add_flag("--timing", timing, "report elapsed time");
  for (auto* sub : {dtraces, lts, check})
    sub->add_option("--bound", bound, "state bound");

  FuzzArgs fuzz_args;
  auto* fuzz = app.add_subcommand("fuzz", "run a random correspondence campaign");
  fuzz->add_option("--count", fuzz_args.count, "items per sort");
  fuzz->add_option("--size", fuzz_args.size, "maximum term size in nodes");
  fuzz->add_option("--alphabet", fuzz_args.alphabet, "comma separated events");
  fuzz->add_option("--seed", fuzz_args.seed, "campaign seed");
  fuzz->add_option("--lemma", fuzz_args.lemma, "seq, synstd, nondead or dead");
  fuzz->add_option("--sort", fuzz_args.sort, "standard, compensable or both")
      ->check(CLI::IsMember({"standard", "compensable", "both"}));
  fuzz->add_option("--sync-density", fuzz_args.sync_density,
                   "probability of each event joining a sync set")
      ->check(CLI::Range(0.0, 1.0));
  fuzz->add_option("--mutant", fuzz_args.mutant,
                   "disable a rule group: universal, deadlock or reverse");
  fuzz->add_option("--threads", fuzz_args.threads, "worker threads, 0 = all");
  fuzz->add_option("--bound", bound, "state bound per item");
  fuzz->add_flag("--timing", timing, "report elapsed time");

  auto* example = app.add_subcommand("example", "built-in example systems");
  example->require_subcommand(1);
  auto* carbroker = example->add_subcommand("carbroker", "the car broker");
  std::size_t models = 1;
  std::size_t quotes = 1;
  carbroker->add_option("--models", models, "number of car models");
  carbroker->add_option("--quotes", quotes, "quotes per model");
  carbroker->add_option("--bound", bound, "state bound for trace listing");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*fuzz) return run_fuzz(fuzz_args, bound, timing, out);
    if (*carbroker) return run_carbroker(models, quotes, bound, out);

    const AnyTerm term = parse(term_text);
    if (*traces) {
      if (const auto* p = std::get_if<StandardTerm>(&term))
        print_sorted(eval_standard(*p), render_trace, out);
      else
        print_sorted(eval_compensable(std::get<CompensableTerm>(term)),
                     render_pair, out);
    } else if (*dtraces) {
      Engine engine({}, bound);
      if (const auto* p = std::get_if<StandardTerm>(&term))
        print_sorted(engine.derived_traces(*p), render_trace, out);
      else
        print_sorted(engine.derived_traces(std::get<CompensableTerm>(term)),
                     render_pair, out);
    } else if (*lts) {
      dump_lts(term, bound, out);
    } else if (*step) {
      return step_session(term, in, out);
    } else if (*check) {
      const CheckReport report =
          check_theorem1(term, mutant_rules(check_mutant), bound);
      print_report(report, timing, out);
      return report.holds ? kExitOk : kExitMismatch;
    }
    return kExitOk;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const EngineBoundExceeded& e) {
    err << "error: state bound exceeded: " << e.what() << '\n';
    return kExitBound;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace ccsp
