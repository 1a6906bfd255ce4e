#pragma once

// Abstract syntax of compensating CSP: standard and compensable terms.
//
// Terms are immutable trees shared through reference-counted handles.  Each
// node caches its structural hash and node count, so equality, ordering and
// hashing of large LTS states stay cheap.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <variant>

namespace ccsp {

/// An observable action name.  Names reserved for terminal symbols are
/// rejected.
class Event {
 public:
  explicit Event(std::string name);

  const std::string& name() const noexcept { return name_; }

  friend bool operator==(const Event&, const Event&) = default;
  friend auto operator<=>(const Event&, const Event&) = default;

 private:
  std::string name_;
};

/// Returns true when `name` may not be used as an event ("ok", "!", "?",
/// "bot" and the empty string).
bool is_reserved_event_name(std::string_view name) noexcept;

enum class Terminal : std::uint8_t { tick, bang, query, bot };

using SyncSet = std::set<Event>;

enum class StdKind : std::uint8_t {
  atom,
  skip,
  throw_,
  yield,
  seq,
  choice,
  handler,  // P |> Q, interrupt handler
  par,      // synchronous parallel over a set X
  block,    // transaction block [PP]
  null,     // terminated process 0
};

enum class CompKind : std::uint8_t {
  pair,  // compensation pair P / Q
  seq,
  choice,
  par,
  null,
};

namespace detail {
struct StdNode;
struct CompNode;
}  // namespace detail

class CompensableTerm;

class StandardTerm {
 public:
  static StandardTerm atom(Event e);
  static StandardTerm skip();
  static StandardTerm throw_();
  static StandardTerm yield();
  static StandardTerm null();
  static StandardTerm seq(StandardTerm p, StandardTerm q);
  static StandardTerm choice(StandardTerm p, StandardTerm q);
  static StandardTerm handler(StandardTerm p, StandardTerm q);
  static StandardTerm par(SyncSet x, StandardTerm p, StandardTerm q);
  static StandardTerm block(CompensableTerm pp);

  StdKind kind() const noexcept;
  bool is_null() const noexcept { return kind() == StdKind::null; }

  // Accessors are only meaningful for the matching kind.
  const Event& event() const;
  const SyncSet& sync() const;
  const StandardTerm& left() const;
  const StandardTerm& right() const;
  const CompensableTerm& body() const;

  std::size_t size() const noexcept;
  std::uint64_t hash() const noexcept;

  friend bool operator==(const StandardTerm& a, const StandardTerm& b) noexcept;
  friend std::strong_ordering operator<=>(const StandardTerm& a,
                                          const StandardTerm& b) noexcept;

 private:
  explicit StandardTerm(std::shared_ptr<const detail::StdNode> node)
      : node_(std::move(node)) {}

  std::shared_ptr<const detail::StdNode> node_;
};

class CompensableTerm {
 public:
  static CompensableTerm pair(StandardTerm forward, StandardTerm compensation);
  static CompensableTerm seq(CompensableTerm pp, CompensableTerm qq);
  static CompensableTerm choice(CompensableTerm pp, CompensableTerm qq);
  static CompensableTerm par(SyncSet x, CompensableTerm pp, CompensableTerm qq);
  static CompensableTerm null();

  CompKind kind() const noexcept;
  bool is_null() const noexcept { return kind() == CompKind::null; }

  const SyncSet& sync() const;
  // pair
  const StandardTerm& forward() const;
  const StandardTerm& compensation() const;
  // seq, choice, par
  const CompensableTerm& left() const;
  const CompensableTerm& right() const;

  std::size_t size() const noexcept;
  std::uint64_t hash() const noexcept;

  friend bool operator==(const CompensableTerm& a,
                         const CompensableTerm& b) noexcept;
  friend std::strong_ordering operator<=>(const CompensableTerm& a,
                                          const CompensableTerm& b) noexcept;

 private:
  explicit CompensableTerm(std::shared_ptr<const detail::CompNode> node)
      : node_(std::move(node)) {}

  std::shared_ptr<const detail::CompNode> node_;
};

/// Either sort, as produced by the parser and the generator.
using AnyTerm = std::variant<StandardTerm, CompensableTerm>;

enum class Sort : std::uint8_t { standard, compensable };

enum class Keyword : std::uint8_t { skipp, throww, yieldd };

/// SKIPP, THROWW and YIELDD: the standard process paired with an empty
/// compensation.
CompensableTerm desugar_keyword(Keyword kw);

/// Right fold of binary choice.  Throws std::invalid_argument on an empty
/// sequence.
StandardTerm indexed_choice(std::span<const StandardTerm> branches);
CompensableTerm indexed_choice(std::span<const CompensableTerm> branches);

/// Events occurring in atoms and synchronisation sets.
std::set<Event> alphabet(const StandardTerm& term);
std::set<Event> alphabet(const CompensableTerm& term);

}  // namespace ccsp

template <>
struct std::hash<ccsp::StandardTerm> {
  std::size_t operator()(const ccsp::StandardTerm& t) const noexcept {
    return static_cast<std::size_t>(t.hash());
  }
};

template <>
struct std::hash<ccsp::CompensableTerm> {
  std::size_t operator()(const ccsp::CompensableTerm& t) const noexcept {
    return static_cast<std::size_t>(t.hash());
  }
};
