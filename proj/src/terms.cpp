#include "ccsp/terms.hpp"

#include <optional>
#include <stdexcept>
#include <utility>

namespace ccsp {

namespace {

constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ULL;
constexpr std::uint64_t kFnvPrime = 0x100000001b3ULL;

std::uint64_t hash_bytes(std::string_view s, std::uint64_t h = kFnvOffset) {
  for (unsigned char c : s) {
    h ^= c;
    h *= kFnvPrime;
  }
  return h;
}

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  // splitmix64 finaliser over the combined value
  std::uint64_t z = h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t hash_sync(const SyncSet& x) {
  std::uint64_t h = 0x5157u;
  for (const auto& e : x) h = mix(h, hash_bytes(e.name()));
  return h;
}

}  // namespace

bool is_reserved_event_name(std::string_view name) noexcept {
  return name.empty() || name == "ok" || name == "!" || name == "?" ||
         name == "bot";
}

Event::Event(std::string name) : name_(std::move(name)) {
  if (is_reserved_event_name(name_))
    throw std::invalid_argument("invalid event name '" + name_ + "'");
}

namespace detail {

struct StdNode {
  StdKind kind;
  std::optional<Event> event;
  SyncSet sync;
  std::optional<StandardTerm> left;
  std::optional<StandardTerm> right;
  std::optional<CompensableTerm> body;
  std::size_t size = 1;
  std::uint64_t hash = 0;
};

struct CompNode {
  CompKind kind;
  SyncSet sync;
  std::optional<StandardTerm> forward;
  std::optional<StandardTerm> compensation;
  std::optional<CompensableTerm> left;
  std::optional<CompensableTerm> right;
  std::size_t size = 1;
  std::uint64_t hash = 0;
};

}  // namespace detail

using detail::CompNode;
using detail::StdNode;

namespace {

std::shared_ptr<const StdNode> make_leaf(StdKind kind) {
  auto n = std::make_shared<StdNode>();
  n->kind = kind;
  n->hash = mix(0x1000u, static_cast<std::uint64_t>(kind));
  return n;
}

std::shared_ptr<const StdNode> make_binary(StdKind kind, SyncSet x,
                                           StandardTerm p, StandardTerm q) {
  auto n = std::make_shared<StdNode>();
  n->kind = kind;
  n->size = 1 + p.size() + q.size();
  std::uint64_t h = mix(0x1000u, static_cast<std::uint64_t>(kind));
  h = mix(h, hash_sync(x));
  h = mix(h, p.hash());
  h = mix(h, q.hash());
  n->hash = h;
  n->sync = std::move(x);
  n->left = std::move(p);
  n->right = std::move(q);
  return n;
}

std::shared_ptr<const CompNode> make_cbinary(CompKind kind, SyncSet x,
                                             CompensableTerm pp,
                                             CompensableTerm qq) {
  auto n = std::make_shared<CompNode>();
  n->kind = kind;
  n->size = 1 + pp.size() + qq.size();
  std::uint64_t h = mix(0x2000u, static_cast<std::uint64_t>(kind));
  h = mix(h, hash_sync(x));
  h = mix(h, pp.hash());
  h = mix(h, qq.hash());
  n->hash = h;
  n->sync = std::move(x);
  n->left = std::move(pp);
  n->right = std::move(qq);
  return n;
}

}  // namespace

// ---------------------------------------------------------------------------
// StandardTerm

StandardTerm StandardTerm::atom(Event e) {
  auto n = std::make_shared<StdNode>();
  n->kind = StdKind::atom;
  n->hash = mix(mix(0x1000u, static_cast<std::uint64_t>(StdKind::atom)),
                hash_bytes(e.name()));
  n->event = std::move(e);
  return StandardTerm(std::move(n));
}

StandardTerm StandardTerm::skip() {
  static const auto node = make_leaf(StdKind::skip);
  return StandardTerm(node);
}

StandardTerm StandardTerm::throw_() {
  static const auto node = make_leaf(StdKind::throw_);
  return StandardTerm(node);
}

StandardTerm StandardTerm::yield() {
  static const auto node = make_leaf(StdKind::yield);
  return StandardTerm(node);
}

StandardTerm StandardTerm::null() {
  static const auto node = make_leaf(StdKind::null);
  return StandardTerm(node);
}

StandardTerm StandardTerm::seq(StandardTerm p, StandardTerm q) {
  return StandardTerm(make_binary(StdKind::seq, {}, std::move(p), std::move(q)));
}

StandardTerm StandardTerm::choice(StandardTerm p, StandardTerm q) {
  return StandardTerm(
      make_binary(StdKind::choice, {}, std::move(p), std::move(q)));
}

StandardTerm StandardTerm::handler(StandardTerm p, StandardTerm q) {
  return StandardTerm(
      make_binary(StdKind::handler, {}, std::move(p), std::move(q)));
}

StandardTerm StandardTerm::par(SyncSet x, StandardTerm p, StandardTerm q) {
  return StandardTerm(
      make_binary(StdKind::par, std::move(x), std::move(p), std::move(q)));
}

StandardTerm StandardTerm::block(CompensableTerm pp) {
  auto n = std::make_shared<StdNode>();
  n->kind = StdKind::block;
  n->size = 1 + pp.size();
  n->hash = mix(mix(0x1000u, static_cast<std::uint64_t>(StdKind::block)),
                pp.hash());
  n->body = std::move(pp);
  return StandardTerm(std::move(n));
}

StdKind StandardTerm::kind() const noexcept { return node_->kind; }

const Event& StandardTerm::event() const {
  if (!node_->event) throw std::logic_error("event() on non-atom term");
  return *node_->event;
}

const SyncSet& StandardTerm::sync() const { return node_->sync; }

const StandardTerm& StandardTerm::left() const {
  if (!node_->left) throw std::logic_error("left() on leaf term");
  return *node_->left;
}

const StandardTerm& StandardTerm::right() const {
  if (!node_->right) throw std::logic_error("right() on leaf term");
  return *node_->right;
}

const CompensableTerm& StandardTerm::body() const {
  if (!node_->body) throw std::logic_error("body() on non-block term");
  return *node_->body;
}

std::size_t StandardTerm::size() const noexcept { return node_->size; }
std::uint64_t StandardTerm::hash() const noexcept { return node_->hash; }

namespace {

std::strong_ordering compare_std(const StdNode& a, const StdNode& b);
std::strong_ordering compare_comp(const CompNode& a, const CompNode& b);

}  // namespace

bool operator==(const StandardTerm& a, const StandardTerm& b) noexcept {
  if (a.node_ == b.node_) return true;
  if (a.node_->hash != b.node_->hash) return false;
  return compare_std(*a.node_, *b.node_) == 0;
}

std::strong_ordering operator<=>(const StandardTerm& a,
                                 const StandardTerm& b) noexcept {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  return compare_std(*a.node_, *b.node_);
}

// ---------------------------------------------------------------------------
// CompensableTerm

CompensableTerm CompensableTerm::pair(StandardTerm forward,
                                      StandardTerm compensation) {
  auto n = std::make_shared<CompNode>();
  n->kind = CompKind::pair;
  n->size = 1 + forward.size() + compensation.size();
  std::uint64_t h = mix(0x2000u, static_cast<std::uint64_t>(CompKind::pair));
  h = mix(h, forward.hash());
  h = mix(h, compensation.hash());
  n->hash = h;
  n->forward = std::move(forward);
  n->compensation = std::move(compensation);
  return CompensableTerm(std::move(n));
}

CompensableTerm CompensableTerm::seq(CompensableTerm pp, CompensableTerm qq) {
  return CompensableTerm(
      make_cbinary(CompKind::seq, {}, std::move(pp), std::move(qq)));
}

CompensableTerm CompensableTerm::choice(CompensableTerm pp,
                                        CompensableTerm qq) {
  return CompensableTerm(
      make_cbinary(CompKind::choice, {}, std::move(pp), std::move(qq)));
}

CompensableTerm CompensableTerm::par(SyncSet x, CompensableTerm pp,
                                     CompensableTerm qq) {
  return CompensableTerm(
      make_cbinary(CompKind::par, std::move(x), std::move(pp), std::move(qq)));
}

CompensableTerm CompensableTerm::null() {
  static const auto node = [] {
    auto n = std::make_shared<CompNode>();
    n->kind = CompKind::null;
    n->hash = mix(0x2000u, static_cast<std::uint64_t>(CompKind::null));
    return std::shared_ptr<const CompNode>(std::move(n));
  }();
  return CompensableTerm(node);
}

CompKind CompensableTerm::kind() const noexcept { return node_->kind; }

const SyncSet& CompensableTerm::sync() const { return node_->sync; }

const StandardTerm& CompensableTerm::forward() const {
  if (!node_->forward) throw std::logic_error("forward() on non-pair term");
  return *node_->forward;
}

const StandardTerm& CompensableTerm::compensation() const {
  if (!node_->compensation)
    throw std::logic_error("compensation() on non-pair term");
  return *node_->compensation;
}

const CompensableTerm& CompensableTerm::left() const {
  if (!node_->left) throw std::logic_error("left() on non-binary term");
  return *node_->left;
}

const CompensableTerm& CompensableTerm::right() const {
  if (!node_->right) throw std::logic_error("right() on non-binary term");
  return *node_->right;
}

std::size_t CompensableTerm::size() const noexcept { return node_->size; }
std::uint64_t CompensableTerm::hash() const noexcept { return node_->hash; }

bool operator==(const CompensableTerm& a, const CompensableTerm& b) noexcept {
  if (a.node_ == b.node_) return true;
  if (a.node_->hash != b.node_->hash) return false;
  return compare_comp(*a.node_, *b.node_) == 0;
}

std::strong_ordering operator<=>(const CompensableTerm& a,
                                 const CompensableTerm& b) noexcept {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  return compare_comp(*a.node_, *b.node_);
}

namespace {

// Orders by hash first, then structurally.  Equal structure implies equal
// hash, so this is a total order consistent with equality.
std::strong_ordering compare_std(const StdNode& a, const StdNode& b) {
  if (auto c = a.hash <=> b.hash; c != 0) return c;
  if (auto c = a.kind <=> b.kind; c != 0) return c;
  if (a.event || b.event) {
    if (auto c = a.event <=> b.event; c != 0) return c;
  }
  if (auto c = a.sync <=> b.sync; c != 0) return c;
  if (a.left && b.left) {
    if (auto c = *a.left <=> *b.left; c != 0) return c;
    if (auto c = *a.right <=> *b.right; c != 0) return c;
  }
  if (a.body && b.body) return *a.body <=> *b.body;
  return std::strong_ordering::equal;
}

std::strong_ordering compare_comp(const CompNode& a, const CompNode& b) {
  if (auto c = a.hash <=> b.hash; c != 0) return c;
  if (auto c = a.kind <=> b.kind; c != 0) return c;
  if (auto c = a.sync <=> b.sync; c != 0) return c;
  if (a.forward && b.forward) {
    if (auto c = *a.forward <=> *b.forward; c != 0) return c;
    if (auto c = *a.compensation <=> *b.compensation; c != 0) return c;
  }
  if (a.left && b.left) {
    if (auto c = *a.left <=> *b.left; c != 0) return c;
    return *a.right <=> *b.right;
  }
  return std::strong_ordering::equal;
}

}  // namespace

// ---------------------------------------------------------------------------

CompensableTerm desugar_keyword(Keyword kw) {
  switch (kw) {
    case Keyword::skipp:
      return CompensableTerm::pair(StandardTerm::skip(), StandardTerm::skip());
    case Keyword::throww:
      return CompensableTerm::pair(StandardTerm::throw_(),
                                   StandardTerm::skip());
    case Keyword::yieldd:
      return CompensableTerm::pair(StandardTerm::yield(), StandardTerm::skip());
  }
  throw std::invalid_argument("unknown keyword");
}

StandardTerm indexed_choice(std::span<const StandardTerm> branches) {
  if (branches.empty())
    throw std::invalid_argument("indexed_choice: no branches");
  StandardTerm acc = branches.back();
  for (auto it = branches.rbegin() + 1; it != branches.rend(); ++it)
    acc = StandardTerm::choice(*it, std::move(acc));
  return acc;
}

CompensableTerm indexed_choice(std::span<const CompensableTerm> branches) {
  if (branches.empty())
    throw std::invalid_argument("indexed_choice: no branches");
  CompensableTerm acc = branches.back();
  for (auto it = branches.rbegin() + 1; it != branches.rend(); ++it)
    acc = CompensableTerm::choice(*it, std::move(acc));
  return acc;
}

namespace {

void collect(const StandardTerm& t, std::set<Event>& out);

void collect(const CompensableTerm& t, std::set<Event>& out) {
  switch (t.kind()) {
    case CompKind::pair:
      collect(t.forward(), out);
      collect(t.compensation(), out);
      break;
    case CompKind::par:
      out.insert(t.sync().begin(), t.sync().end());
      [[fallthrough]];
    case CompKind::seq:
    case CompKind::choice:
      collect(t.left(), out);
      collect(t.right(), out);
      break;
    case CompKind::null:
      break;
  }
}

void collect(const StandardTerm& t, std::set<Event>& out) {
  switch (t.kind()) {
    case StdKind::atom:
      out.insert(t.event());
      break;
    case StdKind::par:
      out.insert(t.sync().begin(), t.sync().end());
      [[fallthrough]];
    case StdKind::seq:
    case StdKind::choice:
    case StdKind::handler:
      collect(t.left(), out);
      collect(t.right(), out);
      break;
    case StdKind::block:
      collect(t.body(), out);
      break;
    case StdKind::skip:
    case StdKind::throw_:
    case StdKind::yield:
    case StdKind::null:
      break;
  }
}

}  // namespace

std::set<Event> alphabet(const StandardTerm& term) {
  std::set<Event> out;
  collect(term, out);
  return out;
}

std::set<Event> alphabet(const CompensableTerm& term) {
  std::set<Event> out;
  collect(term, out);
  return out;
}

}  // namespace ccsp
