#include "ccsp/syntax.hpp"

#include <cctype>
#include <optional>
#include <utility>
#include <vector>

namespace ccsp {

ParseError::ParseError(std::size_t column, const std::string& message)
    : std::runtime_error("column " + std::to_string(column) + ": " + message),
      column_(column) {}

namespace {

enum class Tok {
  ident,
  kw_skip,
  kw_throw,
  kw_yield,
  kw_skipp,
  kw_throww,
  kw_yieldd,
  percent,    // %
  semicolon,  // ;
  handler,    // />
  par,        // ||
  choice,     // []
  lblock,     // [[
  rblock,     // ]]
  lparen,
  rparen,
  lbrace,
  rbrace,
  comma,
  end,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t column;
};

bool ident_start(char c) { return c >= 'a' && c <= 'z'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.';
}

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto two = [&](char a, char b) {
    return i + 1 < src.size() && src[i] == a && src[i + 1] == b;
  };
  while (i < src.size()) {
    const char c = src[i];
    const std::size_t col = i + 1;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (ident_start(c)) {
      std::size_t j = i + 1;
      while (j < src.size() && ident_char(src[j])) ++j;
      std::string word(src.substr(i, j - i));
      Tok kind = Tok::ident;
      if (word == "skip") kind = Tok::kw_skip;
      else if (word == "throw") kind = Tok::kw_throw;
      else if (word == "yield") kind = Tok::kw_yield;
      else if (word == "skipp") kind = Tok::kw_skipp;
      else if (word == "throww") kind = Tok::kw_throww;
      else if (word == "yieldd") kind = Tok::kw_yieldd;
      out.push_back({kind, std::move(word), col});
      i = j;
      continue;
    }
    if (two('/', '>')) {
      out.push_back({Tok::handler, "/>", col});
      i += 2;
    } else if (two('|', '|')) {
      out.push_back({Tok::par, "||", col});
      i += 2;
    } else if (two('[', ']')) {
      out.push_back({Tok::choice, "[]", col});
      i += 2;
    } else if (two('[', '[')) {
      out.push_back({Tok::lblock, "[[", col});
      i += 2;
    } else if (two(']', ']')) {
      out.push_back({Tok::rblock, "]]", col});
      i += 2;
    } else {
      Tok kind;
      switch (c) {
        case '%': kind = Tok::percent; break;
        case ';': kind = Tok::semicolon; break;
        case '(': kind = Tok::lparen; break;
        case ')': kind = Tok::rparen; break;
        case '{': kind = Tok::lbrace; break;
        case '}': kind = Tok::rbrace; break;
        case ',': kind = Tok::comma; break;
        default:
          throw ParseError(col, std::string("unexpected character '") + c +
                                    "'");
      }
      out.push_back({kind, std::string(1, c), col});
      ++i;
    }
  }
  out.push_back({Tok::end, "end of input", src.size() + 1});
  return out;
}

const char* sort_name(const AnyTerm& t) {
  return std::holds_alternative<StandardTerm>(t) ? "standard" : "compensable";
}

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(lex(src)) {}

  AnyTerm parse_all() {
    AnyTerm t = choice();
    if (peek().kind != Tok::end)
      throw ParseError(peek().column, "unexpected '" + peek().text + "'");
    return t;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }

  const Token& expect(Tok k, const char* what) {
    if (peek().kind != k)
      throw ParseError(peek().column, std::string("expected ") + what +
                                          ", found '" + peek().text + "'");
    return next();
  }

  // Combines same-sort operands with the standard or compensable
  // constructor; mixed sorts are a sort error at the operator.
  template <class MakeStd, class MakeComp>
  AnyTerm same_sort(const Token& op, AnyTerm lhs, AnyTerm rhs, MakeStd mk_std,
                    MakeComp mk_comp) {
    if (lhs.index() != rhs.index())
      throw SortError(op.column, "operator '" + op.text + "' combines a " +
                                     sort_name(lhs) + " and a " +
                                     sort_name(rhs) + " term");
    if (auto* p = std::get_if<StandardTerm>(&lhs))
      return mk_std(std::move(*p), std::move(std::get<StandardTerm>(rhs)));
    return mk_comp(std::move(std::get<CompensableTerm>(lhs)),
                   std::move(std::get<CompensableTerm>(rhs)));
  }

  StandardTerm require_standard(const Token& op, AnyTerm t) {
    if (auto* p = std::get_if<StandardTerm>(&t)) return std::move(*p);
    throw SortError(op.column, "operator '" + op.text +
                                   "' needs a standard operand");
  }

  AnyTerm choice() {
    AnyTerm lhs = par();
    if (peek().kind != Tok::choice) return lhs;
    const Token op = next();
    AnyTerm rhs = choice();
    return same_sort(op, std::move(lhs), std::move(rhs),
                     StandardTerm::choice, CompensableTerm::choice);
  }

  AnyTerm par() {
    AnyTerm lhs = handler();
    if (peek().kind != Tok::par) return lhs;
    const Token op = next();
    expect(Tok::lbrace, "'{' after '||'");
    SyncSet x;
    if (peek().kind != Tok::rbrace) {
      do {
        const Token& e = expect(Tok::ident, "an event name");
        x.insert(make_event(e));
      } while (accept(Tok::comma));
    }
    expect(Tok::rbrace, "'}'");
    AnyTerm rhs = par();
    return same_sort(
        op, std::move(lhs), std::move(rhs),
        [&](StandardTerm p, StandardTerm q) {
          return StandardTerm::par(x, std::move(p), std::move(q));
        },
        [&](CompensableTerm p, CompensableTerm q) {
          return CompensableTerm::par(x, std::move(p), std::move(q));
        });
  }

  AnyTerm handler() {
    AnyTerm lhs = seq();
    if (peek().kind != Tok::handler) return lhs;
    const Token op = next();
    AnyTerm rhs = handler();
    StandardTerm p = require_standard(op, std::move(lhs));
    StandardTerm q = require_standard(op, std::move(rhs));
    return StandardTerm::handler(std::move(p), std::move(q));
  }

  AnyTerm seq() {
    AnyTerm lhs = pair();
    if (peek().kind != Tok::semicolon) return lhs;
    const Token op = next();
    AnyTerm rhs = seq();
    return same_sort(op, std::move(lhs), std::move(rhs), StandardTerm::seq,
                     CompensableTerm::seq);
  }

  AnyTerm pair() {
    AnyTerm lhs = primary();
    if (peek().kind != Tok::percent) return lhs;
    const Token op = next();
    AnyTerm rhs = pair();
    StandardTerm p = require_standard(op, std::move(lhs));
    StandardTerm q = require_standard(op, std::move(rhs));
    return CompensableTerm::pair(std::move(p), std::move(q));
  }

  AnyTerm primary() {
    const Token& t = next();
    switch (t.kind) {
      case Tok::ident:
        return StandardTerm::atom(make_event(t));
      case Tok::kw_skip:
        return StandardTerm::skip();
      case Tok::kw_throw:
        return StandardTerm::throw_();
      case Tok::kw_yield:
        return StandardTerm::yield();
      case Tok::kw_skipp:
        return desugar_keyword(Keyword::skipp);
      case Tok::kw_throww:
        return desugar_keyword(Keyword::throww);
      case Tok::kw_yieldd:
        return desugar_keyword(Keyword::yieldd);
      case Tok::lparen: {
        AnyTerm inner = choice();
        expect(Tok::rparen, "')'");
        return inner;
      }
      case Tok::lblock: {
        const Token open = t;
        AnyTerm inner = choice();
        expect(Tok::rblock, "']]'");
        if (auto* pp = std::get_if<CompensableTerm>(&inner))
          return StandardTerm::block(std::move(*pp));
        throw SortError(open.column,
                        "transaction block '[[ ]]' needs a compensable term");
      }
      default:
        throw ParseError(t.column, "expected a term, found '" + t.text + "'");
    }
  }

  static Event make_event(const Token& t) {
    if (is_reserved_event_name(t.text))
      throw ParseError(t.column, "'" + t.text + "' is reserved");
    return Event(t.text);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

void emit(const StandardTerm& t, std::string& out);
void emit(const CompensableTerm& t, std::string& out);

template <class Term>
void emit_binary(const Term& t, std::string_view op, std::string& out) {
  out += '(';
  emit(t.left(), out);
  out += op;
  emit(t.right(), out);
  out += ')';
}

void emit(const CompensableTerm& t, std::string& out) {
  switch (t.kind()) {
    case CompKind::pair:
      out += '(';
      emit(t.forward(), out);
      out += " % ";
      emit(t.compensation(), out);
      out += ')';
      return;
    case CompKind::seq:
    case CompKind::choice:
    case CompKind::par: {
      std::string op;
      if (t.kind() == CompKind::seq) op = " ; ";
      else if (t.kind() == CompKind::choice) op = " [] ";
      else op = " ||" + render_sync_set(t.sync()) + " ";
      emit_binary(t, op, out);
      return;
    }
    case CompKind::null:
      out += '0';
      return;
  }
}

void emit(const StandardTerm& t, std::string& out) {
  switch (t.kind()) {
    case StdKind::atom:
      out += t.event().name();
      return;
    case StdKind::skip:
      out += "skip";
      return;
    case StdKind::throw_:
      out += "throw";
      return;
    case StdKind::yield:
      out += "yield";
      return;
    case StdKind::null:
      out += '0';
      return;
    case StdKind::block:
      out += "[[ ";
      emit(t.body(), out);
      out += " ]]";
      return;
    case StdKind::seq:
    case StdKind::choice:
    case StdKind::handler:
    case StdKind::par: {
      std::string op;
      switch (t.kind()) {
        case StdKind::seq: op = " ; "; break;
        case StdKind::choice: op = " [] "; break;
        case StdKind::handler: op = " /> "; break;
        default: op = " ||" + render_sync_set(t.sync()) + " "; break;
      }
      emit_binary(t, op, out);
      return;
    }
  }
}

}  // namespace

AnyTerm parse(std::string_view source) { return Parser(source).parse_all(); }

StandardTerm parse_standard(std::string_view source) {
  AnyTerm t = parse(source);
  if (auto* p = std::get_if<StandardTerm>(&t)) return std::move(*p);
  throw SortError(1, "expected a standard term, got a compensable one");
}

CompensableTerm parse_compensable(std::string_view source) {
  AnyTerm t = parse(source);
  if (auto* p = std::get_if<CompensableTerm>(&t)) return std::move(*p);
  throw SortError(1, "expected a compensable term, got a standard one");
}

std::string to_source(const StandardTerm& term) {
  std::string out;
  emit(term, out);
  return out;
}

std::string to_source(const CompensableTerm& term) {
  std::string out;
  emit(term, out);
  return out;
}

std::string to_source(const AnyTerm& term) {
  return std::visit([](const auto& t) { return to_source(t); }, term);
}

std::string render_sync_set(const SyncSet& x) {
  std::string out = "{";
  bool first = true;
  for (const auto& e : x) {
    if (!first) out += ',';
    out += e.name();
    first = false;
  }
  out += '}';
  return out;
}

}  // namespace ccsp
