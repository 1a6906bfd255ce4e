#pragma once

#include <initializer_list>
#include <string_view>

#include "ccsp/syntax.hpp"
#include "ccsp/terms.hpp"
#include "ccsp/trace.hpp"

namespace ccsp::test {

constexpr Terminal ok = Terminal::tick;
constexpr Terminal bang = Terminal::bang;
constexpr Terminal query = Terminal::query;
constexpr Terminal bot = Terminal::bot;

inline Trace tr(std::initializer_list<std::string_view> events, Terminal w) {
  return make_trace(events, w);
}

inline Trace tr(Terminal w) { return make_trace({}, w); }

inline StandardTerm S(std::string_view src) { return parse_standard(src); }
inline CompensableTerm C(std::string_view src) {
  return parse_compensable(src);
}

inline StandardTerm atom(const char* name) {
  return StandardTerm::atom(Event(name));
}

}  // namespace ccsp::test
