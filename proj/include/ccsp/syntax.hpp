#pragma once

// Concrete ASCII syntax.
//
//   choice  := par ( "[]" choice )?
//   par     := handler ( "||" "{" events? "}" par )?
//   handler := seq ( "/>" handler )?
//   seq     := pair ( ";" seq )?
//   pair    := primary ( "%" pair )?
//   primary := event | skip | throw | yield | skipp | throww | yieldd
//            | "(" choice ")" | "[[" choice "]]"
//
// Events match [a-z][A-Za-z0-9_.]*.  "%" and the double-letter keywords make
// compensable terms, "[[ ]]" turns a compensable term into a standard one.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "ccsp/terms.hpp"

namespace ccsp {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t column, const std::string& message);
  /// 1-based column of the offending token.
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

/// An operator applied to operands of the wrong sort.
class SortError : public ParseError {
 public:
  using ParseError::ParseError;
};

AnyTerm parse(std::string_view source);
StandardTerm parse_standard(std::string_view source);
CompensableTerm parse_compensable(std::string_view source);

/// Fully parenthesised source text; parse(to_source(t)) == t for every term
/// without null processes.  The null processes print as "0".
std::string to_source(const StandardTerm& term);
std::string to_source(const CompensableTerm& term);
std::string to_source(const AnyTerm& term);

std::string render_sync_set(const SyncSet& x);

}  // namespace ccsp
