#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "dgcd/polynomial.hpp"

namespace dgcd {

/// Structured diagnostic for malformed polynomial text. Line and column are
/// 1-based and point at the offending character.
class ParseError : public Error {
 public:
  enum class Kind {
    Lexical,
    Syntax,
    UnknownIdentifier,
    BadExponent,
    ArityMismatch,
  };

  ParseError(Kind kind, std::size_t line, std::size_t column, std::string message);

  Kind kind() const { return kind_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& detail() const { return detail_; }

 private:
  Kind kind_;
  std::size_t line_;
  std::size_t column_;
  std::string detail_;
};

/// Grammar (explicit '*' required, '^' takes a non-negative integer literal):
///
///   expr    := term (('+' | '-') term)*
///   term    := unary ('*' unary)*
///   unary   := ('+' | '-') unary | power
///   power   := primary ('^' INTEGER)?
///   primary := INTEGER ('/' INTEGER)? | IDENT | '(' expr ')'
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

/// Terms in descending ring order, e.g. "-3/2*x1^2*x2 + x3 - 1". The output
/// re-parses to the same polynomial.
std::string print_polynomial(const Polynomial& p);

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << print_polynomial(p); }

/// Variables and polynomial expressions as read from an input file:
///   {"variables": ["x1","x2","x3"], "polynomials": ["x1^2*x2", "x3"]}
struct PolySource {
  std::vector<std::string> variables;
  std::vector<std::string> expressions;
};

/// Reads the JSON input format. Throws ParseError on malformed documents.
PolySource parse_poly_source(std::string_view json_text);

struct ParsedSystem {
  RingPtr ring;
  std::vector<Polynomial> polynomials;
};

/// Builds the ring and parses every expression. Requires at least one
/// polynomial and no more polynomials than variables.
ParsedSystem parse_system(const PolySource& source,
                          MonomialOrder order = MonomialOrder::GradedReverseLex);

/// Splits "a, b,c" on commas at parenthesis depth zero, trimming whitespace.
std::vector<std::string> split_list(std::string_view text);

}  // namespace dgcd
