#ifndef KK_DSL_HPP
#define KK_DSL_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "kk/logic.hpp"
#include "kk/puzzle.hpp"

namespace kk::dsl {

// Half-open region of puzzle text. Lines and columns are 1-based; length is
// measured in bytes and is at least 1.
struct SourceSpan {
  std::size_t line = 1;
  std::size_t column = 1;
  std::size_t length = 1;

  bool operator==(const SourceSpan&) const = default;
};

// Base for anything the front end can reject, carrying where it happened.
class DiagnosticError : public std::runtime_error {
 public:
  DiagnosticError(std::string message, SourceSpan span);

  const SourceSpan& span() const { return span_; }

 private:
  SourceSpan span_;
};

// Malformed text: bad tokens, unexpected structure, stray bytes.
class ParseError : public DiagnosticError {
 public:
  ParseError(std::string message, SourceSpan span,
             std::vector<std::string> expected = {});

  // What the parser would have accepted at the error position, if known.
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::vector<std::string> expected_;
};

// Well-formed text that names things the puzzle does not define, or uses a
// construct the declared roles do not allow.
class ValidationError : public DiagnosticError {
 public:
  ValidationError(std::string message, SourceSpan span);
};

// Parses a complete puzzle file.
puzzle::Puzzle parse_puzzle(std::string_view source);

// Parses a single statement expression against an existing person list, for
// tools and tests that build puzzles programmatically.
puzzle::Statement parse_expression(std::string_view source,
                                   const std::vector<puzzle::Person>& persons,
                                   puzzle::Mode mode);

// Parses a bare propositional formula in the printer's notation, where any
// identifier that is not a connective names an atom.
logic::FormulaPtr parse_formula(std::string_view source);

// Canonical text form. parse_puzzle(print_puzzle(p)) reproduces p exactly.
std::string print_puzzle(const puzzle::Puzzle& puzzle);
std::string print_expression(const puzzle::Statement& statement);

}  // namespace kk::dsl

#endif
