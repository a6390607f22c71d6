#include "kk/dsl.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace kk::dsl {

DiagnosticError::DiagnosticError(std::string message, SourceSpan span)
    : std::runtime_error(std::move(message)), span_(span) {}

ParseError::ParseError(std::string message, SourceSpan span,
                       std::vector<std::string> expected)
    : DiagnosticError(std::move(message), span),
      expected_(std::move(expected)) {}

ValidationError::ValidationError(std::string message, SourceSpan span)
    : DiagnosticError(std::move(message), span) {}

namespace {

bool is_alpha(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z');
}

bool is_ident_char(char c) {
  return is_alpha(c) || (c >= '0' && c <= '9') || c == '_';
}

enum class TokenType {
  Ident,
  String,
  Colon,
  Comma,
  LParen,
  RParen,
  Pipe,
  Newline,
  End,
};

struct Token {
  TokenType type = TokenType::End;
  std::string text;
  SourceSpan span;
};

std::string describe(const Token& token) {
  switch (token.type) {
    case TokenType::Ident: return "'" + token.text + "'";
    case TokenType::String: return "string \"" + token.text + "\"";
    case TokenType::Colon: return "':'";
    case TokenType::Comma: return "','";
    case TokenType::LParen: return "'('";
    case TokenType::RParen: return "')'";
    case TokenType::Pipe: return "'|'";
    case TokenType::Newline: return "end of line";
    case TokenType::End: return "end of input";
  }
  return "token";
}

// Splits the source into tokens. Runs of newlines collapse into a single
// Newline token and a synthetic one is appended at end of input, so the
// parser can treat every clause as newline-terminated.
class Lexer {
 public:
  explicit Lexer(std::string_view source) : src_(source) {}

  std::vector<Token> run() {
    if (src_.substr(0, 3) == "\xEF\xBB\xBF") {
      throw ParseError(
          "byte order mark is not allowed; save the file as plain UTF-8",
          SourceSpan{1, 1, 3});
    }
    std::vector<Token> tokens;
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == ' ' || c == '\t' || c == '\r') {
        advance();
      } else if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (c == '\n') {
        if (!tokens.empty() && tokens.back().type != TokenType::Newline) {
          tokens.push_back({TokenType::Newline, "", here(1)});
        }
        advance();
      } else if (is_alpha(c)) {
        tokens.push_back(lex_ident());
      } else if (c == '"') {
        tokens.push_back(lex_string());
      } else if (c == ':') {
        tokens.push_back(punct(TokenType::Colon));
      } else if (c == ',') {
        tokens.push_back(punct(TokenType::Comma));
      } else if (c == '(') {
        tokens.push_back(punct(TokenType::LParen));
      } else if (c == ')') {
        tokens.push_back(punct(TokenType::RParen));
      } else if (c == '|') {
        tokens.push_back(punct(TokenType::Pipe));
      } else {
        throw ParseError("unexpected character '" + std::string(1, c) + "'",
                         here(1));
      }
    }
    if (!tokens.empty() && tokens.back().type != TokenType::Newline) {
      tokens.push_back({TokenType::Newline, "", last_byte()});
    }
    tokens.push_back({TokenType::End, "", last_byte()});
    return tokens;
  }

 private:
  SourceSpan here(std::size_t length) const { return {line_, column_, length}; }

  // Spans for tokens fabricated at end of input point at the final byte, so
  // they always land inside the text.
  SourceSpan last_byte() const {
    if (src_.empty()) return {1, 1, 1};
    return {last_line_, last_column_, 1};
  }

  void advance() {
    last_line_ = line_;
    last_column_ = column_;
    if (src_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  Token punct(TokenType type) {
    Token token{type, std::string(1, src_[pos_]), here(1)};
    advance();
    return token;
  }

  Token lex_ident() {
    SourceSpan span = here(1);
    std::size_t start = pos_;
    while (pos_ < src_.size() && is_ident_char(src_[pos_])) advance();
    std::string text(src_.substr(start, pos_ - start));
    // "says-one-of" is the one lexeme containing '-'.
    if (text == "says" && src_.substr(pos_, 7) == "-one-of" &&
        !ident_continues_at(pos_ + 7)) {
      for (int i = 0; i < 7; ++i) advance();
      text = "says-one-of";
    }
    span.length = pos_ - start;
    return {TokenType::Ident, std::move(text), span};
  }

  bool ident_continues_at(std::size_t p) const {
    return p < src_.size() && (is_ident_char(src_[p]) || src_[p] == '-');
  }

  Token lex_string() {
    SourceSpan span = here(1);
    std::size_t start = pos_;
    advance();
    std::string text;
    while (true) {
      if (pos_ >= src_.size() || src_[pos_] == '\n') {
        span.length = pos_ - start;
        throw ParseError("unterminated string", span);
      }
      if (src_[pos_] == '"') {
        advance();
        break;
      }
      text.push_back(src_[pos_]);
      advance();
    }
    span.length = pos_ - start;
    return {TokenType::String, std::move(text), span};
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
  std::size_t last_line_ = 1;
  std::size_t last_column_ = 1;
};

const std::vector<std::string> kExprHeads = {
    "knight", "knave", "normal", "same",    "said",
    "and",    "or",    "not",    "implies", "iff"};

class Parser {
 public:
  explicit Parser(std::string_view source) : tokens_(Lexer(source).run()) {}

  puzzle::Puzzle parse_file() {
    puzzle::Puzzle result;
    result.name = parse_header(result.mode);
    parse_persons(result.persons);
    bool seen_utterance = false;
    while (peek().type != TokenType::End) {
      Token head = expect(TokenType::Ident, "a clause");
      if (head.text == "constraint") {
        if (seen_utterance) {
          throw ParseError("constraints must precede utterances", head.span);
        }
        expect(TokenType::Colon, "':'");
        result.constraints.push_back(parse_constraint(result));
      } else {
        seen_utterance = true;
        result.utterances.push_back(parse_utterance(head));
      }
      expect(TokenType::Newline, "end of line");
    }
    return result;
  }

  puzzle::Statement parse_single_expression(
      const std::vector<puzzle::Person>& persons, puzzle::Mode mode) {
    persons_ = &persons;
    mode_ = mode;
    puzzle::Statement statement = parse_expr();
    finish();
    return statement;
  }

  logic::FormulaPtr parse_single_formula() {
    logic::FormulaPtr formula = parse_formula_expr();
    finish();
    return formula;
  }

 private:
  const Token& peek() const { return tokens_[index_]; }

  Token take() { return tokens_[index_++]; }

  Token expect(TokenType type, const std::string& what) {
    if (peek().type != type) {
      throw ParseError("expected " + what + ", found " + describe(peek()),
                       peek().span, {what});
    }
    return take();
  }

  Token expect_keyword(const std::string& keyword) {
    if (peek().type != TokenType::Ident || peek().text != keyword) {
      throw ParseError(
          "expected '" + keyword + "', found " + describe(peek()),
          peek().span, {"'" + keyword + "'"});
    }
    return take();
  }

  bool at_keyword(const std::string& keyword) const {
    return peek().type == TokenType::Ident && peek().text == keyword;
  }

  void finish() {
    if (peek().type == TokenType::Newline) take();
    if (peek().type != TokenType::End) {
      throw ParseError("expected end of input, found " + describe(peek()),
                       peek().span, {"end of input"});
    }
  }

  std::string parse_header(puzzle::Mode& mode) {
    expect_keyword("puzzle");
    std::string name = expect(TokenType::String, "puzzle name").text;
    expect(TokenType::Newline, "end of line");
    expect_keyword("roles");
    expect(TokenType::Colon, "':'");
    expect_keyword("knight");
    expect_keyword("knave");
    mode = puzzle::Mode::TwoRole;
    if (at_keyword("normal")) {
      take();
      mode = puzzle::Mode::ThreeRole;
    }
    expect(TokenType::Newline, "end of line");
    mode_ = mode;
    return name;
  }

  void parse_persons(std::vector<puzzle::Person>& persons) {
    expect_keyword("persons");
    expect(TokenType::Colon, "':'");
    while (peek().type == TokenType::Ident) {
      Token token = take();
      puzzle::Person person(token.text);
      for (const auto& existing : persons) {
        if (existing == person) {
          throw ValidationError("duplicate person '" + token.text + "'",
                                token.span);
        }
      }
      persons.push_back(std::move(person));
    }
    if (persons.empty()) {
      throw ParseError("expected at least one person name, found " +
                           describe(peek()),
                       peek().span, {"identifier"});
    }
    expect(TokenType::Newline, "end of line");
    persons_ = &persons;
  }

  puzzle::Constraint parse_constraint(const puzzle::Puzzle& partial) {
    if (at_keyword("one_of_each")) {
      Token token = take();
      if (mode_ != puzzle::Mode::ThreeRole) {
        throw ValidationError("'one_of_each' requires the normal role",
                              token.span);
      }
      if (partial.persons.size() != 3) {
        throw ValidationError(
            "'one_of_each' requires exactly 3 persons (got " +
                std::to_string(partial.persons.size()) + ")",
            token.span);
      }
      return puzzle::Constraint::one_of_each();
    }
    return puzzle::Constraint::raw(parse_expr());
  }

  puzzle::Utterance parse_utterance(const Token& speaker_token) {
    bool one_of = false;
    if (at_keyword("says")) {
      take();
    } else if (at_keyword("says-one-of")) {
      take();
      one_of = true;
    } else {
      throw ParseError("expected 'says' or 'says-one-of', found " +
                           describe(peek()),
                       peek().span, {"'says'", "'says-one-of'"});
    }
    puzzle::Utterance utterance;
    utterance.speaker = resolve_person(speaker_token);
    expect(TokenType::Colon, "':'");
    utterance.alternatives.push_back(parse_expr());
    if (one_of) {
      while (peek().type == TokenType::Pipe) {
        take();
        utterance.alternatives.push_back(parse_expr());
      }
      if (utterance.alternatives.size() < 2) {
        throw ParseError("'says-one-of' requires at least two alternatives",
                         peek().span, {"'|'"});
      }
    } else if (peek().type == TokenType::Pipe) {
      throw ParseError("'|' alternatives require 'says-one-of'", peek().span);
    }
    return utterance;
  }

  puzzle::Person resolve_person(const Token& token) {
    puzzle::Person person(token.text);
    for (const auto& existing : *persons_) {
      if (existing == person) return person;
    }
    throw ValidationError("unknown person '" + token.text + "'", token.span);
  }

  puzzle::Role parse_role_head(const Token& head) {
    if (head.text == "knight") return puzzle::Role::Knight;
    if (head.text == "knave") return puzzle::Role::Knave;
    if (mode_ != puzzle::Mode::ThreeRole) {
      throw ValidationError(
          "role 'normal' is not available in a two-role puzzle", head.span);
    }
    return puzzle::Role::Normal;
  }

  puzzle::Statement parse_expr() {
    if (peek().type != TokenType::Ident) {
      throw ParseError("expected an expression, found " + describe(peek()),
                       peek().span, kExprHeads);
    }
    Token head = take();
    if (head.text == "knight" || head.text == "knave" ||
        head.text == "normal") {
      puzzle::Role role = parse_role_head(head);
      expect(TokenType::LParen, "'('");
      puzzle::Person subject =
          resolve_person(expect(TokenType::Ident, "person name"));
      expect(TokenType::RParen, "')'");
      return puzzle::Statement::role_claim(std::move(subject), role);
    }
    if (head.text == "same") {
      expect(TokenType::LParen, "'('");
      puzzle::Person left =
          resolve_person(expect(TokenType::Ident, "person name"));
      expect(TokenType::Comma, "','");
      puzzle::Person right =
          resolve_person(expect(TokenType::Ident, "person name"));
      expect(TokenType::RParen, "')'");
      return puzzle::Statement::same_type(std::move(left), std::move(right));
    }
    if (head.text == "said") {
      expect(TokenType::LParen, "'('");
      puzzle::Person speaker =
          resolve_person(expect(TokenType::Ident, "person name"));
      expect(TokenType::Comma, "','");
      puzzle::Statement quoted = parse_expr();
      expect(TokenType::RParen, "')'");
      return puzzle::Statement::said(std::move(speaker), std::move(quoted));
    }
    if (head.text == "and" || head.text == "or") {
      expect(TokenType::LParen, "'('");
      std::vector<puzzle::Statement> parts;
      if (peek().type != TokenType::RParen) {
        parts.push_back(parse_expr());
        while (peek().type == TokenType::Comma) {
          take();
          parts.push_back(parse_expr());
        }
      }
      expect(TokenType::RParen, "')'");
      return head.text == "and" ? puzzle::Statement::conj(std::move(parts))
                                : puzzle::Statement::disj(std::move(parts));
    }
    if (head.text == "not") {
      expect(TokenType::LParen, "'('");
      puzzle::Statement inner = parse_expr();
      expect(TokenType::RParen, "')'");
      return puzzle::Statement::neg(std::move(inner));
    }
    if (head.text == "implies" || head.text == "iff") {
      expect(TokenType::LParen, "'('");
      puzzle::Statement left = parse_expr();
      expect(TokenType::Comma, "','");
      puzzle::Statement right = parse_expr();
      expect(TokenType::RParen, "')'");
      return head.text == "implies"
                 ? puzzle::Statement::impl(std::move(left), std::move(right))
                 : puzzle::Statement::iff(std::move(left), std::move(right));
    }
    throw ParseError("unknown operator '" + head.text + "'", head.span,
                     kExprHeads);
  }

  logic::FormulaPtr parse_formula_expr() {
    Token head = expect(TokenType::Ident, "a formula");
    bool connective = head.text == "and" || head.text == "or" ||
                      head.text == "not" || head.text == "implies" ||
                      head.text == "iff";
    if (!connective) {
      if (peek().type == TokenType::LParen) {
        throw ParseError("unknown connective '" + head.text + "'", head.span,
                         {"and", "or", "not", "implies", "iff"});
      }
      return logic::mk_atom(logic::Atom(head.text));
    }
    expect(TokenType::LParen, "'('");
    std::vector<logic::FormulaPtr> parts;
    if (peek().type != TokenType::RParen) {
      parts.push_back(parse_formula_expr());
      while (peek().type == TokenType::Comma) {
        take();
        parts.push_back(parse_formula_expr());
      }
    }
    Token close = expect(TokenType::RParen, "')'");
    auto require_arity = [&](std::size_t n, const char* what) {
      if (parts.size() != n) {
        throw ParseError("'" + head.text + "' takes " + what + " (got " +
                             std::to_string(parts.size()) + ")",
                         close.span);
      }
    };
    if (head.text == "and") return logic::mk_and(std::move(parts));
    if (head.text == "or") return logic::mk_or(std::move(parts));
    if (head.text == "not") {
      require_arity(1, "one operand");
      return logic::mk_not(parts[0]);
    }
    require_arity(2, "two operands");
    return head.text == "implies" ? logic::mk_implies(parts[0], parts[1])
                                  : logic::mk_iff(parts[0], parts[1]);
  }

  std::vector<Token> tokens_;
  std::size_t index_ = 0;
  const std::vector<puzzle::Person>* persons_ = nullptr;
  puzzle::Mode mode_ = puzzle::Mode::TwoRole;
};

const char* role_keyword(puzzle::Role role) {
  switch (role) {
    case puzzle::Role::Knight: return "knight";
    case puzzle::Role::Knave: return "knave";
    case puzzle::Role::Normal: return "normal";
  }
  return "";
}

void print_statement(const puzzle::Statement& statement, std::string& out) {
  using Kind = puzzle::Statement::Kind;
  auto print_list = [&out](const std::vector<puzzle::Statement>& items) {
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (i > 0) out += ", ";
      print_statement(items[i], out);
    }
  };
  switch (statement.kind()) {
    case Kind::RoleClaim:
      out += role_keyword(statement.claimed_role());
      out += '(';
      out += statement.subject().name();
      out += ')';
      return;
    case Kind::SameType:
      out += "same(";
      out += statement.left_person().name();
      out += ", ";
      out += statement.right_person().name();
      out += ')';
      return;
    case Kind::Said:
      out += "said(";
      out += statement.speaker().name();
      out += ", ";
      print_statement(statement.quoted(), out);
      out += ')';
      return;
    case Kind::Conj:
      out += "and(";
      print_list(statement.children());
      out += ')';
      return;
    case Kind::Disj:
      out += "or(";
      print_list(statement.children());
      out += ')';
      return;
    case Kind::Neg:
      out += "not(";
      print_statement(statement.children()[0], out);
      out += ')';
      return;
    case Kind::Impl:
    case Kind::Iff:
      out += statement.kind() == Kind::Impl ? "implies(" : "iff(";
      print_statement(statement.children()[0], out);
      out += ", ";
      print_statement(statement.children()[1], out);
      out += ')';
      return;
  }
}

}  // namespace

puzzle::Puzzle parse_puzzle(std::string_view source) {
  return Parser(source).parse_file();
}

puzzle::Statement parse_expression(std::string_view source,
                                   const std::vector<puzzle::Person>& persons,
                                   puzzle::Mode mode) {
  return Parser(source).parse_single_expression(persons, mode);
}

logic::FormulaPtr parse_formula(std::string_view source) {
  return Parser(source).parse_single_formula();
}

std::string print_expression(const puzzle::Statement& statement) {
  std::string out;
  print_statement(statement, out);
  return out;
}

std::string print_puzzle(const puzzle::Puzzle& puzzle) {
  std::string out = "puzzle \"" + puzzle.name + "\"\n";
  out += "roles: knight knave";
  if (puzzle.mode == puzzle::Mode::ThreeRole) out += " normal";
  out += "\npersons:";
  for (const auto& person : puzzle.persons) {
    out += ' ';
    out += person.name();
  }
  out += '\n';
  for (const auto& constraint : puzzle.constraints) {
    out += "constraint: ";
    if (constraint.kind() == puzzle::Constraint::Kind::OneOfEach) {
      out += "one_of_each";
    } else {
      print_statement(constraint.statement(), out);
    }
    out += '\n';
  }
  for (const auto& utterance : puzzle.utterances) {
    out += utterance.speaker.name();
    if (utterance.alternatives.size() == 1) {
      out += " says: ";
      print_statement(utterance.alternatives[0], out);
    } else {
      out += " says-one-of: ";
      for (std::size_t i = 0; i < utterance.alternatives.size(); ++i) {
        if (i > 0) out += " | ";
        print_statement(utterance.alternatives[i], out);
      }
    }
    out += '\n';
  }
  return out;
}

}  // namespace kk::dsl
