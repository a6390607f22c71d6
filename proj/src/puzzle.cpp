#include "kk/puzzle.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace kk::puzzle {

using logic::FormulaPtr;
using logic::mk_and;
using logic::mk_atom;
using logic::mk_iff;
using logic::mk_implies;
using logic::mk_not;
using logic::mk_or;

const char* role_name(Role role) {
  switch (role) {
    case Role::Knight: return "Knight";
    case Role::Knave: return "Knave";
    case Role::Normal: return "Normal";
  }
  throw std::logic_error("unreachable role");
}

std::vector<Role> roles_in(Mode mode) {
  if (mode == Mode::TwoRole) return {Role::Knight, Role::Knave};
  return {Role::Knight, Role::Knave, Role::Normal};
}

Person::Person(std::string name) : name_(std::move(name)) {
  if (!logic::is_identifier(name_)) {
    throw std::invalid_argument("invalid person name: '" + name_ + "'");
  }
}

ValidationError::ValidationError(const std::string& message)
    : std::runtime_error(message) {}

UnknownPersonError::UnknownPersonError(const std::string& person_name)
    : ValidationError("unknown person '" + person_name + "'") {}

ArityError::ArityError(const std::string& message)
    : ValidationError(message) {}

Statement Statement::role_claim(Person subject, Role role) {
  Statement s(Kind::RoleClaim);
  s.subject_ = std::move(subject);
  s.role_ = role;
  return s;
}

Statement Statement::same_type(Person left, Person right) {
  Statement s(Kind::SameType);
  s.subject_ = std::move(left);
  s.other_ = std::move(right);
  return s;
}

Statement Statement::said(Person speaker, Statement quoted) {
  Statement s(Kind::Said);
  s.subject_ = std::move(speaker);
  s.children_.push_back(std::move(quoted));
  return s;
}

Statement Statement::conj(std::vector<Statement> parts) {
  Statement s(Kind::Conj);
  s.children_ = std::move(parts);
  return s;
}

Statement Statement::disj(std::vector<Statement> parts) {
  Statement s(Kind::Disj);
  s.children_ = std::move(parts);
  return s;
}

Statement Statement::neg(Statement inner) {
  Statement s(Kind::Neg);
  s.children_.push_back(std::move(inner));
  return s;
}

Statement Statement::impl(Statement antecedent, Statement consequent) {
  Statement s(Kind::Impl);
  s.children_.push_back(std::move(antecedent));
  s.children_.push_back(std::move(consequent));
  return s;
}

Statement Statement::iff(Statement left, Statement right) {
  Statement s(Kind::Iff);
  s.children_.push_back(std::move(left));
  s.children_.push_back(std::move(right));
  return s;
}

namespace {

void require_kind(const Statement& s, Statement::Kind kind, const char* what) {
  if (s.kind() != kind) {
    throw std::logic_error(std::string("statement is not a ") + what);
  }
}

}  // namespace

const Person& Statement::subject() const {
  require_kind(*this, Kind::RoleClaim, "role claim");
  return subject_;
}

Role Statement::claimed_role() const {
  require_kind(*this, Kind::RoleClaim, "role claim");
  return role_;
}

const Person& Statement::left_person() const {
  require_kind(*this, Kind::SameType, "same-type claim");
  return subject_;
}

const Person& Statement::right_person() const {
  require_kind(*this, Kind::SameType, "same-type claim");
  return other_;
}

const Person& Statement::speaker() const {
  require_kind(*this, Kind::Said, "said claim");
  return subject_;
}

const Statement& Statement::quoted() const {
  require_kind(*this, Kind::Said, "said claim");
  return children_[0];
}

Constraint Constraint::one_of_each() { return Constraint(Kind::OneOfEach); }

Constraint Constraint::raw(Statement statement) {
  Constraint c(Kind::Raw);
  c.statement_ = std::move(statement);
  return c;
}

const Statement& Constraint::statement() const {
  if (kind_ != Kind::Raw) {
    throw std::logic_error("constraint carries no statement");
  }
  return *statement_;
}

bool operator==(const KnowledgeBase& lhs, const KnowledgeBase& rhs) {
  if (lhs.atom_order != rhs.atom_order) return false;
  if (!lhs.formula || !rhs.formula) return lhs.formula == rhs.formula;
  return *lhs.formula == *rhs.formula;
}

logic::Atom role_atom(const Person& person, Role role) {
  return logic::Atom(person.name() + role_name(role));
}

logic::FormulaPtr role_exclusivity(const Person& person, Mode mode) {
  auto knight = mk_atom(role_atom(person, Role::Knight));
  auto knave = mk_atom(role_atom(person, Role::Knave));
  if (mode == Mode::TwoRole) {
    return mk_and({mk_or({knight, knave}), mk_not(mk_and({knight, knave}))});
  }
  auto normal = mk_atom(role_atom(person, Role::Normal));
  return mk_and({
      mk_or({knight, knave, normal}),
      mk_not(mk_and({knight, knave})),
      mk_not(mk_and({knight, normal})),
      mk_not(mk_and({knave, normal})),
  });
}

namespace {

void require_person(const std::vector<Person>& persons, const Person& p) {
  if (std::find(persons.begin(), persons.end(), p) == persons.end()) {
    throw UnknownPersonError(p.name());
  }
}

void require_role_available(Role role, Mode mode) {
  if (role == Role::Normal && mode == Mode::TwoRole) {
    throw ValidationError(
        "role 'normal' is not available in a two-role puzzle");
  }
}

}  // namespace

logic::FormulaPtr lower_statement(const Statement& statement, Mode mode,
                                  const std::vector<Person>& persons) {
  switch (statement.kind()) {
    case Statement::Kind::RoleClaim: {
      require_person(persons, statement.subject());
      require_role_available(statement.claimed_role(), mode);
      return mk_atom(role_atom(statement.subject(), statement.claimed_role()));
    }
    case Statement::Kind::SameType: {
      const Person& left = statement.left_person();
      const Person& right = statement.right_person();
      require_person(persons, left);
      require_person(persons, right);
      if (mode == Mode::TwoRole) {
        return mk_iff(mk_atom(role_atom(left, Role::Knight)),
                      mk_atom(role_atom(right, Role::Knight)));
      }
      std::vector<FormulaPtr> pairs;
      for (Role role : roles_in(mode)) {
        pairs.push_back(mk_and({mk_atom(role_atom(left, role)),
                                mk_atom(role_atom(right, role))}));
      }
      return mk_or(std::move(pairs));
    }
    case Statement::Kind::Said: {
      const Person& speaker = statement.speaker();
      require_person(persons, speaker);
      auto quoted = lower_statement(statement.quoted(), mode, persons);
      return mk_and({
          mk_implies(mk_atom(role_atom(speaker, Role::Knight)), quoted),
          mk_implies(mk_atom(role_atom(speaker, Role::Knave)), mk_not(quoted)),
      });
    }
    case Statement::Kind::Conj:
    case Statement::Kind::Disj: {
      std::vector<FormulaPtr> parts;
      parts.reserve(statement.children().size());
      for (const auto& child : statement.children()) {
        parts.push_back(lower_statement(child, mode, persons));
      }
      return statement.kind() == Statement::Kind::Conj
                 ? mk_and(std::move(parts))
                 : mk_or(std::move(parts));
    }
    case Statement::Kind::Neg:
      return mk_not(lower_statement(statement.children()[0], mode, persons));
    case Statement::Kind::Impl:
      return mk_implies(
          lower_statement(statement.children()[0], mode, persons),
          lower_statement(statement.children()[1], mode, persons));
    case Statement::Kind::Iff:
      return mk_iff(lower_statement(statement.children()[0], mode, persons),
                    lower_statement(statement.children()[1], mode, persons));
  }
  throw std::logic_error("unreachable statement kind");
}

logic::FormulaPtr lower_utterance(const Utterance& utterance, Mode mode,
                                  const std::vector<Person>& persons) {
  require_person(persons, utterance.speaker);
  if (utterance.alternatives.empty()) {
    throw ValidationError("utterance by '" + utterance.speaker.name() +
                          "' has no statements");
  }
  auto knight = mk_atom(role_atom(utterance.speaker, Role::Knight));
  auto knave = mk_atom(role_atom(utterance.speaker, Role::Knave));
  std::vector<FormulaPtr> branches;
  branches.reserve(utterance.alternatives.size());
  for (const auto& alternative : utterance.alternatives) {
    auto lowered = lower_statement(alternative, mode, persons);
    branches.push_back(mk_and({mk_implies(knight, lowered),
                               mk_implies(knave, mk_not(lowered))}));
  }
  if (branches.size() == 1) return branches.front();
  return mk_or(std::move(branches));
}

logic::FormulaPtr one_of_each_role(const std::vector<Person>& persons) {
  if (persons.size() != 3) {
    throw ArityError("'one_of_each' requires exactly 3 persons (got " +
                     std::to_string(persons.size()) + ")");
  }
  std::vector<FormulaPtr> permutations;
  for (std::size_t knight = 0; knight < 3; ++knight) {
    for (std::size_t knave = 0; knave < 3; ++knave) {
      if (knave == knight) continue;
      const std::size_t normal = 3 - knight - knave;
      permutations.push_back(mk_and({
          mk_atom(role_atom(persons[knight], Role::Knight)),
          mk_atom(role_atom(persons[knave], Role::Knave)),
          mk_atom(role_atom(persons[normal], Role::Normal)),
      }));
    }
  }
  return mk_or(std::move(permutations));
}

namespace {

void check_statement(const Statement& statement, const Puzzle& puzzle) {
  switch (statement.kind()) {
    case Statement::Kind::RoleClaim:
      require_person(puzzle.persons, statement.subject());
      require_role_available(statement.claimed_role(), puzzle.mode);
      return;
    case Statement::Kind::SameType:
      require_person(puzzle.persons, statement.left_person());
      require_person(puzzle.persons, statement.right_person());
      return;
    case Statement::Kind::Said:
      require_person(puzzle.persons, statement.speaker());
      check_statement(statement.quoted(), puzzle);
      return;
    default:
      for (const auto& child : statement.children()) {
        check_statement(child, puzzle);
      }
      return;
  }
}

}  // namespace

void validate(const Puzzle& puzzle) {
  std::set<Person> seen;
  for (const auto& person : puzzle.persons) {
    if (!seen.insert(person).second) {
      throw ValidationError("duplicate person '" + person.name() + "'");
    }
  }
  for (const auto& constraint : puzzle.constraints) {
    if (constraint.kind() == Constraint::Kind::OneOfEach) {
      if (puzzle.mode != Mode::ThreeRole) {
        throw ValidationError("'one_of_each' requires the normal role");
      }
      if (puzzle.persons.size() != 3) {
        throw ArityError("'one_of_each' requires exactly 3 persons (got " +
                         std::to_string(puzzle.persons.size()) + ")");
      }
    } else {
      check_statement(constraint.statement(), puzzle);
    }
  }
  for (const auto& utterance : puzzle.utterances) {
    require_person(puzzle.persons, utterance.speaker);
    if (utterance.alternatives.empty()) {
      throw ValidationError("utterance by '" + utterance.speaker.name() +
                            "' has no statements");
    }
    for (const auto& alternative : utterance.alternatives) {
      check_statement(alternative, puzzle);
    }
  }
}

KnowledgeBase compile(const Puzzle& puzzle) {
  validate(puzzle);
  std::vector<FormulaPtr> conjuncts;
  for (const auto& person : puzzle.persons) {
    conjuncts.push_back(role_exclusivity(person, puzzle.mode));
  }
  for (const auto& constraint : puzzle.constraints) {
    if (constraint.kind() == Constraint::Kind::OneOfEach) {
      conjuncts.push_back(one_of_each_role(puzzle.persons));
    } else {
      conjuncts.push_back(
          lower_statement(constraint.statement(), puzzle.mode, puzzle.persons));
    }
  }
  for (const auto& utterance : puzzle.utterances) {
    conjuncts.push_back(lower_utterance(utterance, puzzle.mode, puzzle.persons));
  }
  KnowledgeBase kb;
  kb.formula = mk_and(std::move(conjuncts));
  for (const auto& person : puzzle.persons) {
    for (Role role : roles_in(puzzle.mode)) {
      kb.atom_order.push_back(role_atom(person, role));
    }
  }
  return kb;
}

}  // namespace kk::puzzle
