#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "kk/logic.hpp"

namespace kk::puzzle {

enum class Role { Knight, Knave, Normal };
enum class Mode { TwoRole, ThreeRole };

/// "Knight", "Knave", "Normal" — also the role-atom name suffix.
const char* role_name(Role role);

/// Roles available in a mode, in role-atom order (Knight, Knave[, Normal]).
std::vector<Role> roles_in(Mode mode);

class Person {
 public:
  Person() = default;
  explicit Person(std::string name);  // throws std::invalid_argument on a bad name

  const std::string& name() const { return name_; }

  bool operator==(const Person&) const = default;
  auto operator<=>(const Person&) const = default;

 private:
  std::string name_;
};

class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& message);
};

class UnknownPersonError : public ValidationError {
 public:
  explicit UnknownPersonError(const std::string& person_name);
};

class ArityError : public ValidationError {
 public:
  explicit ArityError(const std::string& message);
};

/// Something a person can assert: a role claim, a "same type" claim, reported
/// speech, or a connective over sub-statements.
class Statement {
 public:
  enum class Kind { RoleClaim, SameType, Said, Conj, Disj, Neg, Impl, Iff };

  static Statement role_claim(Person subject, Role role);
  static Statement same_type(Person left, Person right);
  static Statement said(Person speaker, Statement quoted);
  static Statement conj(std::vector<Statement> parts);
  static Statement disj(std::vector<Statement> parts);
  static Statement neg(Statement inner);
  static Statement impl(Statement antecedent, Statement consequent);
  static Statement iff(Statement left, Statement right);

  Kind kind() const { return kind_; }
  const Person& subject() const;       // RoleClaim
  Role claimed_role() const;           // RoleClaim
  const Person& left_person() const;   // SameType
  const Person& right_person() const;  // SameType
  const Person& speaker() const;       // Said
  const Statement& quoted() const;     // Said

  /// Sub-statements of a connective kind (Neg has one, Impl/Iff two,
  /// Conj/Disj any number).
  const std::vector<Statement>& children() const { return children_; }

  bool operator==(const Statement&) const = default;

 private:
  explicit Statement(Kind kind) : kind_(kind) {}

  Kind kind_;
  Person subject_;  // RoleClaim subject / SameType left / Said speaker
  Person other_;    // SameType right
  Role role_ = Role::Knight;
  std::vector<Statement> children_;
};

/// One line of speech: a plain "says" has a single alternative; a
/// "says one of these, you don't know which" has several.
struct Utterance {
  Person speaker;
  std::vector<Statement> alternatives;

  bool operator==(const Utterance&) const = default;
};

class Constraint {
 public:
  enum class Kind { OneOfEach, Raw };

  static Constraint one_of_each();
  static Constraint raw(Statement statement);

  Kind kind() const { return kind_; }
  const Statement& statement() const;  // Raw only

  bool operator==(const Constraint&) const = default;

 private:
  explicit Constraint(Kind kind) : kind_(kind) {}

  Kind kind_;
  std::optional<Statement> statement_;
};

struct Puzzle {
  std::string name;
  Mode mode = Mode::TwoRole;
  std::vector<Person> persons;
  std::vector<Constraint> constraints;
  std::vector<Utterance> utterances;

  bool operator==(const Puzzle&) const = default;
};

/// A puzzle compiled to a single conjunction, plus the atom universe that
/// fixes model-enumeration order: persons in declaration order, each
/// contributing Knight, Knave (and Normal in three-role mode) atoms.
struct KnowledgeBase {
  logic::FormulaPtr formula;
  std::vector<logic::Atom> atom_order;
};

bool operator==(const KnowledgeBase& lhs, const KnowledgeBase& rhs);

logic::Atom role_atom(const Person& person, Role role);

/// Per-person exactly-one-role constraint.
logic::FormulaPtr role_exclusivity(const Person& person, Mode mode);

/// Propositional meaning of a statement. "P said x" becomes
/// (PKnight => x) and (PKnave => not x); a Normal speaker is unconstrained.
logic::FormulaPtr lower_statement(const Statement& statement, Mode mode,
                                  const std::vector<Person>& persons);

/// Says-expansion of one utterance; multiple alternatives disjoin their
/// expanded branches.
logic::FormulaPtr lower_utterance(const Utterance& utterance, Mode mode,
                                  const std::vector<Person>& persons);

/// Knight, Knave and Normal each assigned to exactly one of the three
/// persons: a disjunction over all six role permutations.
logic::FormulaPtr one_of_each_role(const std::vector<Person>& persons);

/// Checks puzzle invariants: unique persons, known person references,
/// nonempty utterances, no Normal references in two-role mode, one_of_each
/// only in a three-role puzzle with exactly three persons.
void validate(const Puzzle& puzzle);

/// Validates and lowers the puzzle: one And over role exclusivity for every
/// person, then constraints, then utterances. Deterministic.
KnowledgeBase compile(const Puzzle& puzzle);

}  // namespace kk::puzzle
