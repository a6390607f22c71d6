#include "kk/solver.hpp"

#include <algorithm>
#include <cstddef>

namespace kk::solver {

using puzzle::Mode;
using puzzle::Person;
using puzzle::Puzzle;
using puzzle::Role;
using puzzle::Statement;

UnsatisfiableKBError::UnsatisfiableKBError()
    : std::runtime_error("knowledge base has no models") {}

namespace {

// Builds conclusions from an already-ordered model list. Shared bookkeeping
// between both solving paths; the paths differ in how models are found.
Verdict verdict_from_models(const std::vector<Person>& persons,
                            std::vector<RoleAssignment> models) {
  Verdict verdict;
  if (models.empty()) {
    verdict.outcome = Outcome::Contradiction;
    return verdict;
  }
  verdict.outcome = Outcome::Solved;
  verdict.model_count = models.size();
  for (std::size_t i = 0; i < persons.size(); ++i) {
    Conclusion conclusion;
    conclusion.person = persons[i];
    Role first = models.front()[i].second;
    bool constant = std::all_of(
        models.begin(), models.end(),
        [&](const RoleAssignment& m) { return m[i].second == first; });
    if (constant) conclusion.role = first;
    verdict.conclusions.push_back(std::move(conclusion));
  }
  verdict.models = std::move(models);
  return verdict;
}

RoleAssignment assignment_from_model(const logic::Model& model,
                                     const Puzzle& puzzle) {
  RoleAssignment assignment;
  for (const auto& person : puzzle.persons) {
    std::optional<Role> found;
    for (Role role : roles_in(puzzle.mode)) {
      if (model.value_of(puzzle::role_atom(person, role))) {
        if (found) {
          throw std::logic_error("model assigns two roles to '" +
                                 person.name() + "'");
        }
        found = role;
      }
    }
    if (!found) {
      throw std::logic_error("model assigns no role to '" + person.name() +
                             "'");
    }
    assignment.emplace_back(person, *found);
  }
  return assignment;
}

// Direct statement evaluation for the oracle. Kept apart from the formula
// evaluator on purpose; only primitive boolean connectives are shared.
bool statement_true(const Statement& statement,
                    const RoleAssignment& assignment) {
  auto lookup = [&assignment](const Person& person) {
    for (const auto& [p, role] : assignment) {
      if (p == person) return role;
    }
    throw std::logic_error("assignment is missing '" + person.name() + "'");
  };
  switch (statement.kind()) {
    case Statement::Kind::RoleClaim:
      return lookup(statement.subject()) == statement.claimed_role();
    case Statement::Kind::SameType:
      return lookup(statement.left_person()) ==
             lookup(statement.right_person());
    case Statement::Kind::Said: {
      Role speaker_role = lookup(statement.speaker());
      if (speaker_role == Role::Normal) return true;
      bool quoted = statement_true(statement.quoted(), assignment);
      return speaker_role == Role::Knight ? quoted : !quoted;
    }
    case Statement::Kind::Conj:
      return std::all_of(statement.children().begin(),
                         statement.children().end(),
                         [&](const Statement& child) {
                           return statement_true(child, assignment);
                         });
    case Statement::Kind::Disj:
      return std::any_of(statement.children().begin(),
                         statement.children().end(),
                         [&](const Statement& child) {
                           return statement_true(child, assignment);
                         });
    case Statement::Kind::Neg:
      return !statement_true(statement.children()[0], assignment);
    case Statement::Kind::Impl:
      return !statement_true(statement.children()[0], assignment) ||
             statement_true(statement.children()[1], assignment);
    case Statement::Kind::Iff:
      return statement_true(statement.children()[0], assignment) ==
             statement_true(statement.children()[1], assignment);
  }
  throw std::logic_error("unreachable statement kind");
}

bool consistent_with_speaker(Role speaker_role, const Statement& statement,
                             const RoleAssignment& assignment) {
  if (speaker_role == Role::Normal) return true;
  bool truth = statement_true(statement, assignment);
  return speaker_role == Role::Knight ? truth : !truth;
}

bool assignment_admissible(const Puzzle& puzzle,
                           const RoleAssignment& assignment) {
  auto lookup = [&assignment](const Person& person) {
    for (const auto& [p, role] : assignment) {
      if (p == person) return role;
    }
    throw std::logic_error("assignment is missing '" + person.name() + "'");
  };
  for (const auto& constraint : puzzle.constraints) {
    if (constraint.kind() == puzzle::Constraint::Kind::OneOfEach) {
      bool knight = false, knave = false, normal = false;
      for (const auto& [person, role] : assignment) {
        (void)person;
        if (role == Role::Knight) knight = true;
        if (role == Role::Knave) knave = true;
        if (role == Role::Normal) normal = true;
      }
      if (!(knight && knave && normal)) return false;
    } else if (!statement_true(constraint.statement(), assignment)) {
      return false;
    }
  }
  for (const auto& utterance : puzzle.utterances) {
    Role speaker_role = lookup(utterance.speaker);
    bool any = std::any_of(utterance.alternatives.begin(),
                           utterance.alternatives.end(),
                           [&](const Statement& alternative) {
                             return consistent_with_speaker(
                                 speaker_role, alternative, assignment);
                           });
    if (!any) return false;
  }
  return true;
}

}  // namespace

Verdict solve(const puzzle::KnowledgeBase& kb, const Puzzle& puzzle) {
  std::vector<logic::Model> models =
      logic::satisfying_models(*kb.formula, kb.atom_order);
  std::vector<RoleAssignment> assignments;
  assignments.reserve(models.size());
  for (const auto& model : models) {
    assignments.push_back(assignment_from_model(model, puzzle));
  }
  return verdict_from_models(puzzle.persons, std::move(assignments));
}

Verdict oracle_solve(const Puzzle& puzzle) {
  puzzle::validate(puzzle);
  // Per-person role candidates in the order induced by atom enumeration:
  // within one person's atom block the satisfiable patterns sort as
  // Normal < Knave < Knight (and Knave < Knight without Normal).
  std::vector<Role> candidates = puzzle.mode == Mode::TwoRole
                                     ? std::vector<Role>{Role::Knave,
                                                         Role::Knight}
                                     : std::vector<Role>{Role::Normal,
                                                         Role::Knave,
                                                         Role::Knight};
  const std::size_t base = candidates.size();
  const std::size_t person_count = puzzle.persons.size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < person_count; ++i) total *= base;

  std::vector<RoleAssignment> admissible;
  for (std::size_t index = 0; index < total; ++index) {
    RoleAssignment assignment;
    assignment.reserve(person_count);
    std::size_t rest = index;
    for (std::size_t i = 0; i < person_count; ++i) {
      std::size_t place = person_count - 1 - i;
      std::size_t weight = 1;
      for (std::size_t j = 0; j < place; ++j) weight *= base;
      std::size_t digit = rest / weight;
      rest %= weight;
      assignment.emplace_back(puzzle.persons[i], candidates[digit]);
    }
    if (assignment_admissible(puzzle, assignment)) {
      admissible.push_back(std::move(assignment));
    }
  }
  return verdict_from_models(puzzle.persons, std::move(admissible));
}

TruthStatus classify_symbol(const puzzle::KnowledgeBase& kb,
                            const logic::Atom& atom) {
  if (std::find(kb.atom_order.begin(), kb.atom_order.end(), atom) ==
      kb.atom_order.end()) {
    throw std::invalid_argument("atom '" + atom.name() +
                                "' is not part of this knowledge base");
  }
  std::vector<logic::Model> models =
      logic::satisfying_models(*kb.formula, kb.atom_order);
  if (models.empty()) throw UnsatisfiableKBError();
  bool all_true = std::all_of(
      models.begin(), models.end(),
      [&atom](const logic::Model& m) { return m.value_of(atom); });
  if (all_true) return TruthStatus::True;
  bool all_false = std::all_of(
      models.begin(), models.end(),
      [&atom](const logic::Model& m) { return !m.value_of(atom); });
  if (all_false) return TruthStatus::False;
  return TruthStatus::Unknown;
}

}  // namespace kk::solver
