#ifndef KK_TESTS_SUPPORT_HPP
#define KK_TESTS_SUPPORT_HPP

#include <random>
#include <string>
#include <vector>

#include "kk/logic.hpp"
#include "kk/puzzle.hpp"

// Seeded generators for property tests. Everything here is deterministic
// for a fixed seed so failures reproduce.
namespace kktest {

inline int pick(std::mt19937& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline kk::logic::FormulaPtr random_formula(std::mt19937& rng, int depth,
                                            int atom_count = 6) {
  static const std::vector<std::string> pool = {"A", "B", "C", "D", "E", "F"};
  auto atom = [&] {
    return kk::logic::mk_atom(pool[static_cast<std::size_t>(
        pick(rng, 0, atom_count - 1))]);
  };
  if (depth <= 0) return atom();
  switch (pick(rng, 0, 5)) {
    case 0:
      return atom();
    case 1:
      return kk::logic::mk_not(random_formula(rng, depth - 1, atom_count));
    case 2:
    case 3: {
      std::vector<kk::logic::FormulaPtr> parts;
      int n = pick(rng, 0, 3);
      for (int i = 0; i < n; ++i) {
        parts.push_back(random_formula(rng, depth - 1, atom_count));
      }
      return pick(rng, 0, 1) == 0 ? kk::logic::mk_and(std::move(parts))
                                  : kk::logic::mk_or(std::move(parts));
    }
    case 4:
      return kk::logic::mk_implies(random_formula(rng, depth - 1, atom_count),
                                   random_formula(rng, depth - 1, atom_count));
    default:
      return kk::logic::mk_iff(random_formula(rng, depth - 1, atom_count),
                               random_formula(rng, depth - 1, atom_count));
  }
}

// True when the two formulas agree in every model over their joint atoms.
inline bool equivalent(const kk::logic::Formula& lhs,
                       const kk::logic::Formula& rhs) {
  std::set<kk::logic::Atom> atoms = kk::logic::atoms_of(lhs);
  std::set<kk::logic::Atom> more = kk::logic::atoms_of(rhs);
  atoms.insert(more.begin(), more.end());
  std::vector<kk::logic::Atom> universe(atoms.begin(), atoms.end());
  for (const auto& model : kk::logic::enumerate_models(universe)) {
    if (kk::logic::evaluate(lhs, model) != kk::logic::evaluate(rhs, model)) {
      return false;
    }
  }
  return true;
}

inline kk::puzzle::Person random_person(std::mt19937& rng,
                                        const std::vector<kk::puzzle::Person>& persons) {
  return persons[static_cast<std::size_t>(
      pick(rng, 0, static_cast<int>(persons.size()) - 1))];
}

inline kk::puzzle::Statement random_statement(
    std::mt19937& rng, const std::vector<kk::puzzle::Person>& persons,
    kk::puzzle::Mode mode, int depth) {
  using kk::puzzle::Mode;
  using kk::puzzle::Role;
  using kk::puzzle::Statement;
  auto role_claim = [&] {
    int max_role = mode == Mode::ThreeRole ? 2 : 1;
    Role role = static_cast<Role>(pick(rng, 0, max_role));
    return Statement::role_claim(random_person(rng, persons), role);
  };
  if (depth <= 0) {
    if (pick(rng, 0, 3) == 0) {
      return Statement::same_type(random_person(rng, persons),
                                  random_person(rng, persons));
    }
    return role_claim();
  }
  switch (pick(rng, 0, 7)) {
    case 0:
      return role_claim();
    case 1:
      return Statement::same_type(random_person(rng, persons),
                                  random_person(rng, persons));
    case 2:
      return Statement::said(random_person(rng, persons),
                             random_statement(rng, persons, mode, depth - 1));
    case 3:
    case 4: {
      std::vector<Statement> parts;
      int n = pick(rng, 0, 3);
      for (int i = 0; i < n; ++i) {
        parts.push_back(random_statement(rng, persons, mode, depth - 1));
      }
      return pick(rng, 0, 1) == 0 ? Statement::conj(std::move(parts))
                                  : Statement::disj(std::move(parts));
    }
    case 5:
      return Statement::neg(random_statement(rng, persons, mode, depth - 1));
    case 6:
      return Statement::impl(random_statement(rng, persons, mode, depth - 1),
                             random_statement(rng, persons, mode, depth - 1));
    default:
      return Statement::iff(random_statement(rng, persons, mode, depth - 1),
                            random_statement(rng, persons, mode, depth - 1));
  }
}

inline kk::puzzle::Puzzle random_puzzle(std::mt19937& rng, int index) {
  using kk::puzzle::Mode;
  kk::puzzle::Puzzle p;
  p.name = "rand-" + std::to_string(index);
  p.mode = pick(rng, 0, 1) == 0 ? Mode::TwoRole : Mode::ThreeRole;
  static const char* names[] = {"A", "B", "C", "D"};
  int person_count = pick(rng, 1, 4);
  for (int i = 0; i < person_count; ++i) {
    p.persons.emplace_back(names[i]);
  }
  if (p.mode == Mode::ThreeRole && person_count == 3 && pick(rng, 0, 3) == 0) {
    p.constraints.push_back(kk::puzzle::Constraint::one_of_each());
  }
  if (pick(rng, 0, 2) == 0) {
    p.constraints.push_back(kk::puzzle::Constraint::raw(
        random_statement(rng, p.persons, p.mode, 2)));
  }
  int utterance_count = pick(rng, 0, 4);
  for (int i = 0; i < utterance_count; ++i) {
    kk::puzzle::Utterance utterance;
    utterance.speaker = random_person(rng, p.persons);
    int alternatives = pick(rng, 1, 3);
    for (int j = 0; j < alternatives; ++j) {
      utterance.alternatives.push_back(
          random_statement(rng, p.persons, p.mode, 3));
    }
    p.utterances.push_back(std::move(utterance));
  }
  return p;
}

}  // namespace kktest

#endif
