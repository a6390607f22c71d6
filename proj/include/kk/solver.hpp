#ifndef KK_SOLVER_HPP
#define KK_SOLVER_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "kk/logic.hpp"
#include "kk/puzzle.hpp"

namespace kk::solver {

enum class Outcome { Solved, Contradiction };

// Truth value of a single role atom across all models of a knowledge base.
enum class TruthStatus { True, False, Unknown };

// Per-person result. A missing role means the puzzle does not pin the
// person down (indeterminate).
struct Conclusion {
  puzzle::Person person;
  std::optional<puzzle::Role> role;

  bool operator==(const Conclusion&) const = default;
};

// One consistent way to assign roles, in person declaration order.
using RoleAssignment = std::vector<std::pair<puzzle::Person, puzzle::Role>>;

struct Verdict {
  Outcome outcome = Outcome::Solved;
  std::vector<Conclusion> conclusions;
  std::size_t model_count = 0;
  std::vector<RoleAssignment> models;

  bool operator==(const Verdict&) const = default;
};

class UnsatisfiableKBError : public std::runtime_error {
 public:
  UnsatisfiableKBError();
};

// Solves by enumerating models of the compiled knowledge base. Model order
// follows the kb.atom_order enumeration contract.
Verdict solve(const puzzle::KnowledgeBase& kb, const puzzle::Puzzle& puzzle);

// Brute-force reference: enumerates role assignments directly and checks
// each utterance and constraint against them, without going through the
// propositional encoding. Produces the same Verdict shape and order.
Verdict oracle_solve(const puzzle::Puzzle& puzzle);

// True/False when the atom has the same value in every model, else Unknown.
// Throws std::invalid_argument if the atom is not in kb.atom_order and
// UnsatisfiableKBError if the knowledge base has no models.
TruthStatus classify_symbol(const puzzle::KnowledgeBase& kb,
                            const logic::Atom& atom);

}  // namespace kk::solver

#endif
