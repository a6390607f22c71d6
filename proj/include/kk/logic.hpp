#pragma once

#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kk::logic {

// [A-Za-z][A-Za-z0-9_]*
bool is_identifier(std::string_view text);

/// A named propositional variable. Two atoms are equal iff their names are.
class Atom {
 public:
  Atom() = default;
  explicit Atom(std::string name);  // throws std::invalid_argument on a bad name

  const std::string& name() const { return name_; }

  bool operator==(const Atom&) const = default;
  auto operator<=>(const Atom&) const = default;

 private:
  std::string name_;
};

class MissingAtomError : public std::runtime_error {
 public:
  explicit MissingAtomError(const std::string& atom_name);

  const std::string& atom_name() const { return atom_name_; }

 private:
  std::string atom_name_;
};

/// Total truth assignment. Looking up an atom that was never assigned is a
/// hard error (MissingAtomError), never a default value.
class Model {
 public:
  Model() = default;

  void assign(Atom atom, bool value);
  bool value_of(const Atom& atom) const;
  bool contains(const Atom& atom) const;

  std::size_t size() const { return values_.size(); }
  const std::map<Atom, bool>& values() const { return values_; }

  bool operator==(const Model&) const = default;

 private:
  std::map<Atom, bool> values_;
};

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

/// Immutable propositional formula tree. And/Or are n-ary; an empty And is
/// true and an empty Or is false. Build instances with the mk_* factories.
class Formula {
 public:
  enum class Kind { Atom, Not, And, Or, Implies, Iff };

  Kind kind() const { return kind_; }

  const logic::Atom& atom() const;  // Kind::Atom only
  const std::vector<FormulaPtr>& operands() const { return operands_; }

  friend FormulaPtr mk_atom(logic::Atom atom);
  friend FormulaPtr mk_not(FormulaPtr inner);
  friend FormulaPtr mk_and(std::vector<FormulaPtr> operands);
  friend FormulaPtr mk_or(std::vector<FormulaPtr> operands);
  friend FormulaPtr mk_implies(FormulaPtr antecedent, FormulaPtr consequent);
  friend FormulaPtr mk_iff(FormulaPtr left, FormulaPtr right);

 private:
  Formula(Kind kind, logic::Atom atom, std::vector<FormulaPtr> operands);

  Kind kind_;
  logic::Atom atom_;
  std::vector<FormulaPtr> operands_;
};

FormulaPtr mk_atom(Atom atom);
FormulaPtr mk_atom(std::string name);
FormulaPtr mk_not(FormulaPtr inner);
FormulaPtr mk_and(std::vector<FormulaPtr> operands);
FormulaPtr mk_or(std::vector<FormulaPtr> operands);
FormulaPtr mk_implies(FormulaPtr antecedent, FormulaPtr consequent);
FormulaPtr mk_iff(FormulaPtr left, FormulaPtr right);

/// Structural equality.
bool operator==(const Formula& lhs, const Formula& rhs);

/// Atoms appearing anywhere in f, deduplicated, sorted by name.
std::set<Atom> atoms_of(const Formula& f);

/// Truth value of f under m. Visits the whole tree (no short-circuiting), so
/// an unassigned atom anywhere in f raises MissingAtomError regardless of
/// sibling values.
bool evaluate(const Formula& f, const Model& m);

/// All 2^n total models over the given atoms, lexicographic in the given
/// atom order with false before true: the first atom varies slowest.
/// The atoms must be distinct.
std::vector<Model> enumerate_models(const std::vector<Atom>& atoms);

/// Models of atoms_of(kb) satisfying kb, in enumeration order over the
/// name-sorted atom set. Empty iff kb is unsatisfiable.
std::vector<Model> satisfying_models(const Formula& kb);

/// Same, but over an explicit atom universe (must be distinct and cover
/// atoms_of(kb)); the universe fixes the enumeration order.
std::vector<Model> satisfying_models(const Formula& kb,
                                     const std::vector<Atom>& universe);

/// True iff query holds in every satisfying model of kb, enumerated over the
/// union of both formulas' atoms. An unsatisfiable kb entails everything.
bool entails(const Formula& kb, const Formula& query);

/// Canonical text form, e.g. `and(A, not(B))`. kk::dsl::parse_formula parses
/// it back to a structurally equal tree.
std::string pretty_print(const Formula& f);

}  // namespace kk::logic
