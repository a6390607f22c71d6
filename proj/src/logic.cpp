#include "kk/logic.hpp"

#include <algorithm>
#include <utility>

namespace kk::logic {

namespace {

bool is_alpha(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z');
}

bool is_ident_char(char c) {
  return is_alpha(c) || (c >= '0' && c <= '9') || c == '_';
}

}  // namespace

bool is_identifier(std::string_view text) {
  if (text.empty() || !is_alpha(text.front())) return false;
  return std::all_of(text.begin() + 1, text.end(), is_ident_char);
}

Atom::Atom(std::string name) : name_(std::move(name)) {
  if (!is_identifier(name_)) {
    throw std::invalid_argument("invalid atom name: '" + name_ + "'");
  }
}

MissingAtomError::MissingAtomError(const std::string& atom_name)
    : std::runtime_error("no assignment for atom '" + atom_name + "'"),
      atom_name_(atom_name) {}

void Model::assign(Atom atom, bool value) {
  values_.insert_or_assign(std::move(atom), value);
}

bool Model::value_of(const Atom& atom) const {
  auto it = values_.find(atom);
  if (it == values_.end()) throw MissingAtomError(atom.name());
  return it->second;
}

bool Model::contains(const Atom& atom) const {
  return values_.find(atom) != values_.end();
}

Formula::Formula(Kind kind, logic::Atom atom, std::vector<FormulaPtr> operands)
    : kind_(kind), atom_(std::move(atom)), operands_(std::move(operands)) {}

const Atom& Formula::atom() const {
  if (kind_ != Kind::Atom) throw std::logic_error("formula is not an atom");
  return atom_;
}

namespace {

void require_operands(const std::vector<FormulaPtr>& operands) {
  for (const auto& op : operands) {
    if (!op) throw std::invalid_argument("null formula operand");
  }
}

}  // namespace

FormulaPtr mk_atom(Atom atom) {
  return FormulaPtr(new Formula(Formula::Kind::Atom, std::move(atom), {}));
}

FormulaPtr mk_atom(std::string name) { return mk_atom(Atom(std::move(name))); }

FormulaPtr mk_not(FormulaPtr inner) {
  std::vector<FormulaPtr> ops{std::move(inner)};
  require_operands(ops);
  return FormulaPtr(new Formula(Formula::Kind::Not, {}, std::move(ops)));
}

FormulaPtr mk_and(std::vector<FormulaPtr> operands) {
  require_operands(operands);
  return FormulaPtr(new Formula(Formula::Kind::And, {}, std::move(operands)));
}

FormulaPtr mk_or(std::vector<FormulaPtr> operands) {
  require_operands(operands);
  return FormulaPtr(new Formula(Formula::Kind::Or, {}, std::move(operands)));
}

FormulaPtr mk_implies(FormulaPtr antecedent, FormulaPtr consequent) {
  std::vector<FormulaPtr> ops{std::move(antecedent), std::move(consequent)};
  require_operands(ops);
  return FormulaPtr(new Formula(Formula::Kind::Implies, {}, std::move(ops)));
}

FormulaPtr mk_iff(FormulaPtr left, FormulaPtr right) {
  std::vector<FormulaPtr> ops{std::move(left), std::move(right)};
  require_operands(ops);
  return FormulaPtr(new Formula(Formula::Kind::Iff, {}, std::move(ops)));
}

bool operator==(const Formula& lhs, const Formula& rhs) {
  if (lhs.kind() != rhs.kind()) return false;
  if (lhs.kind() == Formula::Kind::Atom) return lhs.atom() == rhs.atom();
  const auto& a = lhs.operands();
  const auto& b = rhs.operands();
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(*a[i] == *b[i])) return false;
  }
  return true;
}

namespace {

void collect_atoms(const Formula& f, std::set<Atom>& out) {
  if (f.kind() == Formula::Kind::Atom) {
    out.insert(f.atom());
    return;
  }
  for (const auto& op : f.operands()) collect_atoms(*op, out);
}

}  // namespace

std::set<Atom> atoms_of(const Formula& f) {
  std::set<Atom> out;
  collect_atoms(f, out);
  return out;
}

bool evaluate(const Formula& f, const Model& m) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      return m.value_of(f.atom());
    case Formula::Kind::Not:
      return !evaluate(*f.operands()[0], m);
    case Formula::Kind::And: {
      bool result = true;  // empty conjunction is true
      for (const auto& op : f.operands()) result &= evaluate(*op, m);
      return result;
    }
    case Formula::Kind::Or: {
      bool result = false;  // empty disjunction is false
      for (const auto& op : f.operands()) result |= evaluate(*op, m);
      return result;
    }
    case Formula::Kind::Implies: {
      bool antecedent = evaluate(*f.operands()[0], m);
      bool consequent = evaluate(*f.operands()[1], m);
      return !antecedent || consequent;
    }
    case Formula::Kind::Iff:
      return evaluate(*f.operands()[0], m) == evaluate(*f.operands()[1], m);
  }
  throw std::logic_error("unreachable formula kind");
}

namespace {

void require_distinct(const std::vector<Atom>& atoms, const char* who) {
  std::set<Atom> seen(atoms.begin(), atoms.end());
  if (seen.size() != atoms.size()) {
    throw std::invalid_argument(std::string(who) + ": duplicate atom");
  }
}

// Model number `index` over the atoms, with atom 0 as the most significant
// position and false ordered before true.
Model model_at(const std::vector<Atom>& atoms, std::size_t index) {
  Model m;
  const std::size_t n = atoms.size();
  for (std::size_t i = 0; i < n; ++i) {
    bool value = (index >> (n - 1 - i)) & 1u;
    m.assign(atoms[i], value);
  }
  return m;
}

}  // namespace

std::vector<Model> enumerate_models(const std::vector<Atom>& atoms) {
  require_distinct(atoms, "enumerate_models");
  const std::size_t count = std::size_t{1} << atoms.size();
  std::vector<Model> out;
  out.reserve(count);
  for (std::size_t index = 0; index < count; ++index) {
    out.push_back(model_at(atoms, index));
  }
  return out;
}

std::vector<Model> satisfying_models(const Formula& kb) {
  auto atom_set = atoms_of(kb);
  return satisfying_models(kb, {atom_set.begin(), atom_set.end()});
}

std::vector<Model> satisfying_models(const Formula& kb,
                                     const std::vector<Atom>& universe) {
  require_distinct(universe, "satisfying_models");
  const std::set<Atom> have(universe.begin(), universe.end());
  for (const auto& atom : atoms_of(kb)) {
    if (!have.contains(atom)) throw MissingAtomError(atom.name());
  }
  const std::size_t count = std::size_t{1} << universe.size();
  std::vector<Model> out;
  for (std::size_t index = 0; index < count; ++index) {
    Model m = model_at(universe, index);
    if (evaluate(kb, m)) out.push_back(std::move(m));
  }
  return out;
}

bool entails(const Formula& kb, const Formula& query) {
  auto universe = atoms_of(kb);
  universe.merge(atoms_of(query));
  const std::vector<Atom> atoms(universe.begin(), universe.end());
  const std::size_t count = std::size_t{1} << atoms.size();
  for (std::size_t index = 0; index < count; ++index) {
    Model m = model_at(atoms, index);
    if (evaluate(kb, m) && !evaluate(query, m)) return false;
  }
  return true;  // vacuously true when kb is unsatisfiable
}

namespace {

void print_to(const Formula& f, std::string& out) {
  auto print_list = [&out](const char* head, const std::vector<FormulaPtr>& ops) {
    out += head;
    out += '(';
    for (std::size_t i = 0; i < ops.size(); ++i) {
      if (i > 0) out += ", ";
      print_to(*ops[i], out);
    }
    out += ')';
  };
  switch (f.kind()) {
    case Formula::Kind::Atom:
      out += f.atom().name();
      return;
    case Formula::Kind::Not:
      return print_list("not", f.operands());
    case Formula::Kind::And:
      return print_list("and", f.operands());
    case Formula::Kind::Or:
      return print_list("or", f.operands());
    case Formula::Kind::Implies:
      return print_list("implies", f.operands());
    case Formula::Kind::Iff:
      return print_list("iff", f.operands());
  }
}

}  // namespace

std::string pretty_print(const Formula& f) {
  std::string out;
  print_to(f, out);
  return out;
}

}  // namespace kk::logic
