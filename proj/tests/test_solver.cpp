#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "kk/dsl.hpp"
#include "kk/solver.hpp"
#include "support.hpp"

using namespace kk::solver;
using kk::logic::Atom;
using kk::puzzle::KnowledgeBase;
using kk::puzzle::Mode;
using kk::puzzle::Person;
using kk::puzzle::Puzzle;
using kk::puzzle::Role;

namespace {

Puzzle load_fixture(const std::string& name) {
  std::ifstream in(std::string(KK_FIXTURES_DIR) + "/" + name,
                   std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return kk::dsl::parse_puzzle(buffer.str());
}

Verdict solve_fixture(const std::string& name) {
  Puzzle p = load_fixture(name);
  return solve(kk::puzzle::compile(p), p);
}

RoleAssignment assignment(std::initializer_list<std::pair<const char*, Role>>
                              pairs) {
  RoleAssignment result;
  for (const auto& [name, role] : pairs) {
    result.emplace_back(Person(name), role);
  }
  return result;
}

}  // namespace

TEST_CASE("the two-knaves puzzle resolves to knave and knight") {
  Verdict v = solve_fixture("both-knaves.kk");
  CHECK(v.outcome == Outcome::Solved);
  CHECK(v.model_count == 1);
  REQUIRE(v.conclusions.size() == 2);
  CHECK(v.conclusions[0] == Conclusion{Person("A"), Role::Knave});
  CHECK(v.conclusions[1] == Conclusion{Person("B"), Role::Knight});
  CHECK(v.models ==
        std::vector<RoleAssignment>{
            assignment({{"A", Role::Knave}, {"B", Role::Knight}})});
}

TEST_CASE("the reported-speech puzzle pins down all three islanders") {
  Verdict v = solve_fixture("who-said-knave.kk");
  CHECK(v.outcome == Outcome::Solved);
  CHECK(v.model_count == 1);
  REQUIRE(v.conclusions.size() == 3);
  CHECK(v.conclusions[0] == Conclusion{Person("A"), Role::Knight});
  CHECK(v.conclusions[1] == Conclusion{Person("B"), Role::Knave});
  CHECK(v.conclusions[2] == Conclusion{Person("C"), Role::Knight});
}

TEST_CASE("the same-type puzzle leaves two islanders open but pins C") {
  Verdict v = solve_fixture("same-type.kk");
  CHECK(v.outcome == Outcome::Solved);
  CHECK(v.model_count == 2);
  REQUIRE(v.conclusions.size() == 3);
  CHECK(v.conclusions[0] == Conclusion{Person("A"), std::nullopt});
  CHECK(v.conclusions[1] == Conclusion{Person("B"), std::nullopt});
  CHECK(v.conclusions[2] == Conclusion{Person("C"), Role::Knave});
  // deterministic model order: A ascends knave-before-knight
  REQUIRE(v.models.size() == 2);
  CHECK(v.models[0] == assignment({{"A", Role::Knave},
                                   {"B", Role::Knight},
                                   {"C", Role::Knave}}));
  CHECK(v.models[1] == assignment({{"A", Role::Knight},
                                   {"B", Role::Knave},
                                   {"C", Role::Knave}}));
}

TEST_CASE("the one-of-each puzzle resolves all three roles") {
  Verdict v = solve_fixture("one-of-each.kk");
  CHECK(v.outcome == Outcome::Solved);
  CHECK(v.model_count == 1);
  REQUIRE(v.conclusions.size() == 3);
  CHECK(v.conclusions[0] == Conclusion{Person("A"), Role::Knave});
  CHECK(v.conclusions[1] == Conclusion{Person("B"), Role::Normal});
  CHECK(v.conclusions[2] == Conclusion{Person("C"), Role::Knight});
}

TEST_CASE("an impossible puzzle reports a contradiction") {
  Verdict v = solve_fixture("self-knave.kk");
  CHECK(v.outcome == Outcome::Contradiction);
  CHECK(v.model_count == 0);
  CHECK(v.models.empty());
  CHECK(v.conclusions.empty());
}

TEST_CASE("classify_symbol reflects truth across all models") {
  Puzzle p = load_fixture("same-type.kk");
  KnowledgeBase kb = kk::puzzle::compile(p);
  CHECK(classify_symbol(kb, Atom("CKnave")) == TruthStatus::True);
  CHECK(classify_symbol(kb, Atom("CKnight")) == TruthStatus::False);
  CHECK(classify_symbol(kb, Atom("AKnight")) == TruthStatus::Unknown);
  CHECK(classify_symbol(kb, Atom("BKnave")) == TruthStatus::Unknown);
  CHECK_THROWS_AS(classify_symbol(kb, Atom("ZKnight")),
                  std::invalid_argument);

  Puzzle impossible = load_fixture("self-knave.kk");
  KnowledgeBase dead = kk::puzzle::compile(impossible);
  CHECK_THROWS_AS(classify_symbol(dead, Atom("AKnight")),
                  UnsatisfiableKBError);
}

TEST_CASE("classify_symbol is True for exactly the determinate roles") {
  Puzzle p = load_fixture("one-of-each.kk");
  KnowledgeBase kb = kk::puzzle::compile(p);
  Verdict v = solve(kb, p);
  for (const auto& conclusion : v.conclusions) {
    int true_count = 0;
    for (Role role : roles_in(p.mode)) {
      if (classify_symbol(kb, kk::puzzle::role_atom(conclusion.person,
                                                    role)) ==
          TruthStatus::True) {
        ++true_count;
      }
    }
    CHECK(true_count == (conclusion.role ? 1 : 0));
  }
}

TEST_CASE("the oracle enumerates unconstrained puzzles completely") {
  Puzzle open;
  open.name = "open";
  open.mode = Mode::TwoRole;
  open.persons = {Person("A"), Person("B")};
  Verdict v = oracle_solve(open);
  CHECK(v.outcome == Outcome::Solved);
  CHECK(v.model_count == 4);
  REQUIRE(v.models.size() == 4);
  CHECK(v.models[0] == assignment({{"A", Role::Knave}, {"B", Role::Knave}}));
  CHECK(v.models[1] == assignment({{"A", Role::Knave}, {"B", Role::Knight}}));
  CHECK(v.models[2] == assignment({{"A", Role::Knight}, {"B", Role::Knave}}));
  CHECK(v.models[3] == assignment({{"A", Role::Knight}, {"B", Role::Knight}}));
  CHECK_FALSE(v.conclusions[0].role.has_value());
  CHECK_FALSE(v.conclusions[1].role.has_value());

  Puzzle solo;
  solo.name = "solo";
  solo.mode = Mode::ThreeRole;
  solo.persons = {Person("A")};
  Verdict w = oracle_solve(solo);
  CHECK(w.model_count == 3);
  CHECK(w.models[0] == assignment({{"A", Role::Normal}}));
  CHECK(w.models[1] == assignment({{"A", Role::Knave}}));
  CHECK(w.models[2] == assignment({{"A", Role::Knight}}));
}

TEST_CASE("solver and oracle agree on every fixture") {
  namespace fs = std::filesystem;
  int checked = 0;
  for (const auto& entry : fs::directory_iterator(KK_FIXTURES_DIR)) {
    if (entry.path().extension() != ".kk") continue;
    Puzzle p = load_fixture(entry.path().filename().string());
    Verdict via_kb = solve(kk::puzzle::compile(p), p);
    Verdict via_oracle = oracle_solve(p);
    CHECK(via_kb == via_oracle);
    ++checked;
  }
  CHECK(checked >= 10);
}

TEST_CASE("solver and oracle agree on random puzzles") {
  std::mt19937 rng(20240819);
  for (int i = 0; i < 150; ++i) {
    Puzzle p = kktest::random_puzzle(rng, i);
    CAPTURE(kk::dsl::print_puzzle(p));
    Verdict via_kb = solve(kk::puzzle::compile(p), p);
    Verdict via_oracle = oracle_solve(p);
    CHECK(via_kb == via_oracle);
  }
}

TEST_CASE("determinate conclusions are exactly the constant columns") {
  std::mt19937 rng(424242);
  for (int i = 0; i < 60; ++i) {
    Puzzle p = kktest::random_puzzle(rng, i);
    Verdict v = solve(kk::puzzle::compile(p), p);
    if (v.outcome == Outcome::Contradiction) continue;
    for (std::size_t person = 0; person < p.persons.size(); ++person) {
      Role first = v.models.front()[person].second;
      bool constant = true;
      for (const auto& model : v.models) {
        if (model[person].second != first) constant = false;
      }
      if (constant) {
        CHECK(v.conclusions[person].role == first);
      } else {
        CHECK_FALSE(v.conclusions[person].role.has_value());
      }
    }
  }
}
