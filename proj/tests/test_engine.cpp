#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "ckr/asp_read.hpp"
#include "ckr/ground.hpp"
#include "ckr/parse.hpp"
#include "ckr/solve.hpp"
#include "ckr/translate.hpp"

using namespace ckr;

namespace {

std::vector<AnswerSet> solve_text(const std::string& text, const Caps& caps = {}) {
  return answer_sets(ground(read_program(text), caps), caps);
}

std::set<std::string> atom_texts(const GroundProgram& g, const AnswerSet& s) {
  std::set<std::string> out;
  for (int id : s.atoms) out.insert(g.texts[static_cast<size_t>(id)]);
  return out;
}

}  // namespace

TEST_CASE("negation splits into two stable models") {
  auto text = "a :- not b. b :- not a.";
  auto g = ground(read_program(text), {});
  auto models = answer_sets(g, {});
  REQUIRE(models.size() == 2);
  std::set<std::set<std::string>> got;
  for (const auto& m : models) got.insert(atom_texts(g, m));
  CHECK(got == std::set<std::set<std::string>>{{"a"}, {"b"}});
}

TEST_CASE("hard constraints prune models") {
  auto g = ground(read_program("a :- not b. b :- not a. :- a."), {});
  auto models = answer_sets(g, {});
  REQUIRE(models.size() == 1);
  CHECK(atom_texts(g, models[0]) == std::set<std::string>{"b"});
}

TEST_CASE("positive loops stay unfounded") {
  auto models = solve_text("a :- b. b :- a.");
  REQUIRE(models.size() == 1);
  CHECK(models[0].atoms.empty());
}

TEST_CASE("negative loops can make a program incoherent") {
  auto models = solve_text("a :- not a.");
  CHECK(models.empty());
}

TEST_CASE("supported but unstable models are rejected") {
  // {a, b} is a classical model but not stable
  auto models = solve_text("a :- b. b :- a. a :- not c. c :- not a.");
  REQUIRE(models.size() == 2);
}

TEST_CASE("weak constraints pick an optimum at one level") {
  auto g = ground(read_program("a :- not b. b :- not a. :~ a. [1@1]"), {});
  auto best = optimal_answer_sets(g, {});
  REQUIRE(best.size() == 1);
  CHECK(atom_texts(g, best[0]) == std::set<std::string>{"b"});
}

TEST_CASE("higher levels dominate lower ones") {
  // choosing a costs 1 at level 2; choosing b costs 5 at level 1
  auto g = ground(read_program("a :- not b. b :- not a. :~ a. [1@2] :~ b. [5@1]"), {});
  auto best = optimal_answer_sets(g, {});
  REQUIRE(best.size() == 1);
  CHECK(atom_texts(g, best[0]) == std::set<std::string>{"b"});
  CHECK(best[0].cost == CostVector{{1, 5}});
}

TEST_CASE("cost comparison is lexicographic from the top level") {
  CHECK(cost_less(CostVector{{2, 1}}, CostVector{{2, 2}}));
  CHECK(cost_less(CostVector{{1, 7}}, CostVector{{2, 1}}));
  CHECK_FALSE(cost_less(CostVector{{2, 1}, {1, 9}}, CostVector{{2, 1}, {1, 9}}));
  CHECK(cost_less(CostVector{}, CostVector{{3, 1}}));
}

TEST_CASE("grounding instantiates rules over derived constants") {
  auto text = R"(
q("x1"). q("x2"). r("x2").
p(X) :- q(X), not r(X).
)";
  auto g = ground(read_program(text), {});
  auto models = answer_sets(g, {});
  REQUIRE(models.size() == 1);
  auto atoms = atom_texts(g, models[0]);
  CHECK(atoms.count("p(\"x1\")") == 1);
  CHECK(atoms.count("p(\"x2\")") == 0);
}

TEST_CASE("grounding handles function terms") {
  auto text = R"(
base("a").
wrap(f("a","c")) :- base("a").
deep(X) :- wrap(f(X,"c")).
)";
  auto g = ground(read_program(text), {});
  auto models = answer_sets(g, {});
  REQUIRE(models.size() == 1);
  CHECK(atom_texts(g, models[0]).count("deep(\"a\")") == 1);
}

TEST_CASE("emitted program text reads back equivalently") {
  const char* kb = R"(
context ctop level 0.
context cbot level 1.
cbot < ctop.
module ctop {
  D(A => B).
}
module cbot {
  A(a).
  -B(a).
}
)";
  auto res = parse({kb, "two.ckr"});
  REQUIRE(res.ok());
  auto p = translate(*res.sckr);
  auto text = emit_text(p);

  auto direct = ground(p, {});
  auto reread = ground(read_program(text), {});
  auto m1 = answer_sets(direct, {});
  auto m2 = answer_sets(reread, {});
  REQUIRE(m1.size() == m2.size());
  std::set<std::set<std::string>> s1, s2;
  for (const auto& m : m1) s1.insert(atom_texts(direct, m));
  for (const auto& m : m2) s2.insert(atom_texts(reread, m));
  CHECK(s1 == s2);
}

TEST_CASE("the two-context example has one optimal model with the exception") {
  const char* kb = R"(
context ctop level 0.
context cbot level 1.
cbot < ctop.
module ctop {
  D(A => B).
}
module cbot {
  A(a).
  -B(a).
}
)";
  auto res = parse({kb, "two.ckr"});
  REQUIRE(res.ok());
  auto g = ground(translate(*res.sckr), {});
  auto best = optimal_answer_sets(g, {});
  REQUIRE(best.size() == 1);
  auto atoms = atom_texts(g, best[0]);
  CHECK(atoms.count("ovr(subClass,\"a\",\"A\",\"B\",\"ctop\",\"cbot\")") == 1);
  CHECK(atoms.count("instd(\"a\",\"B\",\"cbot\",main)") == 0);
  CHECK(best[0].cost == CostVector{{1, 1}});
}

TEST_CASE("model enumeration respects the cap") {
  Caps caps;
  caps.max_models = 1;
  CHECK_THROWS_AS(solve_text("a :- not b. b :- not a. c :- not d. d :- not c.", caps),
                  CapExceeded);
}

TEST_CASE("grounding respects the atom cap") {
  Caps caps;
  caps.max_ground_atoms = 2;
  CHECK_THROWS_AS(ground(read_program("q(\"x1\"). q(\"x2\"). p(X) :- q(X)."), caps), CapExceeded);
}
