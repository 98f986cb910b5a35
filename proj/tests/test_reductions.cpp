#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ckr/oracle.hpp"
#include "ckr/parse.hpp"
#include "ckr/reductions.hpp"

using namespace ckr;

TEST_CASE("DIMACS parsing") {
  SECTION("well-formed input") {
    auto e = read_dimacs("c comment\np cnf 3 2\n1 -2 3 0\n2 2 0\n");
    CHECK(e.n == 3);
    REQUIRE(e.clauses.size() == 2);
    CHECK(e.clauses[0] == std::array<int, 3>{1, -2, 3});
    // short clauses are padded by duplicating the last literal
    CHECK(e.clauses[1] == std::array<int, 3>{2, 2, 2});
  }
  SECTION("missing header") {
    CHECK_THROWS_AS(read_dimacs("1 2 0\n"), CnfSyntaxError);
  }
  SECTION("count mismatch") {
    CHECK_THROWS_AS(read_dimacs("p cnf 2 2\n1 2 0\n"), CnfSyntaxError);
  }
  SECTION("literal out of range") {
    CHECK_THROWS_AS(read_dimacs("p cnf 2 1\n1 3 0\n"), CnfSyntaxError);
  }
  SECTION("oversized clause") {
    CHECK_THROWS_AS(read_dimacs("p cnf 4 1\n1 2 3 4 0\n"), CnfSyntaxError);
  }
}

TEST_CASE("monotone recognition and evaluation") {
  CnfInstance e{2, {{1, 2, 2}, {-1, -2, -2}}};
  CHECK(e.monotone());
  CHECK(e.eval({true, false}));
  CHECK_FALSE(e.eval({true, true}));
  CnfInstance mixed{2, {{1, -2, 2}}};
  CHECK_FALSE(mixed.monotone());
}

TEST_CASE("lexicographically maximal satisfying assignment") {
  // (x1 or x2) and (not x1 or not x2): lexmax is 10
  CnfInstance e{2, {{1, 2, 2}, {-1, -2, -2}}};
  auto a = lexmax_assignment(e);
  REQUIRE(a);
  CHECK(*a == std::vector<bool>{true, false});
  CHECK(satisfying_count(e) == 2);

  CnfInstance unsat{1, {{1, 1, 1}, {-1, -1, -1}}};
  CHECK_FALSE(lexmax_assignment(unsat).has_value());
  CHECK(satisfying_count(unsat) == 0);
}

TEST_CASE("inclusion splitting produces deterministic normal-form axioms") {
  SymbolTable sy;
  Id t = sy.intern("T", NameKind::Concept);
  Id a = sy.intern("A", NameKind::Concept);
  std::vector<Id> roles;
  for (const char* r : {"N1", "N2", "N3"}) roles.push_back(sy.intern(r, NameKind::Role));

  SECTION("three conjuncts") {
    auto axs = normalize_to_rl(sy, roles, t, a);
    REQUIRE(axs.size() == 6);
    CHECK(axs[0].kind == AxiomKind::SubConj);
    CHECK(sy.name(axs[0].arg[2]) == "T_and_A");
    for (int i = 1; i <= 3; ++i) CHECK(axs[static_cast<size_t>(i)].kind == AxiomKind::SubEx);
    CHECK(sy.name(axs[1].arg[2]) == "some_N1_T_and_A");
    CHECK(axs[5].arg[2] == sy.bot());
    // rerunning yields the same names
    auto again = normalize_to_rl(sy, roles, t, a);
    CHECK(axs == again);
  }
  SECTION("one conjunct") {
    auto axs = normalize_to_rl(sy, {roles[0]}, t, a);
    REQUIRE(axs.size() == 2);
    CHECK(axs[1].kind == AxiomKind::SubEx);
    CHECK(axs[1].arg[2] == sy.bot());
  }
  SECTION("empty role list rejected") {
    CHECK_THROWS_AS(normalize_to_rl(sy, {}, t, a), ReductionError);
  }
}

TEST_CASE("maximal-assignment chain instances") {
  SECTION("structure for two variables") {
    CnfInstance e{2, {{1, 2, 2}}};
    auto gi = gen_lexmax_sat(e);
    const SCKR& k = gi.sckr;
    REQUIRE(validate(k).empty());
    // contexts c0..c3 with levels decreasing by position
    REQUIRE(k.structure.contexts.size() == 4);
    CHECK(k.structure.level.at(k.symbols.find("c0")) == 3);
    CHECK(k.structure.level.at(k.symbols.find("c3")) == 0);
    REQUIRE(gi.queries.size() == 1);
    CHECK(gi.queries[0].pred == k.symbols.find("T"));
    CHECK(gi.queries[0].a == k.symbols.find("x2"));
    CHECK(gi.queries[0].context == k.symbols.find("c0"));
    // lexmax of (x1 or x2) is 11, so x2 is true
    REQUIRE(gi.expected[0].has_value());
    CHECK(*gi.expected[0] == true);
  }
  SECTION("unsatisfiable input expects inconsistency") {
    CnfInstance e{1, {{1, 1, 1}, {-1, -1, -1}}};
    auto gi = gen_lexmax_sat(e);
    CHECK_FALSE(gi.expected[0].has_value());
  }
  SECTION("mixed clauses rejected") {
    CnfInstance e{2, {{1, -2, 2}}};
    CHECK_THROWS_AS(gen_lexmax_sat(e), ReductionError);
  }
  SECTION("serialized output parses back") {
    CnfInstance e{2, {{-1, -2, -2}}};
    auto gi = gen_lexmax_sat(e);
    auto res = parse({serialize(gi.sckr), "gen.ckr"});
    REQUIRE(res.ok());
    CHECK(structurally_equal(gi.sckr, *res.sckr));
  }
}

TEST_CASE("parity-of-satisfiable chain instances") {
  CnfInstance sat1{1, {{1, 1, 1}}};          // qualifies: x1=1 works
  CnfInstance sat0{1, {{-1, -1, -1}}};       // satisfiable only all-false: does not qualify
  SECTION("qualification") {
    CHECK(odd_sat_qualifies(sat1));
    CHECK_FALSE(odd_sat_qualifies(sat0));
    CHECK(odd_sat_value({sat1, sat0}));
    CHECK_FALSE(odd_sat_value({sat1, sat1}));
  }
  SECTION("structure and expectations") {
    auto gi = gen_odd_sat({sat1, sat0});
    const SCKR& k = gi.sckr;
    REQUIRE(validate(k).empty());
    CHECK(k.structure.contexts.size() == 3);
    CHECK(is_ranked(k.structure));
    REQUIRE(gi.queries.size() == 1);
    CHECK(gi.queries[0].pred == k.symbols.find("O"));
    CHECK(gi.queries[0].a == k.symbols.find("a"));
    REQUIRE(gi.expected[0].has_value());
    CHECK(*gi.expected[0] == true);  // exactly one qualifying instance
    auto even = gen_odd_sat({sat1, sat1});
    CHECK(*even.expected[0] == false);
  }
  SECTION("precondition violations are rejected") {
    CHECK_THROWS_AS(gen_odd_sat({sat1}), ReductionError);              // odd count
    CHECK_THROWS_AS(gen_odd_sat({sat0, sat1}), ReductionError);       // non-prefix qualifiers
    CnfInstance unsat{1, {{1, 1, 1}, {-1, -1, -1}}};
    CHECK_THROWS_AS(gen_odd_sat({unsat, sat1}), ReductionError);      // unsatisfiable member
    CnfInstance twofree{2, {{2, 2, 2}}};  // 01 satisfies without x1
    CHECK_THROWS_AS(gen_odd_sat({twofree, sat0}), ReductionError);
  }
  SECTION("random inputs satisfy the preconditions") {
    std::mt19937 rng(5);
    for (int i = 0; i < 10; ++i) {
      auto es = random_odd_sat_input(rng, 2, 3);
      CHECK_NOTHROW(gen_odd_sat(es));
    }
  }
}

TEST_CASE("alternative-assignment instances") {
  // one universal, one existential; E = couplings plus (x1 or y1)
  QbfInput q;
  q.nx = 1;
  q.ny = 1;
  q.mu = {true};
  q.e.n = 3;
  q.e.clauses = {{1, 2, 2}, {-1, -2, -2}, {1, 3, 3}};
  SECTION("preconditions hold") {
    CHECK_NOTHROW(check_qbf_preconditions(q));
  }
  SECTION("truth value") {
    // for x1=0 the only satisfying y1 is 1 = mu, so no alternative exists
    CHECK_FALSE(qbf_value(q));
  }
  SECTION("structure") {
    auto gi = gen_qbf(q);
    const SCKR& k = gi.sckr;
    REQUIRE(validate(k).empty());
    CHECK(is_ranked(k.structure));
    // c0 plus one two-context chain per coupled variable plus the shared one
    CHECK(k.structure.contexts.size() == static_cast<size_t>(1 + 2 * (2 * q.nx + 1)));
    REQUIRE(gi.queries.size() == 1);
    CHECK(gi.queries[0].pred == k.symbols.find("F"));  // mu sets y1 true, query its flip
    CHECK(gi.queries[0].a == k.symbols.find("y1"));
    CHECK(*gi.expected[0] == false);
  }
  SECTION("missing couplings are rejected") {
    QbfInput bad = q;
    bad.e.clauses.erase(bad.e.clauses.begin());
    CHECK_THROWS_AS(check_qbf_preconditions(bad), ReductionError);
  }
  SECTION("layout mismatch is rejected") {
    QbfInput bad = q;
    bad.e.n = 4;
    CHECK_THROWS_AS(check_qbf_preconditions(bad), ReductionError);
  }
  SECTION("random inputs satisfy the preconditions") {
    std::mt19937 rng(17);
    for (int i = 0; i < 10; ++i) {
      auto qi = random_qbf_input(rng, 2, 2);
      CHECK_NOTHROW(check_qbf_preconditions(qi));
    }
  }
  SECTION("connector property of the shared chain") {
    auto gi = gen_qbf(q);
    const SCKR& k = gi.sckr;
    Id c0 = k.symbols.find("c0");
    Id cy = k.symbols.find("c_Yp");
    REQUIRE(cy != kNoId);
    CHECK(is_connector(k, cy, c0));
  }
}
