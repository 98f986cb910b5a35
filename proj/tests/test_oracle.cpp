#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "ckr/ground.hpp"
#include "ckr/oracle.hpp"
#include "ckr/parse.hpp"
#include "ckr/solve.hpp"
#include "ckr/translate.hpp"
#include "random_sckr.hpp"

using namespace ckr;

namespace {

SCKR parse_kb(const char* text) {
  auto res = parse({text, "kb.ckr"});
  REQUIRE(res.ok());
  return *res.sckr;
}

const char* kException = R"(
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

const char* kNoException = R"(
context ctop level 0.
context cbot level 1.
cbot < ctop.
module ctop {
  D(A => B).
}
module cbot {
  A(a).
}
)";

std::set<std::set<std::string>> engine_model_texts(const SCKR& k, bool optimal_only,
                                                   const Caps& caps = {}) {
  auto g = ground(translate(k), caps);
  auto models = optimal_only ? optimal_answer_sets(g, caps) : answer_sets(g, caps);
  std::set<std::set<std::string>> out;
  for (const auto& s : models) {
    std::set<std::string> texts;
    for (int id : s.atoms) texts.insert(g.texts[static_cast<size_t>(id)]);
    out.insert(std::move(texts));
  }
  return out;
}

std::set<std::set<std::string>> oracle_model_texts(const SCKR& k,
                                                   const std::vector<JustifiedModel>& models) {
  std::set<std::set<std::string>> out;
  for (const auto& m : models) {
    auto v = herbrand(k, m);
    out.insert(std::set<std::string>(v.begin(), v.end()));
  }
  return out;
}

}  // namespace

TEST_CASE("a contradicted default is overridden in the unique justified model") {
  auto k = parse_kb(kException);
  auto just = enumerate_justified(k, {});
  REQUIRE(just.size() == 1);
  const auto& jm = just[0];
  REQUIRE(jm.chi.size() == 1);
  const auto& ca = *jm.chi.begin();
  CHECK(ca.kind == AxiomKind::SubClass);
  CHECK(ca.home == k.symbols.find("ctop"));
  CHECK(ca.at == k.symbols.find("cbot"));
  REQUIRE(ca.tuple.size() == 1);
  CHECK(ca.tuple[0] == k.symbols.find("a"));
  // B(a) is not derived at the bottom context
  Id cbot = k.symbols.find("cbot");
  CHECK(jm.interp.at(cbot).inst.count({k.symbols.find("a"), k.symbols.find("B")}) == 0);
}

TEST_CASE("without a clash no exception is justified") {
  auto k = parse_kb(kNoException);
  auto just = enumerate_justified(k, {});
  REQUIRE(just.size() == 1);
  CHECK(just[0].chi.empty());
  // the default applies: B(a) holds below
  Id cbot = k.symbols.find("cbot");
  CHECK(just[0].interp.at(cbot).inst.count({k.symbols.find("a"), k.symbols.find("B")}) == 1);
}

TEST_CASE("reference models map onto engine answer sets") {
  for (const char* kb : {kException, kNoException}) {
    auto k = parse_kb(kb);
    auto lhs = engine_model_texts(k, false);
    auto rhs = oracle_model_texts(k, enumerate_justified(k, {}));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("random repositories agree between reference and engine") {
  std::mt19937 rng(23);
  Caps caps;
  int done = 0;
  while (done < 25) {
    SCKR k = testsupport::random_sckr(rng);
    try {
      auto lhs = engine_model_texts(k, false, caps);
      auto rhs = oracle_model_texts(k, enumerate_justified(k, caps));
      INFO(serialize(k));
      CHECK(lhs == rhs);
      ++done;
    } catch (const CapExceeded&) {
      // resample
    }
  }
}

TEST_CASE("profiles order overriding counts from the most specific level") {
  CHECK(profile_less({0, 1}, {0, 2}));
  CHECK(profile_less({9, 0}, {0, 1}));
  CHECK_FALSE(profile_less({1, 1}, {1, 1}));
  CHECK(profile_less({1}, {1, 1}));
}

TEST_CASE("check_model accepts the produced model and rejects perturbations") {
  auto k = parse_kb(kException);
  auto pref = preferred(k, PreferenceMode::GlobalProfile, {});
  REQUIRE(pref.size() == 1);
  CasModel m{pref[0].interp, pref[0].chi};
  CHECK(check_model(k, m, {}));

  SECTION("an extra derived fact invalidates it") {
    CasModel bad = m;
    bad.interp[k.symbols.find("cbot")].inst.insert(
        {k.symbols.find("a"), k.symbols.find("B")});
    CHECK_FALSE(check_model(k, bad, {}));
  }
  SECTION("a dropped exception invalidates it") {
    CasModel bad = m;
    bad.chi.clear();
    CHECK_FALSE(check_model(k, bad, {}));
  }
  SECTION("an unjustified exception invalidates it") {
    auto k2 = parse_kb(kNoException);
    auto pref2 = preferred(k2, PreferenceMode::GlobalProfile, {});
    REQUIRE(pref2.size() == 1);
    CasModel bad{pref2[0].interp, pref2[0].chi};
    ClashingAssumption ca;
    ca.kind = AxiomKind::SubClass;
    ca.args = {k2.symbols.find("A"), k2.symbols.find("B"), kNoId};
    ca.home = k2.symbols.find("ctop");
    ca.tuple = {k2.symbols.find("a")};
    ca.at = k2.symbols.find("cbot");
    bad.chi.insert(ca);
    CHECK_FALSE(check_model(k2, bad, {}));
  }
}

TEST_CASE("entailment over preferred models") {
  auto k = parse_kb(kException);
  Id a = k.symbols.find("a"), cbot = k.symbols.find("cbot");
  CHECK(entails(k, {false, k.symbols.find("A"), a, kNoId, cbot}) == OracleVerdict::Entailed);
  CHECK(entails(k, {false, k.symbols.find("B"), a, kNoId, cbot}) == OracleVerdict::NotEntailed);

  auto k2 = parse_kb(kNoException);
  CHECK(entails(k2, {false, k2.symbols.find("B"), k2.symbols.find("a"), kNoId,
                     k2.symbols.find("cbot")}) == OracleVerdict::Entailed);
}

TEST_CASE("strict contradictions make the repository inconsistent") {
  auto k = parse_kb(R"(
context c level 0.
module c {
  A(a).
  -A(a).
}
)");
  CHECK(enumerate_justified(k, {}).empty());
  CHECK(entails(k, {false, k.symbols.find("A"), k.symbols.find("a"), kNoId,
                    k.symbols.find("c")}) == OracleVerdict::Inconsistent);
}

TEST_CASE("conjunctive queries bind variables across atoms") {
  auto k = parse_kb(R"(
context c level 0.
module c {
  A(a).
  r(a,b).
  B(b).
}
)");
  Id c = k.symbols.find("c");
  BcqAtom q1{false, k.symbols.find("A"), {true, kNoId, "x"}, {}, c};
  BcqAtom q2{true, k.symbols.find("r"), {true, kNoId, "x"}, {true, kNoId, "y"}, c};
  BcqAtom q3{false, k.symbols.find("B"), {true, kNoId, "y"}, {}, c};
  CHECK(entails_bcq(k, {q1, q2, q3}) == OracleVerdict::Entailed);
  // no individual is both A and B
  BcqAtom q4{false, k.symbols.find("B"), {true, kNoId, "x"}, {}, c};
  CHECK(entails_bcq(k, {q1, q4}) == OracleVerdict::NotEntailed);
}

TEST_CASE("connector contexts are direct covers that dominate every path") {
  auto k = parse_kb(R"(
context croot level 0.
context cmid level 1.
context cleaf level 2.
cmid < croot.
cleaf < cmid.
module cleaf { A(a). }
)");
  Id root = k.symbols.find("croot"), mid = k.symbols.find("cmid"), leaf = k.symbols.find("cleaf");
  CHECK(is_connector(k, mid, leaf));
  CHECK(is_connector(k, root, mid));
  CHECK_FALSE(is_connector(k, root, leaf));
}
