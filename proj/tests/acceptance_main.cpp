// Acceptance gate: eight end-to-end checks, one PASS/FAIL line each.
// Exit code is the number of failed checks.

#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ckr/ground.hpp"
#include "ckr/oracle.hpp"
#include "ckr/parse.hpp"
#include "ckr/reductions.hpp"
#include "ckr/solve.hpp"
#include "ckr/translate.hpp"
#include "support/random_sckr.hpp"

using namespace ckr;

namespace {

using ModelTexts = std::set<std::string>;

ModelTexts engine_texts(const GroundProgram& g, const AnswerSet& s) {
  ModelTexts out;
  for (int id : s.atoms) out.insert(g.texts[static_cast<size_t>(id)]);
  return out;
}

ModelTexts oracle_texts(const SCKR& k, const JustifiedModel& m) {
  auto v = herbrand(k, m);
  return ModelTexts(v.begin(), v.end());
}

constexpr unsigned kCorpusSeed = 20240817;

struct Criterion {
  std::string name;
  std::function<bool(std::string&)> run;
};

// ---------------------------------------------------------------- criterion 1

bool criterion_bijection(std::string& detail) {
  Caps caps;
  int checked = 0, failures = 0, resampled = 0;
  std::mt19937 rng(kCorpusSeed);
  while (checked < 200) {
    SCKR k = testsupport::random_sckr(rng);
    try {
      auto g = ground(translate(k), caps);
      auto engine = answer_sets(g, caps);
      auto just = enumerate_justified(k, caps);
      std::set<ModelTexts> lhs, rhs;
      for (const auto& s : engine) lhs.insert(engine_texts(g, s));
      for (const auto& m : just) rhs.insert(oracle_texts(k, m));
      if (lhs != rhs) ++failures;
      ++checked;
    } catch (const CapExceeded&) {
      ++resampled;
      if (resampled > 1000) {
        detail = "resampling budget exhausted";
        return false;
      }
    }
  }
  detail = std::to_string(failures) + "/200 mismatches";
  return failures == 0;
}

// ---------------------------------------------------------------- criterion 2

bool criterion_optimality(std::string& detail) {
  Caps caps;
  int checked = 0, failures = 0, resampled = 0;
  std::mt19937 rng(kCorpusSeed);
  while (checked < 200) {
    SCKR k = testsupport::random_sckr(rng);
    if (!is_ranked(k.structure)) continue;
    try {
      auto g = ground(translate(k), caps);
      auto engine = optimal_answer_sets(g, caps);
      auto pref = preferred(k, PreferenceMode::GlobalProfile, caps);
      std::set<ModelTexts> lhs, rhs;
      for (const auto& s : engine) lhs.insert(engine_texts(g, s));
      for (const auto& m : pref) rhs.insert(oracle_texts(k, m));
      if (lhs != rhs) ++failures;
      ++checked;
    } catch (const CapExceeded&) {
      ++resampled;
      if (resampled > 1000) {
        detail = "resampling budget exhausted";
        return false;
      }
    }
  }
  detail = std::to_string(failures) + "/200 mismatches";
  return failures == 0;
}

// ---------------------------------------------------------------- criterion 3

bool criterion_lexmax_family(std::string& detail) {
  Caps caps;
  std::mt19937 rng(kCorpusSeed + 3);
  std::uniform_int_distribution<int> nd(1, 5), md(1, 8);
  int verdict_bad = 0, count_bad = 0, capped = 0;
  for (int i = 0; i < 100; ++i) {
    auto e = random_monotone_cnf(rng, nd(rng), md(rng));
    try {
      auto gi = gen_lexmax_sat(e, caps);
      auto g = ground(translate(gi.sckr), caps);
      auto verdict = cautious_entails(g, output_atom(gi.sckr, gi.queries[0]), caps);
      Entailment want = !gi.expected[0] ? Entailment::Inconsistent
                        : *gi.expected[0] ? Entailment::Entailed
                                          : Entailment::NotEntailed;
      if (verdict != want) ++verdict_bad;
      long models = static_cast<long>(answer_sets(g, caps).size());
      if (models != satisfying_count(e, caps)) ++count_bad;
    } catch (const CapExceeded&) {
      ++capped;
    }
  }
  detail = std::to_string(verdict_bad) + "/100 verdict mismatches, " + std::to_string(count_bad) +
           "/100 count mismatches, " + std::to_string(capped) + " capped";
  return verdict_bad == 0 && count_bad == 0 && capped == 0;
}

// ---------------------------------------------------------------- criterion 4

bool criterion_parity_family(std::string& detail) {
  Caps caps;
  std::mt19937 rng(kCorpusSeed + 4);
  std::uniform_int_distribution<int> ld(0, 1);
  int failures = 0, capped = 0;
  for (int i = 0; i < 50; ++i) {
    int l = ld(rng) ? 2 : 4;
    try {
      auto es = random_odd_sat_input(rng, l, 3, caps);
      auto gi = gen_odd_sat(es, caps);
      bool want = *gi.expected[0];

      auto g = ground(translate(gi.sckr), caps);
      auto engine = cautious_entails(g, output_atom(gi.sckr, gi.queries[0]), caps);
      auto oracle = entails(gi.sckr, gi.queries[0], caps);
      bool ok = engine == (want ? Entailment::Entailed : Entailment::NotEntailed) &&
                oracle == (want ? OracleVerdict::Entailed : OracleVerdict::NotEntailed);
      if (!ok) ++failures;
    } catch (const CapExceeded&) {
      ++capped;
    }
  }
  detail = std::to_string(failures) + "/50 mismatches, " + std::to_string(capped) + " capped";
  return failures == 0 && capped == 0;
}

// ---------------------------------------------------------------- criterion 5

bool criterion_alternation_family(std::string& detail) {
  Caps caps;
  std::mt19937 rng(kCorpusSeed + 5);
  std::uniform_int_distribution<int> d12(1, 2);
  int failures = 0, connector_bad = 0, capped = 0;
  for (int i = 0; i < 30; ++i) {
    try {
      auto q = random_qbf_input(rng, d12(rng), d12(rng), caps);
      auto gi = gen_qbf(q, caps);
      const SCKR& k = gi.sckr;
      bool want = *gi.expected[0];
      auto verdict = entails(k, gi.queries[0], caps, PreferenceMode::InducedLocal);
      if (verdict != (want ? OracleVerdict::Entailed : OracleVerdict::NotEntailed)) ++failures;
      Id c0 = k.symbols.find("c0");
      Id cy = k.symbols.find("c_Yp");
      Id cny = k.symbols.find("c_not_Yp");
      if (!is_connector(k, cy, c0) || !is_connector(k, cny, cy)) ++connector_bad;
    } catch (const CapExceeded&) {
      ++capped;
    }
  }
  detail = std::to_string(failures) + "/30 verdict mismatches, " + std::to_string(connector_bad) +
           " connector failures, " + std::to_string(capped) + " capped";
  return failures == 0 && connector_bad == 0 && capped == 0;
}

// ---------------------------------------------------------------- criterion 6

bool criterion_model_checking(std::string& detail) {
  Caps caps;
  std::mt19937 rng(kCorpusSeed);
  int checked = 0, failures = 0, resampled = 0;
  while (checked < 200) {
    SCKR k = testsupport::random_sckr(rng);
    try {
      auto just = enumerate_justified(k, caps);
      std::set<Chi> justified_sets;
      for (const auto& m : just) justified_sets.insert(m.chi);
      auto pref = preferred(k, PreferenceMode::GlobalProfile, caps);
      std::set<Chi> preferred_sets;
      for (const auto& m : pref) preferred_sets.insert(m.chi);
      auto cands = candidate_assumptions(k);

      for (const auto& m : just) {
        bool expect = preferred_sets.count(m.chi) != 0;
        if (check_model(k, {m.interp, m.chi}, caps) != expect) ++failures;
        if (!expect) continue;

        // one extra unjustified assumption
        for (const auto& ca : cands) {
          if (m.chi.count(ca)) continue;
          Chi bigger = m.chi;
          bigger.insert(ca);
          if (justified_sets.count(bigger)) continue;
          if (check_model(k, {m.interp, bigger}, caps)) ++failures;
          break;
        }
        // one extra derived fact
        if (!k.structure.contexts.empty()) {
          auto inds = k.symbols.all_of(NameKind::Individual);
          auto clss = k.symbols.all_of(NameKind::Concept);
          CasModel fat{m.interp, m.chi};
          bool perturbed = false;
          for (Id c : k.structure.contexts) {
            for (Id x : inds) {
              for (Id z : clss)
                if (!fat.interp[c].inst.count({x, z})) {
                  fat.interp[c].inst.insert({x, z});
                  perturbed = true;
                  break;
                }
              if (perturbed) break;
            }
            if (perturbed) break;
          }
          if (perturbed && check_model(k, fat, caps)) ++failures;
        }
      }
      ++checked;
    } catch (const CapExceeded&) {
      ++resampled;
      if (resampled > 1000) {
        detail = "resampling budget exhausted";
        return false;
      }
    }
  }
  detail = std::to_string(failures) + " failures over 200 repositories";
  return failures == 0;
}

// ---------------------------------------------------------------- criterion 7

bool criterion_program_properties(std::string& detail) {
  Caps caps;
  std::mt19937 rng(kCorpusSeed);
  int checked = 0, failures = 0, resampled = 0;
  while (checked < 200) {
    SCKR k = testsupport::random_sckr(rng);
    try {
      auto g = ground(translate(k), caps);
      auto models = answer_sets(g, caps);
      for (const auto& s : models) {
        std::set<std::string> texts = engine_texts(g, s);
        bool ok = texts.count("unsat(main)") == 0;

        // main facts are contained in every active test environment
        std::vector<Term> envs;
        std::vector<const ProgAtom*> mains;
        for (int id : s.atoms) {
          const auto& a = g.atoms[static_cast<size_t>(id)];
          if (a.pred == "test") envs.push_back(a.args[0]);
          if ((a.pred == "instd" || a.pred == "tripled") &&
              a.args.back() == Term::token("main"))
            mains.push_back(&a);
        }
        for (const auto& env : envs)
          for (const ProgAtom* a : mains) {
            ProgAtom shifted = *a;
            shifted.args.back() = env;
            if (!texts.count(to_text(shifted))) ok = false;
          }

        // every overriding is levelled at its home significance, and the
        // cost vector counts the levelled atoms
        std::map<long, long> level_counts;
        for (int id : s.atoms) {
          const auto& a = g.atoms[static_cast<size_t>(id)];
          if (a.pred.rfind("ovrlevel_", 0) == 0) ++level_counts[a.args.back().num];
          if (a.pred != "ovr") continue;
          std::string tag = a.args[0].text;
          AxiomKind kind = AxiomKind::Inst;
          bool found = false;
          for (int t = 0; t < kAxiomKindCount; ++t) {
            const char* st = shape_tag(static_cast<AxiomKind>(t));
            if (st && tag == st) {
              kind = static_cast<AxiomKind>(t);
              found = true;
              break;
            }
          }
          if (!found) {
            ok = false;
            continue;
          }
          const Term& home = a.args[a.args.size() - 2];
          const Term& at = a.args.back();
          Id home_id = k.symbols.find(home.text);
          ProgAtom lvl;
          lvl.pred = std::string("ovrlevel_") + tag;
          for (size_t j = 1; j + 2 < a.args.size(); ++j) lvl.args.push_back(a.args[j]);
          if (kind == AxiomKind::SubEx) lvl.args.push_back(home);
          lvl.args.push_back(at);
          lvl.args.push_back(Term::number(significance(k.structure, home_id)));
          if (!texts.count(to_text(lvl))) ok = false;
        }
        CostVector expect_cost;
        for (const auto& [l, n] : level_counts) expect_cost[l] = n;
        if (s.cost != expect_cost) ok = false;

        if (!ok) ++failures;
      }
      ++checked;
    } catch (const CapExceeded&) {
      ++resampled;
      if (resampled > 1000) {
        detail = "resampling budget exhausted";
        return false;
      }
    }
  }
  detail = std::to_string(failures) + " bad models over 200 repositories";
  return failures == 0;
}

// ---------------------------------------------------------------- criterion 8

bool criterion_determinism(std::string& detail) {
  int failures = 0;
  std::mt19937 rng(kCorpusSeed + 8);
  for (int i = 0; i < 50; ++i) {
    SCKR k = testsupport::random_sckr(rng);
    auto t1 = emit_text(translate(k));
    auto t2 = emit_text(translate(k));
    SCKR perm = k;
    std::reverse(perm.modules.begin(), perm.modules.end());
    for (auto& m : perm.modules) std::reverse(m.axioms.begin(), m.axioms.end());
    auto t3 = emit_text(translate(perm));
    if (t1 != t2 || t1 != t3) ++failures;
  }

  auto gen_twice = [&](auto&& gen) {
    std::mt19937 r1(99), r2(99);
    auto a = gen(r1);
    auto b = gen(r2);
    if (serialize(a.sckr) != serialize(b.sckr)) ++failures;
  };
  Caps caps;
  gen_twice([&](std::mt19937& r) { return gen_lexmax_sat(random_monotone_cnf(r, 3, 4), caps); });
  gen_twice([&](std::mt19937& r) { return gen_odd_sat(random_odd_sat_input(r, 2, 2, caps), caps); });
  gen_twice([&](std::mt19937& r) { return gen_qbf(random_qbf_input(r, 1, 1, caps), caps); });

  detail = std::to_string(failures) + " nondeterministic cases";
  return failures == 0;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {"answer sets match reference models one-for-one", criterion_bijection},
      {"optimal answer sets match preferred reference models", criterion_optimality},
      {"maximal-assignment chain family answers correctly", criterion_lexmax_family},
      {"parity chain family answers correctly", criterion_parity_family},
      {"alternative-assignment family answers correctly under local preference",
       criterion_alternation_family},
      {"model checking accepts produced models and rejects perturbations",
       criterion_model_checking},
      {"per-model program invariants hold", criterion_program_properties},
      {"compilation and generators are deterministic", criterion_determinism},
  };

  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    std::string detail;
    bool ok = false;
    try {
      ok = criteria[i].run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    } catch (const CapExceeded& e) {
      detail = "resource cap: " + e.what;
    } catch (const StructuralError& e) {
      detail = "structural error: " + e.message;
    }
    std::cout << "criterion " << i + 1 << " [" << criteria[i].name << "]: "
              << (ok ? "PASS" : "FAIL") << " (" << detail << ")" << std::endl;
    if (!ok) ++failed;
  }
  return failed;
}
