#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "ckr/caps.hpp"
#include "ckr/sckr.hpp"
#include "ckr/translate.hpp"

namespace ckr {

/// An exception: defeasible axiom (identified by shape, args, home context)
/// not applied to `tuple` at context `at`, with `at` strictly below `home`.
struct ClashingAssumption {
  AxiomKind kind;
  std::array<Id, 3> args;
  Id home;
  std::vector<Id> tuple;
  Id at;

  auto key() const {
    return std::make_tuple(static_cast<int>(kind), args[0], args[1], args[2], home, tuple, at);
  }
  bool operator<(const ClashingAssumption& o) const { return key() < o.key(); }
  bool operator==(const ClashingAssumption& o) const { return key() == o.key(); }
};

using Chi = std::set<ClashingAssumption>;

struct CtxFacts {
  std::set<std::pair<Id, Id>> inst;        // (individual, cls incl. top/bot)
  std::set<std::array<Id, 3>> triple;      // (subject, role, object)

  bool operator==(const CtxFacts&) const = default;
};

using Interp = std::map<Id, CtxFacts>;

struct CasModel {
  Interp interp;
  Chi chi;
};

namespace oracle_detail {

struct AxiomAt {
  NormalAxiom ax;
  Id home;
};

struct Materializer {
  const SCKR& k;
  std::set<std::pair<Id, Id>> below;  // strict order (c, c1): c below c1
  std::vector<AxiomAt> axioms;
  std::vector<Id> individuals;

  explicit Materializer(const SCKR& kb) : k(kb), below(strict_below(kb.structure)) {
    for (const auto& m : k.modules)
      for (const auto& ax : m.axioms) axioms.push_back({ax, m.context});
    individuals = k.symbols.all_of(NameKind::Individual);
  }

  bool is_below(Id c, Id c1) const { return below.count({c, c1}) != 0; }

  static ClashingAssumption assumption(const NormalAxiom& ax, Id home, std::vector<Id> tuple,
                                       Id at) {
    return ClashingAssumption{ax.kind, ax.arg, home, std::move(tuple), at};
  }

  /// Least fixpoint of the deduction rules under blocking by chi. With
  /// apply_abox the assertional facts (and the universal top cls) are
  /// seeded and propagated; otherwise the given seed plays that role, which
  /// is how consequence-addition tests re-run the closure.
  std::pair<Interp, bool> closure(const Chi& chi, Interp seed, bool apply_abox) const {
    Interp m = std::move(seed);
    for (Id c : k.structure.contexts) m[c];  // ensure every context exists
    bool clash = false;
    Id top = k.symbols.top(), bot = k.symbols.bot();

    if (apply_abox)
      for (auto& [c, f] : m)
        for (Id a : individuals) f.inst.insert({a, top});

    auto blocked = [&](const NormalAxiom& ax, Id home, std::vector<Id> tuple, Id at) {
      if (!ax.defeasible || at == home) return false;
      return chi.count(assumption(ax, home, std::move(tuple), at)) != 0;
    };
    // assertion facts share their program atom, so propagation blocking is
    // keyed by the fact, not the stating axiom
    auto fact_blocked = [&](bool is_triple, Id p, Id a, Id b, Id home, Id at) {
      ClashingAssumption ca;
      ca.kind = is_triple ? AxiomKind::Triple : AxiomKind::Inst;
      ca.args = {p, a, is_triple ? b : kNoId};
      ca.home = home;
      ca.at = at;
      return chi.count(ca) != 0;
    };

    bool changed = true;
    while (changed) {
      changed = false;
      auto add_inst = [&](Id c, Id a, Id cls) {
        if (m[c].inst.insert({a, cls}).second) changed = true;
        if (cls == bot) clash = true;
      };
      auto add_triple = [&](Id c, Id a, Id r, Id b) {
        if (m[c].triple.insert({a, r, b}).second) changed = true;
      };

      for (const auto& [ax, home] : axioms) {
        const Id* g = ax.arg.data();
        for (Id c : k.structure.contexts) {
          bool at_home = c == home;
          if (!at_home && !is_below(c, home)) continue;
          auto& f = m[c];
          switch (ax.kind) {
            case AxiomKind::Inst:
              if (at_home || !fact_blocked(false, g[0], g[1], kNoId, home, c))
                add_inst(c, g[1], g[0]);
              break;
            case AxiomKind::NomSub:
              if (at_home || !fact_blocked(false, g[1], g[0], kNoId, home, c))
                add_inst(c, g[0], g[1]);
              break;
            case AxiomKind::TopAssert:
              if (at_home || !fact_blocked(false, top, g[0], kNoId, home, c))
                add_inst(c, g[0], top);
              break;
            case AxiomKind::BotAssert:
              if (at_home || !fact_blocked(false, bot, g[0], kNoId, home, c))
                add_inst(c, g[0], bot);
              break;
            case AxiomKind::Triple:
              if (at_home || !fact_blocked(true, g[0], g[1], g[2], home, c))
                add_triple(c, g[1], g[0], g[2]);
              break;
            case AxiomKind::NegInst:
              if (f.inst.count({g[1], g[0]}) && !blocked(ax, home, {}, c)) clash = true;
              break;
            case AxiomKind::NegTriple:
              if (f.triple.count({g[1], g[0], g[2]}) && !blocked(ax, home, {}, c)) clash = true;
              break;
            case AxiomKind::Eq:
              if (at_home && apply_abox) clash = true;
              break;
            case AxiomKind::Neq:
              break;
            case AxiomKind::SubClass:
              for (const auto& [x, a] : f.inst)
                if (a == g[0] && !blocked(ax, home, {x}, c)) add_inst(c, x, g[1]);
              break;
            case AxiomKind::SubConj:
              for (const auto& [x, a] : f.inst)
                if (a == g[0] && f.inst.count({x, g[1]}) && !blocked(ax, home, {x}, c))
                  add_inst(c, x, g[2]);
              break;
            case AxiomKind::SubEx:
              for (const auto& t : f.triple)
                if (t[1] == g[0] && f.inst.count({t[2], g[1]}) &&
                    !blocked(ax, home, {t[0]}, c))
                  add_inst(c, t[0], g[2]);
              break;
            case AxiomKind::SupEx:
              for (const auto& [x, a] : f.inst)
                if (a == g[0] && !blocked(ax, home, {x}, c)) add_triple(c, x, g[1], g[2]);
              break;
            case AxiomKind::SupForall:
              for (const auto& t : f.triple)
                if (t[1] == g[1] && f.inst.count({t[0], g[0]}) &&
                    !blocked(ax, home, {t[0], t[2]}, c))
                  add_inst(c, t[2], g[2]);
              break;
            case AxiomKind::SupLeqOne:
              for (const auto& t1 : f.triple) {
                if (t1[1] != g[1] || !f.inst.count({t1[0], g[0]})) continue;
                for (const auto& t2 : f.triple)
                  if (t2[1] == g[1] && t2[0] == t1[0] &&
                      !blocked(ax, home, {t1[0], t1[2], t2[2]}, c))
                    clash = true;
              }
              break;
            case AxiomKind::SubRole:
              for (const auto& t : f.triple)
                if (t[1] == g[0] && !blocked(ax, home, {t[0], t[2]}, c))
                  add_triple(c, t[0], g[1], t[2]);
              break;
            case AxiomKind::SubRChain:
              for (const auto& t1 : f.triple) {
                if (t1[1] != g[0]) continue;
                for (const auto& t2 : f.triple)
                  if (t2[1] == g[1] && t2[0] == t1[2] &&
                      !blocked(ax, home, {t1[0], t1[2], t2[2]}, c))
                    add_triple(c, t1[0], g[2], t2[2]);
              }
              break;
            case AxiomKind::Dis:
              for (const auto& t : f.triple)
                if (t[1] == g[0] && f.triple.count({t[0], g[1], t[2]}) &&
                    !blocked(ax, home, {t[0], t[2]}, c))
                  clash = true;
              break;
            case AxiomKind::Inv:
              for (const auto& t : f.triple) {
                if (t[1] == g[0] && !blocked(ax, home, {t[0], t[2]}, c))
                  add_triple(c, t[2], g[1], t[0]);
                if (t[1] == g[1] && !blocked(ax, home, {t[2], t[0]}, c))
                  add_triple(c, t[2], g[0], t[0]);
              }
              break;
            case AxiomKind::Irr:
              for (const auto& t : f.triple)
                if (t[1] == g[0] && t[0] == t[2] && !blocked(ax, home, {t[0]}, c)) clash = true;
              break;
            case AxiomKind::EvalSubC:
              for (const auto& [x, a] : m[g[1]].inst)
                if (a == g[0]) add_inst(c, x, g[2]);
              break;
            case AxiomKind::EvalSubR:
              for (const auto& t : m[g[1]].triple)
                if (t[1] == g[0]) add_triple(c, t[0], g[2], t[2]);
              break;
          }
        }
      }
    }
    return {std::move(m), !clash};
  }
};

}  // namespace oracle_detail

inline std::vector<ClashingAssumption> candidate_assumptions(const SCKR& k) {
  oracle_detail::Materializer mat(k);
  std::vector<ClashingAssumption> out;
  for (const auto& [ax, home] : mat.axioms) {
    if (!ax.defeasible) continue;
    for (Id c : k.structure.contexts) {
      if (!mat.is_below(c, home)) continue;
      int arity = exception_arity(ax.kind);
      std::vector<Id> tuple(static_cast<size_t>(arity), 0);
      std::function<void(int)> rec = [&](int i) {
        if (i == arity) {
          out.push_back(oracle_detail::Materializer::assumption(ax, home, tuple, c));
          return;
        }
        for (Id a : mat.individuals) {
          tuple[static_cast<size_t>(i)] = a;
          rec(i + 1);
        }
      };
      rec(0);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

struct LeastModelResult {
  Interp interp;
  bool consistent = false;
};

inline LeastModelResult least_model(const SCKR& k, const Chi& chi) {
  oracle_detail::Materializer mat(k);
  auto [m, ok] = mat.closure(chi, {}, true);
  return {std::move(m), ok};
}

namespace oracle_detail {

/// Premise of the overriding rule for assumption ca, evaluated at ca.at.
inline bool premise_holds(const Materializer& mat, const Interp& m,
                          const ClashingAssumption& ca) {
  const auto& f = m.at(ca.at);
  const Id* g = ca.args.data();
  const auto& e = ca.tuple;
  switch (ca.kind) {
    case AxiomKind::Inst:
    case AxiomKind::Triple:
      return true;
    case AxiomKind::NegInst:
      return f.inst.count({g[1], g[0]}) != 0;
    case AxiomKind::NegTriple:
      return f.triple.count({g[1], g[0], g[2]}) != 0;
    case AxiomKind::SubClass:
      return f.inst.count({e[0], g[0]}) != 0;
    case AxiomKind::SubConj:
      return f.inst.count({e[0], g[0]}) && f.inst.count({e[0], g[1]});
    case AxiomKind::SubEx:
      for (const auto& t : f.triple)
        if (t[0] == e[0] && t[1] == g[0] && f.inst.count({t[2], g[1]})) return true;
      return false;
    case AxiomKind::SupEx:
      return f.inst.count({e[0], g[0]}) != 0;
    case AxiomKind::SupForall:
      return f.inst.count({e[0], g[0]}) && f.triple.count({e[0], g[1], e[1]});
    case AxiomKind::SupLeqOne:
      return f.inst.count({e[0], g[0]}) && f.triple.count({e[0], g[1], e[1]}) &&
             f.triple.count({e[0], g[1], e[2]});
    case AxiomKind::SubRole:
      return f.triple.count({e[0], g[0], e[1]}) != 0;
    case AxiomKind::SubRChain:
      return f.triple.count({e[0], g[0], e[1]}) && f.triple.count({e[1], g[1], e[2]});
    case AxiomKind::Dis:
      return f.triple.count({e[0], g[0], e[1]}) && f.triple.count({e[0], g[1], e[1]});
    case AxiomKind::Inv:
      return f.triple.count({e[0], g[0], e[1]}) || f.triple.count({e[1], g[1], e[0]});
    case AxiomKind::Irr:
      return f.triple.count({e[0], g[0], e[0]}) != 0;
    default:
      return false;
  }
  (void)mat;
}

inline bool consequence_free(AxiomKind k) {
  switch (k) {
    case AxiomKind::NegInst:
    case AxiomKind::NegTriple:
    case AxiomKind::SupLeqOne:
    case AxiomKind::Dis:
    case AxiomKind::Irr:
      return true;
    default:
      return false;
  }
}

struct ConsequenceLit {
  bool is_triple = false;
  Id a = kNoId, p = kNoId, b = kNoId;  // inst: (a, p); triple: (a, p, b)
};

/// Consequence literal(s) of applying the axiom to the tuple; inverse-role
/// axioms have one per direction.
inline std::vector<ConsequenceLit> consequences(const ClashingAssumption& ca) {
  const Id* g = ca.args.data();
  const auto& e = ca.tuple;
  switch (ca.kind) {
    case AxiomKind::Inst: return {{false, g[1], g[0], kNoId}};
    case AxiomKind::Triple: return {{true, g[1], g[0], g[2]}};
    case AxiomKind::SubClass: return {{false, e[0], g[1], kNoId}};
    case AxiomKind::SubConj: return {{false, e[0], g[2], kNoId}};
    case AxiomKind::SubEx: return {{false, e[0], g[2], kNoId}};
    case AxiomKind::SupEx: return {{true, e[0], g[1], g[2]}};
    case AxiomKind::SupForall: return {{false, e[1], g[2], kNoId}};
    case AxiomKind::SubRole: return {{true, e[0], g[1], e[1]}};
    case AxiomKind::SubRChain: return {{true, e[0], g[2], e[2]}};
    case AxiomKind::Inv:
      return {{true, e[0], g[1], e[1]}, {true, e[0], g[0], e[1]}};
    default:
      return {};
  }
}

/// Direction-i premise for inverse-role axioms (used for both directions'
/// consequence checks); other shapes have a single premise.
inline bool inv_premise(const Interp& m, const ClashingAssumption& ca, int dir) {
  const auto& f = m.at(ca.at);
  const Id* g = ca.args.data();
  const auto& e = ca.tuple;
  if (dir == 0) return f.triple.count({e[0], g[0], e[1]}) != 0;
  return f.triple.count({e[1], g[1], e[0]}) != 0;
}

/// Would adding `lit` at ca.at make the model inconsistent? Mirrors the
/// program's consequence-addition test environments: copy all derived facts,
/// add the literal, close under the same blocking.
inline bool addition_clashes(const Materializer& mat, const Chi& chi, const Interp& m,
                             Id at, const ConsequenceLit& lit) {
  Interp seed = m;
  if (lit.is_triple)
    seed[at].triple.insert({lit.a, lit.p, lit.b});
  else
    seed[at].inst.insert({lit.a, lit.p});
  auto [unused, ok] = mat.closure(chi, std::move(seed), false);
  (void)unused;
  return !ok;
}

}  // namespace oracle_detail

/// Condition for chi to be justified given its (consistent) least model:
/// every assumption's overriding premise holds, and for consequence-bearing
/// shapes adding the consequence is inconsistent.
inline bool is_justified(const SCKR& k, const Chi& chi, const LeastModelResult& lm) {
  oracle_detail::Materializer mat(k);
  if (!lm.consistent) return false;
  for (const auto& ca : chi) {
    if (!oracle_detail::premise_holds(mat, lm.interp, ca)) return false;
    if (oracle_detail::consequence_free(ca.kind)) continue;
    auto cons = oracle_detail::consequences(ca);
    if (ca.kind == AxiomKind::Inv) {
      for (int dir = 0; dir < 2; ++dir)
        if (oracle_detail::inv_premise(lm.interp, ca, dir) &&
            !oracle_detail::addition_clashes(mat, chi, lm.interp, ca.at, cons[static_cast<size_t>(dir)]))
          return false;
    } else {
      if (!oracle_detail::addition_clashes(mat, chi, lm.interp, ca.at, cons[0])) return false;
    }
  }
  return true;
}

inline bool is_justified(const SCKR& k, const Chi& chi) {
  return is_justified(k, chi, least_model(k, chi));
}

struct JustifiedModel {
  Chi chi;
  Interp interp;
};

/// All justified chi with consistent least models, by depth-first search over
/// the candidate set with pruning based on the anti-monotonicity of the
/// closure in chi (more blocking derives fewer facts).
inline std::vector<JustifiedModel> enumerate_justified(const SCKR& k, const Caps& caps = {}) {
  oracle_detail::Materializer mat(k);
  auto all_cands = candidate_assumptions(k);
  auto base = mat.closure({}, {}, true);

  // an assumption can only end up justified if its premise (and, for
  // consequence-bearing shapes, the addition clash) holds under no blocking
  std::vector<ClashingAssumption> cands;
  for (const auto& ca : all_cands) {
    if (!oracle_detail::premise_holds(mat, base.first, ca)) continue;
    if (!oracle_detail::consequence_free(ca.kind) && ca.kind != AxiomKind::Inv) {
      if (!oracle_detail::addition_clashes(mat, {}, base.first, ca.at,
                                           oracle_detail::consequences(ca)[0]))
        continue;
    }
    cands.push_back(ca);
  }

  std::vector<JustifiedModel> out;
  long visited = 0;
  std::function<void(size_t, Chi&)> rec = [&](size_t idx, Chi& chi) {
    if (++visited > caps.max_subsets) throw CapExceeded{"assumption subset cap exceeded"};
    if (idx == cands.size()) {
      auto lm = mat.closure(chi, {}, true);
      LeastModelResult r{std::move(lm.first), lm.second};
      if (r.consistent && is_justified(k, chi, r))
        out.push_back({chi, std::move(r.interp)});
      return;
    }
    // prune the whole branch when even maximal blocking cannot restore
    // consistency
    Chi maximal = chi;
    for (size_t j = idx; j < cands.size(); ++j) maximal.insert(cands[j]);
    if (!mat.closure(maximal, {}, true).second) return;

    const auto& ca = cands[idx];
    rec(idx + 1, chi);  // exclude

    auto current = mat.closure(chi, {}, true);
    bool can_include = oracle_detail::premise_holds(mat, current.first, ca);
    if (can_include && !oracle_detail::consequence_free(ca.kind) && ca.kind != AxiomKind::Inv)
      can_include = oracle_detail::addition_clashes(mat, chi, current.first, ca.at,
                                                    oracle_detail::consequences(ca)[0]);
    if (can_include) {
      chi.insert(ca);
      rec(idx + 1, chi);
      chi.erase(ca);
    }
  };
  Chi chi;
  rec(0, chi);
  std::sort(out.begin(), out.end(),
            [](const JustifiedModel& a, const JustifiedModel& b) { return a.chi < b.chi; });
  return out;
}

/// Overriding counts per home-context level (index = level).
using Profile = std::vector<long>;

inline Profile profile(const SCKR& k, const Chi& chi) {
  int max_level = 0;
  for (const auto& [c, l] : k.structure.level) max_level = std::max(max_level, l);
  Profile p(static_cast<size_t>(max_level) + 1, 0);
  for (const auto& ca : chi) p[static_cast<size_t>(k.structure.level.at(ca.home))] += 1;
  return p;
}

/// Lexicographic comparison scanning from the highest level down.
inline bool profile_less(const Profile& a, const Profile& b) {
  size_t n = std::max(a.size(), b.size());
  for (size_t i = n; i-- > 0;) {
    long x = i < a.size() ? a[i] : 0;
    long y = i < b.size() ? b[i] : 0;
    if (x != y) return x < y;
  }
  return false;
}

enum class PreferenceMode { GlobalProfile, InducedLocal };

inline bool is_connector(const SCKR& k, Id c1, Id c);

inline std::vector<JustifiedModel> preferred(const SCKR& k, PreferenceMode mode,
                                             const Caps& caps = {}) {
  auto just = enumerate_justified(k, caps);
  if (just.empty()) return just;
  std::vector<JustifiedModel> out;
  if (mode == PreferenceMode::GlobalProfile) {
    Profile best = profile(k, just[0].chi);
    for (const auto& j : just) {
      auto p = profile(k, j.chi);
      if (profile_less(p, best)) best = p;
    }
    for (auto& j : just)
      if (!profile_less(best, profile(k, j.chi)) && !profile_less(profile(k, j.chi), best))
        out.push_back(std::move(j));
    return out;
  }

  // Induced-local mode: the local preference at a context c is the minimal
  // relation with the connector property. chi1 is locally better than chi2 at
  // c when, for some connector c1 of c, chi2 makes every exception at c that
  // any justified model makes for axioms homed at c1, chi1 does not, and the
  // two agree on exceptions for axioms homed at contexts above c that are
  // neither the connector nor above it. Globally, a model dominates another
  // when it is locally better somewhere and locally worse nowhere.
  auto below = strict_below(k.structure);
  std::map<std::pair<Id, Id>, Chi> xset;  // (at, home) -> exceptions seen anywhere
  for (const auto& j : just)
    for (const auto& ca : j.chi) xset[{ca.at, ca.home}].insert(ca);

  auto at_superset = [](const Chi& chi, const Chi& x) {
    for (const auto& ca : x)
      if (!chi.count(ca)) return false;
    return true;
  };
  auto home_part = [](const Chi& chi, Id h) {
    Chi s;
    for (const auto& ca : chi)
      if (ca.home == h) s.insert(ca);
    return s;
  };
  auto locally_better = [&](const Chi& a, const Chi& b, Id c) {
    for (const auto& [lo, hi] : k.structure.covers) {
      if (lo != c || !is_connector(k, hi, c)) continue;
      auto it = xset.find({c, hi});
      if (it == xset.end() || it->second.empty()) continue;
      const Chi& x = it->second;
      if (!at_superset(b, x) || at_superset(a, x)) continue;
      bool agree = true;
      for (Id c2 : k.structure.contexts) {
        if (c2 == c || !below.count({c, c2})) continue;       // only contexts above c
        if (c2 == hi || below.count({hi, c2})) continue;      // skip connector and above
        if (home_part(a, c2) != home_part(b, c2)) {
          agree = false;
          break;
        }
      }
      if (agree) return true;
    }
    return false;
  };
  auto dominates = [&](const Chi& a, const Chi& b) {
    bool better = false;
    for (Id c : k.structure.contexts) {
      if (locally_better(b, a, c)) return false;
      if (locally_better(a, b, c)) better = true;
    }
    return better;
  };
  for (const auto& j : just) {
    bool dominated = false;
    for (const auto& o : just)
      if (dominates(o.chi, j.chi)) {
        dominated = true;
        break;
      }
    if (!dominated) out.push_back(j);
  }
  return out;
}

/// CAS-model check: chi justified, interpretation is the least model, and no
/// justified chi' is globally preferred.
inline bool check_model(const SCKR& k, const CasModel& m, const Caps& caps = {}) {
  auto lm = least_model(k, m.chi);
  if (!lm.consistent) return false;
  if (!is_justified(k, m.chi, lm)) return false;
  Interp given = m.interp;
  for (Id c : k.structure.contexts) given[c];
  if (given != lm.interp) return false;
  auto pm = profile(k, m.chi);
  for (const auto& j : enumerate_justified(k, caps))
    if (profile_less(profile(k, j.chi), pm)) return false;
  return true;
}

inline bool holds_in(const Interp& m, const QueryAtom& q) {
  auto it = m.find(q.context);
  if (it == m.end()) return false;
  if (q.is_role) return it->second.triple.count({q.a, q.pred, q.b}) != 0;
  return it->second.inst.count({q.a, q.pred}) != 0;
}

enum class OracleVerdict { Entailed, NotEntailed, Inconsistent };

inline OracleVerdict entails(const SCKR& k, const QueryAtom& q, const Caps& caps = {},
                             PreferenceMode mode = PreferenceMode::GlobalProfile) {
  auto pref = preferred(k, mode, caps);
  if (pref.empty()) return OracleVerdict::Inconsistent;
  for (const auto& j : pref)
    if (!holds_in(j.interp, q)) return OracleVerdict::NotEntailed;
  return OracleVerdict::Entailed;
}

/// Boolean conjunctive query atom: each argument is either a fixed individual
/// or a variable named by a string.
struct BcqTerm {
  bool is_var = false;
  Id id = kNoId;
  std::string var;
};

struct BcqAtom {
  bool is_role = false;
  Id pred = kNoId;
  BcqTerm a, b;
  Id context = kNoId;
};

inline OracleVerdict entails_bcq(const SCKR& k, const std::vector<BcqAtom>& atoms,
                                 const Caps& caps = {}) {
  auto pref = preferred(k, PreferenceMode::GlobalProfile, caps);
  if (pref.empty()) return OracleVerdict::Inconsistent;
  std::vector<std::string> vars;
  for (const auto& at : atoms) {
    if (at.a.is_var) vars.push_back(at.a.var);
    if (at.is_role && at.b.is_var) vars.push_back(at.b.var);
  }
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  auto individuals = k.symbols.all_of(NameKind::Individual);
  for (const auto& j : pref) {
    std::map<std::string, Id> bind;
    std::function<bool(size_t)> assign = [&](size_t vi) -> bool {
      if (vi == vars.size()) {
        for (const auto& at : atoms) {
          QueryAtom q;
          q.is_role = at.is_role;
          q.pred = at.pred;
          q.a = at.a.is_var ? bind[at.a.var] : at.a.id;
          q.b = at.is_role ? (at.b.is_var ? bind[at.b.var] : at.b.id) : kNoId;
          q.context = at.context;
          if (!holds_in(j.interp, q)) return false;
        }
        return true;
      }
      for (Id a : individuals) {
        bind[vars[vi]] = a;
        if (assign(vi + 1)) return true;
      }
      return false;
    };
    if (!assign(0)) return OracleVerdict::NotEntailed;
  }
  return OracleVerdict::Entailed;
}

namespace oracle_detail {

struct EnvTest {
  Term t;
  bool is_rel = false;
  Id a = kNoId, p = kNoId, b = kNoId;
  Id c = kNoId;
};

/// All consequence-addition test environments active for the model: one per
/// defeasible axiom instance whose test premise holds at a context strictly
/// below the axiom's home.
inline std::vector<EnvTest> active_tests(const SCKR& k, const Materializer& mat,
                                         const Interp& m) {
  const auto& sy = k.symbols;
  std::vector<EnvTest> out;
  auto nm = [&](Id id) { return detail::name_term(sy, id); };
  auto add_lit = [&](Id x, Id z, Id c) {
    out.push_back({Term::func("nlit", {nm(x), nm(z), nm(c)}), false, x, z, kNoId, c});
  };
  auto add_rel = [&](Id x, Id r, Id y, Id c) {
    out.push_back({Term::func("nrel", {nm(x), nm(r), nm(y), nm(c)}), true, x, r, y, c});
  };
  for (const auto& [ax, home] : mat.axioms) {
    if (!ax.defeasible) continue;
    const Id* g = ax.arg.data();
    for (Id c : k.structure.contexts) {
      if (!mat.is_below(c, home)) continue;
      const auto& f = m.at(c);
      switch (ax.kind) {
        case AxiomKind::Inst:
          add_lit(g[1], g[0], c);
          break;
        case AxiomKind::Triple:
          add_rel(g[1], g[0], g[2], c);
          break;
        case AxiomKind::SubClass:
          for (const auto& [x, a] : f.inst)
            if (a == g[0]) add_lit(x, g[1], c);
          break;
        case AxiomKind::SubConj:
          for (const auto& [x, a] : f.inst)
            if (a == g[0] && f.inst.count({x, g[1]})) add_lit(x, g[2], c);
          break;
        case AxiomKind::SubEx:
          for (const auto& t : f.triple)
            if (t[1] == g[0] && f.inst.count({t[2], g[1]})) add_lit(t[0], g[2], c);
          break;
        case AxiomKind::SupEx:
          for (const auto& [x, a] : f.inst)
            if (a == g[0]) add_rel(x, g[1], g[2], c);
          break;
        case AxiomKind::SupForall:
          for (const auto& t : f.triple)
            if (t[1] == g[1] && f.inst.count({t[0], g[0]})) add_lit(t[2], g[2], c);
          break;
        case AxiomKind::SubRole:
          for (const auto& t : f.triple)
            if (t[1] == g[0]) add_rel(t[0], g[1], t[2], c);
          break;
        case AxiomKind::SubRChain:
          for (const auto& t1 : f.triple) {
            if (t1[1] != g[0]) continue;
            for (const auto& t2 : f.triple)
              if (t2[1] == g[1] && t2[0] == t1[2]) add_rel(t1[0], g[2], t2[2], c);
          }
          break;
        case AxiomKind::Inv:
          for (const auto& t : f.triple) {
            if (t[1] == g[0]) add_rel(t[0], g[1], t[2], c);
            if (t[1] == g[1]) add_rel(t[2], g[0], t[0], c);
          }
          break;
        default:
          break;  // clash-consequence shapes have no test environments
      }
    }
  }
  return out;
}

}  // namespace oracle_detail

/// Atom set of the answer set a justified CAS model corresponds to, as
/// rendered atom texts: the input facts, the derived literals at the main
/// environment, the override and preference atoms for chi, and the full
/// contents of every active test environment.
inline std::vector<std::string> herbrand(const SCKR& k, const JustifiedModel& jm) {
  oracle_detail::Materializer mat(k);
  const auto& sy = k.symbols;
  std::set<std::string> out;
  auto nm = [&](Id id) { return detail::name_term(sy, id); };
  Term main = Term::token("main");

  for (const auto& f : translate(k).facts) out.insert(to_text(f));

  auto emit_interp = [&](const Interp& m, const Term& env) {
    for (const auto& [c, f] : m) {
      for (const auto& [a, z] : f.inst)
        out.insert(to_text(ProgAtom{"instd", {nm(a), detail::concept_term(sy, z), nm(c), env}}));
      for (const auto& t : f.triple)
        out.insert(to_text(ProgAtom{"tripled", {nm(t[0]), nm(t[1]), nm(t[2]), nm(c), env}}));
    }
  };
  emit_interp(jm.interp, main);

  for (const auto& ca : jm.chi) {
    std::vector<Term> tuple, def_args;
    for (Id e : ca.tuple) tuple.push_back(nm(e));
    for (int i : def_arg_order(ca.kind)) def_args.push_back(nm(ca.args[static_cast<size_t>(i)]));
    out.insert(to_text(ovr_atom(ca.kind, tuple, def_args, nm(ca.home), nm(ca.at))));
    out.insert(to_text(ovrlevel_atom(ca.kind, tuple, def_args, nm(ca.home), nm(ca.at),
                                     Term::number(significance(k.structure, ca.home)))));
  }

  std::set<std::string> seen_envs;
  for (const auto& t : oracle_detail::active_tests(k, mat, jm.interp)) {
    std::string key = to_text(t.t);
    if (!seen_envs.insert(key).second) continue;
    out.insert("test(" + key + ")");
    Interp seed = jm.interp;
    if (t.is_rel)
      seed[t.c].triple.insert({t.a, t.p, t.b});
    else
      seed[t.c].inst.insert({t.a, t.p});
    auto [env_m, ok] = mat.closure(jm.chi, std::move(seed), false);
    emit_interp(env_m, t.t);
    out.insert(ok ? "test_fails(" + key + ")" : "unsat(" + key + ")");
  }
  return {out.begin(), out.end()};
}

/// c1 directly covers c and every downward covers-path from strictly above c1
/// to c passes through c1.
inline bool is_connector(const SCKR& k, Id c1, Id c) {
  bool direct = false;
  for (const auto& [lo, hi] : k.structure.covers)
    if (lo == c && hi == c1) direct = true;
  if (!direct) return false;
  auto below = strict_below(k.structure);
  // reachability down to c avoiding c1
  std::set<Id> reaches{c};
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [lo, hi] : k.structure.covers)
      if (hi != c1 && lo != c1 && reaches.count(lo) && !reaches.count(hi))
        changed = reaches.insert(hi).second || changed;
  }
  for (Id a : k.structure.contexts)
    if (below.count({c1, a}) && reaches.count(a)) return false;
  return true;
}

}  // namespace ckr
