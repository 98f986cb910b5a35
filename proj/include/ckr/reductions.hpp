#pragma once

#include <array>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ckr/caps.hpp"
#include "ckr/sckr.hpp"

namespace ckr {

/// 3CNF with duplicate literals allowed; literals are signed 1-based
/// variable indices. Monotone means every clause is uniformly signed.
struct CnfInstance {
  int n = 0;
  std::vector<std::array<int, 3>> clauses;

  bool monotone() const {
    for (const auto& cl : clauses) {
      bool pos = cl[0] > 0;
      for (int lit : cl)
        if ((lit > 0) != pos) return false;
    }
    return true;
  }

  bool literals_in_range() const {
    for (const auto& cl : clauses)
      for (int lit : cl) {
        int v = lit > 0 ? lit : -lit;
        if (v < 1 || v > n) return false;
      }
    return true;
  }

  bool eval(const std::vector<bool>& assign) const {
    for (const auto& cl : clauses) {
      bool sat = false;
      for (int lit : cl) {
        int v = (lit > 0 ? lit : -lit) - 1;
        if (assign[static_cast<size_t>(v)] == (lit > 0)) sat = true;
      }
      if (!sat) return false;
    }
    return true;
  }
};

struct CnfSyntaxError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// "p cnf n m" header followed by clause lines ending in 0; clauses shorter
/// than three literals are padded by duplicating the last literal.
inline CnfInstance read_dimacs(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  CnfInstance e;
  bool header = false;
  long m = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream ls(line);
    if (!header) {
      std::string p, cnf;
      if (!(ls >> p >> cnf >> e.n >> m) || p != "p" || cnf != "cnf")
        throw CnfSyntaxError("expected 'p cnf <vars> <clauses>' header");
      header = true;
      continue;
    }
    std::vector<int> lits;
    int lit;
    while (ls >> lit) {
      if (lit == 0) break;
      lits.push_back(lit);
    }
    if (lits.empty()) continue;
    if (lits.size() > 3) throw CnfSyntaxError("clause has more than three literals");
    while (lits.size() < 3) lits.push_back(lits.back());
    e.clauses.push_back({lits[0], lits[1], lits[2]});
  }
  if (!header) throw CnfSyntaxError("missing DIMACS header");
  if (static_cast<long>(e.clauses.size()) != m)
    throw CnfSyntaxError("clause count does not match header");
  if (!e.literals_in_range()) throw CnfSyntaxError("literal out of range");
  return e;
}

/// Maximum satisfying assignment with x1 the most significant bit, or
/// nullopt when unsatisfiable.
inline std::optional<std::vector<bool>> lexmax_assignment(const CnfInstance& e,
                                                          const Caps& caps = {}) {
  if (e.n > caps.max_sat_vars) throw CapExceeded{"variable cap exceeded"};
  for (long mask = (1L << e.n) - 1; mask >= 0; --mask) {
    std::vector<bool> a(static_cast<size_t>(e.n));
    for (int i = 0; i < e.n; ++i) a[static_cast<size_t>(i)] = (mask >> (e.n - 1 - i)) & 1;
    if (e.eval(a)) return a;
  }
  return std::nullopt;
}

inline long satisfying_count(const CnfInstance& e, const Caps& caps = {}) {
  if (e.n > caps.max_sat_vars) throw CapExceeded{"variable cap exceeded"};
  long count = 0;
  for (long mask = 0; mask < (1L << e.n); ++mask) {
    std::vector<bool> a(static_cast<size_t>(e.n));
    for (int i = 0; i < e.n; ++i) a[static_cast<size_t>(i)] = (mask >> i) & 1;
    if (e.eval(a)) ++count;
  }
  return count;
}

struct GeneratedInstance {
  SCKR sckr;
  std::vector<QueryAtom> queries;
  std::vector<std::optional<bool>> expected;  // empty slot = inconsistent case
};

struct ReductionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace red_detail {

inline Id concept_id(SymbolTable& sy, const std::string& name) {
  Id id = sy.intern(name, NameKind::Concept);
  if (id == kNoId) throw ReductionError("name kind clash for " + name);
  return id;
}
inline Id role_id(SymbolTable& sy, const std::string& name) {
  Id id = sy.intern(name, NameKind::Role);
  if (id == kNoId) throw ReductionError("name kind clash for " + name);
  return id;
}
inline Id indiv_id(SymbolTable& sy, const std::string& name) {
  Id id = sy.intern(name, NameKind::Individual);
  if (id == kNoId) throw ReductionError("name kind clash for " + name);
  return id;
}
inline Id context_id(SymbolTable& sy, const std::string& name) {
  Id id = sy.intern(name, NameKind::Context);
  if (id == kNoId) throw ReductionError("name kind clash for " + name);
  return id;
}

inline NormalAxiom ax2(AxiomKind k, Id a, Id b, bool def = false) {
  return NormalAxiom{k, def, {a, b, kNoId}};
}
inline NormalAxiom ax3(AxiomKind k, Id a, Id b, Id c, bool def = false) {
  return NormalAxiom{k, def, {a, b, c}};
}

}  // namespace red_detail

/// Splits an inclusion "conjunction over j of (exists roles[j].(left and
/// right)) is included in Bot" into normal-form axioms with deterministic
/// fresh concept names.
inline std::vector<NormalAxiom> normalize_to_rl(SymbolTable& sy, const std::vector<Id>& roles,
                                                Id left, Id right) {
  using namespace red_detail;
  if (roles.empty() || roles.size() > 3) throw ReductionError("expected one to three conjuncts");
  std::vector<NormalAxiom> out;
  Id cap = concept_id(sy, sy.name(left) + "_and_" + sy.name(right));
  out.push_back(ax3(AxiomKind::SubConj, left, right, cap));
  if (roles.size() == 1) {
    out.push_back(ax3(AxiomKind::SubEx, roles[0], cap, sy.bot()));
    return out;
  }
  std::vector<Id> ex;
  for (Id r : roles) {
    Id e = concept_id(sy, "some_" + sy.name(r) + "_" + sy.name(cap));
    out.push_back(ax3(AxiomKind::SubEx, r, cap, e));
    ex.push_back(e);
  }
  Id acc = ex[0];
  for (size_t j = 1; j + 1 < ex.size(); ++j) {
    Id next = concept_id(sy, sy.name(acc) + "_and_" + sy.name(ex[j]));
    out.push_back(ax3(AxiomKind::SubConj, acc, ex[j], next));
    acc = next;
  }
  out.push_back(ax3(AxiomKind::SubConj, acc, ex.back(), sy.bot()));
  return out;
}

namespace red_detail {

/// The shared c0 inclusion block of the three constructions: T and F are
/// contradictory, both imply "assigned", and no clause constant may have all
/// three of its literal successors falsified.
inline void clause_gadget(SymbolTable& sy, std::vector<NormalAxiom>& m, Id t, Id f, Id a,
                          const std::vector<Id>& np, const std::vector<Id>& nn) {
  m.push_back(ax3(AxiomKind::SubConj, t, f, sy.bot()));
  m.push_back(ax2(AxiomKind::SubClass, t, a));
  m.push_back(ax2(AxiomKind::SubClass, f, a));
  for (auto& axm : normalize_to_rl(sy, nn, t, a)) m.push_back(axm);
  for (auto& axm : normalize_to_rl(sy, np, f, a)) m.push_back(axm);
}

inline void clause_facts(std::vector<NormalAxiom>& m, const CnfInstance& e,
                         const std::vector<Id>& clause_ids, const std::vector<Id>& var_ids,
                         const std::vector<Id>& proles, const std::vector<Id>& nroles) {
  for (size_t i = 0; i < e.clauses.size(); ++i) {
    bool pos = e.clauses[i][0] > 0;
    for (int j = 0; j < 3; ++j) {
      int lit = e.clauses[i][static_cast<size_t>(j)];
      Id var = var_ids[static_cast<size_t>((lit > 0 ? lit : -lit) - 1)];
      m.push_back(ax3(AxiomKind::Triple, (pos ? proles : nroles)[static_cast<size_t>(j)],
                      clause_ids[i], var));
    }
  }
}

}  // namespace red_detail

/// Lexicographic-maximum-SAT construction: the chain of contexts makes the
/// profile order prefer assignments that set earlier variables true, so the
/// optimal models realize exactly the lexmax satisfying assignment. The
/// query asks the truth of the last variable at the bottom context.
inline GeneratedInstance gen_lexmax_sat(const CnfInstance& e, const Caps& caps = {}) {
  using namespace red_detail;
  if (!e.monotone() || !e.literals_in_range()) throw ReductionError("expected monotone 3CNF");
  GeneratedInstance out;
  SCKR& k = out.sckr;
  SymbolTable& sy = k.symbols;
  int n = e.n;

  std::vector<Id> ctx;
  for (int i = 0; i <= n + 1; ++i) {
    Id c = context_id(sy, "c" + std::to_string(i));
    ctx.push_back(c);
    k.structure.contexts.push_back(c);
    k.structure.level[c] = n + 1 - i;
    if (i > 0) k.structure.covers.emplace_back(ctx[static_cast<size_t>(i) - 1], c);
  }

  std::vector<Id> v, x;
  for (int i = 1; i <= n; ++i) {
    v.push_back(concept_id(sy, "V" + std::to_string(i)));
    x.push_back(indiv_id(sy, "x" + std::to_string(i)));
  }
  Id t = concept_id(sy, "T"), f = concept_id(sy, "F"), a = concept_id(sy, "A");
  std::vector<Id> proles, nroles;
  for (int j = 1; j <= 3; ++j) {
    proles.push_back(role_id(sy, "P" + std::to_string(j)));
    nroles.push_back(role_id(sy, "N" + std::to_string(j)));
  }
  std::vector<Id> cl;
  for (size_t i = 1; i <= e.clauses.size(); ++i) cl.push_back(indiv_id(sy, "d" + std::to_string(i)));

  auto& top_mod = k.module_for(ctx.back());
  for (int i = 0; i < n; ++i)
    top_mod.push_back(ax2(AxiomKind::SubClass, v[static_cast<size_t>(i)], f, true));
  for (int i = 1; i <= n; ++i)
    k.module_for(ctx[static_cast<size_t>(i)])
        .push_back(ax2(AxiomKind::SubClass, v[static_cast<size_t>(i) - 1], t, true));

  auto& m0 = k.module_for(ctx[0]);
  clause_gadget(sy, m0, t, f, a, proles, nroles);
  for (int h = 0; h < n; ++h)
    m0.push_back(ax2(AxiomKind::Inst, v[static_cast<size_t>(h)], x[static_cast<size_t>(h)]));
  clause_facts(m0, e, cl, x, proles, nroles);

  out.queries.push_back(QueryAtom{false, t, x.back(), kNoId, ctx[0]});
  auto lm = lexmax_assignment(e, caps);
  out.expected.push_back(lm ? std::optional<bool>(lm->back()) : std::nullopt);
  return out;
}

/// A qualifying instance is one with a satisfying assignment that does not
/// set every atom false (under the preprocessing, one setting its first atom
/// true); the decision is whether an odd number of the instances qualify.
inline bool odd_sat_qualifies(const CnfInstance& e, const Caps& caps = {}) {
  if (e.n > caps.max_sat_vars) throw CapExceeded{"variable cap exceeded"};
  for (long mask = 1; mask < (1L << e.n); ++mask) {
    std::vector<bool> a(static_cast<size_t>(e.n));
    for (int i = 0; i < e.n; ++i) a[static_cast<size_t>(i)] = (mask >> i) & 1;
    if (e.eval(a)) return true;
  }
  return false;
}

inline bool odd_sat_value(const std::vector<CnfInstance>& es, const Caps& caps = {}) {
  int count = 0;
  for (const auto& e : es)
    if (odd_sat_qualifies(e, caps)) ++count;
  return count % 2 == 1;
}

/// Three-context parity construction: the profile preference sets the first
/// atom of each qualifying instance true, and the chain role facts between
/// consecutive instances expose the parity of the qualifying count as the
/// derivability of O(a) at the bottom context.
inline GeneratedInstance gen_odd_sat(const std::vector<CnfInstance>& es, const Caps& caps = {}) {
  using namespace red_detail;
  if (es.empty() || es.size() % 2 != 0) throw ReductionError("expected an even instance count");
  bool prev = true;
  for (const auto& e : es) {
    if (!e.monotone() || !e.literals_in_range()) throw ReductionError("expected monotone 3CNF");
    if (satisfying_count(e, caps) == 0) throw ReductionError("each instance must be satisfiable");
    for (long mask = 1; mask < (1L << e.n); ++mask) {
      std::vector<bool> a(static_cast<size_t>(e.n));
      for (int i = 0; i < e.n; ++i) a[static_cast<size_t>(i)] = (mask >> i) & 1;
      if (e.eval(a) && !a[0])
        throw ReductionError("satisfying assignment neither all-false nor first-atom-true");
    }
    bool q = odd_sat_qualifies(e, caps);
    if (q && !prev) throw ReductionError("qualifying instances must form a prefix");
    prev = q;
  }

  GeneratedInstance out;
  SCKR& k = out.sckr;
  SymbolTable& sy = k.symbols;
  std::vector<Id> ctx;
  for (int i = 0; i <= 2; ++i) {
    Id c = context_id(sy, "c" + std::to_string(i));
    ctx.push_back(c);
    k.structure.contexts.push_back(c);
    k.structure.level[c] = 2 - i;
    if (i > 0) k.structure.covers.emplace_back(ctx[static_cast<size_t>(i) - 1], c);
  }

  Id v = concept_id(sy, "V"), t = concept_id(sy, "T"), f = concept_id(sy, "F");
  Id a = concept_id(sy, "A"), y = concept_id(sy, "Y"), o = concept_id(sy, "O");
  std::vector<Id> proles, nroles;
  for (int j = 1; j <= 3; ++j) {
    proles.push_back(role_id(sy, "P" + std::to_string(j)));
    nroles.push_back(role_id(sy, "N" + std::to_string(j)));
  }
  Id crole = role_id(sy, "C"), rrole = role_id(sy, "R");
  Id anchor = indiv_id(sy, "a");

  k.module_for(ctx[2]).push_back(ax2(AxiomKind::SubClass, v, f, true));
  k.module_for(ctx[1]).push_back(ax2(AxiomKind::SubClass, v, t, true));

  auto& m0 = k.module_for(ctx[0]);
  clause_gadget(sy, m0, t, f, a, proles, nroles);
  // T and exists C.F imply Y; an R-successor in Y implies O
  Id ecf = concept_id(sy, "some_C_F");
  m0.push_back(ax3(AxiomKind::SubEx, crole, f, ecf));
  m0.push_back(ax3(AxiomKind::SubConj, t, ecf, y));
  m0.push_back(ax3(AxiomKind::SubEx, rrole, y, o));

  std::vector<std::vector<Id>> vars;
  for (size_t kk = 0; kk < es.size(); ++kk) {
    std::vector<Id> xs, cls;
    for (int j = 1; j <= es[kk].n; ++j)
      xs.push_back(indiv_id(sy, "x" + std::to_string(kk + 1) + "_" + std::to_string(j)));
    for (size_t i = 1; i <= es[kk].clauses.size(); ++i)
      cls.push_back(indiv_id(sy, "d" + std::to_string(kk + 1) + "_" + std::to_string(i)));
    for (Id xi : xs) m0.push_back(ax2(AxiomKind::Inst, v, xi));
    clause_facts(m0, es[kk], cls, xs, proles, nroles);
    vars.push_back(std::move(xs));
  }
  for (size_t kk = 0; kk + 1 < es.size(); kk += 2) {
    m0.push_back(ax3(AxiomKind::Triple, crole, vars[kk][0], vars[kk + 1][0]));
    m0.push_back(ax3(AxiomKind::Triple, rrole, anchor, vars[kk][0]));
  }

  out.queries.push_back(QueryAtom{false, o, anchor, kNoId, ctx[0]});
  out.expected.push_back(odd_sat_value(es, caps));
  return out;
}

/// Layout of a QBF instance over X, X' and Y': variables 1..nx are X,
/// nx+1..2nx are X' (coupled to be the complement of X), and 2nx+1..2nx+ny
/// are Y'. mu assigns Y' only; the couplings fix X' from X.
struct QbfInput {
  CnfInstance e;
  int nx = 0;
  int ny = 0;
  std::vector<bool> mu;
};

namespace red_detail {

inline std::vector<bool> qbf_assignment(const QbfInput& q, long sigma,
                                        const std::vector<bool>& nu) {
  std::vector<bool> a(static_cast<size_t>(q.e.n));
  for (int i = 0; i < q.nx; ++i) {
    bool xi = (sigma >> i) & 1;
    a[static_cast<size_t>(i)] = xi;
    a[static_cast<size_t>(q.nx + i)] = !xi;
  }
  for (int j = 0; j < q.ny; ++j) a[static_cast<size_t>(2 * q.nx + j)] = nu[static_cast<size_t>(j)];
  return a;
}

}  // namespace red_detail

/// For every X assignment, some Y' assignment different from mu must satisfy
/// E (with X' coupled to the complement of X).
inline bool qbf_value(const QbfInput& q, const Caps& caps = {}) {
  if (q.nx + q.ny > caps.max_sat_vars) throw CapExceeded{"variable cap exceeded"};
  for (long sigma = 0; sigma < (1L << q.nx); ++sigma) {
    bool found = false;
    for (long m = 0; m < (1L << q.ny) && !found; ++m) {
      std::vector<bool> nu(static_cast<size_t>(q.ny));
      bool differs = false;
      for (int j = 0; j < q.ny; ++j) {
        nu[static_cast<size_t>(j)] = (m >> j) & 1;
        if (nu[static_cast<size_t>(j)] != q.mu[static_cast<size_t>(j)]) differs = true;
      }
      if (differs && q.e.eval(red_detail::qbf_assignment(q, sigma, nu))) found = true;
    }
    if (!found) return false;
  }
  return true;
}

/// Verifies the construction's side conditions: mu satisfies E for every X,
/// the coupling clauses are present, and every satisfying alternative to mu
/// flips the first Y' variable (the designated flip variable).
inline void check_qbf_preconditions(const QbfInput& q, const Caps& caps = {}) {
  if (q.e.n != 2 * q.nx + q.ny || static_cast<int>(q.mu.size()) != q.ny)
    throw ReductionError("inconsistent QBF layout");
  if (!q.e.monotone() || !q.e.literals_in_range()) throw ReductionError("expected monotone 3CNF");
  if (q.nx + q.ny > caps.max_sat_vars) throw CapExceeded{"variable cap exceeded"};
  for (int i = 1; i <= q.nx; ++i) {
    bool has_pos = false, has_neg = false;
    for (const auto& cl : q.e.clauses) {
      std::array<int, 3> p{i, q.nx + i, q.nx + i}, n{-i, -(q.nx + i), -(q.nx + i)};
      if (cl == p) has_pos = true;
      if (cl == n) has_neg = true;
    }
    if (!has_pos || !has_neg) throw ReductionError("missing coupling clauses");
  }
  for (long sigma = 0; sigma < (1L << q.nx); ++sigma) {
    if (!q.e.eval(red_detail::qbf_assignment(q, sigma, q.mu)))
      throw ReductionError("mu does not satisfy E for every X assignment");
    for (long m = 0; m < (1L << q.ny); ++m) {
      std::vector<bool> nu(static_cast<size_t>(q.ny));
      bool differs = false;
      for (int j = 0; j < q.ny; ++j) {
        nu[static_cast<size_t>(j)] = (m >> j) & 1;
        if (nu[static_cast<size_t>(j)] != q.mu[static_cast<size_t>(j)]) differs = true;
      }
      if (differs && q.e.eval(red_detail::qbf_assignment(q, sigma, nu)) && nu[0] == q.mu[0])
        throw ReductionError("an alternative to mu keeps the designated flip variable");
    }
  }
}

/// Ranked three-level construction for induced-local preference. Each
/// variable of X and X' gets its own two-context chain choosing T or F; the
/// Y' variables share one chain whose lower context states the mu-opposed
/// defaults, so the mu model does the worst possible overriding at that
/// connector. The query asks the flipped value of the first Y' variable.
inline GeneratedInstance gen_qbf(const QbfInput& q, const Caps& caps = {}) {
  using namespace red_detail;
  check_qbf_preconditions(q, caps);
  GeneratedInstance out;
  SCKR& k = out.sckr;
  SymbolTable& sy = k.symbols;

  Id c0 = context_id(sy, "c0");
  k.structure.contexts.push_back(c0);
  k.structure.level[c0] = 2;
  auto chain = [&](const std::string& name) {
    Id lo = context_id(sy, "c_" + name);
    Id hi = context_id(sy, "c_not_" + name);
    for (Id c : {lo, hi}) k.structure.contexts.push_back(c);
    k.structure.level[lo] = 1;
    k.structure.level[hi] = 0;
    k.structure.covers.emplace_back(c0, lo);
    k.structure.covers.emplace_back(lo, hi);
    return std::make_pair(lo, hi);
  };

  Id t = concept_id(sy, "T"), f = concept_id(sy, "F"), a = concept_id(sy, "A");
  std::vector<Id> proles, nroles;
  for (int j = 1; j <= 3; ++j) {
    proles.push_back(role_id(sy, "P" + std::to_string(j)));
    nroles.push_back(role_id(sy, "N" + std::to_string(j)));
  }

  std::vector<Id> vcon, vind;
  auto var_name = [&](int idx) {  // 0-based over X, X', Y'
    if (idx < q.nx) return "x" + std::to_string(idx + 1);
    if (idx < 2 * q.nx) return "xp" + std::to_string(idx - q.nx + 1);
    return "y" + std::to_string(idx - 2 * q.nx + 1);
  };
  for (int i = 0; i < q.e.n; ++i) {
    vcon.push_back(concept_id(sy, "V" + std::to_string(i + 1)));
    vind.push_back(indiv_id(sy, var_name(i)));
  }

  for (int i = 0; i < 2 * q.nx; ++i) {
    auto [lo, hi] = chain(var_name(i));
    k.module_for(lo).push_back(ax2(AxiomKind::SubClass, vcon[static_cast<size_t>(i)], t, true));
    k.module_for(hi).push_back(ax2(AxiomKind::SubClass, vcon[static_cast<size_t>(i)], f, true));
  }
  auto [cy, cny] = chain("Yp");
  for (int j = 0; j < q.ny; ++j) {
    Id vc = vcon[static_cast<size_t>(2 * q.nx + j)];
    bool mj = q.mu[static_cast<size_t>(j)];
    k.module_for(cy).push_back(ax2(AxiomKind::SubClass, vc, mj ? f : t, true));
    k.module_for(cny).push_back(ax2(AxiomKind::SubClass, vc, mj ? t : f, true));
  }

  auto& m0 = k.module_for(c0);
  clause_gadget(sy, m0, t, f, a, proles, nroles);
  for (int i = 0; i < q.e.n; ++i)
    m0.push_back(ax2(AxiomKind::Inst, vcon[static_cast<size_t>(i)], vind[static_cast<size_t>(i)]));
  std::vector<Id> cl;
  for (size_t i = 1; i <= q.e.clauses.size(); ++i)
    cl.push_back(indiv_id(sy, "d" + std::to_string(i)));
  clause_facts(m0, q.e, cl, vind, proles, nroles);

  Id flip_ind = vind[static_cast<size_t>(2 * q.nx)];
  Id flip_concept = q.mu[0] ? f : t;
  out.queries.push_back(QueryAtom{false, flip_concept, flip_ind, kNoId, c0});
  out.expected.push_back(qbf_value(q, caps));
  return out;
}

inline CnfInstance random_monotone_cnf(std::mt19937& rng, int n, int m) {
  CnfInstance e;
  e.n = n;
  std::uniform_int_distribution<int> vd(1, n), sd(0, 1);
  for (int i = 0; i < m; ++i) {
    int sign = sd(rng) ? 1 : -1;
    e.clauses.push_back({sign * vd(rng), sign * vd(rng), sign * vd(rng)});
  }
  return e;
}

/// Rejection-samples an instance list acceptable to gen_odd_sat.
inline std::vector<CnfInstance> random_odd_sat_input(std::mt19937& rng, int count, int max_vars,
                                                     const Caps& caps = {}) {
  std::uniform_int_distribution<int> nd(1, max_vars), md(1, 3);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    std::vector<CnfInstance> es;
    for (int k = 0; k < count; ++k) es.push_back(random_monotone_cnf(rng, nd(rng), md(rng)));
    try {
      (void)gen_odd_sat(es, caps);
      return es;
    } catch (const ReductionError&) {
    }
  }
  throw ReductionError("could not sample an acceptable instance list");
}

/// Rejection-samples an input acceptable to gen_qbf.
inline QbfInput random_qbf_input(std::mt19937& rng, int nx, int ny, const Caps& caps = {}) {
  std::uniform_int_distribution<int> sd(0, 1), cd(0, 2);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    QbfInput q;
    q.nx = nx;
    q.ny = ny;
    q.e.n = 2 * nx + ny;
    for (int j = 0; j < ny; ++j) q.mu.push_back(sd(rng));
    for (int i = 1; i <= nx; ++i) {
      q.e.clauses.push_back({i, nx + i, nx + i});
      q.e.clauses.push_back({-i, -(nx + i), -(nx + i)});
    }
    std::uniform_int_distribution<int> vd(1, q.e.n);
    int extra = cd(rng);
    for (int i = 0; i < extra; ++i) {
      int sign = sd(rng) ? 1 : -1;
      q.e.clauses.push_back({sign * vd(rng), sign * vd(rng), sign * vd(rng)});
    }
    try {
      check_qbf_preconditions(q, caps);
      return q;
    } catch (const ReductionError&) {
    }
  }
  throw ReductionError("could not sample an acceptable QBF input");
}

}  // namespace ckr
