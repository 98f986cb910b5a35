#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ckr/axioms.hpp"
#include "ckr/symbols.hpp"

namespace ckr {

/// Context hierarchy: cover edges (child, parent) with child more specific
/// than parent, and a level function that grows downward (more specific
/// contexts carry strictly larger levels).
struct ContextStructure {
  std::vector<Id> contexts;                 // declaration order
  std::vector<std::pair<Id, Id>> covers;    // (below, above)
  std::map<Id, int> level;

  bool declared(Id c) const {
    return std::find(contexts.begin(), contexts.end(), c) != contexts.end();
  }
};

struct StructuralError {
  std::string message;
};

/// Transitive closure of the covers relation; the pairs emitted as prec
/// facts. Fails on a cycle.
inline std::set<std::pair<Id, Id>> strict_below(const ContextStructure& s) {
  std::set<std::pair<Id, Id>> closure(s.covers.begin(), s.covers.end());
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::pair<Id, Id>> add;
    for (const auto& [a, b] : closure)
      for (const auto& [c, d] : closure)
        if (b == c && !closure.count({a, d})) add.emplace_back(a, d);
    for (auto& p : add) changed |= closure.insert(p).second;
  }
  for (const auto& [a, b] : closure)
    if (a == b) throw StructuralError{"covers relation has a cycle"};
  return closure;
}

/// Weak-constraint level for overriding axioms whose home context is c:
/// l(c) + 1.
inline int significance(const ContextStructure& s, Id c) {
  auto it = s.level.find(c);
  if (it == s.level.end() || !s.declared(c))
    throw StructuralError{"undeclared context"};
  return it->second + 1;
}

struct Module {
  Id context;
  std::vector<NormalAxiom> axioms;
};

struct SCKR {
  SymbolTable symbols;
  ContextStructure structure;
  std::vector<Module> modules;  // input order; at most one entry per context

  const std::vector<NormalAxiom>* module_of(Id c) const {
    for (const auto& m : modules)
      if (m.context == c) return &m.axioms;
    return nullptr;
  }

  std::vector<NormalAxiom>& module_for(Id c) {
    for (auto& m : modules)
      if (m.context == c) return m.axioms;
    modules.push_back({c, {}});
    return modules.back().axioms;
  }
};

struct QueryAtom {
  bool is_role = false;
  Id pred = kNoId;  // concept or role
  Id a = kNoId;
  Id b = kNoId;  // role queries only
  Id context = kNoId;
};

struct Diagnostic {
  std::string message;
};

/// Checks every kb-model invariant; empty result means the SCKR is valid.
inline std::vector<Diagnostic> validate(const SCKR& k) {
  std::vector<Diagnostic> out;
  const auto& st = k.structure;
  for (const auto& [c, lvl] : st.level)
    if (!st.declared(c)) out.push_back({"level given for undeclared context " + k.symbols.name(c)});
  for (Id c : st.contexts)
    if (!st.level.count(c)) out.push_back({"context " + k.symbols.name(c) + " has no level"});
  for (const auto& [lo, hi] : st.covers) {
    if (!st.declared(lo) || !st.declared(hi)) {
      out.push_back({"cover edge references undeclared context"});
      continue;
    }
    auto li = st.level.find(lo), hi_it = st.level.find(hi);
    if (li != st.level.end() && hi_it != st.level.end() && li->second <= hi_it->second)
      out.push_back({"level must increase downward on cover edge " + k.symbols.name(lo) +
                     " < " + k.symbols.name(hi)});
  }
  try {
    (void)strict_below(st);
  } catch (const StructuralError& e) {
    out.push_back({e.message});
  }
  std::set<Id> seen;
  for (const auto& m : k.modules) {
    if (!st.declared(m.context)) {
      out.push_back({"module for undeclared context " +
                     (m.context >= 0 && m.context < k.symbols.size() ? k.symbols.name(m.context)
                                                                     : std::string("?"))});
      continue;
    }
    if (!seen.insert(m.context).second)
      out.push_back({"duplicate module for context " + k.symbols.name(m.context)});
    for (const auto& ax : m.axioms) {
      for (int i = 0; i < axiom_arity(ax.kind); ++i) {
        Id a = ax.arg[static_cast<size_t>(i)];
        if (a == kNoId || a >= k.symbols.size()) {
          out.push_back({"axiom argument does not resolve in the symbol table"});
          continue;
        }
        NameKind want = arg_kind(ax.kind, i);
        NameKind got = k.symbols.kind(a);
        bool ok = got == want || (want == NameKind::Concept && k.symbols.is_builtin_concept(a));
        if (want == NameKind::Context && got == NameKind::Context && !st.declared(a)) {
          out.push_back({"eval axiom references undeclared context " + k.symbols.name(a)});
        } else if (!ok) {
          out.push_back({"name " + k.symbols.name(a) + " used as " + to_string(want) +
                         " but registered as " + to_string(got)});
        }
      }
      if (ax.defeasible && !defeasible_allowed(ax.kind)) {
        if (ax.kind == AxiomKind::EvalSubC || ax.kind == AxiomKind::EvalSubR)
          out.push_back({"eval axioms cannot be defeasible"});
        else
          out.push_back({"axiom shape cannot be defeasible"});
      }
    }
  }
  return out;
}

inline std::vector<Diagnostic> validate_query(const SCKR& k, const QueryAtom& q) {
  std::vector<Diagnostic> out;
  auto check = [&](Id id, NameKind want) {
    if (id == kNoId || id >= k.symbols.size())
      out.push_back({"query name does not resolve"});
    else if (k.symbols.kind(id) != want && !(want == NameKind::Concept && k.symbols.is_builtin_concept(id)))
      out.push_back({"query name " + k.symbols.name(id) + " is not a " + to_string(want)});
  };
  check(q.pred, q.is_role ? NameKind::Role : NameKind::Concept);
  check(q.a, NameKind::Individual);
  if (q.is_role) check(q.b, NameKind::Individual);
  if (q.context == kNoId || !k.structure.declared(q.context))
    out.push_back({"query target context is not declared"});
  return out;
}

/// True when levels step by exactly one on every cover edge.
inline bool is_ranked(const ContextStructure& s) {
  for (const auto& [lo, hi] : s.covers)
    if (s.level.at(lo) != s.level.at(hi) + 1) return false;
  return true;
}

}  // namespace ckr
