#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "ckr/caps.hpp"
#include "ckr/ground.hpp"

namespace ckr {

using CostVector = std::map<long, long>;  // level -> violated weight

struct AnswerSet {
  std::vector<int> atoms;  // sorted atom ids
  CostVector cost;

  bool contains(int id) const {
    return std::binary_search(atoms.begin(), atoms.end(), id);
  }
};

/// v < w iff at the highest level where they differ, v is smaller.
inline bool cost_less(const CostVector& v, const CostVector& w) {
  std::vector<long> levels;
  for (auto& [l, _] : v) levels.push_back(l);
  for (auto& [l, _] : w) levels.push_back(l);
  std::sort(levels.begin(), levels.end(), std::greater<long>());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  for (long l : levels) {
    auto vi = v.find(l), wi = w.find(l);
    long a = vi == v.end() ? 0 : vi->second;
    long b = wi == w.end() ? 0 : wi->second;
    if (a != b) return a < b;
  }
  return false;
}

inline CostVector cost(const GroundProgram& g, const std::vector<int>& sorted_atoms) {
  auto in = [&](int id) { return std::binary_search(sorted_atoms.begin(), sorted_atoms.end(), id); };
  CostVector v;
  for (const auto& w : g.weak) {
    bool holds = true;
    for (int b : w.body)
      if (!in(b)) {
        holds = false;
        break;
      }
    if (holds) v[w.level] += w.weight;
  }
  return v;
}

namespace detail {

enum class TV : signed char { False = 0, True = 1, Open = 2 };

struct Search {
  const GroundProgram& g;
  const Caps& caps;
  size_t n_atoms;
  std::vector<int> branch;               // atoms branched on (negatively occurring, derivable)
  std::vector<int> branch_pos;           // atom id -> index in branch, or -1
  std::vector<char> derivable;           // appears as fact or head
  std::vector<AnswerSet> models;

  explicit Search(const GroundProgram& gp, const Caps& c) : g(gp), caps(c) {
    n_atoms = g.atoms.size();
    derivable.assign(n_atoms, 0);
    for (int f : g.facts) derivable[static_cast<size_t>(f)] = 1;
    for (const auto& r : g.rules)
      if (r.head >= 0) derivable[static_cast<size_t>(r.head)] = 1;
    branch_pos.assign(n_atoms, -1);
    for (const auto& r : g.rules)
      for (int a : r.neg)
        if (derivable[static_cast<size_t>(a)] && branch_pos[static_cast<size_t>(a)] < 0) {
          branch_pos[static_cast<size_t>(a)] = static_cast<int>(branch.size());
          branch.push_back(a);
        }
  }

  // least model treating a negative literal on atom a as satisfied when
  // assign[a]==False, or (optimistic=true) also when a is unassigned
  std::vector<char> least(const std::vector<TV>& assign, bool optimistic) const {
    std::vector<char> in(n_atoms, 0);
    for (int f : g.facts) in[static_cast<size_t>(f)] = 1;
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& r : g.rules) {
        if (r.head < 0 || in[static_cast<size_t>(r.head)]) continue;
        bool fire = true;
        for (int b : r.pos)
          if (!in[static_cast<size_t>(b)]) {
            fire = false;
            break;
          }
        if (!fire) continue;
        for (int b : r.neg) {
          TV t = value(assign, b);
          if (t == TV::True || (t == TV::Open && !optimistic)) {
            fire = false;
            break;
          }
        }
        if (fire) {
          in[static_cast<size_t>(r.head)] = 1;
          changed = true;
        }
      }
    }
    return in;
  }

  TV value(const std::vector<TV>& assign, int atom) const {
    if (!derivable[static_cast<size_t>(atom)]) return TV::False;
    int bp = branch_pos[static_cast<size_t>(atom)];
    if (bp < 0) return TV::Open;  // not branched; only happens for non-neg atoms
    return assign[static_cast<size_t>(bp)];
  }

  void dfs(std::vector<TV>& assign) {
    if (static_cast<long>(models.size()) > caps.max_models)
      throw CapExceeded{"model cap exceeded"};
    // propagate forced values to a fixpoint
    std::vector<std::pair<size_t, TV>> trail;
    for (;;) {
      auto low = least(assign, false);
      auto up = least(assign, true);
      bool contradiction = false, moved = false;
      for (size_t i = 0; i < branch.size(); ++i) {
        int a = branch[i];
        if (assign[i] == TV::True && !up[static_cast<size_t>(a)]) contradiction = true;
        if (assign[i] == TV::False && low[static_cast<size_t>(a)]) contradiction = true;
        if (assign[i] == TV::Open) {
          if (low[static_cast<size_t>(a)]) {
            assign[i] = TV::True;
            trail.push_back({i, TV::Open});
            moved = true;
          } else if (!up[static_cast<size_t>(a)]) {
            assign[i] = TV::False;
            trail.push_back({i, TV::Open});
            moved = true;
          }
        }
      }
      if (contradiction) {
        for (auto& [i, v] : trail) assign[i] = v;
        return;
      }
      if (!moved) break;
    }
    size_t next = branch.size();
    for (size_t i = 0; i < branch.size(); ++i)
      if (assign[i] == TV::Open) {
        next = i;
        break;
      }
    if (next == branch.size()) {
      leaf(assign);
    } else {
      for (TV v : {TV::False, TV::True}) {
        assign[next] = v;
        dfs(assign);
      }
      assign[next] = TV::Open;
    }
    for (auto& [i, v] : trail) assign[i] = v;
  }

  void leaf(const std::vector<TV>& assign) {
    auto m = least(assign, false);  // least model of the reduct
    // stability: branched atoms must come out exactly as assigned
    for (size_t i = 0; i < branch.size(); ++i)
      if ((assign[i] == TV::True) != static_cast<bool>(m[static_cast<size_t>(branch[i])])) return;
    // hard constraints
    for (const auto& r : g.rules) {
      if (r.head >= 0) continue;
      bool violated = true;
      for (int b : r.pos)
        if (!m[static_cast<size_t>(b)]) {
          violated = false;
          break;
        }
      if (violated)
        for (int b : r.neg)
          if (m[static_cast<size_t>(b)]) {
            violated = false;
            break;
          }
      if (violated) return;
    }
    AnswerSet s;
    for (size_t i = 0; i < n_atoms; ++i)
      if (m[i]) s.atoms.push_back(static_cast<int>(i));
    s.cost = cost(g, s.atoms);
    models.push_back(std::move(s));
  }
};

}  // namespace detail

/// Complete enumeration of stable models satisfying all hard constraints,
/// in canonical order (lexicographic over sorted atom-id vectors).
inline std::vector<AnswerSet> answer_sets(const GroundProgram& g, const Caps& caps = {}) {
  detail::Search search(g, caps);
  std::vector<detail::TV> assign(search.branch.size(), detail::TV::Open);
  search.dfs(assign);
  std::sort(search.models.begin(), search.models.end(),
            [](const AnswerSet& a, const AnswerSet& b) { return a.atoms < b.atoms; });
  search.models.erase(std::unique(search.models.begin(), search.models.end(),
                                  [](const AnswerSet& a, const AnswerSet& b) {
                                    return a.atoms == b.atoms;
                                  }),
                      search.models.end());
  return search.models;
}

inline std::vector<AnswerSet> optimal_answer_sets(const GroundProgram& g, const Caps& caps = {}) {
  auto all = answer_sets(g, caps);
  std::vector<AnswerSet> best;
  for (const auto& s : all) {
    bool dominated = false;
    for (const auto& o : all)
      if (cost_less(o.cost, s.cost)) {
        dominated = true;
        break;
      }
    if (!dominated) best.push_back(s);
  }
  return best;
}

enum class Entailment { Entailed, NotEntailed, Inconsistent };

inline Entailment cautious_entails(const GroundProgram& g, const ProgAtom& a,
                                   const Caps& caps = {}) {
  auto opt = optimal_answer_sets(g, caps);
  if (opt.empty()) return Entailment::Inconsistent;
  int id = g.find(a);
  for (const auto& s : opt)
    if (id < 0 || !s.contains(id)) return Entailment::NotEntailed;
  return Entailment::Entailed;
}

}  // namespace ckr
