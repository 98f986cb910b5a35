#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "ckr/caps.hpp"
#include "ckr/program.hpp"

namespace ckr {

struct GroundRule {
  int head = -1;  // -1 = hard constraint
  std::vector<int> pos;
  std::vector<int> neg;
};

struct GroundWeak {
  std::vector<int> body;
  long weight = 1;
  long level = 0;
};

struct GroundProgram {
  std::vector<ProgAtom> atoms;  // id -> structured atom
  std::vector<std::string> texts;
  std::unordered_map<std::string, int> index;
  std::vector<int> facts;
  std::vector<GroundRule> rules;
  std::vector<GroundWeak> weak;

  int intern(const ProgAtom& a) {
    std::string t = to_text(a);
    auto it = index.find(t);
    if (it != index.end()) return it->second;
    int id = static_cast<int>(atoms.size());
    atoms.push_back(a);
    texts.push_back(t);
    index.emplace(std::move(t), id);
    return id;
  }
  int find(const ProgAtom& a) const {
    auto it = index.find(to_text(a));
    return it == index.end() ? -1 : it->second;
  }
};

namespace detail {

using Subst = std::map<std::string, Term>;

inline bool match_term(const Term& pat, const Term& val, Subst& s) {
  switch (pat.kind) {
    case Term::Var: {
      auto it = s.find(pat.text);
      if (it != s.end()) return it->second == val;
      s.emplace(pat.text, val);
      return true;
    }
    case Term::Const:
      return val.kind == Term::Const && val.text == pat.text && val.quoted == pat.quoted;
    case Term::Num:
      return val.kind == Term::Num && val.num == pat.num;
    case Term::Func: {
      if (val.kind != Term::Func || val.text != pat.text || val.args.size() != pat.args.size())
        return false;
      for (size_t i = 0; i < pat.args.size(); ++i)
        if (!match_term(pat.args[i], val.args[i], s)) return false;
      return true;
    }
  }
  return false;
}

inline Term substitute(const Term& t, const Subst& s) {
  switch (t.kind) {
    case Term::Var: {
      auto it = s.find(t.text);
      if (it == s.end()) throw std::logic_error("unsafe rule: unbound variable " + t.text);
      return it->second;
    }
    case Term::Func: {
      Term out = t;
      for (auto& a : out.args) a = substitute(a, s);
      return out;
    }
    default:
      return t;
  }
}

inline ProgAtom substitute(const ProgAtom& a, const Subst& s) {
  ProgAtom out;
  out.pred = a.pred;
  out.args.reserve(a.args.size());
  for (const auto& t : a.args) out.args.push_back(substitute(t, s));
  return out;
}

}  // namespace detail

/// Bottom-up grounding: rule instances are emitted only when the positive
/// body is derivable in the monotone over-approximation that ignores
/// negation. Negative literals over atoms that never become derivable are
/// dropped (they are vacuously true).
inline GroundProgram ground(const Program& p, const Caps& caps = {}) {
  GroundProgram g;
  std::unordered_map<std::string, std::vector<int>> by_pred;  // derivable atoms only
  std::vector<char> listed;  // atom id -> present in by_pred

  // registers the atom as derivable even when it was interned earlier as a
  // body literal only
  auto add_atom = [&](const ProgAtom& a) {
    int id = g.intern(a);
    if (static_cast<long>(g.atoms.size()) > caps.max_ground_atoms)
      throw CapExceeded{"ground atom cap exceeded"};
    if (static_cast<size_t>(id) >= listed.size()) listed.resize(g.atoms.size(), 0);
    if (!listed[static_cast<size_t>(id)]) {
      listed[static_cast<size_t>(id)] = 1;
      by_pred[a.pred].push_back(id);
    }
    return id;
  };

  for (const auto& f : p.facts) {
    if (!f.is_ground()) throw std::logic_error("non-ground fact");
    g.facts.push_back(add_atom(f));
  }

  std::unordered_set<std::string> emitted;  // dedup of ground rule instances
  std::vector<std::pair<Rule, bool>> pending;  // bool unused

  // join the positive body left to right against currently derived atoms
  auto for_each_match = [&](const std::vector<ProgAtom>& pos, auto&& yield) {
    detail::Subst s;
    std::function<void(size_t, detail::Subst&)> rec = [&](size_t i, detail::Subst& sub) {
      if (i == pos.size()) {
        yield(sub);
        return;
      }
      auto it = by_pred.find(pos[i].pred);
      if (it == by_pred.end()) return;
      // iterate over a snapshot by index; atoms appended during iteration are
      // picked up in later passes of the outer fixpoint
      const auto& ids = it->second;
      size_t n = ids.size();
      for (size_t j = 0; j < n; ++j) {
        const ProgAtom& cand = g.atoms[static_cast<size_t>(ids[j])];
        if (cand.args.size() != pos[i].args.size()) continue;
        detail::Subst local = sub;
        bool ok = true;
        for (size_t a = 0; a < pos[i].args.size() && ok; ++a)
          ok = detail::match_term(pos[i].args[a], cand.args[a], local);
        if (ok) rec(i + 1, local);
      }
    };
    rec(0, s);
  };

  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& r : p.rules) {
      for_each_match(r.pos, [&](detail::Subst& sub) {
        GroundRule gr;
        std::string key;
        if (r.head) {
          ProgAtom h = detail::substitute(*r.head, sub);
          gr.head = add_atom(h);
        }
        for (const auto& a : r.pos) gr.pos.push_back(g.intern(detail::substitute(a, sub)));
        for (const auto& a : r.neg) gr.neg.push_back(g.intern(detail::substitute(a, sub)));
        key = std::to_string(gr.head);
        for (int i : gr.pos) key += "," + std::to_string(i);
        key += ";";
        for (int i : gr.neg) key += "," + std::to_string(i);
        if (emitted.insert(std::move(key)).second) {
          // over-approximation: treat the head as derivable
          g.rules.push_back(std::move(gr));
          changed = true;
        }
      });
    }
  }

  for (const auto& w : p.weak) {
    for_each_match(w.body, [&](detail::Subst& sub) {
      GroundWeak gw;
      for (const auto& a : w.body) gw.body.push_back(g.intern(detail::substitute(a, sub)));
      gw.weight = w.weight;
      Term lvl = detail::substitute(w.level, sub);
      if (lvl.kind != Term::Num) throw std::logic_error("weak-constraint level is not an integer");
      gw.level = lvl.num;
      g.weak.push_back(std::move(gw));
    });
  }
  // dedupe weak-constraint instances
  {
    std::set<std::pair<std::vector<int>, std::pair<long, long>>> seen;
    std::vector<GroundWeak> uniq;
    for (auto& w : g.weak) {
      auto body = w.body;
      std::sort(body.begin(), body.end());
      if (seen.insert({body, {w.weight, w.level}}).second) uniq.push_back(std::move(w));
    }
    g.weak = std::move(uniq);
  }
  return g;
}

}  // namespace ckr
