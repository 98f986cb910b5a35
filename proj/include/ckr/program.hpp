#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace ckr {

/// Terms of the target rule language. User-level names carry quoted=true and
/// are emitted as double-quoted constants; reserved tokens (main, top, bot,
/// the shape tags) are plain constants. Environment terms are one-level
/// function terms nlit(...) / nrel(...).
struct Term {
  enum Kind : std::uint8_t { Var, Const, Num, Func } kind = Const;
  std::string text;  // variable name, constant spelling, or function name
  bool quoted = false;
  long num = 0;
  std::vector<Term> args;

  bool operator==(const Term& o) const {
    return kind == o.kind && text == o.text && quoted == o.quoted && num == o.num &&
           args == o.args;
  }
  bool is_ground() const {
    if (kind == Var) return false;
    for (const auto& a : args)
      if (!a.is_ground()) return false;
    return true;
  }

  static Term var(std::string n) {
    Term t;
    t.kind = Var;
    t.text = std::move(n);
    return t;
  }
  static Term name(std::string n) {  // quoted user constant
    Term t;
    t.kind = Const;
    t.text = std::move(n);
    t.quoted = true;
    return t;
  }
  static Term token(std::string n) {  // reserved plain constant
    Term t;
    t.kind = Const;
    t.text = std::move(n);
    return t;
  }
  static Term number(long v) {
    Term t;
    t.kind = Num;
    t.num = v;
    return t;
  }
  static Term func(std::string f, std::vector<Term> a) {
    Term t;
    t.kind = Func;
    t.text = std::move(f);
    t.args = std::move(a);
    return t;
  }
};

struct ProgAtom {
  std::string pred;
  std::vector<Term> args;

  bool operator==(const ProgAtom&) const = default;
  bool is_ground() const {
    for (const auto& a : args)
      if (!a.is_ground()) return false;
    return true;
  }
};

struct Rule {
  std::optional<ProgAtom> head;  // absent = hard constraint
  std::vector<ProgAtom> pos;
  std::vector<ProgAtom> neg;
};

struct WeakConstraint {
  std::vector<ProgAtom> body;
  long weight = 1;
  Term level;  // variable bound in body, or integer constant
};

struct Program {
  std::vector<ProgAtom> facts;
  std::vector<Rule> rules;
  std::vector<WeakConstraint> weak;
};

inline void append_term(std::ostream& os, const Term& t) {
  switch (t.kind) {
    case Term::Var:
      os << t.text;
      break;
    case Term::Const:
      if (t.quoted)
        os << '"' << t.text << '"';
      else
        os << t.text;
      break;
    case Term::Num:
      os << t.num;
      break;
    case Term::Func:
      os << t.text << '(';
      for (size_t i = 0; i < t.args.size(); ++i) {
        if (i) os << ',';
        append_term(os, t.args[i]);
      }
      os << ')';
      break;
  }
}

inline std::string to_text(const Term& t) {
  std::ostringstream os;
  append_term(os, t);
  return os.str();
}

inline void append_atom(std::ostream& os, const ProgAtom& a) {
  os << a.pred;
  if (!a.args.empty()) {
    os << '(';
    for (size_t i = 0; i < a.args.size(); ++i) {
      if (i) os << ',';
      append_term(os, a.args[i]);
    }
    os << ')';
  }
}

inline std::string to_text(const ProgAtom& a) {
  std::ostringstream os;
  append_atom(os, a);
  return os.str();
}

inline void append_body(std::ostream& os, const std::vector<ProgAtom>& pos,
                        const std::vector<ProgAtom>& neg) {
  bool first = true;
  for (const auto& a : pos) {
    if (!first) os << ", ";
    first = false;
    append_atom(os, a);
  }
  for (const auto& a : neg) {
    if (!first) os << ", ";
    first = false;
    os << "not ";
    append_atom(os, a);
  }
}

inline std::string emit_text(const Program& p) {
  std::ostringstream os;
  for (const auto& f : p.facts) {
    append_atom(os, f);
    os << ".\n";
  }
  for (const auto& r : p.rules) {
    if (r.head) {
      append_atom(os, *r.head);
      if (!r.pos.empty() || !r.neg.empty()) {
        os << " :- ";
        append_body(os, r.pos, r.neg);
      }
    } else {
      os << ":- ";
      append_body(os, r.pos, r.neg);
    }
    os << ".\n";
  }
  for (const auto& w : p.weak) {
    os << ":~ ";
    append_body(os, w.body, {});
    os << ". [" << w.weight << '@';
    append_term(os, w.level);
    os << "]\n";
  }
  return os.str();
}

}  // namespace ckr
