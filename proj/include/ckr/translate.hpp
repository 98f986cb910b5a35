#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "ckr/program.hpp"
#include "ckr/sckr.hpp"

namespace ckr {

/// Tag constant naming a defeasible shape inside ovr(...) atoms.
inline const char* shape_tag(AxiomKind k) {
  switch (k) {
    case AxiomKind::Inst: return "insta";
    case AxiomKind::Triple: return "triplea";
    case AxiomKind::NegInst: return "ninsta";
    case AxiomKind::NegTriple: return "ntriplea";
    case AxiomKind::SubClass: return "subClass";
    case AxiomKind::SubConj: return "subConj";
    case AxiomKind::SubEx: return "subEx";
    case AxiomKind::SupEx: return "supEx";
    case AxiomKind::SupForall: return "supForall";
    case AxiomKind::SupLeqOne: return "supLeqOne";
    case AxiomKind::SubRole: return "subRole";
    case AxiomKind::SubRChain: return "subRChain";
    case AxiomKind::Dis: return "dis";
    case AxiomKind::Inv: return "inv";
    case AxiomKind::Irr: return "irr";
    default: return nullptr;
  }
}

inline std::string def_pred(AxiomKind k) {
  switch (k) {
    case AxiomKind::Inst: return "def_insta";
    case AxiomKind::Triple: return "def_triplea";
    case AxiomKind::NegInst: return "def_ninsta";
    case AxiomKind::NegTriple: return "def_ntriplea";
    case AxiomKind::SubClass: return "def_subclass";
    case AxiomKind::SubConj: return "def_subcnj";
    case AxiomKind::SubEx: return "def_subex";
    case AxiomKind::SupEx: return "def_supex";
    case AxiomKind::SupForall: return "def_supforall";
    case AxiomKind::SupLeqOne: return "def_supleqone";
    case AxiomKind::SubRole: return "def_subr";
    case AxiomKind::SubRChain: return "def_subrc";
    case AxiomKind::Dis: return "def_dis";
    case AxiomKind::Inv: return "def_inv";
    case AxiomKind::Irr: return "def_irr";
    default: throw std::logic_error("shape is not defeasible");
  }
}

inline std::string ovrlevel_pred(AxiomKind k) {
  return std::string("ovrlevel_") + shape_tag(k);
}

/// Order in which a NormalAxiom's arguments appear inside def_* facts
/// (assertions are stored predicate-first but written individual-first).
inline std::vector<int> def_arg_order(AxiomKind k) {
  switch (k) {
    case AxiomKind::Inst:
    case AxiomKind::NegInst:
      return {1, 0};
    case AxiomKind::Triple:
    case AxiomKind::NegTriple:
      return {1, 0, 2};
    default: {
      std::vector<int> v;
      for (int i = 0; i < axiom_arity(k); ++i) v.push_back(i);
      return v;
    }
  }
}

/// ovr(tag, e..., axiom-args..., c1, c)
inline ProgAtom ovr_atom(AxiomKind k, std::vector<Term> tuple, std::vector<Term> def_args,
                         Term c1, Term c) {
  ProgAtom a;
  a.pred = "ovr";
  a.args.push_back(Term::token(shape_tag(k)));
  for (auto& t : tuple) a.args.push_back(std::move(t));
  for (auto& t : def_args) a.args.push_back(std::move(t));
  a.args.push_back(std::move(c1));
  a.args.push_back(std::move(c));
  return a;
}

/// ovrlevel_<tag>(e..., axiom-args..., [c1 for subEx,] c, n)
inline ProgAtom ovrlevel_atom(AxiomKind k, std::vector<Term> tuple, std::vector<Term> def_args,
                              const Term& c1, Term c, Term n) {
  ProgAtom a;
  a.pred = ovrlevel_pred(k);
  for (auto& t : tuple) a.args.push_back(std::move(t));
  for (auto& t : def_args) a.args.push_back(std::move(t));
  if (k == AxiomKind::SubEx) a.args.push_back(c1);
  a.args.push_back(std::move(c));
  a.args.push_back(std::move(n));
  return a;
}

/// Environment terms named by the consequence-addition tests of a defeasible
/// axiom instance (empty for shapes whose consequence is inherently a clash;
/// two for inverse-role axioms).
inline std::vector<Term> test_env_terms(AxiomKind k, const std::vector<Term>& tuple,
                                        const std::vector<Term>& def_args, const Term& c) {
  auto nlit = [&](Term x, Term z) {
    return Term::func("nlit", {std::move(x), std::move(z), c});
  };
  auto nrel = [&](Term x, Term r, Term y) {
    return Term::func("nrel", {std::move(x), std::move(r), std::move(y), c});
  };
  switch (k) {
    case AxiomKind::Inst: return {nlit(def_args[0], def_args[1])};
    case AxiomKind::Triple: return {nrel(def_args[0], def_args[1], def_args[2])};
    case AxiomKind::SubClass: return {nlit(tuple[0], def_args[1])};
    case AxiomKind::SubConj: return {nlit(tuple[0], def_args[2])};
    case AxiomKind::SubEx: return {nlit(tuple[0], def_args[2])};
    case AxiomKind::SupEx: return {nrel(tuple[0], def_args[1], def_args[2])};
    case AxiomKind::SupForall: return {nlit(tuple[1], def_args[2])};
    case AxiomKind::SubRole: return {nrel(tuple[0], def_args[1], tuple[1])};
    case AxiomKind::SubRChain: return {nrel(tuple[0], def_args[2], tuple[2])};
    case AxiomKind::Inv:
      return {nrel(tuple[0], def_args[1], tuple[1]), nrel(tuple[1], def_args[0], tuple[0])};
    default:
      return {};  // ninst, ntriple, leqone, dis, irr
  }
}

namespace detail {

inline Term concept_term(const SymbolTable& sy, Id id) {
  if (id == sy.top()) return Term::token("top");
  if (id == sy.bot()) return Term::token("bot");
  return Term::name(sy.name(id));
}

inline Term name_term(const SymbolTable& sy, Id id) {
  if (sy.is_builtin_concept(id)) return concept_term(sy, id);
  return Term::name(sy.name(id));
}

inline ProgAtom at(std::string pred, std::vector<Term> args) {
  return ProgAtom{std::move(pred), std::move(args)};
}

}  // namespace detail

inline std::vector<ProgAtom> input_strict(const SCKR& k, const NormalAxiom& ax, Id home) {
  using detail::at;
  const auto& sy = k.symbols;
  auto n = [&](int i) { return detail::name_term(sy, ax.arg[static_cast<size_t>(i)]); };
  Term c = Term::name(sy.name(home));
  Term main = Term::token("main");
  switch (ax.kind) {
    case AxiomKind::Inst: return {at("insta", {n(1), n(0), c, main})};
    case AxiomKind::NegInst: return {at("ninsta", {n(1), n(0), c})};
    case AxiomKind::Triple: return {at("triplea", {n(1), n(0), n(2), c, main})};
    case AxiomKind::NegTriple: return {at("ntriplea", {n(1), n(0), n(2), c})};
    case AxiomKind::Eq: return {at("eq", {n(0), n(1), c, main})};
    case AxiomKind::Neq: return {};
    case AxiomKind::NomSub: return {at("insta", {n(0), n(1), c, main})};
    case AxiomKind::TopAssert: return {at("insta", {n(0), Term::token("top"), c, main})};
    case AxiomKind::BotAssert: return {at("insta", {n(0), Term::token("bot"), c, main})};
    case AxiomKind::SubClass: return {at("subClass", {n(0), n(1), c})};
    case AxiomKind::SubConj: return {at("subConj", {n(0), n(1), n(2), c})};
    case AxiomKind::SubEx: return {at("subEx", {n(0), n(1), n(2), c})};
    case AxiomKind::SupEx: return {at("supEx", {n(0), n(1), n(2), c})};
    case AxiomKind::SupForall: return {at("supForall", {n(0), n(1), n(2), c})};
    case AxiomKind::SupLeqOne: return {at("supLeqOne", {n(0), n(1), c})};
    case AxiomKind::SubRole: return {at("subRole", {n(0), n(1), c})};
    case AxiomKind::SubRChain: return {at("subRChain", {n(0), n(1), n(2), c})};
    case AxiomKind::Dis: return {at("dis", {n(0), n(1), c})};
    case AxiomKind::Inv: return {at("inv", {n(0), n(1), c})};
    case AxiomKind::Irr: return {at("irr", {n(0), c})};
    case AxiomKind::EvalSubC: return {at("subEval", {n(0), n(1), n(2), c})};
    case AxiomKind::EvalSubR: return {at("subEvalR", {n(0), n(1), n(2), c})};
  }
  throw std::logic_error("unhandled axiom shape");
}

/// def_* fact plus the strict facts of the same axiom at its home context
/// (a defeasible axiom holds unexcepted where it is stated).
inline std::vector<ProgAtom> input_defeasible(const SCKR& k, const NormalAxiom& ax, Id home) {
  if (!defeasible_allowed(ax.kind)) throw std::logic_error("shape is not defeasible");
  const auto& sy = k.symbols;
  ProgAtom d;
  d.pred = def_pred(ax.kind);
  for (int i : def_arg_order(ax.kind))
    d.args.push_back(detail::name_term(sy, ax.arg[static_cast<size_t>(i)]));
  d.args.push_back(Term::name(sy.name(home)));
  std::vector<ProgAtom> out{std::move(d)};
  for (auto& f : input_strict(k, ax, home)) out.push_back(std::move(f));
  return out;
}

namespace detail {

struct RuleBuilder {
  std::vector<Rule> rules;
  std::vector<WeakConstraint> weak;

  static Term V(const char* n) { return Term::var(n); }
  static Term nlit(Term a, Term b, Term c) {
    return Term::func("nlit", {std::move(a), std::move(b), std::move(c)});
  }
  static Term nrel(Term a, Term r, Term b, Term c) {
    return Term::func("nrel", {std::move(a), std::move(r), std::move(b), std::move(c)});
  }

  void rule(ProgAtom head, std::vector<ProgAtom> pos, std::vector<ProgAtom> neg = {}) {
    rules.push_back(Rule{std::move(head), std::move(pos), std::move(neg)});
  }
  void constraint(std::vector<ProgAtom> pos, std::vector<ProgAtom> neg = {}) {
    rules.push_back(Rule{std::nullopt, std::move(pos), std::move(neg)});
  }
};

}  // namespace detail

/// The complete non-ground schema set: base deduction, cross-context eval,
/// overriding, inheritance, test, and preference rules, plus the top-level
/// consistency constraint.
inline void fixed_rules(std::vector<Rule>& rules, std::vector<WeakConstraint>& weak) {
  using detail::at;
  detail::RuleBuilder b;
  auto V = detail::RuleBuilder::V;
  Term main = Term::token("main");
  Term top = Term::token("top");
  Term bot = Term::token("bot");

  // base deduction
  b.rule(at("instd", {V("X"), V("Z"), V("C"), V("T")}), {at("insta", {V("X"), V("Z"), V("C"), V("T")})});
  b.rule(at("tripled", {V("X"), V("R"), V("Y"), V("C"), V("T")}),
         {at("triplea", {V("X"), V("R"), V("Y"), V("C"), V("T")})});
  b.rule(at("unsat", {V("T")}),
         {at("ninsta", {V("X"), V("Z"), V("C")}), at("instd", {V("X"), V("Z"), V("C"), V("T")})});
  b.rule(at("unsat", {V("T")}), {at("ntriplea", {V("X"), V("R"), V("Y"), V("C")}),
                                 at("tripled", {V("X"), V("R"), V("Y"), V("C"), V("T")})});
  b.rule(at("unsat", {V("T")}), {at("eq", {V("X"), V("Y"), V("C"), V("T")})});
  b.rule(at("instd", {V("X"), top, V("C"), main}), {at("nom", {V("X"), V("C")})});
  b.rule(at("unsat", {V("T")}), {at("instd", {V("X"), bot, V("C"), V("T")})});
  b.rule(at("instd", {V("X"), V("Z"), V("C"), V("T")}),
         {at("subClass", {V("Y"), V("Z"), V("C")}), at("instd", {V("X"), V("Y"), V("C"), V("T")})});
  b.rule(at("instd", {V("X"), V("Z"), V("C"), V("T")}),
         {at("subConj", {V("Y1"), V("Y2"), V("Z"), V("C")}),
          at("instd", {V("X"), V("Y1"), V("C"), V("T")}),
          at("instd", {V("X"), V("Y2"), V("C"), V("T")})});
  b.rule(at("instd", {V("X"), V("Z"), V("C"), V("T")}),
         {at("subEx", {V("V"), V("Y"), V("Z"), V("C")}),
          at("tripled", {V("X"), V("V"), V("X1"), V("C"), V("T")}),
          at("instd", {V("X1"), V("Y"), V("C"), V("T")})});
  b.rule(at("tripled", {V("X"), V("R"), V("X1"), V("C"), V("T")}),
         {at("supEx", {V("Y"), V("R"), V("X1"), V("C")}),
          at("instd", {V("X"), V("Y"), V("C"), V("T")})});
  b.rule(at("instd", {V("Y"), V("Z1"), V("C"), V("T")}),
         {at("supForall", {V("Z"), V("R"), V("Z1"), V("C")}),
          at("instd", {V("X"), V("Z"), V("C"), V("T")}),
          at("tripled", {V("X"), V("R"), V("Y"), V("C"), V("T")})});
  b.rule(at("unsat", {V("T")}),
         {at("supLeqOne", {V("Z"), V("R"), V("C")}), at("instd", {V("X"), V("Z"), V("C"), V("T")}),
          at("tripled", {V("X"), V("R"), V("X1"), V("C"), V("T")}),
          at("tripled", {V("X"), V("R"), V("X2"), V("C"), V("T")})});
  b.rule(at("tripled", {V("X"), V("W"), V("X1"), V("C"), V("T")}),
         {at("subRole", {V("V"), V("W"), V("C")}),
          at("tripled", {V("X"), V("V"), V("X1"), V("C"), V("T")})});
  b.rule(at("tripled", {V("X"), V("W"), V("Z"), V("C"), V("T")}),
         {at("subRChain", {V("U"), V("V"), V("W"), V("C")}),
          at("tripled", {V("X"), V("U"), V("Y"), V("C"), V("T")}),
          at("tripled", {V("Y"), V("V"), V("Z"), V("C"), V("T")})});
  b.rule(at("unsat", {V("T")}),
         {at("dis", {V("U"), V("V"), V("C")}), at("tripled", {V("X"), V("U"), V("Y"), V("C"), V("T")}),
          at("tripled", {V("X"), V("V"), V("Y"), V("C"), V("T")})});
  b.rule(at("tripled", {V("Y"), V("V"), V("X"), V("C"), V("T")}),
         {at("inv", {V("U"), V("V"), V("C")}), at("tripled", {V("X"), V("U"), V("Y"), V("C"), V("T")})});
  b.rule(at("tripled", {V("Y"), V("U"), V("X"), V("C"), V("T")}),
         {at("inv", {V("U"), V("V"), V("C")}), at("tripled", {V("X"), V("V"), V("Y"), V("C"), V("T")})});
  b.rule(at("unsat", {V("T")}),
         {at("irr", {V("U"), V("C")}), at("tripled", {V("X"), V("U"), V("X"), V("C"), V("T")})});

  // cross-context eval
  b.rule(at("instd", {V("X"), V("B"), V("C"), V("T")}),
         {at("subEval", {V("A"), V("C1"), V("B"), V("C")}),
          at("instd", {V("X"), V("A"), V("C1"), V("T")})});
  b.rule(at("tripled", {V("X"), V("S"), V("Y"), V("C"), V("T")}),
         {at("subEvalR", {V("R"), V("C1"), V("S"), V("C")}),
          at("tripled", {V("X"), V("R"), V("Y"), V("C1"), V("T")})});
  b.rule(at("instd", {V("X"), V("B"), V("C"), V("T")}),
         {at("subEval", {V("A"), V("C1"), V("B"), V("C2")}),
          at("instd", {V("X"), V("A"), V("C1"), V("T")}), at("prec", {V("C"), V("C2")})});
  b.rule(at("tripled", {V("X"), V("S"), V("Y"), V("C"), V("T")}),
         {at("subEvalR", {V("R"), V("C1"), V("S"), V("C2")}),
          at("tripled", {V("X"), V("R"), V("Y"), V("C1"), V("T")}), at("prec", {V("C"), V("C2")})});

  auto nlit = detail::RuleBuilder::nlit;
  auto nrel = detail::RuleBuilder::nrel;
  auto ovr = [](AxiomKind k, std::vector<Term> tuple, std::vector<Term> def_args) {
    return ovr_atom(k, std::move(tuple), std::move(def_args), Term::var("C1"), Term::var("C"));
  };
  ProgAtom prec = at("prec", {V("C"), V("C1")});

  // overriding
  b.rule(ovr(AxiomKind::Inst, {}, {V("X"), V("Y")}),
         {at("def_insta", {V("X"), V("Y"), V("C1")}), prec},
         {at("test_fails", {nlit(V("X"), V("Y"), V("C"))})});
  b.rule(ovr(AxiomKind::Triple, {}, {V("X"), V("R"), V("Y")}),
         {at("def_triplea", {V("X"), V("R"), V("Y"), V("C1")}), prec},
         {at("test_fails", {nrel(V("X"), V("R"), V("Y"), V("C"))})});
  b.rule(ovr(AxiomKind::NegInst, {}, {V("X"), V("Y")}),
         {at("def_ninsta", {V("X"), V("Y"), V("C1")}), prec,
          at("instd", {V("X"), V("Y"), V("C"), main})});
  b.rule(ovr(AxiomKind::NegTriple, {}, {V("X"), V("R"), V("Y")}),
         {at("def_ntriplea", {V("X"), V("R"), V("Y"), V("C1")}), prec,
          at("tripled", {V("X"), V("R"), V("Y"), V("C"), main})});
  b.rule(ovr(AxiomKind::SubClass, {V("X")}, {V("Y"), V("Z")}),
         {at("def_subclass", {V("Y"), V("Z"), V("C1")}), prec,
          at("instd", {V("X"), V("Y"), V("C"), main})},
         {at("test_fails", {nlit(V("X"), V("Z"), V("C"))})});
  b.rule(ovr(AxiomKind::SubConj, {V("X")}, {V("Y1"), V("Y2"), V("Z")}),
         {at("def_subcnj", {V("Y1"), V("Y2"), V("Z"), V("C1")}), prec,
          at("instd", {V("X"), V("Y1"), V("C"), main}), at("instd", {V("X"), V("Y2"), V("C"), main})},
         {at("test_fails", {nlit(V("X"), V("Z"), V("C"))})});
  b.rule(ovr(AxiomKind::SubEx, {V("X")}, {V("R"), V("Y"), V("Z")}),
         {at("def_subex", {V("R"), V("Y"), V("Z"), V("C1")}), prec,
          at("tripled", {V("X"), V("R"), V("W"), V("C"), main}),
          at("instd", {V("W"), V("Y"), V("C"), main})},
         {at("test_fails", {nlit(V("X"), V("Z"), V("C"))})});
  b.rule(ovr(AxiomKind::SupEx, {V("X")}, {V("Y"), V("R"), V("W")}),
         {at("def_supex", {V("Y"), V("R"), V("W"), V("C1")}), prec,
          at("instd", {V("X"), V("Y"), V("C"), main})},
         {at("test_fails", {nrel(V("X"), V("R"), V("W"), V("C"))})});
  b.rule(ovr(AxiomKind::SupForall, {V("X"), V("Y")}, {V("Z"), V("R"), V("W")}),
         {at("def_supforall", {V("Z"), V("R"), V("W"), V("C1")}), prec,
          at("instd", {V("X"), V("Z"), V("C"), main}),
          at("tripled", {V("X"), V("R"), V("Y"), V("C"), main})},
         {at("test_fails", {nlit(V("Y"), V("W"), V("C"))})});
  b.rule(ovr(AxiomKind::SupLeqOne, {V("X"), V("X1"), V("X2")}, {V("Z"), V("R")}),
         {at("def_supleqone", {V("Z"), V("R"), V("C1")}), prec,
          at("instd", {V("X"), V("Z"), V("C"), main}),
          at("tripled", {V("X"), V("R"), V("X1"), V("C"), main}),
          at("tripled", {V("X"), V("R"), V("X2"), V("C"), main})});
  b.rule(ovr(AxiomKind::SubRole, {V("X"), V("Y")}, {V("R"), V("S")}),
         {at("def_subr", {V("R"), V("S"), V("C1")}), prec,
          at("tripled", {V("X"), V("R"), V("Y"), V("C"), main})},
         {at("test_fails", {nrel(V("X"), V("S"), V("Y"), V("C"))})});
  b.rule(ovr(AxiomKind::SubRChain, {V("X"), V("Y"), V("Z")}, {V("R"), V("S"), V("T2")}),
         {at("def_subrc", {V("R"), V("S"), V("T2"), V("C1")}), prec,
          at("tripled", {V("X"), V("R"), V("Y"), V("C"), main}),
          at("tripled", {V("Y"), V("S"), V("Z"), V("C"), main})},
         {at("test_fails", {nrel(V("X"), V("T2"), V("Z"), V("C"))})});
  b.rule(ovr(AxiomKind::Dis, {V("X"), V("Y")}, {V("R"), V("S")}),
         {at("def_dis", {V("R"), V("S"), V("C1")}), prec,
          at("tripled", {V("X"), V("R"), V("Y"), V("C"), main}),
          at("tripled", {V("X"), V("S"), V("Y"), V("C"), main})});
  b.rule(ovr(AxiomKind::Inv, {V("X"), V("Y")}, {V("R"), V("S")}),
         {at("def_inv", {V("R"), V("S"), V("C1")}), prec,
          at("tripled", {V("X"), V("R"), V("Y"), V("C"), main})},
         {at("test_fails", {nrel(V("X"), V("S"), V("Y"), V("C"))})});
  b.rule(ovr(AxiomKind::Inv, {V("X"), V("Y")}, {V("R"), V("S")}),
         {at("def_inv", {V("R"), V("S"), V("C1")}), prec,
          at("tripled", {V("Y"), V("S"), V("X"), V("C"), main})},
         {at("test_fails", {nrel(V("X"), V("R"), V("Y"), V("C"))})});
  b.rule(ovr(AxiomKind::Irr, {V("X")}, {V("R")}),
         {at("def_irr", {V("R"), V("C1")}), prec,
          at("tripled", {V("X"), V("R"), V("X"), V("C"), main})});

  // inheritance
  b.rule(at("instd", {V("X"), V("Z"), V("C"), V("T")}),
         {at("insta", {V("X"), V("Z"), V("C1"), V("T")}), prec},
         {ovr(AxiomKind::Inst, {}, {V("X"), V("Z")})});
  b.rule(at("tripled", {V("X"), V("R"), V("Y"), V("C"), V("T")}),
         {at("triplea", {V("X"), V("R"), V("Y"), V("C1"), V("T")}), prec},
         {ovr(AxiomKind::Triple, {}, {V("X"), V("R"), V("Y")})});
  b.rule(at("unsat", {V("T")}),
         {at("ninsta", {V("X"), V("Z"), V("C1")}), at("instd", {V("X"), V("Z"), V("C"), V("T")}), prec},
         {ovr(AxiomKind::NegInst, {}, {V("X"), V("Z")})});
  b.rule(at("unsat", {V("T")}),
         {at("ntriplea", {V("X"), V("R"), V("Y"), V("C1")}),
          at("tripled", {V("X"), V("R"), V("Y"), V("C"), V("T")}), prec},
         {ovr(AxiomKind::NegTriple, {}, {V("X"), V("R"), V("Y")})});
  b.rule(at("instd", {V("X"), V("Z"), V("C"), V("T")}),
         {at("subClass", {V("Y"), V("Z"), V("C1")}), at("instd", {V("X"), V("Y"), V("C"), V("T")}),
          prec},
         {ovr(AxiomKind::SubClass, {V("X")}, {V("Y"), V("Z")})});
  b.rule(at("instd", {V("X"), V("Z"), V("C"), V("T")}),
         {at("subConj", {V("Y1"), V("Y2"), V("Z"), V("C1")}),
          at("instd", {V("X"), V("Y1"), V("C"), V("T")}),
          at("instd", {V("X"), V("Y2"), V("C"), V("T")}), prec},
         {ovr(AxiomKind::SubConj, {V("X")}, {V("Y1"), V("Y2"), V("Z")})});
  b.rule(at("instd", {V("X"), V("Z"), V("C"), V("T")}),
         {at("subEx", {V("V"), V("Y"), V("Z"), V("C1")}),
          at("tripled", {V("X"), V("V"), V("X1"), V("C"), V("T")}),
          at("instd", {V("X1"), V("Y"), V("C"), V("T")}), prec},
         {ovr(AxiomKind::SubEx, {V("X")}, {V("V"), V("Y"), V("Z")})});
  b.rule(at("tripled", {V("X"), V("R"), V("X1"), V("C"), V("T")}),
         {at("supEx", {V("Y"), V("R"), V("X1"), V("C1")}),
          at("instd", {V("X"), V("Y"), V("C"), V("T")}), prec},
         {ovr(AxiomKind::SupEx, {V("X")}, {V("Y"), V("R"), V("X1")})});
  b.rule(at("instd", {V("Y"), V("Z1"), V("C"), V("T")}),
         {at("supForall", {V("Z"), V("R"), V("Z1"), V("C1")}),
          at("instd", {V("X"), V("Z"), V("C"), V("T")}),
          at("tripled", {V("X"), V("R"), V("Y"), V("C"), V("T")}), prec},
         {ovr(AxiomKind::SupForall, {V("X"), V("Y")}, {V("Z"), V("R"), V("Z1")})});
  b.rule(at("unsat", {V("T")}),
         {at("supLeqOne", {V("Z"), V("R"), V("C1")}), at("instd", {V("X"), V("Z"), V("C"), V("T")}),
          at("tripled", {V("X"), V("R"), V("X1"), V("C"), V("T")}),
          at("tripled", {V("X"), V("R"), V("X2"), V("C"), V("T")}), prec},
         {ovr(AxiomKind::SupLeqOne, {V("X"), V("X1"), V("X2")}, {V("Z"), V("R")})});
  b.rule(at("tripled", {V("X"), V("W"), V("X1"), V("C"), V("T")}),
         {at("subRole", {V("V"), V("W"), V("C1")}),
          at("tripled", {V("X"), V("V"), V("X1"), V("C"), V("T")}), prec},
         {ovr(AxiomKind::SubRole, {V("X"), V("X1")}, {V("V"), V("W")})});
  b.rule(at("tripled", {V("X"), V("W"), V("Z"), V("C"), V("T")}),
         {at("subRChain", {V("U"), V("V"), V("W"), V("C1")}),
          at("tripled", {V("X"), V("U"), V("Y"), V("C"), V("T")}),
          at("tripled", {V("Y"), V("V"), V("Z"), V("C"), V("T")}), prec},
         {ovr(AxiomKind::SubRChain, {V("X"), V("Y"), V("Z")}, {V("U"), V("V"), V("W")})});
  b.rule(at("unsat", {V("T")}),
         {at("dis", {V("U"), V("V"), V("C1")}),
          at("tripled", {V("X"), V("U"), V("Y"), V("C"), V("T")}),
          at("tripled", {V("X"), V("V"), V("Y"), V("C"), V("T")}), prec},
         {ovr(AxiomKind::Dis, {V("X"), V("Y")}, {V("U"), V("V")})});
  b.rule(at("tripled", {V("Y"), V("V"), V("X"), V("C"), V("T")}),
         {at("inv", {V("U"), V("V"), V("C1")}),
          at("tripled", {V("X"), V("U"), V("Y"), V("C"), V("T")}), prec},
         {ovr(AxiomKind::Inv, {V("X"), V("Y")}, {V("U"), V("V")})});
  b.rule(at("tripled", {V("X"), V("U"), V("Y"), V("C"), V("T")}),
         {at("inv", {V("U"), V("V"), V("C1")}),
          at("tripled", {V("Y"), V("V"), V("X"), V("C"), V("T")}), prec},
         {ovr(AxiomKind::Inv, {V("X"), V("Y")}, {V("U"), V("V")})});
  b.rule(at("unsat", {V("T")}),
         {at("irr", {V("U"), V("C1")}), at("tripled", {V("X"), V("U"), V("X"), V("C"), V("T")}),
          prec},
         {ovr(AxiomKind::Irr, {V("X")}, {V("U")})});

  // tests
  b.rule(at("test", {nlit(V("X"), V("Y"), V("C"))}),
         {at("def_insta", {V("X"), V("Y"), V("C1")}), prec});
  b.constraint({at("test_fails", {nlit(V("X"), V("Y"), V("C"))}),
                ovr(AxiomKind::Inst, {}, {V("X"), V("Y")})});
  b.rule(at("test", {nrel(V("X"), V("R"), V("Y"), V("C"))}),
         {at("def_triplea", {V("X"), V("R"), V("Y"), V("C1")}), prec});
  b.constraint({at("test_fails", {nrel(V("X"), V("R"), V("Y"), V("C"))}),
                ovr(AxiomKind::Triple, {}, {V("X"), V("R"), V("Y")})});
  b.rule(at("test", {nlit(V("X"), V("Z"), V("C"))}),
         {at("def_subclass", {V("Y"), V("Z"), V("C1")}),
          at("instd", {V("X"), V("Y"), V("C"), main}), prec});
  b.constraint({at("test_fails", {nlit(V("X"), V("Z"), V("C"))}),
                ovr(AxiomKind::SubClass, {V("X")}, {V("Y"), V("Z")})});
  b.rule(at("test", {nlit(V("X"), V("Z"), V("C"))}),
         {at("def_subcnj", {V("Y1"), V("Y2"), V("Z"), V("C1")}),
          at("instd", {V("X"), V("Y1"), V("C"), main}),
          at("instd", {V("X"), V("Y2"), V("C"), main}), prec});
  b.constraint({at("test_fails", {nlit(V("X"), V("Z"), V("C"))}),
                ovr(AxiomKind::SubConj, {V("X")}, {V("Y1"), V("Y2"), V("Z")})});
  b.rule(at("test", {nlit(V("X"), V("Z"), V("C"))}),
         {at("def_subex", {V("R"), V("Y"), V("Z"), V("C1")}),
          at("tripled", {V("X"), V("R"), V("W"), V("C"), main}),
          at("instd", {V("W"), V("Y"), V("C"), main}), prec});
  b.constraint({at("test_fails", {nlit(V("X"), V("Z"), V("C"))}),
                ovr(AxiomKind::SubEx, {V("X")}, {V("R"), V("Y"), V("Z")})});
  b.rule(at("test", {nrel(V("X"), V("R"), V("W"), V("C"))}),
         {at("def_supex", {V("Y"), V("R"), V("W"), V("C1")}),
          at("instd", {V("X"), V("Y"), V("C"), main}), prec});
  b.constraint({at("test_fails", {nrel(V("X"), V("R"), V("W"), V("C"))}),
                ovr(AxiomKind::SupEx, {V("X")}, {V("Y"), V("R"), V("W")})});
  b.rule(at("test", {nlit(V("Y"), V("W"), V("C"))}),
         {at("def_supforall", {V("Z"), V("R"), V("W"), V("C1")}),
          at("instd", {V("X"), V("Z"), V("C"), main}),
          at("tripled", {V("X"), V("R"), V("Y"), V("C"), main}), prec});
  b.constraint({at("test_fails", {nlit(V("Y"), V("W"), V("C"))}),
                ovr(AxiomKind::SupForall, {V("X"), V("Y")}, {V("Z"), V("R"), V("W")})});
  b.rule(at("test", {nrel(V("X"), V("S"), V("Y"), V("C"))}),
         {at("def_subr", {V("R"), V("S"), V("C1")}),
          at("tripled", {V("X"), V("R"), V("Y"), V("C"), main}), prec});
  b.constraint({at("test_fails", {nrel(V("X"), V("S"), V("Y"), V("C"))}),
                ovr(AxiomKind::SubRole, {V("X"), V("Y")}, {V("R"), V("S")})});
  b.rule(at("test", {nrel(V("X"), V("T2"), V("Z"), V("C"))}),
         {at("def_subrc", {V("R"), V("S"), V("T2"), V("C1")}),
          at("tripled", {V("X"), V("R"), V("Y"), V("C"), main}),
          at("tripled", {V("Y"), V("S"), V("Z"), V("C"), main}), prec});
  b.constraint({at("test_fails", {nrel(V("X"), V("T2"), V("Z"), V("C"))}),
                ovr(AxiomKind::SubRChain, {V("X"), V("Y"), V("Z")}, {V("R"), V("S"), V("T2")})});
  b.rule(at("test", {nrel(V("X"), V("S"), V("Y"), V("C"))}),
         {at("def_inv", {V("R"), V("S"), V("C1")}),
          at("tripled", {V("X"), V("R"), V("Y"), V("C"), main}), prec});
  b.rule(at("test", {nrel(V("Y"), V("R"), V("X"), V("C"))}),
         {at("def_inv", {V("R"), V("S"), V("C1")}),
          at("tripled", {V("X"), V("S"), V("Y"), V("C"), main}), prec});
  b.constraint({at("test_fails", {nrel(V("X"), V("S"), V("Y"), V("C"))}),
                ovr(AxiomKind::Inv, {V("X"), V("Y")}, {V("R"), V("S")})});
  b.constraint({at("test_fails", {nrel(V("Y"), V("R"), V("X"), V("C"))}),
                ovr(AxiomKind::Inv, {V("X"), V("Y")}, {V("R"), V("S")})});

  b.rule(at("test_fails", {nlit(V("X"), V("Z"), V("C"))}),
         {at("instd", {V("X"), V("Z"), V("C"), nlit(V("X"), V("Z"), V("C"))})},
         {at("unsat", {nlit(V("X"), V("Z"), V("C"))})});
  b.rule(at("test_fails", {nrel(V("X"), V("R"), V("Y"), V("C"))}),
         {at("tripled", {V("X"), V("R"), V("Y"), V("C"), nrel(V("X"), V("R"), V("Y"), V("C"))})},
         {at("unsat", {nrel(V("X"), V("R"), V("Y"), V("C"))})});
  b.rule(at("instd", {V("X"), V("Z"), V("C"), nlit(V("X"), V("Z"), V("C"))}),
         {at("test", {nlit(V("X"), V("Z"), V("C"))})});
  b.rule(at("tripled", {V("X"), V("R"), V("Y"), V("C"), nrel(V("X"), V("R"), V("Y"), V("C"))}),
         {at("test", {nrel(V("X"), V("R"), V("Y"), V("C"))})});
  b.rule(at("instd", {V("X1"), V("Y1"), V("C"), V("T")}),
         {at("instd", {V("X1"), V("Y1"), V("C"), main}), at("test", {V("T")})});
  b.rule(at("tripled", {V("X1"), V("R"), V("Y1"), V("C"), V("T")}),
         {at("tripled", {V("X1"), V("R"), V("Y1"), V("C"), main}), at("test", {V("T")})});

  // preference: one ovrlevel rule and one weak constraint per defeasible shape
  const AxiomKind shapes[] = {
      AxiomKind::Inst,      AxiomKind::Triple,   AxiomKind::NegInst,   AxiomKind::NegTriple,
      AxiomKind::SubClass,  AxiomKind::SubConj,  AxiomKind::SubEx,     AxiomKind::SupEx,
      AxiomKind::SupForall, AxiomKind::SupLeqOne, AxiomKind::SubRole,  AxiomKind::SubRChain,
      AxiomKind::Dis,       AxiomKind::Inv,      AxiomKind::Irr};
  const char* tuple_names[] = {"X", "Y", "Z"};
  for (AxiomKind k : shapes) {
    std::vector<Term> tuple, def_args;
    for (int i = 0; i < exception_arity(k); ++i)
      tuple.push_back(V(tuple_names[i]));
    for (int i = 0; i < axiom_arity(k); ++i)
      def_args.push_back(V(("A" + std::to_string(i + 1)).c_str()));
    ProgAtom head =
        ovrlevel_atom(k, tuple, def_args, Term::var("C1"), Term::var("C"), Term::var("N"));
    ProgAtom body = ovr_atom(k, tuple, def_args, Term::var("C1"), Term::var("C"));
    b.rule(head, {body, at("level", {V("C1"), V("N")})});
    WeakConstraint w;
    w.body = {head};
    w.weight = 1;
    w.level = Term::var("N");
    b.weak.push_back(std::move(w));
  }

  b.constraint({at("unsat", {main})});

  for (auto& r : b.rules) rules.push_back(std::move(r));
  for (auto& w : b.weak) weak.push_back(std::move(w));
}

/// Full program for an SCKR: structure facts, signature facts, axiom facts,
/// and the fixed schemas. Facts are sorted so equal inputs (up to axiom
/// order) produce identical output.
inline Program translate(const SCKR& k) {
  Program p;
  const auto& sy = k.symbols;
  for (const auto& [lo, hi] : strict_below(k.structure))
    p.facts.push_back(detail::at("prec", {Term::name(sy.name(lo)), Term::name(sy.name(hi))}));
  for (Id c : k.structure.contexts)
    p.facts.push_back(detail::at(
        "level", {Term::name(sy.name(c)), Term::number(significance(k.structure, c))}));
  for (Id c : k.structure.contexts) {
    Term ct = Term::name(sy.name(c));
    for (Id a : sy.all_of(NameKind::Individual))
      p.facts.push_back(detail::at("nom", {Term::name(sy.name(a)), ct}));
    for (Id a : sy.all_of(NameKind::Concept))
      p.facts.push_back(detail::at("cls", {Term::name(sy.name(a)), ct}));
    for (Id a : sy.all_of(NameKind::Role))
      p.facts.push_back(detail::at("rol", {Term::name(sy.name(a)), ct}));
  }
  for (const auto& m : k.modules)
    for (const auto& ax : m.axioms) {
      auto facts = ax.defeasible ? input_defeasible(k, ax, m.context)
                                 : input_strict(k, ax, m.context);
      for (auto& f : facts) p.facts.push_back(std::move(f));
    }
  std::sort(p.facts.begin(), p.facts.end(), [](const ProgAtom& a, const ProgAtom& b) {
    return to_text(a) < to_text(b);
  });
  p.facts.erase(std::unique(p.facts.begin(), p.facts.end()), p.facts.end());
  fixed_rules(p.rules, p.weak);
  return p;
}

/// Ground atom whose presence in an answer set witnesses the query.
inline ProgAtom output_atom(const SCKR& k, const QueryAtom& q) {
  const auto& sy = k.symbols;
  if (q.is_role)
    return detail::at("tripled",
                      {Term::name(sy.name(q.a)), Term::name(sy.name(q.pred)),
                       Term::name(sy.name(q.b)), Term::name(sy.name(q.context)),
                       Term::token("main")});
  return detail::at("instd", {Term::name(sy.name(q.a)), detail::concept_term(sy, q.pred),
                              Term::name(sy.name(q.context)), Term::token("main")});
}

}  // namespace ckr
