#pragma once

#include <array>
#include <cstdint>
#include <string_view>

#include "ckr/symbols.hpp"

namespace ckr {

/// Closed enumeration of the normal-form axiom shapes accepted by the
/// translator. Argument slots per shape are documented next to each kind.
enum class AxiomKind : std::uint8_t {
  Inst,       // A(a)            args: concept, individual
  NegInst,    // -A(a)           args: concept, individual
  Triple,     // R(a,b)          args: role, individual, individual
  NegTriple,  // -R(a,b)         args: role, individual, individual
  Eq,         // a = b           args: individual, individual
  Neq,        // a != b          args: individual, individual
  NomSub,     // {a} => B        args: individual, concept
  TopAssert,  // Top(a)          args: individual
  BotAssert,  // Bot(a)          args: individual
  SubClass,   // A => B          args: concept, concept
  SubConj,    // A1 and A2 => B  args: concept, concept, concept
  SubEx,      // R some A => B   args: role, concept, concept
  SupEx,      // A => R some {a} args: concept, role, individual
  SupForall,  // A => R only B   args: concept, role, concept
  SupLeqOne,  // A => max1 R     args: concept, role
  SubRole,    // R =>r S         args: role, role
  SubRChain,  // R o S =>r T     args: role, role, role
  Dis,        // Dis(R,S)        args: role, role
  Inv,        // Inv(R,S)        args: role, role
  Irr,        // Irr(R)          args: role
  EvalSubC,   // eval(A,c1) => B args: concept, context, concept
  EvalSubR,   // evalr(R,c1) =>r T  args: role, context, role
};

inline constexpr int kAxiomKindCount = 22;

struct NormalAxiom {
  AxiomKind kind;
  bool defeasible = false;
  std::array<Id, 3> arg = {kNoId, kNoId, kNoId};

  bool operator==(const NormalAxiom&) const = default;
};

inline int axiom_arity(AxiomKind k) {
  switch (k) {
    case AxiomKind::TopAssert:
    case AxiomKind::BotAssert:
    case AxiomKind::Irr:
      return 1;
    case AxiomKind::Inst:
    case AxiomKind::NegInst:
    case AxiomKind::Eq:
    case AxiomKind::Neq:
    case AxiomKind::NomSub:
    case AxiomKind::SubClass:
    case AxiomKind::SupLeqOne:
    case AxiomKind::SubRole:
    case AxiomKind::Dis:
    case AxiomKind::Inv:
      return 2;
    default:
      return 3;
  }
}

/// The 15 shapes that admit a defeasibility flag.
inline bool defeasible_allowed(AxiomKind k) {
  switch (k) {
    case AxiomKind::Inst:
    case AxiomKind::NegInst:
    case AxiomKind::Triple:
    case AxiomKind::NegTriple:
    case AxiomKind::SubClass:
    case AxiomKind::SubConj:
    case AxiomKind::SubEx:
    case AxiomKind::SupEx:
    case AxiomKind::SupForall:
    case AxiomKind::SupLeqOne:
    case AxiomKind::SubRole:
    case AxiomKind::SubRChain:
    case AxiomKind::Dis:
    case AxiomKind::Inv:
    case AxiomKind::Irr:
      return true;
    default:
      return false;
  }
}

/// Number of free individual positions in an exception tuple for a
/// defeasible shape (the individual arguments of its ovr atom that are
/// not fixed by the axiom itself).
inline int exception_arity(AxiomKind k) {
  switch (k) {
    case AxiomKind::Inst:
    case AxiomKind::NegInst:
    case AxiomKind::Triple:
    case AxiomKind::NegTriple:
      return 0;
    case AxiomKind::SubClass:
    case AxiomKind::SubConj:
    case AxiomKind::SubEx:
    case AxiomKind::SupEx:
    case AxiomKind::Irr:
      return 1;
    case AxiomKind::SupForall:
    case AxiomKind::SubRole:
    case AxiomKind::Dis:
    case AxiomKind::Inv:
      return 2;
    case AxiomKind::SupLeqOne:
    case AxiomKind::SubRChain:
      return 3;
    default:
      return 0;
  }
}

/// Expected name kind for argument slot `i` of shape `k`.
inline NameKind arg_kind(AxiomKind k, int i) {
  switch (k) {
    case AxiomKind::Inst:
    case AxiomKind::NegInst:
      return i == 0 ? NameKind::Concept : NameKind::Individual;
    case AxiomKind::Triple:
    case AxiomKind::NegTriple:
      return i == 0 ? NameKind::Role : NameKind::Individual;
    case AxiomKind::Eq:
    case AxiomKind::Neq:
    case AxiomKind::TopAssert:
    case AxiomKind::BotAssert:
      return NameKind::Individual;
    case AxiomKind::NomSub:
      return i == 0 ? NameKind::Individual : NameKind::Concept;
    case AxiomKind::SubClass:
    case AxiomKind::SubConj:
      return NameKind::Concept;
    case AxiomKind::SubEx:
      return i == 0 ? NameKind::Role : NameKind::Concept;
    case AxiomKind::SupEx:
      return i == 0 ? NameKind::Concept : (i == 1 ? NameKind::Role : NameKind::Individual);
    case AxiomKind::SupForall:
      return i == 1 ? NameKind::Role : NameKind::Concept;
    case AxiomKind::SupLeqOne:
      return i == 0 ? NameKind::Concept : NameKind::Role;
    case AxiomKind::SubRole:
    case AxiomKind::SubRChain:
    case AxiomKind::Dis:
    case AxiomKind::Inv:
    case AxiomKind::Irr:
      return NameKind::Role;
    case AxiomKind::EvalSubC:
      return i == 1 ? NameKind::Context : NameKind::Concept;
    case AxiomKind::EvalSubR:
      return i == 1 ? NameKind::Context : NameKind::Role;
  }
  return NameKind::Individual;
}

}  // namespace ckr
