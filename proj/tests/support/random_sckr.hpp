#pragma once

#include <random>
#include <string>
#include <vector>

#include "ckr/sckr.hpp"

namespace testsupport {

/// Small random knowledge repositories: up to 3 contexts in a chain or fork,
/// up to 3 individuals / 3 concepts / 2 roles, up to 6 axioms of which at
/// most 3 defeasible. Always passes validate.
inline ckr::SCKR random_sckr(std::mt19937& rng) {
  using namespace ckr;
  SCKR k;
  auto& sy = k.symbols;
  std::uniform_int_distribution<int> d2(0, 1), d3(1, 3);

  int nctx = d3(rng);
  std::vector<Id> ctx;
  for (int i = 0; i < nctx; ++i) {
    Id c = sy.intern("c" + std::to_string(i + 1), NameKind::Context);
    ctx.push_back(c);
    k.structure.contexts.push_back(c);
  }
  // shape: chain, or fork with two children below one root (when nctx == 3)
  bool fork = nctx == 3 && d2(rng);
  if (fork) {
    k.structure.level[ctx[0]] = 0;
    k.structure.level[ctx[1]] = 1;
    k.structure.level[ctx[2]] = 1;
    k.structure.covers.emplace_back(ctx[1], ctx[0]);
    k.structure.covers.emplace_back(ctx[2], ctx[0]);
  } else {
    for (int i = 0; i < nctx; ++i) {
      k.structure.level[ctx[static_cast<size_t>(i)]] = i;
      if (i > 0)
        k.structure.covers.emplace_back(ctx[static_cast<size_t>(i)],
                                        ctx[static_cast<size_t>(i) - 1]);
    }
  }

  int nind = d3(rng), ncls = d3(rng);
  std::uniform_int_distribution<int> d12(1, 2);
  int nrol = d12(rng);
  std::vector<Id> inds, clss, rols;
  for (int i = 0; i < nind; ++i) inds.push_back(sy.intern("i" + std::to_string(i + 1), NameKind::Individual));
  for (int i = 0; i < ncls; ++i) clss.push_back(sy.intern("A" + std::to_string(i + 1), NameKind::Concept));
  for (int i = 0; i < nrol; ++i) rols.push_back(sy.intern("r" + std::to_string(i + 1), NameKind::Role));

  auto pick = [&](const std::vector<Id>& v) {
    std::uniform_int_distribution<size_t> d(0, v.size() - 1);
    return v[d(rng)];
  };

  std::uniform_int_distribution<int> naxd(1, 6);
  int nax = naxd(rng);
  int defeasible_left = 3;
  // weighted toward assertions and subclass axioms; richer shapes sprinkled in
  std::vector<AxiomKind> pool = {
      AxiomKind::Inst,     AxiomKind::Inst,      AxiomKind::NegInst,  AxiomKind::Triple,
      AxiomKind::NegTriple, AxiomKind::SubClass, AxiomKind::SubClass, AxiomKind::SubConj,
      AxiomKind::SubEx,    AxiomKind::SupEx,     AxiomKind::SupForall, AxiomKind::SupLeqOne,
      AxiomKind::SubRole,  AxiomKind::SubRChain, AxiomKind::Dis,      AxiomKind::Inv,
      AxiomKind::Irr,      AxiomKind::NomSub,    AxiomKind::TopAssert};
  std::uniform_int_distribution<size_t> poold(0, pool.size() - 1);
  for (int i = 0; i < nax; ++i) {
    AxiomKind kind = pool[poold(rng)];
    NormalAxiom ax;
    ax.kind = kind;
    for (int j = 0; j < axiom_arity(kind); ++j) {
      switch (arg_kind(kind, j)) {
        case NameKind::Individual: ax.arg[static_cast<size_t>(j)] = pick(inds); break;
        case NameKind::Concept: ax.arg[static_cast<size_t>(j)] = pick(clss); break;
        case NameKind::Role: ax.arg[static_cast<size_t>(j)] = pick(rols); break;
        case NameKind::Context: ax.arg[static_cast<size_t>(j)] = pick(ctx); break;
      }
    }
    if (defeasible_left > 0 && defeasible_allowed(kind) && d2(rng)) {
      ax.defeasible = true;
      --defeasible_left;
    }
    k.module_for(pick(ctx)).push_back(ax);
  }
  return k;
}

}  // namespace testsupport
