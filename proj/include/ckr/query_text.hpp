#pragma once

#include <cctype>
#include <optional>
#include <string>
#include <vector>

#include "ckr/oracle.hpp"
#include "ckr/sckr.hpp"

namespace ckr {

namespace query_detail {

inline void skip_ws(const std::string& s, size_t& i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

inline std::string ident(const std::string& s, size_t& i) {
  skip_ws(s, i);
  size_t start = i;
  while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
  return s.substr(start, i - start);
}

inline bool accept(const std::string& s, size_t& i, char c) {
  skip_ws(s, i);
  if (i < s.size() && s[i] == c) {
    ++i;
    return true;
  }
  return false;
}

}  // namespace query_detail

/// Parses "A(a)@c" or "R(a,b)@c". Returns nullopt with a message on failure.
inline std::optional<QueryAtom> parse_query_text(const SCKR& k, const std::string& text,
                                                 std::string& error) {
  using namespace query_detail;
  size_t i = 0;
  std::string pred = ident(text, i);
  if (pred.empty()) { error = "expected predicate name"; return std::nullopt; }
  if (!accept(text, i, '(')) { error = "expected '('"; return std::nullopt; }
  std::string a = ident(text, i);
  std::string b;
  bool is_role = false;
  if (accept(text, i, ',')) {
    is_role = true;
    b = ident(text, i);
  }
  if (!accept(text, i, ')')) { error = "expected ')'"; return std::nullopt; }
  if (!accept(text, i, '@')) { error = "expected '@context'"; return std::nullopt; }
  std::string ctx = ident(text, i);
  skip_ws(text, i);
  if (i != text.size()) { error = "trailing input after context name"; return std::nullopt; }

  QueryAtom q;
  q.is_role = is_role;
  q.pred = k.symbols.find(pred);
  q.a = k.symbols.find(a);
  q.b = is_role ? k.symbols.find(b) : kNoId;
  q.context = k.symbols.find(ctx);
  auto diags = validate_query(k, q);
  if (!diags.empty()) { error = diags.front().message; return std::nullopt; }
  return q;
}

/// Parses a conjunctive query "A(?x)@c, R(?x,b)@c" where '?'-prefixed terms
/// are variables ranging over individuals.
inline std::optional<std::vector<BcqAtom>> parse_bcq_text(const SCKR& k, const std::string& text,
                                                          std::string& error) {
  using namespace query_detail;
  std::vector<BcqAtom> out;
  size_t i = 0;
  for (;;) {
    BcqAtom at;
    std::string pred = ident(text, i);
    if (pred.empty()) { error = "expected predicate name"; return std::nullopt; }
    at.pred = k.symbols.find(pred);
    if (at.pred == kNoId) { error = "unknown predicate " + pred; return std::nullopt; }
    if (!accept(text, i, '(')) { error = "expected '('"; return std::nullopt; }
    auto term = [&](BcqTerm& t) -> bool {
      skip_ws(text, i);
      if (i < text.size() && text[i] == '?') {
        ++i;
        t.is_var = true;
        t.var = ident(text, i);
        if (t.var.empty()) { error = "expected variable name after '?'"; return false; }
        return true;
      }
      t.is_var = false;
      std::string n = ident(text, i);
      t.id = k.symbols.find(n);
      if (t.id == kNoId || k.symbols.kind(t.id) != NameKind::Individual) {
        error = "unknown individual " + n;
        return false;
      }
      return true;
    };
    if (!term(at.a)) return std::nullopt;
    if (accept(text, i, ',')) {
      at.is_role = true;
      if (!term(at.b)) return std::nullopt;
    } else {
      at.is_role = false;
    }
    if (at.is_role && k.symbols.kind(at.pred) != NameKind::Role) {
      error = "two-argument atom needs a role predicate";
      return std::nullopt;
    }
    if (!at.is_role && k.symbols.kind(at.pred) != NameKind::Concept) {
      error = "one-argument atom needs a concept predicate";
      return std::nullopt;
    }
    if (!accept(text, i, ')')) { error = "expected ')'"; return std::nullopt; }
    if (!accept(text, i, '@')) { error = "expected '@context'"; return std::nullopt; }
    std::string ctx = ident(text, i);
    at.context = k.symbols.find(ctx);
    if (at.context == kNoId || !k.structure.declared(at.context)) {
      error = "unknown context " + ctx;
      return std::nullopt;
    }
    out.push_back(std::move(at));
    if (!accept(text, i, ',')) break;
  }
  skip_ws(text, i);
  if (i != text.size()) { error = "trailing input in query"; return std::nullopt; }
  return out;
}

}  // namespace ckr
