#pragma once

#include <cctype>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ckr/sckr.hpp"

namespace ckr {

struct SourceDocument {
  std::string text;
  std::string origin = "<stdin>";
};

struct ParseError {
  int line = 0;
  int col = 0;
  std::string message;
};

struct ParseResult {
  std::optional<SCKR> sckr;
  std::vector<ParseError> errors;
  std::vector<std::string> warnings;

  bool ok() const { return sckr.has_value() && errors.empty(); }
};

namespace detail {

struct Token {
  enum Type { Name, Int, Sym, End } type = End;
  std::string text;
  long value = 0;
  int line = 1, col = 1;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) { advance(); }

  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (c == '%') {
        while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
      } else if (c == '\n') {
        ++line_;
        col_ = 1;
        ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++col_;
        ++pos_;
      } else {
        break;
      }
    }
    tok_ = Token{};
    tok_.line = line_;
    tok_.col = col_;
    if (pos_ >= s_.size()) {
      tok_.type = Token::End;
      return;
    }
    char c = s_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' ||
              s_[pos_] == '\''))
        ++pos_;
      tok_.type = Token::Name;
      tok_.text = s_.substr(start, pos_ - start);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      tok_.type = Token::Int;
      tok_.text = s_.substr(start, pos_ - start);
      tok_.value = std::stol(tok_.text);
    } else {
      tok_.type = Token::Sym;
      // multi-char symbols: =>r  =>  !=
      if (s_.compare(pos_, 3, "=>r") == 0) {
        tok_.text = "=>r";
        pos_ += 3;
      } else if (s_.compare(pos_, 2, "=>") == 0) {
        tok_.text = "=>";
        pos_ += 2;
      } else if (s_.compare(pos_, 2, "!=") == 0) {
        tok_.text = "!=";
        pos_ += 2;
      } else {
        tok_.text = std::string(1, c);
        ++pos_;
      }
    }
    col_ += static_cast<int>(pos_ - (tok_.type == Token::Name || tok_.type == Token::Int
                                         ? pos_ - tok_.text.size()
                                         : pos_ - tok_.text.size()));
  }

  const std::string& s_;
  size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  Token tok_;
};

inline bool reserved(const std::string& n) {
  return n == "and" || n == "some" || n == "only" || n == "max1" || n == "o" ||
         n == "context" || n == "level" || n == "module";
}

class Parser {
 public:
  explicit Parser(const SourceDocument& doc) : lex_(doc.text) {}

  ParseResult run() {
    while (lex_.peek().type != Token::End && result_.errors.empty()) {
      const Token& t = lex_.peek();
      if (t.type == Token::Name && t.text == "context") {
        context_decl();
      } else if (t.type == Token::Name && t.text == "module") {
        module_decl();
      } else if (t.type == Token::Name) {
        cover_decl();
      } else {
        error(t, "expected declaration");
        break;
      }
    }
    if (result_.errors.empty()) {
      for (const auto& d : validate(k_)) result_.errors.push_back({0, 0, d.message});
    }
    if (result_.errors.empty()) result_.sckr = std::move(k_);
    return std::move(result_);
  }

 private:
  void error(const Token& t, const std::string& msg) {
    result_.errors.push_back({t.line, t.col, msg});
  }

  bool expect_sym(const std::string& s) {
    Token t = lex_.take();
    if (t.type != Token::Sym || t.text != s) {
      error(t, "expected '" + s + "'");
      return false;
    }
    return true;
  }

  Id name(NameKind kind) {
    Token t = lex_.take();
    if (t.type != Token::Name || reserved(t.text)) {
      error(t, "expected a name");
      return kNoId;
    }
    if (kind == NameKind::Concept && (t.text == "Top" || t.text == "Bot"))
      return t.text == "Top" ? k_.symbols.top() : k_.symbols.bot();
    Id id = k_.symbols.intern(t.text, kind);
    if (id == kNoId)
      error(t, "name " + t.text + " already used as " +
                   to_string(k_.symbols.kind(k_.symbols.find(t.text))) + ", here as " +
                   to_string(kind));
    return id;
  }

  void context_decl() {
    lex_.take();  // context
    Id c = name(NameKind::Context);
    Token t = lex_.take();
    if (t.type != Token::Name || t.text != "level") {
      error(t, "expected 'level'");
      return;
    }
    Token n = lex_.take();
    if (n.type != Token::Int) {
      error(n, "expected a level number");
      return;
    }
    if (!expect_sym(".")) return;
    if (c == kNoId) return;
    if (k_.structure.declared(c)) {
      error(t, "context declared twice: " + k_.symbols.name(c));
      return;
    }
    k_.structure.contexts.push_back(c);
    k_.structure.level[c] = static_cast<int>(n.value);
  }

  void cover_decl() {
    Id lo = name(NameKind::Context);
    if (!expect_sym("<")) return;
    Id hi = name(NameKind::Context);
    if (!expect_sym(".")) return;
    if (lo != kNoId && hi != kNoId) k_.structure.covers.emplace_back(lo, hi);
  }

  void module_decl() {
    lex_.take();  // module
    Token ctx_tok = lex_.peek();
    Id c = name(NameKind::Context);
    if (c != kNoId && !k_.structure.declared(c)) {
      error(ctx_tok, "undeclared context " + k_.symbols.name(c));
      return;
    }
    if (!expect_sym("{")) return;
    std::vector<NormalAxiom>* axioms = c == kNoId ? nullptr : &k_.module_for(c);
    while (result_.errors.empty()) {
      const Token& t = lex_.peek();
      if (t.type == Token::Sym && t.text == "}") {
        lex_.take();
        return;
      }
      if (t.type == Token::End) {
        error(t, "unterminated module");
        return;
      }
      auto ax = axiom();
      if (ax && axioms) axioms->push_back(*ax);
    }
  }

  bool peek_sym(const std::string& s) {
    return lex_.peek().type == Token::Sym && lex_.peek().text == s;
  }

  std::optional<NormalAxiom> axiom() {
    bool defeasible = false;
    Token first = lex_.peek();
    if (first.type == Token::Name && first.text == "D") {
      lex_.take();
      if (!expect_sym("(")) return std::nullopt;
      defeasible = true;
    }
    auto core = axiom_core();
    if (!core) return std::nullopt;
    if (defeasible) {
      if (!expect_sym(")")) return std::nullopt;
      if (!defeasible_allowed(core->kind)) {
        if (core->kind == AxiomKind::EvalSubC || core->kind == AxiomKind::EvalSubR)
          error(first, "eval axioms cannot be defeasible");
        else
          error(first, "axiom shape cannot be defeasible");
        return std::nullopt;
      }
      core->defeasible = true;
    }
    if (!expect_sym(".")) return std::nullopt;
    if (core->kind == AxiomKind::Eq)
      result_.warnings.push_back("equality assertion makes the sCKR inconsistent");
    return core;
  }

  std::optional<NormalAxiom> axiom_core() {
    Token t = lex_.peek();
    if (t.type == Token::Sym && t.text == "-") {
      lex_.take();
      return negated_assertion();
    }
    if (t.type == Token::Sym && t.text == "{") {
      lex_.take();
      Id a = name(NameKind::Individual);
      if (!expect_sym("}") || !expect_sym("=>")) return std::nullopt;
      Id b = name(NameKind::Concept);
      return make(AxiomKind::NomSub, a, b);
    }
    if (t.type != Token::Name) {
      error(t, "expected an axiom");
      lex_.take();
      return std::nullopt;
    }
    if (t.text == "Dis" || t.text == "Inv") {
      lex_.take();
      if (!expect_sym("(")) return std::nullopt;
      Id r = name(NameKind::Role);
      if (!expect_sym(",")) return std::nullopt;
      Id s = name(NameKind::Role);
      if (!expect_sym(")")) return std::nullopt;
      return make(t.text == "Dis" ? AxiomKind::Dis : AxiomKind::Inv, r, s);
    }
    if (t.text == "Irr") {
      lex_.take();
      if (!expect_sym("(")) return std::nullopt;
      Id r = name(NameKind::Role);
      if (!expect_sym(")")) return std::nullopt;
      return make(AxiomKind::Irr, r);
    }
    if (t.text == "Top" || t.text == "Bot") {
      // may be Top(a) assertion or Top/Bot used as a concept on the left
      Token kw = lex_.take();
      if (peek_sym("(")) {
        lex_.take();
        Id a = name(NameKind::Individual);
        if (!expect_sym(")")) return std::nullopt;
        return make(kw.text == "Top" ? AxiomKind::TopAssert : AxiomKind::BotAssert, a);
      }
      return concept_lhs(kw.text == "Top" ? k_.symbols.top() : k_.symbols.bot());
    }
    if (t.text == "eval" || t.text == "evalr") {
      bool role = t.text == "evalr";
      lex_.take();
      if (!expect_sym("(")) return std::nullopt;
      Id p = name(role ? NameKind::Role : NameKind::Concept);
      if (!expect_sym(",")) return std::nullopt;
      Id c1 = name(NameKind::Context);
      if (!expect_sym(")")) return std::nullopt;
      if (!expect_sym(role ? "=>r" : "=>")) return std::nullopt;
      Id q = name(role ? NameKind::Role : NameKind::Concept);
      return make(role ? AxiomKind::EvalSubR : AxiomKind::EvalSubC, p, c1, q);
    }
    // generic: starts with a NAME whose kind depends on what follows
    Token lead = lex_.take();
    if (reserved(lead.text)) {
      error(lead, "expected a name");
      return std::nullopt;
    }
    if (peek_sym("(")) return assertion(lead, false);
    if (peek_sym("=")) {
      lex_.take();
      Id a = intern_at(lead, NameKind::Individual);
      Id b = name(NameKind::Individual);
      return make(AxiomKind::Eq, a, b);
    }
    if (peek_sym("!=")) {
      lex_.take();
      Id a = intern_at(lead, NameKind::Individual);
      Id b = name(NameKind::Individual);
      return make(AxiomKind::Neq, a, b);
    }
    if (peek_sym("=>r")) {
      lex_.take();
      Id r = intern_at(lead, NameKind::Role);
      Id s = name(NameKind::Role);
      return make(AxiomKind::SubRole, r, s);
    }
    if (lex_.peek().type == Token::Name && lex_.peek().text == "o") {
      lex_.take();
      Id r = intern_at(lead, NameKind::Role);
      Id s = name(NameKind::Role);
      if (!expect_sym("=>r")) return std::nullopt;
      Id w = name(NameKind::Role);
      return make(AxiomKind::SubRChain, r, s, w);
    }
    if (lex_.peek().type == Token::Name && lex_.peek().text == "and") {
      lex_.take();
      Id a1 = intern_at(lead, NameKind::Concept);
      Id a2 = name(NameKind::Concept);
      if (!expect_sym("=>")) return std::nullopt;
      Id b = name(NameKind::Concept);
      return make(AxiomKind::SubConj, a1, a2, b);
    }
    if (lex_.peek().type == Token::Name && lex_.peek().text == "some") {
      lex_.take();
      Id r = intern_at(lead, NameKind::Role);
      Id a = name(NameKind::Concept);
      if (!expect_sym("=>")) return std::nullopt;
      Id b = name(NameKind::Concept);
      return make(AxiomKind::SubEx, r, a, b);
    }
    if (peek_sym("=>")) {
      return concept_lhs(intern_at(lead, NameKind::Concept));
    }
    error(lex_.peek(), "expected an axiom connective");
    return std::nullopt;
  }

  // lhs "=>" already known; lhs concept resolved
  std::optional<NormalAxiom> concept_lhs(Id lhs) {
    if (!expect_sym("=>")) return std::nullopt;
    Token t = lex_.peek();
    if (t.type == Token::Name && t.text == "max1") {
      lex_.take();
      Id r = name(NameKind::Role);
      return make(AxiomKind::SupLeqOne, lhs, r);
    }
    Token rhs_tok = lex_.take();
    if (rhs_tok.type != Token::Name || (reserved(rhs_tok.text))) {
      error(rhs_tok, "expected a name");
      return std::nullopt;
    }
    if (lex_.peek().type == Token::Name && lex_.peek().text == "some") {
      lex_.take();
      Id r = intern_at(rhs_tok, NameKind::Role);
      if (!expect_sym("{")) return std::nullopt;
      Id a = name(NameKind::Individual);
      if (!expect_sym("}")) return std::nullopt;
      return make(AxiomKind::SupEx, lhs, r, a);
    }
    if (lex_.peek().type == Token::Name && lex_.peek().text == "only") {
      lex_.take();
      Id r = intern_at(rhs_tok, NameKind::Role);
      Id b = name(NameKind::Concept);
      return make(AxiomKind::SupForall, lhs, r, b);
    }
    Id b = intern_at(rhs_tok, NameKind::Concept);
    return make(AxiomKind::SubClass, lhs, b);
  }

  std::optional<NormalAxiom> assertion(const Token& pred, bool negated) {
    if (!expect_sym("(")) return std::nullopt;
    Token a1 = lex_.peek();
    Id first = name(NameKind::Individual);
    if (peek_sym(",")) {
      lex_.take();
      Id second = name(NameKind::Individual);
      if (!expect_sym(")")) return std::nullopt;
      Id r = intern_at(pred, NameKind::Role);
      return make(negated ? AxiomKind::NegTriple : AxiomKind::Triple, r, first, second);
    }
    if (!expect_sym(")")) return std::nullopt;
    (void)a1;
    Id c = intern_at(pred, NameKind::Concept);
    return make(negated ? AxiomKind::NegInst : AxiomKind::Inst, c, first);
  }

  std::optional<NormalAxiom> negated_assertion() {
    Token pred = lex_.take();
    if (pred.type != Token::Name || reserved(pred.text)) {
      error(pred, "expected a name after '-'");
      return std::nullopt;
    }
    return assertion(pred, true);
  }

  Id intern_at(const Token& t, NameKind kind) {
    if (kind == NameKind::Concept && (t.text == "Top" || t.text == "Bot"))
      return t.text == "Top" ? k_.symbols.top() : k_.symbols.bot();
    Id id = k_.symbols.intern(t.text, kind);
    if (id == kNoId)
      error(t, "name " + t.text + " already used as " +
                   to_string(k_.symbols.kind(k_.symbols.find(t.text))) + ", here as " +
                   to_string(kind));
    return id;
  }

  std::optional<NormalAxiom> make(AxiomKind k, Id a0, Id a1 = kNoId, Id a2 = kNoId) {
    if (a0 == kNoId || (axiom_arity(k) > 1 && a1 == kNoId) || (axiom_arity(k) > 2 && a2 == kNoId))
      return std::nullopt;
    NormalAxiom ax;
    ax.kind = k;
    ax.arg = {a0, a1, a2};
    return ax;
  }

  Lexer lex_;
  SCKR k_;
  ParseResult result_;
};

}  // namespace detail

inline ParseResult parse(const SourceDocument& doc) {
  try {
    return detail::Parser(doc).run();
  } catch (const std::exception& e) {
    ParseResult r;
    r.errors.push_back({0, 0, std::string("internal parse failure: ") + e.what()});
    return r;
  }
}

namespace detail {

inline std::string axiom_text(const SymbolTable& sy, const NormalAxiom& ax) {
  auto n = [&](int i) { return sy.name(ax.arg[static_cast<size_t>(i)]); };
  std::string core;
  switch (ax.kind) {
    case AxiomKind::Inst: core = n(0) + "(" + n(1) + ")"; break;
    case AxiomKind::NegInst: core = "-" + n(0) + "(" + n(1) + ")"; break;
    case AxiomKind::Triple: core = n(0) + "(" + n(1) + "," + n(2) + ")"; break;
    case AxiomKind::NegTriple: core = "-" + n(0) + "(" + n(1) + "," + n(2) + ")"; break;
    case AxiomKind::Eq: core = n(0) + " = " + n(1); break;
    case AxiomKind::Neq: core = n(0) + " != " + n(1); break;
    case AxiomKind::NomSub: core = "{" + n(0) + "} => " + n(1); break;
    case AxiomKind::TopAssert: core = "Top(" + n(0) + ")"; break;
    case AxiomKind::BotAssert: core = "Bot(" + n(0) + ")"; break;
    case AxiomKind::SubClass: core = n(0) + " => " + n(1); break;
    case AxiomKind::SubConj: core = n(0) + " and " + n(1) + " => " + n(2); break;
    case AxiomKind::SubEx: core = n(0) + " some " + n(1) + " => " + n(2); break;
    case AxiomKind::SupEx: core = n(0) + " => " + n(1) + " some {" + n(2) + "}"; break;
    case AxiomKind::SupForall: core = n(0) + " => " + n(1) + " only " + n(2); break;
    case AxiomKind::SupLeqOne: core = n(0) + " => max1 " + n(1); break;
    case AxiomKind::SubRole: core = n(0) + " =>r " + n(1); break;
    case AxiomKind::SubRChain: core = n(0) + " o " + n(1) + " =>r " + n(2); break;
    case AxiomKind::Dis: core = "Dis(" + n(0) + "," + n(1) + ")"; break;
    case AxiomKind::Inv: core = "Inv(" + n(0) + "," + n(1) + ")"; break;
    case AxiomKind::Irr: core = "Irr(" + n(0) + ")"; break;
    case AxiomKind::EvalSubC: core = "eval(" + n(0) + "," + n(1) + ") => " + n(2); break;
    case AxiomKind::EvalSubR: core = "evalr(" + n(0) + "," + n(1) + ") =>r " + n(2); break;
  }
  if (ax.defeasible) return "D(" + core + ").";
  return core + ".";
}

}  // namespace detail

/// Canonical text form: contexts by (level, name), covers sorted, modules in
/// the same context order with axioms in stored order.
inline std::string serialize(const SCKR& k) {
  const auto& sy = k.symbols;
  std::vector<Id> ctxs = k.structure.contexts;
  std::sort(ctxs.begin(), ctxs.end(), [&](Id a, Id b) {
    int la = k.structure.level.at(a), lb = k.structure.level.at(b);
    if (la != lb) return la < lb;
    return sy.name(a) < sy.name(b);
  });
  std::ostringstream out;
  for (Id c : ctxs)
    out << "context " << sy.name(c) << " level " << k.structure.level.at(c) << ".\n";
  auto covers = k.structure.covers;
  std::sort(covers.begin(), covers.end(), [&](const auto& a, const auto& b) {
    if (sy.name(a.first) != sy.name(b.first)) return sy.name(a.first) < sy.name(b.first);
    return sy.name(a.second) < sy.name(b.second);
  });
  for (const auto& [lo, hi] : covers) out << sy.name(lo) << " < " << sy.name(hi) << ".\n";
  for (Id c : ctxs) {
    const auto* axioms = k.module_of(c);
    if (!axioms || axioms->empty()) continue;
    out << "module " << sy.name(c) << " {\n";
    for (const auto& ax : *axioms) out << "  " << detail::axiom_text(sy, ax) << "\n";
    out << "}\n";
  }
  return out.str();
}

/// Name-level structural equality (independent of interning order).
inline bool structurally_equal(const SCKR& a, const SCKR& b) {
  return serialize(a) == serialize(b);
}

}  // namespace ckr
