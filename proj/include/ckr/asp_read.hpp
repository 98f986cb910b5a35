#pragma once

#include <cctype>
#include <stdexcept>
#include <string>

#include "ckr/program.hpp"

namespace ckr {

struct AspSyntaxError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

class AspReader {
 public:
  explicit AspReader(const std::string& s) : s_(s) {}

  Program run() {
    Program p;
    skip_ws();
    while (pos_ < s_.size()) {
      if (accept(":~")) {
        WeakConstraint w;
        w.body.push_back(atom());
        while (accept(",")) {
          if (accept_word("not")) throw AspSyntaxError("weak constraints have no negation here");
          w.body.push_back(atom());
        }
        expect(".");
        expect("[");
        w.weight = integer();
        expect("@");
        skip_ws();
        if (pos_ < s_.size() && (std::isdigit(peek()) || peek() == '-'))
          w.level = Term::number(integer());
        else
          w.level = term();
        expect("]");
        p.weak.push_back(std::move(w));
      } else if (accept(":-")) {
        Rule r;
        body(r);
        expect(".");
        p.rules.push_back(std::move(r));
      } else {
        ProgAtom head = atom();
        skip_ws();
        if (accept(":-")) {
          Rule r;
          r.head = std::move(head);
          body(r);
          expect(".");
          p.rules.push_back(std::move(r));
        } else {
          expect(".");
          if (!head.is_ground()) throw AspSyntaxError("non-ground fact");
          p.facts.push_back(std::move(head));
        }
      }
      skip_ws();
    }
    return p;
  }

 private:
  char peek() const { return s_[pos_]; }

  void skip_ws() {
    while (pos_ < s_.size()) {
      if (s_[pos_] == '%') {
        while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(s_[pos_]))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  bool accept(const std::string& tok) {
    skip_ws();
    if (s_.compare(pos_, tok.size(), tok) == 0) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  bool accept_word(const std::string& w) {
    skip_ws();
    if (s_.compare(pos_, w.size(), w) != 0) return false;
    size_t after = pos_ + w.size();
    if (after < s_.size() &&
        (std::isalnum(static_cast<unsigned char>(s_[after])) || s_[after] == '_'))
      return false;
    pos_ = after;
    return true;
  }

  void expect(const std::string& tok) {
    if (!accept(tok))
      throw AspSyntaxError("expected '" + tok + "' near offset " + std::to_string(pos_));
  }

  void body(Rule& r) {
    do {
      if (accept_word("not"))
        r.neg.push_back(atom());
      else
        r.pos.push_back(atom());
    } while (accept(","));
  }

  std::string ident() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' ||
            s_[pos_] == '\''))
      ++pos_;
    if (start == pos_) throw AspSyntaxError("expected identifier at offset " + std::to_string(pos_));
    return s_.substr(start, pos_ - start);
  }

  long integer() {
    skip_ws();
    size_t start = pos_;
    if (pos_ < s_.size() && s_[pos_] == '-') ++pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw AspSyntaxError("expected integer at offset " + std::to_string(pos_));
    return std::stol(s_.substr(start, pos_ - start));
  }

  Term term() {
    skip_ws();
    if (pos_ >= s_.size()) throw AspSyntaxError("unexpected end of input");
    char c = peek();
    if (c == '"') {
      ++pos_;
      size_t start = pos_;
      while (pos_ < s_.size() && s_[pos_] != '"') ++pos_;
      if (pos_ >= s_.size()) throw AspSyntaxError("unterminated string");
      std::string text = s_.substr(start, pos_ - start);
      ++pos_;
      return Term::name(std::move(text));
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') return Term::number(integer());
    std::string id = ident();
    skip_ws();
    if (pos_ < s_.size() && peek() == '(') {
      ++pos_;
      std::vector<Term> args;
      args.push_back(term());
      while (accept(",")) args.push_back(term());
      expect(")");
      return Term::func(std::move(id), std::move(args));
    }
    if (std::isupper(static_cast<unsigned char>(id[0])) || id[0] == '_')
      return Term::var(std::move(id));
    return Term::token(std::move(id));
  }

  ProgAtom atom() {
    ProgAtom a;
    a.pred = ident();
    skip_ws();
    if (pos_ < s_.size() && peek() == '(') {
      ++pos_;
      a.args.push_back(term());
      while (accept(",")) a.args.push_back(term());
      expect(")");
    }
    return a;
  }

  const std::string& s_;
  size_t pos_ = 0;
};

}  // namespace detail

/// Reads the dialect produced by emit_text back into a Program.
inline Program read_program(const std::string& text) {
  return detail::AspReader(text).run();
}

}  // namespace ckr
