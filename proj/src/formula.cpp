/* Copyright 2026 The propcalc Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "formula.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <utility>

namespace propcalc {

struct Formula::Node {
  Kind kind;
  std::string name;                  // Var only
  std::shared_ptr<const Node> a, b;  // Not uses a; binary nodes use a and b
};

ParseError::ParseError(const std::string& what, std::size_t position)
    : Error("syntax error at position " + std::to_string(position) + ": " + what),
      position_(position) {}

namespace {

bool valid_var_name(std::string_view name) {
  if (name.empty() || name[0] < 'A' || name[0] > 'Z') return false;
  return std::all_of(name.begin() + 1, name.end(), [](char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9');
  });
}

}  // namespace

Formula Formula::var(std::string name) {
  if (!valid_var_name(name))
    throw ArgError("invalid variable name '" + name + "'");
  auto node = std::make_shared<Node>();
  node->kind = Kind::Var;
  node->name = std::move(name);
  return Formula(std::move(node));
}

Formula Formula::neg(Formula inner) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Not;
  node->a = std::move(inner.node_);
  return Formula(std::move(node));
}

Formula Formula::conj(Formula left, Formula right) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::And;
  node->a = std::move(left.node_);
  node->b = std::move(right.node_);
  return Formula(std::move(node));
}

Formula Formula::disj(Formula left, Formula right) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Or;
  node->a = std::move(left.node_);
  node->b = std::move(right.node_);
  return Formula(std::move(node));
}

Formula Formula::impl(Formula antecedent, Formula consequent) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Impl;
  node->a = std::move(antecedent.node_);
  node->b = std::move(consequent.node_);
  return Formula(std::move(node));
}

Formula::Kind Formula::kind() const { return node_->kind; }

const std::string& Formula::var_name() const {
  assert(kind() == Kind::Var);
  return node_->name;
}

Formula Formula::operand() const {
  assert(kind() == Kind::Not);
  return Formula(node_->a);
}

Formula Formula::left() const {
  assert(kind() == Kind::And || kind() == Kind::Or || kind() == Kind::Impl);
  return Formula(node_->a);
}

Formula Formula::right() const {
  assert(kind() == Kind::And || kind() == Kind::Or || kind() == Kind::Impl);
  return Formula(node_->b);
}

bool Formula::operator==(const Formula& other) const {
  // Shared subterms compare by pointer before any recursion.
  struct Cmp {
    static bool eq(const Node* x, const Node* y) {
      if (x == y) return true;
      if (x->kind != y->kind) return false;
      switch (x->kind) {
        case Kind::Var:
          return x->name == y->name;
        case Kind::Not:
          return eq(x->a.get(), y->a.get());
        default:
          return eq(x->a.get(), y->a.get()) && eq(x->b.get(), y->b.get());
      }
    }
  };
  return Cmp::eq(node_.get(), other.node_.get());
}

// ---------------------------------------------------------------------------
// Printing

namespace {

// Binding strength; higher binds tighter.
int precedence(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::Impl: return 1;
    case Formula::Kind::Or: return 2;
    case Formula::Kind::And: return 3;
    case Formula::Kind::Not: return 4;
    case Formula::Kind::Var: return 5;
  }
  return 5;
}

void render(const Formula& f, std::string& out) {
  auto wrap = [&out](const Formula& sub, bool parens) {
    if (parens) out += '(';
    render(sub, out);
    if (parens) out += ')';
  };
  switch (f.kind()) {
    case Formula::Kind::Var:
      out += f.var_name();
      break;
    case Formula::Kind::Not: {
      Formula inner = f.operand();
      out += '~';
      wrap(inner, precedence(inner.kind()) < 4);
      break;
    }
    case Formula::Kind::And: {
      Formula l = f.left(), r = f.right();
      wrap(l, precedence(l.kind()) < 3);
      out += " & ";
      wrap(r, precedence(r.kind()) <= 3);
      break;
    }
    case Formula::Kind::Or: {
      Formula l = f.left(), r = f.right();
      wrap(l, precedence(l.kind()) < 2);
      out += " | ";
      wrap(r, precedence(r.kind()) <= 2);
      break;
    }
    case Formula::Kind::Impl: {
      Formula l = f.left(), r = f.right();
      wrap(l, precedence(l.kind()) <= 1);
      out += " -> ";
      wrap(r, precedence(r.kind()) <= 1);
      break;
    }
  }
}

}  // namespace

std::string to_string(const Formula& f) {
  std::string out;
  render(f, out);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Formula& f) {
  return os << to_string(f);
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

enum class Tok { End, Var, Arrow, Amp, Pipe, Tilde, LParen, RParen };

struct Token {
  Tok type = Tok::End;
  std::string name;      // Var only
  std::size_t pos = 0;   // 1-based byte offset of the token start
};

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < text_.size() && is_space(text_[pos_])) ++pos_;
    current_ = Token{Tok::End, "", pos_ + 1};
    if (pos_ >= text_.size()) return;
    const char c = text_[pos_];
    const std::size_t start = pos_;
    switch (c) {
      case '(': current_ = {Tok::LParen, "", start + 1}; ++pos_; return;
      case ')': current_ = {Tok::RParen, "", start + 1}; ++pos_; return;
      case '~': current_ = {Tok::Tilde, "", start + 1}; ++pos_; return;
      case '&': current_ = {Tok::Amp, "", start + 1}; ++pos_; return;
      case '|': current_ = {Tok::Pipe, "", start + 1}; ++pos_; return;
      case '-':
        if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
          current_ = {Tok::Arrow, "", start + 1};
          pos_ += 2;
          return;
        }
        throw ParseError("unexpected character '-'", start + 1);
      default:
        break;
    }
    if (c >= 'A' && c <= 'Z') {
      std::size_t end = pos_ + 1;
      while (end < text_.size() && is_alnum(text_[end])) ++end;
      current_ = {Tok::Var, std::string(text_.substr(pos_, end - pos_)), start + 1};
      pos_ = end;
      return;
    }
    // Unicode aliases: ⊃ (e2 8a 83), ∧ (e2 88 a7), ∨ (e2 88 a8), ¬ (c2 ac).
    if (match3(0xE2, 0x8A, 0x83)) { current_ = {Tok::Arrow, "", start + 1}; return; }
    if (match3(0xE2, 0x88, 0xA7)) { current_ = {Tok::Amp, "", start + 1}; return; }
    if (match3(0xE2, 0x88, 0xA8)) { current_ = {Tok::Pipe, "", start + 1}; return; }
    if (match2(0xC2, 0xAC)) { current_ = {Tok::Tilde, "", start + 1}; return; }
    throw ParseError("unexpected character", start + 1);
  }

  bool match3(unsigned char b0, unsigned char b1, unsigned char b2) {
    if (pos_ + 3 > text_.size()) return false;
    if (static_cast<unsigned char>(text_[pos_]) == b0 &&
        static_cast<unsigned char>(text_[pos_ + 1]) == b1 &&
        static_cast<unsigned char>(text_[pos_ + 2]) == b2) {
      pos_ += 3;
      return true;
    }
    return false;
  }

  bool match2(unsigned char b0, unsigned char b1) {
    if (pos_ + 2 > text_.size()) return false;
    if (static_cast<unsigned char>(text_[pos_]) == b0 &&
        static_cast<unsigned char>(text_[pos_ + 1]) == b1) {
      pos_ += 2;
      return true;
    }
    return false;
  }

  static bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n';
  }
  static bool is_alnum(char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9');
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Token current_;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : scan_(text) {}

  Formula parse_all() {
    Formula f = parse_impl();
    const Token& t = scan_.peek();
    if (t.type != Tok::End)
      throw ParseError("unexpected trailing input", t.pos);
    return f;
  }

 private:
  Formula parse_impl() {
    Formula lhs = parse_or();
    if (scan_.peek().type == Tok::Arrow) {
      scan_.take();
      return Formula::impl(std::move(lhs), parse_impl());  // right-associative
    }
    return lhs;
  }

  Formula parse_or() {
    Formula f = parse_and();
    while (scan_.peek().type == Tok::Pipe) {
      scan_.take();
      f = Formula::disj(std::move(f), parse_and());
    }
    return f;
  }

  Formula parse_and() {
    Formula f = parse_neg();
    while (scan_.peek().type == Tok::Amp) {
      scan_.take();
      f = Formula::conj(std::move(f), parse_neg());
    }
    return f;
  }

  Formula parse_neg() {
    if (scan_.peek().type == Tok::Tilde) {
      scan_.take();
      return Formula::neg(parse_neg());
    }
    return parse_atom();
  }

  Formula parse_atom() {
    Token t = scan_.peek();
    switch (t.type) {
      case Tok::Var:
        scan_.take();
        return Formula::var(std::move(t.name));
      case Tok::LParen: {
        scan_.take();
        Formula f = parse_impl();
        const Token& close = scan_.peek();
        if (close.type != Tok::RParen)
          throw ParseError("expected ')'", close.pos);
        scan_.take();
        return f;
      }
      default:
        throw ParseError("expected a formula", t.pos);
    }
  }

  Scanner scan_;
};

}  // namespace

Formula parse(std::string_view text) {
  return Parser(text).parse_all();
}

// ---------------------------------------------------------------------------
// n-ary builders, substitution, variables

Formula conj_n(std::span<const Formula> fs) {
  if (fs.empty()) throw ArgError("conj_n: empty formula list");
  Formula f = fs[0];
  for (std::size_t i = 1; i < fs.size(); ++i) f = Formula::conj(std::move(f), fs[i]);
  return f;
}

Formula disj_n(std::span<const Formula> fs) {
  if (fs.empty()) throw ArgError("disj_n: empty formula list");
  Formula f = fs[0];
  for (std::size_t i = 1; i < fs.size(); ++i) f = Formula::disj(std::move(f), fs[i]);
  return f;
}

Formula conj_n(std::initializer_list<Formula> fs) {
  return conj_n(std::span<const Formula>(fs.begin(), fs.size()));
}

Formula disj_n(std::initializer_list<Formula> fs) {
  return disj_n(std::span<const Formula>(fs.begin(), fs.size()));
}

Formula substitute(const Formula& f, const std::map<std::string, Formula>& binding) {
  switch (f.kind()) {
    case Formula::Kind::Var: {
      auto it = binding.find(f.var_name());
      return it != binding.end() ? it->second : f;
    }
    case Formula::Kind::Not:
      return Formula::neg(substitute(f.operand(), binding));
    case Formula::Kind::And:
      return Formula::conj(substitute(f.left(), binding), substitute(f.right(), binding));
    case Formula::Kind::Or:
      return Formula::disj(substitute(f.left(), binding), substitute(f.right(), binding));
    case Formula::Kind::Impl:
      return Formula::impl(substitute(f.left(), binding), substitute(f.right(), binding));
  }
  throw ArgError("substitute: malformed formula");
}

namespace {

void collect_variables(const Formula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case Formula::Kind::Var:
      out.insert(f.var_name());
      break;
    case Formula::Kind::Not:
      collect_variables(f.operand(), out);
      break;
    default:
      collect_variables(f.left(), out);
      collect_variables(f.right(), out);
      break;
  }
}

}  // namespace

std::vector<std::string> variables(const Formula& f) {
  std::set<std::string> s;
  collect_variables(f, s);
  return std::vector<std::string>(s.begin(), s.end());
}

}  // namespace propcalc
