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

#pragma once

#include <cstddef>
#include <initializer_list>
#include <map>
#include <memory>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace propcalc {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid argument to a library call (empty list, index out of range, ...).
class ArgError : public Error {
 public:
  using Error::Error;
};

// Formula syntax error. `position` is a 1-based byte offset into the input;
// for errors at end of input it is one past the last byte.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Immutable propositional formula over the connectives ~, &, |, ->.
// Formulas are values: copying is cheap (shared subterms), equality is
// structural and is the only notion of identity.
class Formula {
 public:
  enum class Kind { Var, Not, And, Or, Impl };

  // Variable names are an uppercase letter followed by alphanumerics
  // (A, B1, An). Anything else is rejected.
  static Formula var(std::string name);
  static Formula neg(Formula inner);
  static Formula conj(Formula left, Formula right);
  static Formula disj(Formula left, Formula right);
  static Formula impl(Formula antecedent, Formula consequent);

  Kind kind() const;
  const std::string& var_name() const;  // Kind::Var only
  Formula operand() const;              // Kind::Not only
  Formula left() const;                 // And/Or/Impl
  Formula right() const;                // And/Or/Impl

  bool operator==(const Formula& other) const;
  bool operator!=(const Formula& other) const { return !(*this == other); }

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Surface syntax:
//   formula := impl
//   impl    := or ("->" impl)?
//   or      := and ("|" and)*
//   and     := neg ("&" neg)*
//   neg     := "~" neg | atom
//   atom    := VAR | "(" formula ")"
// Unicode aliases accepted on input: "⊃" for "->", "∧" for "&",
// "∨" for "|", "¬" for "~".
Formula parse(std::string_view text);

// Canonical form: minimal parentheses for & and | chains; an implication
// nested inside another implication is always parenthesized, so nesting is
// explicit ("A -> (B -> A)", never "A -> B -> A").
std::string to_string(const Formula& f);
std::ostream& operator<<(std::ostream& os, const Formula& f);

// Left-associated n-ary connectives: (...((f1 & f2) & f3)...); a single
// element is returned unchanged. Empty input is an error.
Formula conj_n(std::span<const Formula> fs);
Formula disj_n(std::span<const Formula> fs);
Formula conj_n(std::initializer_list<Formula> fs);
Formula disj_n(std::initializer_list<Formula> fs);

// Simultaneous substitution of formulas for variables. Variables without a
// binding pass through unchanged; there is no capture in a propositional
// language.
Formula substitute(const Formula& f, const std::map<std::string, Formula>& binding);

// Distinct variable names occurring in f, sorted.
std::vector<std::string> variables(const Formula& f);

}  // namespace propcalc
