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

// The trusted core of the library. A proof is a flat sequence of steps,
// each either an instance of one of the eleven axiom schemas or a modus
// ponens over two earlier steps; `check` re-derives every step and accepts
// nothing else. Everything above this file (derived rules, synthesizers,
// file formats) must produce proofs that pass `check`.

#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "formula.hpp"

namespace propcalc {

// The eleven axiom schemas of the calculus, templates over the
// metavariables A, B, C:
//
//   I.a    A -> (B -> A)
//   I.b    (A -> (B -> C)) -> ((A -> B) -> (A -> C))
//   II.a   A & B -> A
//   II.b   A & B -> B
//   II.c   (A -> B) -> ((A -> C) -> (A -> B & C))
//   III.a  A -> A | B
//   III.b  B -> A | B
//   III.c  (A -> C) -> ((B -> C) -> (A | B -> C))
//   IV.a   (A -> B) -> (~B -> ~A)
//   IV.b   A -> ~~A
//   IV.c   ~~A -> A
enum class Schema { Ia, Ib, IIa, IIb, IIc, IIIa, IIIb, IIIc, IVa, IVb, IVc };

inline constexpr std::array<Schema, 11> kAllSchemas = {
    Schema::Ia,   Schema::Ib,   Schema::IIa,  Schema::IIb,
    Schema::IIc,  Schema::IIIa, Schema::IIIb, Schema::IIIc,
    Schema::IVa,  Schema::IVb,  Schema::IVc};

std::string_view schema_id(Schema s);  // "I.a" ... "IV.c"
std::optional<Schema> schema_from_id(std::string_view id);
const Formula& schema_template(Schema s);
// Metavariables occurring in the template, in A, B, C order.
const std::vector<std::string>& schema_metavariables(Schema s);

// Metavariable assignment for instantiating a schema. Keys are drawn from
// {"A", "B", "C"}; a metavariable without an entry defaults to the formula
// variable of the same name, so an empty binding yields the literal schema.
using Binding = std::map<std::string, Formula>;

// One derivation step. There are exactly two ways to make one; nothing
// outside those is representable.
class ProofStep {
 public:
  enum class Kind { Axiom, ModusPonens };

  static ProofStep axiom_instance(Schema s, const Binding& binding);
  // `conclusion` is stored, not recomputed, so that proof objects stay
  // auditable line by line; `check` validates it against the cited steps.
  // Indices are 0-based positions of earlier steps in the same proof.
  static ProofStep modus_ponens(std::size_t minor, std::size_t major,
                                Formula conclusion);

  Kind kind() const { return kind_; }
  const Formula& formula() const { return formula_; }

  Schema schema() const;          // Kind::Axiom only
  const Binding& binding() const; // Kind::Axiom only
  std::size_t minor() const;      // Kind::ModusPonens only
  std::size_t major() const;      // Kind::ModusPonens only

 private:
  ProofStep(Kind kind, Formula formula, Schema schema, Binding binding,
            std::size_t minor, std::size_t major);

  Kind kind_;
  Formula formula_;
  Schema schema_;
  Binding binding_;
  std::size_t minor_;
  std::size_t major_;
};

// A closed derivation: a nonempty step sequence plus its claimed
// conclusion. There are no hypothesis steps; everything `check` accepts is
// a theorem.
class Proof {
 public:
  Proof(std::vector<ProofStep> steps, Formula conclusion);

  const std::vector<ProofStep>& steps() const { return steps_; }
  const Formula& conclusion() const { return conclusion_; }
  std::size_t size() const { return steps_.size(); }

 private:
  std::vector<ProofStep> steps_;
  Formula conclusion_;
};

struct CheckResult {
  bool ok = false;
  std::size_t step = 0;  // 1-based index of the first offending step; 0 if none
  std::string message;   // empty when ok
  explicit operator bool() const { return ok; }
};

// Re-derives every step: axiom instances are re-instantiated from their
// schema and binding, modus ponens steps are validated against the cited
// earlier steps, and the conclusion must equal the final step's formula.
// Failures are reported, never thrown.
CheckResult check(const Proof& p);

}  // namespace propcalc
