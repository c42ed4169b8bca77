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

#include "kernel.hpp"

#include <cassert>
#include <utility>

namespace propcalc {

namespace {

constexpr std::array<std::string_view, 11> kSchemaIds = {
    "I.a", "I.b", "II.a", "II.b", "II.c", "III.a", "III.b", "III.c",
    "IV.a", "IV.b", "IV.c"};

std::size_t schema_index(Schema s) { return static_cast<std::size_t>(s); }

}  // namespace

std::string_view schema_id(Schema s) { return kSchemaIds[schema_index(s)]; }

std::optional<Schema> schema_from_id(std::string_view id) {
  for (std::size_t i = 0; i < kSchemaIds.size(); ++i)
    if (kSchemaIds[i] == id) return kAllSchemas[i];
  return std::nullopt;
}

const Formula& schema_template(Schema s) {
  // Built from constructors, not the parser, so the trusted core does not
  // depend on the surface syntax.
  static const std::array<Formula, 11> templates = [] {
    const Formula A = Formula::var("A");
    const Formula B = Formula::var("B");
    const Formula C = Formula::var("C");
    using F = Formula;
    return std::array<Formula, 11>{
        // I.a: A -> (B -> A)
        F::impl(A, F::impl(B, A)),
        // I.b: (A -> (B -> C)) -> ((A -> B) -> (A -> C))
        F::impl(F::impl(A, F::impl(B, C)),
                F::impl(F::impl(A, B), F::impl(A, C))),
        // II.a: A & B -> A
        F::impl(F::conj(A, B), A),
        // II.b: A & B -> B
        F::impl(F::conj(A, B), B),
        // II.c: (A -> B) -> ((A -> C) -> (A -> B & C))
        F::impl(F::impl(A, B),
                F::impl(F::impl(A, C), F::impl(A, F::conj(B, C)))),
        // III.a: A -> A | B
        F::impl(A, F::disj(A, B)),
        // III.b: B -> A | B
        F::impl(B, F::disj(A, B)),
        // III.c: (A -> C) -> ((B -> C) -> (A | B -> C))
        F::impl(F::impl(A, C),
                F::impl(F::impl(B, C), F::impl(F::disj(A, B), C))),
        // IV.a: (A -> B) -> (~B -> ~A)
        F::impl(F::impl(A, B), F::impl(F::neg(B), F::neg(A))),
        // IV.b: A -> ~~A
        F::impl(A, F::neg(F::neg(A))),
        // IV.c: ~~A -> A
        F::impl(F::neg(F::neg(A)), A)};
  }();
  return templates[schema_index(s)];
}

const std::vector<std::string>& schema_metavariables(Schema s) {
  static const std::array<std::vector<std::string>, 11> metavars = [] {
    std::array<std::vector<std::string>, 11> out;
    for (std::size_t i = 0; i < kAllSchemas.size(); ++i)
      out[i] = variables(schema_template(kAllSchemas[i]));  // sorted: A, B, C
    return out;
  }();
  return metavars[schema_index(s)];
}

ProofStep::ProofStep(Kind kind, Formula formula, Schema schema, Binding binding,
                     std::size_t minor, std::size_t major)
    : kind_(kind),
      formula_(std::move(formula)),
      schema_(schema),
      binding_(std::move(binding)),
      minor_(minor),
      major_(major) {}

ProofStep ProofStep::axiom_instance(Schema s, const Binding& binding) {
  Binding normalized;
  for (const std::string& name : schema_metavariables(s)) {
    auto it = binding.find(name);
    normalized.emplace(name, it != binding.end() ? it->second : Formula::var(name));
  }
  Formula f = substitute(schema_template(s), normalized);
  return ProofStep(Kind::Axiom, std::move(f), s, std::move(normalized), 0, 0);
}

ProofStep ProofStep::modus_ponens(std::size_t minor, std::size_t major,
                                  Formula conclusion) {
  return ProofStep(Kind::ModusPonens, std::move(conclusion), Schema::Ia, {},
                   minor, major);
}

Schema ProofStep::schema() const {
  assert(kind_ == Kind::Axiom);
  return schema_;
}

const Binding& ProofStep::binding() const {
  assert(kind_ == Kind::Axiom);
  return binding_;
}

std::size_t ProofStep::minor() const {
  assert(kind_ == Kind::ModusPonens);
  return minor_;
}

std::size_t ProofStep::major() const {
  assert(kind_ == Kind::ModusPonens);
  return major_;
}

Proof::Proof(std::vector<ProofStep> steps, Formula conclusion)
    : steps_(std::move(steps)), conclusion_(std::move(conclusion)) {
  if (steps_.empty()) throw ArgError("a proof needs at least one step");
}

namespace {

CheckResult fail(std::size_t step, std::string message) {
  return CheckResult{false, step, std::move(message)};
}

}  // namespace

CheckResult check(const Proof& p) {
  const auto& steps = p.steps();
  for (std::size_t k = 0; k < steps.size(); ++k) {
    const ProofStep& st = steps[k];
    if (st.kind() == ProofStep::Kind::Axiom) {
      const Formula expected =
          ProofStep::axiom_instance(st.schema(), st.binding()).formula();
      if (expected != st.formula())
        return fail(k + 1, "formula is not the stated instance of axiom " +
                               std::string(schema_id(st.schema())));
    } else {
      if (st.minor() >= k)
        return fail(k + 1, "minor premise does not cite an earlier step");
      if (st.major() >= k)
        return fail(k + 1, "major premise does not cite an earlier step");
      const Formula& major = steps[st.major()].formula();
      if (major.kind() != Formula::Kind::Impl)
        return fail(k + 1, "major premise not an implication");
      if (major.left() != steps[st.minor()].formula())
        return fail(k + 1,
                    "major premise antecedent does not match the minor premise");
      if (major.right() != st.formula())
        return fail(k + 1,
                    "formula does not match the major premise consequent");
    }
  }
  if (p.conclusion() != steps.back().formula())
    return fail(steps.size(), "conclusion does not match the final step");
  return CheckResult{true, 0, ""};
}

}  // namespace propcalc
