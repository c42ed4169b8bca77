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
#include <string>
#include <string_view>

#include "kernel.hpp"

namespace propcalc {

// Text proof format, one step per line with 1-based indices:
//
//   1 | A -> (B -> A) | AX I.a {A:=A; B:=B}
//   2 | B | B -> B | MP 1 3
//   ...
//   QED <formula>
//
// Axiom bindings list the schema's metavariables; omitted metavariables
// default to same-named variables. Parsing is whitespace-tolerant. The
// justification is recovered from the right-hand end of the line (the
// binding block for AX, the last field for MP), so formulas containing '|'
// are unambiguous.
std::string write_proof_text(const Proof& p);

// Rejects anything that does not spell out a well-formed step sequence:
// out-of-order indices, unknown schemas, axiom formulas that are not the
// stated instance, malformed fields, a missing or mismatched QED line.
// Step-level validity of modus ponens is left to `check`.
Proof read_proof_text(std::string_view text);

class ProofTextError : public Error {
 public:
  ProofTextError(const std::string& what, std::size_t line, std::size_t step);
  std::size_t line() const { return line_; }
  std::size_t step() const { return step_; }  // 0 when not tied to a step

 private:
  std::size_t line_;
  std::size_t step_;
};

}  // namespace propcalc
