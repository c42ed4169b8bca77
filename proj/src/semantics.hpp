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
#include <map>
#include <optional>
#include <string>

#include "formula.hpp"

namespace propcalc {

// Truth assignment for variables. Must cover every variable of a formula
// before that formula can be evaluated.
using Valuation = std::map<std::string, bool>;

// A variable queried during evaluation has no assigned value.
class EvalError : public Error {
 public:
  using Error::Error;
};

// Distinct-variable count above the exhaustive-enumeration bound.
class LimitError : public Error {
 public:
  using Error::Error;
};

// Exhaustive enumeration stays desk-scale up to this many distinct variables.
inline constexpr std::size_t kMaxOracleVariables = 24;

// Classical truth tables; -> is material implication. Both operands of a
// binary connective are evaluated (no short-circuit), so the error names the
// leftmost unassigned variable.
bool evaluate(const Formula& f, const Valuation& v);

// True iff f holds under all 2^k valuations of its k variables.
bool is_tautology(const Formula& f);

// First falsifying valuation in lexicographic order (variables sorted by
// name, false before true), or nullopt if f is a tautology. Deterministic:
// equal formulas yield equal valuations.
std::optional<Valuation> find_counterexample(const Formula& f);

// "{A:false, B:true}" -- entries sorted by variable name.
std::string format_valuation(const Valuation& v);

}  // namespace propcalc
