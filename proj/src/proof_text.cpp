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

#include "proof_text.hpp"

#include <cctype>
#include <optional>
#include <utility>
#include <vector>

namespace propcalc {

ProofTextError::ProofTextError(const std::string& what, std::size_t line,
                               std::size_t step)
    : Error(step > 0
                ? "proof text line " + std::to_string(line) + " (step " +
                      std::to_string(step) + "): " + what
                : "proof text line " + std::to_string(line) + ": " + what),
      line_(line),
      step_(step) {}

std::string write_proof_text(const Proof& p) {
  std::string out;
  const auto& steps = p.steps();
  for (std::size_t k = 0; k < steps.size(); ++k) {
    const ProofStep& st = steps[k];
    out += std::to_string(k + 1);
    out += " | ";
    out += to_string(st.formula());
    out += " | ";
    if (st.kind() == ProofStep::Kind::Axiom) {
      out += "AX ";
      out += schema_id(st.schema());
      out += " {";
      bool first = true;
      for (const std::string& name : schema_metavariables(st.schema())) {
        if (!first) out += "; ";
        first = false;
        out += name;
        out += ":=";
        out += to_string(st.binding().at(name));
      }
      out += '}';
    } else {
      out += "MP ";
      out += std::to_string(st.minor() + 1);
      out += ' ';
      out += std::to_string(st.major() + 1);
    }
    out += '\n';
  }
  out += "QED ";
  out += to_string(p.conclusion());
  out += '\n';
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

std::optional<std::size_t> parse_positive(std::string_view s) {
  s = trim(s);
  if (s.empty() || s.size() > 9) return std::nullopt;
  std::size_t value = 0;
  for (char c : s) {
    if (c < '0' || c > '9') return std::nullopt;
    value = value * 10 + static_cast<std::size_t>(c - '0');
  }
  if (value == 0) return std::nullopt;
  return value;
}

Formula parse_formula_field(std::string_view field, std::size_t line,
                            std::size_t step) {
  try {
    return parse(field);
  } catch (const ParseError& e) {
    throw ProofTextError(std::string("bad formula: ") + e.what(), line, step);
  }
}

Binding parse_binding_block(std::string_view block, std::size_t line,
                            std::size_t step) {
  Binding binding;
  std::size_t start = 0;
  while (start <= block.size()) {
    std::size_t end = block.find(';', start);
    if (end == std::string_view::npos) end = block.size();
    std::string_view entry = trim(block.substr(start, end - start));
    start = end + 1;
    if (entry.empty()) {
      if (end == block.size()) break;
      continue;
    }
    std::size_t sep = entry.find(":=");
    if (sep == std::string_view::npos)
      throw ProofTextError("binding entry is not of the form X:=formula", line,
                           step);
    std::string key(trim(entry.substr(0, sep)));
    if (key != "A" && key != "B" && key != "C")
      throw ProofTextError("unknown metavariable '" + key + "' in binding",
                           line, step);
    if (binding.count(key))
      throw ProofTextError("metavariable '" + key + "' bound twice", line, step);
    binding.emplace(key, parse_formula_field(entry.substr(sep + 2), line, step));
    if (end == block.size()) break;
  }
  return binding;
}

}  // namespace

Proof read_proof_text(std::string_view text) {
  std::vector<ProofStep> steps;
  std::optional<Formula> conclusion;
  std::size_t line_no = 0;
  std::size_t consumed = 0;

  while (consumed <= text.size()) {
    std::size_t eol = text.find('\n', consumed);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = trim(text.substr(consumed, eol - consumed));
    const bool at_end = eol >= text.size();
    consumed = eol + 1;
    ++line_no;
    if (line.empty()) {
      if (at_end) break;
      continue;
    }

    const std::size_t step_no = steps.size() + 1;
    if (conclusion.has_value())
      throw ProofTextError("content after the QED line", line_no, 0);

    if (line.size() >= 3 && line.substr(0, 3) == "QED" &&
        (line.size() == 3 ||
         std::isspace(static_cast<unsigned char>(line[3])))) {
      if (line.size() == 3)
        throw ProofTextError("QED line has no formula", line_no, 0);
      conclusion = parse_formula_field(line.substr(4), line_no, 0);
      if (at_end) break;
      continue;
    }

    // Step line: "<idx> | <formula> | <justification>".
    const std::size_t first_bar = line.find('|');
    if (first_bar == std::string_view::npos)
      throw ProofTextError("expected '|' after the step index", line_no, step_no);
    const auto idx = parse_positive(line.substr(0, first_bar));
    if (!idx)
      throw ProofTextError("malformed step index", line_no, step_no);
    if (*idx != step_no)
      throw ProofTextError("step index " + std::to_string(*idx) +
                               " out of order (expected " +
                               std::to_string(step_no) + ")",
                           line_no, step_no);

    if (line.back() == '}') {
      // Axiom line; the binding block is the last '{'...'}' span (formulas
      // cannot contain braces).
      const std::size_t brace = line.rfind('{');
      if (brace == std::string_view::npos || brace <= first_bar)
        throw ProofTextError("malformed axiom binding block", line_no, step_no);
      std::string_view head = line.substr(0, brace);
      const std::size_t just_bar = head.rfind('|');
      if (just_bar == std::string_view::npos || just_bar == first_bar)
        throw ProofTextError("expected '|' before the justification", line_no,
                             step_no);
      std::string_view just = trim(head.substr(just_bar + 1));
      if (just.size() < 3 || just.substr(0, 2) != "AX" ||
          !std::isspace(static_cast<unsigned char>(just[2])))
        throw ProofTextError("expected AX <schema-id> before the binding",
                             line_no, step_no);
      std::string_view id = trim(just.substr(3));
      const auto schema = schema_from_id(id);
      if (!schema)
        throw ProofTextError("unknown axiom schema '" + std::string(id) + "'",
                             line_no, step_no);
      Binding binding = parse_binding_block(
          line.substr(brace + 1, line.size() - brace - 2), line_no, step_no);
      ProofStep step = ProofStep::axiom_instance(*schema, binding);
      const Formula stated = parse_formula_field(
          line.substr(first_bar + 1, just_bar - first_bar - 1), line_no, step_no);
      if (stated != step.formula())
        throw ProofTextError(
            "formula is not the stated instance of axiom " + std::string(id),
            line_no, step_no);
      steps.push_back(std::move(step));
    } else {
      // Modus ponens line; the justification is everything after the last '|'.
      const std::size_t just_bar = line.rfind('|');
      if (just_bar == first_bar)
        throw ProofTextError("expected '|' before the justification", line_no,
                             step_no);
      std::string_view just = trim(line.substr(just_bar + 1));
      if (just.size() < 3 || just.substr(0, 2) != "MP" ||
          !std::isspace(static_cast<unsigned char>(just[2])))
        throw ProofTextError("expected MP <minor> <major> or AX ... {...}",
                             line_no, step_no);
      std::string_view args = trim(just.substr(3));
      const std::size_t space = args.find_first_of(" \t");
      if (space == std::string_view::npos)
        throw ProofTextError("modus ponens needs two step indices", line_no,
                             step_no);
      const auto minor = parse_positive(args.substr(0, space));
      const auto major = parse_positive(args.substr(space + 1));
      if (!minor || !major)
        throw ProofTextError("modus ponens indices must be positive integers",
                             line_no, step_no);
      const Formula stated = parse_formula_field(
          line.substr(first_bar + 1, just_bar - first_bar - 1), line_no, step_no);
      steps.push_back(ProofStep::modus_ponens(*minor - 1, *major - 1, stated));
    }
    if (at_end) break;
  }

  if (steps.empty())
    throw ProofTextError("proof text contains no steps", line_no, 0);
  if (!conclusion.has_value())
    throw ProofTextError(
        "missing QED line after step " + std::to_string(steps.size()), line_no,
        steps.size());
  return Proof(std::move(steps), std::move(*conclusion));
}

}  // namespace propcalc
