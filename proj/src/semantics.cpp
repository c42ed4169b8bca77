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

#include "semantics.hpp"

#include <bit>
#include <cstdint>
#include <vector>

namespace propcalc {

bool evaluate(const Formula& f, const Valuation& v) {
  switch (f.kind()) {
    case Formula::Kind::Var: {
      auto it = v.find(f.var_name());
      if (it == v.end())
        throw EvalError("unassigned variable '" + f.var_name() + "'");
      return it->second;
    }
    case Formula::Kind::Not:
      return !evaluate(f.operand(), v);
    case Formula::Kind::And: {
      const bool l = evaluate(f.left(), v);
      const bool r = evaluate(f.right(), v);
      return l && r;
    }
    case Formula::Kind::Or: {
      const bool l = evaluate(f.left(), v);
      const bool r = evaluate(f.right(), v);
      return l || r;
    }
    case Formula::Kind::Impl: {
      const bool l = evaluate(f.left(), v);
      const bool r = evaluate(f.right(), v);
      return !l || r;
    }
  }
  throw EvalError("malformed formula");
}

namespace {

// The exhaustive scan flattens the formula into a postfix program over
// variable positions and evaluates 64 valuations per pass, one per bit
// lane. Valuation m assigns variable i (in sorted order) the bit (k-1-i)
// of m, so scanning m upward walks valuations in lexicographic order with
// false before true; within a 64-lane word, lane l stands for valuation
// block*64 + l.
struct Instr {
  enum class Op : unsigned char { Var, Not, And, Or, Impl };
  Op op;
  std::uint32_t var = 0;  // Op::Var only
};

void compile(const Formula& f, const std::map<std::string, std::uint32_t>& index,
             std::vector<Instr>& out) {
  switch (f.kind()) {
    case Formula::Kind::Var:
      out.push_back({Instr::Op::Var, index.at(f.var_name())});
      return;
    case Formula::Kind::Not:
      compile(f.operand(), index, out);
      out.push_back({Instr::Op::Not});
      return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Impl: {
      compile(f.left(), index, out);
      compile(f.right(), index, out);
      const auto op = f.kind() == Formula::Kind::And  ? Instr::Op::And
                      : f.kind() == Formula::Kind::Or ? Instr::Op::Or
                                                      : Instr::Op::Impl;
      out.push_back({op});
      return;
    }
  }
}

std::optional<Valuation> first_falsifying(const Formula& f) {
  const std::vector<std::string> vars = variables(f);
  const std::size_t k = vars.size();
  if (k > kMaxOracleVariables)
    throw LimitError("formula has " + std::to_string(k) +
                     " variables; the exhaustive oracle is bounded at " +
                     std::to_string(kMaxOracleVariables));
  if (k == 0) {
    if (!evaluate(f, {})) return Valuation{};
    return std::nullopt;
  }

  std::map<std::string, std::uint32_t> index;
  for (std::size_t i = 0; i < k; ++i)
    index.emplace(vars[i], static_cast<std::uint32_t>(i));
  std::vector<Instr> program;
  compile(f, index, program);

  // Lane value of bit position p of the valuation counter, p < 6.
  constexpr std::uint64_t kLaneBits[6] = {
      0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
      0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull};

  const std::uint64_t total = std::uint64_t{1} << k;
  const std::uint64_t blocks = (total + 63) / 64;
  std::vector<std::uint64_t> stack(program.size() + 1);

  for (std::uint64_t block = 0; block < blocks; ++block) {
    std::size_t sp = 0;
    for (const Instr& ins : program) {
      switch (ins.op) {
        case Instr::Op::Var: {
          const std::size_t p = k - 1 - ins.var;
          stack[sp++] = p < 6 ? kLaneBits[p]
                              : (((block >> (p - 6)) & 1ull) ? ~0ull : 0ull);
          break;
        }
        case Instr::Op::Not:
          stack[sp - 1] = ~stack[sp - 1];
          break;
        case Instr::Op::And:
          --sp;
          stack[sp - 1] &= stack[sp];
          break;
        case Instr::Op::Or:
          --sp;
          stack[sp - 1] |= stack[sp];
          break;
        case Instr::Op::Impl:
          --sp;
          stack[sp - 1] = ~stack[sp - 1] | stack[sp];
          break;
      }
    }
    std::uint64_t result = stack[0];
    if (total - block * 64 < 64)  // partial final block: spare lanes pass
      result |= ~0ull << (total - block * 64);
    if (result != ~0ull) {
      const unsigned lane = static_cast<unsigned>(std::countr_one(result));
      const std::uint64_t m = block * 64 + lane;
      Valuation v;
      for (std::size_t i = 0; i < k; ++i)
        v.emplace(vars[i], ((m >> (k - 1 - i)) & 1u) != 0);
      return v;
    }
  }
  return std::nullopt;
}

}  // namespace

bool is_tautology(const Formula& f) {
  return !first_falsifying(f).has_value();
}

std::optional<Valuation> find_counterexample(const Formula& f) {
  return first_falsifying(f);
}

std::string format_valuation(const Valuation& v) {
  std::string out = "{";
  bool first = true;
  for (const auto& [name, value] : v) {
    if (!first) out += ", ";
    first = false;
    out += name;
    out += ':';
    out += value ? "true" : "false";
  }
  out += '}';
  return out;
}

}  // namespace propcalc
