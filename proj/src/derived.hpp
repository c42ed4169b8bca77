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

// Proof synthesizers. Every function here returns an explicit kernel proof
// that passes `check`; none of them extend the kernel. Hypotheses are taken
// as whole closed proofs and spliced in with their step indices shifted, so
// the kernel never sees an assumption.

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kernel.hpp"

namespace propcalc {

// Synthesis precondition failure: an input proof does not check, or the
// input shapes do not line up.
class SynthError : public Error {
 public:
  using Error::Error;
};

// One-step proof of a schema instance.
Proof axiom_proof(Schema s, const Binding& binding = {});

// a -> a, the standard five-step derivation from I.a and I.b.
Proof identity(const Formula& a);

// From X -> Y and Y -> Z, derives X -> Z (five appended steps: I.a, MP,
// I.b, MP, MP).
Proof syllogism(const Proof& xy, const Proof& yz);

// From proofs of A1 -> B1, ..., An -> Bn:
//   theorem_conj: (A1 & ... & An) -> (B1 & ... & Bn)
//   theorem_disj: (A1 | ... | An) -> (B1 | ... | Bn)
// Built by induction on n; the two-proof core uses II.c (resp. III.c) with
// the projections II.a/II.b (resp. injections III.a/III.b).
Proof theorem_conj(std::span<const Proof> ps);
Proof theorem_disj(std::span<const Proof> ps);

// (b | ... | b) -> b with n disjuncts, n >= 1.
Proof lemma_idem_disj(const Formula& b, std::size_t n);

// conj_n(as) -> as[i]  and  as[i] -> disj_n(as); i is 1-based.
Proof projection(std::span<const Formula> as, std::size_t i);
Proof injection(std::span<const Formula> as, std::size_t i);

// From proofs of A1 -> B, ..., An -> B (same B):
//   cons_conj_to_common: (A1 & ... & An) -> B
//   cons_disj_to_common: (A1 | ... | An) -> B
Proof cons_conj_to_common(std::span<const Proof> ps);
Proof cons_disj_to_common(std::span<const Proof> ps);

// From proofs of A -> B1, ..., A -> Bn (same A):
//   cons_common_to_conj: A -> (B1 & ... & Bn)
//   cons_common_to_disj: A -> (B1 | ... | Bn)
Proof cons_common_to_conj(std::span<const Proof> ps);
Proof cons_common_to_disj(std::span<const Proof> ps);

enum class NaryConn { Conj, Disj };
enum class Direction { Elim, Intro };

// The idempotence family over the n-fold connective, n >= 1:
//   (Conj, Elim):  (a & ... & a) -> a      (Conj, Intro): a -> (a & ... & a)
//   (Disj, Elim):  (a | ... | a) -> a      (Disj, Intro): a -> (a | ... | a)
Proof idempotence_proof(NaryConn conn, Direction dir, const Formula& a,
                        std::size_t n);

// Alternative constructions of the same conclusion; both are always
// available and must agree on the concluded formula.
enum class Method { One, Two };

// conj_n(as) -> disj_n(as).
//   Method One: projection to as[1], then injection of as[1].
//   Method Two: inject every element, then collect the common consequent.
Proof conj_implies_disj(std::span<const Formula> as, Method m = Method::One);

// From proofs of Ai -> Bi: conj_n(A) -> disj_n(B).
//   Method One: theorem_conj, then conj_implies_disj over the Bs.
//   Method Two: conj_implies_disj over the As, then theorem_disj.
Proof mixed_conj_to_disj(std::span<const Proof> ps, Method m = Method::One);

// A goal (A1 o ... o Ap) -> (B1 o' ... o' Br) with o, o' in {&, |}, to be
// assembled from pairwise bridge proofs of Ai -> Bj.
struct ShapeProblem {
  std::vector<Formula> antecedents;
  std::vector<Formula> consequents;
  NaryConn antecedent_connective = NaryConn::Conj;
  NaryConn consequent_connective = NaryConn::Conj;
  // 1-based (i, j); each proof must conclude exactly antecedents[i-1] ->
  // consequents[j-1] and pass check.
  std::map<std::pair<std::size_t, std::size_t>, Proof> bridges;
};

struct ShapeOutcome {
  std::optional<Proof> proof;
  // When no strategy applies: the unsatisfied condition plus the missing
  // bridge slots. In `missing`, (0, j) means "any i for consequent j" and
  // (i, 0) means "any j for antecedent i".
  std::string failure;
  std::vector<std::pair<std::size_t, std::size_t>> missing;
  bool ok() const { return proof.has_value(); }
};

// Strategy per connective pair, with deterministic bridge selection
// (smallest satisfying index):
//   & -> & : needs a bridge for every consequent; projection + bridge per
//            consequent, collected by cons_common_to_conj.
//   | -> | : needs a bridge for every antecedent; bridge + injection per
//            antecedent, assembled by a III.c cascade.
//   & -> | : either of the above conditions suffices; the
//            every-consequent route is tried first.
//   | -> & : needs a bridge for every (i, j) pair.
// Malformed problems (empty lists, bad indices, bridges that do not check
// or conclude the wrong formula) raise errors instead of a failure report.
ShapeOutcome shape_prover(const ShapeProblem& problem);

// Worked examples; keys "i", "ii", "iii-M1", "iii-M2".
//   i      A -> (A | B) & (B -> A)
//   ii     (A & B) | C -> (A | B) | C
//   iii    A & C -> A | C, by two routes with equal conclusions
Proof example_i();
Proof example_i_via_theorem();  // same conclusion through theorem_conj + idempotence
Proof example_ii();
Proof example_iii_common_antecedent();
Proof example_iii_common_consequent();
std::map<std::string, Proof> example_gallery();

}  // namespace propcalc
