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

#include "derived.hpp"

#include <cassert>
#include <utility>

namespace propcalc {

namespace {

// Appends steps and keeps modus ponens bookkeeping out of the synthesizers.
// Only the two kernel step constructors are used.
class Builder {
 public:
  std::size_t add_axiom(Schema s, const Binding& binding) {
    steps_.push_back(ProofStep::axiom_instance(s, binding));
    return steps_.size() - 1;
  }

  // Derives the step formula from the cited major premise.
  std::size_t add_mp(std::size_t minor, std::size_t major) {
    const Formula& maj = steps_.at(major).formula();
    if (maj.kind() != Formula::Kind::Impl ||
        maj.left() != steps_.at(minor).formula())
      throw SynthError("internal: modus ponens premises do not line up");
    steps_.push_back(ProofStep::modus_ponens(minor, major, maj.right()));
    return steps_.size() - 1;
  }

  // Appends a whole proof, shifting its internal indices; returns the index
  // of its final step.
  std::size_t splice(const Proof& p) {
    const std::size_t offset = steps_.size();
    for (const ProofStep& st : p.steps()) {
      if (st.kind() == ProofStep::Kind::ModusPonens)
        steps_.push_back(ProofStep::modus_ponens(st.minor() + offset,
                                                 st.major() + offset,
                                                 st.formula()));
      else
        steps_.push_back(st);
    }
    return steps_.size() - 1;
  }

  Proof take() {
    Formula conclusion = steps_.back().formula();
    return Proof(std::move(steps_), std::move(conclusion));
  }

 private:
  std::vector<ProofStep> steps_;
};

void require_checked(const Proof& p, const char* op) {
  const CheckResult r = check(p);
  if (!r.ok)
    throw SynthError(std::string(op) + ": input proof fails check at step " +
                     std::to_string(r.step) + ": " + r.message);
}

// The conclusion split into antecedent and consequent.
std::pair<Formula, Formula> impl_parts(const Proof& p, const char* op) {
  const Formula& c = p.conclusion();
  if (c.kind() != Formula::Kind::Impl)
    throw SynthError(std::string(op) + ": input conclusion '" + to_string(c) +
                     "' is not an implication");
  return {c.left(), c.right()};
}

// Syllogism body without revalidating the inputs; used on proofs this
// module built itself.
Proof syll_core(const Proof& xy, const Proof& yz) {
  const Formula x = xy.conclusion().left();
  const Formula y = xy.conclusion().right();
  const Formula z = yz.conclusion().right();
  assert(yz.conclusion().left() == y);
  Builder b;
  const std::size_t i1 = b.splice(xy);
  const std::size_t i2 = b.splice(yz);
  const std::size_t s1 = b.add_axiom(Schema::Ia, {{"A", yz.conclusion()}, {"B", x}});
  const std::size_t s2 = b.add_mp(i2, s1);  // X -> (Y -> Z)
  const std::size_t s3 = b.add_axiom(Schema::Ib, {{"A", x}, {"B", y}, {"C", z}});
  const std::size_t s4 = b.add_mp(s2, s3);  // (X -> Y) -> (X -> Z)
  b.add_mp(i1, s4);                         // X -> Z
  return b.take();
}

// Two-proof core of theorem_conj: from X1 -> Y1 and X2 -> Y2, derives
// X1 & X2 -> Y1 & Y2 via II.a/II.b projections and a II.c instance.
Proof conj_pair(const Proof& pa, const Proof& pb) {
  const Formula x1 = pa.conclusion().left(), y1 = pa.conclusion().right();
  const Formula x2 = pb.conclusion().left(), y2 = pb.conclusion().right();
  const Proof q1 = syll_core(axiom_proof(Schema::IIa, {{"A", x1}, {"B", x2}}), pa);
  const Proof q2 = syll_core(axiom_proof(Schema::IIb, {{"A", x1}, {"B", x2}}), pb);
  Builder b;
  const std::size_t i1 = b.splice(q1);
  const std::size_t i2 = b.splice(q2);
  const std::size_t s = b.add_axiom(
      Schema::IIc, {{"A", Formula::conj(x1, x2)}, {"B", y1}, {"C", y2}});
  const std::size_t m1 = b.add_mp(i1, s);
  b.add_mp(i2, m1);
  return b.take();
}

// Two-proof core of theorem_disj: X1 | X2 -> Y1 | Y2 via III.a/III.b
// injections and a III.c instance.
Proof disj_pair(const Proof& pa, const Proof& pb) {
  const Formula x1 = pa.conclusion().left(), y1 = pa.conclusion().right();
  const Formula x2 = pb.conclusion().left(), y2 = pb.conclusion().right();
  const Proof q1 = syll_core(pa, axiom_proof(Schema::IIIa, {{"A", y1}, {"B", y2}}));
  const Proof q2 = syll_core(pb, axiom_proof(Schema::IIIb, {{"A", y1}, {"B", y2}}));
  Builder b;
  const std::size_t i1 = b.splice(q1);
  const std::size_t i2 = b.splice(q2);
  const std::size_t s = b.add_axiom(
      Schema::IIIc, {{"A", x1}, {"B", x2}, {"C", Formula::disj(y1, y2)}});
  const std::size_t m1 = b.add_mp(i1, s);
  b.add_mp(i2, m1);
  return b.take();
}

// From proofs of A1 -> D, ..., An -> D (same D), derives
// (A1 | ... | An) -> D by a III.c cascade up the disjunction spine.
Proof disj_cases(std::span<const Proof> qs) {
  assert(!qs.empty());
  if (qs.size() == 1) return qs[0];
  const Formula d = qs[0].conclusion().right();
  Builder b;
  std::size_t acc = b.splice(qs[0]);
  Formula chain = qs[0].conclusion().left();
  for (std::size_t k = 1; k < qs.size(); ++k) {
    const Formula ak = qs[k].conclusion().left();
    const std::size_t qk = b.splice(qs[k]);
    const std::size_t s =
        b.add_axiom(Schema::IIIc, {{"A", chain}, {"B", ak}, {"C", d}});
    const std::size_t m1 = b.add_mp(acc, s);
    acc = b.add_mp(qk, m1);
    chain = Formula::disj(std::move(chain), ak);
  }
  return b.take();
}

}  // namespace

Proof axiom_proof(Schema s, const Binding& binding) {
  ProofStep step = ProofStep::axiom_instance(s, binding);
  Formula conclusion = step.formula();
  std::vector<ProofStep> steps;
  steps.push_back(std::move(step));
  return Proof(std::move(steps), std::move(conclusion));
}

Proof identity(const Formula& a) {
  const Formula aa = Formula::impl(a, a);
  Builder b;
  const std::size_t s1 = b.add_axiom(Schema::Ib, {{"A", a}, {"B", aa}, {"C", a}});
  const std::size_t s2 = b.add_axiom(Schema::Ia, {{"A", a}, {"B", aa}});
  const std::size_t s3 = b.add_mp(s2, s1);  // (a -> (a -> a)) -> (a -> a)
  const std::size_t s4 = b.add_axiom(Schema::Ia, {{"A", a}, {"B", a}});
  b.add_mp(s4, s3);  // a -> a
  return b.take();
}

Proof syllogism(const Proof& xy, const Proof& yz) {
  require_checked(xy, "syllogism");
  require_checked(yz, "syllogism");
  const auto [x, y1] = impl_parts(xy, "syllogism");
  const auto [y2, z] = impl_parts(yz, "syllogism");
  if (y1 != y2)
    throw SynthError("syllogism: middle formulas differ: '" + to_string(y1) +
                     "' vs '" + to_string(y2) + "'");
  return syll_core(xy, yz);
}

namespace {

void require_bridges(std::span<const Proof> ps, const char* op) {
  if (ps.empty()) throw ArgError(std::string(op) + ": empty proof list");
  for (const Proof& p : ps) {
    require_checked(p, op);
    impl_parts(p, op);
  }
}

}  // namespace

Proof theorem_conj(std::span<const Proof> ps) {
  require_bridges(ps, "theorem_conj");
  Proof acc = ps[0];
  for (std::size_t k = 1; k < ps.size(); ++k) acc = conj_pair(acc, ps[k]);
  return acc;
}

Proof theorem_disj(std::span<const Proof> ps) {
  require_bridges(ps, "theorem_disj");
  Proof acc = ps[0];
  for (std::size_t k = 1; k < ps.size(); ++k) acc = disj_pair(acc, ps[k]);
  return acc;
}

Proof lemma_idem_disj(const Formula& b, std::size_t n) {
  if (n == 0) throw ArgError("lemma_idem_disj: n must be at least 1");
  Proof id = identity(b);
  if (n == 1) return id;
  Builder bl;
  const std::size_t e = bl.splice(id);  // b -> b
  std::size_t prev = e;                 // proof of chain -> b
  Formula chain = b;
  for (std::size_t k = 1; k < n; ++k) {
    const std::size_t s =
        bl.add_axiom(Schema::IIIc, {{"A", chain}, {"B", b}, {"C", b}});
    const std::size_t m1 = bl.add_mp(prev, s);
    prev = bl.add_mp(e, m1);  // (chain | b) -> b
    chain = Formula::disj(std::move(chain), b);
  }
  return bl.take();
}

Proof projection(std::span<const Formula> as, std::size_t i) {
  const std::size_t n = as.size();
  if (n == 0) throw ArgError("projection: empty formula list");
  if (i < 1 || i > n)
    throw ArgError("projection: index " + std::to_string(i) +
                   " out of range 1.." + std::to_string(n));
  if (n == 1) return identity(as[0]);
  const Formula prefix = conj_n(as.first(n - 1));
  if (i == n)
    return axiom_proof(Schema::IIb, {{"A", prefix}, {"B", as[n - 1]}});
  // Strip the last conjunct, then keep projecting inside the prefix.
  Proof down = axiom_proof(Schema::IIa, {{"A", prefix}, {"B", as[n - 1]}});
  if (n - 1 == 1) return down;  // prefix is as[0] itself
  return syll_core(down, projection(as.first(n - 1), i));
}

Proof injection(std::span<const Formula> as, std::size_t i) {
  const std::size_t n = as.size();
  if (n == 0) throw ArgError("injection: empty formula list");
  if (i < 1 || i > n)
    throw ArgError("injection: index " + std::to_string(i) +
                   " out of range 1.." + std::to_string(n));
  if (n == 1) return identity(as[0]);
  const Formula prefix = disj_n(as.first(n - 1));
  if (i == n)
    return axiom_proof(Schema::IIIb, {{"A", prefix}, {"B", as[n - 1]}});
  // Inject into the prefix, then widen by the last disjunct.
  Proof up = axiom_proof(Schema::IIIa, {{"A", prefix}, {"B", as[n - 1]}});
  if (n - 1 == 1) return up;  // prefix is as[0] itself
  return syll_core(injection(as.first(n - 1), i), up);
}

namespace {

// Shared validation for the common-consequent consequences; returns B.
Formula require_common_consequent(std::span<const Proof> ps, const char* op) {
  require_bridges(ps, op);
  const Formula target = ps[0].conclusion().right();
  for (std::size_t k = 1; k < ps.size(); ++k) {
    if (ps[k].conclusion().right() != target)
      throw SynthError(std::string(op) + ": consequents differ: '" +
                       to_string(target) + "' vs '" +
                       to_string(ps[k].conclusion().right()) + "'");
  }
  return target;
}

Formula require_common_antecedent(std::span<const Proof> ps, const char* op) {
  require_bridges(ps, op);
  const Formula source = ps[0].conclusion().left();
  for (std::size_t k = 1; k < ps.size(); ++k) {
    if (ps[k].conclusion().left() != source)
      throw SynthError(std::string(op) + ": antecedents differ: '" +
                       to_string(source) + "' vs '" +
                       to_string(ps[k].conclusion().left()) + "'");
  }
  return source;
}

}  // namespace

Proof cons_conj_to_common(std::span<const Proof> ps) {
  const Formula target = require_common_consequent(ps, "cons_conj_to_common");
  if (ps.size() == 1) return ps[0];
  const Proof lifted = theorem_conj(ps);  // conj(A) -> B & ... & B
  const std::vector<Formula> repeated(ps.size(), target);
  return syll_core(lifted, projection(repeated, 1));
}

Proof cons_disj_to_common(std::span<const Proof> ps) {
  const Formula target = require_common_consequent(ps, "cons_disj_to_common");
  if (ps.size() == 1) return ps[0];
  const Proof lifted = theorem_disj(ps);  // disj(A) -> B | ... | B
  return syll_core(lifted, lemma_idem_disj(target, ps.size()));
}

Proof cons_common_to_conj(std::span<const Proof> ps) {
  const Formula source = require_common_antecedent(ps, "cons_common_to_conj");
  if (ps.size() == 1) return ps[0];
  Builder b;
  std::size_t acc = b.splice(ps[0]);
  Formula collected = ps[0].conclusion().right();
  for (std::size_t k = 1; k < ps.size(); ++k) {
    const Formula bk = ps[k].conclusion().right();
    const std::size_t pk = b.splice(ps[k]);
    const std::size_t s = b.add_axiom(
        Schema::IIc, {{"A", source}, {"B", collected}, {"C", bk}});
    const std::size_t m1 = b.add_mp(acc, s);
    acc = b.add_mp(pk, m1);  // A -> collected & bk
    collected = Formula::conj(std::move(collected), bk);
  }
  return b.take();
}

Proof cons_common_to_disj(std::span<const Proof> ps) {
  require_common_antecedent(ps, "cons_common_to_disj");
  if (ps.size() == 1) return ps[0];
  std::vector<Formula> bs;
  bs.reserve(ps.size());
  for (const Proof& p : ps) bs.push_back(p.conclusion().right());
  // One bridge suffices: lift the first input into the full disjunction.
  return syll_core(ps[0], injection(bs, 1));
}

Proof idempotence_proof(NaryConn conn, Direction dir, const Formula& a,
                        std::size_t n) {
  if (n == 0) throw ArgError("idempotence_proof: n must be at least 1");
  const std::vector<Proof> ids(n, identity(a));
  if (conn == NaryConn::Conj && dir == Direction::Elim)
    return cons_conj_to_common(ids);
  if (conn == NaryConn::Disj && dir == Direction::Elim)
    return cons_disj_to_common(ids);
  if (conn == NaryConn::Conj && dir == Direction::Intro)
    return cons_common_to_conj(ids);
  return cons_common_to_disj(ids);
}

Proof conj_implies_disj(std::span<const Formula> as, Method m) {
  if (as.empty()) throw ArgError("conj_implies_disj: empty formula list");
  if (as.size() == 1) return identity(as[0]);
  if (m == Method::One)
    return syll_core(projection(as, 1), injection(as, 1));
  std::vector<Proof> qs;
  qs.reserve(as.size());
  for (std::size_t i = 1; i <= as.size(); ++i) qs.push_back(injection(as, i));
  return cons_conj_to_common(qs);
}

Proof mixed_conj_to_disj(std::span<const Proof> ps, Method m) {
  require_bridges(ps, "mixed_conj_to_disj");
  if (ps.size() == 1) return ps[0];
  std::vector<Formula> as, bs;
  as.reserve(ps.size());
  bs.reserve(ps.size());
  for (const Proof& p : ps) {
    as.push_back(p.conclusion().left());
    bs.push_back(p.conclusion().right());
  }
  if (m == Method::One)
    return syll_core(theorem_conj(ps), conj_implies_disj(bs));
  return syll_core(conj_implies_disj(as), theorem_disj(ps));
}

// ---------------------------------------------------------------------------
// Shape problems

namespace {

// conj(antecedents) -> consequents[j-1], through the chosen bridge.
Proof reach_from_conj(const ShapeProblem& prob, std::size_t i, std::size_t j) {
  const Proof& bridge = prob.bridges.at({i, j});
  if (prob.antecedents.size() == 1) return bridge;
  return syll_core(projection(prob.antecedents, i), bridge);
}

// antecedents[i-1] -> disj(consequents), through the chosen bridge.
Proof reach_to_disj(const ShapeProblem& prob, std::size_t i, std::size_t j) {
  const Proof& bridge = prob.bridges.at({i, j});
  if (prob.consequents.size() == 1) return bridge;
  return syll_core(bridge, injection(prob.consequents, j));
}

ShapeOutcome shape_failure(std::string condition,
                           std::vector<std::pair<std::size_t, std::size_t>> missing) {
  ShapeOutcome out;
  std::string detail;
  for (const auto& [i, j] : missing) {
    if (!detail.empty()) detail += "; ";
    if (i == 0)
      detail += "no bridge for consequent j=" + std::to_string(j);
    else if (j == 0)
      detail += "no bridge for antecedent i=" + std::to_string(i);
    else
      detail += "no bridge for (i=" + std::to_string(i) +
                ", j=" + std::to_string(j) + ")";
  }
  out.failure = "unsatisfied condition: " + std::move(condition) + " (" +
                detail + ")";
  out.missing = std::move(missing);
  return out;
}

}  // namespace

ShapeOutcome shape_prover(const ShapeProblem& prob) {
  const std::size_t p = prob.antecedents.size();
  const std::size_t r = prob.consequents.size();
  if (p == 0 || r == 0)
    throw ArgError("shape_prover: empty antecedent or consequent list");
  for (const auto& [ij, bridge] : prob.bridges) {
    const auto& [i, j] = ij;
    if (i < 1 || i > p || j < 1 || j > r)
      throw ArgError("shape_prover: bridge (" + std::to_string(i) + ", " +
                     std::to_string(j) + ") out of range");
    require_checked(bridge, "shape_prover");
    const Formula want =
        Formula::impl(prob.antecedents[i - 1], prob.consequents[j - 1]);
    if (bridge.conclusion() != want)
      throw SynthError("shape_prover: bridge (" + std::to_string(i) + ", " +
                       std::to_string(j) + ") concludes '" +
                       to_string(bridge.conclusion()) + "', expected '" +
                       to_string(want) + "'");
  }

  // Smallest satisfying index, for reproducible output.
  auto first_i_for = [&](std::size_t j) -> std::size_t {
    for (std::size_t i = 1; i <= p; ++i)
      if (prob.bridges.count({i, j})) return i;
    return 0;
  };
  auto first_j_for = [&](std::size_t i) -> std::size_t {
    for (std::size_t j = 1; j <= r; ++j)
      if (prob.bridges.count({i, j})) return j;
    return 0;
  };
  auto missing_consequents = [&] {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t j = 1; j <= r; ++j)
      if (first_i_for(j) == 0) out.emplace_back(0, j);
    return out;
  };
  auto missing_antecedents = [&] {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 1; i <= p; ++i)
      if (first_j_for(i) == 0) out.emplace_back(i, 0);
    return out;
  };

  const bool conj_ante = prob.antecedent_connective == NaryConn::Conj;
  const bool conj_cons = prob.consequent_connective == NaryConn::Conj;
  ShapeOutcome out;

  if (conj_ante && conj_cons) {
    auto missing = missing_consequents();
    if (!missing.empty())
      return shape_failure("every consequent needs a bridge", std::move(missing));
    std::vector<Proof> qs;
    for (std::size_t j = 1; j <= r; ++j)
      qs.push_back(reach_from_conj(prob, first_i_for(j), j));
    out.proof = cons_common_to_conj(qs);
    return out;
  }

  if (!conj_ante && !conj_cons) {
    auto missing = missing_antecedents();
    if (!missing.empty())
      return shape_failure("every antecedent needs a bridge", std::move(missing));
    std::vector<Proof> qs;
    for (std::size_t i = 1; i <= p; ++i)
      qs.push_back(reach_to_disj(prob, i, first_j_for(i)));
    out.proof = disj_cases(qs);
    return out;
  }

  if (conj_ante && !conj_cons) {
    if (missing_consequents().empty()) {
      std::vector<Proof> qs;
      for (std::size_t j = 1; j <= r; ++j)
        qs.push_back(reach_from_conj(prob, first_i_for(j), j));
      out.proof = cons_common_to_disj(qs);
      return out;
    }
    if (missing_antecedents().empty()) {
      std::vector<Proof> qs;
      for (std::size_t i = 1; i <= p; ++i)
        qs.push_back(reach_to_disj(prob, i, first_j_for(i)));
      out.proof = cons_conj_to_common(qs);
      return out;
    }
    auto missing = missing_consequents();
    for (auto& m : missing_antecedents()) missing.push_back(m);
    return shape_failure(
        "every consequent needs a bridge, or every antecedent needs a bridge",
        std::move(missing));
  }

  // Disjunctive antecedent with conjunctive consequent: every case must
  // reach every conjunct, so the whole bridge matrix is required.
  std::vector<std::pair<std::size_t, std::size_t>> missing;
  for (std::size_t i = 1; i <= p; ++i)
    for (std::size_t j = 1; j <= r; ++j)
      if (!prob.bridges.count({i, j})) missing.emplace_back(i, j);
  if (!missing.empty())
    return shape_failure("every (antecedent, consequent) pair needs a bridge",
                         std::move(missing));
  std::vector<Proof> qs;
  for (std::size_t i = 1; i <= p; ++i) {
    std::vector<Proof> row;
    for (std::size_t j = 1; j <= r; ++j) row.push_back(prob.bridges.at({i, j}));
    qs.push_back(cons_common_to_conj(row));  // Ai -> conj(B)
  }
  out.proof = disj_cases(qs);
  return out;
}

// ---------------------------------------------------------------------------
// Worked examples

namespace {

Formula V(const char* name) { return Formula::var(name); }

}  // namespace

Proof example_i() {
  const Formula a = V("A"), b = V("B");
  const std::vector<Proof> ps = {
      axiom_proof(Schema::IIIa, {{"A", a}, {"B", b}}),  // A -> A | B
      axiom_proof(Schema::Ia, {{"A", a}, {"B", b}})};   // A -> (B -> A)
  return cons_common_to_conj(ps);
}

Proof example_i_via_theorem() {
  const Formula a = V("A"), b = V("B");
  const std::vector<Proof> ps = {
      axiom_proof(Schema::IIIa, {{"A", a}, {"B", b}}),
      axiom_proof(Schema::Ia, {{"A", a}, {"B", b}})};
  const Proof doubled = theorem_conj(ps);  // A & A -> (A | B) & (B -> A)
  return syll_core(idempotence_proof(NaryConn::Conj, Direction::Intro, a, 2),
                   doubled);
}

Proof example_ii() {
  const Formula a = V("A"), b = V("B"), c = V("C");
  const std::vector<Formula> ab = {a, b};
  const std::vector<Proof> ps = {conj_implies_disj(ab),  // A & B -> A | B
                                 identity(c)};           // C -> C
  return theorem_disj(ps);
}

Proof example_iii_common_antecedent() {
  const std::vector<Formula> ac = {V("A"), V("C")};
  const std::vector<Proof> ps = {projection(ac, 1),   // A & C -> A
                                 projection(ac, 2)};  // A & C -> C
  return cons_common_to_disj(ps);
}

Proof example_iii_common_consequent() {
  const std::vector<Formula> ac = {V("A"), V("C")};
  const std::vector<Proof> ps = {injection(ac, 1),   // A -> A | C
                                 injection(ac, 2)};  // C -> A | C
  return cons_conj_to_common(ps);
}

std::map<std::string, Proof> example_gallery() {
  std::map<std::string, Proof> gallery;
  gallery.emplace("i", example_i());
  gallery.emplace("ii", example_ii());
  gallery.emplace("iii-M1", example_iii_common_antecedent());
  gallery.emplace("iii-M2", example_iii_common_consequent());
  return gallery;
}

}  // namespace propcalc
