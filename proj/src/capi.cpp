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

#include "propcalc.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "derived.hpp"
#include "formula.hpp"
#include "kernel.hpp"
#include "proof_text.hpp"
#include "semantics.hpp"

struct propcalc_formula {
  propcalc::Formula value;
};

struct propcalc_proof {
  propcalc::Proof value;
};

struct propcalc_shape {
  propcalc::ShapeProblem value;
};

namespace {

thread_local std::string t_error;
thread_local size_t t_error_pos = 0;

propcalc_status set_error(const char* message, propcalc_status status) {
  t_error = message;
  t_error_pos = 0;
  return status;
}

template <typename Fn>
propcalc_status guarded(Fn&& fn) noexcept {
  t_error.clear();
  t_error_pos = 0;
  try {
    fn();
    return PROPCALC_OK;
  } catch (const propcalc::ParseError& e) {
    t_error = e.what();
    t_error_pos = e.position();
    return PROPCALC_ERR_PARSE;
  } catch (const propcalc::ProofTextError& e) {
    t_error = e.what();
    return PROPCALC_ERR_PARSE;
  } catch (const propcalc::EvalError& e) {
    t_error = e.what();
    return PROPCALC_ERR_EVAL;
  } catch (const propcalc::LimitError& e) {
    t_error = e.what();
    return PROPCALC_ERR_LIMIT;
  } catch (const propcalc::SynthError& e) {
    t_error = e.what();
    return PROPCALC_ERR_SYNTH;
  } catch (const propcalc::ArgError& e) {
    t_error = e.what();
    return PROPCALC_ERR_ARG;
  } catch (const std::bad_alloc&) {
    t_error = "out of memory";
    return PROPCALC_ERR_NOMEM;
  } catch (const std::exception& e) {
    t_error = e.what();
    return PROPCALC_ERR_ARG;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::vector<propcalc::Proof> collect_proofs(const propcalc_proof* const* ps,
                                            size_t n) {
  std::vector<propcalc::Proof> out;
  out.reserve(n);
  for (size_t k = 0; k < n; ++k) {
    if (!ps[k]) throw propcalc::ArgError("null proof handle in list");
    out.push_back(ps[k]->value);
  }
  return out;
}

std::vector<propcalc::Formula> collect_formulas(
    const propcalc_formula* const* fs, size_t n) {
  std::vector<propcalc::Formula> out;
  out.reserve(n);
  for (size_t k = 0; k < n; ++k) {
    if (!fs[k]) throw propcalc::ArgError("null formula handle in list");
    out.push_back(fs[k]->value);
  }
  return out;
}

propcalc::Method to_method(propcalc_method m) {
  return m == PROPCALC_METHOD_TWO ? propcalc::Method::Two
                                  : propcalc::Method::One;
}

}  // namespace

extern "C" {

const char* propcalc_version(void) { return "0.1.0"; }

const char* propcalc_last_error(void) { return t_error.c_str(); }

size_t propcalc_last_error_position(void) { return t_error_pos; }

void propcalc_string_free(char* s) { std::free(s); }

/* ----- formulas ---------------------------------------------------------- */

propcalc_status propcalc_formula_parse(const char* text,
                                       propcalc_formula** out) {
  if (!text || !out) return set_error("null argument", PROPCALC_ERR_ARG);
  return guarded([&] { *out = new propcalc_formula{propcalc::parse(text)}; });
}

propcalc_status propcalc_formula_print(const propcalc_formula* f, char** out) {
  if (!f || !out) return set_error("null argument", PROPCALC_ERR_ARG);
  return guarded([&] { *out = dup_string(propcalc::to_string(f->value)); });
}

int propcalc_formula_equal(const propcalc_formula* a,
                           const propcalc_formula* b) {
  if (!a || !b) return 0;
  return a->value == b->value ? 1 : 0;
}

void propcalc_formula_free(propcalc_formula* f) { delete f; }

/* ----- truth-table oracle ------------------------------------------------ */

propcalc_status propcalc_is_tautology(const propcalc_formula* f, int* taut) {
  if (!f || !taut) return set_error("null argument", PROPCALC_ERR_ARG);
  return guarded([&] { *taut = propcalc::is_tautology(f->value) ? 1 : 0; });
}

propcalc_status propcalc_find_counterexample(const propcalc_formula* f,
                                             int* found, char** valuation) {
  if (!f || !found) return set_error("null argument", PROPCALC_ERR_ARG);
  return guarded([&] {
    const auto v = propcalc::find_counterexample(f->value);
    *found = v.has_value() ? 1 : 0;
    if (valuation)
      *valuation = v ? dup_string(propcalc::format_valuation(*v)) : nullptr;
  });
}

/* ----- proofs ------------------------------------------------------------ */

void propcalc_proof_free(propcalc_proof* p) { delete p; }

propcalc_status propcalc_proof_parse(const char* text, propcalc_proof** out) {
  if (!text || !out) return set_error("null argument", PROPCALC_ERR_ARG);
  return guarded(
      [&] { *out = new propcalc_proof{propcalc::read_proof_text(text)}; });
}

propcalc_status propcalc_proof_print(const propcalc_proof* p, char** out) {
  if (!p || !out) return set_error("null argument", PROPCALC_ERR_ARG);
  return guarded(
      [&] { *out = dup_string(propcalc::write_proof_text(p->value)); });
}

propcalc_status propcalc_proof_check(const propcalc_proof* p, int* ok,
                                     size_t* step, char** diagnostic) {
  if (!p || !ok) return set_error("null argument", PROPCALC_ERR_ARG);
  return guarded([&] {
    const propcalc::CheckResult r = propcalc::check(p->value);
    *ok = r.ok ? 1 : 0;
    if (step) *step = r.step;
    if (diagnostic) *diagnostic = r.ok ? nullptr : dup_string(r.message);
  });
}

propcalc_status propcalc_proof_conclusion(const propcalc_proof* p,
                                          propcalc_formula** out) {
  if (!p || !out) return set_error("null argument", PROPCALC_ERR_ARG);
  return guarded(
      [&] { *out = new propcalc_formula{p->value.conclusion()}; });
}

size_t propcalc_proof_num_steps(const propcalc_proof* p) {
  return p ? p->value.size() : 0;
}

/* ----- synthesis --------------------------------------------------------- */

propcalc_status propcalc_axiom_proof(const char* schema_id,
                                     const propcalc_formula* a,
                                     const propcalc_formula* b,
                                     const propcalc_formula* c,
                                     propcalc_proof** out) {
  if (!schema_id || !out) return set_error("null argument", PROPCALC_ERR_ARG);
  return guarded([&] {
    const auto schema = propcalc::schema_from_id(schema_id);
    if (!schema)
      throw propcalc::ArgError(std::string("unknown axiom schema '") +
                               schema_id + "'");
    propcalc::Binding binding;
    if (a) binding.emplace("A", a->value);
    if (b) binding.emplace("B", b->value);
    if (c) binding.emplace("C", c->value);
    *out = new propcalc_proof{propcalc::axiom_proof(*schema, binding)};
  });
}

propcalc_status propcalc_identity(const propcalc_formula* a,
                                  propcalc_proof** out) {
  if (!a || !out) return set_error("null argument", PROPCALC_ERR_ARG);
  return guarded(
      [&] { *out = new propcalc_proof{propcalc::identity(a->value)}; });
}

propcalc_status propcalc_syllogism(const propcalc_proof* xy,
                                   const propcalc_proof* yz,
                                   propcalc_proof** out) {
  if (!xy || !yz || !out) return set_error("null argument", PROPCALC_ERR_ARG);
  return guarded([&] {
    *out = new propcalc_proof{propcalc::syllogism(xy->value, yz->value)};
  });
}

#define PROPCALC_PROOF_LIST_OP(cname, cppname)                                \
  propcalc_status cname(const propcalc_proof* const* ps, size_t n,            \
                        propcalc_proof** out) {                               \
    if (!ps || !out) return set_error("null argument", PROPCALC_ERR_ARG);     \
    return guarded([&] {                                                      \
      const auto proofs = collect_proofs(ps, n);                              \
      *out = new propcalc_proof{propcalc::cppname(proofs)};                   \
    });                                                                       \
  }

PROPCALC_PROOF_LIST_OP(propcalc_theorem_conj, theorem_conj)
PROPCALC_PROOF_LIST_OP(propcalc_theorem_disj, theorem_disj)
PROPCALC_PROOF_LIST_OP(propcalc_cons_conj_to_common, cons_conj_to_common)
PROPCALC_PROOF_LIST_OP(propcalc_cons_disj_to_common, cons_disj_to_common)
PROPCALC_PROOF_LIST_OP(propcalc_cons_common_to_conj, cons_common_to_conj)
PROPCALC_PROOF_LIST_OP(propcalc_cons_common_to_disj, cons_common_to_disj)

#undef PROPCALC_PROOF_LIST_OP

propcalc_status propcalc_lemma_idem_disj(const propcalc_formula* b, size_t n,
                                         propcalc_proof** out) {
  if (!b || !out) return set_error("null argument", PROPCALC_ERR_ARG);
  return guarded([&] {
    *out = new propcalc_proof{propcalc::lemma_idem_disj(b->value, n)};
  });
}

propcalc_status propcalc_projection(const propcalc_formula* const* as,
                                    size_t n, size_t i, propcalc_proof** out) {
  if (!as || !out) return set_error("null argument", PROPCALC_ERR_ARG);
  return guarded([&] {
    const auto formulas = collect_formulas(as, n);
    *out = new propcalc_proof{propcalc::projection(formulas, i)};
  });
}

propcalc_status propcalc_injection(const propcalc_formula* const* as, size_t n,
                                   size_t i, propcalc_proof** out) {
  if (!as || !out) return set_error("null argument", PROPCALC_ERR_ARG);
  return guarded([&] {
    const auto formulas = collect_formulas(as, n);
    *out = new propcalc_proof{propcalc::injection(formulas, i)};
  });
}

propcalc_status propcalc_idempotence(propcalc_connective conn,
                                     propcalc_direction dir,
                                     const propcalc_formula* a, size_t n,
                                     propcalc_proof** out) {
  if (!a || !out) return set_error("null argument", PROPCALC_ERR_ARG);
  return guarded([&] {
    const auto c = conn == PROPCALC_CONN_OR ? propcalc::NaryConn::Disj
                                            : propcalc::NaryConn::Conj;
    const auto d = dir == PROPCALC_INTRO ? propcalc::Direction::Intro
                                         : propcalc::Direction::Elim;
    *out = new propcalc_proof{propcalc::idempotence_proof(c, d, a->value, n)};
  });
}

propcalc_status propcalc_conj_implies_disj(const propcalc_formula* const* as,
                                           size_t n, propcalc_method method,
                                           propcalc_proof** out) {
  if (!as || !out) return set_error("null argument", PROPCALC_ERR_ARG);
  return guarded([&] {
    const auto formulas = collect_formulas(as, n);
    *out = new propcalc_proof{
        propcalc::conj_implies_disj(formulas, to_method(method))};
  });
}

propcalc_status propcalc_mixed_conj_to_disj(const propcalc_proof* const* ps,
                                            size_t n, propcalc_method method,
                                            propcalc_proof** out) {
  if (!ps || !out) return set_error("null argument", PROPCALC_ERR_ARG);
  return guarded([&] {
    const auto proofs = collect_proofs(ps, n);
    *out = new propcalc_proof{
        propcalc::mixed_conj_to_disj(proofs, to_method(method))};
  });
}

propcalc_status propcalc_example(const char* label, propcalc_proof** out) {
  if (!label || !out) return set_error("null argument", PROPCALC_ERR_ARG);
  return guarded([&] {
    const std::string key(label);
    if (key == "i")
      *out = new propcalc_proof{propcalc::example_i()};
    else if (key == "ii")
      *out = new propcalc_proof{propcalc::example_ii()};
    else if (key == "iii-M1")
      *out = new propcalc_proof{propcalc::example_iii_common_antecedent()};
    else if (key == "iii-M2")
      *out = new propcalc_proof{propcalc::example_iii_common_consequent()};
    else
      throw propcalc::ArgError("unknown example label '" + key + "'");
  });
}

/* ----- shape problems ----------------------------------------------------- */

propcalc_status propcalc_shape_new(propcalc_connective antecedent_connective,
                                   propcalc_connective consequent_connective,
                                   propcalc_shape** out) {
  if (!out) return set_error("null argument", PROPCALC_ERR_ARG);
  return guarded([&] {
    propcalc::ShapeProblem problem;
    problem.antecedent_connective = antecedent_connective == PROPCALC_CONN_OR
                                        ? propcalc::NaryConn::Disj
                                        : propcalc::NaryConn::Conj;
    problem.consequent_connective = consequent_connective == PROPCALC_CONN_OR
                                        ? propcalc::NaryConn::Disj
                                        : propcalc::NaryConn::Conj;
    *out = new propcalc_shape{std::move(problem)};
  });
}

void propcalc_shape_free(propcalc_shape* s) { delete s; }

propcalc_status propcalc_shape_add_antecedent(propcalc_shape* s,
                                              const propcalc_formula* f) {
  if (!s || !f) return set_error("null argument", PROPCALC_ERR_ARG);
  return guarded([&] { s->value.antecedents.push_back(f->value); });
}

propcalc_status propcalc_shape_add_consequent(propcalc_shape* s,
                                              const propcalc_formula* f) {
  if (!s || !f) return set_error("null argument", PROPCALC_ERR_ARG);
  return guarded([&] { s->value.consequents.push_back(f->value); });
}

propcalc_status propcalc_shape_add_bridge(propcalc_shape* s, size_t i,
                                          size_t j, const propcalc_proof* p) {
  if (!s || !p) return set_error("null argument", PROPCALC_ERR_ARG);
  return guarded([&] {
    if (i < 1 || i > s->value.antecedents.size() || j < 1 ||
        j > s->value.consequents.size())
      throw propcalc::ArgError("bridge position out of range");
    s->value.bridges.insert_or_assign({i, j}, p->value);
  });
}

propcalc_status propcalc_shape_solve(const propcalc_shape* s,
                                     propcalc_proof** proof, char** failure) {
  if (!s || !proof) return set_error("null argument", PROPCALC_ERR_ARG);
  return guarded([&] {
    propcalc::ShapeOutcome outcome = propcalc::shape_prover(s->value);
    if (outcome.ok()) {
      *proof = new propcalc_proof{std::move(*outcome.proof)};
      if (failure) *failure = nullptr;
    } else {
      *proof = nullptr;
      if (failure) *failure = dup_string(outcome.failure);
    }
  });
}

} /* extern "C" */
