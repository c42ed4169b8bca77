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

// End-to-end acceptance suite. Prints one PASS/FAIL line per criterion and
// exits nonzero if any criterion fails. Criteria 6 and 8 drive the propcalc
// CLI binary in fresh processes.

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "derived.hpp"
#include "formula.hpp"
#include "kernel.hpp"
#include "proof_text.hpp"
#include "semantics.hpp"
#include "testutil.hpp"

using namespace propcalc;
namespace fs = std::filesystem;
using testutil::random_axiom_bridge;
using testutil::random_closure;
using testutil::random_formula;
using testutil::random_identity_bridge;

namespace {

Formula V(const char* n) { return Formula::var(n); }

// Every proof any criterion produces lands here; criterion 4 sweeps it.
std::vector<Proof>& registry() {
  static std::vector<Proof> proofs;
  return proofs;
}

const Proof& track(Proof p) {
  registry().push_back(std::move(p));
  return registry().back();
}

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = true;
  std::vector<std::string> notes;
  std::string detail;
};

class Criterion {
 public:
  Criterion(int id, std::string title) {
    result_.id = id;
    result_.title = std::move(title);
  }

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      result_.pass = false;
      if (result_.notes.size() < 8) result_.notes.push_back(what);
    }
  }

  void expect_checked(const Proof& p, const std::string& what) {
    const CheckResult r = check(p);
    expect(r.ok, what + " (check failed at step " + std::to_string(r.step) +
                     ": " + r.message + ")");
  }

  void detail(std::string d) { result_.detail = std::move(d); }

  CriterionResult take() { return std::move(result_); }

 private:
  CriterionResult result_;
};

struct CliResult {
  int exit_code = -1;
  std::string output;
};

CliResult run_cli(const std::string& args, const fs::path& scratch) {
  static int counter = 0;
  const fs::path capture = scratch / ("cli-out-" + std::to_string(counter++));
  const std::string command = std::string(PROPCALC_CLI_PATH) + " " + args +
                              " > " + capture.string() + " 2>&1";
  const int raw = std::system(command.c_str());
  CliResult result;
  if (raw == -1)
    result.exit_code = -1;
  else if (WIFEXITED(raw))
    result.exit_code = WEXITSTATUS(raw);
  std::ifstream in(capture);
  std::stringstream buffer;
  buffer << in.rdbuf();
  result.output = buffer.str();
  return result;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const fs::path& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  out << body;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

// ---------------------------------------------------------------------------

CriterionResult criterion_1_kernel_fidelity() {
  Criterion c(1, "kernel fidelity: the eleven axiom schemas");
  const std::pair<Schema, const char*> table[] = {
      {Schema::Ia, "A -> (B -> A)"},
      {Schema::Ib, "(A -> (B -> C)) -> ((A -> B) -> (A -> C))"},
      {Schema::IIa, "A & B -> A"},
      {Schema::IIb, "A & B -> B"},
      {Schema::IIc, "(A -> B) -> ((A -> C) -> (A -> B & C))"},
      {Schema::IIIa, "A -> A | B"},
      {Schema::IIIb, "B -> A | B"},
      {Schema::IIIc, "(A -> C) -> ((B -> C) -> (A | B -> C))"},
      {Schema::IVa, "(A -> B) -> (~B -> ~A)"},
      {Schema::IVb, "A -> ~~A"},
      {Schema::IVc, "~~A -> A"},
  };
  std::size_t rows = 0;
  for (const auto& [schema, text] : table) {
    ++rows;
    const Formula stated = parse(text);
    const std::string id(schema_id(schema));
    c.expect(schema_template(schema) == stated,
             "template " + id + " differs from its statement");
    c.expect(ProofStep::axiom_instance(schema, {}).formula() == stated,
             "empty-binding instance of " + id + " is not the literal schema");
    track(axiom_proof(schema));
  }
  c.expect(rows == 11, "expected 11 schemas");
  c.detail("11 schemas");
  return c.take();
}

CriterionResult criterion_2_theorem_synthesis() {
  Criterion c(2, "theorem synthesis for n in [1,16]");
  const auto start = std::chrono::steady_clock::now();
  std::mt19937 rng(20260401);

  struct Family {
    const char* name;
    std::vector<Proof> bridges;  // uniform step count within a family
  };
  std::vector<Family> families(2);
  families[0].name = "identity bridges";
  families[1].name = "axiom bridges";
  for (int i = 0; i < 16; ++i) {
    families[0].bridges.push_back(random_identity_bridge(rng));
    families[1].bridges.push_back(random_axiom_bridge(rng));
  }

  for (const Family& family : families) {
    for (const Proof& b : family.bridges) track(b);
    for (bool conj : {true, false}) {
      std::vector<std::size_t> lengths;
      for (std::size_t n = 1; n <= 16; ++n) {
        const std::span<const Proof> head(family.bridges.data(), n);
        Proof p = conj ? theorem_conj(head) : theorem_disj(head);
        const std::string what = std::string(conj ? "theorem_conj" : "theorem_disj") +
                                 " n=" + std::to_string(n) + " over " + family.name;
        c.expect_checked(p, what);
        std::vector<Formula> as, bs;
        for (const Proof& q : head) {
          as.push_back(q.conclusion().left());
          bs.push_back(q.conclusion().right());
        }
        const Formula want = conj ? Formula::impl(conj_n(as), conj_n(bs))
                                  : Formula::impl(disj_n(as), disj_n(bs));
        c.expect(p.conclusion() == want, what + ": conclusion shape is wrong");
        lengths.push_back(p.size());
        track(std::move(p));
      }
      const std::size_t delta = lengths[1] - lengths[0];
      for (std::size_t n = 2; n < lengths.size(); ++n)
        c.expect(lengths[n] - lengths[n - 1] == delta,
                 std::string(conj ? "theorem_conj" : "theorem_disj") +
                     " length increment varies at n=" + std::to_string(n + 1) +
                     " over " + family.name);
    }
  }
  const double elapsed = seconds_since(start);
  c.expect(elapsed < 5.0, "exceeded 5 s");
  c.detail("2 bridge families, exact shapes, constant increments, " +
           std::to_string(elapsed).substr(0, 5) + " s");
  return c.take();
}

CriterionResult criterion_3_lemma_and_consequences() {
  Criterion c(3, "lemma and consequences 1-10");
  const auto start = std::chrono::steady_clock::now();

  for (std::size_t n = 1; n <= 16; ++n) {
    const Proof p = lemma_idem_disj(V("B"), n);
    c.expect_checked(p, "lemma n=" + std::to_string(n));
    std::vector<Formula> bs(n, V("B"));
    c.expect(p.conclusion() == Formula::impl(disj_n(bs), V("B")),
             "lemma n=" + std::to_string(n) + ": wrong conclusion");
    c.expect(is_tautology(p.conclusion()),
             "lemma n=" + std::to_string(n) + ": not a tautology");
    track(p);
  }

  for (std::size_t n = 1; n <= 8; ++n) {
    const std::string at = " at n=" + std::to_string(n);

    // Common-consequent bridges Ci & B -> B and common-antecedent bridges
    // A -> A | Ci.
    std::vector<Proof> to_common, from_common;
    std::vector<Formula> conj_ante, disj_cons;
    for (std::size_t i = 1; i <= n; ++i) {
      const Formula ci = V(("C" + std::to_string(i)).c_str());
      to_common.push_back(axiom_proof(Schema::IIb, {{"A", ci}, {"B", V("B")}}));
      conj_ante.push_back(Formula::conj(ci, V("B")));
      from_common.push_back(axiom_proof(Schema::IIIa, {{"A", V("A")}, {"B", ci}}));
      disj_cons.push_back(Formula::disj(V("A"), ci));
    }

    {
      const Proof p = cons_conj_to_common(to_common);
      c.expect(p.conclusion() == Formula::impl(conj_n(conj_ante), V("B")),
               "cons1 conclusion" + at);
      c.expect_checked(p, "cons1" + at);
      c.expect(is_tautology(p.conclusion()), "cons1 soundness" + at);
      track(p);
    }
    {
      const Proof p = cons_disj_to_common(to_common);
      c.expect(p.conclusion() == Formula::impl(disj_n(conj_ante), V("B")),
               "cons2 conclusion" + at);
      c.expect_checked(p, "cons2" + at);
      c.expect(is_tautology(p.conclusion()), "cons2 soundness" + at);
      track(p);
    }
    {
      const Formula a = parse("A | B");
      const Proof p3 = idempotence_proof(NaryConn::Conj, Direction::Elim, a, n);
      const std::vector<Formula> rep(n, a);
      c.expect(p3.conclusion() == Formula::impl(conj_n(rep), a),
               "cons3 conclusion" + at);
      c.expect_checked(p3, "cons3" + at);
      c.expect(is_tautology(p3.conclusion()), "cons3 soundness" + at);
      track(p3);

      const Proof p4 = idempotence_proof(NaryConn::Disj, Direction::Elim, a, n);
      c.expect(p4.conclusion() == Formula::impl(disj_n(rep), a),
               "cons4 conclusion" + at);
      c.expect_checked(p4, "cons4" + at);
      track(p4);

      const Proof p7 = idempotence_proof(NaryConn::Conj, Direction::Intro, a, n);
      c.expect(p7.conclusion() == Formula::impl(a, conj_n(rep)),
               "cons7 conclusion" + at);
      c.expect_checked(p7, "cons7" + at);
      track(p7);

      const Proof p8 = idempotence_proof(NaryConn::Disj, Direction::Intro, a, n);
      c.expect(p8.conclusion() == Formula::impl(a, disj_n(rep)),
               "cons8 conclusion" + at);
      c.expect_checked(p8, "cons8" + at);
      c.expect(is_tautology(p8.conclusion()), "cons8 soundness" + at);
      track(p8);
    }
    {
      const Proof p = cons_common_to_conj(from_common);
      c.expect(p.conclusion() == Formula::impl(V("A"), conj_n(disj_cons)),
               "cons5 conclusion" + at);
      c.expect_checked(p, "cons5" + at);
      c.expect(is_tautology(p.conclusion()), "cons5 soundness" + at);
      track(p);
    }
    {
      const Proof p = cons_common_to_disj(from_common);
      c.expect(p.conclusion() == Formula::impl(V("A"), disj_n(disj_cons)),
               "cons6 conclusion" + at);
      c.expect_checked(p, "cons6" + at);
      c.expect(is_tautology(p.conclusion()), "cons6 soundness" + at);
      track(p);
    }
    {
      std::vector<Formula> as;
      for (std::size_t i = 1; i <= n; ++i)
        as.push_back(V(("A" + std::to_string(i)).c_str()));
      const Proof m1 = conj_implies_disj(as, Method::One);
      const Proof m2 = conj_implies_disj(as, Method::Two);
      c.expect(m1.conclusion() == Formula::impl(conj_n(as), disj_n(as)),
               "cons9 conclusion" + at);
      c.expect(m1.conclusion() == m2.conclusion(), "cons9 methods disagree" + at);
      c.expect_checked(m1, "cons9 method one" + at);
      c.expect_checked(m2, "cons9 method two" + at);
      c.expect(is_tautology(m1.conclusion()), "cons9 soundness" + at);
      track(m1);
      track(m2);
    }
    {
      std::vector<Proof> bridges;
      std::vector<Formula> as, bs;
      for (std::size_t i = 1; i <= n; ++i) {
        const Formula bi = V(("B" + std::to_string(i)).c_str());
        const Formula ci = V(("C" + std::to_string(i)).c_str());
        bridges.push_back(axiom_proof(Schema::IIa, {{"A", bi}, {"B", ci}}));
        as.push_back(Formula::conj(bi, ci));
        bs.push_back(bi);
      }
      const Proof m1 = mixed_conj_to_disj(bridges, Method::One);
      const Proof m2 = mixed_conj_to_disj(bridges, Method::Two);
      c.expect(m1.conclusion() == Formula::impl(conj_n(as), disj_n(bs)),
               "cons10 conclusion" + at);
      c.expect(m1.conclusion() == m2.conclusion(), "cons10 methods disagree" + at);
      c.expect_checked(m1, "cons10 method one" + at);
      c.expect_checked(m2, "cons10 method two" + at);
      c.expect(is_tautology(m1.conclusion()), "cons10 soundness" + at);
      track(m1);
      track(m2);
    }
  }
  const double elapsed = seconds_since(start);
  c.expect(elapsed < 5.0, "exceeded 5 s");
  c.detail("lemma n<=16, consequences n<=8, " +
           std::to_string(elapsed).substr(0, 5) + " s");
  return c.take();
}

CriterionResult criterion_5_examples(const std::map<std::string, Proof>& gallery) {
  Criterion c(5, "worked examples i, ii, iii (both methods)");
  c.expect(gallery.size() == 4, "gallery should have 4 entries");
  const struct {
    const char* label;
    const char* conclusion;
  } expectations[] = {
      {"i", "A -> (A | B) & (B -> A)"},
      {"ii", "(A & B) | C -> (A | B) | C"},
      {"iii-M1", "A & C -> A | C"},
      {"iii-M2", "A & C -> A | C"},
  };
  for (const auto& e : expectations) {
    const auto it = gallery.find(e.label);
    if (it == gallery.end()) {
      c.expect(false, std::string("missing gallery entry ") + e.label);
      continue;
    }
    c.expect(it->second.conclusion() == parse(e.conclusion),
             std::string("example ") + e.label + " conclusion mismatch");
    c.expect_checked(it->second, std::string("example ") + e.label);
    track(it->second);
  }
  c.expect(gallery.at("iii-M1").conclusion() == gallery.at("iii-M2").conclusion(),
           "example iii methods disagree");
  const Proof alt = example_i_via_theorem();
  c.expect(alt.conclusion() == gallery.at("i").conclusion(),
           "alternative route to example i disagrees");
  c.expect_checked(alt, "alternative route to example i");
  track(alt);
  c.detail("exact conclusions, both iii methods equal");
  return c.take();
}

CriterionResult criterion_6_remarks(const fs::path& scratch) {
  Criterion c(6, "converse counterexamples");
  const Proof remark1 =
      syllogism(axiom_proof(Schema::IIa, {{"A", V("A")}, {"B", V("B")}}),
                idempotence_proof(NaryConn::Conj, Direction::Intro, V("A"), 2));
  c.expect(remark1.conclusion() == parse("A & B -> A & A"),
           "composite A & B -> A & A has the wrong conclusion");
  c.expect_checked(remark1, "composite A & B -> A & A");
  track(remark1);

  const Proof remark2 =
      syllogism(lemma_idem_disj(V("A"), 2),
                axiom_proof(Schema::IIIa, {{"A", V("A")}, {"B", V("B")}}));
  c.expect(remark2.conclusion() == parse("A | A -> A | B"),
           "composite A | A -> A | B has the wrong conclusion");
  c.expect_checked(remark2, "composite A | A -> A | B");
  track(remark2);

  const auto c1 = find_counterexample(parse("B -> A"));
  c.expect(c1.has_value() && format_valuation(*c1) == "{A:false, B:true}",
           "counterexample for B -> A is not {A:false, B:true}");
  const auto c2 = find_counterexample(parse("A -> B"));
  c.expect(c2.has_value() && format_valuation(*c2) == "{A:true, B:false}",
           "counterexample for A -> B is not {A:true, B:false}");

  const CliResult taut1 = run_cli("taut 'B -> A'", scratch);
  c.expect(taut1.exit_code == 1, "taut 'B -> A' should exit 1");
  c.expect(taut1.output.find("COUNTEREXAMPLE {A:false, B:true}") !=
               std::string::npos,
           "taut 'B -> A' output: " + taut1.output);
  const CliResult taut2 = run_cli("taut 'A -> B'", scratch);
  c.expect(taut2.exit_code == 1, "taut 'A -> B' should exit 1");
  c.expect(taut2.output.find("COUNTEREXAMPLE {A:true, B:false}") !=
               std::string::npos,
           "taut 'A -> B' output: " + taut2.output);
  const CliResult taut3 = run_cli("taut 'A -> (B -> A)'", scratch);
  c.expect(taut3.exit_code == 0 &&
               taut3.output.find("TAUTOLOGY") != std::string::npos,
           "taut on a tautology should exit 0");
  c.detail("both composites check; both converses falsified in fixed order");
  return c.take();
}

CriterionResult criterion_7_purity() {
  Criterion c(7, "derived-rule purity: identity and syllogism expansions");
  std::mt19937 rng(1123);

  auto group_one_only = [](const Proof& p, std::size_t from) {
    for (std::size_t k = from; k < p.size(); ++k) {
      const ProofStep& st = p.steps()[k];
      if (st.kind() == ProofStep::Kind::ModusPonens) continue;
      if (st.schema() != Schema::Ia && st.schema() != Schema::Ib) return false;
    }
    return true;
  };

  for (int t = 0; t < 20; ++t) {
    const Proof id = identity(random_formula(rng, 2));
    c.expect(id.size() == 5, "identity must have five steps");
    c.expect(group_one_only(id, 0),
             "identity uses a schema outside I.a/I.b");
    track(id);
  }

  for (int t = 0; t < 20; ++t) {
    const Formula x = random_formula(rng, 1);
    const Formula y = random_formula(rng, 1);
    const Proof p1 = identity(x);
    const Proof p2 = axiom_proof(Schema::IIIa, {{"A", x}, {"B", y}});
    const Proof s = syllogism(p1, p2);
    const std::size_t base = p1.size() + p2.size();
    c.expect(s.size() == base + 5, "syllogism must append five steps");
    c.expect(group_one_only(s, base),
             "syllogism tail uses a schema outside I.a/I.b");
    // Exact census of the appended tail.
    const auto& steps = s.steps();
    c.expect(steps[base + 0].kind() == ProofStep::Kind::Axiom &&
                 steps[base + 0].schema() == Schema::Ia,
             "syllogism tail step 1 should be I.a");
    c.expect(steps[base + 1].kind() == ProofStep::Kind::ModusPonens,
             "syllogism tail step 2 should be MP");
    c.expect(steps[base + 2].kind() == ProofStep::Kind::Axiom &&
                 steps[base + 2].schema() == Schema::Ib,
             "syllogism tail step 3 should be I.b");
    c.expect(steps[base + 3].kind() == ProofStep::Kind::ModusPonens,
             "syllogism tail step 4 should be MP");
    c.expect(steps[base + 4].kind() == ProofStep::Kind::ModusPonens,
             "syllogism tail step 5 should be MP");
    // Spliced prefixes are the inputs, formula for formula.
    bool prefix_ok = true;
    for (std::size_t k = 0; k < p1.size(); ++k)
      prefix_ok = prefix_ok && steps[k].formula() == p1.steps()[k].formula();
    for (std::size_t k = 0; k < p2.size(); ++k)
      prefix_ok =
          prefix_ok && steps[p1.size() + k].formula() == p2.steps()[k].formula();
    c.expect(prefix_ok, "spliced inputs were altered");
    track(s);
  }
  c.detail("40 randomized expansions, census exact");
  return c.take();
}

CriterionResult criterion_4_soundness_sweep() {
  Criterion c(4, "soundness sweep over every produced proof");
  std::mt19937 rng(40404);
  for (int t = 0; t < 300; ++t) track(random_closure(rng));

  std::size_t failures = 0;
  for (const Proof& p : registry()) {
    const CheckResult r = check(p);
    if (!r.ok || !is_tautology(p.conclusion())) {
      ++failures;
      c.expect(false, "unsound or unchecked proof concluding " +
                          to_string(p.conclusion()));
    }
  }
  c.expect(registry().size() >= 500,
           "only " + std::to_string(registry().size()) + " proofs produced");
  c.detail(std::to_string(registry().size()) + " proofs, " +
           std::to_string(failures) + " failures");
  return c.take();
}

CriterionResult criterion_8_round_trip(const fs::path& scratch) {
  Criterion c(8, "proof files re-check in fresh processes; corrupt files rejected");

  // Everything the CLI can emit, plus the gallery.
  const fs::path gallery_dir = scratch / "gallery";
  const CliResult gallery = run_cli("gallery " + gallery_dir.string(), scratch);
  c.expect(gallery.exit_code == 0, "gallery failed: " + gallery.output);

  const fs::path synth_dir = scratch / "synth";
  fs::create_directories(synth_dir);
  const std::vector<std::string> targets = {
      "thm1", "thm2", "lemma", "cons1", "cons2", "cons3", "cons4", "cons5",
      "cons6", "cons7", "cons8", "cons9", "cons10", "proj", "inj", "shape",
      "example-i", "example-ii", "example-iii"};
  for (const std::string& target : targets) {
    const fs::path out = synth_dir / (target + ".prf");
    std::string args = "synth " + target + " --n 3 --out " + out.string();
    if (target == "proj" || target == "inj") args += " --i 2";
    const CliResult r = run_cli(args, scratch);
    c.expect(r.exit_code == 0, "synth " + target + " failed: " + r.output);
  }

  std::size_t files = 0;
  for (const fs::path& dir : {gallery_dir, synth_dir}) {
    for (const auto& entry : fs::directory_iterator(dir)) {
      if (entry.path().extension() != ".prf") continue;
      ++files;
      const CliResult r = run_cli("check " + entry.path().string(), scratch);
      c.expect(r.exit_code == 0 && r.output.find("OK") != std::string::npos,
               "re-check failed for " + entry.path().filename().string() +
                   ": " + r.output);
    }
  }
  c.expect(files >= 30, "expected at least 30 emitted proof files");

  // Ten deliberately corrupted variants of a known file, every one rejected
  // with a step-indexed diagnostic.
  const std::string base = read_file(synth_dir / "thm1.prf");
  std::vector<std::string> lines;
  {
    std::stringstream in(base);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
  }
  std::size_t first_mp = 0;
  while (first_mp < lines.size() &&
         lines[first_mp].find("| MP ") == std::string::npos)
    ++first_mp;
  c.expect(first_mp < lines.size(), "base proof has no MP step");
  c.expect(lines.size() >= 4 && lines.back().rfind("QED", 0) == 0,
           "unexpected base proof layout");

  auto replace_field = [](const std::string& line, std::size_t field,
                          const std::string& text) {
    // Fields are: index | formula | justification. Only safe for lines
    // whose formula contains no '|'.
    std::vector<std::string> parts;
    std::stringstream in(line);
    std::string part;
    while (std::getline(in, part, '|')) parts.push_back(part);
    parts.at(field) = text;
    std::string out = parts[0];
    for (std::size_t k = 1; k < parts.size(); ++k) out += "|" + parts[k];
    return out;
  };

  std::vector<std::pair<std::string, std::vector<std::string>>> corpus;
  {
    auto v = lines;
    std::swap(v[0], v[1]);
    corpus.emplace_back("swapped step indices", v);
  }
  {
    auto v = lines;
    v[0] = replace_field(v[0], 1, " A -> A ");
    corpus.emplace_back("tampered axiom formula", v);
  }
  {
    auto v = lines;
    v[first_mp] = replace_field(v[first_mp], 1, " B1 ");
    corpus.emplace_back("tampered modus ponens formula", v);
  }
  {
    auto v = lines;
    v[first_mp] = replace_field(v[first_mp], 2, " MP 99 98");
    corpus.emplace_back("forward citation", v);
  }
  {
    auto v = lines;
    v[first_mp] = replace_field(v[first_mp], 2, " MP 0 1");
    corpus.emplace_back("zero step index", v);
  }
  {
    auto v = lines;
    v[first_mp] = replace_field(v[first_mp], 2, " MP 2 1");
    corpus.emplace_back("mismatched premises", v);
  }
  {
    auto v = lines;
    v.back() = "QED A -> A";
    corpus.emplace_back("altered QED formula", v);
  }
  {
    auto v = lines;
    v.pop_back();
    corpus.emplace_back("missing QED line", v);
  }
  {
    auto v = lines;
    v[0] = replace_field(v[0], 1, " B1 -> ");
    corpus.emplace_back("malformed formula", v);
  }
  {
    auto v = lines;
    const std::size_t at = v[0].find("AX II.a");
    c.expect(at != std::string::npos, "expected II.a in the first line");
    if (at != std::string::npos) v[0].replace(at, 7, "AX II.z");
    corpus.emplace_back("unknown schema", v);
  }

  c.expect(corpus.size() == 10, "corrupt corpus must have 10 files");
  int corrupted_index = 0;
  for (const auto& [label, body_lines] : corpus) {
    std::string body;
    for (const std::string& line : body_lines) body += line + "\n";
    const fs::path path =
        scratch / ("corrupt-" + std::to_string(++corrupted_index) + ".prf");
    write_file(path, body);
    const CliResult r = run_cli("check " + path.string(), scratch);
    c.expect(r.exit_code != 0, label + ": corrupted file was accepted");
    c.expect(r.output.find("step") != std::string::npos,
             label + ": diagnostic lacks a step index: " + r.output);
  }

  c.detail(std::to_string(files) + " emitted files re-checked, 10 corruptions rejected");
  return c.take();
}

}  // namespace

int main() {
  std::error_code ec;
  const fs::path scratch =
      fs::temp_directory_path() / ("propcalc-acceptance-" +
                                   std::to_string(::getpid()));
  fs::create_directories(scratch, ec);
  if (ec) {
    std::cerr << "cannot create scratch directory " << scratch << "\n";
    return 1;
  }

  std::vector<CriterionResult> results;
  results.push_back(criterion_1_kernel_fidelity());
  results.push_back(criterion_2_theorem_synthesis());
  results.push_back(criterion_3_lemma_and_consequences());
  results.push_back(criterion_5_examples(example_gallery()));
  results.push_back(criterion_6_remarks(scratch));
  results.push_back(criterion_7_purity());
  results.push_back(criterion_8_round_trip(scratch));
  results.push_back(criterion_4_soundness_sweep());  // sweeps everything above

  std::sort(results.begin(), results.end(),
            [](const CriterionResult& a, const CriterionResult& b) {
              return a.id < b.id;
            });

  int failures = 0;
  for (const CriterionResult& r : results) {
    const bool pass = r.pass;
    failures += pass ? 0 : 1;
    std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << r.id << ": "
              << r.title;
    if (!r.detail.empty()) std::cout << " [" << r.detail << "]";
    std::cout << "\n";
    for (const std::string& note : r.notes) std::cout << "      - " << note << "\n";
  }
  std::cout << (failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED")
            << " (" << (results.size() - failures) << "/" << results.size()
            << ")\n";

  fs::remove_all(scratch, ec);
  return failures == 0 ? 0 : 1;
}
