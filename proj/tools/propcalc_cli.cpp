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

// Command-line front end. Talks to the library exclusively through the C
// API in propcalc.h.
//
// Exit codes: 0 success, 1 negative check/taut result, 2 usage or parse
// error.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "propcalc.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;

struct CliError {
  int code;
  std::string message;
};

// RAII wrappers over the C handles.
struct FormulaHandle {
  propcalc_formula* ptr = nullptr;
  FormulaHandle() = default;
  explicit FormulaHandle(propcalc_formula* p) : ptr(p) {}
  FormulaHandle(FormulaHandle&& o) noexcept : ptr(o.ptr) { o.ptr = nullptr; }
  FormulaHandle& operator=(FormulaHandle&& o) noexcept {
    if (this != &o) {
      propcalc_formula_free(ptr);
      ptr = o.ptr;
      o.ptr = nullptr;
    }
    return *this;
  }
  FormulaHandle(const FormulaHandle&) = delete;
  FormulaHandle& operator=(const FormulaHandle&) = delete;
  ~FormulaHandle() { propcalc_formula_free(ptr); }
};

struct ProofHandle {
  propcalc_proof* ptr = nullptr;
  ProofHandle() = default;
  explicit ProofHandle(propcalc_proof* p) : ptr(p) {}
  ProofHandle(ProofHandle&& o) noexcept : ptr(o.ptr) { o.ptr = nullptr; }
  ProofHandle& operator=(ProofHandle&& o) noexcept {
    if (this != &o) {
      propcalc_proof_free(ptr);
      ptr = o.ptr;
      o.ptr = nullptr;
    }
    return *this;
  }
  ProofHandle(const ProofHandle&) = delete;
  ProofHandle& operator=(const ProofHandle&) = delete;
  ~ProofHandle() { propcalc_proof_free(ptr); }
};

std::string take_string(char* s) {
  std::string out = s ? s : "";
  propcalc_string_free(s);
  return out;
}

[[noreturn]] void fail(int code, const std::string& message) {
  throw CliError{code, message};
}

void require_ok(propcalc_status status) {
  if (status != PROPCALC_OK)
    fail(kExitUsage, std::string("error: ") + propcalc_last_error());
}

FormulaHandle parse_formula(const std::string& text) {
  propcalc_formula* f = nullptr;
  require_ok(propcalc_formula_parse(text.c_str(), &f));
  return FormulaHandle(f);
}

std::string conclusion_of(const ProofHandle& p) {
  propcalc_formula* f = nullptr;
  require_ok(propcalc_proof_conclusion(p.ptr, &f));
  FormulaHandle h(f);
  char* s = nullptr;
  require_ok(propcalc_formula_print(h.ptr, &s));
  return take_string(s);
}

std::vector<std::string> split_csv(const std::string& csv) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(csv);
  while (std::getline(in, item, ',')) out.push_back(item);
  return out;
}

// ---------------------------------------------------------------------------
// synth targets

struct SynthOptions {
  std::size_t n = 2;
  bool n_given = false;
  std::string var;            // single seed formula
  std::string vars;           // comma-separated list of formulas
  std::size_t index = 1;      // projection/injection target
  int method = 1;
};

std::vector<FormulaHandle> seed_formulas(const SynthOptions& opt,
                                         const char* prefix) {
  std::vector<FormulaHandle> out;
  if (!opt.vars.empty()) {
    for (const std::string& s : split_csv(opt.vars))
      out.push_back(parse_formula(s));
    if (opt.n_given && opt.n != out.size())
      fail(kExitUsage, "error: --n does not match the number of --vars entries");
  } else {
    for (std::size_t i = 1; i <= opt.n; ++i)
      out.push_back(parse_formula(prefix + std::to_string(i)));
  }
  if (out.empty()) fail(kExitUsage, "error: need at least one seed formula");
  return out;
}

std::vector<const propcalc_formula*> raw(const std::vector<FormulaHandle>& fs) {
  std::vector<const propcalc_formula*> out;
  out.reserve(fs.size());
  for (const auto& f : fs) out.push_back(f.ptr);
  return out;
}

std::vector<const propcalc_proof*> raw(const std::vector<ProofHandle>& ps) {
  std::vector<const propcalc_proof*> out;
  out.reserve(ps.size());
  for (const auto& p : ps) out.push_back(p.ptr);
  return out;
}

ProofHandle axiom(const char* id, const propcalc_formula* a,
                  const propcalc_formula* b, const propcalc_formula* c) {
  propcalc_proof* p = nullptr;
  require_ok(propcalc_axiom_proof(id, a, b, c, &p));
  return ProofHandle(p);
}

// Bi & Ci -> Bi for each seed Bi, with fresh Ci; the standard nontrivial
// bridge family for targets that consume proofs of Ai -> Bi.
std::vector<ProofHandle> conj_elim_bridges(const std::vector<FormulaHandle>& bs) {
  std::vector<ProofHandle> out;
  for (std::size_t i = 0; i < bs.size(); ++i) {
    FormulaHandle ci = parse_formula("C" + std::to_string(i + 1));
    out.push_back(axiom("II.a", bs[i].ptr, ci.ptr, nullptr));
  }
  return out;
}

propcalc_method method_of(const SynthOptions& opt) {
  if (opt.method != 1 && opt.method != 2)
    fail(kExitUsage, "error: --method must be 1 or 2");
  return opt.method == 2 ? PROPCALC_METHOD_TWO : PROPCALC_METHOD_ONE;
}

ProofHandle build_shape_demo() {
  // (A & B) | C -> (A | B) | C, assembled from the bridges
  // A & B -> A | B and C -> C.
  FormulaHandle a = parse_formula("A");
  FormulaHandle b = parse_formula("B");
  FormulaHandle c = parse_formula("C");
  FormulaHandle ab_conj = parse_formula("A & B");
  FormulaHandle ab_disj = parse_formula("A | B");

  propcalc_shape* shape = nullptr;
  require_ok(propcalc_shape_new(PROPCALC_CONN_OR, PROPCALC_CONN_OR, &shape));
  std::unique_ptr<propcalc_shape, decltype(&propcalc_shape_free)> shape_guard(
      shape, &propcalc_shape_free);
  require_ok(propcalc_shape_add_antecedent(shape, ab_conj.ptr));
  require_ok(propcalc_shape_add_antecedent(shape, c.ptr));
  require_ok(propcalc_shape_add_consequent(shape, ab_disj.ptr));
  require_ok(propcalc_shape_add_consequent(shape, c.ptr));

  const propcalc_formula* ab_list[] = {a.ptr, b.ptr};
  propcalc_proof* bridge1 = nullptr;
  require_ok(propcalc_conj_implies_disj(ab_list, 2, PROPCALC_METHOD_ONE, &bridge1));
  ProofHandle bridge1_h(bridge1);
  propcalc_proof* bridge2 = nullptr;
  require_ok(propcalc_identity(c.ptr, &bridge2));
  ProofHandle bridge2_h(bridge2);
  require_ok(propcalc_shape_add_bridge(shape, 1, 1, bridge1_h.ptr));
  require_ok(propcalc_shape_add_bridge(shape, 2, 2, bridge2_h.ptr));

  propcalc_proof* proof = nullptr;
  char* failure = nullptr;
  require_ok(propcalc_shape_solve(shape, &proof, &failure));
  if (!proof)
    fail(kExitUsage, "error: shape solve failed: " + take_string(failure));
  return ProofHandle(proof);
}

ProofHandle build_target(const std::string& target, const SynthOptions& opt) {
  propcalc_proof* out = nullptr;

  if (target == "thm1" || target == "thm2" || target == "cons10") {
    const auto bs = seed_formulas(opt, "B");
    const auto bridges = conj_elim_bridges(bs);
    const auto ps = raw(bridges);
    if (target == "thm1")
      require_ok(propcalc_theorem_conj(ps.data(), ps.size(), &out));
    else if (target == "thm2")
      require_ok(propcalc_theorem_disj(ps.data(), ps.size(), &out));
    else
      require_ok(propcalc_mixed_conj_to_disj(ps.data(), ps.size(),
                                             method_of(opt), &out));
    return ProofHandle(out);
  }

  if (target == "lemma") {
    FormulaHandle b = parse_formula(opt.var.empty() ? "B" : opt.var);
    require_ok(propcalc_lemma_idem_disj(b.ptr, opt.n, &out));
    return ProofHandle(out);
  }

  if (target == "cons1" || target == "cons2") {
    // Bridges Ci & B -> B over a common consequent B.
    FormulaHandle b = parse_formula(opt.var.empty() ? "B" : opt.var);
    auto cs = seed_formulas(opt, "C");
    std::vector<ProofHandle> bridges;
    for (const auto& ci : cs)
      bridges.push_back(axiom("II.b", ci.ptr, b.ptr, nullptr));
    const auto ps = raw(bridges);
    if (target == "cons1")
      require_ok(propcalc_cons_conj_to_common(ps.data(), ps.size(), &out));
    else
      require_ok(propcalc_cons_disj_to_common(ps.data(), ps.size(), &out));
    return ProofHandle(out);
  }

  if (target == "cons3" || target == "cons4" || target == "cons7" ||
      target == "cons8") {
    FormulaHandle a = parse_formula(opt.var.empty() ? "A" : opt.var);
    const auto conn = (target == "cons3" || target == "cons7")
                          ? PROPCALC_CONN_AND
                          : PROPCALC_CONN_OR;
    const auto dir = (target == "cons3" || target == "cons4") ? PROPCALC_ELIM
                                                              : PROPCALC_INTRO;
    require_ok(propcalc_idempotence(conn, dir, a.ptr, opt.n, &out));
    return ProofHandle(out);
  }

  if (target == "cons5" || target == "cons6") {
    // Bridges A -> A | Ci over a common antecedent A.
    FormulaHandle a = parse_formula(opt.var.empty() ? "A" : opt.var);
    auto cs = seed_formulas(opt, "C");
    std::vector<ProofHandle> bridges;
    for (const auto& ci : cs)
      bridges.push_back(axiom("III.a", a.ptr, ci.ptr, nullptr));
    const auto ps = raw(bridges);
    if (target == "cons5")
      require_ok(propcalc_cons_common_to_conj(ps.data(), ps.size(), &out));
    else
      require_ok(propcalc_cons_common_to_disj(ps.data(), ps.size(), &out));
    return ProofHandle(out);
  }

  if (target == "cons9") {
    const auto as = seed_formulas(opt, "A");
    const auto fs = raw(as);
    require_ok(propcalc_conj_implies_disj(fs.data(), fs.size(), method_of(opt),
                                          &out));
    return ProofHandle(out);
  }

  if (target == "proj" || target == "inj") {
    const auto as = seed_formulas(opt, "A");
    const auto fs = raw(as);
    if (target == "proj")
      require_ok(propcalc_projection(fs.data(), fs.size(), opt.index, &out));
    else
      require_ok(propcalc_injection(fs.data(), fs.size(), opt.index, &out));
    return ProofHandle(out);
  }

  if (target == "shape") return build_shape_demo();

  if (target == "example-i" || target == "example-ii" ||
      target == "example-iii") {
    std::string label = target.substr(8);  // "i", "ii", "iii"
    if (label == "iii") label = method_of(opt) == PROPCALC_METHOD_TWO
                                    ? "iii-M2"
                                    : "iii-M1";
    require_ok(propcalc_example(label.c_str(), &out));
    return ProofHandle(out);
  }

  fail(kExitUsage, "error: unknown synth target '" + target + "'");
}

void write_proof_file(const ProofHandle& proof, const std::string& path) {
  char* text = nullptr;
  require_ok(propcalc_proof_print(proof.ptr, &text));
  const std::string body = take_string(text);
  std::ofstream file(path, std::ios::binary);
  if (!file) fail(kExitUsage, "error: cannot write '" + path + "'");
  file << body;
  if (!file.flush()) fail(kExitUsage, "error: cannot write '" + path + "'");
}

// ---------------------------------------------------------------------------
// commands

int cmd_parse(const std::string& text) {
  FormulaHandle f = parse_formula(text);
  char* s = nullptr;
  require_ok(propcalc_formula_print(f.ptr, &s));
  std::cout << take_string(s) << "\n";
  return kExitOk;
}

int cmd_taut(const std::string& text) {
  FormulaHandle f = parse_formula(text);
  int found = 0;
  char* valuation = nullptr;
  require_ok(propcalc_find_counterexample(f.ptr, &found, &valuation));
  if (found) {
    std::cout << "COUNTEREXAMPLE " << take_string(valuation) << "\n";
    return kExitNegative;
  }
  std::cout << "TAUTOLOGY\n";
  return kExitOk;
}

int cmd_check(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) fail(kExitUsage, "error: cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << file.rdbuf();
  const std::string text = buffer.str();

  propcalc_proof* p = nullptr;
  const propcalc_status status = propcalc_proof_parse(text.c_str(), &p);
  if (status != PROPCALC_OK)
    fail(kExitUsage, std::string("error: ") + propcalc_last_error());
  ProofHandle proof(p);

  int ok = 0;
  size_t step = 0;
  char* diagnostic = nullptr;
  require_ok(propcalc_proof_check(proof.ptr, &ok, &step, &diagnostic));
  if (!ok) {
    std::cout << "FAIL: step " << step << ": " << take_string(diagnostic)
              << "\n";
    return kExitNegative;
  }
  std::cout << "OK: " << conclusion_of(proof) << "\n";
  return kExitOk;
}

int cmd_synth(const std::string& target, const SynthOptions& opt,
              const std::string& out_path) {
  ProofHandle proof = build_target(target, opt);
  if (out_path.empty()) {
    char* text = nullptr;
    require_ok(propcalc_proof_print(proof.ptr, &text));
    std::cout << take_string(text);
    return kExitOk;
  }
  write_proof_file(proof, out_path);
  std::cout << "wrote " << out_path << " ("
            << propcalc_proof_num_steps(proof.ptr)
            << " steps): " << conclusion_of(proof) << "\n";
  return kExitOk;
}

int cmd_gallery(const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) fail(kExitUsage, "error: cannot create directory '" + dir + "'");

  std::vector<std::pair<std::string, ProofHandle>> entries;
  for (const char* label : {"i", "ii", "iii-M1", "iii-M2"}) {
    propcalc_proof* p = nullptr;
    require_ok(propcalc_example(label, &p));
    std::string name = std::string("example-") + label + ".prf";
    for (char& ch : name) ch = (ch >= 'A' && ch <= 'Z') ? ch - 'A' + 'a' : ch;
    entries.emplace_back(std::move(name), ProofHandle(p));
  }
  SynthOptions n3;
  n3.n = 3;
  for (int c = 1; c <= 10; ++c) {
    const std::string target = "cons" + std::to_string(c);
    entries.emplace_back(target + ".prf", build_target(target, n3));
  }

  for (const auto& [name, proof] : entries) {
    const std::string path = dir + "/" + name;
    write_proof_file(proof, path);
    std::cout << "wrote " << path << " ("
              << propcalc_proof_num_steps(proof.ptr)
              << " steps): " << conclusion_of(proof) << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"propcalc: proof kernel and synthesizer for Hilbert-style "
               "propositional calculus"};
  app.require_subcommand(1);

  std::string parse_text;
  auto* parse_cmd =
      app.add_subcommand("parse", "Parse a formula, print its canonical form");
  parse_cmd->add_option("formula", parse_text, "formula text")->required();

  std::string taut_text;
  auto* taut_cmd = app.add_subcommand(
      "taut", "Report TAUTOLOGY or a falsifying COUNTEREXAMPLE valuation");
  taut_cmd->add_option("formula", taut_text, "formula text")->required();

  std::string check_path;
  auto* check_cmd =
      app.add_subcommand("check", "Check a proof file against the kernel");
  check_cmd->add_option("file", check_path, "proof file")->required();

  std::string synth_target, synth_out;
  SynthOptions synth_opt;
  auto* synth_cmd = app.add_subcommand(
      "synth",
      "Synthesize a proof; targets: thm1 thm2 lemma cons1..cons10 proj inj "
      "shape example-i example-ii example-iii");
  synth_cmd->add_option("target", synth_target, "synthesis target")->required();
  auto* n_opt = synth_cmd->add_option("--n", synth_opt.n, "element count");
  synth_cmd->add_option("--var", synth_opt.var,
                        "seed formula for single-formula targets");
  synth_cmd->add_option("--vars", synth_opt.vars,
                        "comma-separated seed formulas");
  synth_cmd->add_option("--i", synth_opt.index,
                        "1-based index for proj/inj");
  synth_cmd->add_option("--method", synth_opt.method,
                        "construction method (1 or 2)");
  synth_cmd->add_option("--out", synth_out,
                        "output proof file (default: stdout)");

  std::string gallery_dir;
  auto* gallery_cmd = app.add_subcommand(
      "gallery",
      "Write proof files for examples i-iii and consequences 1-10 at n=3");
  gallery_cmd->add_option("dir", gallery_dir, "output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (parse_cmd->parsed()) return cmd_parse(parse_text);
    if (taut_cmd->parsed()) return cmd_taut(taut_text);
    if (check_cmd->parsed()) return cmd_check(check_path);
    if (synth_cmd->parsed()) {
      synth_opt.n_given = n_opt->count() > 0;
      return cmd_synth(synth_target, synth_opt, synth_out);
    }
    if (gallery_cmd->parsed()) return cmd_gallery(gallery_dir);
  } catch (const CliError& e) {
    std::cerr << e.message << "\n";
    return e.code;
  }
  return kExitUsage;
}
