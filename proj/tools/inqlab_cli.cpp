/*
 *   Copyright 2026 The inqlab authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Command-line front end. Every verb is a thin adapter around one library
// call: the JSON line on stdout is exactly what the library returned, all
// diagnostics go to stderr. Exit codes: 0 computed, 1 property refuted or
// countermodel found, 2 usage or input error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "inqlab.h"

namespace {

constexpr int kComputed = 0;
constexpr int kRefuted = 1;
constexpr int kUsage = 2;

// Prints the library's error message and signals the input error.
[[noreturn]] void die() {
  std::cerr << inqlab_last_error() << "\n";
  std::exit(kUsage);
}

void check(inqlab_status status) {
  if (status != INQLAB_OK) die();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "cannot read file '" << path << "'\n";
    std::exit(kUsage);
  }
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

// Prints one JSON line and releases the library string.
void emit(char* json) {
  std::cout << json << "\n";
  inqlab_string_free(json);
}

struct FormulaDeleter {
  void operator()(inqlab_formula* f) const { inqlab_formula_free(f); }
};
struct ModelDeleter {
  void operator()(inqlab_model* m) const { inqlab_model_free(m); }
};
struct AlgebraDeleter {
  void operator()(inqlab_algebra* a) const { inqlab_algebra_free(a); }
};

std::unique_ptr<inqlab_formula, FormulaDeleter> parse_formula(
    const std::string& text) {
  inqlab_formula* f = nullptr;
  check(inqlab_parse(text.c_str(), &f));
  return std::unique_ptr<inqlab_formula, FormulaDeleter>(f);
}

std::unique_ptr<inqlab_model, ModelDeleter> load_model(
    const std::string& path) {
  inqlab_model* m = nullptr;
  check(inqlab_model_from_json(slurp(path).c_str(), &m));
  return std::unique_ptr<inqlab_model, ModelDeleter>(m);
}

std::unique_ptr<inqlab_algebra, AlgebraDeleter> load_algebra(
    const std::string& path) {
  inqlab_algebra* a = nullptr;
  check(inqlab_algebra_from_json(slurp(path).c_str(), &a));
  return std::unique_ptr<inqlab_algebra, AlgebraDeleter>(a);
}

inqlab_flavour flavour_of(const std::string& name) {
  return name == "dep" ? INQLAB_DEP : INQLAB_INQ;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-model workbench for inquisitive and dependence logic"};
  app.require_subcommand(1);

  std::string formula_text;
  std::string model_path;
  std::string frame_path;
  std::string algebra_path;
  std::string team_csv;
  std::string flavour = "inq";
  std::string schema;
  std::vector<std::string> schema_args;
  int max_worlds = 3;
  int jobs = 1;
  unsigned long long seed = 0;
  bool classical = false;
  bool dedup_iso = false;
  bool deterministic = true;

  auto* parse_cmd = app.add_subcommand("parse", "parse a formula");
  parse_cmd->add_option("--formula", formula_text, "formula text")
      ->required();

  auto* dnf_cmd =
      app.add_subcommand("dnf", "standard disjuncts of a formula");
  dnf_cmd->add_option("--formula", formula_text, "formula text")->required();

  auto* axiom_cmd =
      app.add_subcommand("axiom", "instantiate an axiom schema A1..A15");
  axiom_cmd->add_option("--schema", schema, "schema name, e.g. A10")
      ->required();
  axiom_cmd->add_option("--arg", schema_args,
                        "argument formula, once per slot");

  auto* eval_cmd =
      app.add_subcommand("eval", "team support in a Kripke model");
  eval_cmd->add_option("--model", model_path, "model file")->required();
  eval_cmd->add_option("--team", team_csv, "comma-separated worlds")
      ->required();
  eval_cmd->add_option("--formula", formula_text, "formula text")->required();

  auto* valid_team_cmd =
      app.add_subcommand("valid-team", "support at every team of a model");
  valid_team_cmd->add_option("--model", model_path, "model file")->required();
  valid_team_cmd->add_option("--formula", formula_text, "formula text")
      ->required();

  auto* valid_alg_cmd = app.add_subcommand(
      "valid-alg", "designated value under every core valuation");
  valid_alg_cmd->add_option("--algebra", algebra_path, "algebra file")
      ->required();
  valid_alg_cmd->add_option("--formula", formula_text, "formula text")
      ->required();

  auto* counter_cmd = app.add_subcommand(
      "countermodel", "search finite models for a refuting team");
  counter_cmd->add_option("--formula", formula_text, "formula text")
      ->required();
  counter_cmd->add_option("--max-worlds", max_worlds, "largest frame size");
  counter_cmd->add_flag("--classical", classical, "discrete frames only");
  counter_cmd->add_flag("--dedup-iso", dedup_iso,
                        "skip isomorphic frames");
  counter_cmd->add_option("--jobs", jobs, "worker threads");
  counter_cmd->add_flag("--deterministic,!--no-deterministic", deterministic,
                        "sequential first-hit order");
  counter_cmd->add_option(
      "--seed", seed,
      "fixes randomised enumeration orders; the shipped search is "
      "deterministic, so this is accepted and unused");

  auto* check_alg_cmd = app.add_subcommand(
      "check-algebra", "validate the algebra laws of a flavour");
  check_alg_cmd->add_option("--algebra", algebra_path, "algebra file")
      ->required();
  check_alg_cmd->add_option("--flavour", flavour, "inq or dep")
      ->check(CLI::IsMember({"inq", "dep"}));

  auto* dualize_cmd = app.add_subcommand(
      "dualize", "canonical algebra of a frame, with provenance");
  dualize_cmd->add_option("--frame", frame_path, "frame or model file")
      ->required();
  dualize_cmd->add_option("--flavour", flavour, "inq or dep")
      ->check(CLI::IsMember({"inq", "dep"}));

  auto* dualize_back_cmd = app.add_subcommand(
      "dualize-back", "frame of join-irreducible core elements");
  dualize_back_cmd->add_option("--algebra", algebra_path, "algebra file")
      ->required();

  auto* cross_cmd = app.add_subcommand(
      "cross-check", "compare team validity with the dual algebra verdict");
  cross_cmd->add_option("--model", model_path, "model file")->required();
  cross_cmd->add_option("--formula", formula_text, "formula text")
      ->required();
  cross_cmd->add_option("--flavour", flavour, "inq or dep")
      ->check(CLI::IsMember({"inq", "dep"}));

  auto* reduce_cmd = app.add_subcommand(
      "reduce", "shrink a refutation to a core-generated well-connected "
                "algebra");
  reduce_cmd->add_option("--algebra", algebra_path, "algebra file")
      ->required();
  reduce_cmd->add_option("--formula", formula_text, "formula text")
      ->required();
  reduce_cmd->add_option("--flavour", flavour, "inq or dep")
      ->check(CLI::IsMember({"inq", "dep"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kComputed : kUsage;
  }

  char* out = nullptr;

  if (parse_cmd->parsed()) {
    auto f = parse_formula(formula_text);
    check(inqlab_formula_info(f.get(), &out));
    emit(out);
    return kComputed;
  }

  if (dnf_cmd->parsed()) {
    auto f = parse_formula(formula_text);
    check(inqlab_dnf(f.get(), &out));
    emit(out);
    return kComputed;
  }

  if (axiom_cmd->parsed()) {
    std::vector<const char*> args;
    for (const auto& a : schema_args) args.push_back(a.c_str());
    inqlab_formula* f = nullptr;
    check(inqlab_axiom(schema.c_str(), args.data(), args.size(), &f));
    std::unique_ptr<inqlab_formula, FormulaDeleter> owner(f);
    check(inqlab_formula_info(f, &out));
    emit(out);
    return kComputed;
  }

  if (eval_cmd->parsed()) {
    auto m = load_model(model_path);
    auto f = parse_formula(formula_text);
    check(inqlab_eval_team(m.get(), team_csv.c_str(), f.get(), &out,
                           nullptr));
    emit(out);
    return kComputed;
  }

  if (valid_team_cmd->parsed()) {
    auto m = load_model(model_path);
    auto f = parse_formula(formula_text);
    int valid = 0;
    check(inqlab_model_valid(m.get(), f.get(), &out, &valid));
    emit(out);
    return valid ? kComputed : kRefuted;
  }

  if (valid_alg_cmd->parsed()) {
    auto a = load_algebra(algebra_path);
    auto f = parse_formula(formula_text);
    int valid = 0;
    check(inqlab_algebra_valid(a.get(), f.get(), &out, &valid));
    emit(out);
    return valid ? kComputed : kRefuted;
  }

  if (counter_cmd->parsed()) {
    auto f = parse_formula(formula_text);
    int found = 0;
    check(inqlab_countermodel(f.get(), max_worlds, classical ? 1 : 0,
                              dedup_iso ? 1 : 0, jobs, deterministic ? 1 : 0,
                              &out, &found));
    emit(out);
    return found ? kRefuted : kComputed;
  }

  if (check_alg_cmd->parsed()) {
    auto a = load_algebra(algebra_path);
    int ok = 0;
    check(inqlab_check_algebra(a.get(), flavour_of(flavour), &out, &ok));
    emit(out);
    return ok ? kComputed : kRefuted;
  }

  if (dualize_cmd->parsed()) {
    auto m = load_model(frame_path);
    check(inqlab_dualize(m.get(), flavour_of(flavour), &out));
    emit(out);
    return kComputed;
  }

  if (dualize_back_cmd->parsed()) {
    auto a = load_algebra(algebra_path);
    check(inqlab_dualize_back(a.get(), &out));
    emit(out);
    return kComputed;
  }

  if (cross_cmd->parsed()) {
    auto m = load_model(model_path);
    auto f = parse_formula(formula_text);
    int match = 0;
    check(inqlab_cross_check(m.get(), f.get(), flavour_of(flavour), &out,
                             &match));
    emit(out);
    return match ? kComputed : kRefuted;
  }

  if (reduce_cmd->parsed()) {
    auto a = load_algebra(algebra_path);
    auto f = parse_formula(formula_text);
    check(inqlab_birkhoff_reduce(a.get(), f.get(), flavour_of(flavour),
                                 &out));
    emit(out);
    return kComputed;
  }

  std::cerr << "no verb selected\n";
  return kUsage;
}
