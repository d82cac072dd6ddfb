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

#include "inqlab.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "duality.hpp"
#include "error.hpp"
#include "formula.hpp"
#include "json_io.hpp"
#include "team.hpp"

struct inqlab_formula {
  inqlab::Formula value;
};

struct inqlab_model {
  inqlab::Model value;
};

struct inqlab_algebra {
  inqlab::FiniteAlgebra value;
};

namespace {

using inqlab::Errc;
using inqlab::InqError;
using inqlab::OrderedJson;

thread_local std::string g_last_error;

// Errc values are exposed one to one as negative statuses.
inqlab_status status_of(Errc e) {
  return static_cast<inqlab_status>(-(static_cast<int>(e) + 1));
}

static_assert(-(static_cast<int>(Errc::SyntaxError) + 1) ==
              INQLAB_SYNTAX_ERROR);
static_assert(-(static_cast<int>(Errc::MissingAtom) + 1) ==
              INQLAB_MISSING_ATOM);
static_assert(-(static_cast<int>(Errc::BadInput) + 1) == INQLAB_BAD_INPUT);
static_assert(-(static_cast<int>(Errc::Internal) + 1) == INQLAB_INTERNAL);

template <typename Fn>
inqlab_status guarded(Fn&& fn) {
  try {
    std::forward<Fn>(fn)();
    return INQLAB_OK;
  } catch (const InqError& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = std::string("Internal: ") + e.what();
    return INQLAB_INTERNAL;
  } catch (...) {
    g_last_error = "Internal: unknown failure";
    return INQLAB_INTERNAL;
  }
}

void require(bool nonnull) {
  if (!nonnull) inqlab::fail(Errc::BadInput, "null argument");
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) inqlab::fail(Errc::Internal, "out of memory");
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_flag(int* slot, bool value) {
  if (slot) *slot = value ? 1 : 0;
}

inqlab::Flavour flavour_of(inqlab_flavour flavour) {
  if (flavour != INQLAB_INQ && flavour != INQLAB_DEP)
    inqlab::fail(Errc::BadInput, "unknown flavour");
  return flavour == INQLAB_DEP ? inqlab::Flavour::Dep : inqlab::Flavour::Inq;
}

std::vector<std::string> split_team(const std::string& csv) {
  std::vector<std::string> names;
  std::size_t start = 0;
  if (csv.empty()) return names;
  while (true) {
    std::size_t comma = csv.find(',', start);
    std::string item = csv.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    std::size_t lo = item.find_first_not_of(" \t");
    std::size_t hi = item.find_last_not_of(" \t");
    names.push_back(lo == std::string::npos
                        ? std::string()
                        : item.substr(lo, hi - lo + 1));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return names;
}

}  // namespace

extern "C" {

const char* inqlab_last_error(void) { return g_last_error.c_str(); }

void inqlab_string_free(char* s) { std::free(s); }
void inqlab_formula_free(inqlab_formula* f) { delete f; }
void inqlab_model_free(inqlab_model* m) { delete m; }
void inqlab_algebra_free(inqlab_algebra* a) { delete a; }

/* ---- formulas ---------------------------------------------------------- */

inqlab_status inqlab_parse(const char* text, inqlab_formula** out) {
  return guarded([&] {
    require(text && out);
    *out = new inqlab_formula{inqlab::parse(text)};
  });
}

inqlab_status inqlab_axiom(const char* schema, const char* const* args,
                           size_t n_args, inqlab_formula** out) {
  return guarded([&] {
    require(schema && out && (n_args == 0 || args));
    std::vector<inqlab::Formula> parsed;
    parsed.reserve(n_args);
    for (size_t i = 0; i < n_args; ++i) {
      require(args[i]);
      parsed.push_back(inqlab::parse(args[i]));
    }
    *out = new inqlab_formula{inqlab::axiom_instances(schema, parsed)};
  });
}

inqlab_status inqlab_substitute(const inqlab_formula* f, const char* atom,
                                const inqlab_formula* replacement,
                                inqlab_formula** out) {
  return guarded([&] {
    require(f && atom && replacement && out);
    *out = new inqlab_formula{inqlab::substitute_standard(
        f->value, {{atom, replacement->value}})};
  });
}

inqlab_status inqlab_print(const inqlab_formula* f, char** out) {
  return guarded([&] {
    require(f && out);
    *out = dup_string(inqlab::print(f->value));
  });
}

inqlab_status inqlab_is_standard(const inqlab_formula* f, int* out) {
  return guarded([&] {
    require(f && out);
    *out = inqlab::is_standard(f->value) ? 1 : 0;
  });
}

inqlab_status inqlab_formula_info(const inqlab_formula* f, char** out_json) {
  return guarded([&] {
    require(f && out_json);
    OrderedJson j;
    j["formula"] = inqlab::print(f->value);
    j["standard"] = inqlab::is_standard(f->value);
    j["atoms"] = inqlab::atoms(f->value);
    *out_json = dup_string(inqlab::write_json(j));
  });
}

inqlab_status inqlab_dnf(const inqlab_formula* f, char** out_json) {
  return guarded([&] {
    require(f && out_json);
    std::vector<std::string> printed;
    for (const auto& d : inqlab::dnf(f->value))
      printed.push_back(inqlab::print(d));
    OrderedJson j;
    j["formula"] = inqlab::print(f->value);
    j["disjuncts"] = printed;
    *out_json = dup_string(inqlab::write_json(j));
  });
}

/* ---- models ------------------------------------------------------------ */

inqlab_status inqlab_model_from_json(const char* text, inqlab_model** out) {
  return guarded([&] {
    require(text && out);
    *out = new inqlab_model{inqlab::model_from_json(text)};
  });
}

inqlab_status inqlab_model_to_json(const inqlab_model* m, char** out_json) {
  return guarded([&] {
    require(m && out_json);
    *out_json = dup_string(inqlab::model_to_json(m->value));
  });
}

inqlab_status inqlab_eval_team(const inqlab_model* m, const char* team_csv,
                               const inqlab_formula* f, char** out_json,
                               int* supports) {
  return guarded([&] {
    require(m && team_csv && f && out_json);
    inqlab::Team t =
        inqlab::team_of(m->value.frame, split_team(team_csv));
    bool verdict = inqlab::eval_team(m->value, t, f->value);
    OrderedJson j;
    j["supports"] = verdict;
    *out_json = dup_string(inqlab::write_json(j));
    set_flag(supports, verdict);
  });
}

inqlab_status inqlab_model_valid(const inqlab_model* m,
                                 const inqlab_formula* f, char** out_json,
                                 int* valid) {
  return guarded([&] {
    require(m && f && out_json);
    bool verdict = inqlab::model_valid(m->value, f->value);
    OrderedJson j;
    j["valid"] = verdict;
    *out_json = dup_string(inqlab::write_json(j));
    set_flag(valid, verdict);
  });
}

inqlab_status inqlab_frame_valid(const inqlab_model* m,
                                 const inqlab_formula* f, char** out_json,
                                 int* valid) {
  return guarded([&] {
    require(m && f && out_json);
    bool verdict = inqlab::frame_valid(m->value.frame, f->value);
    OrderedJson j;
    j["valid"] = verdict;
    *out_json = dup_string(inqlab::write_json(j));
    set_flag(valid, verdict);
  });
}

inqlab_status inqlab_flatness_check(const inqlab_model* m,
                                    const inqlab_formula* f, char** out_json,
                                    int* flat) {
  return guarded([&] {
    require(m && f && out_json);
    bool verdict = inqlab::flatness_check(m->value, f->value);
    OrderedJson j;
    j["flat"] = verdict;
    *out_json = dup_string(inqlab::write_json(j));
    set_flag(flat, verdict);
  });
}

inqlab_status inqlab_countermodel(const inqlab_formula* f, int max_worlds,
                                  int classical, int dedup_iso, int jobs,
                                  int deterministic, char** out_json,
                                  int* found) {
  return guarded([&] {
    require(f && out_json);
    inqlab::SearchOptions opts;
    opts.classical = classical != 0;
    opts.dedup_iso = dedup_iso != 0;
    opts.jobs = jobs >= 1 ? jobs : 1;
    opts.deterministic = deterministic != 0;
    inqlab::CountermodelResult r =
        inqlab::countermodel_search(f->value, max_worlds, opts);
    OrderedJson j;
    j["found"] = r.found;
    if (r.found) {
      j["model"] = inqlab::model_to_ojson(r.model);
      j["team"] = inqlab::team_names(r.model.frame, r.team);
    } else {
      j["valid_up_to"] = r.valid_up_to;
    }
    *out_json = dup_string(inqlab::write_json(j));
    set_flag(found, r.found);
  });
}

/* ---- algebras ---------------------------------------------------------- */

inqlab_status inqlab_algebra_from_json(const char* text,
                                       inqlab_algebra** out) {
  return guarded([&] {
    require(text && out);
    *out = new inqlab_algebra{inqlab::algebra_from_json(text)};
  });
}

inqlab_status inqlab_algebra_to_json(const inqlab_algebra* a,
                                     char** out_json) {
  return guarded([&] {
    require(a && out_json);
    *out_json = dup_string(inqlab::algebra_to_json(a->value));
  });
}

inqlab_status inqlab_check_algebra(const inqlab_algebra* a,
                                   inqlab_flavour flavour, char** out_json,
                                   int* ok) {
  return guarded([&] {
    require(a && out_json);
    inqlab::AlgebraReport report =
        flavour_of(flavour) == inqlab::Flavour::Dep
            ? inqlab::validate_dep_algebra(a->value)
            : inqlab::validate_inq_algebra(a->value);
    OrderedJson j;
    j["ok"] = report.ok;
    if (!report.ok) {
      j["check"] = report.check;
      j["detail"] = report.detail;
    }
    *out_json = dup_string(inqlab::write_json(j));
    set_flag(ok, report.ok);
  });
}

inqlab_status inqlab_algebra_valid(const inqlab_algebra* a,
                                   const inqlab_formula* f, char** out_json,
                                   int* valid) {
  return guarded([&] {
    require(a && f && out_json);
    bool verdict = inqlab::algebra_valid(a->value, f->value);
    OrderedJson j;
    j["valid"] = verdict;
    *out_json = dup_string(inqlab::write_json(j));
    set_flag(valid, verdict);
  });
}

inqlab_status inqlab_horn_check(const inqlab_algebra* a,
                                const inqlab_formula* f, char** out_json,
                                int* valid) {
  return guarded([&] {
    require(a && f && out_json);
    bool verdict = inqlab::horn_check(a->value, f->value);
    OrderedJson j;
    j["valid"] = verdict;
    *out_json = dup_string(inqlab::write_json(j));
    set_flag(valid, verdict);
  });
}

inqlab_status inqlab_horn_equation(const inqlab_algebra* a,
                                   const inqlab_formula* eps,
                                   const inqlab_formula* delta,
                                   char** out_json, int* valid) {
  return guarded([&] {
    require(a && eps && delta && out_json);
    bool verdict = inqlab::horn_check(a->value, eps->value, delta->value);
    OrderedJson j;
    j["valid"] = verdict;
    *out_json = dup_string(inqlab::write_json(j));
    set_flag(valid, verdict);
  });
}

inqlab_status inqlab_eval_core(const inqlab_algebra* a, const char* mu_json,
                               const inqlab_formula* f, char** out_json,
                               int* designated) {
  return guarded([&] {
    require(a && mu_json && f && out_json);
    inqlab::CoreValuation mu =
        inqlab::core_valuation_from_json(a->value, mu_json);
    int v = inqlab::eval_core(a->value, mu, f->value);
    OrderedJson j;
    j["value"] = a->value.names[v];
    j["designated"] = (v == a->value.one);
    *out_json = dup_string(inqlab::write_json(j));
    set_flag(designated, v == a->value.one);
  });
}

inqlab_status inqlab_birkhoff_reduce(const inqlab_algebra* a,
                                     const inqlab_formula* f,
                                     inqlab_flavour flavour,
                                     char** out_json) {
  return guarded([&] {
    require(a && f && out_json);
    inqlab::BirkhoffResult r =
        inqlab::birkhoff_reduce(a->value, f->value, flavour_of(flavour));
    OrderedJson j;
    j["algebra"] = inqlab::algebra_to_ojson(r.algebra);
    j["refuting_valuation"] =
        inqlab::core_valuation_to_ojson(r.algebra, r.refuting_valuation);
    *out_json = dup_string(inqlab::write_json(j));
  });
}

inqlab_status inqlab_dep_finite_refuter(const inqlab_algebra* a,
                                        const inqlab_formula* f,
                                        char** out_json) {
  return guarded([&] {
    require(a && f && out_json);
    inqlab::BirkhoffResult r =
        inqlab::dep_finite_refuter(a->value, f->value);
    OrderedJson j;
    j["algebra"] = inqlab::algebra_to_ojson(r.algebra);
    j["refuting_valuation"] =
        inqlab::core_valuation_to_ojson(r.algebra, r.refuting_valuation);
    *out_json = dup_string(inqlab::write_json(j));
  });
}

/* ---- duality ----------------------------------------------------------- */

inqlab_status inqlab_dualize(const inqlab_model* m, inqlab_flavour flavour,
                             char** out_json) {
  return guarded([&] {
    require(m && out_json);
    inqlab::DualAlgebra d =
        inqlab::dual_algebra(m->value.frame, flavour_of(flavour));
    *out_json = dup_string(inqlab::dual_algebra_to_json(d));
  });
}

inqlab_status inqlab_dualize_back(const inqlab_algebra* a, char** out_json) {
  return guarded([&] {
    require(a && out_json);
    *out_json =
        dup_string(inqlab::frame_to_json(inqlab::algebra_to_frame(a->value)));
  });
}

inqlab_status inqlab_cross_check(const inqlab_model* m,
                                 const inqlab_formula* f,
                                 inqlab_flavour flavour, char** out_json,
                                 int* match) {
  return guarded([&] {
    require(m && f && out_json);
    inqlab::Flavour fl = flavour_of(flavour);
    bool team = inqlab::model_valid(m->value, f->value);
    inqlab::DualModel dm = inqlab::canonical_core_valuation(m->value, fl);
    bool algebra =
        inqlab::eval_core(dm.dual.algebra, dm.mu, f->value) ==
        dm.dual.algebra.one;
    OrderedJson j;
    j["team"] = team;
    j["algebra"] = algebra;
    j["match"] = (team == algebra);
    *out_json = dup_string(inqlab::write_json(j));
    set_flag(match, team == algebra);
  });
}

inqlab_status inqlab_round_trip_frame(const inqlab_model* m,
                                      inqlab_flavour flavour,
                                      char** out_json, int* ok) {
  return guarded([&] {
    require(m && out_json);
    inqlab::RoundTripReport r =
        inqlab::round_trip_frame(m->value.frame, flavour_of(flavour));
    OrderedJson j;
    j["ok"] = r.ok;
    if (r.ok) {
      j["iso"] = r.iso;
    } else {
      j["detail"] = r.detail;
    }
    *out_json = dup_string(inqlab::write_json(j));
    set_flag(ok, r.ok);
  });
}

inqlab_status inqlab_round_trip_algebra(const inqlab_algebra* a,
                                        inqlab_flavour flavour,
                                        char** out_json, int* ok) {
  return guarded([&] {
    require(a && out_json);
    inqlab::RoundTripReport r =
        inqlab::round_trip_algebra(a->value, flavour_of(flavour));
    OrderedJson j;
    j["ok"] = r.ok;
    if (r.ok) {
      std::vector<std::string> named;
      for (int e : r.iso) named.push_back(a->value.names[e]);
      j["iso"] = named;
    } else {
      j["detail"] = r.detail;
    }
    *out_json = dup_string(inqlab::write_json(j));
    set_flag(ok, r.ok);
  });
}

}  // extern "C"
