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

// Shared fixtures for the acceptance suite: the formula corpus (every axiom
// schema instantiated with atoms, plus seeded random formulas of depth at
// most 3), the enumerated small frames and models, and the algebra zoo of
// all upset lattices with at most 8 elements.

#ifndef INQLAB_TESTS_CORPUS_HPP
#define INQLAB_TESTS_CORPUS_HPP

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "formula.hpp"
#include "team.hpp"

namespace corpus {

using inqlab::FiniteAlgebra;
using inqlab::Formula;
using inqlab::Frame;
using inqlab::Model;
using inqlab::Team;

constexpr std::uint64_t kSeed = 20260821;

// All A1..A15 instances whose slots are filled from {p, q}: 100 formulas.
inline std::vector<Formula> axiom_corpus() {
  std::vector<Formula> out;
  const Formula slots[2] = {inqlab::atom("p"), inqlab::atom("q")};
  for (int i = 1; i <= 15; ++i) {
    const std::string name = "A" + std::to_string(i);
    const int arity = inqlab::axiom_arity(name);
    for (int mask = 0; mask < (1 << arity); ++mask) {
      std::vector<Formula> args;
      for (int s = 0; s < arity; ++s) args.push_back(slots[(mask >> s) & 1]);
      out.push_back(inqlab::axiom_instances(name, args));
    }
  }
  return out;
}

// Seeded random formulas over {p, q} with connective depth at most 3.
inline std::vector<Formula> random_corpus(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  auto pick = [&rng](int n) {
    return static_cast<int>(rng() % static_cast<std::uint64_t>(n));
  };
  // 0 atom p, 1 atom q, 2 bottom, 3 and, 4 or, 5 impl, 6 tensor, 7 not
  std::function<Formula(int)> gen = [&](int depth) -> Formula {
    const int kind = depth == 0 ? pick(3) : pick(8);
    switch (kind) {
      case 0: return inqlab::atom("p");
      case 1: return inqlab::atom("q");
      case 2: return inqlab::bot();
      case 3: return inqlab::land(gen(depth - 1), gen(depth - 1));
      case 4: return inqlab::lor(gen(depth - 1), gen(depth - 1));
      case 5: return inqlab::impl(gen(depth - 1), gen(depth - 1));
      case 6: return inqlab::tensor(gen(depth - 1), gen(depth - 1));
      default: return inqlab::lnot(gen(depth - 1));
    }
  };
  std::vector<Formula> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) out.push_back(gen(3));
  return out;
}

// The acceptance corpus: ~200 formulas.
inline const std::vector<Formula>& full_corpus() {
  static const std::vector<Formula> corpus = [] {
    std::vector<Formula> out = axiom_corpus();
    for (auto& f : random_corpus(kSeed, 100)) out.push_back(std::move(f));
    return out;
  }();
  return corpus;
}

// All frames with at most n worlds, one per isomorphism class.
inline std::vector<Frame> frames_up_to(int n) {
  std::vector<Frame> out;
  inqlab::enumerate_frames(n, true, [&](const Frame& f) {
    out.push_back(f);
    return true;
  });
  return out;
}

// Every model on the frame whose valuation assigns upsets to p and q.
inline std::vector<Model> models_on(const Frame& f) {
  const std::vector<Team> ups = inqlab::upset_masks(f);
  std::vector<Model> out;
  for (Team vp : ups)
    for (Team vq : ups) out.push_back(Model{f, {{"p", vp}, {"q", vq}}});
  return out;
}

inline Frame two_chain() {
  return inqlab::rt_closure(inqlab::make_frame({"w1", "w2"}, {{0, 1}}));
}

inline Frame discrete_two() {
  return inqlab::rt_closure(inqlab::make_frame({"w1", "w2"}, {}));
}

inline bool is_discrete(const Frame& f) {
  for (int w = 0; w < f.size(); ++w)
    if (f.succ[w] != (Team{1} << w)) return false;
  return true;
}

// Upset lattices with at most 8 elements, full core: all 35 Heyting
// algebras of that size, each a validated inquisitive algebra.
inline const std::vector<FiniteAlgebra>& heyting_zoo() {
  static const std::vector<FiniteAlgebra> zoo = [] {
    std::vector<FiniteAlgebra> out;
    inqlab::enumerate_frames(7, true, [&](const Frame& fr) {
      const std::vector<Team> ups = inqlab::upset_masks(fr);
      const int m = static_cast<int>(ups.size());
      if (m > 8) return true;
      std::vector<std::string> names;
      for (int i = 0; i < m; ++i) names.push_back("u" + std::to_string(i));
      std::vector<std::vector<char>> leq(m, std::vector<char>(m, 0));
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
          leq[i][j] = ((ups[i] & ~ups[j]) == 0) ? 1 : 0;
      FiniteAlgebra a =
          inqlab::derive_tables(std::move(names), std::move(leq), 0);
      a.core.assign(m, 1);
      out.push_back(std::move(a));
      return true;
    });
    return out;
  }();
  return zoo;
}

// Dependence variants of the zoo. A full core forces the tensor to agree
// with the join on all of the carrier, so that is the only candidate; only
// the variants passing the dependence laws are kept.
inline const std::vector<FiniteAlgebra>& dep_zoo() {
  static const std::vector<FiniteAlgebra> zoo = [] {
    std::vector<FiniteAlgebra> out;
    for (const FiniteAlgebra& h : heyting_zoo()) {
      FiniteAlgebra a = h;
      a.tensor = a.join;
      if (inqlab::validate_dep_algebra(a).ok) out.push_back(std::move(a));
    }
    return out;
  }();
  return zoo;
}

}  // namespace corpus

#endif  // INQLAB_TESTS_CORPUS_HPP
