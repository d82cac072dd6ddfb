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

#ifndef INQLAB_ALGEBRA_HPP
#define INQLAB_ALGEBRA_HPP

#include <map>
#include <string>
#include <vector>

#include "formula.hpp"

namespace inqlab {

enum class Flavour { Inq, Dep };

// A finite inquisitive or dependence algebra: a bounded lattice given by its
// order, with derived operation tables, a distinguished core subset, and an
// optional tensor table (dependence flavour). Implication outside the
// core-generated part is the residuation-join formula; the validators only
// quantify where the definitions demand.
struct FiniteAlgebra {
  std::vector<std::string> names;
  std::vector<std::vector<char>> leq;
  std::vector<std::vector<int>> meet, join, impl;
  std::vector<std::vector<int>> tensor;  // empty when absent
  std::vector<char> core;                // flags, size() entries
  int zero = -1;
  int one = -1;

  int size() const { return static_cast<int>(names.size()); }
  bool has_tensor() const { return !tensor.empty(); }
};

// Fills meet/join/impl/one from the order: meet/join as glb/lub (error
// NotALattice naming a pair without one), implication as
// x→y = ⋁{c : c∧x ≤ y}. Core and tensor are left for the caller to set.
FiniteAlgebra derive_tables(std::vector<std::string> names,
                            std::vector<std::vector<char>> leq, int zero);

struct AlgebraReport {
  bool ok = true;
  std::string check;   // name of the violated law
  std::string detail;  // witnesses, human readable
};

// Core closed under {∧,→,0}; ⟨A_c⟩ is a Heyting algebra; Split holds for
// a ∈ core and x,y ∈ ⟨A_c⟩. Reports the first failure.
AlgebraReport validate_inq_algebra(const FiniteAlgebra& a);

// The inquisitive checks with ⊗ added to the core closure, plus: the core
// is a lattice with ⊗ as its join, Dist, and Mon over ⟨A_c⟩.
AlgebraReport validate_dep_algebra(const FiniteAlgebra& a);

using CoreValuation = std::map<std::string, int>;

// ⟨A_c⟩: the closure of the core under {∧,∨,→} (and ⊗ when present),
// as a sorted list of element indices.
std::vector<int> core_generated_carrier(const FiniteAlgebra& a);

// Interprets φ under a core valuation. Errors: MissingAtom when μ misses an
// atom of φ; MissingTensor when φ uses ⊗ and the algebra has no table;
// BadInput when μ maps an atom outside the core.
int eval_core(const FiniteAlgebra& a, const CoreValuation& mu,
              const Formula& phi);

// A ⊨^c φ: eval_core = 1 under every core valuation of atoms(φ).
bool algebra_valid(const FiniteAlgebra& a, const Formula& phi);

// Direct evaluation of the universal Horn translation: quantifies carrier
// tuples, guards them by the core predicate, and evaluates the term with a
// code path separate from eval_core. Must agree with algebra_valid.
bool horn_check(const FiniteAlgebra& a, const Formula& phi);
// Equation form: ε = δ under every core-flagged assignment.
bool horn_check(const FiniteAlgebra& a, const Formula& eps,
                const Formula& delta);

// Join-irreducibles of ⟨A_c⟩: x with no a,b < x in ⟨A_c⟩ joining to x
// (0 qualifies vacuously). Sorted element indices.
std::vector<int> join_irreducibles(const FiniteAlgebra& a);

// x∨y = 1 forces x = 1 or y = 1 within ⟨A_c⟩.
bool is_well_connected(const FiniteAlgebra& a);

// ⟨A_c⟩ exhausts the carrier.
bool is_core_generated(const FiniteAlgebra& a);

// The maximal core elements below x: pairwise incomparable with join x.
// Error NotInCoreClosure when x ∉ ⟨A_c⟩.
std::vector<int> disjunctive_rep(const FiniteAlgebra& a, int x);

struct GeneratedSubalgebra {
  FiniteAlgebra algebra;
  std::vector<int> carrier;  // indices into the parent algebra
};

// Smallest inquisitive subalgebra containing X ⊆ core: the Brouwerian
// closure Y of X∪{0} under {∧,→} becomes the core, the {∧,∨}-closure of Y
// the carrier. The implication recomputed from core decompositions must
// agree with the parent's; a mismatch is an internal error.
GeneratedSubalgebra generated_subalgebra(const FiniteAlgebra& a,
                                         const std::vector<int>& x);

struct WronskiResult {
  FiniteAlgebra algebra;
  std::vector<int> hom;      // parent element -> quotient element
  std::vector<int> carrier;  // quotient elements as parent indices
};

// Quotient by the congruence of a filter maximal among those avoiding x
// (realised as u ↦ u∧a for the minimal a ≰ x, smallest index on ties).
// The result is well-connected and h(x) is its unique coatom. Error XIsTop.
WronskiResult wronski_quotient(const FiniteAlgebra& h, int x);

struct BirkhoffResult {
  FiniteAlgebra algebra;
  CoreValuation refuting_valuation;
};

// Refutation shrinking: restrict to ⟨A_c⟩, find a refuting core valuation,
// quotient at the interpretation element, reconstitute the core (and, for
// the dependence flavour, the tensor as core re-join plus lift). The result
// is finite, core-generated, well-connected, and still refutes φ.
// Error PhiIsValid when there is nothing to refute.
BirkhoffResult birkhoff_reduce(const FiniteAlgebra& a, const Formula& phi,
                               Flavour flavour);

// Finite dependence refuter: interpret the subformulas of dnf(φ)'s
// disjuncts, close under {∧,⊗,0} (the new core) and then {∧,∨}, and equip
// the result with the fake implication ⋁{c : c∧x ≤ y} and the lifted
// tensor. Errors: PhiIsValid; NotWellConnected.
BirkhoffResult dep_finite_refuter(const FiniteAlgebra& a, const Formula& phi);

// Homomorphism checker, one operation at a time: meet, join, impl, zero,
// core containment, and tensor for the dependence flavour. The report names
// the first operation that fails to commute.
AlgebraReport check_hom(const FiniteAlgebra& src, const FiniteAlgebra& dst,
                        const std::vector<int>& map, Flavour flavour);

}  // namespace inqlab

#endif  // INQLAB_ALGEBRA_HPP
