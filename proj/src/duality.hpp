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

#ifndef INQLAB_DUALITY_HPP
#define INQLAB_DUALITY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "team.hpp"

namespace inqlab {

// The upset lattice of a frame: every R-upward-closed world set, sorted.
std::vector<Team> upsets(const Frame& f);

// A finite algebra with its frame provenance. Elements are the nonempty
// downward closed families of upsets, stored as bitmasks over upset
// indices; core elements are the principal families, each remembering the
// upset that generates it.
struct DualAlgebra {
  FiniteAlgebra algebra;
  std::vector<std::string> world_names;
  std::vector<Team> upsets;               // the upset lattice
  std::vector<std::uint64_t> families;    // element -> family bitmask
  std::vector<int> core_upset;            // element -> upset index, -1 if
                                          // the element is not principal

  // Index of the element denoting the given family; internal error when the
  // family is not downward closed.
  int element_of(std::uint64_t family) const;
};

// Meet is intersection, join is union, zero is {emptyset}, implication is
// derived by residuation; the dependence flavour adds the tensor
// {t}v x {s}v = {t cup s}v on the core together with its join lift. The
// output validates and is finite, core generated, and well connected.
DualAlgebra dual_algebra(const Frame& f, Flavour flavour);

// The contravariant dual of a structure map: an algebra map from the dual
// of p.target to the dual of p.source. Inquisitive flavour requires a
// kohler map and takes R[p^-1[t]]; dependence flavour requires a
// p-morphism and takes p^-1[t] directly. Errors: MapRoleMismatch; BadInput
// when check_map rejects p.
struct DualMapResult {
  DualAlgebra hom_source;  // dual of p.target
  DualAlgebra hom_target;  // dual of p.source
  std::vector<int> map;    // hom_source element -> hom_target element
};
DualMapResult dual_map(const StructureMap& p, Flavour flavour);

// Worlds are the nonzero join irreducibles of the core lattice, with the
// frame order reversed relative to the algebra order. Error NotFCGW unless
// the algebra is validated, core generated, and well connected.
Frame algebra_to_frame(const FiniteAlgebra& a);

struct RoundTripReport {
  bool ok = false;
  std::vector<int> iso;  // frame side: world permutation; algebra side:
                         // dual element -> original element
  std::string detail;
};

// Frame -> algebra -> frame, then search for an order isomorphism.
RoundTripReport round_trip_frame(const Frame& f, Flavour flavour);
// Algebra -> frame -> algebra, compared by the constructive map sending a
// family to the join of the core elements its upsets stand for.
RoundTripReport round_trip_algebra(const FiniteAlgebra& a, Flavour flavour);

struct DualModel {
  DualAlgebra dual;
  CoreValuation mu;
};

// mu(p) is the principal downset of the upset where p holds.
DualModel canonical_core_valuation(const Model& m, Flavour flavour);

// The dual Kripke model on algebra_to_frame(a): p holds at w exactly when
// w lies below mu(p) in the algebra order.
Model canonical_frame_valuation(const FiniteAlgebra& a,
                                const CoreValuation& mu);

// True when the team verdict (model_valid) agrees with the algebraic
// verdict on the canonical dual model. This is the oracle equivalence.
bool cross_check(const Model& m, const Formula& phi, Flavour flavour);

// Restriction of a model to an upset team; worlds keep their names and are
// renumbered in mask order. Errors: ForeignWorld; BadInput when the team is
// not an upset.
Model restrict_model(const Model& m, Team t);

}  // namespace inqlab

#endif  // INQLAB_DUALITY_HPP
