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

#ifndef INQLAB_FORMULA_HPP
#define INQLAB_FORMULA_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "error.hpp"

namespace inqlab {

// Formulas over the connectives {∧, ∨, →, ⊗, ⊥}. Negation, verum and the
// dependence atoms are definitional sugar and are eliminated by the parser,
// so downstream case analyses only ever see these six node kinds.
enum class Kind {
  Atom,
  Bot,
  And,
  Or,
  Impl,
  Tensor,
};

struct Node;
using Formula = std::shared_ptr<const Node>;

struct Node {
  Kind kind;
  std::string atom;  // nonempty iff kind == Kind::Atom
  Formula l, r;      // both set for binary kinds, both null otherwise
};

// Constructors. Formulas are immutable; sharing subterms is safe.
Formula atom(const std::string& name);
Formula bot();
Formula land(Formula l, Formula r);
Formula lor(Formula l, Formula r);
Formula impl(Formula l, Formula r);
Formula tensor(Formula l, Formula r);

// Sugar: ¬φ := φ→⊥ and ⊤ := ⊥→⊥.
Formula lnot(Formula f);
Formula top();

bool equal(const Formula& a, const Formula& b);

// A formula is standard iff it contains no ∨; it lies in the
// disjunction-and-tensor-free base language iff it also contains no ⊗.
bool is_standard(const Formula& f);
bool uses_tensor(const Formula& f);

int node_count(const Formula& f);

// Atoms occurring in f, lexicographically sorted, without duplicates.
std::vector<std::string> atoms(const Formula& f);

// Parses the ASCII surface syntax:
//   atoms [a-z][a-z0-9]*, `_|_` for ⊥, `~` for ¬, `&`, `(*)`, `\/`, `->`,
//   dep(p) and dep(p1,...,pn;q) sugar; precedence ~ > & > (*) > \/ > ->,
//   with -> right-associative and the other binaries left-associative.
// Throws InqError with SyntaxError or UnknownToken on bad input.
Formula parse(const std::string& text);

// Prints a formula the parser reads back to the same tree. Implications
// into ⊥ are re-sugared as ~ for readability.
std::string print(const Formula& f);

// Simultaneous substitution. Every formula in the range of sigma must be
// standard; otherwise NonStandardSubstituent is raised.
Formula substitute_standard(const Formula& f,
                            const std::map<std::string, Formula>& sigma);

// Rewrites f into a list of standard disjuncts whose join is team-equivalent
// to f: → is pushed over ∨ by Split, ⊗ by Dist, ∧ by distributivity.
// Structural duplicates are dropped (first occurrence wins); the disjunct
// set is not minimised. Throws LimitExceeded when the rewrite explodes.
std::vector<Formula> dnf(const Formula& f);

// Number of argument slots of an axiom schema "A1".."A15".
int axiom_arity(const std::string& schema);

// Instantiates an axiom schema. Slots that the schema restricts to standard
// formulas (A10 slot 0; A11, A12 slots 0,1; A15 slots 0,1,2) reject
// arguments containing ∨ with NonStandardSlot; wrong argument counts raise
// SchemaArityMismatch.
Formula axiom_instances(const std::string& schema,
                        const std::vector<Formula>& args);

}  // namespace inqlab

#endif  // INQLAB_FORMULA_HPP
