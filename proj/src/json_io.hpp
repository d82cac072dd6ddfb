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

#ifndef INQLAB_JSON_IO_HPP
#define INQLAB_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "algebra.hpp"
#include "duality.hpp"
#include "team.hpp"

namespace inqlab {

using OrderedJson = nlohmann::ordered_json;

// Renders on one line with ", " between items and ": " after keys, the
// format every command prints and the golden tests freeze.
std::string write_json(const OrderedJson& j);

// Model files: {"worlds": [...], "order": [[from, to], ...],
// "valuation": {world: [atoms]}}. The order is closed reflexively and
// transitively on load and must be antisymmetric; valuations must be
// persistent. "order" and "valuation" may be omitted; an optional "atoms"
// array declares atoms beyond those in the valuation, valued nowhere.
// Emission lists the covers of the strict order, omits worlds with no true
// atoms, and writes "atoms" only when some atom has an empty extension.
Model model_from_json(const std::string& text);
OrderedJson model_to_ojson(const Model& m);
std::string model_to_json(const Model& m);

// Frame files are model files without the valuation key.
OrderedJson frame_to_ojson(const Frame& f);
std::string frame_to_json(const Frame& f);

// Algebra files: {"elements": [...], "leq": [[below, above], ...],
// "zero": name, "core": [names], "tensor": [[names]]}. The order is closed
// on load and the remaining tables are derived; emission adds "one" and a
// "tables" block (meet, join, impl) for reproducibility, and any of those,
// when present on load, is verified against the derived value.
FiniteAlgebra algebra_from_json(const std::string& text);
OrderedJson algebra_to_ojson(const FiniteAlgebra& a);
std::string algebra_to_json(const FiniteAlgebra& a);

// The algebra file of d.algebra plus a provenance block naming the source
// worlds and the generating upset of every core element.
std::string dual_algebra_to_json(const DualAlgebra& d);

// {"p": element name, ...} resolved against the algebra's element names.
CoreValuation core_valuation_from_json(const FiniteAlgebra& a,
                                       const std::string& text);
OrderedJson core_valuation_to_ojson(const FiniteAlgebra& a,
                                    const CoreValuation& mu);

}  // namespace inqlab

#endif  // INQLAB_JSON_IO_HPP
