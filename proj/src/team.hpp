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

#ifndef INQLAB_TEAM_HPP
#define INQLAB_TEAM_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "formula.hpp"

namespace inqlab {

// A team is a set of worlds encoded as a bitmask over world indices.
using Team = std::uint64_t;

// A finite Kripke frame. succ[i] is the bitmask of R-successors of world i;
// in a valid frame R is a partial order, so i ∈ succ[i].
struct Frame {
  std::vector<std::string> names;
  std::vector<Team> succ;

  int size() const { return static_cast<int>(names.size()); }
};

// An intuitionistic Kripke model: a frame plus a persistent valuation,
// stored as atom -> bitmask of worlds where the atom holds.
struct Model {
  Frame frame;
  std::map<std::string, Team> val;
};

// Builds a frame from generating edges over world indices, without closing
// or validating; rt_closure adds the reflexive-transitive closure.
Frame make_frame(std::vector<std::string> names,
                 const std::vector<std::pair<int, int>>& edges);
Frame rt_closure(Frame f);

struct FrameReport {
  bool ok = true;
  std::string law;  // "reflexivity" | "transitivity" | "antisymmetry"
  std::vector<std::string> witnesses;
};

// Checks that the stored relation is a partial order; the report names the
// first violated law and the offending worlds.
FrameReport validate_frame(const Frame& f);

int world_index(const Frame& f, const std::string& name);
Team team_of(const Frame& f, const std::vector<std::string>& names);
std::vector<std::string> team_names(const Frame& f, Team t);

// R[t] = {v : ∃w∈t, wRv}. Raises ForeignWorld when t mentions worlds
// outside the frame.
Team r_image(const Frame& f, Team t);

// Team-semantics evaluator for one (model, formula) pair, memoised over
// (subformula, team). Reusable across teams; construction checks that every
// atom of the formula has a valuation entry.
class Evaluator {
 public:
  Evaluator(const Model& m, const Formula& f);

  bool eval(Team t);

 private:
  bool eval_node(int id, Team t);

  const Model& model_;
  int n_;
  std::vector<const Node*> nodes_;  // subformulas, children before parents
  std::vector<int> left_, right_;
  std::vector<Team> atom_mask_;
  std::vector<std::vector<signed char>> memo_;  // -1 unknown, else 0/1
};

bool eval_team(const Model& m, Team t, const Formula& f);

// All R-upsets of f, sorted by (popcount, mask) ascending; these are
// exactly the persistent single-atom valuations.
std::vector<Team> upset_masks(const Frame& f);

// model_valid quantifies over all teams; frame_valid additionally over all
// persistent valuations of the atoms occurring in φ.
bool model_valid(const Model& m, const Formula& f);
bool frame_valid(const Frame& f, const Formula& phi);

// φ is flat on M iff every team supports φ exactly when all its singleton
// subteams do.
bool flatness_check(const Model& m, const Formula& phi);

// Streams every partial order on labelled vertex sets of size 1..n (or one
// representative per isomorphism class when dedup_iso); stops early when
// the callback returns false. Worlds are named w1..wk.
void enumerate_frames(int n, bool dedup_iso,
                      const std::function<bool(const Frame&)>& fn);

struct SearchOptions {
  bool classical = false;
  bool dedup_iso = false;
  int jobs = 1;
  bool deterministic = true;
};

struct CountermodelResult {
  bool found = false;
  Model model;       // set when found
  Team team = 0;     // set when found
  int valid_up_to = 0;  // set when not found
};

// Searches models of size 1..n for a team refuting φ; classical restricts
// to discrete frames. Returns the first hit in enumeration order (frames by
// size then extension order, valuations over upsets ascending, teams by
// (popcount, mask) descending).
CountermodelResult countermodel_search(const Formula& phi, int n,
                                       const SearchOptions& opts = {});

enum class MapRole { Pmorphism, Kohler };

// A (possibly partial) map between frames: map[i] is the target index of
// source world i, or -1 where undefined. P-morphisms must be total; Köhler
// maps may be partial.
struct StructureMap {
  Frame source;
  Frame target;
  std::vector<int> map;
  MapRole role = MapRole::Pmorphism;
};

struct MapReport {
  bool ok = true;
  std::string condition;  // "totality" | "forth" | "back"
  std::vector<std::string> witnesses;
};

MapReport check_map(const StructureMap& m);

}  // namespace inqlab

#endif  // INQLAB_TEAM_HPP
