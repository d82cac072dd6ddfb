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

#include "oracles.hpp"

#include <algorithm>

namespace inqlab::oracle {

OModel o_model(std::vector<World> worlds,
               std::vector<std::pair<World, World>> edges,
               std::map<std::string, OTeam> val) {
  OModel m;
  m.worlds = std::move(worlds);
  m.val = std::move(val);
  for (const auto& w : m.worlds) m.rel.insert({w, w});
  for (auto& e : edges) m.rel.insert(std::move(e));
  // Transitive closure by fixpoint; the sets involved are tiny.
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [a, b] : std::set<std::pair<World, World>>(m.rel)) {
      for (const auto& w : m.worlds) {
        if (m.rel.count({b, w}) && m.rel.insert({a, w}).second) changed = true;
      }
    }
  }
  return m;
}

std::vector<OTeam> o_subsets(const OTeam& s) {
  std::vector<World> elems(s.begin(), s.end());
  std::vector<OTeam> out;
  const std::size_t total = std::size_t{1} << elems.size();
  for (std::size_t mask = 0; mask < total; ++mask) {
    OTeam t;
    for (std::size_t i = 0; i < elems.size(); ++i) {
      if (mask >> i & 1u) t.insert(elems[i]);
    }
    out.push_back(std::move(t));
  }
  return out;
}

OTeam o_rimage(const OModel& m, const OTeam& t) {
  OTeam out;
  for (const auto& w : t) {
    for (const auto& v : m.worlds) {
      if (m.rel.count({w, v})) out.insert(v);
    }
  }
  return out;
}

bool o_eval(const OModel& m, const OTeam& t, const Formula& f) {
  switch (f->kind) {
    case Kind::Atom: {
      auto it = m.val.find(f->atom);
      const OTeam empty;
      const OTeam& holds = it == m.val.end() ? empty : it->second;
      return std::all_of(t.begin(), t.end(), [&](const World& w) {
        return holds.count(w) > 0;
      });
    }
    case Kind::Bot:
      return t.empty();
    case Kind::And:
      return o_eval(m, t, f->l) && o_eval(m, t, f->r);
    case Kind::Or:
      return o_eval(m, t, f->l) || o_eval(m, t, f->r);
    case Kind::Tensor: {
      for (const OTeam& s : o_subsets(t)) {
        for (const OTeam& r : o_subsets(t)) {
          OTeam u = s;
          u.insert(r.begin(), r.end());
          if (u == t && o_eval(m, s, f->l) && o_eval(m, r, f->r)) return true;
        }
      }
      return false;
    }
    case Kind::Impl: {
      for (const OTeam& s : o_subsets(o_rimage(m, t))) {
        if (o_eval(m, s, f->l) && !o_eval(m, s, f->r)) return false;
      }
      return true;
    }
  }
  return false;
}

bool o_model_valid(const OModel& m, const Formula& f) {
  OTeam all(m.worlds.begin(), m.worlds.end());
  for (const OTeam& t : o_subsets(all)) {
    if (!o_eval(m, t, f)) return false;
  }
  return true;
}

std::vector<OTeam> o_upsets(const OModel& m) {
  OTeam all(m.worlds.begin(), m.worlds.end());
  std::vector<OTeam> out;
  for (const OTeam& u : o_subsets(all)) {
    bool up = true;
    for (const auto& w : u) {
      for (const auto& v : m.worlds) {
        if (m.rel.count({w, v}) && !u.count(v)) up = false;
      }
    }
    if (up) out.push_back(u);
  }
  return out;
}

bool o_frame_valid(const OModel& m, const std::vector<std::string>& ats,
                   const Formula& f) {
  std::vector<OTeam> ups = o_upsets(m);
  std::vector<std::size_t> pick(ats.size(), 0);
  for (;;) {
    OModel n = m;
    n.val.clear();
    for (std::size_t i = 0; i < ats.size(); ++i) n.val[ats[i]] = ups[pick[i]];
    if (!o_model_valid(n, f)) return false;
    std::size_t i = 0;
    while (i < pick.size() && ++pick[i] == ups.size()) pick[i++] = 0;
    if (i == pick.size()) break;
  }
  return true;
}

bool o_flat(const OModel& m, const Formula& f) {
  OTeam all(m.worlds.begin(), m.worlds.end());
  for (const OTeam& t : o_subsets(all)) {
    bool whole = o_eval(m, t, f);
    bool pointwise = std::all_of(t.begin(), t.end(), [&](const World& w) {
      return o_eval(m, OTeam{w}, f);
    });
    if (whole != pointwise) return false;
  }
  return true;
}

std::size_t o_dual_family_count(const OModel& m) {
  std::vector<OTeam> ups = o_upsets(m);
  const std::size_t total = std::size_t{1} << ups.size();
  std::size_t count = 0;
  for (std::size_t mask = 1; mask < total; ++mask) {
    bool down = true;
    for (std::size_t i = 0; i < ups.size() && down; ++i) {
      if (!(mask >> i & 1u)) continue;
      for (std::size_t j = 0; j < ups.size(); ++j) {
        bool subset = std::includes(ups[i].begin(), ups[i].end(),
                                    ups[j].begin(), ups[j].end());
        if (subset && !(mask >> j & 1u)) {
          down = false;
          break;
        }
      }
    }
    if (down) ++count;
  }
  return count;
}

std::size_t o_count_posets(int n) {
  // Off-diagonal pairs, each present or absent; diagonal forced present.
  std::vector<std::pair<int, int>> slots;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a != b) slots.push_back({a, b});
    }
  }
  const std::size_t total = std::size_t{1} << slots.size();
  std::size_t count = 0;
  for (std::size_t mask = 0; mask < total; ++mask) {
    std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
    for (int a = 0; a < n; ++a) rel[a][a] = true;
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if (mask >> i & 1u) rel[slots[i].first][slots[i].second] = true;
    }
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) {
      for (int b = 0; b < n && ok; ++b) {
        if (rel[a][b] && rel[b][a] && a != b) ok = false;  // antisymmetry
        for (int c = 0; c < n && ok; ++c) {
          if (rel[a][b] && rel[b][c] && !rel[a][c]) ok = false;  // transitivity
        }
      }
    }
    if (ok) ++count;
  }
  return count;
}

}  // namespace inqlab::oracle
