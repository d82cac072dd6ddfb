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

#include "team.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <numeric>
#include <optional>
#include <set>
#include <thread>

namespace inqlab {

namespace {

Team full_mask(int n) {
  return n >= 64 ? ~Team{0} : (Team{1} << n) - 1;
}

}  // namespace

Frame make_frame(std::vector<std::string> names,
                 const std::vector<std::pair<int, int>>& edges) {
  const int n = static_cast<int>(names.size());
  if (n > 64) fail(Errc::BadInput, "frames are limited to 64 worlds");
  Frame f;
  f.names = std::move(names);
  f.succ.assign(n, 0);
  for (const auto& [a, b] : edges) {
    if (a < 0 || a >= n || b < 0 || b >= n) {
      fail(Errc::ForeignWorld, "edge index out of range");
    }
    f.succ[a] |= Team{1} << b;
  }
  return f;
}

Frame rt_closure(Frame f) {
  const int n = f.size();
  for (int i = 0; i < n; ++i) f.succ[i] |= Team{1} << i;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < n; ++i) {
      Team acc = f.succ[i];
      for (int j = 0; j < n; ++j) {
        if (f.succ[i] >> j & 1u) acc |= f.succ[j];
      }
      if (acc != f.succ[i]) {
        f.succ[i] = acc;
        changed = true;
      }
    }
  }
  return f;
}

FrameReport validate_frame(const Frame& f) {
  const int n = f.size();
  for (int i = 0; i < n; ++i) {
    if (!(f.succ[i] >> i & 1u)) {
      return {false, "reflexivity", {f.names[i]}};
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if ((f.succ[i] >> j & 1u) && (f.succ[j] >> i & 1u)) {
        return {false, "antisymmetry", {f.names[i], f.names[j]}};
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (!(f.succ[i] >> j & 1u)) continue;
      if ((f.succ[j] & ~f.succ[i]) != 0) {
        const int k = std::countr_zero(f.succ[j] & ~f.succ[i]);
        return {false, "transitivity", {f.names[i], f.names[j], f.names[k]}};
      }
    }
  }
  return {};
}

int world_index(const Frame& f, const std::string& name) {
  for (int i = 0; i < f.size(); ++i) {
    if (f.names[i] == name) return i;
  }
  fail(Errc::ForeignWorld, "unknown world '" + name + "'");
}

Team team_of(const Frame& f, const std::vector<std::string>& names) {
  Team t = 0;
  for (const auto& name : names) t |= Team{1} << world_index(f, name);
  return t;
}

std::vector<std::string> team_names(const Frame& f, Team t) {
  std::vector<std::string> out;
  for (int i = 0; i < f.size(); ++i) {
    if (t >> i & 1u) out.push_back(f.names[i]);
  }
  return out;
}

Team r_image(const Frame& f, Team t) {
  if ((t & ~full_mask(f.size())) != 0) {
    fail(Errc::ForeignWorld, "team mentions a world outside the frame");
  }
  Team out = 0;
  for (int i = 0; i < f.size(); ++i) {
    if (t >> i & 1u) out |= f.succ[i];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

Evaluator::Evaluator(const Model& m, const Formula& f) : model_(m) {
  n_ = m.frame.size();
  if (n_ > 16) {
    fail(Errc::LimitExceeded, "team evaluation is limited to 16 worlds");
  }
  // Index subformulas, children before parents, deduplicating shared nodes.
  std::map<const Node*, int> index;
  struct Rec {
    std::map<const Node*, int>& index;
    Evaluator& ev;
    const Model& m;
    int go(const Formula& f) {
      auto it = index.find(f.get());
      if (it != index.end()) return it->second;
      int l = f->l ? go(f->l) : -1;
      int r = f->r ? go(f->r) : -1;
      int id = static_cast<int>(ev.nodes_.size());
      ev.nodes_.push_back(f.get());
      ev.left_.push_back(l);
      ev.right_.push_back(r);
      Team mask = 0;
      if (f->kind == Kind::Atom) {
        auto vt = m.val.find(f->atom);
        if (vt == m.val.end()) {
          fail(Errc::MissingAtom,
               "model has no valuation for atom '" + f->atom + "'");
        }
        mask = vt->second;
      }
      ev.atom_mask_.push_back(mask);
      index.emplace(f.get(), id);
      return id;
    }
  };
  Rec{index, *this, m}.go(f);
  memo_.assign(nodes_.size(),
               std::vector<signed char>(std::size_t{1} << n_, -1));
}

bool Evaluator::eval(Team t) {
  if ((t & ~full_mask(n_)) != 0) {
    fail(Errc::ForeignWorld, "team mentions a world outside the frame");
  }
  return eval_node(static_cast<int>(nodes_.size()) - 1, t);
}

bool Evaluator::eval_node(int id, Team t) {
  signed char& slot = memo_[id][t];
  if (slot >= 0) return slot != 0;
  const Node* f = nodes_[id];
  bool result = false;
  switch (f->kind) {
    case Kind::Atom:
      result = (t & ~atom_mask_[id]) == 0;
      break;
    case Kind::Bot:
      result = t == 0;
      break;
    case Kind::And:
      result = eval_node(left_[id], t) && eval_node(right_[id], t);
      break;
    case Kind::Or:
      result = eval_node(left_[id], t) || eval_node(right_[id], t);
      break;
    case Kind::Tensor: {
      // Every cover s ∪ r = t, overlapping pairs included: r ranges over
      // (t∖s) ∪ o for each o ⊆ s.
      Team s = t;
      for (;;) {
        if (eval_node(left_[id], s)) {
          const Team forced = t & ~s;
          Team o = s;
          for (;;) {
            if (eval_node(right_[id], forced | o)) {
              result = true;
              break;
            }
            if (o == 0) break;
            o = (o - 1) & s;
          }
        }
        if (result || s == 0) break;
        s = (s - 1) & t;
      }
      break;
    }
    case Kind::Impl: {
      Team rt = 0;
      for (int i = 0; i < n_; ++i) {
        if (t >> i & 1u) rt |= model_.frame.succ[i];
      }
      result = true;
      Team s = rt;
      for (;;) {
        if (eval_node(left_[id], s) && !eval_node(right_[id], s)) {
          result = false;
          break;
        }
        if (s == 0) break;
        s = (s - 1) & rt;
      }
      break;
    }
  }
  slot = result ? 1 : 0;
  return result;
}

bool eval_team(const Model& m, Team t, const Formula& f) {
  return Evaluator(m, f).eval(t);
}

std::vector<Team> upset_masks(const Frame& f) {
  const int n = f.size();
  if (n > 20) fail(Errc::LimitExceeded, "upset enumeration limited to 20 worlds");
  std::vector<Team> out;
  for (Team u = 0; u <= full_mask(n); ++u) {
    bool up = true;
    for (int i = 0; i < n && up; ++i) {
      if ((u >> i & 1u) && (f.succ[i] & ~u) != 0) up = false;
    }
    if (up) out.push_back(u);
    if (u == full_mask(n)) break;
  }
  std::sort(out.begin(), out.end(), [](Team a, Team b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  return out;
}

bool model_valid(const Model& m, const Formula& f) {
  Evaluator ev(m, f);
  const Team full = full_mask(m.frame.size());
  for (Team t = 0;; ++t) {
    if (!ev.eval(t)) return false;
    if (t == full) break;
  }
  return true;
}

namespace {

// Iterates all persistent valuations of `ats` over `f`; stops early when
// the visitor returns false. Returns false iff stopped.
bool for_each_valuation(const Frame& f, const std::vector<std::string>& ats,
                        const std::function<bool(const Model&)>& fn) {
  const std::vector<Team> ups = upset_masks(f);
  std::vector<std::size_t> pick(ats.size(), 0);
  for (;;) {
    Model m;
    m.frame = f;
    for (std::size_t i = 0; i < ats.size(); ++i) m.val[ats[i]] = ups[pick[i]];
    if (!fn(m)) return false;
    std::size_t i = 0;
    while (i < pick.size() && ++pick[i] == ups.size()) pick[i++] = 0;
    if (i == pick.size()) break;
  }
  return true;
}

}  // namespace

bool frame_valid(const Frame& f, const Formula& phi) {
  return for_each_valuation(f, atoms(phi), [&](const Model& m) {
    return model_valid(m, phi);
  });
}

bool flatness_check(const Model& m, const Formula& phi) {
  Evaluator ev(m, phi);
  const Team full = full_mask(m.frame.size());
  for (Team t = 0;; ++t) {
    bool whole = ev.eval(t);
    bool pointwise = true;
    for (int i = 0; i < m.frame.size() && pointwise; ++i) {
      if ((t >> i & 1u) && !ev.eval(Team{1} << i)) pointwise = false;
    }
    if (whole != pointwise) return false;
    if (t == full) break;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Frame enumeration
// ---------------------------------------------------------------------------

namespace {

Frame frame_from_below(const std::vector<Team>& below) {
  const int k = static_cast<int>(below.size());
  Frame fr;
  fr.names.resize(k);
  fr.succ.assign(k, 0);
  for (int i = 0; i < k; ++i) {
    fr.names[i] = "w" + std::to_string(i + 1);
    fr.succ[i] |= Team{1} << i;
  }
  for (int j = 0; j < k; ++j) {
    for (int i = 0; i < k; ++i) {
      if (below[j] >> i & 1u) fr.succ[i] |= Team{1} << j;
    }
  }
  return fr;
}

// Lexicographically minimal strict adjacency encoding over all relabellings;
// used to identify isomorphic posets.
std::uint64_t canonical_key(const std::vector<Team>& below) {
  const int k = static_cast<int>(below.size());
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t key = 0;
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) {
        // perm maps new labels to old ones; strict order i < j.
        if (below[perm[j]] >> perm[i] & 1u) {
          key |= std::uint64_t{1} << (i * k + j);
        }
      }
    }
    best = std::min(best, key);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

struct PosetEnum {
  int max_n = 0;
  int exact_size = 0;  // 0: emit all sizes 1..max_n; else only this size
  bool dedup = false;
  const std::function<bool(const Frame&)>* fn = nullptr;
  std::vector<Team> below;
  std::vector<std::set<std::uint64_t>> seen;  // per size, when dedup

  bool run() {
    seen.assign(max_n + 1, {});
    return extend();
  }

  // Adds one element in every admissible way; returns false to abort.
  bool extend() {
    const int k = static_cast<int>(below.size());
    // New element k: D = strict predecessors (enumerated descending so the
    // ascending chain w1 R w2 comes out first), U = strict successors.
    const Team all = (Team{1} << k) - 1;
    for (Team d = all;; --d) {
      bool dok = true;
      for (int j = 0; j < k && dok; ++j) {
        if ((d >> j & 1u) && (below[j] & ~d) != 0) dok = false;
      }
      if (dok) {
        for (Team u = 0;; ++u) {
          bool uok = (u & d) == 0;
          for (int j = 0; j < k && uok; ++j) {
            if (!(u >> j & 1u)) continue;
            if ((d & ~below[j]) != 0) uok = false;  // need D below every u
            // U must be upward closed: successors of j stay in U.
            for (int v = 0; v < k && uok; ++v) {
              if ((below[v] >> j & 1u) && !(u >> v & 1u)) uok = false;
            }
          }
          if (uok && !grow(d, u)) return false;
          if (u == all) break;
        }
      }
      if (d == 0) break;
    }
    return true;
  }

  bool grow(Team d, Team u) {
    const int k = static_cast<int>(below.size());
    below.push_back(d);
    for (int j = 0; j < k; ++j) {
      if (u >> j & 1u) below[j] |= Team{1} << k;
    }
    bool keep = true;
    bool fresh = true;
    if (dedup) fresh = seen[k + 1].insert(canonical_key(below)).second;
    if (fresh) {
      if (exact_size == 0 || exact_size == k + 1) {
        keep = (*fn)(frame_from_below(below));
      }
      if (keep && k + 1 < max_n) keep = extend();
    }
    for (int j = 0; j < k; ++j) {
      if (u >> j & 1u) below[j] &= ~(Team{1} << k);
    }
    below.pop_back();
    return keep;
  }
};

void enumerate_frames_sized(int n, int exact_size, bool dedup,
                            const std::function<bool(const Frame&)>& fn) {
  if (n < 1) fail(Errc::BadInput, "frame enumeration needs n >= 1");
  if (n > 7) fail(Errc::LimitExceeded, "frame enumeration limited to 7 worlds");
  PosetEnum e;
  e.max_n = n;
  e.exact_size = exact_size;
  e.dedup = dedup;
  e.fn = &fn;
  e.run();
}

}  // namespace

void enumerate_frames(int n, bool dedup_iso,
                      const std::function<bool(const Frame&)>& fn) {
  enumerate_frames_sized(n, 0, dedup_iso, fn);
}

// ---------------------------------------------------------------------------
// Countermodel search
// ---------------------------------------------------------------------------

namespace {

std::vector<Team> teams_descending(int k) {
  std::vector<Team> out;
  out.reserve(std::size_t{1} << k);
  for (Team t = 0; t <= full_mask(k); ++t) {
    out.push_back(t);
    if (t == full_mask(k)) break;
  }
  std::sort(out.begin(), out.end(), [](Team a, Team b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa > pb : a > b;
  });
  return out;
}

// First refuting (valuation, team) on one frame, in valuation-odometer then
// descending-team order.
std::optional<std::pair<Model, Team>> search_frame(
    const Frame& f, const Formula& phi, const std::vector<std::string>& ats) {
  const std::vector<Team> teams = teams_descending(f.size());
  std::optional<std::pair<Model, Team>> hit;
  for_each_valuation(f, ats, [&](const Model& m) {
    Evaluator ev(m, phi);
    for (Team t : teams) {
      if (!ev.eval(t)) {
        hit = {m, t};
        return false;
      }
    }
    return true;
  });
  return hit;
}

Frame discrete_frame(int k) {
  Frame f;
  f.names.resize(k);
  f.succ.assign(k, 0);
  for (int i = 0; i < k; ++i) {
    f.names[i] = "w" + std::to_string(i + 1);
    f.succ[i] = Team{1} << i;
  }
  return f;
}

}  // namespace

CountermodelResult countermodel_search(const Formula& phi, int n,
                                       const SearchOptions& opts) {
  if (n < 1) fail(Errc::BadInput, "countermodel search needs n >= 1");
  if (n > 7) fail(Errc::LimitExceeded, "countermodel search limited to 7 worlds");
  const std::vector<std::string> ats = atoms(phi);

  for (int k = 1; k <= n; ++k) {
    if (opts.classical) {
      if (auto hit = search_frame(discrete_frame(k), phi, ats)) {
        return {true, hit->first, hit->second, 0};
      }
      continue;
    }
    if (opts.jobs <= 1) {
      CountermodelResult res;
      enumerate_frames_sized(k, k, opts.dedup_iso, [&](const Frame& fr) {
        if (auto hit = search_frame(fr, phi, ats)) {
          res = {true, hit->first, hit->second, 0};
          return false;
        }
        return true;
      });
      if (res.found) return res;
      continue;
    }
    // Parallel over the frame stream: worker w evaluates frames with
    // seq % jobs == w; ties resolve to the smallest sequence number when a
    // deterministic result is requested, else first hit wins.
    const int jobs = opts.jobs;
    std::atomic<long> best_seq{-1};
    std::vector<std::optional<std::pair<Model, Team>>> hits(jobs);
    std::vector<long> hit_seq(jobs, -1);
    std::vector<std::thread> workers;
    for (int w = 0; w < jobs; ++w) {
      workers.emplace_back([&, w] {
        long seq = 0;
        enumerate_frames_sized(k, k, opts.dedup_iso, [&](const Frame& fr) {
          const long my = seq++;
          if (my % jobs != w) return true;
          const long cur = best_seq.load(std::memory_order_relaxed);
          if (cur >= 0) {
            if (!opts.deterministic) return false;
            if (my > cur) return true;  // cannot improve on cur
          }
          if (auto hit = search_frame(fr, phi, ats)) {
            hits[w] = hit;
            hit_seq[w] = my;
            long expect = best_seq.load();
            while ((expect < 0 || my < expect) &&
                   !best_seq.compare_exchange_weak(expect, my)) {
            }
            // This worker's later frames all have larger sequence numbers,
            // so its own search is over either way.
            return false;
          }
          return true;
        });
      });
    }
    for (auto& th : workers) th.join();
    int winner = -1;
    for (int w = 0; w < jobs; ++w) {
      if (!hits[w]) continue;
      if (!opts.deterministic) {
        winner = w;
        break;
      }
      if (winner < 0 || hit_seq[w] < hit_seq[winner]) winner = w;
    }
    if (winner >= 0) {
      return {true, hits[winner]->first, hits[winner]->second, 0};
    }
  }
  CountermodelResult res;
  res.valid_up_to = n;
  return res;
}

// ---------------------------------------------------------------------------
// Structure maps
// ---------------------------------------------------------------------------

MapReport check_map(const StructureMap& m) {
  const int ns = m.source.size();
  const int nt = m.target.size();
  if (static_cast<int>(m.map.size()) != ns) {
    fail(Errc::BadInput, "map length does not match the source frame");
  }
  for (int i = 0; i < ns; ++i) {
    if (m.map[i] < -1 || m.map[i] >= nt) {
      fail(Errc::BadInput, "map target index out of range");
    }
  }
  if (m.role == MapRole::Pmorphism) {
    for (int i = 0; i < ns; ++i) {
      if (m.map[i] < 0) return {false, "totality", {m.source.names[i]}};
    }
  }
  // Forth: xRy and both defined entail f(x) R' f(y).
  for (int x = 0; x < ns; ++x) {
    if (m.map[x] < 0) continue;
    for (int y = 0; y < ns; ++y) {
      if (m.map[y] < 0 || !(m.source.succ[x] >> y & 1u)) continue;
      if (!(m.target.succ[m.map[x]] >> m.map[y] & 1u)) {
        return {false, "forth", {m.source.names[x], m.source.names[y]}};
      }
    }
  }
  // Back: f(x) R' y' entails some y with xRy and f(y) = y'.
  for (int x = 0; x < ns; ++x) {
    if (m.map[x] < 0) continue;
    for (int yp = 0; yp < nt; ++yp) {
      if (!(m.target.succ[m.map[x]] >> yp & 1u)) continue;
      bool witnessed = false;
      for (int y = 0; y < ns && !witnessed; ++y) {
        if (m.map[y] == yp && (m.source.succ[x] >> y & 1u)) witnessed = true;
      }
      if (!witnessed) {
        return {false, "back", {m.source.names[x], m.target.names[yp]}};
      }
    }
  }
  return {};
}

}  // namespace inqlab
