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

#include "duality.hpp"

#include <algorithm>
#include <numeric>

#include "error.hpp"

namespace inqlab {

namespace {

constexpr int kMaxUpsets = 25;
constexpr long long kMaxDualElements = 200000;

std::string upset_text(const std::vector<std::string>& world_names, Team t) {
  std::string s = "{";
  bool first = true;
  for (std::size_t i = 0; i < world_names.size(); ++i)
    if (t >> i & 1) {
      if (!first) s += " ";
      s += world_names[i];
      first = false;
    }
  return s + "}";
}

// Antichain name of a family: its maximal members, each an upset.
std::string family_text(const std::vector<std::string>& world_names,
                        const std::vector<Team>& ups, std::uint64_t family) {
  std::string s = "<";
  bool first = true;
  for (std::size_t i = 0; i < ups.size(); ++i) {
    if (!(family >> i & 1)) continue;
    bool maximal = true;
    for (std::size_t j = 0; j < ups.size(); ++j)
      if (j != i && (family >> j & 1) && (ups[i] & ~ups[j]) == 0) {
        maximal = false;
        break;
      }
    if (!maximal) continue;
    if (!first) s += ", ";
    s += upset_text(world_names, ups[i]);
    first = false;
  }
  return s + ">";
}

int upset_index(const std::vector<Team>& ups, Team t) {
  for (std::size_t i = 0; i < ups.size(); ++i)
    if (ups[i] == t) return static_cast<int>(i);
  fail(Errc::Internal, "a world set is not an upset of the frame");
}

// Nonzero join irreducibles of the core lattice: core elements with a
// unique maximal core element strictly below them.
std::vector<int> core_join_irreducibles(const FiniteAlgebra& a) {
  std::vector<int> core;
  for (int i = 0; i < a.size(); ++i)
    if (a.core[i]) core.push_back(i);
  std::vector<int> out;
  for (int c : core) {
    if (c == a.zero) continue;
    std::vector<int> below;
    for (int d : core)
      if (d != c && a.leq[d][c]) below.push_back(d);
    int maximal = 0;
    for (int d : below) {
      bool top = true;
      for (int e : below)
        if (e != d && a.leq[d][e]) {
          top = false;
          break;
        }
      if (top) ++maximal;
    }
    if (maximal == 1) out.push_back(c);
  }
  return out;
}

}  // namespace

std::vector<Team> upsets(const Frame& f) { return upset_masks(f); }

int DualAlgebra::element_of(std::uint64_t family) const {
  auto it = std::lower_bound(families.begin(), families.end(), family);
  if (it == families.end() || *it != family)
    fail(Errc::Internal, "family is not an element of the dual algebra");
  return static_cast<int>(it - families.begin());
}

DualAlgebra dual_algebra(const Frame& f, Flavour flavour) {
  DualAlgebra d;
  d.world_names = f.names;
  d.upsets = upset_masks(f);
  const int k = static_cast<int>(d.upsets.size());
  if (k > kMaxUpsets)
    fail(Errc::LimitExceeded,
         "dual algebra construction is limited to " +
             std::to_string(kMaxUpsets) + " upsets");

  // subof[i]: the principal family of upset i.
  std::vector<std::uint64_t> subof(k, 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if ((d.upsets[j] & ~d.upsets[i]) == 0) subof[i] |= 1ull << j;

  // Enumerate the nonempty downward closed families. The sorted upset order
  // is a linear extension of inclusion, so a family may include upset i
  // exactly when it already includes every upset below i.
  std::vector<std::uint64_t>& fams = d.families;
  auto rec = [&](auto&& self, int idx, std::uint64_t cur) -> void {
    if (idx == k) {
      if (cur != 0) {
        fams.push_back(cur);
        if (static_cast<long long>(fams.size()) > kMaxDualElements)
          fail(Errc::LimitExceeded, "dual algebra has too many elements");
      }
      return;
    }
    self(self, idx + 1, cur);
    const std::uint64_t preds = subof[idx] & ~(1ull << idx);
    if ((preds & ~cur) == 0) self(self, idx + 1, cur | (1ull << idx));
  };
  rec(rec, 0, 0);
  std::sort(fams.begin(), fams.end());

  const int n = static_cast<int>(fams.size());
  std::vector<std::string> names;
  names.reserve(n);
  for (std::uint64_t fam : fams)
    names.push_back(family_text(d.world_names, d.upsets, fam));
  std::vector<std::vector<char>> leq(n, std::vector<char>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) leq[i][j] = ((fams[i] & ~fams[j]) == 0) ? 1 : 0;
  d.algebra = derive_tables(std::move(names), std::move(leq), 0);

  d.core_upset.assign(n, -1);
  for (int t = 0; t < k; ++t) {
    const int e = d.element_of(subof[t]);
    d.core_upset[e] = t;
    d.algebra.core[e] = 1;
  }

  if (flavour == Flavour::Dep) {
    d.algebra.tensor.assign(n, std::vector<int>(n));
    // Union of upsets on the core, then the join lift: a core element
    // {t}v lies below x exactly when t is a member of x.
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        std::uint64_t fam = 0;
        for (int t = 0; t < k; ++t) {
          if (!(fams[x] >> t & 1)) continue;
          for (int s = 0; s < k; ++s) {
            if (!(fams[y] >> s & 1)) continue;
            fam |= subof[upset_index(d.upsets, d.upsets[t] | d.upsets[s])];
          }
        }
        d.algebra.tensor[x][y] = d.element_of(fam);
      }
  }
  return d;
}

DualMapResult dual_map(const StructureMap& p, Flavour flavour) {
  const MapReport rep = check_map(p);
  if (!rep.ok)
    fail(Errc::BadInput, "map fails the " + rep.condition + " condition");
  if (flavour == Flavour::Inq && p.role != MapRole::Kohler)
    fail(Errc::MapRoleMismatch,
         "inquisitive duals are taken along kohler maps");
  if (flavour == Flavour::Dep && p.role != MapRole::Pmorphism)
    fail(Errc::MapRoleMismatch,
         "dependence duals are taken along p-morphisms");

  DualMapResult r{dual_algebra(p.target, flavour),
                  dual_algebra(p.source, flavour),
                  {}};
  const int n = r.hom_source.algebra.size();
  const int kf = static_cast<int>(r.hom_target.upsets.size());
  std::vector<std::uint64_t> subof(kf, 0);
  for (int i = 0; i < kf; ++i)
    for (int j = 0; j < kf; ++j)
      if ((r.hom_target.upsets[j] & ~r.hom_target.upsets[i]) == 0)
        subof[i] |= 1ull << j;

  r.map.reserve(n);
  for (int x = 0; x < n; ++x) {
    std::uint64_t out = 0;
    for (std::size_t t = 0; t < r.hom_source.upsets.size(); ++t) {
      if (!(r.hom_source.families[x] >> t & 1)) continue;
      const Team tg = r.hom_source.upsets[t];
      Team pre = 0;
      for (int w = 0; w < p.source.size(); ++w)
        if (p.map[w] >= 0 && (tg >> p.map[w] & 1)) pre |= 1ull << w;
      const Team u = flavour == Flavour::Inq ? r_image(p.source, pre) : pre;
      out |= subof[upset_index(r.hom_target.upsets, u)];
    }
    r.map.push_back(r.hom_target.element_of(out));
  }
  return r;
}

Frame algebra_to_frame(const FiniteAlgebra& a) {
  if (!validate_inq_algebra(a).ok || !is_core_generated(a) ||
      !is_well_connected(a))
    fail(Errc::NotFCGW,
         "the algebra is not a validated, core generated, well connected "
         "inquisitive algebra");
  const std::vector<int> jis = core_join_irreducibles(a);
  const int k = static_cast<int>(jis.size());
  std::vector<std::string> names;
  names.reserve(k);
  for (int i = 0; i < k; ++i) names.push_back("w" + std::to_string(i + 1));
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (a.leq[jis[j]][jis[i]]) edges.emplace_back(i, j);
  return make_frame(std::move(names), edges);
}

RoundTripReport round_trip_frame(const Frame& f, Flavour flavour) {
  RoundTripReport out;
  try {
    const DualAlgebra d = dual_algebra(f, flavour);
    const Frame g = algebra_to_frame(d.algebra);
    if (g.size() != f.size()) {
      out.detail = "world counts differ: " + std::to_string(g.size()) +
                   " against " + std::to_string(f.size());
      return out;
    }
    const int k = f.size();
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      bool iso = true;
      for (int i = 0; i < k && iso; ++i)
        for (int j = 0; j < k && iso; ++j) {
          const bool ge = (g.succ[i] >> j & 1) != 0;
          const bool fe = (f.succ[perm[i]] >> perm[j] & 1) != 0;
          if (ge != fe) iso = false;
        }
      if (iso) {
        out.ok = true;
        out.iso = perm;
        return out;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    out.detail = "no order isomorphism between the frames";
  } catch (const InqError& e) {
    out.detail = e.what();
  }
  return out;
}

RoundTripReport round_trip_algebra(const FiniteAlgebra& a, Flavour flavour) {
  RoundTripReport out;
  try {
    const Frame f = algebra_to_frame(a);
    const DualAlgebra d = dual_algebra(f, flavour);
    if (d.algebra.size() != a.size()) {
      out.detail = "element counts differ: " +
                   std::to_string(d.algebra.size()) + " against " +
                   std::to_string(a.size());
      return out;
    }
    const std::vector<int> jis = core_join_irreducibles(a);
    const int k = static_cast<int>(d.upsets.size());

    // The core element an upset stands for: the unique minimal core
    // element above all the join irreducibles the upset contains.
    std::vector<int> stands_for(k, -1);
    for (int t = 0; t < k; ++t) {
      std::vector<int> uppers;
      for (int c = 0; c < a.size(); ++c) {
        if (!a.core[c]) continue;
        bool above = true;
        for (std::size_t i = 0; i < jis.size(); ++i)
          if ((d.upsets[t] >> i & 1) && !a.leq[jis[i]][c]) {
            above = false;
            break;
          }
        if (above) uppers.push_back(c);
      }
      int minimal = -1;
      int count = 0;
      for (int c : uppers) {
        bool least = true;
        for (int e : uppers)
          if (e != c && a.leq[e][c] && e != c) {
            least = false;
            break;
          }
        if (least) {
          minimal = c;
          ++count;
        }
      }
      if (count != 1) {
        out.detail = "an upset has no unique core join";
        return out;
      }
      stands_for[t] = minimal;
    }

    std::vector<int> g(d.algebra.size());
    std::vector<char> hit(a.size(), 0);
    for (int e = 0; e < d.algebra.size(); ++e) {
      int acc = a.zero;
      for (int t = 0; t < k; ++t)
        if (d.families[e] >> t & 1) acc = a.join[acc][stands_for[t]];
      g[e] = acc;
      hit[acc] = 1;
    }
    for (char h : hit)
      if (!h) {
        out.detail = "the comparison map is not a bijection";
        return out;
      }
    for (int e = 0; e < d.algebra.size(); ++e)
      if (d.algebra.core[e] != a.core[g[e]]) {
        out.detail = "core flags differ under the comparison map";
        return out;
      }
    const AlgebraReport h = check_hom(d.algebra, a, g, flavour);
    if (!h.ok) {
      out.detail = "the comparison map breaks " + h.check;
      return out;
    }
    out.ok = true;
    out.iso = g;
  } catch (const InqError& e) {
    out.detail = e.what();
  }
  return out;
}

DualModel canonical_core_valuation(const Model& m, Flavour flavour) {
  DualModel out{dual_algebra(m.frame, flavour), {}};
  for (const auto& [atom, mask] : m.val) {
    int idx = -1;
    for (std::size_t i = 0; i < out.dual.upsets.size(); ++i)
      if (out.dual.upsets[i] == mask) {
        idx = static_cast<int>(i);
        break;
      }
    if (idx < 0)
      fail(Errc::NotPersistent,
           "valuation of '" + atom + "' is not an upset");
    std::uint64_t fam = 0;
    for (std::size_t j = 0; j < out.dual.upsets.size(); ++j)
      if ((out.dual.upsets[j] & ~mask) == 0) fam |= 1ull << j;
    out.mu[atom] = out.dual.element_of(fam);
  }
  return out;
}

Model canonical_frame_valuation(const FiniteAlgebra& a,
                                const CoreValuation& mu) {
  Model m;
  m.frame = algebra_to_frame(a);
  const std::vector<int> jis = core_join_irreducibles(a);
  for (const auto& [atom, v] : mu) {
    if (v < 0 || v >= a.size() || !a.core[v])
      fail(Errc::BadInput,
           "valuation of '" + atom + "' is not a core element");
    Team mask = 0;
    for (std::size_t i = 0; i < jis.size(); ++i)
      if (a.leq[jis[i]][v]) mask |= 1ull << i;
    m.val[atom] = mask;
  }
  return m;
}

bool cross_check(const Model& m, const Formula& phi, Flavour flavour) {
  const DualModel dm = canonical_core_valuation(m, flavour);
  const bool algebraic =
      eval_core(dm.dual.algebra, dm.mu, phi) == dm.dual.algebra.one;
  return model_valid(m, phi) == algebraic;
}

Model restrict_model(const Model& m, Team t) {
  const int n = m.frame.size();
  if (n < 64 && (t >> n) != 0)
    fail(Errc::ForeignWorld, "team mentions worlds outside the frame");
  std::vector<int> keep;
  for (int w = 0; w < n; ++w)
    if (t >> w & 1) {
      if ((m.frame.succ[w] & ~t) != 0)
        fail(Errc::BadInput, "restriction team is not an upset");
      keep.push_back(w);
    }
  std::vector<int> pos(n, -1);
  for (std::size_t i = 0; i < keep.size(); ++i) pos[keep[i]] = static_cast<int>(i);
  Model out;
  out.frame.names.reserve(keep.size());
  for (int w : keep) out.frame.names.push_back(m.frame.names[w]);
  out.frame.succ.assign(keep.size(), 0);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    const Team s = m.frame.succ[keep[i]] & t;
    for (int w = 0; w < n; ++w)
      if (s >> w & 1) out.frame.succ[i] |= 1ull << pos[w];
  }
  for (const auto& [atom, mask] : m.val) {
    Team r = 0;
    for (int w = 0; w < n; ++w)
      if ((mask & t) >> w & 1) r |= 1ull << pos[w];
    out.val[atom] = r;
  }
  return out;
}

}  // namespace inqlab
