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

#include "algebra.hpp"

#include <algorithm>
#include <unordered_map>

#include "error.hpp"

namespace inqlab {

namespace {

bool le(const FiniteAlgebra& a, int x, int y) { return a.leq[x][y] != 0; }

void require_tables(const FiniteAlgebra& a, bool need_tensor) {
  const int n = a.size();
  if (n == 0) fail(Errc::BadInput, "algebra has no elements");
  auto square = [n](const std::vector<std::vector<int>>& t) {
    if (static_cast<int>(t.size()) != n) return false;
    for (const auto& row : t)
      if (static_cast<int>(row.size()) != n) return false;
    return true;
  };
  if (static_cast<int>(a.leq.size()) != n || !square(a.meet) ||
      !square(a.join) || !square(a.impl) ||
      static_cast<int>(a.core.size()) != n || a.zero < 0 || a.zero >= n ||
      a.one < 0 || a.one >= n)
    fail(Errc::BadInput, "algebra tables are missing or malformed");
  if (need_tensor && !a.has_tensor())
    fail(Errc::MissingTensor, "the algebra has no tensor table");
  if (a.has_tensor() && !square(a.tensor))
    fail(Errc::BadInput, "tensor table is malformed");
}

// Greatest lower / least upper bound of a pair under leq, or -1.
int bound_of_pair(const std::vector<std::vector<char>>& leq, int n, int x,
                  int y, bool lower) {
  for (int g = 0; g < n; ++g) {
    bool in_set = lower ? (leq[g][x] && leq[g][y]) : (leq[x][g] && leq[y][g]);
    if (!in_set) continue;
    bool extreme = true;
    for (int c = 0; c < n && extreme; ++c) {
      bool c_in = lower ? (leq[c][x] && leq[c][y]) : (leq[x][c] && leq[y][c]);
      if (c_in && !(lower ? leq[c][g] : leq[g][c])) extreme = false;
    }
    if (extreme) return g;
  }
  return -1;
}

// Closes the flagged set under the given binary operation tables.
std::vector<char> close_under(
    int n, std::vector<char> in,
    const std::vector<const std::vector<std::vector<int>>*>& ops) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; x < n; ++x) {
      if (!in[x]) continue;
      for (int y = 0; y < n; ++y) {
        if (!in[y]) continue;
        for (const auto* op : ops) {
          const int z = (*op)[x][y];
          if (!in[z]) {
            in[z] = 1;
            changed = true;
          }
        }
      }
    }
  }
  return in;
}

std::vector<char> carrier_closure_flags(const FiniteAlgebra& a,
                                        bool with_tensor) {
  std::vector<char> seed = a.core;
  seed[a.zero] = 1;
  std::vector<const std::vector<std::vector<int>>*> ops = {&a.meet, &a.join,
                                                           &a.impl};
  if (with_tensor && a.has_tensor()) ops.push_back(&a.tensor);
  return close_under(a.size(), std::move(seed), ops);
}

std::vector<int> flags_to_list(const std::vector<char>& flags) {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(flags.size()); ++i)
    if (flags[i]) out.push_back(i);
  return out;
}

std::vector<int> core_list(const FiniteAlgebra& a) {
  std::vector<int> out;
  for (int i = 0; i < a.size(); ++i)
    if (a.core[i]) out.push_back(i);
  return out;
}

// Restriction of the algebra to an operation-closed carrier, with tables
// inherited. keep_tensor restricts the tensor as well.
FiniteAlgebra restrict_algebra(const FiniteAlgebra& a,
                               const std::vector<int>& carrier,
                               bool keep_tensor) {
  const int m = static_cast<int>(carrier.size());
  std::vector<int> pos(a.size(), -1);
  for (int i = 0; i < m; ++i) pos[carrier[i]] = i;
  auto sub_of = [&](const std::vector<std::vector<int>>& t) {
    std::vector<std::vector<int>> s(m, std::vector<int>(m));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        const int v = pos[t[carrier[i]][carrier[j]]];
        if (v < 0) fail(Errc::Internal, "carrier is not closed under a table");
        s[i][j] = v;
      }
    return s;
  };
  FiniteAlgebra b;
  b.names.reserve(m);
  for (int i : carrier) b.names.push_back(a.names[i]);
  b.leq.assign(m, std::vector<char>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) b.leq[i][j] = a.leq[carrier[i]][carrier[j]];
  b.meet = sub_of(a.meet);
  b.join = sub_of(a.join);
  b.impl = sub_of(a.impl);
  if (keep_tensor && a.has_tensor()) b.tensor = sub_of(a.tensor);
  b.core.assign(m, 0);
  for (int i = 0; i < m; ++i) b.core[i] = a.core[carrier[i]];
  b.zero = pos[a.zero];
  b.one = pos[a.one];
  if (b.zero < 0 || b.one < 0)
    fail(Errc::Internal, "carrier drops a lattice bound");
  return b;
}

// Iterates mu over all core valuations of the given atoms; the visitor
// returns false to stop the sweep early.
template <typename Fn>
void for_each_core_valuation(const FiniteAlgebra& a,
                             const std::vector<std::string>& ats, Fn&& fn) {
  const std::vector<int> core = core_list(a);
  if (core.empty() && !ats.empty())
    fail(Errc::BadInput, "algebra has an empty core");
  const int k = static_cast<int>(ats.size());
  std::vector<int> pick(k, 0);
  CoreValuation mu;
  while (true) {
    for (int i = 0; i < k; ++i) mu[ats[i]] = core[pick[i]];
    if (!fn(mu)) return;
    int i = 0;
    while (i < k) {
      if (++pick[i] < static_cast<int>(core.size())) break;
      pick[i] = 0;
      ++i;
    }
    if (i == k) return;
  }
}

// Term interpreter for the Horn translation; deliberately a plain recursive
// walk over an explicit environment, independent of eval_core.
int horn_term(const FiniteAlgebra& a, const std::map<std::string, int>& env,
              const Formula& f) {
  switch (f->kind) {
    case Kind::Atom: {
      auto it = env.find(f->atom);
      if (it == env.end())
        fail(Errc::MissingAtom, "no value for atom '" + f->atom + "'");
      return it->second;
    }
    case Kind::Bot:
      return a.zero;
    case Kind::And:
      return a.meet[horn_term(a, env, f->l)][horn_term(a, env, f->r)];
    case Kind::Or:
      return a.join[horn_term(a, env, f->l)][horn_term(a, env, f->r)];
    case Kind::Impl:
      return a.impl[horn_term(a, env, f->l)][horn_term(a, env, f->r)];
    case Kind::Tensor:
      if (!a.has_tensor())
        fail(Errc::MissingTensor, "the algebra has no tensor table");
      return a.tensor[horn_term(a, env, f->l)][horn_term(a, env, f->r)];
  }
  fail(Errc::Internal, "unreachable formula kind");
}

// Shared quantifier part of horn_check: all carrier tuples for the given
// variables, kept only when every component carries the core flag.
template <typename Fn>
bool horn_forall(const FiniteAlgebra& a, const std::vector<std::string>& vars,
                 Fn&& holds) {
  const int n = a.size();
  const int k = static_cast<int>(vars.size());
  std::vector<int> pick(k, 0);
  while (true) {
    bool guarded = true;
    for (int i = 0; i < k; ++i)
      if (!a.core[pick[i]]) {
        guarded = false;
        break;
      }
    if (guarded) {
      std::map<std::string, int> env;
      for (int i = 0; i < k; ++i) env[vars[i]] = pick[i];
      if (!holds(env)) return false;
    }
    int i = 0;
    while (i < k) {
      if (++pick[i] < n) break;
      pick[i] = 0;
      ++i;
    }
    if (i == k) break;
  }
  return true;
}

std::string pair_detail(const FiniteAlgebra& a, const char* op, int x, int y,
                        int v, const char* why) {
  return a.names[x] + " " + op + " " + a.names[y] + " = " + a.names[v] + " " +
         why;
}

AlgebraReport violation(std::string check, std::string detail) {
  AlgebraReport r;
  r.ok = false;
  r.check = std::move(check);
  r.detail = std::move(detail);
  return r;
}

// Checks shared by both validators: core closure under the listed
// operations, the Heyting laws on the closure, and Split. with_tensor
// selects the dependence reading of both the core and its closure.
AlgebraReport validate_common(const FiniteAlgebra& a, bool with_tensor,
                              std::vector<char>& carrier_out) {
  if (!a.core[a.zero])
    return violation("core-closure", "0 is not in the core");
  const std::vector<int> core = core_list(a);
  for (int x : core)
    for (int y : core) {
      if (!a.core[a.meet[x][y]])
        return violation("core-closure", pair_detail(a, "&", x, y,
                                                     a.meet[x][y],
                                                     "is not in the core"));
      if (!a.core[a.impl[x][y]])
        return violation("core-closure", pair_detail(a, "->", x, y,
                                                     a.impl[x][y],
                                                     "is not in the core"));
      if (with_tensor && !a.core[a.tensor[x][y]])
        return violation("core-closure", pair_detail(a, "(*)", x, y,
                                                     a.tensor[x][y],
                                                     "is not in the core"));
    }
  carrier_out = carrier_closure_flags(a, with_tensor);
  const std::vector<int> z = flags_to_list(carrier_out);
  for (int x : z)
    for (int y : z)
      for (int w : z) {
        const bool below = le(a, a.meet[x][y], w);
        const bool resid = le(a, x, a.impl[y][w]);
        if (below != resid)
          return violation(
              "heyting", "residuation fails at x = " + a.names[x] + ", y = " +
                             a.names[y] + ", z = " + a.names[w]);
      }
  for (int c : core)
    for (int x : z)
      for (int y : z) {
        const int lhs = a.impl[c][a.join[x][y]];
        const int rhs = a.join[a.impl[c][x]][a.impl[c][y]];
        if (lhs != rhs)
          return violation(
              "split", "a -> (x \\/ y) splits badly at a = " + a.names[c] +
                           ", x = " + a.names[x] + ", y = " + a.names[y]);
      }
  return AlgebraReport{};
}

}  // namespace

FiniteAlgebra derive_tables(std::vector<std::string> names,
                            std::vector<std::vector<char>> leq, int zero) {
  const int n = static_cast<int>(names.size());
  if (n == 0) fail(Errc::BadInput, "an algebra needs at least one element");
  if (static_cast<int>(leq.size()) != n)
    fail(Errc::BadInput, "order matrix does not match the element count");
  for (auto& row : leq)
    if (static_cast<int>(row.size()) != n)
      fail(Errc::BadInput, "order matrix does not match the element count");
  if (zero < 0 || zero >= n) fail(Errc::BadInput, "zero index out of range");
  // Reflexive and transitive closure; harmless when already closed.
  for (int i = 0; i < n; ++i) leq[i][i] = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (!leq[i][j]) continue;
        for (int k = 0; k < n; ++k)
          if (leq[j][k] && !leq[i][k]) {
            leq[i][k] = 1;
            changed = true;
          }
      }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && leq[i][j] && leq[j][i])
        fail(Errc::NotALattice, "elements '" + names[i] + "' and '" +
                                    names[j] + "' are order equivalent");
  for (int i = 0; i < n; ++i)
    if (!leq[zero][i])
      fail(Errc::BadInput,
           "zero is not below element '" + names[i] + "'");

  FiniteAlgebra a;
  a.leq = leq;
  a.zero = zero;
  a.meet.assign(n, std::vector<int>(n));
  a.join.assign(n, std::vector<int>(n));
  a.impl.assign(n, std::vector<int>(n));
  a.core.assign(n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int g = bound_of_pair(leq, n, x, y, true);
      if (g < 0)
        fail(Errc::NotALattice, "elements '" + names[x] + "' and '" +
                                    names[y] +
                                    "' have no greatest lower bound");
      a.meet[x][y] = g;
      const int l = bound_of_pair(leq, n, x, y, false);
      if (l < 0)
        fail(Errc::NotALattice, "elements '" + names[x] + "' and '" +
                                    names[y] + "' have no least upper bound");
      a.join[x][y] = l;
    }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int acc = zero;
      for (int c = 0; c < n; ++c)
        if (leq[a.meet[c][x]][y]) acc = a.join[acc][c];
      a.impl[x][y] = acc;
    }
  a.one = a.impl[zero][zero];
  a.names = std::move(names);
  return a;
}

AlgebraReport validate_inq_algebra(const FiniteAlgebra& a) {
  require_tables(a, false);
  std::vector<char> carrier;
  return validate_common(a, false, carrier);
}

AlgebraReport validate_dep_algebra(const FiniteAlgebra& a) {
  require_tables(a, false);
  if (!a.has_tensor())
    return violation("tensor", "dependence algebra without a tensor table");
  require_tables(a, true);
  std::vector<char> zflags;
  AlgebraReport common = validate_common(a, true, zflags);
  if (!common.ok) return common;
  const std::vector<int> core = core_list(a);
  for (int x : core)
    for (int y : core) {
      const int t = a.tensor[x][y];
      if (!le(a, x, t) || !le(a, y, t))
        return violation("core-join", pair_detail(a, "(*)", x, y, t,
                                                  "is not an upper bound"));
      for (int c : core)
        if (le(a, x, c) && le(a, y, c) && !le(a, t, c))
          return violation(
              "core-join",
              pair_detail(a, "(*)", x, y, t,
                          "is not the least core upper bound"));
    }
  const std::vector<int> z = flags_to_list(zflags);
  for (int x : z)
    for (int y : z)
      for (int w : z) {
        const int lhs = a.tensor[x][a.join[y][w]];
        const int rhs = a.join[a.tensor[x][y]][a.tensor[x][w]];
        if (lhs != rhs)
          return violation(
              "dist", "x (*) (y \\/ z) fails to distribute at x = " +
                          a.names[x] + ", y = " + a.names[y] + ", z = " +
                          a.names[w]);
      }
  for (int x : z)
    for (int y : z)
      for (int v : z)
        for (int w : z) {
          const int guard =
              a.meet[a.meet[a.impl[x][v]][a.impl[y][w]]][a.tensor[x][y]];
          if (!le(a, guard, a.tensor[v][w]))
            return violation(
                "mon", "(x -> z) & (y -> k) & (x (*) y) is not below "
                       "z (*) k at x = " +
                           a.names[x] + ", y = " + a.names[y] + ", z = " +
                           a.names[v] + ", k = " + a.names[w]);
        }
  return AlgebraReport{};
}

std::vector<int> core_generated_carrier(const FiniteAlgebra& a) {
  require_tables(a, false);
  return flags_to_list(carrier_closure_flags(a, a.has_tensor()));
}

int eval_core(const FiniteAlgebra& a, const CoreValuation& mu,
              const Formula& phi) {
  require_tables(a, false);
  std::unordered_map<const Node*, int> memo;
  auto rec = [&](auto&& self, const Formula& f) -> int {
    auto hit = memo.find(f.get());
    if (hit != memo.end()) return hit->second;
    int v = -1;
    switch (f->kind) {
      case Kind::Atom: {
        auto it = mu.find(f->atom);
        if (it == mu.end())
          fail(Errc::MissingAtom, "no value for atom '" + f->atom + "'");
        v = it->second;
        if (v < 0 || v >= a.size() || !a.core[v])
          fail(Errc::BadInput,
               "valuation of '" + f->atom + "' is not a core element");
        break;
      }
      case Kind::Bot:
        v = a.zero;
        break;
      case Kind::And:
        v = a.meet[self(self, f->l)][self(self, f->r)];
        break;
      case Kind::Or:
        v = a.join[self(self, f->l)][self(self, f->r)];
        break;
      case Kind::Impl:
        v = a.impl[self(self, f->l)][self(self, f->r)];
        break;
      case Kind::Tensor:
        if (!a.has_tensor())
          fail(Errc::MissingTensor, "the algebra has no tensor table");
        v = a.tensor[self(self, f->l)][self(self, f->r)];
        break;
    }
    memo[f.get()] = v;
    return v;
  };
  return rec(rec, phi);
}

bool algebra_valid(const FiniteAlgebra& a, const Formula& phi) {
  require_tables(a, false);
  bool ok = true;
  for_each_core_valuation(a, atoms(phi), [&](const CoreValuation& mu) {
    if (eval_core(a, mu, phi) != a.one) {
      ok = false;
      return false;
    }
    return true;
  });
  return ok;
}

bool horn_check(const FiniteAlgebra& a, const Formula& phi) {
  require_tables(a, false);
  return horn_forall(a, atoms(phi),
                     [&](const std::map<std::string, int>& env) {
                       return horn_term(a, env, phi) == a.one;
                     });
}

bool horn_check(const FiniteAlgebra& a, const Formula& eps,
                const Formula& delta) {
  require_tables(a, false);
  std::vector<std::string> vars = atoms(eps);
  for (const std::string& v : atoms(delta))
    if (!std::binary_search(vars.begin(), vars.end(), v)) vars.push_back(v);
  std::sort(vars.begin(), vars.end());
  return horn_forall(a, vars, [&](const std::map<std::string, int>& env) {
    return horn_term(a, env, eps) == horn_term(a, env, delta);
  });
}

std::vector<int> join_irreducibles(const FiniteAlgebra& a) {
  const std::vector<int> z = core_generated_carrier(a);
  std::vector<int> out;
  for (int x : z) {
    bool irreducible = true;
    for (int p : z) {
      if (p == x || !le(a, p, x)) continue;
      for (int q : z) {
        if (q == x || !le(a, q, x)) continue;
        if (a.join[p][q] == x) {
          irreducible = false;
          break;
        }
      }
      if (!irreducible) break;
    }
    if (irreducible) out.push_back(x);
  }
  return out;
}

bool is_well_connected(const FiniteAlgebra& a) {
  const std::vector<int> z = core_generated_carrier(a);
  for (int x : z)
    for (int y : z)
      if (a.join[x][y] == a.one && x != a.one && y != a.one) return false;
  return true;
}

bool is_core_generated(const FiniteAlgebra& a) {
  return static_cast<int>(core_generated_carrier(a).size()) == a.size();
}

std::vector<int> disjunctive_rep(const FiniteAlgebra& a, int x) {
  require_tables(a, false);
  if (x < 0 || x >= a.size()) fail(Errc::BadInput, "element out of range");
  const std::vector<char> zflags = carrier_closure_flags(a, a.has_tensor());
  if (!zflags[x])
    fail(Errc::NotInCoreClosure,
         "element '" + a.names[x] + "' lies outside the core closure");
  std::vector<int> below;
  for (int c = 0; c < a.size(); ++c)
    if (a.core[c] && le(a, c, x)) below.push_back(c);
  std::vector<int> out;
  for (int c : below) {
    bool maximal = true;
    for (int d : below)
      if (d != c && le(a, c, d)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(c);
  }
  return out;
}

namespace {

// Maximal elements of the flagged set lying below x.
std::vector<int> maximal_flagged_below(const FiniteAlgebra& a,
                                       const std::vector<char>& flags, int x) {
  std::vector<int> below;
  for (int c = 0; c < a.size(); ++c)
    if (flags[c] && le(a, c, x)) below.push_back(c);
  std::vector<int> out;
  for (int c : below) {
    bool maximal = true;
    for (int d : below)
      if (d != c && le(a, c, d)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(c);
  }
  return out;
}

}  // namespace

GeneratedSubalgebra generated_subalgebra(const FiniteAlgebra& a,
                                         const std::vector<int>& x) {
  require_tables(a, false);
  const int n = a.size();
  std::vector<char> y(n, 0);
  for (int e : x) {
    if (e < 0 || e >= n) fail(Errc::BadInput, "element out of range");
    if (!a.core[e])
      fail(Errc::NotCoreSubset,
           "element '" + a.names[e] + "' is not a core element");
    y[e] = 1;
  }
  y[a.zero] = 1;
  y = close_under(n, std::move(y), {&a.meet, &a.impl});
  std::vector<char> zf = close_under(n, y, {&a.meet, &a.join});
  const std::vector<int> carrier = flags_to_list(zf);

  // Recompute the implication from core decompositions and insist it agrees
  // with the parent's; the carrier is then genuinely closed under it.
  for (int p : carrier)
    for (int q : carrier) {
      const std::vector<int> cs = maximal_flagged_below(a, y, p);
      const std::vector<int> ds = maximal_flagged_below(a, y, q);
      const long long nc = static_cast<long long>(cs.size());
      const long long nd = static_cast<long long>(ds.size());
      double combos = 1;
      for (long long i = 0; i < nc; ++i) combos *= static_cast<double>(nd);
      if (combos > 1e6)
        fail(Errc::LimitExceeded, "too many implication decompositions");
      std::vector<int> pickf(cs.size(), 0);
      int acc = a.zero;
      while (true) {
        int conj = a.one;
        for (size_t i = 0; i < cs.size(); ++i)
          conj = a.meet[conj][a.impl[cs[i]][ds[pickf[i]]]];
        acc = a.join[acc][conj];
        size_t i = 0;
        while (i < pickf.size()) {
          if (++pickf[i] < static_cast<int>(ds.size())) break;
          pickf[i] = 0;
          ++i;
        }
        if (i == pickf.size()) break;
      }
      if (acc != a.impl[p][q])
        fail(Errc::Internal,
             "recomputed implication disagrees with the parent algebra");
    }

  GeneratedSubalgebra out;
  out.carrier = carrier;
  out.algebra = restrict_algebra(a, carrier, false);
  for (size_t i = 0; i < carrier.size(); ++i)
    out.algebra.core[i] = y[carrier[i]];
  return out;
}

WronskiResult wronski_quotient(const FiniteAlgebra& h, int x) {
  require_tables(h, false);
  const int n = h.size();
  if (x < 0 || x >= n) fail(Errc::BadInput, "element out of range");
  if (x == h.one)
    fail(Errc::XIsTop, "cannot quotient at the top element");

  // The filter maximal among those avoiding x is principal, generated by an
  // a minimal with a not below x; quotienting by its congruence identifies
  // u with u & a, so the image is the downset of a. Ties break toward the
  // smallest element index.
  int a = -1;
  for (int u = 0; u < n; ++u) {
    if (le(h, u, x)) continue;
    bool minimal = true;
    for (int v = 0; v < n; ++v)
      if (v != u && !le(h, v, x) && le(h, v, u)) {
        minimal = false;
        break;
      }
    if (minimal) {
      a = u;
      break;
    }
  }
  if (a < 0) fail(Errc::Internal, "no quotient generator found");

  std::vector<int> carrier;
  for (int u = 0; u < n; ++u)
    if (le(h, u, a)) carrier.push_back(u);
  const int m = static_cast<int>(carrier.size());
  std::vector<int> pos(n, -1);
  for (int i = 0; i < m; ++i) pos[carrier[i]] = i;

  FiniteAlgebra b;
  b.names.reserve(m);
  for (int u : carrier) b.names.push_back(h.names[u]);
  b.leq.assign(m, std::vector<char>(m));
  b.meet.assign(m, std::vector<int>(m));
  b.join.assign(m, std::vector<int>(m));
  b.impl.assign(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      b.leq[i][j] = h.leq[carrier[i]][carrier[j]];
      b.meet[i][j] = pos[h.meet[carrier[i]][carrier[j]]];
      b.join[i][j] = pos[h.join[carrier[i]][carrier[j]]];
      b.impl[i][j] = pos[h.meet[h.impl[carrier[i]][carrier[j]]][a]];
    }
  b.zero = pos[h.zero];
  b.one = pos[a];
  b.core.assign(m, 0);
  WronskiResult out;
  out.hom.resize(n);
  for (int u = 0; u < n; ++u) out.hom[u] = pos[h.meet[u][a]];
  for (int u = 0; u < n; ++u)
    if (u < static_cast<int>(h.core.size()) && h.core[u])
      b.core[out.hom[u]] = 1;
  out.algebra = std::move(b);
  out.carrier = std::move(carrier);
  return out;
}

namespace {

// First refuting core valuation of phi on a, or nothing.
bool first_refuting_valuation(const FiniteAlgebra& a, const Formula& phi,
                              CoreValuation& out) {
  bool found = false;
  for_each_core_valuation(a, atoms(phi), [&](const CoreValuation& mu) {
    if (eval_core(a, mu, phi) != a.one) {
      out = mu;
      found = true;
      return false;
    }
    return true;
  });
  return found;
}

// Core re-join and lift of the tensor over a quotient or restriction whose
// core flags are already in place.
void reconstitute_tensor(FiniteAlgebra& b) {
  const int m = b.size();
  std::vector<int> core;
  for (int i = 0; i < m; ++i)
    if (b.core[i]) core.push_back(i);
  std::vector<std::vector<int>> tcore(m, std::vector<int>(m, -1));
  for (int x : core)
    for (int y : core) {
      int acc = b.one;
      for (int c : core)
        if (b.leq[x][c] && b.leq[y][c]) acc = b.meet[acc][c];
      tcore[x][y] = acc;
    }
  b.tensor.assign(m, std::vector<int>(m));
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      int acc = b.zero;
      for (int c : core)
        for (int d : core)
          if (b.leq[c][x] && b.leq[d][y]) acc = b.join[acc][tcore[c][d]];
      b.tensor[x][y] = acc;
    }
}

}  // namespace

BirkhoffResult birkhoff_reduce(const FiniteAlgebra& a, const Formula& phi,
                               Flavour flavour) {
  require_tables(a, flavour == Flavour::Dep);
  const std::vector<int> z =
      flags_to_list(carrier_closure_flags(a, flavour == Flavour::Dep));
  FiniteAlgebra r = restrict_algebra(a, z, flavour == Flavour::Dep);

  CoreValuation mu;
  if (!first_refuting_valuation(r, phi, mu))
    fail(Errc::PhiIsValid, "the formula is valid on the algebra");
  const int e = eval_core(r, mu, phi);

  WronskiResult w = wronski_quotient(r, e);
  BirkhoffResult out;
  out.algebra = std::move(w.algebra);
  if (flavour == Flavour::Dep) reconstitute_tensor(out.algebra);
  for (const auto& [atom, value] : mu)
    out.refuting_valuation[atom] = w.hom[value];
  return out;
}

namespace {

void collect_subformulas(const Formula& f, std::vector<Formula>& out) {
  out.push_back(f);
  if (f->l) collect_subformulas(f->l, out);
  if (f->r) collect_subformulas(f->r, out);
}

}  // namespace

BirkhoffResult dep_finite_refuter(const FiniteAlgebra& a, const Formula& phi) {
  require_tables(a, true);
  if (!is_well_connected(a))
    fail(Errc::NotWellConnected, "the algebra is not well connected");

  CoreValuation mu;
  if (!first_refuting_valuation(a, phi, mu))
    fail(Errc::PhiIsValid, "the formula is valid on the algebra");

  const int n = a.size();
  std::vector<char> seed(n, 0);
  seed[a.zero] = 1;
  seed[a.one] = 1;
  std::vector<Formula> subs;
  for (const Formula& d : dnf(phi)) collect_subformulas(d, subs);
  for (const Formula& t : subs) seed[eval_core(a, mu, t)] = 1;

  const std::vector<char> y =
      close_under(n, std::move(seed), {&a.meet, &a.tensor});
  const std::vector<char> zf = close_under(n, y, {&a.meet, &a.join});
  const std::vector<int> carrier = flags_to_list(zf);
  const int m = static_cast<int>(carrier.size());
  std::vector<int> pos(n, -1);
  for (int i = 0; i < m; ++i) pos[carrier[i]] = i;

  // Meets and joins restrict because the carrier is a sublattice; the
  // implication is the fake one, recomputed by residuation inside the
  // carrier, which is why derive_tables is the right constructor here.
  std::vector<std::string> names;
  names.reserve(m);
  for (int i : carrier) names.push_back(a.names[i]);
  std::vector<std::vector<char>> leq(m, std::vector<char>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) leq[i][j] = a.leq[carrier[i]][carrier[j]];
  FiniteAlgebra b = derive_tables(std::move(names), std::move(leq),
                                  pos[a.zero]);
  for (int i = 0; i < m; ++i) b.core[i] = y[carrier[i]];

  b.tensor.assign(m, std::vector<int>(m));
  const std::vector<int> ylist = flags_to_list(y);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int acc = a.zero;
      for (int c : ylist)
        for (int d : ylist)
          if (le(a, c, carrier[i]) && le(a, d, carrier[j]))
            acc = a.join[acc][a.tensor[c][d]];
      if (pos[acc] < 0) fail(Errc::Internal, "tensor lift left the carrier");
      b.tensor[i][j] = pos[acc];
    }

  BirkhoffResult out;
  for (const std::string& at : atoms(phi)) {
    const int v = mu[at];
    out.refuting_valuation[at] = (zf[v] && y[v]) ? pos[v] : b.zero;
  }
  out.algebra = std::move(b);
  return out;
}

AlgebraReport check_hom(const FiniteAlgebra& src, const FiniteAlgebra& dst,
                        const std::vector<int>& map, Flavour flavour) {
  require_tables(src, flavour == Flavour::Dep);
  require_tables(dst, flavour == Flavour::Dep);
  const int n = src.size();
  if (static_cast<int>(map.size()) != n)
    fail(Errc::BadInput, "map size does not match the source algebra");
  for (int v : map)
    if (v < 0 || v >= dst.size())
      fail(Errc::BadInput, "map image out of range");

  if (map[src.zero] != dst.zero)
    return violation("zero", "h(0) = " + dst.names[map[src.zero]]);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (map[src.meet[x][y]] != dst.meet[map[x]][map[y]])
        return violation("meet", "h does not commute with & at x = " +
                                     src.names[x] + ", y = " + src.names[y]);
      if (map[src.join[x][y]] != dst.join[map[x]][map[y]])
        return violation("join", "h does not commute with \\/ at x = " +
                                     src.names[x] + ", y = " + src.names[y]);
    }
  for (int x = 0; x < n; ++x)
    if (src.core[x] && !dst.core[map[x]])
      return violation("core", "h drops core element '" + src.names[x] + "'");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (map[src.impl[x][y]] != dst.impl[map[x]][map[y]])
        return violation("impl", "h does not commute with -> at x = " +
                                     src.names[x] + ", y = " + src.names[y]);
  if (flavour == Flavour::Dep)
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (map[src.tensor[x][y]] != dst.tensor[map[x]][map[y]])
          return violation("tensor", "h does not commute with (*) at x = " +
                                         src.names[x] + ", y = " +
                                         src.names[y]);
  return AlgebraReport{};
}

}  // namespace inqlab
