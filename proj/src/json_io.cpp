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

#include "json_io.hpp"

#include <algorithm>
#include <utility>
#include <vector>

#include "error.hpp"

namespace inqlab {

namespace {

void write_value(const OrderedJson& j, std::string& out) {
  if (j.is_object()) {
    out += '{';
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!first) out += ", ";
      first = false;
      out += OrderedJson(it.key()).dump();
      out += ": ";
      write_value(it.value(), out);
    }
    out += '}';
  } else if (j.is_array()) {
    out += '[';
    bool first = true;
    for (const auto& v : j) {
      if (!first) out += ", ";
      first = false;
      write_value(v, out);
    }
    out += ']';
  } else {
    out += j.dump();
  }
}

OrderedJson parse_json(const std::string& text) {
  try {
    return OrderedJson::parse(text);
  } catch (const std::exception& e) {
    fail(Errc::BadInput, std::string("invalid JSON: ") + e.what());
  }
}

std::vector<std::string> name_list(const OrderedJson& j, const char* what) {
  if (!j.is_array())
    fail(Errc::BadInput, std::string(what) + " must be an array of names");
  std::vector<std::string> out;
  for (const auto& v : j) {
    if (!v.is_string() || v.get<std::string>().empty())
      fail(Errc::BadInput,
           std::string(what) + " entries must be nonempty strings");
    out.push_back(v.get<std::string>());
  }
  std::vector<std::string> sorted = out;
  std::sort(sorted.begin(), sorted.end());
  const auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end())
    fail(Errc::BadInput,
         std::string(what) + " repeats the name '" + *dup + "'");
  return out;
}

int index_of(const std::vector<std::string>& names, const std::string& name,
             const char* where) {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<int>(i);
  fail(Errc::BadInput,
       std::string("unknown name '") + name + "' in " + where);
}

// The covers of the strict part of a reflexive transitive antisymmetric
// relation given as row masks or as a matrix.
template <typename LeqFn>
OrderedJson covers(const std::vector<std::string>& names, LeqFn leq) {
  const int n = static_cast<int>(names.size());
  OrderedJson out = OrderedJson::array();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || !leq(i, j)) continue;
      bool cover = true;
      for (int k = 0; k < n && cover; ++k)
        if (k != i && k != j && leq(i, k) && leq(k, j)) cover = false;
      if (cover) out.push_back({names[i], names[j]});
    }
  return out;
}

std::vector<std::vector<int>> name_table(const OrderedJson& j,
                                         const std::vector<std::string>& names,
                                         const char* what) {
  const int n = static_cast<int>(names.size());
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    fail(Errc::BadInput,
         std::string(what) + " must be a table with one row per element");
  std::vector<std::vector<int>> out(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x) {
    if (!j[x].is_array() || static_cast<int>(j[x].size()) != n)
      fail(Errc::BadInput,
           std::string(what) + " rows must list one name per element");
    for (int y = 0; y < n; ++y) {
      if (!j[x][y].is_string())
        fail(Errc::BadInput, std::string(what) + " entries must be names");
      out[x][y] = index_of(names, j[x][y].get<std::string>(), what);
    }
  }
  return out;
}

OrderedJson table_to_ojson(const FiniteAlgebra& a,
                           const std::vector<std::vector<int>>& table) {
  OrderedJson out = OrderedJson::array();
  for (const auto& row : table) {
    OrderedJson r = OrderedJson::array();
    for (int v : row) r.push_back(a.names[v]);
    out.push_back(r);
  }
  return out;
}

}  // namespace

std::string write_json(const OrderedJson& j) {
  std::string out;
  write_value(j, out);
  return out;
}

Model model_from_json(const std::string& text) {
  const OrderedJson j = parse_json(text);
  if (!j.is_object() || !j.contains("worlds"))
    fail(Errc::BadInput, "a model file needs a \"worlds\" array");
  const std::vector<std::string> names = name_list(j["worlds"], "\"worlds\"");

  std::vector<std::pair<int, int>> edges;
  if (j.contains("order")) {
    if (!j["order"].is_array())
      fail(Errc::BadInput, "\"order\" must be an array of world pairs");
    for (const auto& pr : j["order"]) {
      if (!pr.is_array() || pr.size() != 2 || !pr[0].is_string() ||
          !pr[1].is_string())
        fail(Errc::BadInput, "\"order\" entries are [from, to] world pairs");
      edges.emplace_back(
          index_of(names, pr[0].get<std::string>(), "\"order\""),
          index_of(names, pr[1].get<std::string>(), "\"order\""));
    }
  }

  Model m;
  m.frame = rt_closure(make_frame(names, edges));
  const FrameReport rep = validate_frame(m.frame);
  if (!rep.ok) {
    std::string detail = "the order violates " + rep.law;
    for (const std::string& w : rep.witnesses) detail += " " + w;
    fail(Errc::NotAPartialOrder, detail);
  }

  const auto require_atom = [](const std::string& atom) {
    bool good = !atom.empty() && atom[0] >= 'a' && atom[0] <= 'z';
    for (char c : atom)
      good = good && ((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9'));
    if (!good) fail(Errc::BadInput, "'" + atom + "' is not an atom");
  };
  if (j.contains("valuation")) {
    if (!j["valuation"].is_object())
      fail(Errc::BadInput,
           "\"valuation\" must map worlds to arrays of atoms");
    for (const auto& [world, entry] : j["valuation"].items()) {
      const int w = index_of(names, world, "\"valuation\"");
      if (!entry.is_array())
        fail(Errc::BadInput,
             "\"valuation\" must map worlds to arrays of atoms");
      for (const auto& at : entry) {
        if (!at.is_string())
          fail(Errc::BadInput, "atoms in \"valuation\" must be strings");
        const std::string atom = at.get<std::string>();
        require_atom(atom);
        m.val[atom] |= Team{1} << w;
      }
    }
  }
  if (j.contains("atoms")) {
    for (const std::string& atom : name_list(j["atoms"], "\"atoms\"")) {
      require_atom(atom);
      m.val.emplace(atom, 0);
    }
  }

  for (const auto& [atom, mask] : m.val)
    for (int w = 0; w < m.frame.size(); ++w)
      if ((mask >> w & 1) && (m.frame.succ[w] & ~mask) != 0)
        fail(Errc::NotPersistent, "valuation of '" + atom +
                                      "' is not persistent at world '" +
                                      names[w] + "'");
  return m;
}

OrderedJson frame_to_ojson(const Frame& f) {
  OrderedJson j = OrderedJson::object();
  j["worlds"] = f.names;
  j["order"] =
      covers(f.names, [&](int i, int k) { return (f.succ[i] >> k & 1) != 0; });
  return j;
}

std::string frame_to_json(const Frame& f) {
  return write_json(frame_to_ojson(f));
}

OrderedJson model_to_ojson(const Model& m) {
  OrderedJson j = frame_to_ojson(m.frame);
  // The valuation block cannot mention an atom that is true nowhere, so
  // such atoms are declared separately to keep the model self-contained.
  bool empty_extension = false;
  for (const auto& [atom, mask] : m.val) empty_extension |= mask == 0;
  if (empty_extension) {
    OrderedJson atoms = OrderedJson::array();
    for (const auto& [atom, mask] : m.val) atoms.push_back(atom);
    j["atoms"] = atoms;
  }
  OrderedJson val = OrderedJson::object();
  for (int w = 0; w < m.frame.size(); ++w) {
    OrderedJson atoms = OrderedJson::array();
    for (const auto& [atom, mask] : m.val)
      if (mask >> w & 1) atoms.push_back(atom);
    if (!atoms.empty()) val[m.frame.names[w]] = atoms;
  }
  j["valuation"] = val;
  return j;
}

std::string model_to_json(const Model& m) {
  return write_json(model_to_ojson(m));
}

FiniteAlgebra algebra_from_json(const std::string& text) {
  const OrderedJson j = parse_json(text);
  if (!j.is_object() || !j.contains("elements"))
    fail(Errc::BadInput, "an algebra file needs an \"elements\" array");
  const std::vector<std::string> names =
      name_list(j["elements"], "\"elements\"");
  const int n = static_cast<int>(names.size());

  std::vector<std::vector<char>> leq(n, std::vector<char>(n, 0));
  if (j.contains("leq")) {
    if (!j["leq"].is_array())
      fail(Errc::BadInput, "\"leq\" must be an array of element pairs");
    for (const auto& pr : j["leq"]) {
      if (!pr.is_array() || pr.size() != 2 || !pr[0].is_string() ||
          !pr[1].is_string())
        fail(Errc::BadInput, "\"leq\" entries are [below, above] pairs");
      leq[index_of(names, pr[0].get<std::string>(), "\"leq\"")]
         [index_of(names, pr[1].get<std::string>(), "\"leq\"")] = 1;
    }
  }
  if (!j.contains("zero") || !j["zero"].is_string())
    fail(Errc::BadInput, "an algebra file needs a \"zero\" element name");
  const int zero = index_of(names, j["zero"].get<std::string>(), "\"zero\"");

  FiniteAlgebra a = derive_tables(names, leq, zero);

  if (j.contains("core")) {
    for (const std::string& c : name_list(j["core"], "\"core\""))
      a.core[index_of(a.names, c, "\"core\"")] = 1;
  }
  if (j.contains("tensor"))
    a.tensor = name_table(j["tensor"], a.names, "\"tensor\"");

  if (j.contains("one")) {
    if (!j["one"].is_string() ||
        index_of(a.names, j["one"].get<std::string>(), "\"one\"") != a.one)
      fail(Errc::BadInput,
           "stored \"one\" disagrees with the greatest element");
  }
  if (j.contains("tables")) {
    if (!j["tables"].is_object())
      fail(Errc::BadInput, "\"tables\" must be an object");
    const std::pair<const char*, const std::vector<std::vector<int>>*>
        expected[] = {{"meet", &a.meet}, {"join", &a.join}, {"impl", &a.impl}};
    for (const auto& [key, table] : expected)
      if (j["tables"].contains(key) &&
          name_table(j["tables"][key], a.names, key) != *table)
        fail(Errc::BadInput, std::string("stored \"") + key +
                                 "\" table disagrees with the derived one");
  }
  return a;
}

OrderedJson algebra_to_ojson(const FiniteAlgebra& a) {
  OrderedJson j = OrderedJson::object();
  j["elements"] = a.names;
  j["leq"] = covers(a.names, [&](int i, int k) { return a.leq[i][k] != 0; });
  j["zero"] = a.names[a.zero];
  j["one"] = a.names[a.one];
  OrderedJson core = OrderedJson::array();
  for (int i = 0; i < a.size(); ++i)
    if (a.core[i]) core.push_back(a.names[i]);
  j["core"] = core;
  if (a.has_tensor()) j["tensor"] = table_to_ojson(a, a.tensor);
  OrderedJson tables = OrderedJson::object();
  tables["meet"] = table_to_ojson(a, a.meet);
  tables["join"] = table_to_ojson(a, a.join);
  tables["impl"] = table_to_ojson(a, a.impl);
  j["tables"] = tables;
  return j;
}

std::string algebra_to_json(const FiniteAlgebra& a) {
  return write_json(algebra_to_ojson(a));
}

std::string dual_algebra_to_json(const DualAlgebra& d) {
  OrderedJson j = algebra_to_ojson(d.algebra);
  OrderedJson generators = OrderedJson::object();
  for (int e = 0; e < d.algebra.size(); ++e) {
    if (d.core_upset[e] < 0) continue;
    OrderedJson worlds = OrderedJson::array();
    const Team t = d.upsets[d.core_upset[e]];
    for (std::size_t w = 0; w < d.world_names.size(); ++w)
      if (t >> w & 1) worlds.push_back(d.world_names[w]);
    generators[d.algebra.names[e]] = worlds;
  }
  OrderedJson provenance = OrderedJson::object();
  provenance["worlds"] = d.world_names;
  provenance["generators"] = generators;
  j["provenance"] = provenance;
  return write_json(j);
}

CoreValuation core_valuation_from_json(const FiniteAlgebra& a,
                                       const std::string& text) {
  const OrderedJson j = parse_json(text);
  if (!j.is_object())
    fail(Errc::BadInput, "a valuation maps atoms to element names");
  CoreValuation mu;
  for (const auto& [atom, v] : j.items()) {
    if (!v.is_string())
      fail(Errc::BadInput, "a valuation maps atoms to element names");
    mu[atom] = index_of(a.names, v.get<std::string>(), "the valuation");
  }
  return mu;
}

OrderedJson core_valuation_to_ojson(const FiniteAlgebra& a,
                                    const CoreValuation& mu) {
  OrderedJson j = OrderedJson::object();
  for (const auto& [atom, v] : mu) j[atom] = a.names[v];
  return j;
}

}  // namespace inqlab
