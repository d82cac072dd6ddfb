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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <string>
#include <vector>

#include "error.hpp"
#include "json_io.hpp"

using namespace inqlab;

namespace {

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const InqError& e) {
    return e.code();
  }
  FAIL("expected an InqError");
  return Errc::Internal;
}

FiniteAlgebra make_chain3(bool full_core) {
  std::vector<std::vector<char>> leq(3, std::vector<char>(3, 0));
  leq[0][1] = leq[1][2] = 1;
  FiniteAlgebra a = derive_tables({"0", "s", "1"}, leq, 0);
  a.core = full_core ? std::vector<char>{1, 1, 1} : std::vector<char>{1, 0, 1};
  return a;
}

}  // namespace

TEST_CASE("write_json renders the frozen separator style") {
  CHECK(write_json({{"supports", false}}) == "{\"supports\": false}");
  CHECK(write_json(OrderedJson::array({1, 2, 3})) == "[1, 2, 3]");
  CHECK(write_json(OrderedJson::object()) == "{}");
  CHECK(write_json(OrderedJson::array()) == "[]");
  OrderedJson j = OrderedJson::object();
  j["a"] = OrderedJson::array({"x", OrderedJson{{"b", 1}}});
  CHECK(write_json(j) == "{\"a\": [\"x\", {\"b\": 1}]}");
  CHECK(write_json(OrderedJson("say \"hi\"")) == "\"say \\\"hi\\\"\"");
}

TEST_CASE("model files load with closure and validation") {
  SUBCASE("the specified shape loads") {
    const Model m = model_from_json(
        R"({"worlds":["w1","w2"],"order":[["w1","w2"]],"valuation":{"w2":["p"]}})");
    REQUIRE(m.frame.size() == 2);
    CHECK(m.frame.names == std::vector<std::string>{"w1", "w2"});
    CHECK(m.frame.succ == std::vector<Team>{0b11, 0b10});
    CHECK(m.val.at("p") == 0b10);
  }
  SUBCASE("the order is closed transitively on load") {
    const Model m = model_from_json(
        R"({"worlds":["w1","w2","w3"],"order":[["w1","w2"],["w2","w3"]]})");
    CHECK(m.frame.succ == std::vector<Team>{0b111, 0b110, 0b100});
  }
  SUBCASE("order and valuation may be omitted") {
    const Model m = model_from_json(R"({"worlds":["w1"]})");
    CHECK(m.frame.succ == std::vector<Team>{0b1});
    CHECK(m.val.empty());
  }
  SUBCASE("an atoms array declares empty extensions") {
    const Model m = model_from_json(
        R"({"worlds":["w1"],"atoms":["p","q"],"valuation":{"w1":["p"]}})");
    CHECK(m.val.at("p") == 0b1);
    CHECK(m.val.at("q") == 0b0);
  }
  SUBCASE("persistence is enforced") {
    CHECK(code_of([&] {
            model_from_json(
                R"({"worlds":["w1","w2"],"order":[["w1","w2"]],"valuation":{"w1":["p"]}})");
          }) == Errc::NotPersistent);
  }
  SUBCASE("cycles are rejected") {
    CHECK(code_of([&] {
            model_from_json(
                R"({"worlds":["w1","w2"],"order":[["w1","w2"],["w2","w1"]]})");
          }) == Errc::NotAPartialOrder);
  }
  SUBCASE("malformed input is rejected") {
    CHECK(code_of([&] { model_from_json("{"); }) == Errc::BadInput);
    CHECK(code_of([&] { model_from_json(R"({"order":[]})"); }) ==
          Errc::BadInput);
    CHECK(code_of([&] {
            model_from_json(R"({"worlds":["w1","w1"]})");
          }) == Errc::BadInput);
    CHECK(code_of([&] {
            model_from_json(R"({"worlds":["w1"],"order":[["w1","w9"]]})");
          }) == Errc::BadInput);
    CHECK(code_of([&] {
            model_from_json(R"({"worlds":["w1"],"order":[["w1"]]})");
          }) == Errc::BadInput);
    CHECK(code_of([&] {
            model_from_json(
                R"({"worlds":["w1"],"valuation":{"w1":["P"]}})");
          }) == Errc::BadInput);
    CHECK(code_of([&] {
            model_from_json(R"({"worlds":["w1"],"valuation":{"w9":[]}})");
          }) == Errc::BadInput);
  }
}

TEST_CASE("model emission is frozen and round trips") {
  const Model m = model_from_json(
      R"({"worlds":["w1","w2"],"order":[["w1","w2"]],"valuation":{"w2":["p"]}})");
  const std::string text = model_to_json(m);
  CHECK(text ==
        "{\"worlds\": [\"w1\", \"w2\"], \"order\": [[\"w1\", \"w2\"]], "
        "\"valuation\": {\"w2\": [\"p\"]}}");
  const Model back = model_from_json(text);
  CHECK(back.frame.names == m.frame.names);
  CHECK(back.frame.succ == m.frame.succ);
  CHECK(back.val == m.val);

  // Only covers are written: the closure of the emitted order restores the
  // full relation of a longer chain.
  const Model chain = model_from_json(
      R"({"worlds":["a","b","c"],"order":[["a","b"],["b","c"],["a","c"]]})");
  const std::string chain_text = model_to_json(chain);
  CHECK(chain_text ==
        "{\"worlds\": [\"a\", \"b\", \"c\"], \"order\": [[\"a\", \"b\"], "
        "[\"b\", \"c\"]], \"valuation\": {}}");
  CHECK(model_from_json(chain_text).frame.succ == chain.frame.succ);

  // Atoms with empty extensions survive the trip through the atoms block.
  Model with_empty = m;
  with_empty.val["q"] = 0;
  const std::string empty_text = model_to_json(with_empty);
  CHECK(empty_text ==
        "{\"worlds\": [\"w1\", \"w2\"], \"order\": [[\"w1\", \"w2\"]], "
        "\"atoms\": [\"p\", \"q\"], \"valuation\": {\"w2\": [\"p\"]}}");
  CHECK(model_from_json(empty_text).val == with_empty.val);
}

TEST_CASE("frame files are model files without valuations") {
  const Model m = model_from_json(
      R"({"worlds":["w1","w2"],"order":[["w1","w2"]]})");
  CHECK(frame_to_json(m.frame) ==
        "{\"worlds\": [\"w1\", \"w2\"], \"order\": [[\"w1\", \"w2\"]]}");
  const Model back = model_from_json(frame_to_json(m.frame));
  CHECK(back.frame.succ == m.frame.succ);
}

TEST_CASE("algebra files load, derive tables, and verify stored ones") {
  SUBCASE("the specified shape loads") {
    const FiniteAlgebra a = algebra_from_json(
        R"({"elements":["0","a","1"],"leq":[["0","a"],["a","1"]],"zero":"0","core":["0","1"]})");
    REQUIRE(a.size() == 3);
    CHECK(a.zero == 0);
    CHECK(a.one == 2);
    CHECK(a.core == std::vector<char>{1, 0, 1});
    CHECK_FALSE(a.has_tensor());
    CHECK(a.join[1][1] == 1);
    CHECK(a.impl[1][0] == 0);
  }
  SUBCASE("tensor tables load") {
    const FiniteAlgebra a = algebra_from_json(
        R"({"elements":["0","s","1"],"leq":[["0","s"],["s","1"]],"zero":"0",
            "core":["0","s","1"],
            "tensor":[["0","s","1"],["s","s","1"],["1","1","1"]]})");
    REQUIRE(a.has_tensor());
    CHECK(a.tensor == a.join);
  }
  SUBCASE("stored tables are verified") {
    const char* good =
        R"({"elements":["0","1"],"leq":[["0","1"]],"zero":"0","one":"1",
            "tables":{"impl":[["1","1"],["0","1"]]}})";
    CHECK(algebra_from_json(good).size() == 2);
    CHECK(code_of([&] {
            algebra_from_json(
                R"({"elements":["0","1"],"leq":[["0","1"]],"zero":"0","one":"0"})");
          }) == Errc::BadInput);
    CHECK(code_of([&] {
            algebra_from_json(
                R"({"elements":["0","1"],"leq":[["0","1"]],"zero":"0",
                    "tables":{"meet":[["0","1"],["1","1"]]}})");
          }) == Errc::BadInput);
  }
  SUBCASE("lattice failures propagate") {
    CHECK(code_of([&] {
            algebra_from_json(
                R"({"elements":["0","a","b"],"leq":[["0","a"],["0","b"]],"zero":"0"})");
          }) == Errc::NotALattice);
    CHECK(code_of([&] {
            algebra_from_json(
                R"({"elements":["0","1"],"leq":[["0","1"]],"zero":"1"})");
          }) == Errc::BadInput);
  }
  SUBCASE("malformed input is rejected") {
    CHECK(code_of([&] { algebra_from_json("[]"); }) == Errc::BadInput);
    CHECK(code_of([&] {
            algebra_from_json(R"({"elements":["0"],"zero":"9"})");
          }) == Errc::BadInput);
    CHECK(code_of([&] {
            algebra_from_json(
                R"({"elements":["0","1"],"leq":[["0","1"]],"zero":"0",
                    "tensor":[["0","1"]]})");
          }) == Errc::BadInput);
  }
}

TEST_CASE("algebra emission is frozen and round trips") {
  std::vector<std::vector<char>> leq(2, std::vector<char>(2, 0));
  leq[0][1] = 1;
  FiniteAlgebra two = derive_tables({"0", "1"}, leq, 0);
  two.core = {1, 1};
  CHECK(algebra_to_json(two) ==
        "{\"elements\": [\"0\", \"1\"], \"leq\": [[\"0\", \"1\"]], "
        "\"zero\": \"0\", \"one\": \"1\", \"core\": [\"0\", \"1\"], "
        "\"tables\": {"
        "\"meet\": [[\"0\", \"0\"], [\"0\", \"1\"]], "
        "\"join\": [[\"0\", \"1\"], [\"1\", \"1\"]], "
        "\"impl\": [[\"1\", \"1\"], [\"0\", \"1\"]]}}");

  FiniteAlgebra a = make_chain3(true);
  a.tensor = a.join;
  const FiniteAlgebra back = algebra_from_json(algebra_to_json(a));
  CHECK(back.names == a.names);
  CHECK(back.leq == a.leq);
  CHECK(back.meet == a.meet);
  CHECK(back.join == a.join);
  CHECK(back.impl == a.impl);
  CHECK(back.core == a.core);
  CHECK(back.tensor == a.tensor);
  CHECK(back.zero == a.zero);
  CHECK(back.one == a.one);
}

TEST_CASE("dual algebra emission carries provenance") {
  const Frame f = rt_closure(make_frame({"w1", "w2"}, {{0, 1}}));
  const DualAlgebra d = dual_algebra(f, Flavour::Inq);
  const std::string text = dual_algebra_to_json(d);
  CHECK(text.find("\"provenance\": {\"worlds\": [\"w1\", \"w2\"], "
                  "\"generators\": {\"<{}>\": [], \"<{w2}>\": [\"w2\"], "
                  "\"<{w1 w2}>\": [\"w1\", \"w2\"]}}") != std::string::npos);

  // The provenance block does not disturb loading the algebra back.
  const FiniteAlgebra back = algebra_from_json(text);
  CHECK(back.leq == d.algebra.leq);
  CHECK(back.core == d.algebra.core);
  CHECK(back.impl == d.algebra.impl);
}

TEST_CASE("core valuations parse against an algebra") {
  const FiniteAlgebra a = make_chain3(true);
  const CoreValuation mu = core_valuation_from_json(a, R"({"p":"s","q":"1"})");
  CHECK(mu.at("p") == 1);
  CHECK(mu.at("q") == 2);
  CHECK(write_json(core_valuation_to_ojson(a, mu)) ==
        "{\"p\": \"s\", \"q\": \"1\"}");
  CHECK(code_of([&] { core_valuation_from_json(a, R"({"p":"x"})"); }) ==
        Errc::BadInput);
  CHECK(code_of([&] { core_valuation_from_json(a, R"(["p"])"); }) ==
        Errc::BadInput);
}
