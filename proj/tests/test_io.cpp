#include <doctest.h>

#include "pcl/error.hpp"
#include "pcl/io.hpp"
#include "pcl/verify.hpp"

using namespace pcl;

TEST_CASE("poset JSON round trip") {
  const json j = json::parse(R"({"elements":["a","b","c"],"leq":[["a","b"],["b","c"],["a","c"]]})");
  const FinPoset x = poset_from_json(j);
  CHECK(x.leq(0, 2));
  // Only covers are written back.
  CHECK(poset_to_json(x)["leq"].size() == 2);
  CHECK(poset_from_json(poset_to_json(x)) == x);
}

TEST_CASE("malformed posets") {
  for (const char* bad : {R"([])", R"({"leq":[]})", R"({"elements":["a","a"]})", R"({"elements":["a"],"leq":[["a","b"]]})",
                          R"({"elements":["a","b"],"leq":[["a","b"],["b","a"]]})", R"({"elements":["a"],"leq":[["a"]]})",
                          R"({"elements":[null]})"})
    CHECK_THROWS_AS(poset_from_json(json::parse(bad)), InvalidInput);
}

TEST_CASE("lattice JSON") {
  const LatticeInput dl = lattice_from_json(json::parse(R"({"type":"dl","spectrum":{"elements":["p","q"]}})"));
  CHECK(dl.lattice.elements().size() == 4);
  const LatticeInput ba = lattice_from_json(json::parse(R"({"type":"ba","atoms":["x","y","z"]})"));
  CHECK(ba.lattice.elements().size() == 8);
  const LatticeInput ex = lattice_from_json(
      json::parse(R"({"type":"lattice","order":{"elements":["0","m","1"],"leq":[["0","m"],["m","1"]]}})"));
  REQUIRE(ex.explicit_form);
  CHECK(ex.lattice.spectrum.size() == 2);
  CHECK_THROWS_AS(lattice_from_json(json::parse(R"({"type":"heyting"})")), InvalidInput);
  CHECK_THROWS_AS(lattice_from_json(json::parse(R"({"spectrum":{}})")), InvalidInput);
}

TEST_CASE("coalgebra and valuation JSON") {
  const KripkeCoalgebra g = coalgebra_from_json(json::parse(R"({"carrier":["x","y"],"structure":{"x":["y"],"y":[]}})"));
  CHECK(g.successors[0] == Subset(2, {1}));
  CHECK(g.carrier.is_discrete());
  const Valuation v = valuation_from_json(json::parse(R"({"p":["x"]})"), g.carrier);
  CHECK(v.at("p") == Subset(2, {0}));
  CHECK_THROWS_AS(coalgebra_from_json(json::parse(R"({"carrier":["x","y"],"structure":{"x":[]}})")), InvalidInput);
  CHECK_THROWS_AS(coalgebra_from_json(json::parse(R"({"carrier":["x"],"structure":{"x":["z"]}})")), InvalidInput);
  CHECK_THROWS_AS(valuation_from_json(json::parse(R"({"p":"x"})"), g.carrier), InvalidInput);
}

TEST_CASE("DOT export") {
  const std::string dot = hasse_dot(FinPoset::chain({"a", "b"}), "c2");
  CHECK(dot.find("digraph \"c2\"") == 0);
  CHECK(dot.find("n0 -> n1") != std::string::npos);
}

TEST_CASE("verify suites") {
  CHECK_THROWS_AS(run_suite("nope"), InvalidInput);
  for (const auto& name : {"order", "alg", "functors"})
    for (const auto& c : run_suite(name)) {
      INFO(c.tag << ": " << c.detail);
      CHECK(c.ok);
    }
}
