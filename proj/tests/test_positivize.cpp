#include <doctest.h>

#include "oracles.hpp"
#include "pcl/enumerate.hpp"
#include "pcl/error.hpp"
#include "pcl/posetify.hpp"
#include "pcl/positivize.hpp"

using namespace pcl;

namespace {

FinDistLattice chain_lattice(std::size_t points) { return up_algebra(FinPoset::chain(point_labels(points))); }

/// |Up(Pow′(S))| from the convex subsets and the Egli-Milner order.
std::size_t dunn_size_oracle(const FinPoset& s) {
  std::vector<oracle::Mask> convex;
  for (oracle::Mask a = 0; a < (oracle::Mask{1} << s.size()); ++a)
    if (oracle::is_convex(s, a)) convex.push_back(a);
  std::vector<std::vector<bool>> leq(convex.size(), std::vector<bool>(convex.size()));
  for (std::size_t i = 0; i < convex.size(); ++i)
    for (std::size_t j = 0; j < convex.size(); ++j) leq[i][j] = oracle::egli_milner(s, convex[i], convex[j]);
  return oracle::count_upsets(leq);
}

}  // namespace

TEST_CASE("syntax names") {
  CHECK(make_syntax("dunn")->name() == make_syntax("semantic:pow")->name());
  CHECK_NOTHROW(make_syntax("free"));
  CHECK_NOTHROW(make_syntax("semantic:mnb"));
  CHECK_THROWS_AS(make_syntax("boxes"), InvalidInput);
  CHECK_THROWS_AS(make_syntax("semantic:zzz"), InvalidInput);
}

TEST_CASE("normal modal logic: sizes against convex-set oracle") {
  for (const auto& x : posets_up_to_iso_at_most(3)) {
    const Positivication p = positivize(*make_syntax("dunn"), up_algebra(x));
    CHECK(p.result.members.size() == dunn_size_oracle(x));
  }
  CHECK(positivize(*make_syntax("dunn"), chain_lattice(2)).result.members.size() == 8);
}

TEST_CASE("on Boolean algebras nothing is lost") {
  // L′(W B) has as many elements as L B = Pow(Pow(atoms)).
  for (std::size_t n = 0; n <= 2; ++n) {
    const FinDistLattice b = boolean_as_lattice(FinBoolAlg{point_labels(n)});
    const Positivication p = positivize(*make_syntax("dunn"), b);
    CHECK(p.result.members.size() == (std::size_t{1} << (std::size_t{1} << n)));
  }
}

TEST_CASE("boxes and diamonds are members for normal modal logic") {
  const FinDistLattice a = chain_lattice(2);
  const Positivication p = positivize(*make_syntax("dunn"), a);
  REQUIRE(p.box);
  REQUIRE(p.diamond);
  for (std::size_t i = 0; i < a.elements().size(); ++i) {
    CHECK(p.result.index_of((*p.box)[i]));
    CHECK(p.result.index_of((*p.diamond)[i]));
  }
  CHECK(dunn_axiom_check(p).ok());
}

TEST_CASE("free modality keeps only boxes of complemented elements") {
  const FinDistLattice a = chain_lattice(2);
  const Positivication p = positivize(*make_free_modality(), a);
  CHECK(p.result.members.size() == 16);
  CHECK_FALSE(p.diamond);
  const auto elems = a.elements();
  for (std::size_t i = 0; i < elems.size(); ++i)
    CHECK(p.result.index_of((*p.box)[i]).has_value() == a.complement(elems[i]).has_value());
}

TEST_CASE("free modality over a disconnected spectrum") {
  // K(2 points) has 4 elements, so L′A is free on 4 generators.
  const Positivication p = positivize(*make_free_modality(), up_algebra(FinPoset::discrete({"p", "q"})));
  CHECK(p.result.members.size() == 65536);
}

TEST_CASE("free modality budget") {
  Budget small;
  small.max_generators = 3;
  CHECK_THROWS_AS(positivize(*make_free_modality(), chain_lattice(2), small), BudgetExceeded);
}

TEST_CASE("monotone neighbourhood semantics is not normal") {
  const Positivication p = positivize(*make_syntax("semantic:mnb"), chain_lattice(2));
  CHECK(p.result.members.size() == expected_members_semantic(*make_mnb(), chain_lattice(2)).size());
  CHECK_FALSE(dunn_axiom_check(p).ok());
}

TEST_CASE("closed forms") {
  for (const auto& x : posets_up_to_iso_at_most(3)) {
    const FinDistLattice a = up_algebra(x);
    CHECK(closed_form_dunn(a).elements().size() == dunn_size_oracle(x));
    CHECK(closed_form_semantic(*make_pow(), a).elements().size() == dunn_size_oracle(x));
  }
  // free BA on the 2^#components elements of K.
  CHECK(closed_form_free(chain_lattice(2)).elements().size() == 16);
}

TEST_CASE("morphisms map into the target inserter") {
  const FinDistLattice a = chain_lattice(2), b = up_algebra(FinPoset::chain({"x"}));
  const auto l = make_syntax("dunn");
  const Positivication pa = positivize(*l, a), pb = positivize(*l, b);
  // a -> b collapsing: dual map sends the single point of b's spectrum to p.
  const LatticeHom h{a, b, MonotoneMap(b.spectrum, a.spectrum, {0})};
  const auto m = positivize_mor(*l, h, pa, pb);
  CHECK(m.size() == pa.result.members.size());
  CHECK(m.front() == 0);
  CHECK(m.back() == pb.result.members.size() - 1);
}

TEST_CASE("beta on Boolean algebras") {
  for (const auto& name : {"dunn", "free"})
    for (std::size_t n = 0; n <= 2; ++n) {
      const Beta bt = beta(*make_syntax(name), FinBoolAlg{point_labels(n)});
      CHECK(bt.bijective);
      CHECK(bt.round_trip);
    }
}
