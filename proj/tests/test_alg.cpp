#include <doctest.h>

#include "oracles.hpp"
#include "pcl/alg.hpp"
#include "pcl/enumerate.hpp"
#include "pcl/error.hpp"

using namespace pcl;

namespace {

/// Lattice order given by pairs over named elements.
FinPoset lattice(std::vector<std::string> names, std::vector<std::pair<std::size_t, std::size_t>> covers) {
  return FinPoset::from_pairs(std::move(names), covers);
}

}  // namespace

TEST_CASE("upsets of small posets") {
  CHECK(up_algebra(FinPoset::chain(point_labels(3))).elements().size() == 4);
  CHECK(up_algebra(FinPoset::discrete(point_labels(3))).elements().size() == 8);
  for (const auto& x : posets_up_to_iso_at_most(5))
    CHECK(up_algebra(x).elements().size() == oracle::count_upsets(x));
}

TEST_CASE("complements exist exactly on clopen upsets") {
  const FinDistLattice a = up_algebra(FinPoset::chain({"p", "q"}));
  CHECK(a.complement(Subset(2)).has_value());
  CHECK_FALSE(a.complement(Subset(2, {1})).has_value());
}

TEST_CASE("spectrum counts join-irreducibles") {
  for (const auto& x : posets_up_to_iso_at_most(4)) {
    const FinPoset s = spectrum(up_algebra(x));
    CHECK(s.size() == x.size());
    CHECK(isomorphic(s, x));
  }
}

TEST_CASE("lattice order has the upsets as elements") {
  const FinPoset l = lattice_order(up_algebra(FinPoset::discrete({"p", "q"})));
  CHECK(l.size() == 4);
  CHECK(l.covers().size() == 4);
}

TEST_CASE("explicit lattices are checked and dualised") {
  // 2x2 square: bottom, a, b, top.
  const ExplicitLattice sq = dualise_explicit(lattice({"0", "a", "b", "1"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}));
  CHECK(sq.dual.spectrum.size() == 2);
  CHECK(sq.dual.spectrum.is_discrete());
  // M3 and N5 are lattices but not distributive.
  CHECK_THROWS_AS(dualise_explicit(lattice({"0", "a", "b", "c", "1"}, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}})),
                  InvalidInput);
  CHECK_THROWS_AS(dualise_explicit(lattice({"0", "a", "b", "c", "1"}, {{0, 1}, {1, 2}, {0, 3}, {2, 4}, {3, 4}})),
                  InvalidInput);
  // Two maximal elements: not a lattice.
  CHECK_THROWS_AS(dualise_explicit(lattice({"0", "a", "b"}, {{0, 1}, {0, 2}})), InvalidInput);
}

TEST_CASE("free Boolean algebras") {
  for (std::size_t n = 0; n <= 4; ++n) {
    const FreeBA f = free_ba(point_labels(n));
    CHECK(f.alg.atom_count() == (std::size_t{1} << n));
    for (std::size_t g = 0; g < n; ++g) CHECK(f.generators[g].count() == (std::size_t{1} << n) / 2);
  }
  Budget small;
  small.max_generators = 3;
  CHECK_THROWS_AS(free_ba(point_labels(4), small), BudgetExceeded);
}

TEST_CASE("free map sends a generator to its image") {
  const FreeBA a = free_ba({"x", "y"}), b = free_ba({"z"});
  const std::vector<std::size_t> f{0, 0};
  const BAHom h = free_ba_map(a, b, f);
  CHECK(h(a.generators[0]) == b.generators[0]);
  CHECK(h(a.generators[0] & a.generators[1].complement()) == b.alg.bottom());
}

TEST_CASE("neighbourhood iso on one point") {
  const NbhdIso iso = nbhd_iso({"p"});
  // The family {{p}} is the generator p itself.
  Subset fam(2);
  fam.insert(1);
  CHECK(iso.forward(fam) == iso.free.generators[0]);
}

TEST_CASE("K has one atom per component") {
  for (const auto& x : posets_up_to_iso_at_most(5)) CHECK(kernel_K(up_algebra(x)).alg.atom_count() == oracle::component_count(x));
}

TEST_CASE("G doubles nothing: free BA over a DL has one atom per spectrum point") {
  const FreeOverDL g = free_over_dl(up_algebra(FinPoset::chain({"p", "q", "r"})));
  CHECK(g.alg.atom_count() == 3);
  CHECK(g.unit(Subset(3, {1, 2})) == Subset(3, {1, 2}));
}

TEST_CASE("tensor of a chain") {
  const Tensor2 t = tensor2(up_algebra(FinPoset::chain({"p", "q"})));
  // Comparable pairs of the 2-chain: 3.
  CHECK(t.doubled.spectrum.size() == 3);
}

TEST_CASE("inserter of the identity pair is everything") {
  const FinDistLattice a = up_algebra(FinPoset::chain({"p", "q"}));
  const LatticeHom id = identity_hom(a);
  CHECK(dl_inserter(id, id).members.size() == 3);
}

TEST_CASE("sublattice rejects non-closed families") {
  const std::vector<std::string> labels{"a", "b"};
  CHECK_THROWS_AS(sublattice({Subset(2), Subset(2, {0}), Subset(2, {1})}, 2, labels), InvariantViolation);
  const SubLattice s = sublattice({Subset(2), Subset(2, {0}), Subset::full(2)}, 2, labels);
  CHECK(s.lattice.spectrum.size() == 2);
  CHECK(s.index_of(Subset(2, {0})) == std::optional<std::size_t>{1});
}

TEST_CASE("pair algebra swap") {
  const FinBoolAlg b{{"a"}};
  PairAlgebra diag{b, {{Subset(1), Subset(1)}, {Subset::full(1), Subset::full(1)}}};
  CHECK(reflexive_pair_swap_check(diag).symmetric);
  PairAlgebra missing{b, {{Subset(1), Subset(1)}}};
  CHECK_THROWS_AS(reflexive_pair_swap_check(missing), InvalidInput);
}
