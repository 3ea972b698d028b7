#include <doctest.h>

#include "oracles.hpp"
#include "pcl/enumerate.hpp"
#include "pcl/error.hpp"
#include "pcl/posetify.hpp"

using namespace pcl;

namespace {

/// Checks result order against an independent comparison on representatives.
template <class Leq>
void check_order(const Posetification& p, Leq leq) {
  for (std::size_t a = 0; a < p.result.size(); ++a)
    for (std::size_t b = 0; b < p.result.size(); ++b)
      CHECK(p.result.leq(a, b) == leq(p.elements[p.representative[a]], p.elements[p.representative[b]]));
}

}  // namespace

TEST_CASE("convex powerset of chains") {
  // The n-chain has 1 + n(n+1)/2 convex subsets: empty plus intervals.
  for (std::size_t n = 0; n <= 5; ++n) {
    const FinPoset x = FinPoset::chain(point_labels(n));
    const Posetification p = posetify_powerset(x);
    CHECK(p.result.size() == 1 + n * (n + 1) / 2);
  }
}

TEST_CASE("convex powerset matches brute force on all small posets") {
  for (const auto& x : posets_up_to_iso_at_most(4)) {
    const Posetification p = posetify_powerset(x);
    std::size_t convex = 0;
    for (oracle::Mask a = 0; a < (oracle::Mask{1} << x.size()); ++a) convex += oracle::is_convex(x, a) ? 1 : 0;
    CHECK(p.result.size() == convex);
    check_order(p, [&](const Element& a, const Element& b) { return oracle::egli_milner(x, a[0], b[0]); });
    for (std::size_t c = 0; c < p.result.size(); ++c) CHECK(oracle::is_convex(x, p.elements[p.representative[c]][0]));
  }
}

TEST_CASE("convex closure") {
  const FinPoset x = FinPoset::chain(point_labels(4));
  CHECK(convex_closure(x, Subset(4, {0, 3})) == Subset::full(4));
  CHECK(convex_closure(x, Subset(4)) == Subset(4));
  const FinPoset v = FinPoset::from_pairs({"a", "b", "c"}, {{0, 1}, {0, 2}});
  CHECK(convex_closure(v, Subset(3, {1, 2})) == Subset(3, {1, 2}));
}

TEST_CASE("generic and closed powerset agree, and R_Pow is Egli-Milner") {
  for (const auto& x : posets_up_to_iso_at_most(3)) {
    const Posetification g = posetify_generic(*make_pow(), x);
    check_order(g, [&](const Element& a, const Element& b) { return oracle::egli_milner(x, a[0], b[0]); });
    CHECK(cross_check(*make_pow(), x).ok);
  }
}

TEST_CASE("monotone neighbourhood order matches the two-clause oracle") {
  for (const auto& x : posets_up_to_iso_at_most(3)) {
    const Posetification g = posetify_generic(*make_mnb(), x);
    const auto leq = [&](const Element& a, const Element& b) {
      return oracle::mnb_leq(x, family_mask(a), family_mask(b));
    };
    check_order(g, leq);
    CHECK(g.result.size() == oracle::class_count(g.elements.size(), [&](std::size_t i, std::size_t j) {
            return leq(g.elements[i], g.elements[j]);
          }));
  }
}

TEST_CASE("monotone neighbourhoods on the 2-chain") {
  const FinPoset x = FinPoset::chain({"p", "q"});
  const Posetification c = posetify_mnb(x);
  CHECK(c.result.size() == 6);
  CHECK(check_posetification(c) == std::nullopt);
}

TEST_CASE("neighbourhood functor collapses to components") {
  for (const auto& x : posets_up_to_iso_at_most(4)) {
    const Posetification p = posetify_nb(x);
    const std::size_t k = oracle::component_count(x);
    CHECK(p.result.size() == (std::size_t{1} << (std::size_t{1} << k)));
    CHECK(p.result.is_discrete());
  }
}

TEST_CASE("generic neighbourhood on the 2-chain") {
  const Posetification g = posetify_generic(*make_nb(), FinPoset::chain({"p", "q"}));
  CHECK(g.result.size() == 4);
  CHECK(g.result.is_discrete());
}

TEST_CASE("generic neighbourhood on a 4-chain is refused") {
  CHECK_THROWS_AS(posetify_generic(*make_nb(), FinPoset::chain(point_labels(4))), BudgetExceeded);
}

TEST_CASE("analytic functors need no quotient") {
  for (const auto& t : {make_bag(3), make_poly({{"f", 2, 1}, {"g", 1, 2}})}) {
    for (const auto& x : posets_up_to_iso_at_most(3)) {
      const Posetification c = posetify_analytic(*t, x);
      CHECK(c.result.size() == c.elements.size());
      CHECK(cross_check(*t, x).ok);
    }
  }
  CHECK_THROWS_AS(posetify_analytic(*make_pow(), FinPoset::chain({"p", "q", "r"})), InvariantViolation);
}

TEST_CASE("bag order on the 2-chain") {
  // 2p <= p+q <= 2q, and the degree is preserved.
  const Posetification c = posetify_analytic(*make_bag(2), FinPoset::chain({"p", "q"}));
  const ElementIndex idx(c.elements);
  const auto pp = c.projection[idx.at({0, 0})], pq = c.projection[idx.at({0, 1})], qq = c.projection[idx.at({1, 1})];
  const auto p = c.projection[idx.at({0})], zero = c.projection[idx.at({})];
  CHECK(c.result.leq(pp, pq));
  CHECK(c.result.leq(pq, qq));
  CHECK_FALSE(c.result.leq(qq, pp));
  CHECK_FALSE(c.result.leq(p, pp));
  CHECK_FALSE(c.result.leq(zero, p));
}

TEST_CASE("cross check notices a wrong closed form") {
  const FinPoset x = FinPoset::chain({"p", "q"});
  const Posetification g = posetify_generic(*make_pow(), x);
  Posetification wrong = posetify_powerset(x);
  wrong.result = FinPoset::discrete(wrong.result.labels());
  CHECK_FALSE(cross_check(g, wrong).ok);
}
