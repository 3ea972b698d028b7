#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pcl/error.hpp"
#include "pcl/functors.hpp"
#include "pcl/order.hpp"

namespace pcl {

/// T′X together with the coinserter map e: T(V X) -> T′X.
struct Posetification {
  FinPoset result;
  std::vector<Element> elements;            ///< T(V X), in on_obj order
  std::vector<std::size_t> projection;      ///< e, element index -> result index
  std::vector<std::size_t> representative;  ///< result index -> element index
  std::optional<Preorder> lifted;           ///< R_T, generic engine only
  std::optional<Preorder> order;            ///< ≤_T on elements, when it was built
};

/// Lift the order, close transitively, quotient by ≡_T.
Posetification posetify_generic(const SetFunctor& t, const FinPoset& x, const Budget& budget = {});
/// Convex subsets under the Egli-Milner order; e = Conv.
Posetification posetify_powerset(const FinPoset& x, const Budget& budget = {});
/// Up-closed families ordered by the two-clause ↑/↓ comparison, quotiented
/// by the induced equivalence; least-index representatives.
Posetification posetify_mnb(const FinPoset& x, const Budget& budget = {});
/// Discrete Nb(components of X); e = Nb(component map).
Posetification posetify_nb(const FinPoset& x, const Budget& budget = {});
/// Polynomial and multiset functors: the closed lifting is already a
/// partial order, so e is the identity. Throws InvariantViolation otherwise.
Posetification posetify_analytic(const SetFunctor& t, const FinPoset& x, const Budget& budget = {});
/// Closed form for any catalogued functor.
Posetification posetify_closed(const SetFunctor& t, const FinPoset& x, const Budget& budget = {});

/// Checks the poset axioms are met by construction and that e is surjective
/// and monotone with respect to `order` when present.
std::optional<std::string> check_posetification(const Posetification& p);

struct CrossCheck {
  bool ok = true;
  std::string message;  ///< first mismatch, empty on success
};
/// Isomorphism of the two results commuting with the projections.
CrossCheck cross_check(const Posetification& generic, const Posetification& closed);
CrossCheck cross_check(const SetFunctor& t, const FinPoset& x, const Budget& budget = {});

/// Smallest convex superset: { x | y1 <= x <= y2 for some y1, y2 ∈ a }.
Subset convex_closure(const FinPoset& x, const Subset& a);

/// A candidate canonical form for monotone neighbourhood classes, judged
/// against the classes of the two-clause order.
struct CanonicalReading {
  std::string name;
  bool class_invariant = true;  ///< constant on each class
  bool separates = true;        ///< distinct on distinct classes
  std::string counterexample;
};
std::vector<CanonicalReading> mnb_canonical_readings(const FinPoset& x, const Budget& budget = {});

}  // namespace pcl
