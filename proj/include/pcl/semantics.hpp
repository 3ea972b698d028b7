#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pcl/alg.hpp"
#include "pcl/error.hpp"
#include "pcl/formula.hpp"
#include "pcl/functors.hpp"
#include "pcl/posetify.hpp"
#include "pcl/positivize.hpp"

namespace pcl {

/// A powerset coalgebra: successors[x] = γ(x). Over a non-discrete carrier
/// it is read as a Pow′-coalgebra, which needs convex successor sets and
/// γ monotone for the Egli-Milner order.
struct KripkeCoalgebra {
  FinPoset carrier;
  std::vector<Subset> successors;
};

using Valuation = std::map<std::string, Subset>;

enum class Mode { Boolean, Positive };

/// Throws InvalidInput unless γ is total, convex-valued and monotone.
void validate_positive(const KripkeCoalgebra& g);
/// Throws InvalidInput unless every value is a subset (upset, if `upsets`).
void validate_valuation(const FinPoset& carrier, const Valuation& v, bool upsets);

/// Egli-Milner comparison of two subsets of a poset.
bool egli_milner_leq(const FinPoset& x, const Subset& a, const Subset& b);

/// Direct clauses: ◇φ holds at x iff γ(x) meets ⟦φ⟧, □φ iff γ(x) ⊆ ⟦φ⟧.
/// Fills out[i] with the extension of dag node i. `out` is reused across
/// calls to avoid reallocation. Positive mode rejects negation.
void evaluate(const FormulaDag& dag, const KripkeCoalgebra& g, const Valuation& v, Mode mode,
              std::vector<Subset>& out);

Subset interpret_boolean(const KripkeCoalgebra& g, const Valuation& v, const Formula& f);
/// Validates γ, the valuation and the formula first.
Subset interpret_positive(const KripkeCoalgebra& g, const Valuation& v, const Formula& f);

/// δ at a finite set, from the presentation of L(Pow x): the free Boolean
/// algebra on the generators ◇U (U ⊆ x) modulo ◇⊥ = ⊥ and
/// ◇(U ∪ V) = ◇U ∨ ◇V, sent to Pow(Pow x) by δ(◇U) = { V | V ∩ U ≠ ∅ }.
struct DeltaPow {
  std::vector<std::string> points;
  FreeBA free;                     ///< generator U (as a mask) is ◇U
  std::vector<std::size_t> valid;  ///< free atoms satisfying the equations
  FinBoolAlg domain;               ///< L(Pow x); atoms are indices into valid
  std::vector<std::size_t> dual;   ///< V ⊆ x (mask) -> domain atom

  Subset generator(std::uint64_t u) const;
  /// δ(a) as a subset of the 2^n subsets of x.
  Subset apply(const Subset& a) const;
};
DeltaPow delta_pow(std::vector<std::string> points, const Budget& budget = {});

/// δ′ at a poset for the semantic syntax built from t.
struct DeltaPrime {
  FunctorPtr functor;
  FinPoset carrier;
  std::vector<Subset> upsets;     ///< Up(carrier), sorted
  Positivication positive;        ///< L′(Up carrier)
  Posetification posetified;      ///< T′(carrier)
  std::vector<Subset> table;      ///< member index -> upset of T′(carrier)
  std::vector<Subset> box_image;  ///< upset index -> δ′(□U), when □ exists
  std::vector<Subset> dia_image;  ///< upset index -> δ′(◇U), when ◇ exists

  std::size_t upset_index(const Subset& u) const;
};
/// Throws InvariantViolation if some δ-image is not saturated for ≡_T, ≤_T.
DeltaPrime delta_prime(FunctorPtr t, const FinPoset& x, const Budget& budget = {});

/// The same recursion with modal clauses ⟦mod φ⟧ = γ⁻¹(δ′(mod ⟦φ⟧)).
/// Needs δ′ built for the powerset functor on g.carrier.
void evaluate_via_delta_prime(const FormulaDag& dag, const KripkeCoalgebra& g, const Valuation& v,
                              const DeltaPrime& d, std::vector<Subset>& out);
Subset interpret_via_delta_prime(const KripkeCoalgebra& g, const Valuation& v, const Formula& f, const DeltaPrime& d);

struct InjectivityReport {
  bool injective = true;
  std::size_t domain_size = 0;
  std::optional<std::pair<std::string, std::string>> counterexample;
};
InjectivityReport injectivity_check(const DeltaPow& d, const Budget& budget = {});
InjectivityReport injectivity_check(const DeltaPrime& d);

/// Every monotone Pow′-coalgebra on x.
std::vector<KripkeCoalgebra> monotone_coalgebras(const FinPoset& x, const Budget& budget = {});

}  // namespace pcl
