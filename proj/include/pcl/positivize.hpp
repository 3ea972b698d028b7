#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pcl/alg.hpp"
#include "pcl/error.hpp"
#include "pcl/functors.hpp"

namespace pcl {

/// An endofunctor on finite Boolean algebras, given semantically.
class BAFunctor {
 public:
  virtual ~BAFunctor() = default;

  virtual std::string name() const = 0;
  virtual FinBoolAlg on_obj(const FinBoolAlg& b, const Budget& budget) const = 0;
  virtual BAHom on_mor(const BAHom& h, const Budget& budget) const = 0;

  /// Unary modalities b ↦ □b, b ↦ ◇b into on_obj(b), where defined.
  virtual std::optional<Subset> box(const FinBoolAlg& b, const Subset& x, const Budget& budget) const;
  virtual std::optional<Subset> diamond(const FinBoolAlg& b, const Subset& x, const Budget& budget) const;
};

using BAFunctorPtr = std::shared_ptr<const BAFunctor>;

/// L B = Pow(T(atoms of B)); L h = preimage along T(dual of h). With T the
/// powerset functor this is normal modal logic.
BAFunctorPtr make_semantic(FunctorPtr t);
/// L B = free Boolean algebra on the elements of B: one unary modality
/// satisfying no equations.
BAFunctorPtr make_free_modality();
/// Parses `dunn` (= semantic:pow), `free`, `semantic:<functor>`.
BAFunctorPtr make_syntax(const std::string& spec);

/// L′A computed as the inserter of L G(in1), L G(in2) inside W L G A.
struct Positivication {
  FinDistLattice source;
  FinBoolAlg envelope;     ///< L G A; the result sits inside its powerset lattice
  SubLattice result;       ///< members are elements of envelope
  /// Indexed like source.elements(): the modal generators, where defined.
  std::optional<std::vector<Subset>> box;
  std::optional<std::vector<Subset>> diamond;
};
Positivication positivize(const BAFunctor& l, const FinDistLattice& a, const Budget& budget = {});

/// L′h by restriction of W L G h; result[i] is the index in `to` of the
/// image of from.result.members[i]. Throws InvariantViolation if an image
/// leaves the target inserter.
std::vector<std::size_t> positivize_mor(const BAFunctor& l, const LatticeHom& h, const Positivication& from,
                                        const Positivication& to, const Budget& budget = {});

/// β: L′(W b) ≅ W(L b), transported along L of the counit G W b -> b.
struct Beta {
  FinBoolAlg lb;
  std::vector<Subset> forward;  ///< indexed like L′(W b) members
  bool bijective = false;
  bool round_trip = false;
};
Beta beta(const BAFunctor& l, const FinBoolAlg& b, const Budget& budget = {});

/// Up(Pow′(S′A)).
FinDistLattice closed_form_dunn(const FinDistLattice& a, const Budget& budget = {});
/// W(free Boolean algebra on the carrier of K(A)).
FinDistLattice closed_form_free(const FinDistLattice& a, const Budget& budget = {});
/// Up(T′(S′A)) for the semantic functor built from t.
FinDistLattice closed_form_semantic(const SetFunctor& t, const FinDistLattice& a, const Budget& budget = {});

/// The closed form transported into W L G A, i.e. the member sets the
/// inserter must produce: preimages of the upsets of T′(S′A) along e, or the
/// image of F(carrier K A) under F of the inclusion into G A.
std::vector<Subset> expected_members_semantic(const SetFunctor& t, const FinDistLattice& a, const Budget& budget = {});
std::vector<Subset> expected_members_free(const FinDistLattice& a, const Budget& budget = {});

struct AxiomReport {
  std::size_t checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};
/// □ preserves ∧, ⊤; ◇ preserves ∨, ⊥; □x ∧ ◇y ≤ ◇(x∧y); □(x∨y) ≤ □x ∨ ◇y;
/// both monotone; both land in L′A.
AxiomReport dunn_axiom_check(const Positivication& p);

}  // namespace pcl
