#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pcl/error.hpp"
#include "pcl/order.hpp"
#include "pcl/subset.hpp"

namespace pcl {

/// A finite Boolean algebra, represented by its atoms. Elements are sets of
/// atoms; meet is intersection, join is union, negation is complement.
struct FinBoolAlg {
  std::vector<std::string> atoms;

  std::size_t atom_count() const { return atoms.size(); }
  Subset bottom() const { return Subset(atoms.size()); }
  Subset top() const { return Subset::full(atoms.size()); }
  Subset meet(const Subset& x, const Subset& y) const { return x & y; }
  Subset join(const Subset& x, const Subset& y) const { return x | y; }
  Subset negate(const Subset& x) const { return x.complement(); }
  Subset implies(const Subset& x, const Subset& y) const { return x.complement() | y; }

  /// All 2^atoms elements in increasing mask order.
  std::vector<Subset> elements(const Budget& budget = {}) const;
  std::string render(const Subset& x) const { return render_set(x, atoms); }

  friend bool operator==(const FinBoolAlg&, const FinBoolAlg&) = default;
};

/// A finite distributive lattice, represented by its Birkhoff dual: the
/// spectrum poset. Elements are the upsets of the spectrum; meet and join are
/// intersection and union. Spectrum points correspond to prime filters,
/// ordered by inclusion, so that the lattice is Up(spectrum).
struct FinDistLattice {
  FinPoset spectrum;

  bool is_element(const Subset& x) const { return x.universe() == spectrum.size() && spectrum.is_upset(x); }
  Subset bottom() const { return Subset(spectrum.size()); }
  Subset top() const { return Subset::full(spectrum.size()); }
  Subset meet(const Subset& x, const Subset& y) const { return x & y; }
  Subset join(const Subset& x, const Subset& y) const { return x | y; }
  /// The complement of x, if it exists (i.e. x is also a downset).
  std::optional<Subset> complement(const Subset& x) const;

  /// All upsets of the spectrum, sorted. Refused above budget.max_lattice.
  std::vector<Subset> elements(const Budget& budget = {}) const;
  std::string render(const Subset& x) const { return render_set(x, spectrum.labels()); }
};

/// Up(x): the lattice of upsets of a poset.
FinDistLattice up_algebra(const FinPoset& x);
/// A Boolean algebra viewed as a distributive lattice (discrete spectrum).
FinDistLattice boolean_as_lattice(const FinBoolAlg& b);

/// Poset of prime filters of `a`, ordered by inclusion, computed from the
/// element enumeration (not read off the stored spectrum). Each point is
/// labelled by the spectrum point generating its least element.
FinPoset spectrum(const FinDistLattice& a, const Budget& budget = {});
/// The elements of `a` ordered by inclusion, labelled "{p,q}".
FinPoset lattice_order(const FinDistLattice& a, const Budget& budget = {});

/// A finite lattice given explicitly by its order, with its Birkhoff dual.
struct ExplicitLattice {
  FinPoset order;
  FinDistLattice dual;                 ///< Up(prime filters)
  std::vector<Subset> element_upset;   ///< order element -> element of dual
};
/// Validates that `order` is a distributive lattice and dualises it.
/// Throws InvalidInput otherwise.
ExplicitLattice dualise_explicit(const FinPoset& order);

/// A sub-distributive-lattice of a powerset (a ring of sets containing ∅ and
/// the full set), with its Birkhoff representation.
struct SubLattice {
  std::size_t ambient_atoms = 0;
  std::vector<Subset> members;        ///< sorted
  FinDistLattice lattice;
  std::vector<Subset> member_upset;   ///< members[i] as an element of lattice
  std::vector<Subset> point_member;   ///< spectrum point -> its join-irreducible member

  std::optional<std::size_t> index_of(const Subset& member) const;
  /// Inverse of member_upset.
  Subset member_of(const Subset& upset) const;
};
/// Throws InvariantViolation if `members` is not closed under ∩ and ∪ or
/// misses ∅ or the full set.
SubLattice sublattice(std::vector<Subset> members, std::size_t ambient_atoms,
                      std::span<const std::string> ambient_labels);

/// A lattice homomorphism stored dually: dual maps target.spectrum to
/// source.spectrum and the element map is preimage along it.
struct LatticeHom {
  FinDistLattice source;
  FinDistLattice target;
  MonotoneMap dual;

  Subset operator()(const Subset& x) const { return dual.preimage(x); }
};
/// outer ∘ inner; the dual is inner.dual ∘ outer.dual.
LatticeHom compose(const LatticeHom& outer, const LatticeHom& inner);
LatticeHom identity_hom(const FinDistLattice& a);

/// A Boolean algebra homomorphism stored dually on atoms.
struct BAHom {
  FinBoolAlg source;
  FinBoolAlg target;
  std::vector<std::size_t> dual;  ///< target atom -> source atom

  Subset operator()(const Subset& x) const;
};
BAHom compose(const BAHom& outer, const BAHom& inner);
BAHom identity_hom(const FinBoolAlg& b);

/// Free Boolean algebra on a finite generator set: atoms are the valuations
/// of the generators, encoded as the bitmask of generators sent to 1.
struct FreeBA {
  FinBoolAlg alg;
  std::vector<std::string> generator_labels;
  std::vector<Subset> generators;  ///< generator g -> { v | v(g) = 1 }
};
FreeBA free_ba(std::vector<std::string> generators, const Budget& budget = {});
/// F(f) for f: from-generators -> to-generators: b ↦ { v' | v' ∘ f ∈ b }.
BAHom free_ba_map(const FreeBA& from, const FreeBA& to, std::span<const std::size_t> f);

/// The isomorphism between finitary neighbourhood families on n points and
/// the free Boolean algebra on n generators. A family is a set of subsets,
/// each subset encoded by its bitmask (so a family is a Subset of 2^n).
struct NbhdIso {
  FreeBA free;

  /// Join over a ∈ A of the minterm (meet of a's generators and the negated
  /// generators outside a), evaluated in the free algebra.
  Subset forward(const Subset& family) const;
  /// Reads each atom v back as the subset v⁻¹(1).
  Subset backward(const Subset& element) const;
};
NbhdIso nbhd_iso(std::vector<std::string> points, const Budget& budget = {});

/// Largest Boolean subalgebra K(a): atoms are the connected components of
/// the spectrum.
struct KernelK {
  FinBoolAlg alg;
  std::vector<Subset> atom_upset;  ///< component -> its points (an element of a)

  Subset embed(const Subset& b) const;
};
KernelK kernel_K(const FinDistLattice& a);

/// Free Boolean algebra over a distributive lattice: the powerset algebra
/// on the underlying set of the spectrum, with unit a -> W(G a).
struct FreeOverDL {
  FinBoolAlg alg;
  LatticeHom unit;
};
FreeOverDL free_over_dl(const FinDistLattice& a);
/// G on morphisms: preimage along the underlying function of the dual map.
BAHom free_over_dl_map(const LatticeHom& h);

/// The tensor 𝟚•a, dual to the cotensor of the spectrum, with in1 <= in2
/// and a common retraction.
struct Tensor2 {
  FinDistLattice doubled;
  Cotensor cotensor;
  LatticeHom in1;
  LatticeHom in2;
  LatticeHom retraction;
};
Tensor2 tensor2(const FinDistLattice& a);

/// Inserter { b | f(b) <= g(b) } as a sub-lattice of the common source.
SubLattice dl_inserter(const LatticeHom& f, const LatticeHom& g, const Budget& budget = {});

/// A sub-algebra of B × B, given by its elements as (left, right) pairs.
struct PairAlgebra {
  FinBoolAlg base;
  std::vector<std::pair<Subset, Subset>> elements;
};
struct SwapCheck {
  bool symmetric = false;    ///< closed under (a, b) ↦ (b, a)
  bool witness_ok = false;   ///< the explicit swap term lands on (b, a) inside the algebra
  std::optional<std::pair<Subset, Subset>> failure;
};
/// Throws InvalidInput unless `pair` contains the diagonal.
SwapCheck reflexive_pair_swap_check(const PairAlgebra& pair);

}  // namespace pcl
