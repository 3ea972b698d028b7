#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "pcl/error.hpp"
#include "pcl/order.hpp"

namespace pcl {

/// A functor element in canonical encoding; equality is structural.
///   pow       : { subset mask }
///   poly      : { symbol, coefficient, arg_1, ..., arg_arity }
///   bag:d     : sorted point indices (a multiset of size <= d)
///   nb, mnb   : sorted subset masks (the members of the family)
using Element = std::vector<std::uint32_t>;

struct ElementHash {
  std::size_t operator()(const Element& e) const {
    std::size_t h = e.size();
    for (auto v : e) h = (h ^ v) * 0x100000001b3ULL + (h >> 31);
    return h;
  }
};

enum class FunctorKind { Pow, Poly, Bag, Nb, MNb };

/// A finitary Set-endofunctor on the finite sets {0, ..., n-1}.
class SetFunctor {
 public:
  virtual ~SetFunctor() = default;

  virtual std::string name() const = 0;
  virtual FunctorKind kind() const = 0;
  /// |T(n)|, saturating at UINT64_MAX. Consulted before any enumeration.
  virtual std::uint64_t size_estimate(std::size_t n) const = 0;
  /// T(n) in canonical order.
  virtual std::vector<Element> on_obj(std::size_t n) const = 0;
  /// T(f)(e) for f: n -> m given by its values.
  virtual Element on_mor(std::span<const std::size_t> f, std::size_t m, const Element& e) const = 0;
  virtual std::string render(const Element& e, std::span<const std::string> labels) const = 0;

  /// Order lifted in closed form onto on_obj(x.size()), if the functor has one.
  virtual std::optional<Preorder> closed_lifting(const FinPoset& x, const Budget& budget) const;

  /// Adds every pair (T f0 (c), T f1 (c)), c ∈ T(k), to `rows`, which is
  /// indexed by on_obj(n). The default evaluates the images in parallel
  /// over the materialised T(k).
  virtual void lift_pairs(std::size_t k, std::span<const std::size_t> f0, std::span<const std::size_t> f1,
                          std::size_t n, std::vector<Subset>& rows) const;

  /// Serial, fully materialised version of lift_pairs.
  void lift_pairs_reference(std::size_t k, std::span<const std::size_t> f0, std::span<const std::size_t> f1,
                            std::size_t n, std::vector<Subset>& rows) const;
};

using FunctorPtr = std::shared_ptr<const SetFunctor>;

struct PolySymbol {
  std::string name;
  std::size_t arity = 0;
  std::size_t coefficients = 1;
};

FunctorPtr make_pow();
FunctorPtr make_poly(std::vector<PolySymbol> signature);
FunctorPtr make_bag(std::size_t degree = 3);
FunctorPtr make_nb();
FunctorPtr make_mnb();
/// Parses `pow`, `poly:<name>:<arity>:<coeffs>,...` (optionally
/// `poly:sigma=<name>:...`), `bag:<d>`, `nb`, `mnb`. Throws InvalidInput.
FunctorPtr make_functor(const std::string& spec);

/// Lookup table from element to its position in on_obj(n).
class ElementIndex {
 public:
  explicit ElementIndex(const std::vector<Element>& elements);
  std::size_t at(const Element& e) const;

 private:
  std::unordered_map<Element, std::size_t, ElementHash> index_;
};

/// on_obj with the budget check.
std::vector<Element> apply_obj(const SetFunctor& t, std::size_t n, const Budget& budget = {});
/// T(f) as an index map on_obj(n) -> on_obj(m).
std::vector<std::size_t> apply_mor(const SetFunctor& t, std::span<const std::size_t> f, std::size_t n, std::size_t m,
                                   const Budget& budget = {});

struct LiftedRelation {
  std::vector<Element> elements;  ///< T(V X)
  Preorder relation;              ///< R_T on elements
};
/// R_T = { (T π0 (c), T π1 (c)) | c ∈ T(V X^𝟚) } on T(V X).
LiftedRelation lift_relation_generic(const SetFunctor& t, const FinPoset& x, const Budget& budget = {});

/// Up-closed families of subsets of an n-set as bitmasks over the 2^n
/// subsets, in increasing order (n <= 6).
std::vector<std::uint64_t> upclosed_families(std::size_t n);
/// Dedekind number M(n), saturating at UINT64_MAX.
std::uint64_t dedekind(std::size_t n);

/// Family-mask helpers shared by the neighbourhood functors and the tests.
std::uint64_t family_mask(const Element& family);
Element family_element(std::uint64_t mask);

}  // namespace pcl
