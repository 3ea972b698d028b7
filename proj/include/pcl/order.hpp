#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pcl/subset.hpp"

namespace pcl {

/// A finite partially ordered set with labelled elements.
///
/// The order is stored sparsely as the sorted list of strictly greater
/// (and strictly smaller) elements of each point, so large discrete or
/// nearly discrete posets stay cheap. Every constructor validates
/// reflexivity, transitivity and antisymmetry; a FinPoset value is always a
/// partial order.
class FinPoset {
 public:
  FinPoset() = default;

  /// Order generated by `pairs` (i <= j); reflexive and transitive pairs
  /// are completed. Throws InvalidInput if the result is not antisymmetric.
  static FinPoset from_pairs(std::vector<std::string> labels,
                             const std::vector<std::pair<std::size_t, std::size_t>>& pairs);
  /// rows[i] = { j | i <= j }. Must already be a partial order.
  static FinPoset from_rows(std::vector<std::string> labels, const std::vector<Subset>& rows);
  /// above[i] = strictly greater elements. Must already be a partial order.
  static FinPoset from_above(std::vector<std::string> labels, std::vector<std::vector<std::uint32_t>> above);
  static FinPoset discrete(std::vector<std::string> labels);
  /// Chain labels[0] < labels[1] < ...
  static FinPoset chain(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<std::size_t> index_of(const std::string& label) const;

  bool leq(std::size_t i, std::size_t j) const;
  std::span<const std::uint32_t> strictly_above(std::size_t i) const { return above_[i]; }
  std::span<const std::uint32_t> strictly_below(std::size_t i) const { return below_[i]; }

  Subset up_set(std::size_t i) const;
  Subset down_set(std::size_t i) const;
  Subset up_closure(const Subset& s) const;
  Subset down_closure(const Subset& s) const;
  bool is_upset(const Subset& s) const;
  bool is_downset(const Subset& s) const;

  /// Cover pairs (i, j): i < j with nothing strictly between.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;
  bool is_discrete() const;
  /// Number of pairs i <= j, counting the diagonal.
  std::size_t relation_size() const;

  friend bool operator==(const FinPoset& a, const FinPoset& b) {
    return a.labels_ == b.labels_ && a.above_ == b.above_;
  }

 private:
  void index_labels();
  void derive_below();
  void validate() const;

  std::vector<std::string> labels_;
  std::vector<std::vector<std::uint32_t>> above_;
  std::vector<std::vector<std::uint32_t>> below_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// A monotone map between finite posets, given by its values on indices.
struct MonotoneMap {
  FinPoset source;
  FinPoset target;
  std::vector<std::size_t> assignment;

  /// Throws InvalidInput unless the assignment is total and monotone.
  MonotoneMap(FinPoset src, FinPoset tgt, std::vector<std::size_t> values);

  std::size_t operator()(std::size_t i) const { return assignment[i]; }
  bool is_surjective() const;
  /// Preimage of a subset of the target.
  Subset preimage(const Subset& s) const;
  Subset image(const Subset& s) const;
};

/// outer ∘ inner
MonotoneMap compose(const MonotoneMap& outer, const MonotoneMap& inner);

/// A reflexive relation on a labelled finite carrier (dense rows).
struct Preorder {
  std::vector<std::string> labels;
  std::vector<Subset> rows;  ///< rows[i] = { j | i rel j }

  Preorder() = default;
  /// The diagonal on the given carrier.
  explicit Preorder(std::vector<std::string> carrier);

  std::size_t size() const { return rows.size(); }
  bool related(std::size_t i, std::size_t j) const { return rows[i].contains(j); }
  void relate(std::size_t i, std::size_t j) { rows[i].insert(j); }

  bool is_reflexive() const;
  bool is_transitive() const;
  bool is_antisymmetric() const;
  bool is_contained_in(const Preorder& other) const;
  std::size_t pair_count() const;

  friend bool operator==(const Preorder& a, const Preorder& b) { return a.rows == b.rows; }
};

/// Smallest transitive relation containing r.
Preorder transitive_closure(const Preorder& r);

struct Quotient {
  FinPoset poset;
  std::vector<std::size_t> projection;      ///< carrier index -> class index
  std::vector<std::size_t> representative;  ///< class index -> least carrier index
};

/// Quotient of a preorder by r ∩ r⁻¹ with the induced order. Classes are
/// numbered by their least member and labelled by that member's label.
Quotient poset_quotient(const Preorder& r);

/// The comparable pairs X^𝟚 = {(x, x') | x <= x'} with the componentwise
/// order, its two projections and the diagonal section.
struct Cotensor {
  FinPoset pairs;
  std::vector<std::pair<std::size_t, std::size_t>> components;
  MonotoneMap pi0;
  MonotoneMap pi1;
  MonotoneMap diagonal;
};
Cotensor cotensor2(const FinPoset& x);

struct Components {
  std::size_t count = 0;
  std::vector<std::size_t> component_of;
  std::vector<std::string> labels;  ///< "{p,q}"-style member lists
};
Components connected_components(const FinPoset& x);

/// Renders {a,b,...} from a label table.
std::string render_set(const Subset& s, std::span<const std::string> labels);

}  // namespace pcl
