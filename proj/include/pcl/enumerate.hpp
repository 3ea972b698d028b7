#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pcl/order.hpp"

namespace pcl {

/// Default element names p, q, r, s, t, u, then x6, x7, ...
std::string point_label(std::size_t i);
std::vector<std::string> point_labels(std::size_t n);

/// Every partial order on the labelled carrier {p, q, ...} of size n (n <= 5).
std::vector<FinPoset> all_posets(std::size_t n);
/// One representative per isomorphism class, sizes exactly n (n <= 5).
std::vector<FinPoset> posets_up_to_iso(std::size_t n);
/// Representatives of every isomorphism class with at most n elements.
std::vector<FinPoset> posets_up_to_iso_at_most(std::size_t n);

/// An order isomorphism a -> b (as an index map) if one exists. Brute-force
/// backtracking with degree pruning; fine for Hasse diagrams of ~20 nodes.
std::optional<std::vector<std::size_t>> find_isomorphism(const FinPoset& a, const FinPoset& b);
inline bool isomorphic(const FinPoset& a, const FinPoset& b) { return find_isomorphism(a, b).has_value(); }

}  // namespace pcl
