#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "pcl/subset.hpp"

/// Data-parallel inner loops. Each kernel has a serial reference in
/// `pcl::kernels::reference` that follows the textbook definition; the tests
/// and the benchmark compare the two.
namespace pcl::kernels {

/// Closes `rows` (rows[i] = successors of i) under transitivity in place.
/// Warshall's algorithm with the rows of each pivot step updated in parallel.
void close_transitively(std::vector<Subset>& rows);

/// Members b of the powerset algebra on `domain_atoms` atoms satisfying
/// preimage(dual_lo, b) ⊆ preimage(dual_hi, b), where preimage(d, b) is
/// { t | d[t] ∈ b } over the target atoms. Results are in increasing order.
std::vector<Subset> inserter_sweep(std::size_t domain_atoms, std::span<const std::size_t> dual_lo,
                                   std::span<const std::size_t> dual_hi);

namespace reference {

/// Naive fixpoint: add (i, k) whenever (i, j) and (j, k) until stable.
void close_transitively(std::vector<Subset>& rows);

/// Materialises both preimages for every candidate and compares them.
std::vector<Subset> inserter_sweep(std::size_t domain_atoms, std::span<const std::size_t> dual_lo,
                                   std::span<const std::size_t> dual_hi);

}  // namespace reference
}  // namespace pcl::kernels
