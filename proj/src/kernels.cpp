#include "pcl/kernels.hpp"

#include <algorithm>
#include <cstdint>

#include "pcl/error.hpp"

namespace pcl::kernels {

void close_transitively(std::vector<Subset>& rows) {
  const auto n = static_cast<std::int64_t>(rows.size());
  for (std::int64_t k = 0; k < n; ++k) {
    const Subset pivot = rows[k];
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i)
      if (rows[i].contains(static_cast<std::size_t>(k))) rows[i] |= pivot;
  }
}

std::vector<Subset> inserter_sweep(std::size_t domain_atoms, std::span<const std::size_t> dual_lo,
                                   std::span<const std::size_t> dual_hi) {
  if (domain_atoms > 40) throw BudgetExceeded("inserter sweep over more than 2^40 candidates");
  // Only the distinct constraints lo -> hi matter.
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t t = 0; t < dual_lo.size(); ++t)
    if (dual_lo[t] != dual_hi[t]) edges.emplace_back(dual_lo[t], dual_hi[t]);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  const std::int64_t total = std::int64_t{1} << domain_atoms;
  std::vector<unsigned char> keep(static_cast<std::size_t>(total), 0);
#pragma omp parallel for schedule(static)
  for (std::int64_t b = 0; b < total; ++b) {
    const auto bits = static_cast<std::uint64_t>(b);
    bool ok = true;
    for (const auto& [lo, hi] : edges) {
      if (((bits >> lo) & 1U) && !((bits >> hi) & 1U)) {
        ok = false;
        break;
      }
    }
    keep[static_cast<std::size_t>(b)] = ok ? 1 : 0;
  }
  std::vector<Subset> out;
  for (std::int64_t b = 0; b < total; ++b)
    if (keep[static_cast<std::size_t>(b)]) out.push_back(Subset::from_mask(domain_atoms, static_cast<std::uint64_t>(b)));
  return out;
}

namespace reference {

void close_transitively(std::vector<Subset>& rows) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (auto j : rows[i].members()) {
        for (auto k : rows[j].members()) {
          if (!rows[i].contains(k)) {
            rows[i].insert(k);
            changed = true;
          }
        }
      }
    }
  }
}

std::vector<Subset> inserter_sweep(std::size_t domain_atoms, std::span<const std::size_t> dual_lo,
                                   std::span<const std::size_t> dual_hi) {
  if (domain_atoms > 40) throw BudgetExceeded("inserter sweep over more than 2^40 candidates");
  const std::size_t targets = dual_lo.size();
  std::vector<Subset> out;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << domain_atoms); ++b) {
    const Subset elem = Subset::from_mask(domain_atoms, b);
    Subset lo(targets), hi(targets);
    for (std::size_t t = 0; t < targets; ++t) {
      if (elem.contains(dual_lo[t])) lo.insert(t);
      if (elem.contains(dual_hi[t])) hi.insert(t);
    }
    if (lo.is_subset_of(hi)) out.push_back(elem);
  }
  return out;
}

}  // namespace reference
}  // namespace pcl::kernels
