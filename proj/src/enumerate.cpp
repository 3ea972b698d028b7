#include "pcl/enumerate.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <tuple>

#include "pcl/error.hpp"

namespace pcl {

std::string point_label(std::size_t i) {
  static constexpr std::array<const char*, 6> names{"p", "q", "r", "s", "t", "u"};
  return i < names.size() ? names[i] : "x" + std::to_string(i);
}

std::vector<std::string> point_labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(point_label(i));
  return out;
}

std::vector<FinPoset> all_posets(std::size_t n) {
  if (n > 5) throw BudgetExceeded("poset enumeration is limited to 5 elements");
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) slots.emplace_back(i, j);
  std::vector<FinPoset> out;
  const std::uint64_t total = std::uint64_t{1} << slots.size();
  for (std::uint64_t code = 0; code < total; ++code) {
    std::array<std::uint8_t, 8> above{};
    for (std::size_t k = 0; k < slots.size(); ++k)
      if ((code >> k) & 1U) above[slots[k].first] |= static_cast<std::uint8_t>(1U << slots[k].second);
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j) {
        if (!((above[i] >> j) & 1U)) continue;
        if ((above[j] >> i) & 1U) ok = false;                 // antisymmetry
        if ((above[j] & above[i]) != above[j]) ok = false;    // transitivity
      }
    if (!ok) continue;
    std::vector<std::vector<std::uint32_t>> lists(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if ((above[i] >> j) & 1U) lists[i].push_back(static_cast<std::uint32_t>(j));
    out.push_back(FinPoset::from_above(point_labels(n), std::move(lists)));
  }
  return out;
}

std::vector<FinPoset> posets_up_to_iso(std::size_t n) {
  std::vector<FinPoset> reps;
  for (auto& p : all_posets(n)) {
    bool seen = std::any_of(reps.begin(), reps.end(), [&](const FinPoset& r) { return isomorphic(r, p); });
    if (!seen) reps.push_back(std::move(p));
  }
  return reps;
}

std::vector<FinPoset> posets_up_to_iso_at_most(std::size_t n) {
  std::vector<FinPoset> out;
  for (std::size_t k = 0; k <= n; ++k)
    for (auto& p : posets_up_to_iso(k)) out.push_back(std::move(p));
  return out;
}

namespace {

using Signature = std::tuple<std::size_t, std::size_t>;

Signature signature(const FinPoset& p, std::size_t i) {
  return {p.strictly_above(i).size(), p.strictly_below(i).size()};
}

bool extend(const FinPoset& a, const FinPoset& b, const std::vector<std::size_t>& order, std::size_t depth,
            std::vector<std::size_t>& map, std::vector<bool>& used) {
  if (depth == order.size()) return true;
  const std::size_t x = order[depth];
  const auto sig = signature(a, x);
  for (std::size_t y = 0; y < b.size(); ++y) {
    if (used[y] || signature(b, y) != sig) continue;
    bool ok = true;
    for (std::size_t d = 0; d < depth && ok; ++d) {
      const std::size_t u = order[d];
      ok = a.leq(u, x) == b.leq(map[u], y) && a.leq(x, u) == b.leq(y, map[u]);
    }
    if (!ok) continue;
    map[x] = y;
    used[y] = true;
    if (extend(a, b, order, depth + 1, map, used)) return true;
    used[y] = false;
  }
  return false;
}

}  // namespace

std::optional<std::vector<std::size_t>> find_isomorphism(const FinPoset& a, const FinPoset& b) {
  if (a.size() != b.size() || a.relation_size() != b.relation_size()) return std::nullopt;
  std::vector<Signature> sa, sb;
  for (std::size_t i = 0; i < a.size(); ++i) sa.push_back(signature(a, i));
  for (std::size_t i = 0; i < b.size(); ++i) sb.push_back(signature(b, i));
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return std::nullopt;
  if (a.is_discrete()) {
    std::vector<std::size_t> id(a.size());
    for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
    return id;
  }
  // Most constrained elements first.
  std::vector<std::size_t> order(a.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return a.strictly_above(x).size() + a.strictly_below(x).size() >
           a.strictly_above(y).size() + a.strictly_below(y).size();
  });
  std::vector<std::size_t> map(a.size());
  std::vector<bool> used(b.size(), false);
  if (!extend(a, b, order, 0, map, used)) return std::nullopt;
  return map;
}

}  // namespace pcl
