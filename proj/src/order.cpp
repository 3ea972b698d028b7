#include "pcl/order.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "pcl/error.hpp"
#include "pcl/kernels.hpp"

namespace pcl {

namespace {

bool sorted_contains(std::span<const std::uint32_t> v, std::size_t x) {
  return std::binary_search(v.begin(), v.end(), static_cast<std::uint32_t>(x));
}

}  // namespace

void FinPoset::index_labels() {
  index_.clear();
  index_.reserve(labels_.size());
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (!index_.emplace(labels_[i], i).second) throw InvalidInput("duplicate poset label '" + labels_[i] + "'");
  }
}

void FinPoset::derive_below() {
  below_.assign(labels_.size(), {});
  for (std::size_t i = 0; i < above_.size(); ++i)
    for (auto j : above_[i]) below_[j].push_back(static_cast<std::uint32_t>(i));
}

void FinPoset::validate() const {
  const std::size_t n = labels_.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (auto j : above_[i]) {
      if (j >= n) throw InvalidInput("order refers to a missing element");
      if (j == i) throw InvalidInput("strict order contains a loop at '" + labels_[i] + "'");
      if (sorted_contains(above_[j], i))
        throw InvalidInput("order is not antisymmetric: '" + labels_[i] + "' and '" + labels_[j] + "'");
      if (!std::includes(above_[i].begin(), above_[i].end(), above_[j].begin(), above_[j].end()))
        throw InvalidInput("order is not transitive at '" + labels_[i] + "' <= '" + labels_[j] + "'");
    }
  }
}

FinPoset FinPoset::from_rows(std::vector<std::string> labels, const std::vector<Subset>& rows) {
  if (rows.size() != labels.size()) throw InvalidInput("order rows do not match carrier size");
  std::vector<std::vector<std::uint32_t>> above(labels.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].contains(i)) throw InvalidInput("order is not reflexive at '" + labels[i] + "'");
    rows[i].for_each([&](std::size_t j) {
      if (j != i) above[i].push_back(static_cast<std::uint32_t>(j));
    });
  }
  return from_above(std::move(labels), std::move(above));
}

FinPoset FinPoset::from_above(std::vector<std::string> labels, std::vector<std::vector<std::uint32_t>> above) {
  if (above.size() != labels.size()) throw InvalidInput("order lists do not match carrier size");
  FinPoset p;
  p.labels_ = std::move(labels);
  p.above_ = std::move(above);
  for (auto& a : p.above_) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
  p.index_labels();
  p.validate();
  p.derive_below();
  return p;
}

FinPoset FinPoset::from_pairs(std::vector<std::string> labels,
                              const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  const std::size_t n = labels.size();
  std::vector<Subset> rows(n, Subset(n));
  for (std::size_t i = 0; i < n; ++i) rows[i].insert(i);
  for (auto [i, j] : pairs) {
    if (i >= n || j >= n) throw InvalidInput("order pair refers to a missing element");
    rows[i].insert(j);
  }
  kernels::close_transitively(rows);
  return from_rows(std::move(labels), rows);
}

FinPoset FinPoset::discrete(std::vector<std::string> labels) {
  const std::size_t n = labels.size();
  return from_above(std::move(labels), std::vector<std::vector<std::uint32_t>>(n));
}

FinPoset FinPoset::chain(std::vector<std::string> labels) {
  const std::size_t n = labels.size();
  std::vector<std::vector<std::uint32_t>> above(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) above[i].push_back(static_cast<std::uint32_t>(j));
  return from_above(std::move(labels), std::move(above));
}

std::optional<std::size_t> FinPoset::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool FinPoset::leq(std::size_t i, std::size_t j) const { return i == j || sorted_contains(above_[i], j); }

Subset FinPoset::up_set(std::size_t i) const {
  Subset s(size());
  s.insert(i);
  for (auto j : above_[i]) s.insert(j);
  return s;
}

Subset FinPoset::down_set(std::size_t i) const {
  Subset s(size());
  s.insert(i);
  for (auto j : below_[i]) s.insert(j);
  return s;
}

Subset FinPoset::up_closure(const Subset& s) const {
  Subset out = s;
  s.for_each([&](std::size_t i) {
    for (auto j : above_[i]) out.insert(j);
  });
  return out;
}

Subset FinPoset::down_closure(const Subset& s) const {
  Subset out = s;
  s.for_each([&](std::size_t i) {
    for (auto j : below_[i]) out.insert(j);
  });
  return out;
}

bool FinPoset::is_upset(const Subset& s) const { return up_closure(s) == s; }
bool FinPoset::is_downset(const Subset& s) const { return down_closure(s) == s; }

std::vector<std::pair<std::size_t, std::size_t>> FinPoset::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < size(); ++i) {
    for (auto j : above_[i]) {
      bool is_cover = true;
      for (auto k : above_[i]) {
        if (k != j && sorted_contains(above_[k], j)) {
          is_cover = false;
          break;
        }
      }
      if (is_cover) out.emplace_back(i, j);
    }
  }
  return out;
}

bool FinPoset::is_discrete() const {
  return std::all_of(above_.begin(), above_.end(), [](const auto& a) { return a.empty(); });
}

std::size_t FinPoset::relation_size() const {
  std::size_t n = size();
  for (const auto& a : above_) n += a.size();
  return n;
}

MonotoneMap::MonotoneMap(FinPoset src, FinPoset tgt, std::vector<std::size_t> values)
    : source(std::move(src)), target(std::move(tgt)), assignment(std::move(values)) {
  if (assignment.size() != source.size()) throw InvalidInput("map is not total on its source");
  for (auto v : assignment)
    if (v >= target.size()) throw InvalidInput("map value outside target");
  for (std::size_t i = 0; i < source.size(); ++i)
    for (auto j : source.strictly_above(i))
      if (!target.leq(assignment[i], assignment[j]))
        throw InvalidInput("map is not monotone at '" + source.label(i) + "' <= '" + source.label(j) + "'");
}

bool MonotoneMap::is_surjective() const {
  Subset hit(target.size());
  for (auto v : assignment) hit.insert(v);
  return hit.count() == target.size();
}

Subset MonotoneMap::preimage(const Subset& s) const {
  Subset out(source.size());
  for (std::size_t i = 0; i < assignment.size(); ++i)
    if (s.contains(assignment[i])) out.insert(i);
  return out;
}

Subset MonotoneMap::image(const Subset& s) const {
  Subset out(target.size());
  s.for_each([&](std::size_t i) { out.insert(assignment[i]); });
  return out;
}

MonotoneMap compose(const MonotoneMap& outer, const MonotoneMap& inner) {
  if (!(inner.target == outer.source)) throw InvalidInput("maps are not composable");
  std::vector<std::size_t> values(inner.source.size());
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = outer.assignment[inner.assignment[i]];
  return MonotoneMap(inner.source, outer.target, std::move(values));
}

Preorder::Preorder(std::vector<std::string> carrier) : labels(std::move(carrier)) {
  const std::size_t n = labels.size();
  rows.assign(n, Subset(n));
  for (std::size_t i = 0; i < n; ++i) rows[i].insert(i);
}

bool Preorder::is_reflexive() const {
  for (std::size_t i = 0; i < size(); ++i)
    if (!rows[i].contains(i)) return false;
  return true;
}

bool Preorder::is_transitive() const {
  for (std::size_t i = 0; i < size(); ++i) {
    bool ok = true;
    rows[i].for_each([&](std::size_t j) { ok = ok && rows[j].is_subset_of(rows[i]); });
    if (!ok) return false;
  }
  return true;
}

bool Preorder::is_antisymmetric() const {
  for (std::size_t i = 0; i < size(); ++i) {
    bool ok = true;
    rows[i].for_each([&](std::size_t j) { ok = ok && (j == i || !rows[j].contains(i)); });
    if (!ok) return false;
  }
  return true;
}

bool Preorder::is_contained_in(const Preorder& other) const {
  if (other.size() != size()) return false;
  for (std::size_t i = 0; i < size(); ++i)
    if (!rows[i].is_subset_of(other.rows[i])) return false;
  return true;
}

std::size_t Preorder::pair_count() const {
  std::size_t c = 0;
  for (const auto& r : rows) c += r.count();
  return c;
}

Preorder transitive_closure(const Preorder& r) {
  Preorder out = r;
  kernels::close_transitively(out.rows);
  return out;
}

Quotient poset_quotient(const Preorder& r) {
  const std::size_t n = r.size();
  Quotient q;
  q.projection.assign(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (q.projection[i] != n) continue;
    const std::size_t cls = q.representative.size();
    q.representative.push_back(i);
    r.rows[i].for_each([&](std::size_t j) {
      if (r.related(j, i)) q.projection[j] = cls;
    });
    q.projection[i] = cls;
  }
  const std::size_t k = q.representative.size();
  std::vector<std::string> labels(k);
  std::vector<std::vector<std::uint32_t>> above(k);
  for (std::size_t c = 0; c < k; ++c) {
    const std::size_t rep = q.representative[c];
    labels[c] = r.labels.empty() ? std::to_string(rep) : r.labels[rep];
    Subset targets(k);
    r.rows[rep].for_each([&](std::size_t j) { targets.insert(q.projection[j]); });
    targets.erase(c);
    targets.for_each([&](std::size_t d) { above[c].push_back(static_cast<std::uint32_t>(d)); });
  }
  // from_above validates: a non-transitive input surfaces here.
  q.poset = FinPoset::from_above(std::move(labels), std::move(above));
  return q;
}

Cotensor cotensor2(const FinPoset& x) {
  std::vector<std::pair<std::size_t, std::size_t>> comps;
  for (std::size_t i = 0; i < x.size(); ++i) {
    comps.emplace_back(i, i);
    for (auto j : x.strictly_above(i)) comps.emplace_back(i, j);
  }
  std::sort(comps.begin(), comps.end());
  const std::size_t m = comps.size();
  std::vector<std::string> labels(m);
  for (std::size_t k = 0; k < m; ++k) labels[k] = "(" + x.label(comps[k].first) + "," + x.label(comps[k].second) + ")";
  std::vector<std::vector<std::uint32_t>> above(m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      if (a != b && x.leq(comps[a].first, comps[b].first) && x.leq(comps[a].second, comps[b].second))
        above[a].push_back(static_cast<std::uint32_t>(b));
  FinPoset pairs = FinPoset::from_above(std::move(labels), std::move(above));

  std::vector<std::size_t> v0(m), v1(m), diag(x.size());
  for (std::size_t k = 0; k < m; ++k) {
    v0[k] = comps[k].first;
    v1[k] = comps[k].second;
    if (comps[k].first == comps[k].second) diag[comps[k].first] = k;
  }
  MonotoneMap pi0(pairs, x, std::move(v0));
  MonotoneMap pi1(pairs, x, std::move(v1));
  MonotoneMap section(x, pairs, std::move(diag));
  return Cotensor{std::move(pairs), std::move(comps), std::move(pi0), std::move(pi1), std::move(section)};
}

Components connected_components(const FinPoset& x) {
  const std::size_t n = x.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (auto j : x.strictly_above(i)) {
      auto a = find(i), b = find(j);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  Components c;
  c.component_of.assign(n, n);
  std::vector<std::size_t> id_of_root(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    auto r = find(i);
    if (id_of_root[r] == n) id_of_root[r] = c.count++;
    c.component_of[i] = id_of_root[r];
  }
  std::vector<Subset> members(c.count, Subset(n));
  for (std::size_t i = 0; i < n; ++i) members[c.component_of[i]].insert(i);
  for (const auto& m : members) c.labels.push_back(render_set(m, x.labels()));
  return c;
}

std::string render_set(const Subset& s, std::span<const std::string> labels) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](std::size_t i) {
    if (!first) out += ",";
    out += i < labels.size() ? labels[i] : std::to_string(i);
    first = false;
  });
  return out + "}";
}

}  // namespace pcl
