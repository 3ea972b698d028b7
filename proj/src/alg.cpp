#include "pcl/alg.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace pcl {

namespace {

/// Upsets of `x` in sorted order; throws once more than `limit` are found.
std::vector<Subset> enumerate_upsets(const FinPoset& x, std::uint64_t limit) {
  const std::size_t n = x.size();
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  // Strictly greater elements have strictly fewer elements above them.
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return x.strictly_above(a).size() < x.strictly_above(b).size();
  });
  std::vector<Subset> out;
  Subset current(n);
  auto dfs = [&](auto&& self, std::size_t k) -> void {
    if (k == n) {
      if (out.size() >= limit) throw BudgetExceeded("lattice has more than " + std::to_string(limit) + " elements");
      out.push_back(current);
      return;
    }
    const std::size_t v = order[k];
    self(self, k + 1);
    bool allowed = true;
    for (auto w : x.strictly_above(v)) allowed = allowed && current.contains(w);
    if (allowed) {
      current.insert(v);
      self(self, k + 1);
      current.erase(v);
    }
  };
  dfs(dfs, 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Subset> FinBoolAlg::elements(const Budget& budget) const {
  const std::size_t n = atoms.size();
  budget.require(n < 63 && (std::uint64_t{1} << n) <= budget.max_lattice,
                 "Boolean algebra with " + std::to_string(n) + " atoms exceeds the lattice budget");
  std::vector<Subset> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) out.push_back(Subset::from_mask(n, m));
  return out;
}

std::optional<Subset> FinDistLattice::complement(const Subset& x) const {
  Subset c = x.complement();
  if (spectrum.is_upset(c)) return c;
  return std::nullopt;
}

std::vector<Subset> FinDistLattice::elements(const Budget& budget) const {
  return enumerate_upsets(spectrum, budget.max_lattice);
}

FinDistLattice up_algebra(const FinPoset& x) { return FinDistLattice{x}; }

FinDistLattice boolean_as_lattice(const FinBoolAlg& b) { return FinDistLattice{FinPoset::discrete(b.atoms)}; }

FinPoset spectrum(const FinDistLattice& a, const Budget& budget) {
  const auto elems = a.elements(budget);
  const FinPoset& p = a.spectrum;
  std::vector<Subset> primes;
  for (const auto& x : elems) {
    if (x.empty()) continue;
    // ↑x is prime iff the join of everything outside it stays outside it.
    Subset outside_join(p.size());
    for (const auto& y : elems)
      if (!x.is_subset_of(y)) outside_join |= y;
    if (!x.is_subset_of(outside_join)) primes.push_back(x);
  }
  std::vector<std::string> labels;
  for (const auto& x : primes) {
    std::string label;
    x.for_each([&](std::size_t i) {
      if (label.empty() && p.up_set(i) == x) label = p.label(i);
    });
    if (label.empty()) throw InvariantViolation("prime filter without a generating point");
    labels.push_back(label);
  }
  std::vector<Subset> rows(primes.size(), Subset(primes.size()));
  for (std::size_t i = 0; i < primes.size(); ++i)
    for (std::size_t j = 0; j < primes.size(); ++j)
      if (primes[j].is_subset_of(primes[i])) rows[i].insert(j);  // ↑x_i ⊆ ↑x_j
  return FinPoset::from_rows(std::move(labels), rows);
}

FinPoset lattice_order(const FinDistLattice& a, const Budget& budget) {
  const auto elems = a.elements(budget);
  std::vector<std::string> labels;
  std::vector<std::vector<std::uint32_t>> above(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) {
    labels.push_back(a.render(elems[i]));
    for (std::size_t j = 0; j < elems.size(); ++j)
      if (i != j && elems[i].is_subset_of(elems[j])) above[i].push_back(static_cast<std::uint32_t>(j));
  }
  return FinPoset::from_above(std::move(labels), std::move(above));
}

ExplicitLattice dualise_explicit(const FinPoset& order) {
  const std::size_t n = order.size();
  if (n == 0) throw InvalidInput("the empty poset is not a lattice");
  if (n > 512) throw BudgetExceeded("explicit lattices are limited to 512 elements");
  auto least_of = [&](const Subset& s) -> std::optional<std::size_t> {
    std::optional<std::size_t> found;
    s.for_each([&](std::size_t z) {
      if (!found && s.is_subset_of(order.up_set(z))) found = z;
    });
    return found;
  };
  auto greatest_of = [&](const Subset& s) -> std::optional<std::size_t> {
    std::optional<std::size_t> found;
    s.for_each([&](std::size_t z) {
      if (!found && s.is_subset_of(order.down_set(z))) found = z;
    });
    return found;
  };
  std::vector<std::vector<std::size_t>> join(n, std::vector<std::size_t>(n)), meet(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      auto j = least_of(order.up_set(a) & order.up_set(b));
      auto m = greatest_of(order.down_set(a) & order.down_set(b));
      if (!j || !m) throw InvalidInput("'" + order.label(a) + "' and '" + order.label(b) + "' lack a join or meet");
      join[a][b] = *j;
      meet[a][b] = *m;
    }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (meet[a][join[b][c]] != join[meet[a][b]][meet[a][c]])
          throw InvalidInput("lattice is not distributive at '" + order.label(a) + "', '" + order.label(b) + "', '" +
                             order.label(c) + "'");
  const auto bottom = *least_of(Subset::full(n));

  std::vector<std::size_t> primes;
  for (std::size_t x = 0; x < n; ++x) {
    if (x == bottom) continue;
    std::size_t outside = bottom;
    for (std::size_t y = 0; y < n; ++y)
      if (!order.leq(x, y)) outside = join[outside][y];
    if (!order.leq(x, outside)) primes.push_back(x);
  }
  std::vector<std::string> labels;
  for (auto x : primes) labels.push_back(order.label(x));
  std::vector<Subset> rows(primes.size(), Subset(primes.size()));
  for (std::size_t i = 0; i < primes.size(); ++i)
    for (std::size_t j = 0; j < primes.size(); ++j)
      if (order.leq(primes[j], primes[i])) rows[i].insert(j);
  ExplicitLattice out{order, FinDistLattice{FinPoset::from_rows(std::move(labels), rows)}, {}};
  for (std::size_t e = 0; e < n; ++e) {
    Subset up(primes.size());
    for (std::size_t i = 0; i < primes.size(); ++i)
      if (order.leq(primes[i], e)) up.insert(i);
    out.element_upset.push_back(up);
  }
  std::set<Subset> distinct(out.element_upset.begin(), out.element_upset.end());
  if (distinct.size() != n || out.dual.elements().size() != n)
    throw InvariantViolation("Birkhoff representation is not a bijection");
  return out;
}

std::optional<std::size_t> SubLattice::index_of(const Subset& member) const {
  auto it = std::lower_bound(members.begin(), members.end(), member);
  if (it == members.end() || !(*it == member)) return std::nullopt;
  return static_cast<std::size_t>(it - members.begin());
}

Subset SubLattice::member_of(const Subset& upset) const {
  Subset out(ambient_atoms);
  upset.for_each([&](std::size_t p) { out |= point_member[p]; });
  return out;
}

SubLattice sublattice(std::vector<Subset> members, std::size_t ambient_atoms,
                      std::span<const std::string> ambient_labels) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  SubLattice out;
  out.ambient_atoms = ambient_atoms;
  out.members = std::move(members);
  const Subset empty(ambient_atoms), full = Subset::full(ambient_atoms);
  if (!out.index_of(empty) || !out.index_of(full))
    throw InvariantViolation("sub-lattice misses the bottom or the top element");

  // μ(u): least member containing atom u. A family containing ∅ and the
  // full set is a ring of sets iff it is exactly the family of μ-closed sets.
  std::vector<Subset> mu(ambient_atoms, full);
  for (const auto& x : out.members)
    x.for_each([&](std::size_t u) { mu[u] &= x; });
  for (const auto& x : out.members) {
    bool closed = true;
    x.for_each([&](std::size_t u) { closed = closed && mu[u].is_subset_of(x); });
    if (!closed) throw InvariantViolation("sub-lattice is not closed under intersection");
  }
  std::vector<Subset> points(mu.begin(), mu.end());
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  std::map<Subset, std::size_t> point_of;
  for (std::size_t i = 0; i < points.size(); ++i) point_of.emplace(points[i], i);

  std::vector<std::string> labels;
  std::vector<Subset> rows(points.size(), Subset(points.size()));
  for (std::size_t i = 0; i < points.size(); ++i) {
    labels.push_back(render_set(points[i], ambient_labels));
    for (std::size_t j = 0; j < points.size(); ++j)
      if (points[j].is_subset_of(points[i])) rows[i].insert(j);
  }
  out.lattice = FinDistLattice{FinPoset::from_rows(std::move(labels), rows)};
  out.point_member = points;
  for (const auto& x : out.members) {
    Subset up(points.size());
    x.for_each([&](std::size_t u) { up.insert(point_of.at(mu[u])); });
    out.member_upset.push_back(up);
  }
  Budget cap;
  cap.max_lattice = out.members.size();
  try {
    if (out.lattice.elements(cap).size() != out.members.size())
      throw InvariantViolation("sub-lattice is not closed under union");
  } catch (const BudgetExceeded&) {
    throw InvariantViolation("sub-lattice is not closed under union");
  }
  return out;
}

LatticeHom compose(const LatticeHom& outer, const LatticeHom& inner) {
  return LatticeHom{inner.source, outer.target, compose(inner.dual, outer.dual)};
}

LatticeHom identity_hom(const FinDistLattice& a) {
  std::vector<std::size_t> id(a.spectrum.size());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
  return LatticeHom{a, a, MonotoneMap(a.spectrum, a.spectrum, std::move(id))};
}

Subset BAHom::operator()(const Subset& x) const {
  Subset out(target.atom_count());
  for (std::size_t t = 0; t < dual.size(); ++t)
    if (x.contains(dual[t])) out.insert(t);
  return out;
}

BAHom compose(const BAHom& outer, const BAHom& inner) {
  std::vector<std::size_t> d(outer.dual.size());
  for (std::size_t t = 0; t < d.size(); ++t) d[t] = inner.dual[outer.dual[t]];
  return BAHom{inner.source, outer.target, std::move(d)};
}

BAHom identity_hom(const FinBoolAlg& b) {
  std::vector<std::size_t> d(b.atom_count());
  for (std::size_t t = 0; t < d.size(); ++t) d[t] = t;
  return BAHom{b, b, std::move(d)};
}

FreeBA free_ba(std::vector<std::string> generators, const Budget& budget) {
  const std::size_t n = generators.size();
  budget.require(n <= budget.max_generators, "free Boolean algebra on " + std::to_string(n) +
                                                 " generators exceeds the generator budget of " +
                                                 std::to_string(budget.max_generators));
  const std::size_t atoms = std::size_t{1} << n;
  FreeBA out;
  out.generator_labels = std::move(generators);
  for (std::size_t v = 0; v < atoms; ++v)
    out.alg.atoms.push_back(render_set(Subset::from_mask(n, v), out.generator_labels));
  for (std::size_t g = 0; g < n; ++g) {
    Subset s(atoms);
    for (std::size_t v = 0; v < atoms; ++v)
      if ((v >> g) & 1U) s.insert(v);
    out.generators.push_back(std::move(s));
  }
  return out;
}

BAHom free_ba_map(const FreeBA& from, const FreeBA& to, std::span<const std::size_t> f) {
  const std::size_t n = from.generator_labels.size();
  if (f.size() != n) throw InvalidInput("generator map is not total");
  for (auto t : f)
    if (t >= to.generator_labels.size()) throw InvalidInput("generator map leaves its codomain");
  std::vector<std::size_t> dual(to.alg.atom_count());
  for (std::size_t v = 0; v < dual.size(); ++v) {
    std::size_t pulled = 0;
    for (std::size_t g = 0; g < n; ++g)
      if ((v >> f[g]) & 1U) pulled |= std::size_t{1} << g;
    dual[v] = pulled;
  }
  return BAHom{from.alg, to.alg, std::move(dual)};
}

Subset NbhdIso::forward(const Subset& family) const {
  const auto& b = free.alg;
  const std::size_t n = free.generators.size();
  Subset out = b.bottom();
  family.for_each([&](std::size_t a) {
    Subset minterm = b.top();
    for (std::size_t g = 0; g < n; ++g)
      minterm = b.meet(minterm, ((a >> g) & 1U) ? free.generators[g] : b.negate(free.generators[g]));
    out = b.join(out, minterm);
  });
  return out;
}

Subset NbhdIso::backward(const Subset& element) const {
  // Atom v is the valuation with v⁻¹(1) = the subset encoded by v.
  Subset family(element.universe());
  element.for_each([&](std::size_t v) { family.insert(v); });
  return family;
}

NbhdIso nbhd_iso(std::vector<std::string> points, const Budget& budget) {
  return NbhdIso{free_ba(std::move(points), budget)};
}

Subset KernelK::embed(const Subset& b) const {
  Subset out(atom_upset.empty() ? 0 : atom_upset.front().universe());
  b.for_each([&](std::size_t c) { out |= atom_upset[c]; });
  return out;
}

KernelK kernel_K(const FinDistLattice& a) {
  const auto comps = connected_components(a.spectrum);
  KernelK k;
  k.alg.atoms = comps.labels;
  k.atom_upset.assign(comps.count, Subset(a.spectrum.size()));
  for (std::size_t i = 0; i < a.spectrum.size(); ++i) k.atom_upset[comps.component_of[i]].insert(i);
  return k;
}

FreeOverDL free_over_dl(const FinDistLattice& a) {
  FinBoolAlg g{a.spectrum.labels()};
  std::vector<std::size_t> id(a.spectrum.size());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
  FinDistLattice wg = boolean_as_lattice(g);
  MonotoneMap dual(wg.spectrum, a.spectrum, std::move(id));
  return FreeOverDL{std::move(g), LatticeHom{a, std::move(wg), std::move(dual)}};
}

BAHom free_over_dl_map(const LatticeHom& h) {
  return BAHom{FinBoolAlg{h.source.spectrum.labels()}, FinBoolAlg{h.target.spectrum.labels()}, h.dual.assignment};
}

Tensor2 tensor2(const FinDistLattice& a) {
  Cotensor cot = cotensor2(a.spectrum);
  FinDistLattice doubled = up_algebra(cot.pairs);
  LatticeHom in1{a, doubled, cot.pi0};
  LatticeHom in2{a, doubled, cot.pi1};
  LatticeHom retraction{doubled, a, cot.diagonal};
  return Tensor2{std::move(doubled), std::move(cot), std::move(in1), std::move(in2), std::move(retraction)};
}

SubLattice dl_inserter(const LatticeHom& f, const LatticeHom& g, const Budget& budget) {
  if (!(f.source.spectrum == g.source.spectrum) || !(f.target.spectrum == g.target.spectrum))
    throw InvalidInput("inserter of homomorphisms with different source or target");
  std::vector<Subset> members;
  for (const auto& b : f.source.elements(budget))
    if (f(b).is_subset_of(g(b))) members.push_back(b);
  return sublattice(std::move(members), f.source.spectrum.size(), f.source.spectrum.labels());
}

SwapCheck reflexive_pair_swap_check(const PairAlgebra& pair) {
  const auto& b = pair.base;
  std::set<std::pair<Subset, Subset>> elems(pair.elements.begin(), pair.elements.end());
  for (const auto& x : b.elements())
    if (!elems.count({x, x})) throw InvalidInput("pair algebra does not contain the diagonal");

  using Pair = std::pair<Subset, Subset>;
  auto meet = [&](const Pair& u, const Pair& v) { return Pair{b.meet(u.first, v.first), b.meet(u.second, v.second)}; };
  auto join = [&](const Pair& u, const Pair& v) { return Pair{b.join(u.first, v.first), b.join(u.second, v.second)}; };
  auto implies = [&](const Pair& u, const Pair& v) {
    return Pair{b.implies(u.first, v.first), b.implies(u.second, v.second)};
  };

  SwapCheck out{true, true, std::nullopt};
  for (const auto& [x, y] : pair.elements) {
    const Pair ab{x, y}, aa{x, x}, bb{y, y};
    const Pair phi = meet(meet(implies(meet(ab, bb), aa), implies(meet(ab, aa), bb)), join(join(aa, ab), bb));
    const bool swapped_in = elems.count({y, x}) > 0;
    const bool phi_ok = elems.count(phi) > 0 && phi == Pair{y, x};
    if (!swapped_in) out.symmetric = false;
    if (!phi_ok) out.witness_ok = false;
    if ((!swapped_in || !phi_ok) && !out.failure) out.failure = ab;
  }
  return out;
}

}  // namespace pcl
