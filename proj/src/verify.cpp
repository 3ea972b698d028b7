#include "pcl/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "pcl/alg.hpp"
#include "pcl/enumerate.hpp"
#include "pcl/formula.hpp"
#include "pcl/functors.hpp"
#include "pcl/kernels.hpp"
#include "pcl/posetify.hpp"
#include "pcl/positivize.hpp"
#include "pcl/semantics.hpp"

namespace pcl {

namespace {

/// Collects checks; a property either holds everywhere or keeps its first
/// counterexample.
class Recorder {
 public:
  Recorder(std::vector<Check>& out, std::string suite) : out_(out), suite_(std::move(suite)) {}

  void record(const std::string& tag, const std::string& description, bool ok, const std::string& detail = {}) {
    out_.push_back(Check{suite_, tag, description, ok, ok ? std::string{} : detail});
  }

  /// Runs body, which reports failures through `fail`; exceptions count as failures.
  void property(const std::string& tag, const std::string& description,
                const std::function<void(const std::function<void(const std::string&)>&)>& body) {
    std::string first;
    bool ok = true;
    auto fail = [&](const std::string& why) {
      if (ok) first = why;
      ok = false;
    };
    try {
      body(fail);
    } catch (const BudgetExceeded&) {
      throw;
    } catch (const std::exception& e) {
      fail(std::string("exception: ") + e.what());
    }
    record(tag, description, ok, first);
  }

 private:
  std::vector<Check>& out_;
  std::string suite_;
};

std::string show(const FinPoset& x) {
  std::string out = "{";
  for (std::size_t i = 0; i < x.size(); ++i) out += (i ? "," : "") + x.label(i);
  out += "}";
  for (auto [a, b] : x.covers()) out += " " + x.label(a) + "<" + x.label(b);
  return out;
}

/// All functions n -> m as value vectors.
std::vector<std::vector<std::size_t>> all_functions(std::size_t n, std::size_t m) {
  std::vector<std::vector<std::size_t>> out;
  if (m == 0 && n > 0) return out;
  std::vector<std::size_t> f(n, 0);
  while (true) {
    out.push_back(f);
    std::size_t i = 0;
    while (i < n && ++f[i] == m) f[i++] = 0;
    if (i == n) break;
  }
  return out;
}

/// All monotone maps x -> y.
std::vector<MonotoneMap> monotone_maps(const FinPoset& x, const FinPoset& y) {
  std::vector<MonotoneMap> out;
  for (auto& f : all_functions(x.size(), y.size())) {
    bool ok = true;
    for (std::size_t i = 0; ok && i < x.size(); ++i)
      for (auto j : x.strictly_above(i)) ok = ok && y.leq(f[i], f[j]);
    if (ok) out.emplace_back(x, y, std::move(f));
  }
  return out;
}

std::vector<FunctorPtr> catalogue() {
  return {make_pow(), make_poly({{"f", 2, 1}}), make_bag(3), make_nb(), make_mnb()};
}

/// Nb is only feasible generically on small order graphs.
bool generic_feasible(const SetFunctor& t, const FinPoset& x) {
  return t.kind() != FunctorKind::Nb || cotensor2(x).pairs.size() <= 4;
}

// ---------------------------------------------------------------------------

void order_suite(Recorder& r) {
  r.property("transitive-closure", "closure is transitive, extensive, idempotent, monotone; kernel matches reference",
             [&](auto fail) {
               std::vector<Preorder> rels;
               const auto labels = point_labels(3);
               for (std::uint64_t code = 0; code < 64; ++code) {
                 Preorder p(labels);
                 std::size_t bit = 0;
                 for (std::size_t i = 0; i < 3; ++i)
                   for (std::size_t j = 0; j < 3; ++j)
                     if (i != j && ((code >> bit++) & 1U)) p.relate(i, j);
                 rels.push_back(std::move(p));
               }
               std::vector<Preorder> closed;
               for (const auto& p : rels) {
                 Preorder c = transitive_closure(p);
                 auto rows = p.rows;
                 kernels::reference::close_transitively(rows);
                 if (!c.is_transitive() || !p.is_contained_in(c) || !(transitive_closure(c) == c) || rows != c.rows)
                   fail("closure misbehaves on a relation with " + std::to_string(p.pair_count()) + " pairs");
                 closed.push_back(std::move(c));
               }
               for (std::size_t a = 0; a < rels.size(); ++a)
                 for (std::size_t b = 0; b < rels.size(); ++b)
                   if (rels[a].is_contained_in(rels[b]) && !closed[a].is_contained_in(closed[b]))
                     fail("closure is not monotone");
             });
  r.property("poset-quotient", "quotient of every preorder on 3 points is a poset and the projection is monotone",
             [&](auto fail) {
               const auto labels = point_labels(3);
               for (std::uint64_t code = 0; code < 64; ++code) {
                 Preorder p(labels);
                 std::size_t bit = 0;
                 for (std::size_t i = 0; i < 3; ++i)
                   for (std::size_t j = 0; j < 3; ++j)
                     if (i != j && ((code >> bit++) & 1U)) p.relate(i, j);
                 const Preorder c = transitive_closure(p);
                 const Quotient q = poset_quotient(c);
                 for (std::size_t i = 0; i < 3; ++i)
                   for (std::size_t j = 0; j < 3; ++j)
                     if (c.related(i, j) != q.poset.leq(q.projection[i], q.projection[j]))
                       fail("projection does not reflect the preorder");
               }
             });
  r.property("cotensor", "projections are jointly injective and the diagonal is a common section", [&](auto fail) {
    for (const auto& x : posets_up_to_iso_at_most(4)) {
      const Cotensor c = cotensor2(x);
      std::set<std::pair<std::size_t, std::size_t>> seen;
      for (std::size_t k = 0; k < c.pairs.size(); ++k)
        if (!seen.emplace(c.pi0(k), c.pi1(k)).second) fail("projections identify two pairs in " + show(x));
      for (std::size_t i = 0; i < x.size(); ++i)
        if (c.pi0(c.diagonal(i)) != i || c.pi1(c.diagonal(i)) != i) fail("diagonal is not a section in " + show(x));
    }
  });
  r.property("connected-components", "one component iff the comparability graph is connected; c coequalises π0, π1",
             [&](auto fail) {
               for (const auto& x : posets_up_to_iso_at_most(4)) {
                 const Components comps = connected_components(x);
                 // Independent check: flood fill over comparabilities.
                 std::vector<bool> reached(x.size(), false);
                 std::vector<std::size_t> stack;
                 if (!x.empty()) {
                   stack.push_back(0);
                   reached[0] = true;
                 }
                 while (!stack.empty()) {
                   const std::size_t i = stack.back();
                   stack.pop_back();
                   for (std::size_t j = 0; j < x.size(); ++j)
                     if (!reached[j] && (x.leq(i, j) || x.leq(j, i))) {
                       reached[j] = true;
                       stack.push_back(j);
                     }
                 }
                 const bool connected = std::all_of(reached.begin(), reached.end(), [](bool b) { return b; });
                 if (!x.empty() && (comps.count == 1) != connected) fail("component count wrong for " + show(x));
                 const Cotensor c = cotensor2(x);
                 for (std::size_t k = 0; k < c.pairs.size(); ++k)
                   if (comps.component_of[c.pi0(k)] != comps.component_of[c.pi1(k)])
                     fail("component map does not coequalise the projections in " + show(x));
               }
             });
}

// ---------------------------------------------------------------------------

void alg_suite(Recorder& r, const Budget& budget) {
  r.property("birkhoff-round-trip", "P ≅ spectrum(Up P) and Up P ≅ dual of its own order, |P| <= 4", [&](auto fail) {
    for (const auto& x : posets_up_to_iso_at_most(4)) {
      const FinDistLattice a = up_algebra(x);
      if (!isomorphic(spectrum(a, budget), x)) fail("spectrum of Up P differs from P for " + show(x));
      const ExplicitLattice e = dualise_explicit(lattice_order(a, budget));
      if (!isomorphic(e.dual.spectrum, x)) fail("dual of the lattice order differs from P for " + show(x));
    }
  });
  r.property("free-ba-size", "|free_ba(s)| = 2^(2^|s|) for |s| <= 3", [&](auto fail) {
    for (std::size_t n = 0; n <= 3; ++n)
      if (free_ba(point_labels(n), budget).alg.elements(budget).size() != (std::size_t{1} << (std::size_t{1} << n)))
        fail("wrong size at " + std::to_string(n) + " generators");
  });
  r.property("free-ba-functoriality", "F(id) = id, F(g∘f) = F g ∘ F f, generators go to generators", [&](auto fail) {
    for (std::size_t a = 0; a <= 2; ++a)
      for (std::size_t b = 0; b <= 2; ++b)
        for (std::size_t c = 0; c <= 2; ++c) {
          const FreeBA fa = free_ba(point_labels(a), budget), fb = free_ba(point_labels(b), budget),
                       fc = free_ba(point_labels(c), budget);
          for (const auto& f : all_functions(a, b))
            for (const auto& g : all_functions(b, c)) {
              std::vector<std::size_t> gf(a);
              for (std::size_t i = 0; i < a; ++i) gf[i] = g[f[i]];
              const BAHom ff = free_ba_map(fa, fb, f), fg = free_ba_map(fb, fc, g), fgf = free_ba_map(fa, fc, gf);
              if (compose(fg, ff).dual != fgf.dual) fail("composition law fails");
              for (std::size_t i = 0; i < a; ++i)
                if (!(ff(fa.generators[i]) == fb.generators[f[i]])) fail("generator not preserved");
            }
          std::vector<std::size_t> id(a);
          for (std::size_t i = 0; i < a; ++i) id[i] = i;
          if (free_ba_map(fa, fa, id).dual != identity_hom(fa.alg).dual) fail("identity law fails");
        }
  });
  r.property("neighbourhood-free-iso", "Nb_f(x) ≅ free BA(x), bijective and natural, |x| <= 2", [&](auto fail) {
    const auto nb = make_nb();
    for (std::size_t n = 0; n <= 2; ++n) {
      const NbhdIso iso = nbhd_iso(point_labels(n), budget);
      std::set<Subset> images;
      for (const auto& fam : nb->on_obj(n)) {
        Subset family(std::size_t{1} << n);
        for (auto s : fam) family.insert(s);
        const Subset img = iso.forward(family);
        images.insert(img);
        if (!(iso.backward(img) == family)) fail("backward is not inverse to forward");
      }
      if (images.size() != nb->on_obj(n).size()) fail("forward is not injective");
      for (std::size_t m = 0; m <= 2; ++m) {
        const NbhdIso iso_m = nbhd_iso(point_labels(m), budget);
        for (const auto& f : all_functions(n, m)) {
          const BAHom ff = free_ba_map(iso.free, iso_m.free, f);
          for (const auto& fam : nb->on_obj(n)) {
            Subset family(std::size_t{1} << n), pushed(std::size_t{1} << m);
            for (auto s : fam) family.insert(s);
            for (auto s : nb->on_mor(f, m, fam)) pushed.insert(s);
            if (!(iso_m.forward(pushed) == ff(iso.forward(family)))) fail("iso is not natural");
          }
        }
      }
    }
  });
  r.property("kernel-coreflection", "K(A) is exactly the complemented elements", [&](auto fail) {
    for (const auto& x : posets_up_to_iso_at_most(4)) {
      const FinDistLattice a = up_algebra(x);
      const KernelK k = kernel_K(a);
      std::set<Subset> embedded, complemented;
      for (const auto& b : k.alg.elements(budget)) embedded.insert(k.embed(b));
      for (const auto& e : a.elements(budget))
        if (a.complement(e)) complemented.insert(e);
      if (embedded != complemented) fail("K differs from the complemented elements for " + show(x));
    }
  });
  r.property("tensor-complemented", "in1 <= in2, equal exactly on K(A), common retraction", [&](auto fail) {
    for (const auto& x : posets_up_to_iso_at_most(4)) {
      const FinDistLattice a = up_algebra(x);
      const Tensor2 t = tensor2(a);
      for (const auto& e : a.elements(budget)) {
        const Subset i1 = t.in1(e), i2 = t.in2(e);
        if (!i1.is_subset_of(i2)) fail("in1 exceeds in2 for " + show(x));
        if ((i1 == i2) != a.complement(e).has_value()) fail("in1 = in2 off the complemented elements for " + show(x));
        if (!(t.retraction(i1) == e) || !(t.retraction(i2) == e)) fail("retraction fails for " + show(x));
      }
    }
  });
  r.property("counit-collapse", "G W B ≅ B for Boolean B with <= 3 atoms", [&](auto fail) {
    for (std::size_t n = 0; n <= 3; ++n) {
      const FinBoolAlg b{point_labels(n)};
      const FreeOverDL g = free_over_dl(boolean_as_lattice(b));
      if (g.alg.atom_count() != n) fail("wrong atom count");
      std::set<Subset> images;
      for (const auto& e : boolean_as_lattice(b).elements(budget)) images.insert(g.unit(e));
      if (images.size() != (std::size_t{1} << n)) fail("unit is not bijective");
    }
  });
  r.property("inserter-presentation", "A is the inserter of W G in1, W G in2 inside W G A, |spectrum| <= 3",
             [&](auto fail) {
               for (const auto& x : posets_up_to_iso_at_most(3)) {
                 const FinDistLattice a = up_algebra(x);
                 const Tensor2 t = tensor2(a);
                 const FinDistLattice wga = boolean_as_lattice(free_over_dl(a).alg);
                 const FinDistLattice wg2 = boolean_as_lattice(free_over_dl(t.doubled).alg);
                 const MonotoneMap d1(wg2.spectrum, wga.spectrum, t.in1.dual.assignment);
                 const MonotoneMap d2(wg2.spectrum, wga.spectrum, t.in2.dual.assignment);
                 const SubLattice ins = dl_inserter(LatticeHom{wga, wg2, d1}, LatticeHom{wga, wg2, d2}, budget);
                 if (ins.members != a.elements(budget)) fail("inserter differs from A for " + show(x));
               }
             });
  r.property("reflexive-pair-symmetric", "every reflexive subalgebra of B × B is symmetric, |atoms B| <= 2",
             [&](auto fail) {
               for (std::size_t n = 1; n <= 2; ++n) {
                 const FinBoolAlg b{point_labels(n)};
                 const std::size_t m = 2 * n;  // atoms of B × B: left copies, then right copies
                 // Subalgebras of B × B are partitions of its atoms.
                 std::vector<std::size_t> block(m, 0);
                 auto rec = [&](auto&& self, std::size_t i, std::size_t used) -> void {
                   if (i == m) {
                     PairAlgebra pa{b, {}};
                     for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << used); ++pick) {
                       Subset l(n), rr(n);
                       for (std::size_t k = 0; k < m; ++k)
                         if ((pick >> block[k]) & 1U) (k < n ? l : rr).insert(k % n);
                       pa.elements.emplace_back(l, rr);
                     }
                     std::set<std::pair<Subset, Subset>> elems(pa.elements.begin(), pa.elements.end());
                     for (const auto& e : b.elements(budget))
                       if (!elems.count({e, e})) return;
                     const SwapCheck sc = reflexive_pair_swap_check(pa);
                     if (!sc.symmetric || !sc.witness_ok) fail("a reflexive subalgebra is not symmetric");
                     return;
                   }
                   for (std::size_t c = 0; c <= used; ++c) {
                     block[i] = c;
                     self(self, i + 1, std::max(used, c + 1));
                   }
                 };
                 rec(rec, 0, 0);
               }
             });
}

// ---------------------------------------------------------------------------

void functors_suite(Recorder& r, const Budget& budget) {
  for (const auto& t : catalogue()) {
    r.property("functor-laws", t->name() + ": T id = id and T(g∘f) = T g ∘ T f on sets <= 3", [&](auto fail) {
      const std::size_t cap = t->kind() == FunctorKind::Nb ? 2 : 3;
      for (std::size_t a = 0; a <= 3; ++a) {
        std::vector<std::size_t> id(a);
        for (std::size_t i = 0; i < a; ++i) id[i] = i;
        const auto ta = apply_mor(*t, id, a, a, budget);
        for (std::size_t i = 0; i < ta.size(); ++i)
          if (ta[i] != i) fail("identity law fails on " + std::to_string(a) + " points");
      }
      for (std::size_t a = 0; a <= cap; ++a)
        for (std::size_t b = 0; b <= cap; ++b)
          for (std::size_t c = 0; c <= cap; ++c)
            for (const auto& f : all_functions(a, b)) {
              const auto tf = apply_mor(*t, f, a, b, budget);
              for (const auto& g : all_functions(b, c)) {
                std::vector<std::size_t> gf(a);
                for (std::size_t i = 0; i < a; ++i) gf[i] = g[f[i]];
                const auto tg = apply_mor(*t, g, b, c, budget), tgf = apply_mor(*t, gf, a, c, budget);
                for (std::size_t i = 0; i < tf.size(); ++i)
                  if (tg[tf[i]] != tgf[i]) fail("composition law fails");
              }
            }
    });
  }
  r.property("mnb-images-upclosed", "monotone neighbourhood images are up-closed and agree with Nb on up-closed families",
             [&](auto fail) {
               const auto nb = make_nb();
               const auto mnb = make_mnb();
               for (std::size_t a = 0; a <= 3; ++a)
                 for (std::size_t b = 0; b <= 3; ++b)
                   for (const auto& f : all_functions(a, b))
                     for (const auto& fam : mnb->on_obj(a)) {
                       const Element img = mnb->on_mor(f, b, fam);
                       const std::uint64_t mask = family_mask(img);
                       for (auto s : img)
                         for (std::size_t y = 0; y < b; ++y)
                           if (!((mask >> (s | (1U << y))) & 1U)) fail("image is not up-closed");
                       if (nb->on_mor(f, b, fam) != img) fail("double inverse image differs from ↑f[A]");
                     }
             });
  r.property("bag-degree", "multiset morphisms preserve total degree", [&](auto fail) {
    const auto bag = make_bag(3);
    for (std::size_t a = 0; a <= 3; ++a)
      for (std::size_t b = 1; b <= 3; ++b)
        for (const auto& f : all_functions(a, b))
          for (const auto& e : bag->on_obj(a))
            if (bag->on_mor(f, b, e).size() != e.size()) fail("degree changed");
  });
  for (const auto& t : catalogue()) {
    r.property("lift-kernel", t->name() + ": parallel lifting kernel matches the serial reference", [&](auto fail) {
      for (const auto& x : posets_up_to_iso_at_most(3)) {
        const Cotensor c = cotensor2(x);
        const std::size_t k = c.pairs.size();
        if (t->kind() == FunctorKind::Nb && k > 4) continue;
        if (t->kind() == FunctorKind::MNb && k > 5) continue;
        const std::size_t n = x.size(), size = t->on_obj(n).size();
        std::vector<Subset> fast(size, Subset(size)), slow(size, Subset(size));
        t->lift_pairs(k, c.pi0.assignment, c.pi1.assignment, n, fast);
        t->lift_pairs_reference(k, c.pi0.assignment, c.pi1.assignment, n, slow);
        if (fast != slow) fail("kernels disagree on " + show(x));
      }
    });
  }
}

// ---------------------------------------------------------------------------

void posetify_suite(Recorder& r, const Budget& budget) {
  for (const auto& t : catalogue()) {
    r.property("posetification-oracle", t->name() + ": generic coinserter ≅ closed form, |X| <= 3", [&](auto fail) {
      for (const auto& x : posets_up_to_iso_at_most(3)) {
        if (!generic_feasible(*t, x)) continue;
        const Posetification g = posetify_generic(*t, x, budget), c = posetify_closed(*t, x, budget);
        if (auto err = check_posetification(g)) fail("generic, " + show(x) + ": " + *err);
        if (auto err = check_posetification(c)) fail("closed form, " + show(x) + ": " + *err);
        const CrossCheck cc = cross_check(g, c);
        if (!cc.ok) fail(show(x) + ": " + cc.message);
      }
    });
    r.property("discrete-identity", t->name() + ": on discrete X the result is discrete and e bijective",
               [&](auto fail) {
                 for (std::size_t n = 0; n <= 3; ++n) {
                   const Posetification p = posetify_closed(*t, FinPoset::discrete(point_labels(n)), budget);
                   if (!p.result.is_discrete() || p.result.size() != p.elements.size())
                     fail("not discrete on " + std::to_string(n) + " points");
                 }
               });
  }
  r.property("powerset-convex-closure", "Pow′(3-chain) has 7 elements; Conv idempotent and a ≡ Conv(a) on chains <= 4",
             [&](auto fail) {
               if (posetify_powerset(FinPoset::chain(point_labels(3)), budget).result.size() != 7)
                 fail("Pow′(3-chain) does not have 7 elements");
               const auto pow = make_pow();
               for (std::size_t n = 0; n <= 4; ++n) {
                 const FinPoset x = FinPoset::chain(point_labels(n));
                 const Posetification g = posetify_generic(*pow, x, budget);
                 for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
                   const Subset a = Subset::from_mask(n, m), c = convex_closure(x, a);
                   if (!(convex_closure(x, c) == c)) fail("Conv is not idempotent");
                   if (g.projection[m] != g.projection[c.mask()]) fail("a is not equivalent to Conv(a)");
                 }
               }
             });
  r.property("powerset-transitivity", "R_Pow is already transitive, |X| <= 3", [&](auto fail) {
    for (const auto& x : posets_up_to_iso_at_most(3)) {
      const LiftedRelation l = lift_relation_generic(*make_pow(), x, budget);
      if (!l.relation.is_transitive()) fail("R_Pow not transitive on " + show(x));
    }
  });
  for (const auto& t : {make_bag(3), make_poly({{"f", 2, 1}})}) {
    r.property("analytic-antisymmetry", t->name() + ": R_T is antisymmetric and the quotient is the identity",
               [&](auto fail) {
                 for (const auto& x : posets_up_to_iso_at_most(3)) {
                   const Posetification p = posetify_generic(*t, x, budget);
                   if (!p.lifted->is_antisymmetric()) fail("R_T not antisymmetric on " + show(x));
                   if (p.result.size() != p.elements.size()) fail("quotient identified elements on " + show(x));
                 }
               });
  }
  r.property("mnb-order", "{{p,q}} < {{q},{p,q}} strictly on the 2-chain; two-clause order = closure of R_MNb",
             [&](auto fail) {
               const FinPoset x = FinPoset::chain({"p", "q"});
               const Posetification c = posetify_mnb(x, budget), g = posetify_generic(*make_mnb(), x, budget);
               const ElementIndex idx(c.elements);
               const std::size_t a = idx.at({3}), b = idx.at({2, 3});
               if (!c.order->related(a, b) || c.order->related(b, a)) fail("{{p,q}} < {{q},{p,q}} does not hold strictly");
               if (!(*c.order == *g.order)) fail("two-clause order differs from the closure of R_MNb");
             });
  r.property("mnb-transitivity-probe", "search |X| <= 3 for a poset where R_MNb is not transitive", [&](auto fail) {
    (void)fail;
    std::string found;
    for (const auto& x : posets_up_to_iso_at_most(3)) {
      const LiftedRelation l = lift_relation_generic(*make_mnb(), x, budget);
      if (!l.relation.is_transitive() && found.empty()) found = show(x);
    }
    r.record("mnb-transitivity-probe", found.empty() ? "R_MNb is transitive on every poset with <= 3 elements"
                                                     : "R_MNb is not transitive on " + found,
             true);
  });
  r.property("mnb-canonical-form", "candidate canonical readings of the monotone neighbourhood classes", [&](auto) {
    for (const auto& reading : mnb_canonical_readings(FinPoset::chain({"p", "q"}), budget))
      r.record("mnb-canonical-form",
               "reading '" + reading.name + "': " + (reading.class_invariant ? "class-invariant" : "not class-invariant") +
                   ", " + (reading.separates ? "separates classes" : "does not separate classes" +
                                                                         (reading.counterexample.empty()
                                                                              ? std::string{}
                                                                              : " (" + reading.counterexample + ")")),
               true);
  });
  r.property("neighbourhood-collapse", "Nb′(2-chain) is the discrete 4-element poset; |Nb′ X| = 2^(2^#components)",
             [&](auto fail) {
               const Posetification c = posetify_nb(FinPoset::chain({"p", "q"}), budget);
               if (c.result.size() != 4 || !c.result.is_discrete()) fail("Nb′(2-chain) is not discrete of size 4");
               for (const auto& x : posets_up_to_iso_at_most(4)) {
                 const std::size_t k = connected_components(x).count;
                 const Posetification p = posetify_nb(x, budget);
                 if (p.result.size() != (std::size_t{1} << (std::size_t{1} << k)) || !p.result.is_discrete())
                   fail("wrong size on " + show(x));
               }
             });
}

// ---------------------------------------------------------------------------

void positivize_suite(Recorder& r, const Budget& budget) {
  const auto dunn = make_syntax("dunn");
  const auto free = make_free_modality();
  r.property("dunn-positivication", "inserter L′A = Up(Pow′(S′A)) for |spectrum| <= 3; |L′(3-chain)| = 8",
             [&](auto fail) {
               for (const auto& x : posets_up_to_iso_at_most(3)) {
                 const FinDistLattice a = up_algebra(x);
                 const Positivication p = positivize(*dunn, a, budget);
                 if (p.result.members != expected_members_semantic(*make_pow(), a, budget))
                   fail("inserter differs from the transported closed form on " + show(x));
                 if (!isomorphic(p.result.lattice.spectrum, closed_form_dunn(a, budget).spectrum))
                   fail("not isomorphic to the closed form on " + show(x));
               }
               const Positivication c3 = positivize(*dunn, up_algebra(FinPoset::chain({"p", "q"})), budget);
               if (c3.result.members.size() != 8) fail("|L′(3-chain)| is not 8");
             });
  r.property("dunn-axioms", "□ preserves ∧,⊤; ◇ preserves ∨,⊥; interaction axioms; monotone", [&](auto fail) {
    for (const auto& x : posets_up_to_iso_at_most(3)) {
      const AxiomReport rep = dunn_axiom_check(positivize(*dunn, up_algebra(x), budget));
      if (!rep.ok()) fail(show(x) + ": " + rep.failures.front());
    }
  });
  r.property("free-modality-positivication", "inserter L′A = W F U K A for |spectrum| <= 2; |L′(3-chain)| = 16",
             [&](auto fail) {
               for (const auto& x : posets_up_to_iso_at_most(2)) {
                 const FinDistLattice a = up_algebra(x);
                 const Positivication p = positivize(*free, a, budget);
                 if (p.result.members != expected_members_free(a, budget))
                   fail("inserter differs from the transported closed form on " + show(x));
                 if (!isomorphic(p.result.lattice.spectrum, closed_form_free(a, budget).spectrum))
                   fail("not isomorphic to the closed form on " + show(x));
               }
             });
  r.property("free-modality-side-condition", "□ of the middle of the 3-chain is not in L′; □⊥, □⊤ are", [&](auto fail) {
    const FinDistLattice a = up_algebra(FinPoset::chain({"p", "q"}));
    const Positivication p = positivize(*free, a, budget);
    const auto elems = a.elements(budget);
    for (std::size_t i = 0; i < elems.size(); ++i) {
      const bool member = p.result.index_of((*p.box)[i]).has_value();
      const bool complemented = a.complement(elems[i]).has_value();
      if (member != complemented) fail("membership of □" + a.render(elems[i]) + " is wrong");
    }
  });
  r.property("beta-boolean", "L′(W B) ≅ W(L B) for both syntaxes, B with <= 2 atoms", [&](auto fail) {
    for (const auto& l : {dunn, free})
      for (std::size_t n = 0; n <= 2; ++n) {
        const Beta b = beta(*l, FinBoolAlg{point_labels(n)}, budget);
        if (!b.bijective || !b.round_trip) fail(l->name() + " on " + std::to_string(n) + " atoms");
      }
  });
  r.property("positivication-morphisms", "L′ by restriction: well defined, preserves identities and composition",
             [&](auto fail) {
               const auto spectra = posets_up_to_iso_at_most(2);
               for (const auto& l : {dunn, free})
                 for (const auto& px : spectra)
                   for (const auto& py : spectra)
                     for (const auto& pz : spectra) {
                       const FinDistLattice ax = up_algebra(px), ay = up_algebra(py), az = up_algebra(pz);
                       const Positivication lx = positivize(*l, ax, budget), ly = positivize(*l, ay, budget),
                                            lz = positivize(*l, az, budget);
                       const auto id = positivize_mor(*l, identity_hom(ax), lx, lx, budget);
                       for (std::size_t i = 0; i < id.size(); ++i)
                         if (id[i] != i) fail(l->name() + ": identity not preserved");
                       // h: ax -> ay is dual to a monotone map py -> px.
                       for (const auto& dh : monotone_maps(py, px))
                         for (const auto& dk : monotone_maps(pz, py)) {
                           const LatticeHom h{ax, ay, dh}, k{ay, az, dk};
                           const auto lh = positivize_mor(*l, h, lx, ly, budget);
                           const auto lk = positivize_mor(*l, k, ly, lz, budget);
                           const auto lkh = positivize_mor(*l, compose(k, h), lx, lz, budget);
                           for (std::size_t i = 0; i < lh.size(); ++i)
                             if (lk[lh[i]] != lkh[i]) fail(l->name() + ": composition not preserved");
                         }
                     }
             });
  r.property("semantic-closed-form", "semantic:mnb and semantic:nb inserters equal Up(T′(S′A)), |spectrum| <= 2",
             [&](auto fail) {
               for (const auto& t : {make_mnb(), make_nb()})
                 for (const auto& x : posets_up_to_iso_at_most(2)) {
                   const FinDistLattice a = up_algebra(x);
                   const Positivication p = positivize(*make_semantic(t), a, budget);
                   if (p.result.members != expected_members_semantic(*t, a, budget))
                     fail(t->name() + " differs on " + show(x));
                 }
             });
}

// ---------------------------------------------------------------------------

void semantics_suite(Recorder& r, const Budget& budget) {
  r.property("delta-injectivity", "δ for normal modal logic is injective at every set with <= 3 points", [&](auto fail) {
    for (std::size_t n = 0; n <= 3; ++n) {
      const InjectivityReport rep = injectivity_check(delta_pow(point_labels(n), budget), budget);
      if (!rep.injective) fail(std::to_string(n) + " points: " + rep.counterexample->first + " vs " + rep.counterexample->second);
    }
  });
  r.property("weak-completeness-transfer", "δ′ is saturated and injective at every poset with <= 3 elements",
             [&](auto fail) {
               for (const auto& x : posets_up_to_iso_at_most(3)) {
                 const InjectivityReport rep = injectivity_check(delta_prime(make_pow(), x, budget));
                 if (!rep.injective) fail(show(x) + ": " + rep.counterexample->first + " vs " + rep.counterexample->second);
               }
             });
  r.property("semantics-coherence",
             "direct and δ′ semantics agree, results are upsets, boolean = positive on discrete carriers",
             [&](auto fail) {
               const auto formulas = positive_formulas({"p", "q"}, 3);
               FormulaDag dag;
               for (const auto& f : formulas) dag.add(*f);
               std::vector<Subset> direct, via, boolean;
               for (const auto& x : posets_up_to_iso_at_most(3)) {
                 const DeltaPrime d = delta_prime(make_pow(), x, budget);
                 const auto ups = up_algebra(x).elements(budget);
                 for (const auto& g : monotone_coalgebras(x, budget))
                   for (const auto& u : ups)
                     for (const auto& w : ups) {
                       const Valuation v{{"p", u}, {"q", w}};
                       evaluate(dag, g, v, Mode::Positive, direct);
                       evaluate_via_delta_prime(dag, g, v, d, via);
                       if (direct != via) fail("direct and δ′ semantics differ on " + show(x));
                       for (const auto& s : direct)
                         if (!x.is_upset(s)) fail("a satisfaction set is not an upset on " + show(x));
                       if (x.is_discrete()) {
                         evaluate(dag, g, v, Mode::Boolean, boolean);
                         if (boolean != direct) fail("boolean and positive semantics differ on " + show(x));
                       }
                     }
               }
             });
}

}  // namespace

std::vector<std::string> suite_names() { return {"order", "alg", "functors", "posetify", "positivize", "semantics"}; }

std::vector<Check> run_suite(const std::string& suite, const Budget& budget) {
  std::vector<Check> out;
  if (suite == "all") {
    for (const auto& s : suite_names()) {
      auto part = run_suite(s, budget);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  Recorder r(out, suite);
  if (suite == "order") order_suite(r);
  else if (suite == "alg") alg_suite(r, budget);
  else if (suite == "functors") functors_suite(r, budget);
  else if (suite == "posetify") posetify_suite(r, budget);
  else if (suite == "positivize") positivize_suite(r, budget);
  else if (suite == "semantics") semantics_suite(r, budget);
  else throw InvalidInput("unknown suite '" + suite + "' (expected all, order, alg, functors, posetify, positivize or semantics)");
  return out;
}

}  // namespace pcl
