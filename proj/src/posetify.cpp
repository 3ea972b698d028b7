#include "pcl/posetify.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace pcl {

namespace {

std::vector<std::string> render_all(const SetFunctor& t, const std::vector<Element>& elems, const FinPoset& x) {
  std::vector<std::string> out;
  out.reserve(elems.size());
  for (const auto& e : elems) out.push_back(t.render(e, x.labels()));
  return out;
}

Posetification from_quotient(std::vector<Element> elems, const Preorder& order) {
  Quotient q = poset_quotient(order);
  Posetification p;
  p.result = std::move(q.poset);
  p.elements = std::move(elems);
  p.projection = std::move(q.projection);
  p.representative = std::move(q.representative);
  p.order = order;
  return p;
}

}  // namespace

Subset convex_closure(const FinPoset& x, const Subset& a) { return x.up_closure(a) & x.down_closure(a); }

Posetification posetify_generic(const SetFunctor& t, const FinPoset& x, const Budget& budget) {
  LiftedRelation lifted = lift_relation_generic(t, x, budget);
  Preorder closed = transitive_closure(lifted.relation);
  Posetification p = from_quotient(std::move(lifted.elements), closed);
  p.lifted = std::move(lifted.relation);
  return p;
}

Posetification posetify_powerset(const FinPoset& x, const Budget& budget) {
  const std::size_t n = x.size();
  const auto pow = make_pow();
  budget.require(pow->size_estimate(n) <= budget.max_enum, "powerset of the carrier exceeds the enumeration budget");
  Posetification p;
  p.elements = pow->on_obj(n);
  std::vector<Subset> convex;
  std::vector<Subset> conv_of;
  for (const auto& e : p.elements) {
    conv_of.push_back(convex_closure(x, Subset::from_mask(n, e[0])));
    convex.push_back(conv_of.back());
  }
  std::sort(convex.begin(), convex.end());
  convex.erase(std::unique(convex.begin(), convex.end()), convex.end());
  budget.require(convex.size() <= budget.max_relation, "convex powerset exceeds the relation budget");

  std::vector<std::string> labels;
  std::vector<Subset> rows(convex.size(), Subset(convex.size()));
  std::vector<Subset> up, down;
  for (const auto& c : convex) {
    labels.push_back(render_set(c, x.labels()));
    up.push_back(x.up_closure(c));
    down.push_back(x.down_closure(c));
  }
  // Egli-Milner: every point of a lies below some point of b and every
  // point of b lies above some point of a.
  for (std::size_t a = 0; a < convex.size(); ++a)
    for (std::size_t b = 0; b < convex.size(); ++b)
      if (convex[a].is_subset_of(down[b]) && convex[b].is_subset_of(up[a])) rows[a].insert(b);
  p.result = FinPoset::from_rows(std::move(labels), rows);
  for (const auto& c : conv_of)
    p.projection.push_back(static_cast<std::size_t>(std::lower_bound(convex.begin(), convex.end(), c) - convex.begin()));
  for (const auto& c : convex) p.representative.push_back(c.mask());
  return p;
}

Posetification posetify_mnb(const FinPoset& x, const Budget& budget) {
  const auto mnb = make_mnb();
  budget.require(mnb->size_estimate(x.size()) <= budget.max_enum,
                 "monotone neighbourhoods of the carrier exceed the enumeration budget");
  auto order = mnb->closed_lifting(x, budget);
  return from_quotient(mnb->on_obj(x.size()), *order);
}

Posetification posetify_nb(const FinPoset& x, const Budget& budget) {
  const auto nb = make_nb();
  const std::size_t n = x.size();
  budget.require(nb->size_estimate(n) <= budget.max_enum, "neighbourhoods of the carrier exceed the enumeration budget");
  const auto comps = connected_components(x);
  Posetification p;
  p.elements = nb->on_obj(n);
  const auto classes = nb->on_obj(comps.count);
  const ElementIndex index(classes);
  p.result = FinPoset::discrete(render_all(*nb, classes, FinPoset::discrete(comps.labels)));
  p.representative.assign(classes.size(), p.elements.size());
  for (std::size_t i = 0; i < p.elements.size(); ++i) {
    const std::size_t c = index.at(nb->on_mor(comps.component_of, comps.count, p.elements[i]));
    p.projection.push_back(c);
    p.representative[c] = std::min(p.representative[c], i);
  }
  return p;
}

Posetification posetify_analytic(const SetFunctor& t, const FinPoset& x, const Budget& budget) {
  budget.require(t.size_estimate(x.size()) <= budget.max_enum, t.name() + " of the carrier exceeds the enumeration budget");
  auto order = t.closed_lifting(x, budget);
  if (!order) throw InvalidInput(t.name() + " has no closed-form lifting");
  if (!order->is_antisymmetric() || !order->is_transitive())
    throw InvariantViolation(t.name() + ": closed lifting is not a partial order");
  Posetification p = from_quotient(t.on_obj(x.size()), *order);
  return p;
}

Posetification posetify_closed(const SetFunctor& t, const FinPoset& x, const Budget& budget) {
  switch (t.kind()) {
    case FunctorKind::Pow:
      return posetify_powerset(x, budget);
    case FunctorKind::MNb:
      return posetify_mnb(x, budget);
    case FunctorKind::Nb:
      return posetify_nb(x, budget);
    case FunctorKind::Poly:
    case FunctorKind::Bag:
      return posetify_analytic(t, x, budget);
  }
  throw InvalidInput("unknown functor kind");
}

std::optional<std::string> check_posetification(const Posetification& p) {
  if (p.projection.size() != p.elements.size()) return "projection is not total";
  std::vector<bool> hit(p.result.size(), false);
  for (auto c : p.projection) {
    if (c >= p.result.size()) return "projection leaves the result";
    hit[c] = true;
  }
  if (std::find(hit.begin(), hit.end(), false) != hit.end()) return "projection is not surjective";
  for (std::size_t c = 0; c < p.representative.size(); ++c)
    if (p.representative[c] >= p.elements.size() || p.projection[p.representative[c]] != c)
      return "representative of class " + p.result.label(c) + " lies in another class";
  if (p.order) {
    for (std::size_t a = 0; a < p.elements.size(); ++a)
      for (std::size_t b = 0; b < p.elements.size(); ++b) {
        const bool rel = p.order->related(a, b);
        if (rel != p.result.leq(p.projection[a], p.projection[b]))
          return "projection does not reflect the order at (" + p.order->labels[a] + ", " + p.order->labels[b] + ")";
      }
  }
  return std::nullopt;
}

CrossCheck cross_check(const Posetification& generic, const Posetification& closed) {
  if (generic.elements != closed.elements) return {false, "the two sides enumerate different carriers"};
  if (generic.result.size() != closed.result.size())
    return {false, "generic result has " + std::to_string(generic.result.size()) + " elements, closed form has " +
                       std::to_string(closed.result.size())};
  // The bijection is forced by e: generic class of a ↦ closed class of a.
  const std::size_t none = closed.result.size();
  std::vector<std::size_t> to_closed(generic.result.size(), none), to_generic(closed.result.size(), none);
  for (std::size_t a = 0; a < generic.elements.size(); ++a) {
    const std::size_t g = generic.projection[a], c = closed.projection[a];
    if ((to_closed[g] != none && to_closed[g] != c) || (to_generic[c] != none && to_generic[c] != g))
      return {false, "element " + generic.result.label(g) + " / " + closed.result.label(c) +
                         " is identified differently by the two sides"};
    to_closed[g] = c;
    to_generic[c] = g;
  }
  for (std::size_t g = 0; g < generic.result.size(); ++g)
    for (std::size_t h = 0; h < generic.result.size(); ++h)
      if (generic.result.leq(g, h) != closed.result.leq(to_closed[g], to_closed[h]))
        return {false, "order disagrees at (" + generic.result.label(g) + ", " + generic.result.label(h) +
                           "): generic " + (generic.result.leq(g, h) ? "<=" : "not <=") + ", closed form " +
                           (closed.result.leq(to_closed[g], to_closed[h]) ? "<=" : "not <=")};
  return {};
}

CrossCheck cross_check(const SetFunctor& t, const FinPoset& x, const Budget& budget) {
  return cross_check(posetify_generic(t, x, budget), posetify_closed(t, x, budget));
}

std::vector<CanonicalReading> mnb_canonical_readings(const FinPoset& x, const Budget& budget) {
  const std::size_t n = x.size();
  const Posetification p = posetify_mnb(x, budget);
  std::vector<Subset> upsets;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    const Subset u = Subset::from_mask(n, s);
    if (x.is_upset(u)) upsets.push_back(u);
  }
  auto closures = [&](const Element& fam) {
    std::vector<Subset> out;
    for (auto a : fam) out.push_back(x.up_closure(Subset::from_mask(n, a)));
    return out;
  };
  using Reading = std::function<std::uint64_t(const Element&)>;
  const std::vector<std::pair<std::string, Reading>> readings = {
      {"upsets below some ↑a",
       [&](const Element& fam) {
         std::uint64_t out = 0;
         const auto ups = closures(fam);
         for (const auto& u : upsets)
           for (const auto& v : ups)
             if (u.is_subset_of(v)) {
               out |= std::uint64_t{1} << u.mask();
               break;
             }
         return out;
       }},
      {"subsets below some ↑a",
       [&](const Element& fam) {
         std::uint64_t out = 0;
         const auto ups = closures(fam);
         for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s)
           for (const auto& v : ups)
             if (Subset::from_mask(n, s).is_subset_of(v)) {
               out |= std::uint64_t{1} << s;
               break;
             }
         return out;
       }},
      {"upsets belonging to A",
       [&](const Element& fam) {
         std::uint64_t out = 0;
         for (auto a : fam)
           if (x.is_upset(Subset::from_mask(n, a))) out |= std::uint64_t{1} << a;
         return out;
       }},
  };
  const auto mnb = make_mnb();
  std::vector<CanonicalReading> report;
  for (const auto& [name, reading] : readings) {
    CanonicalReading r{name, true, true, {}};
    std::map<std::uint64_t, std::size_t> class_of_value;
    std::vector<std::optional<std::uint64_t>> value_of_class(p.result.size());
    for (std::size_t i = 0; i < p.elements.size(); ++i) {
      const std::uint64_t v = reading(p.elements[i]);
      const std::size_t c = p.projection[i];
      const std::string shown = mnb->render(p.elements[i], x.labels());
      if (value_of_class[c] && *value_of_class[c] != v && r.class_invariant) {
        r.class_invariant = false;
        if (r.counterexample.empty())
          r.counterexample = shown + " and " + p.result.label(c) + " are equivalent but read differently";
      }
      value_of_class[c] = v;
      auto [it, fresh] = class_of_value.emplace(v, c);
      if (!fresh && it->second != c && r.separates) {
        r.separates = false;
        if (r.counterexample.empty())
          r.counterexample = shown + " and " + p.result.label(it->second) + " are inequivalent but read the same";
      }
    }
    report.push_back(std::move(r));
  }
  return report;
}

}  // namespace pcl
