#include "pcl/semantics.hpp"

#include <algorithm>

namespace pcl {

bool egli_milner_leq(const FinPoset& x, const Subset& a, const Subset& b) {
  return a.is_subset_of(x.down_closure(b)) && b.is_subset_of(x.up_closure(a));
}

void validate_positive(const KripkeCoalgebra& g) {
  const FinPoset& x = g.carrier;
  if (g.successors.size() != x.size()) throw InvalidInput("coalgebra structure is not total");
  for (std::size_t i = 0; i < x.size(); ++i) {
    const Subset& s = g.successors[i];
    if (s.universe() != x.size()) throw InvalidInput("successors of '" + x.label(i) + "' are not over the carrier");
    if (!(convex_closure(x, s) == s))
      throw InvalidInput("successors of '" + x.label(i) + "' are not convex: " + render_set(s, x.labels()));
  }
  for (std::size_t i = 0; i < x.size(); ++i)
    for (auto j : x.strictly_above(i))
      if (!egli_milner_leq(x, g.successors[i], g.successors[j]))
        throw InvalidInput("coalgebra is not monotone: '" + x.label(i) + "' <= '" + x.label(j) +
                           "' but their successors are not Egli-Milner ordered");
}

void validate_valuation(const FinPoset& carrier, const Valuation& v, bool upsets) {
  for (const auto& [name, s] : v) {
    if (s.universe() != carrier.size()) throw InvalidInput("valuation of '" + name + "' is not over the carrier");
    if (upsets && !carrier.is_upset(s))
      throw InvalidInput("valuation of '" + name + "' is not an upset: " + render_set(s, carrier.labels()));
  }
}

namespace {

/// Shared bottom-up walk; `modal` fills out[i] for Box/Dia nodes.
template <class Modal>
void walk(const FormulaDag& dag, std::size_t n, const Valuation& v, bool allow_not, std::vector<Subset>& out,
          Modal&& modal) {
  if (out.size() != dag.size() || (!out.empty() && out[0].universe() != n)) out.assign(dag.size(), Subset(n));
  const Subset empty(n), full = Subset::full(n);
  const auto& nodes = dag.nodes();
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const auto& node = nodes[i];
    switch (node.op) {
      case Op::Var: {
        auto it = v.find(node.var);
        if (it == v.end()) throw InvalidInput("unbound variable '" + node.var + "'");
        if (it->second.universe() != n) throw InvalidInput("valuation of '" + node.var + "' is not over the carrier");
        out[i] = it->second;
        break;
      }
      case Op::Top: out[i] = full; break;
      case Op::Bot: out[i] = empty; break;
      case Op::Not:
        if (!allow_not) throw InvalidInput("negation in a positive formula");
        out[i] = full;
        out[i] -= out[node.left];
        break;
      case Op::And:
        out[i] = out[node.left];
        out[i] &= out[node.right];
        break;
      case Op::Or:
        out[i] = out[node.left];
        out[i] |= out[node.right];
        break;
      case Op::Box:
      case Op::Dia:
        out[i] = empty;
        modal(node.op, out[node.left], out[i]);
        break;
    }
  }
}

}  // namespace

void evaluate(const FormulaDag& dag, const KripkeCoalgebra& g, const Valuation& v, Mode mode,
              std::vector<Subset>& out) {
  const std::size_t n = g.carrier.size();
  if (g.successors.size() != n) throw InvalidInput("coalgebra structure is not total");
  walk(dag, n, v, mode == Mode::Boolean, out, [&](Op op, const Subset& arg, Subset& res) {
    for (std::size_t x = 0; x < n; ++x) {
      const Subset& succ = g.successors[x];
      // A state without successors satisfies every □ and no ◇.
      if (op == Op::Dia ? succ.intersects(arg) : succ.is_subset_of(arg)) res.insert(x);
    }
  });
}

namespace {

Subset interpret(const KripkeCoalgebra& g, const Valuation& v, const Formula& f, Mode mode) {
  FormulaDag dag;
  const std::size_t root = dag.add(f);
  std::vector<Subset> out;
  evaluate(dag, g, v, mode, out);
  return out[root];
}

}  // namespace

Subset interpret_boolean(const KripkeCoalgebra& g, const Valuation& v, const Formula& f) {
  validate_valuation(g.carrier, v, false);
  return interpret(g, v, f, Mode::Boolean);
}

Subset interpret_positive(const KripkeCoalgebra& g, const Valuation& v, const Formula& f) {
  if (!is_positive(f)) throw InvalidInput("negation in a positive formula");
  validate_positive(g);
  validate_valuation(g.carrier, v, true);
  return interpret(g, v, f, Mode::Positive);
}

// ---------------------------------------------------------------------------

Subset DeltaPow::generator(std::uint64_t u) const {
  Subset out(valid.size());
  for (std::size_t i = 0; i < valid.size(); ++i)
    if ((valid[i] >> u) & 1U) out.insert(i);
  return out;
}

Subset DeltaPow::apply(const Subset& a) const {
  Subset out(dual.size());
  for (std::size_t v = 0; v < dual.size(); ++v)
    if (a.contains(dual[v])) out.insert(v);
  return out;
}

DeltaPow delta_pow(std::vector<std::string> points, const Budget& budget) {
  const std::size_t n = points.size();
  budget.require(n < 6 && (std::size_t{1} << n) <= budget.max_generators,
                 "presentation of L(Pow x) on " + std::to_string(n) + " points exceeds the generator budget");
  const std::size_t subsets = std::size_t{1} << n;
  std::vector<std::string> gens;
  for (std::size_t u = 0; u < subsets; ++u) gens.push_back("dia" + render_set(Subset::from_mask(n, u), points));
  DeltaPow d{std::move(points), free_ba(std::move(gens), budget), {}, {}, {}};

  // Atoms of the quotient: valuations of the generators respecting the equations.
  for (std::size_t v = 0; v < d.free.alg.atom_count(); ++v) {
    bool ok = !(v & 1U);
    for (std::size_t u = 0; ok && u < subsets; ++u)
      for (std::size_t w = 0; ok && w < subsets; ++w)
        ok = ((v >> (u | w)) & 1U) == (((v >> u) | (v >> w)) & 1U);
    if (ok) d.valid.push_back(v);
  }
  for (auto v : d.valid) {
    std::uint64_t reached = 0;
    for (std::size_t y = 0; y < n; ++y)
      if ((v >> (std::size_t{1} << y)) & 1U) reached |= std::uint64_t{1} << y;
    d.domain.atoms.push_back(render_set(Subset::from_mask(n, reached), d.points));
  }
  // δ is the hom dual to V ↦ (◇U ↦ [V ∩ U ≠ ∅]).
  for (std::size_t vset = 0; vset < subsets; ++vset) {
    std::size_t val = 0;
    for (std::size_t u = 0; u < subsets; ++u)
      if (vset & u) val |= std::size_t{1} << u;
    auto it = std::lower_bound(d.valid.begin(), d.valid.end(), val);
    if (it == d.valid.end() || *it != val) throw InvariantViolation("δ sends a point outside the presented algebra");
    d.dual.push_back(static_cast<std::size_t>(it - d.valid.begin()));
  }
  return d;
}

std::size_t DeltaPrime::upset_index(const Subset& u) const {
  auto it = std::lower_bound(upsets.begin(), upsets.end(), u);
  if (it == upsets.end() || !(*it == u)) throw InvalidInput("not an upset of the carrier: " + render_set(u, carrier.labels()));
  return static_cast<std::size_t>(it - upsets.begin());
}

DeltaPrime delta_prime(FunctorPtr t, const FinPoset& x, const Budget& budget) {
  const FinDistLattice a = up_algebra(x);
  DeltaPrime d{t, x, a.elements(budget), positivize(*make_semantic(t), a, budget), posetify_closed(*t, x, budget),
               {}, {}, {}};
  if (auto err = check_posetification(d.posetified)) throw InvariantViolation("posetification: " + *err);
  const auto& proj = d.posetified.projection;

  // For the powerset functor δ comes from the presentation; for the other
  // semantic functors L(Pow V x) is already Pow(T V x) and δ is the identity.
  std::optional<DeltaPow> dp;
  if (t->kind() == FunctorKind::Pow) dp = delta_pow(x.labels(), budget);

  for (const auto& member : d.positive.result.members) {
    Subset image = member;
    if (dp) {
      Subset presented(dp->valid.size());
      for (std::size_t i = 0; i < dp->valid.size(); ++i) {
        std::uint64_t reached = 0;
        for (std::size_t y = 0; y < x.size(); ++y)
          if ((dp->valid[i] >> (std::size_t{1} << y)) & 1U) reached |= std::uint64_t{1} << y;
        if (member.contains(reached)) presented.insert(i);
      }
      image = dp->apply(presented);
    }
    Subset classes(d.posetified.result.size());
    image.for_each([&](std::size_t s) { classes.insert(proj[s]); });
    Subset saturation(image.universe());
    for (std::size_t s = 0; s < proj.size(); ++s)
      if (classes.contains(proj[s])) saturation.insert(s);
    if (!(saturation == image) || !d.posetified.result.is_upset(classes))
      throw InvariantViolation("δ′: image of " + render_set(member, d.positive.envelope.atoms) +
                               " is not saturated for the lifted order");
    d.table.push_back(std::move(classes));
  }
  auto transport = [&](const std::vector<Subset>& gens, std::vector<Subset>& into) {
    for (const auto& g : gens) {
      auto idx = d.positive.result.index_of(g);
      if (!idx) throw InvariantViolation("modal generator outside the positivication");
      into.push_back(d.table[*idx]);
    }
  };
  if (d.positive.box) transport(*d.positive.box, d.box_image);
  if (d.positive.diamond) transport(*d.positive.diamond, d.dia_image);
  return d;
}

void evaluate_via_delta_prime(const FormulaDag& dag, const KripkeCoalgebra& g, const Valuation& v,
                              const DeltaPrime& d, std::vector<Subset>& out) {
  if (d.functor->kind() != FunctorKind::Pow || !(d.carrier == g.carrier))
    throw InvalidInput("δ′ was built for a different functor or carrier");
  const std::size_t n = g.carrier.size();
  if (g.successors.size() != n) throw InvalidInput("coalgebra structure is not total");
  std::vector<std::size_t> succ_class(n);
  for (std::size_t x = 0; x < n; ++x) succ_class[x] = d.posetified.projection[g.successors[x].mask()];
  walk(dag, n, v, false, out, [&](Op op, const Subset& arg, Subset& res) {
    const Subset& img = (op == Op::Box ? d.box_image : d.dia_image)[d.upset_index(arg)];
    for (std::size_t x = 0; x < n; ++x)
      if (img.contains(succ_class[x])) res.insert(x);
  });
}

Subset interpret_via_delta_prime(const KripkeCoalgebra& g, const Valuation& v, const Formula& f, const DeltaPrime& d) {
  if (!is_positive(f)) throw InvalidInput("negation in a positive formula");
  validate_positive(g);
  validate_valuation(g.carrier, v, true);
  FormulaDag dag;
  const std::size_t root = dag.add(f);
  std::vector<Subset> out;
  evaluate_via_delta_prime(dag, g, v, d, out);
  return out[root];
}

InjectivityReport injectivity_check(const DeltaPow& d, const Budget& budget) {
  InjectivityReport r;
  std::map<Subset, Subset> seen;
  for (const auto& a : d.domain.elements(budget)) {
    ++r.domain_size;
    auto [it, fresh] = seen.emplace(d.apply(a), a);
    if (!fresh && r.injective) {
      r.injective = false;
      r.counterexample = {d.domain.render(it->second), d.domain.render(a)};
    }
  }
  return r;
}

InjectivityReport injectivity_check(const DeltaPrime& d) {
  InjectivityReport r;
  std::map<Subset, std::size_t> seen;
  const auto& members = d.positive.result.members;
  for (std::size_t i = 0; i < d.table.size(); ++i) {
    ++r.domain_size;
    auto [it, fresh] = seen.emplace(d.table[i], i);
    if (!fresh && r.injective) {
      r.injective = false;
      r.counterexample = {render_set(members[it->second], d.positive.envelope.atoms),
                          render_set(members[i], d.positive.envelope.atoms)};
    }
  }
  return r;
}

std::vector<KripkeCoalgebra> monotone_coalgebras(const FinPoset& x, const Budget& budget) {
  const std::size_t n = x.size();
  const Posetification conv = posetify_powerset(x, budget);
  std::vector<Subset> convex;
  for (auto rep : conv.representative) convex.push_back(Subset::from_mask(n, rep));
  std::vector<KripkeCoalgebra> out;
  std::vector<Subset> succ(n);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      budget.require(out.size() < budget.max_enum, "monotone coalgebra enumeration exceeds the enumeration budget");
      out.push_back(KripkeCoalgebra{x, succ});
      return;
    }
    for (const auto& c : convex) {
      bool ok = true;
      for (std::size_t j = 0; ok && j < i; ++j) {
        if (x.leq(j, i)) ok = egli_milner_leq(x, succ[j], c);
        if (ok && x.leq(i, j)) ok = egli_milner_leq(x, c, succ[j]);
      }
      if (!ok) continue;
      succ[i] = c;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace pcl
