// Acceptance run: one PASS/FAIL line per criterion. Expected values come
// from brute-force computations in this file and tests/oracles.hpp, not from
// the library's own closed forms.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "pcl/enumerate.hpp"
#include "pcl/formula.hpp"
#include "pcl/posetify.hpp"
#include "pcl/positivize.hpp"
#include "pcl/semantics.hpp"

using namespace pcl;
using oracle::Mask;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& why) {
    if (!cond && ok) {
      ok = false;
      detail = why;
    }
  }
};

std::string show(const FinPoset& x) {
  std::ostringstream out;
  out << x.size() << " points";
  for (auto [a, b] : x.covers()) out << ' ' << x.label(a) << '<' << x.label(b);
  return out.str();
}

Mask convex_hull(const FinPoset& x, Mask a) {
  Mask out = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j)
      for (std::size_t k = 0; k < x.size(); ++k)
        if (oracle::in(a, i) && oracle::in(a, k) && x.leq(i, j) && x.leq(j, k)) out |= Mask{1} << j;
  return out;
}

/// Convex subsets of x under the Egli-Milner order.
FinPoset convex_powerset(const FinPoset& x) {
  std::vector<Mask> convex;
  for (Mask a = 0; a < (Mask{1} << x.size()); ++a)
    if (oracle::is_convex(x, a)) convex.push_back(a);
  std::vector<std::string> labels;
  std::vector<Subset> rows(convex.size(), Subset(convex.size()));
  for (std::size_t i = 0; i < convex.size(); ++i) {
    labels.push_back(std::to_string(convex[i]));
    for (std::size_t j = 0; j < convex.size(); ++j)
      if (oracle::egli_milner(x, convex[i], convex[j])) rows[i].insert(j);
  }
  return FinPoset::from_rows(labels, rows);
}

/// The map class(generic) -> class(closed) through the shared elements is a
/// well-defined order isomorphism.
std::optional<std::string> commuting_iso(const Posetification& g, const Posetification& c) {
  if (g.elements != c.elements) return "element lists differ";
  const std::size_t n = g.result.size();
  if (n != c.result.size()) return "sizes differ: " + std::to_string(n) + " vs " + std::to_string(c.result.size());
  std::vector<std::optional<std::size_t>> phi(n);
  for (std::size_t i = 0; i < g.elements.size(); ++i) {
    auto& slot = phi[g.projection[i]];
    if (slot && *slot != c.projection[i]) return "a generic class meets two closed classes";
    slot = c.projection[i];
  }
  std::vector<bool> hit(n, false);
  for (const auto& v : phi) {
    if (!v || hit[*v]) return "class map is not a bijection";
    hit[*v] = true;
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (g.result.leq(a, b) != c.result.leq(*phi[a], *phi[b])) return "class map does not preserve and reflect order";
  return std::nullopt;
}

// ---------------------------------------------------------------------------

Outcome criterion1() {
  Outcome r;
  std::size_t runs = 0;
  for (const auto& t : {make_pow(), make_bag(3), make_mnb(), make_nb(), make_poly({{"f", 2, 1}})}) {
    for (const auto& x : posets_up_to_iso_at_most(3)) {
      if (t->kind() == FunctorKind::Nb && x.relation_size() > 3) continue;
      const Posetification g = posetify_generic(*t, x), c = posetify_closed(*t, x);
      const auto err = commuting_iso(g, c);
      r.require(!err, t->name() + " on " + show(x) + ": " + err.value_or(""));
      ++runs;
    }
  }
  r.require(runs == 5 * 9 - 4, "unexpected number of cases");
  if (r.ok) r.detail = std::to_string(runs) + " (functor, poset) cases";
  return r;
}

Outcome criterion2() {
  Outcome r;
  const FinPoset c3 = FinPoset::chain(point_labels(3));
  const Posetification p = posetify_powerset(c3);
  r.require(p.result.size() == 7, "Pow′(3-chain) has " + std::to_string(p.result.size()) + " elements");
  r.require(isomorphic(p.result, convex_powerset(c3)), "Pow′(3-chain) is not the Egli-Milner order on convex sets");
  for (std::size_t c = 0; c < p.result.size(); ++c)
    r.require(oracle::is_convex(c3, p.elements[p.representative[c]][0]), "a representative is not convex");
  for (std::size_t n = 0; n <= 4; ++n) {
    const FinPoset x = FinPoset::chain(point_labels(n));
    const Posetification g = posetify_generic(*make_pow(), x);
    for (Mask a = 0; a < (Mask{1} << n); ++a) {
      const Mask conv = convex_hull(x, a);
      r.require(convex_closure(x, Subset::from_mask(n, a)).mask() == conv, "convex_closure differs from the hull");
      r.require(convex_hull(x, conv) == conv, "Conv is not idempotent");
      r.require(oracle::egli_milner(x, a, conv) && oracle::egli_milner(x, conv, a), "a and Conv(a) not EM-equivalent");
      r.require(g.projection[a] == g.projection[conv], "a and Conv(a) fall in different classes");
    }
  }
  if (r.ok) r.detail = "7 convex sets; hull checks on chains of 0..4 points";
  return r;
}

Outcome criterion3() {
  Outcome r;
  const auto bag = make_bag(3);
  for (const auto& x : posets_up_to_iso_at_most(3)) {
    const LiftedRelation l = lift_relation_generic(*bag, x);
    for (std::size_t i = 0; i < l.relation.size(); ++i)
      for (std::size_t j = 0; j < l.relation.size(); ++j)
        r.require(i == j || !(l.relation.related(i, j) && l.relation.related(j, i)), "R_T not antisymmetric on " + show(x));
    const Posetification g = posetify_generic(*bag, x);
    r.require(g.result.size() == g.elements.size(), "quotient identified elements on " + show(x));
    for (std::size_t i = 0; i < g.elements.size(); ++i) r.require(g.projection[i] == i, "quotient is not the identity");
  }
  if (r.ok) r.detail = "9 posets";
  return r;
}

Outcome criterion4() {
  Outcome r;
  const FinPoset x = FinPoset::chain({"p", "q"});
  const Posetification g = posetify_generic(*make_mnb(), x);
  const ElementIndex idx(g.elements);
  const std::size_t a = g.projection[idx.at(family_element(Mask{1} << 3))];                        // {{p,q}}
  const std::size_t b = g.projection[idx.at(family_element((Mask{1} << 2) | (Mask{1} << 3)))];  // {{q},{p,q}}
  r.require(g.result.leq(a, b) && !g.result.leq(b, a), "{{p,q}} < {{q},{p,q}} does not hold strictly");
  const Posetification c = posetify_mnb(x);
  for (std::size_t i = 0; i < g.elements.size(); ++i)
    for (std::size_t j = 0; j < g.elements.size(); ++j) {
      const bool two_clause = oracle::mnb_leq(x, family_mask(g.elements[i]), family_mask(g.elements[j]));
      r.require(two_clause == g.result.leq(g.projection[i], g.projection[j]),
                "two-clause order differs from the closure of the lifted relation");
      r.require(two_clause == c.result.leq(c.projection[i], c.projection[j]), "closed form differs from the two-clause order");
    }
  if (r.ok) r.detail = std::to_string(g.elements.size()) + " families, " + std::to_string(g.result.size()) + " classes";
  return r;
}

Outcome criterion5() {
  Outcome r;
  const FinPoset c2 = FinPoset::chain({"p", "q"});
  for (const auto& p : {posetify_nb(c2), posetify_generic(*make_nb(), c2)})
    r.require(p.result.size() == 4 && p.result.is_discrete(), "Nb′(2-chain) is not the discrete 4-element poset");
  std::size_t count = 0;
  for (std::size_t n = 0; n <= 4; ++n)
    for (const auto& x : posets_up_to_iso(n)) {
      const Posetification p = posetify_nb(x);
      const std::size_t expected = std::size_t{1} << (std::size_t{1} << oracle::component_count(x));
      r.require(p.result.size() == expected && p.result.is_discrete(), "wrong Nb′ on " + show(x));
      ++count;
    }
  if (r.ok) r.detail = std::to_string(count) + " posets";
  return r;
}

/// Dunn's axioms read directly off the box and diamond tables.
void check_dunn_axioms(const Positivication& p, Outcome& r, const std::string& where) {
  const auto elems = p.source.elements();
  auto index = [&](const Subset& s) {
    for (std::size_t i = 0; i < elems.size(); ++i)
      if (elems[i] == s) return i;
    return elems.size();
  };
  const auto& bx = *p.box;
  const auto& dm = *p.diamond;
  const Subset top = Subset::full(p.envelope.atom_count()), bottom(p.envelope.atom_count());
  r.require(bx[index(p.source.top())] == top, "□⊤ ≠ ⊤ on " + where);
  r.require(dm[index(p.source.bottom())] == bottom, "◇⊥ ≠ ⊥ on " + where);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    r.require(p.result.index_of(bx[i]).has_value() && p.result.index_of(dm[i]).has_value(),
              "a modal generator is outside L′A on " + where);
    for (std::size_t j = 0; j < elems.size(); ++j) {
      const std::size_t meet = index(elems[i] & elems[j]), join = index(elems[i] | elems[j]);
      r.require(bx[meet] == (bx[i] & bx[j]), "□ does not preserve ∧ on " + where);
      r.require(dm[join] == (dm[i] | dm[j]), "◇ does not preserve ∨ on " + where);
      r.require((bx[i] & dm[j]).is_subset_of(dm[meet]), "□x ∧ ◇y ≰ ◇(x∧y) on " + where);
      r.require(bx[join].is_subset_of(bx[i] | dm[j]), "□(x∨y) ≰ □x ∨ ◇y on " + where);
    }
  }
}

Outcome criterion6() {
  Outcome r;
  const auto dunn = make_syntax("dunn");
  for (const auto& x : posets_up_to_iso_at_most(3)) {
    const Positivication p = positivize(*dunn, up_algebra(x));
    const FinPoset pow_prime = convex_powerset(x);
    r.require(p.result.members.size() == oracle::count_upsets(pow_prime), "size differs from |Up(Pow′(S′A))| on " + show(x));
    r.require(isomorphic(p.result.lattice.spectrum, pow_prime), "spectrum of L′A is not Pow′(S′A) on " + show(x));
    check_dunn_axioms(p, r, show(x));
  }
  const std::size_t c3 = positivize(*dunn, up_algebra(FinPoset::chain({"p", "q"}))).result.members.size();
  r.require(c3 == 8, "|L′(3-chain)| = " + std::to_string(c3));
  if (r.ok) r.detail = "9 spectra; |L′(3-chain)| = 8";
  return r;
}

Outcome criterion7() {
  Outcome r;
  const FinDistLattice a = up_algebra(FinPoset::chain({"p", "q"}));
  const Positivication p = positivize(*make_free_modality(), a);
  // K(3-chain): the complemented elements, here ⊥ and ⊤.
  std::size_t complemented = 0;
  for (Mask u = 0; u < 4; ++u) {
    const Mask rest = 3 & ~u;
    if (oracle::is_upset(a.spectrum, u) && oracle::is_upset(a.spectrum, rest)) ++complemented;
  }
  // Free BA on `complemented` generators: 2^(2^complemented) elements.
  const std::size_t expected = std::size_t{1} << (std::size_t{1} << complemented);
  r.require(complemented == 2, "K(3-chain) does not have 2 elements");
  r.require(p.result.members.size() == expected, "|L′(3-chain)| = " + std::to_string(p.result.members.size()));
  r.require(p.result.lattice.spectrum.is_discrete(), "L′(3-chain) is not Boolean");
  r.require(p.envelope.atom_count() == 16, "sweep is not over 2^16 candidates");
  const auto elems = a.elements();
  for (std::size_t i = 0; i < elems.size(); ++i) {
    const bool member = p.result.index_of((*p.box)[i]).has_value();
    const bool is_middle = elems[i] == Subset(2, {1});
    r.require(member != is_middle, is_middle ? "□ of the middle element is a member" : "□⊥ or □⊤ is not a member");
  }
  if (r.ok) r.detail = "16 members of 2^16 candidates; □{q} excluded";
  return r;
}

Outcome criterion8() {
  Outcome r;
  for (const char* name : {"dunn", "free"}) {
    const auto l = make_syntax(name);
    for (std::size_t n = 0; n <= 2; ++n) {
      const FinBoolAlg b{point_labels(n)};
      const Beta bt = beta(*l, b);
      r.require(bt.bijective && bt.round_trip, std::string(name) + ": β not an isomorphism at " + std::to_string(n) + " atoms");
      const std::size_t lb_size = std::size_t{1} << l->on_obj(b, {}).atom_count();
      r.require(positivize(*l, boolean_as_lattice(b)).result.members.size() == lb_size,
                std::string(name) + ": |L′(W B)| ≠ |L B| at " + std::to_string(n) + " atoms");
    }
  }
  if (r.ok) r.detail = "2 syntaxes x 3 algebras";
  return r;
}

Outcome criterion9() {
  Outcome r;
  for (std::size_t n = 0; n <= 3; ++n) {
    const DeltaPow d = delta_pow(point_labels(n));
    std::set<Subset> images;
    const auto domain = d.domain.elements();
    for (const auto& e : domain) images.insert(d.apply(e));
    r.require(images.size() == domain.size(), "δ not injective at " + std::to_string(n) + " points");
    for (Mask u = 0; u < (Mask{1} << n); ++u) {
      const Subset img = d.apply(d.generator(u));
      for (Mask v = 0; v < (Mask{1} << n); ++v)
        r.require(img.contains(v) == ((u & v) != 0), "δ(◇U) is not {V | V ∩ U ≠ ∅}");
    }
  }
  std::size_t posets = 0;
  for (const auto& x : posets_up_to_iso_at_most(3)) {
    try {
      const DeltaPrime d = delta_prime(make_pow(), x);
      std::set<Subset> images(d.table.begin(), d.table.end());
      r.require(images.size() == d.table.size(), "δ′ not injective on " + show(x));
      for (const auto& img : d.table) {
        Mask m = 0;
        img.for_each([&](std::size_t i) { m |= Mask{1} << i; });
        r.require(oracle::is_upset(d.posetified.result, m), "a δ′ image is not an upset on " + show(x));
      }
    } catch (const InvariantViolation& e) {
      r.require(false, std::string("saturation assertion fired: ") + e.what());
    }
    ++posets;
  }
  if (r.ok) r.detail = "δ at 0..3 points; δ′ at " + std::to_string(posets) + " posets";
  return r;
}

/// Every Pow′-coalgebra on x: convex successor sets, Egli-Milner monotone.
std::vector<std::vector<Mask>> coalgebras(const FinPoset& x) {
  std::vector<Mask> convex;
  for (Mask a = 0; a < (Mask{1} << x.size()); ++a)
    if (oracle::is_convex(x, a)) convex.push_back(a);
  std::vector<std::vector<Mask>> out;
  std::vector<Mask> gamma(x.size());
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == x.size()) {
      out.push_back(gamma);
      return;
    }
    for (Mask c : convex) {
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) {
        if (x.leq(j, i)) ok = oracle::egli_milner(x, gamma[j], c);
        if (ok && x.leq(i, j)) ok = oracle::egli_milner(x, c, gamma[j]);
      }
      if (!ok) continue;
      gamma[i] = c;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

/// Mask evaluator over the distinct subformula objects, in dependency order.
struct Evaluator {
  struct Node {
    Op op;
    int var = -1;
    std::size_t left = 0, right = 0;
  };
  std::vector<Node> nodes;
  std::map<const Formula*, std::size_t> index;

  std::size_t add(const Formula& f) {
    if (auto it = index.find(&f); it != index.end()) return it->second;
    Node n{f.op};
    if (f.left) n.left = add(*f.left);
    if (f.right) n.right = add(*f.right);
    if (f.op == Op::Var) n.var = f.var == "p" ? 0 : 1;
    nodes.push_back(n);
    return index[&f] = nodes.size() - 1;
  }

  void run(const std::vector<Mask>& gamma, Mask p, Mask q, std::vector<Mask>& out) const {
    const std::size_t n = gamma.size();
    const Mask all = (Mask{1} << n) - 1;
    out.resize(nodes.size());
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      const Node& nd = nodes[k];
      switch (nd.op) {
        case Op::Var: out[k] = nd.var == 0 ? p : q; break;
        case Op::Top: out[k] = all; break;
        case Op::Bot: out[k] = 0; break;
        case Op::And: out[k] = out[nd.left] & out[nd.right]; break;
        case Op::Or: out[k] = out[nd.left] | out[nd.right]; break;
        case Op::Not: out[k] = all & ~out[nd.left]; break;
        case Op::Box:
        case Op::Dia: {
          Mask m = 0;
          for (std::size_t x = 0; x < n; ++x) {
            const bool holds = nd.op == Op::Box ? (gamma[x] & ~out[nd.left]) == 0 : (gamma[x] & out[nd.left]) != 0;
            if (holds) m |= Mask{1} << x;
          }
          out[k] = m;
        }
      }
    }
  }
};

Outcome criterion10() {
  Outcome r;
  const auto formulas = positive_formulas({"p", "q"}, 3);
  FormulaDag dag;
  Evaluator ev;
  std::vector<std::size_t> dag_node, ev_node;
  for (const auto& f : formulas) {
    r.require(depth(*f) <= 3 && is_positive(*f), "formula enumeration out of range");
    dag_node.push_back(dag.add(*f));
    ev_node.push_back(ev.add(*f));
  }
  std::size_t models = 0;
  std::vector<Subset> direct, via, boolean;
  std::vector<Mask> expected;
  for (const auto& x : posets_up_to_iso_at_most(3)) {
    const auto gammas = coalgebras(x);
    r.require(gammas.size() == monotone_coalgebras(x).size(), "coalgebra enumeration differs on " + show(x));
    const DeltaPrime d = delta_prime(make_pow(), x);
    std::vector<Mask> ups;
    for (Mask u = 0; u < (Mask{1} << x.size()); ++u)
      if (oracle::is_upset(x, u)) ups.push_back(u);
    for (const auto& gm : gammas) {
      KripkeCoalgebra g{x, {}};
      for (Mask m : gm) g.successors.push_back(Subset::from_mask(x.size(), m));
      for (Mask p : ups)
        for (Mask q : ups) {
          ++models;
          const Valuation v{{"p", Subset::from_mask(x.size(), p)}, {"q", Subset::from_mask(x.size(), q)}};
          ev.run(gm, p, q, expected);
          evaluate(dag, g, v, Mode::Positive, direct);
          evaluate_via_delta_prime(dag, g, v, d, via);
          if (x.is_discrete()) evaluate(dag, g, v, Mode::Boolean, boolean);
          for (std::size_t i = 0; i < formulas.size(); ++i) {
            const Mask want = expected[ev_node[i]];
            const Subset& got = direct[dag_node[i]];
            if (got.mask() != want || via[dag_node[i]].mask() != want || !oracle::is_upset(x, want) ||
                (x.is_discrete() && boolean[dag_node[i]].mask() != want)) {
              r.require(got.mask() == want, "direct semantics wrong for " + to_string(*formulas[i]) + " on " + show(x));
              r.require(via[dag_node[i]].mask() == want, "δ′ semantics differs for " + to_string(*formulas[i]) + " on " + show(x));
              r.require(oracle::is_upset(x, want), "non-upset extension of " + to_string(*formulas[i]) + " on " + show(x));
              r.require(!x.is_discrete() || boolean[dag_node[i]].mask() == want,
                        "boolean and positive differ for " + to_string(*formulas[i]));
            }
          }
        }
    }
  }
  if (r.ok)
    r.detail = std::to_string(models) + " models x " + std::to_string(formulas.size()) + " formulas";
  return r;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"posetification oracle equivalence", criterion1},
      {"powerset closed form", criterion2},
      {"analytic antisymmetry", criterion3},
      {"monotone neighbourhood order", criterion4},
      {"neighbourhood collapse", criterion5},
      {"positivication of normal modal logic", criterion6},
      {"positivication of the free modality", criterion7},
      {"beta on Boolean algebras", criterion8},
      {"completeness transfer", criterion9},
      {"semantics coherence", criterion10},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (o.ok ? "PASS " : "FAIL ") << i + 1 << ' ' << criteria[i].first << " [" << timing << "] "
              << o.detail << std::endl;
    failed += o.ok ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
