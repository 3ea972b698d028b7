#include "pcl/positivize.hpp"

#include <algorithm>
#include <map>

#include "pcl/kernels.hpp"
#include "pcl/posetify.hpp"

namespace pcl {

std::optional<Subset> BAFunctor::box(const FinBoolAlg&, const Subset&, const Budget&) const { return std::nullopt; }
std::optional<Subset> BAFunctor::diamond(const FinBoolAlg&, const Subset&, const Budget&) const { return std::nullopt; }

namespace {

class SemanticL final : public BAFunctor {
 public:
  explicit SemanticL(FunctorPtr t) : t_(std::move(t)) {}

  std::string name() const override { return "semantic:" + t_->name(); }

  FinBoolAlg on_obj(const FinBoolAlg& b, const Budget& budget) const override {
    FinBoolAlg out;
    for (const auto& e : apply_obj(*t_, b.atom_count(), budget)) out.atoms.push_back(t_->render(e, b.atoms));
    return out;
  }

  BAHom on_mor(const BAHom& h, const Budget& budget) const override {
    // L h is preimage along T(S h), and S h is the dual atom map.
    auto dual = apply_mor(*t_, h.dual, h.target.atom_count(), h.source.atom_count(), budget);
    return BAHom{on_obj(h.source, budget), on_obj(h.target, budget), std::move(dual)};
  }

  std::optional<Subset> box(const FinBoolAlg& b, const Subset& x, const Budget& budget) const override {
    return lift(b, x, budget, true);
  }
  std::optional<Subset> diamond(const FinBoolAlg& b, const Subset& x, const Budget& budget) const override {
    return lift(b, x, budget, false);
  }

 private:
  /// Predicate liftings: for powerset, c ⊆ x and c ∩ x ≠ ∅; for the
  /// neighbourhood functors, x ∈ A and (¬x) ∉ A.
  std::optional<Subset> lift(const FinBoolAlg& b, const Subset& x, const Budget& budget, bool is_box) const {
    const auto kind = t_->kind();
    if (kind != FunctorKind::Pow && kind != FunctorKind::Nb && kind != FunctorKind::MNb) return std::nullopt;
    const auto elems = apply_obj(*t_, b.atom_count(), budget);
    const auto xm = static_cast<std::uint32_t>(x.mask());
    const auto notx = static_cast<std::uint32_t>(x.complement().mask());
    Subset out(elems.size());
    for (std::size_t i = 0; i < elems.size(); ++i) {
      const auto& e = elems[i];
      bool in = false;
      if (kind == FunctorKind::Pow)
        in = is_box ? (e[0] & ~xm) == 0 : (e[0] & xm) != 0;
      else
        in = is_box ? std::binary_search(e.begin(), e.end(), xm) : !std::binary_search(e.begin(), e.end(), notx);
      if (in) out.insert(i);
    }
    return out;
  }

  FunctorPtr t_;
};

class FreeModality final : public BAFunctor {
 public:
  std::string name() const override { return "free"; }

  FinBoolAlg on_obj(const FinBoolAlg& b, const Budget& budget) const override { return free_on(b, budget).alg; }

  BAHom on_mor(const BAHom& h, const Budget& budget) const override {
    const FreeBA from = free_on(h.source, budget), to = free_on(h.target, budget);
    std::vector<std::size_t> f;
    for (const auto& x : h.source.elements(budget)) f.push_back(h(x).mask());
    return free_ba_map(from, to, f);
  }

  std::optional<Subset> box(const FinBoolAlg& b, const Subset& x, const Budget& budget) const override {
    return free_on(b, budget).generators[x.mask()];
  }

 private:
  /// Generators are the elements of b, indexed by their atom mask.
  static FreeBA free_on(const FinBoolAlg& b, const Budget& budget) {
    budget.require(b.atom_count() < 6 && (std::size_t{1} << b.atom_count()) <= budget.max_generators,
                   "free modality over a " + std::to_string(b.atom_count()) +
                       "-atom algebra exceeds the generator budget of " + std::to_string(budget.max_generators));
    std::vector<std::string> gens;
    for (const auto& x : b.elements(budget)) gens.push_back(b.render(x));
    return free_ba(std::move(gens), budget);
  }
};

std::vector<Subset> upset_preimages(const Posetification& p, const Budget& budget) {
  std::vector<Subset> out;
  for (const auto& u : up_algebra(p.result).elements(budget)) {
    Subset m(p.elements.size());
    for (std::size_t i = 0; i < p.elements.size(); ++i)
      if (u.contains(p.projection[i])) m.insert(i);
    out.push_back(std::move(m));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> element_labels(const FinBoolAlg& b, const Budget& budget) {
  std::vector<std::string> out;
  for (const auto& x : b.elements(budget)) out.push_back(b.render(x));
  return out;
}

}  // namespace

BAFunctorPtr make_semantic(FunctorPtr t) { return std::make_shared<SemanticL>(std::move(t)); }
BAFunctorPtr make_free_modality() { return std::make_shared<FreeModality>(); }

BAFunctorPtr make_syntax(const std::string& spec) {
  if (spec == "dunn") return make_semantic(make_pow());
  if (spec == "free") return make_free_modality();
  if (spec.rfind("semantic:", 0) == 0) return make_semantic(make_functor(spec.substr(9)));
  throw InvalidInput("unknown syntax '" + spec + "' (expected dunn, free or semantic:<functor>)");
}

Positivication positivize(const BAFunctor& l, const FinDistLattice& a, const Budget& budget) {
  const FreeOverDL ga = free_over_dl(a);
  const Tensor2 t2 = tensor2(a);
  const BAHom h1 = free_over_dl_map(t2.in1), h2 = free_over_dl_map(t2.in2);
  const BAHom lh1 = l.on_mor(h1, budget), lh2 = l.on_mor(h2, budget);
  const std::size_t atoms = lh1.source.atom_count();
  budget.require(atoms < 40 && (std::uint64_t{1} << atoms) <= budget.max_lattice,
                 "inserter sweep over 2^" + std::to_string(atoms) + " candidates exceeds the lattice budget");
  auto members = kernels::inserter_sweep(atoms, lh1.dual, lh2.dual);
  Positivication p{a, lh1.source, sublattice(std::move(members), atoms, lh1.source.atoms), std::nullopt, std::nullopt};

  std::vector<Subset> boxes, diamonds;
  bool has_box = true, has_diamond = true;
  for (const auto& x : a.elements(budget)) {
    const Subset gx = ga.unit(x);
    if (auto b = l.box(ga.alg, gx, budget)) boxes.push_back(*b); else has_box = false;
    if (auto d = l.diamond(ga.alg, gx, budget)) diamonds.push_back(*d); else has_diamond = false;
  }
  if (has_box) p.box = std::move(boxes);
  if (has_diamond) p.diamond = std::move(diamonds);
  return p;
}

std::vector<std::size_t> positivize_mor(const BAFunctor& l, const LatticeHom& h, const Positivication& from,
                                        const Positivication& to, const Budget& budget) {
  const BAHom lgh = l.on_mor(free_over_dl_map(h), budget);
  std::vector<std::size_t> out;
  for (const auto& m : from.result.members) {
    auto idx = to.result.index_of(lgh(m));
    if (!idx)
      throw InvariantViolation("positivication of a homomorphism leaves the target inserter at " +
                               render_set(m, from.envelope.atoms));
    out.push_back(*idx);
  }
  return out;
}

Beta beta(const BAFunctor& l, const FinBoolAlg& b, const Budget& budget) {
  const FinDistLattice wb = boolean_as_lattice(b);
  const Positivication p = positivize(l, wb, budget);
  std::vector<std::size_t> id(b.atom_count());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
  const BAHom counit{FinBoolAlg{wb.spectrum.labels()}, b, id};
  const BAHom lc = l.on_mor(counit, budget);
  Beta out{lc.target, {}, false, false};
  std::map<Subset, std::size_t> inverse;
  for (std::size_t i = 0; i < p.result.members.size(); ++i) {
    out.forward.push_back(lc(p.result.members[i]));
    inverse.emplace(out.forward.back(), i);
  }
  const auto all = out.lb.elements(budget);
  out.bijective = inverse.size() == p.result.members.size() && inverse.size() == all.size();
  out.round_trip = out.bijective;
  for (const auto& y : all) {
    auto it = inverse.find(y);
    if (it == inverse.end() || !(out.forward[it->second] == y)) out.round_trip = false;
  }
  return out;
}

FinDistLattice closed_form_dunn(const FinDistLattice& a, const Budget& budget) {
  return up_algebra(posetify_powerset(spectrum(a, budget), budget).result);
}

FinDistLattice closed_form_free(const FinDistLattice& a, const Budget& budget) {
  const KernelK k = kernel_K(a);
  return boolean_as_lattice(free_ba(element_labels(k.alg, budget), budget).alg);
}

FinDistLattice closed_form_semantic(const SetFunctor& t, const FinDistLattice& a, const Budget& budget) {
  return up_algebra(posetify_closed(t, spectrum(a, budget), budget).result);
}

std::vector<Subset> expected_members_semantic(const SetFunctor& t, const FinDistLattice& a, const Budget& budget) {
  return upset_preimages(posetify_closed(t, a.spectrum, budget), budget);
}

std::vector<Subset> expected_members_free(const FinDistLattice& a, const Budget& budget) {
  const KernelK k = kernel_K(a);
  const FinBoolAlg g{a.spectrum.labels()};
  const FreeBA fk = free_ba(element_labels(k.alg, budget), budget);
  const FreeBA fg = free_ba(element_labels(g, budget), budget);
  std::vector<std::size_t> incl;
  for (const auto& x : k.alg.elements(budget)) incl.push_back(k.embed(x).mask());
  const BAHom fi = free_ba_map(fk, fg, incl);
  std::vector<Subset> out;
  for (const auto& y : fk.alg.elements(budget)) out.push_back(fi(y));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

AxiomReport dunn_axiom_check(const Positivication& p) {
  AxiomReport r;
  if (!p.box || !p.diamond) {
    r.failures.push_back("syntax has no box/diamond pair");
    return r;
  }
  const auto elems = p.source.elements();
  std::map<Subset, std::size_t> index;
  for (std::size_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], i);
  const auto& box = *p.box;
  const auto& dia = *p.diamond;
  auto name = [&](std::size_t i) { return p.source.render(elems[i]); };
  auto expect = [&](bool ok, const std::string& what) {
    ++r.checked;
    if (!ok) r.failures.push_back(what);
  };
  const std::size_t top = index.at(p.source.top()), bot = index.at(p.source.bottom());
  const Subset lattice_top = Subset::full(p.envelope.atom_count());
  const Subset lattice_bot(p.envelope.atom_count());
  expect(box[top] == lattice_top, "box does not preserve top");
  expect(dia[bot] == lattice_bot, "diamond does not preserve bottom");
  for (std::size_t i = 0; i < elems.size(); ++i) {
    expect(p.result.index_of(box[i]).has_value(), "box " + name(i) + " is not in the positivication");
    expect(p.result.index_of(dia[i]).has_value(), "diamond " + name(i) + " is not in the positivication");
    for (std::size_t j = 0; j < elems.size(); ++j) {
      const std::size_t meet = index.at(elems[i] & elems[j]), join = index.at(elems[i] | elems[j]);
      const std::string pair = " at (" + name(i) + ", " + name(j) + ")";
      expect(box[meet] == (box[i] & box[j]), "box does not preserve meets" + pair);
      expect(dia[join] == (dia[i] | dia[j]), "diamond does not preserve joins" + pair);
      expect((box[i] & dia[j]).is_subset_of(dia[meet]), "box x and diamond y exceeds diamond (x and y)" + pair);
      expect(box[join].is_subset_of(box[i] | dia[j]), "box (x or y) exceeds box x or diamond y" + pair);
      if (elems[i].is_subset_of(elems[j])) {
        expect(box[i].is_subset_of(box[j]), "box is not monotone" + pair);
        expect(dia[i].is_subset_of(dia[j]), "diamond is not monotone" + pair);
      }
    }
  }
  return r;
}

}  // namespace pcl
