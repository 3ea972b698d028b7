#include "pcl/functors.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <limits>
#include <numeric>

namespace pcl {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}
std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return a > kSaturated - b ? kSaturated : a + b; }
std::uint64_t sat_pow2(std::uint64_t e) { return e >= 64 ? kSaturated : std::uint64_t{1} << e; }

std::uint32_t image_mask(std::span<const std::size_t> f, std::uint64_t s) {
  std::uint32_t out = 0;
  for (std::size_t i = 0; s; ++i, s >>= 1)
    if (s & 1U) out |= std::uint32_t{1} << f[i];
  return out;
}

std::uint32_t preimage_mask(std::span<const std::size_t> f, std::uint64_t v) {
  std::uint32_t out = 0;
  for (std::size_t i = 0; i < f.size(); ++i)
    if ((v >> f[i]) & 1U) out |= std::uint32_t{1} << i;
  return out;
}

/// Subsets of an n-set (as bits over 2^n) that do not contain point i.
std::uint64_t without_point(std::size_t n, std::size_t i) {
  std::uint64_t w = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s)
    if (!((s >> i) & 1U)) w |= std::uint64_t{1} << s;
  return w;
}

std::uint64_t upclose_family(std::uint64_t family, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) family |= (family & without_point(n, i)) << (std::size_t{1} << i);
  return family;
}

std::string subset_label(std::uint64_t mask, std::span<const std::string> labels) {
  return render_set(Subset::from_mask(labels.size(), mask), labels);
}

void check_map(std::span<const std::size_t> f, std::size_t m) {
  for (auto v : f)
    if (v >= m) throw InvalidInput("function value outside its codomain");
}

// ---------------------------------------------------------------------------

class PowFunctor final : public SetFunctor {
 public:
  std::string name() const override { return "pow"; }
  FunctorKind kind() const override { return FunctorKind::Pow; }
  std::uint64_t size_estimate(std::size_t n) const override { return sat_pow2(n); }

  std::vector<Element> on_obj(std::size_t n) const override {
    if (n > 24) throw BudgetExceeded("powerset of more than 24 points");
    std::vector<Element> out;
    for (std::uint32_t s = 0; s < (std::uint32_t{1} << n); ++s) out.push_back({s});
    return out;
  }
  Element on_mor(std::span<const std::size_t> f, std::size_t m, const Element& e) const override {
    check_map(f, m);
    return {image_mask(f, e[0])};
  }
  std::string render(const Element& e, std::span<const std::string> labels) const override {
    return subset_label(e[0], labels);
  }

  std::optional<Preorder> closed_lifting(const FinPoset& x, const Budget& budget) const override {
    const std::size_t n = x.size();
    budget.require(size_estimate(n) <= budget.max_relation, "Egli-Milner relation exceeds the relation budget");
    const auto elems = on_obj(n);
    std::vector<std::string> labels;
    for (const auto& e : elems) labels.push_back(render(e, x.labels()));
    Preorder r(std::move(labels));
    // a ≤ b iff ↓b covers a and ↑a covers b.
    std::vector<Subset> up, down;
    for (const auto& e : elems) {
      const Subset s = Subset::from_mask(n, e[0]);
      up.push_back(x.up_closure(s));
      down.push_back(x.down_closure(s));
    }
    for (std::size_t a = 0; a < elems.size(); ++a)
      for (std::size_t b = 0; b < elems.size(); ++b) {
        const Subset sa = Subset::from_mask(n, elems[a][0]), sb = Subset::from_mask(n, elems[b][0]);
        if (sa.is_subset_of(down[b]) && sb.is_subset_of(up[a])) r.relate(a, b);
      }
    return r;
  }
};

// ---------------------------------------------------------------------------

class PolyFunctor final : public SetFunctor {
 public:
  explicit PolyFunctor(std::vector<PolySymbol> sig) : sig_(std::move(sig)) {
    if (sig_.empty()) throw InvalidInput("polynomial functor needs at least one symbol");
    for (const auto& s : sig_)
      if (s.coefficients == 0) throw InvalidInput("symbol '" + s.name + "' has an empty coefficient set");
  }

  std::string name() const override {
    std::string out = "poly:";
    for (std::size_t i = 0; i < sig_.size(); ++i) {
      if (i) out += ",";
      out += sig_[i].name + ":" + std::to_string(sig_[i].arity) + ":" + std::to_string(sig_[i].coefficients);
    }
    return out;
  }
  FunctorKind kind() const override { return FunctorKind::Poly; }

  std::uint64_t size_estimate(std::size_t n) const override {
    std::uint64_t total = 0;
    for (const auto& s : sig_) {
      std::uint64_t term = s.coefficients;
      for (std::size_t a = 0; a < s.arity; ++a) term = sat_mul(term, n);
      total = sat_add(total, term);
    }
    return total;
  }

  std::vector<Element> on_obj(std::size_t n) const override {
    std::vector<Element> out;
    for (std::uint32_t s = 0; s < sig_.size(); ++s) {
      const auto& sym = sig_[s];
      if (sym.arity > 0 && n == 0) continue;
      for (std::uint32_t c = 0; c < sym.coefficients; ++c) {
        Element e(2 + sym.arity, 0);
        e[0] = s;
        e[1] = c;
        while (true) {
          out.push_back(e);
          std::size_t pos = e.size();
          while (pos > 2 && e[pos - 1] + 1 == n) e[--pos] = 0;
          if (pos == 2) break;
          ++e[pos - 1];
        }
      }
    }
    return out;
  }
  Element on_mor(std::span<const std::size_t> f, std::size_t m, const Element& e) const override {
    check_map(f, m);
    Element out = e;
    for (std::size_t i = 2; i < out.size(); ++i) out[i] = static_cast<std::uint32_t>(f[e[i]]);
    return out;
  }
  std::string render(const Element& e, std::span<const std::string> labels) const override {
    const auto& sym = sig_[e[0]];
    std::string out = sym.name;
    if (sym.coefficients > 1) out += "#" + std::to_string(e[1]);
    if (sym.arity > 0) {
      out += "(";
      for (std::size_t i = 2; i < e.size(); ++i) out += (i > 2 ? "," : "") + labels[e[i]];
      out += ")";
    }
    return out;
  }

  std::optional<Preorder> closed_lifting(const FinPoset& x, const Budget& budget) const override {
    budget.require(size_estimate(x.size()) <= budget.max_relation, "polynomial lifting exceeds the relation budget");
    const auto elems = on_obj(x.size());
    std::vector<std::string> labels;
    for (const auto& e : elems) labels.push_back(render(e, x.labels()));
    Preorder r(std::move(labels));
    for (std::size_t a = 0; a < elems.size(); ++a)
      for (std::size_t b = 0; b < elems.size(); ++b) {
        const auto &ea = elems[a], &eb = elems[b];
        bool ok = ea[0] == eb[0] && ea[1] == eb[1];
        for (std::size_t i = 2; ok && i < ea.size(); ++i) ok = x.leq(ea[i], eb[i]);
        if (ok) r.relate(a, b);
      }
    return r;
  }

 private:
  std::vector<PolySymbol> sig_;
};

// ---------------------------------------------------------------------------

class BagFunctor final : public SetFunctor {
 public:
  explicit BagFunctor(std::size_t degree) : degree_(degree) {}

  std::string name() const override { return "bag:" + std::to_string(degree_); }
  FunctorKind kind() const override { return FunctorKind::Bag; }

  std::uint64_t size_estimate(std::size_t n) const override {
    // Multisets of size <= d over n points: C(n + d, d).
    std::uint64_t c = 1;
    for (std::size_t i = 1; i <= degree_; ++i) {
      c = sat_mul(c, n + i);
      if (c == kSaturated) return c;
      c /= i;
    }
    return c;
  }

  std::vector<Element> on_obj(std::size_t n) const override {
    std::vector<Element> out;
    Element cur;
    auto rec = [&](auto&& self, std::uint32_t from) -> void {
      out.push_back(cur);
      if (cur.size() == degree_) return;
      for (std::uint32_t i = from; i < n; ++i) {
        cur.push_back(i);
        self(self, i);
        cur.pop_back();
      }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
  }
  Element on_mor(std::span<const std::size_t> f, std::size_t m, const Element& e) const override {
    check_map(f, m);
    Element out;
    for (auto v : e) out.push_back(static_cast<std::uint32_t>(f[v]));
    std::sort(out.begin(), out.end());
    return out;
  }
  std::string render(const Element& e, std::span<const std::string> labels) const override {
    if (e.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < e.size();) {
      std::size_t j = i;
      while (j < e.size() && e[j] == e[i]) ++j;
      if (!out.empty()) out += "+";
      if (j - i > 1) out += std::to_string(j - i);
      out += labels[e[i]];
      i = j;
    }
    return out;
  }

  std::optional<Preorder> closed_lifting(const FinPoset& x, const Budget& budget) const override {
    budget.require(size_estimate(x.size()) <= budget.max_relation, "multiset lifting exceeds the relation budget");
    const auto elems = on_obj(x.size());
    std::vector<std::string> labels;
    for (const auto& e : elems) labels.push_back(render(e, x.labels()));
    Preorder r(std::move(labels));
    // a ≤ b iff some bijection between the two multisets is pointwise ≤.
    for (std::size_t a = 0; a < elems.size(); ++a)
      for (std::size_t b = 0; b < elems.size(); ++b) {
        if (elems[a].size() != elems[b].size()) continue;
        Element perm = elems[b];
        bool found = false;
        do {
          bool ok = true;
          for (std::size_t i = 0; ok && i < perm.size(); ++i) ok = x.leq(elems[a][i], perm[i]);
          found = ok;
        } while (!found && std::next_permutation(perm.begin(), perm.end()));
        if (found) r.relate(a, b);
      }
    return r;
  }

 private:
  std::size_t degree_;
};

// ---------------------------------------------------------------------------

/// Shared machinery for the two neighbourhood functors: families over n
/// points are bitmasks over the 2^n subsets whenever n <= 6.
class FamilyFunctor : public SetFunctor {
 public:
  std::string render(const Element& e, std::span<const std::string> labels) const override {
    std::string out = "{";
    for (std::size_t i = 0; i < e.size(); ++i) out += (i ? "," : "") + subset_label(e[i], labels);
    return out + "}";
  }

  void lift_pairs(std::size_t k, std::span<const std::size_t> f0, std::span<const std::size_t> f1, std::size_t n,
                  std::vector<Subset>& rows) const override {
    if (k > 6 || n > 6) {
      SetFunctor::lift_pairs(k, f0, f1, n, rows);
      return;
    }
    const std::vector<std::uint64_t> targets = family_masks(n);
    const auto total = static_cast<std::int64_t>(family_count(k));
    const auto lookup = [&](std::uint64_t mask) {
      return static_cast<std::size_t>(std::lower_bound(targets.begin(), targets.end(), mask) - targets.begin());
    };
    const Images im0 = images(k, f0, n), im1 = images(k, f1, n);
    const std::vector<std::uint64_t> sources = upclosed_only() ? upclosed_families(k) : std::vector<std::uint64_t>{};
#pragma omp parallel
    {
      std::vector<Subset> local(rows.size(), Subset(rows.size()));
#pragma omp for schedule(static)
      for (std::int64_t i = 0; i < total; ++i) {
        const std::uint64_t family = upclosed_only() ? sources[static_cast<std::size_t>(i)] : static_cast<std::uint64_t>(i);
        local[lookup(apply(im0, family, n))].insert(lookup(apply(im1, family, n)));
      }
#pragma omp critical
      for (std::size_t r = 0; r < rows.size(); ++r) rows[r] |= local[r];
    }
  }

 protected:
  /// Per-subset data needed to push a family forward along f: k -> n.
  struct Images {
    std::vector<std::uint32_t> forward;   ///< subset of k -> image subset of n
    std::vector<std::uint32_t> backward;  ///< subset of n -> preimage subset of k
  };
  static Images images(std::size_t k, std::span<const std::size_t> f, std::size_t n) {
    Images im;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << k); ++s) im.forward.push_back(image_mask(f, s));
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) im.backward.push_back(preimage_mask(f, v));
    return im;
  }

  virtual bool upclosed_only() const = 0;
  virtual std::uint64_t apply(const Images& im, std::uint64_t family, std::size_t n) const = 0;
  virtual std::vector<std::uint64_t> family_masks(std::size_t n) const = 0;
  virtual std::uint64_t family_count(std::size_t n) const = 0;
};

class NbFunctor final : public FamilyFunctor {
 public:
  std::string name() const override { return "nb"; }
  FunctorKind kind() const override { return FunctorKind::Nb; }
  std::uint64_t size_estimate(std::size_t n) const override { return n >= 6 ? kSaturated : sat_pow2(std::uint64_t{1} << n); }

  std::vector<Element> on_obj(std::size_t n) const override {
    if (n > 4) throw BudgetExceeded("neighbourhood functor on more than 4 points");
    std::vector<Element> out;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << (std::size_t{1} << n)); ++m) out.push_back(family_element(m));
    return out;
  }
  Element on_mor(std::span<const std::size_t> f, std::size_t m, const Element& e) const override {
    check_map(f, m);
    if (m > 20) throw BudgetExceeded("neighbourhood image over more than 20 points");
    // Double inverse image: V ∈ Nb f (A) iff f⁻¹(V) ∈ A.
    Element out;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << m); ++v)
      if (std::binary_search(e.begin(), e.end(), preimage_mask(f, v))) out.push_back(static_cast<std::uint32_t>(v));
    return out;
  }

  std::optional<Preorder> closed_lifting(const FinPoset& x, const Budget& budget) const override {
    // Two families are related iff they agree after collapsing components.
    const std::size_t n = x.size();
    budget.require(n <= 4 && size_estimate(n) <= budget.max_relation,
                   "neighbourhood lifting exceeds the relation budget");
    const auto comps = connected_components(x);
    const auto elems = on_obj(n);
    std::vector<std::string> labels;
    std::vector<Element> collapsed;
    for (const auto& e : elems) {
      labels.push_back(render(e, x.labels()));
      collapsed.push_back(on_mor(comps.component_of, comps.count, e));
    }
    Preorder r(std::move(labels));
    for (std::size_t a = 0; a < elems.size(); ++a)
      for (std::size_t b = 0; b < elems.size(); ++b)
        if (collapsed[a] == collapsed[b]) r.relate(a, b);
    return r;
  }

 protected:
  bool upclosed_only() const override { return false; }
  std::uint64_t apply(const Images& im, std::uint64_t family, std::size_t n) const override {
    std::uint64_t out = 0;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v)
      if ((family >> im.backward[v]) & 1U) out |= std::uint64_t{1} << v;
    return out;
  }
  std::vector<std::uint64_t> family_masks(std::size_t n) const override {
    std::vector<std::uint64_t> out(std::size_t{1} << (std::size_t{1} << n));
    std::iota(out.begin(), out.end(), std::uint64_t{0});
    return out;
  }
  std::uint64_t family_count(std::size_t n) const override {
    if (n > 4) throw BudgetExceeded("neighbourhood functor on more than 4 points");
    return size_estimate(n);
  }
};

class MNbFunctor final : public FamilyFunctor {
 public:
  std::string name() const override { return "mnb"; }
  FunctorKind kind() const override { return FunctorKind::MNb; }
  std::uint64_t size_estimate(std::size_t n) const override { return dedekind(n); }

  std::vector<Element> on_obj(std::size_t n) const override {
    if (n > 6) throw BudgetExceeded("monotone neighbourhood functor on more than 6 points");
    std::vector<Element> out;
    for (auto m : upclosed_families(n)) out.push_back(family_element(m));
    return out;
  }
  Element on_mor(std::span<const std::size_t> f, std::size_t m, const Element& e) const override {
    check_map(f, m);
    if (m > 20) throw BudgetExceeded("neighbourhood image over more than 20 points");
    // ↑f[A]: a set is in the image iff it contains f[a] for some a ∈ A.
    std::vector<std::uint32_t> direct;
    for (auto s : e) direct.push_back(image_mask(f, s));
    Element out;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << m); ++v)
      for (auto d : direct)
        if ((d & v) == d) {
          out.push_back(static_cast<std::uint32_t>(v));
          break;
        }
    return out;
  }

  std::optional<Preorder> closed_lifting(const FinPoset& x, const Budget& budget) const override {
    const std::size_t n = x.size();
    budget.require(n <= 6 && size_estimate(n) <= budget.max_relation,
                   "monotone neighbourhood lifting exceeds the relation budget");
    const auto elems = on_obj(n);
    // A ≤ B iff ∀a∈A ∃b∈B ↑b ⊆ ↑a and ∀b∈B ∃a∈A ↓a ⊆ ↓b. With the families
    // of up- and down-closures as masks, both clauses become inclusions.
    std::vector<std::uint64_t> ups(elems.size()), downs(elems.size());
    for (std::size_t i = 0; i < elems.size(); ++i)
      for (auto s : elems[i]) {
        const Subset a = Subset::from_mask(n, s);
        ups[i] |= std::uint64_t{1} << x.up_closure(a).mask();
        downs[i] |= std::uint64_t{1} << x.down_closure(a).mask();
      }
    std::vector<std::uint64_t> ups_above(elems.size()), downs_above(elems.size());
    for (std::size_t i = 0; i < elems.size(); ++i) {
      ups_above[i] = upclose_family(ups[i], n);
      downs_above[i] = upclose_family(downs[i], n);
    }
    std::vector<std::string> labels;
    for (const auto& e : elems) labels.push_back(render(e, x.labels()));
    Preorder r(std::move(labels));
    for (std::size_t a = 0; a < elems.size(); ++a)
      for (std::size_t b = 0; b < elems.size(); ++b)
        if ((ups[a] & ~ups_above[b]) == 0 && (downs[b] & ~downs_above[a]) == 0) r.relate(a, b);
    return r;
  }

 protected:
  bool upclosed_only() const override { return true; }
  std::uint64_t apply(const Images& im, std::uint64_t family, std::size_t n) const override {
    std::uint64_t direct = 0;
    for (std::uint64_t s = family; s; s &= s - 1) direct |= std::uint64_t{1} << im.forward[std::countr_zero(s)];
    return upclose_family(direct, n);
  }
  std::vector<std::uint64_t> family_masks(std::size_t n) const override { return upclosed_families(n); }
  std::uint64_t family_count(std::size_t n) const override { return dedekind(n); }
};

std::size_t parse_number(const std::string& s, const std::string& what) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw InvalidInput("expected a number for " + what + ", got '" + s + "'");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

std::optional<Preorder> SetFunctor::closed_lifting(const FinPoset&, const Budget&) const { return std::nullopt; }

void SetFunctor::lift_pairs(std::size_t k, std::span<const std::size_t> f0, std::span<const std::size_t> f1,
                            std::size_t n, std::vector<Subset>& rows) const {
  const auto sources = on_obj(k);
  const ElementIndex index(on_obj(n));
  const auto total = static_cast<std::int64_t>(sources.size());
  std::vector<std::size_t> lo(sources.size()), hi(sources.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < total; ++i) {
    const auto& c = sources[static_cast<std::size_t>(i)];
    lo[static_cast<std::size_t>(i)] = index.at(on_mor(f0, n, c));
    hi[static_cast<std::size_t>(i)] = index.at(on_mor(f1, n, c));
  }
  for (std::size_t i = 0; i < sources.size(); ++i) rows[lo[i]].insert(hi[i]);
}

void SetFunctor::lift_pairs_reference(std::size_t k, std::span<const std::size_t> f0, std::span<const std::size_t> f1,
                                      std::size_t n, std::vector<Subset>& rows) const {
  const auto targets = on_obj(n);
  for (const auto& c : on_obj(k)) {
    const auto a = std::find(targets.begin(), targets.end(), on_mor(f0, n, c)) - targets.begin();
    const auto b = std::find(targets.begin(), targets.end(), on_mor(f1, n, c)) - targets.begin();
    rows[static_cast<std::size_t>(a)].insert(static_cast<std::size_t>(b));
  }
}

FunctorPtr make_pow() { return std::make_shared<PowFunctor>(); }
FunctorPtr make_poly(std::vector<PolySymbol> signature) { return std::make_shared<PolyFunctor>(std::move(signature)); }
FunctorPtr make_bag(std::size_t degree) { return std::make_shared<BagFunctor>(degree); }
FunctorPtr make_nb() { return std::make_shared<NbFunctor>(); }
FunctorPtr make_mnb() { return std::make_shared<MNbFunctor>(); }

FunctorPtr make_functor(const std::string& spec) {
  if (spec == "pow") return make_pow();
  if (spec == "nb") return make_nb();
  if (spec == "mnb") return make_mnb();
  if (spec == "bag") return make_bag();
  if (spec.rfind("bag:", 0) == 0) return make_bag(parse_number(spec.substr(4), "bag degree"));
  if (spec.rfind("poly:", 0) == 0) {
    std::string body = spec.substr(5);
    if (body.rfind("sigma=", 0) == 0) body = body.substr(6);
    std::vector<PolySymbol> sig;
    for (const auto& entry : split(body, ',')) {
      const auto parts = split(entry, ':');
      if (parts.size() != 3 || parts[0].empty())
        throw InvalidInput("polynomial symbol must be name:arity:coefficients, got '" + entry + "'");
      sig.push_back({parts[0], parse_number(parts[1], "arity"), parse_number(parts[2], "coefficient count")});
    }
    return make_poly(std::move(sig));
  }
  throw InvalidInput("unknown functor '" + spec + "' (expected pow, poly:<spec>, bag:<d>, nb or mnb)");
}

ElementIndex::ElementIndex(const std::vector<Element>& elements) {
  index_.reserve(elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i) index_.emplace(elements[i], i);
}

std::size_t ElementIndex::at(const Element& e) const {
  auto it = index_.find(e);
  if (it == index_.end()) throw InvariantViolation("functor image outside the enumerated carrier");
  return it->second;
}

std::vector<Element> apply_obj(const SetFunctor& t, std::size_t n, const Budget& budget) {
  budget.require(t.size_estimate(n) <= budget.max_enum,
                 t.name() + " on " + std::to_string(n) + " points exceeds the enumeration budget");
  return t.on_obj(n);
}

std::vector<std::size_t> apply_mor(const SetFunctor& t, std::span<const std::size_t> f, std::size_t n, std::size_t m,
                                   const Budget& budget) {
  if (f.size() != n) throw InvalidInput("function is not total on its domain");
  const auto source = apply_obj(t, n, budget);
  const ElementIndex index(apply_obj(t, m, budget));
  std::vector<std::size_t> out;
  out.reserve(source.size());
  for (const auto& e : source) out.push_back(index.at(t.on_mor(f, m, e)));
  return out;
}

LiftedRelation lift_relation_generic(const SetFunctor& t, const FinPoset& x, const Budget& budget) {
  const Cotensor cot = cotensor2(x);
  const std::size_t n = x.size(), k = cot.pairs.size();
  budget.require(t.size_estimate(k) <= budget.max_enum,
                 t.name() + " on the " + std::to_string(k) + "-element order graph exceeds the enumeration budget");
  budget.require(t.size_estimate(n) <= budget.max_relation,
                 t.name() + " on " + std::to_string(n) + " points exceeds the relation budget");
  LiftedRelation out;
  out.elements = t.on_obj(n);
  std::vector<std::string> labels;
  for (const auto& e : out.elements) labels.push_back(t.render(e, x.labels()));
  out.relation = Preorder(std::move(labels));
  t.lift_pairs(k, cot.pi0.assignment, cot.pi1.assignment, n, out.relation.rows);
  return out;
}

std::vector<std::uint64_t> upclosed_families(std::size_t n) {
  if (n > 6) throw BudgetExceeded("up-closed families are enumerated for at most 6 points");
  if (n == 0) return {0, 1};
  const auto smaller = upclosed_families(n - 1);
  const std::size_t half = std::size_t{1} << (n - 1);
  std::vector<std::uint64_t> out;
  for (auto hi : smaller)
    for (auto lo : smaller)
      if ((lo & ~hi) == 0) out.push_back(lo | (hi << half));
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t dedekind(std::size_t n) {
  static constexpr std::uint64_t table[] = {2, 3, 6, 20, 168, 7581, 7828354, 2414682040998ULL};
  return n < std::size(table) ? table[n] : kSaturated;
}

std::uint64_t family_mask(const Element& family) {
  std::uint64_t m = 0;
  for (auto s : family) {
    if (s >= 64) throw InvalidInput("family mask needs at most 6 points");
    m |= std::uint64_t{1} << s;
  }
  return m;
}

Element family_element(std::uint64_t mask) {
  Element out;
  for (std::uint64_t s = mask; s; s &= s - 1) out.push_back(static_cast<std::uint32_t>(std::countr_zero(s)));
  return out;
}

}  // namespace pcl
