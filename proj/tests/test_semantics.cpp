#include <doctest.h>

#include <functional>

#include "oracles.hpp"
#include "pcl/enumerate.hpp"
#include "pcl/error.hpp"
#include "pcl/formula.hpp"
#include "pcl/semantics.hpp"

using namespace pcl;

namespace {

KripkeCoalgebra kripke(std::vector<std::string> points, std::vector<std::vector<std::size_t>> succ) {
  KripkeCoalgebra g{FinPoset::discrete(points), {}};
  for (const auto& s : succ) {
    Subset out(points.size());
    for (auto i : s) out.insert(i);
    g.successors.push_back(out);
  }
  return g;
}

/// Textbook recursive evaluation on bitmasks.
oracle::Mask naive(const KripkeCoalgebra& g, const std::map<std::string, oracle::Mask>& v, const Formula& f) {
  const std::size_t n = g.carrier.size();
  const oracle::Mask all = (oracle::Mask{1} << n) - 1;
  switch (f.op) {
    case Op::Var: return v.at(f.var);
    case Op::Top: return all;
    case Op::Bot: return 0;
    case Op::Not: return all & ~naive(g, v, *f.left);
    case Op::And: return naive(g, v, *f.left) & naive(g, v, *f.right);
    case Op::Or: return naive(g, v, *f.left) | naive(g, v, *f.right);
    case Op::Box:
    case Op::Dia: {
      const oracle::Mask s = naive(g, v, *f.left);
      oracle::Mask out = 0;
      for (std::size_t x = 0; x < n; ++x) {
        const oracle::Mask succ = g.successors[x].mask();
        const bool holds = f.op == Op::Box ? (succ & ~s) == 0 : (succ & s) != 0;
        if (holds) out |= oracle::Mask{1} << x;
      }
      return out;
    }
  }
  return 0;
}

}  // namespace

TEST_CASE("formula parsing and printing") {
  CHECK(to_string(*parse_formula("(dia (or p q))")) == "(dia (or p q))");
  CHECK(to_string(*parse_formula("(and p q r)")) == "(and p (and q r))");
  CHECK(to_string(*parse_formula("  (box   top ) ")) == "(box top)");
  CHECK_FALSE(is_positive(*parse_formula("(box (not p))")));
  CHECK(depth(*parse_formula("(box (and p q))")) == 3);
  for (const char* bad : {"", "(", "(box p q)", "(and p)", "(foo p)", "box", "p q", "(dia p))"})
    CHECK_THROWS_AS(parse_formula(bad), InvalidInput);
}

TEST_CASE("positive formula enumeration counts") {
  // a(1) = |vars| + 2, a(d+1) = a(1) + 2 a(d) + 2 a(d)^2.
  std::size_t a = 4;
  for (std::size_t d = 1; d <= 3; ++d) {
    CHECK(positive_formulas({"p", "q"}, d).size() == a);
    a = 4 + 2 * a + 2 * a * a;
  }
  for (const auto& f : positive_formulas({"p"}, 3)) {
    CHECK(is_positive(*f));
    CHECK(depth(*f) <= 3);
  }
}

TEST_CASE("dag shares subformulas") {
  FormulaDag dag;
  const auto a = dag.add(*parse_formula("(and (box p) (dia (box p)))"));
  const auto b = dag.add(*parse_formula("(box p)"));
  CHECK(dag.size() == 4);
  CHECK(b < a);
}

TEST_CASE("Kripke clauses and deadlock") {
  // x -> y, y deadlocked.
  const KripkeCoalgebra g = kripke({"x", "y"}, {{1}, {}});
  const Valuation v{{"p", Subset(2, {1})}};
  CHECK(interpret_boolean(g, v, *parse_formula("(dia p)")) == Subset(2, {0}));
  CHECK(interpret_boolean(g, v, *parse_formula("(box p)")) == Subset(2, {0, 1}));
  CHECK(interpret_boolean(g, v, *parse_formula("(box bot)")) == Subset(2, {1}));
  CHECK(interpret_boolean(g, v, *parse_formula("(dia top)")) == Subset(2, {0}));
  CHECK(interpret_boolean(g, v, *parse_formula("(not (dia top))")) == Subset(2, {1}));
}

TEST_CASE("evaluation agrees with the textbook recursion") {
  const auto formulas = positive_formulas({"p"}, 3);
  FormulaDag dag;
  std::vector<std::size_t> node;
  for (const auto& f : formulas) node.push_back(dag.add(*f));
  const FinPoset x = FinPoset::discrete(point_labels(3));
  std::vector<Subset> out;
  for (const auto& g : monotone_coalgebras(x))
    for (oracle::Mask p = 0; p < 8; ++p) {
      evaluate(dag, g, {{"p", Subset::from_mask(3, p)}}, Mode::Boolean, out);
      for (std::size_t i = 0; i < formulas.size(); ++i) CHECK(out[node[i]].mask() == naive(g, {{"p", p}}, *formulas[i]));
    }
}

TEST_CASE("monotone coalgebras on a discrete carrier are all Kripke frames") {
  CHECK(monotone_coalgebras(FinPoset::discrete(point_labels(2))).size() == 16);
  // On the 2-chain: convex successor sets {∅,{p},{q},{p,q}}, γ(p) ⊑ γ(q)
  // in the Egli-Milner order, which relates ∅ only to itself.
  std::size_t expected = 0;
  const FinPoset c = FinPoset::chain({"p", "q"});
  for (oracle::Mask a = 0; a < 4; ++a)
    for (oracle::Mask b = 0; b < 4; ++b) expected += oracle::egli_milner(c, a, b) ? 1 : 0;
  CHECK(monotone_coalgebras(c).size() == expected);
}

TEST_CASE("positive input validation") {
  const FinPoset c = FinPoset::chain({"p", "q"});
  KripkeCoalgebra good{c, {Subset(2, {1}), Subset(2, {1})}};
  CHECK_NOTHROW(validate_positive(good));
  KripkeCoalgebra anti{c, {Subset(2, {1}), Subset(2, {0})}};
  CHECK_THROWS_AS(validate_positive(anti), InvalidInput);
  const FinPoset three = FinPoset::chain({"a", "b", "c"});
  KripkeCoalgebra gap{three, {Subset(3, {0, 2}), Subset(3, {0, 2}), Subset(3, {0, 2})}};
  CHECK_THROWS_AS(validate_positive(gap), InvalidInput);
  CHECK_THROWS_AS(interpret_positive(good, {{"p", Subset(2, {0})}}, *parse_formula("p")), InvalidInput);
  CHECK_THROWS_AS(interpret_positive(good, {{"p", Subset(2, {1})}}, *parse_formula("(not p)")), InvalidInput);
  CHECK(interpret_positive(good, {{"p", Subset(2, {1})}}, *parse_formula("(box p)")) == Subset::full(2));
}

TEST_CASE("Egli-Milner on subsets") {
  const FinPoset c = FinPoset::chain({"p", "q"});
  CHECK(egli_milner_leq(c, Subset(2, {0}), Subset(2, {0, 1})));
  CHECK_FALSE(egli_milner_leq(c, Subset(2, {0, 1}), Subset(2, {0})));
  CHECK_FALSE(egli_milner_leq(c, Subset(2), Subset(2, {0})));
}

TEST_CASE("delta for normal modal logic") {
  for (std::size_t n = 0; n <= 3; ++n) {
    const DeltaPow d = delta_pow(point_labels(n));
    // Join-preserving maps Pow(n) -> 2 correspond to subsets of n.
    CHECK(d.valid.size() == (std::size_t{1} << n));
    CHECK(d.domain.elements().size() == (std::size_t{1} << (std::size_t{1} << n)));
    // δ(◇U) = { V | V ∩ U ≠ ∅ }.
    for (oracle::Mask u = 0; u < (oracle::Mask{1} << n); ++u) {
      const Subset img = d.apply(d.generator(u));
      for (oracle::Mask w = 0; w < (oracle::Mask{1} << n); ++w) CHECK(img.contains(w) == ((u & w) != 0));
    }
  }
}

TEST_CASE("delta prime at the 2-chain") {
  const DeltaPrime d = delta_prime(make_pow(), FinPoset::chain({"p", "q"}));
  CHECK(d.upsets.size() == 3);
  CHECK(d.positive.result.members.size() == 8);
  CHECK(injectivity_check(d).injective);
}
