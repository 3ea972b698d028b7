#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace pcl {

enum class Op { Var, Top, Bot, Not, And, Or, Box, Dia };

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

/// Modal formula over named variables. And/Or are binary.
struct Formula {
  Op op = Op::Top;
  std::string var;
  FormulaPtr left;
  FormulaPtr right;
};

FormulaPtr var(std::string name);
FormulaPtr top();
FormulaPtr bot();
FormulaPtr neg(FormulaPtr f);
FormulaPtr conj(FormulaPtr a, FormulaPtr b);
FormulaPtr disj(FormulaPtr a, FormulaPtr b);
FormulaPtr box(FormulaPtr f);
FormulaPtr dia(FormulaPtr f);

/// S-expressions: p, top, bot, (not f), (and f g ...), (or f g ...),
/// (box f), (dia f). n-ary and/or fold to the right. Throws InvalidInput.
FormulaPtr parse_formula(const std::string& text);
std::string to_string(const Formula& f);

bool is_positive(const Formula& f);
/// Height of the syntax tree; atoms have depth 1.
std::size_t depth(const Formula& f);

/// Every positive formula over `vars`, ⊤, ⊥ with ∧, ∨, □, ◇ of depth <= d,
/// without duplicates, subformulas before the formulas using them.
std::vector<FormulaPtr> positive_formulas(const std::vector<std::string>& vars, std::size_t d);

/// A set of formulas with shared subterms, evaluated bottom-up once per model.
class FormulaDag {
 public:
  struct Node {
    Op op;
    std::string var;
    std::size_t left = 0;
    std::size_t right = 0;
  };

  /// Adds f and its subformulas; returns the node of f.
  std::size_t add(const Formula& f);
  const std::vector<Node>& nodes() const { return nodes_; }
  std::size_t size() const { return nodes_.size(); }

 private:
  std::vector<Node> nodes_;
  std::unordered_map<std::string, std::size_t> index_;
};

}  // namespace pcl
