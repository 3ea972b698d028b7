#include "pcl/formula.hpp"

#include <algorithm>
#include <cctype>

#include "pcl/error.hpp"

namespace pcl {

namespace {

FormulaPtr make(Op op, FormulaPtr l = nullptr, FormulaPtr r = nullptr) {
  auto f = std::make_shared<Formula>();
  f->op = op;
  f->left = std::move(l);
  f->right = std::move(r);
  return f;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  FormulaPtr parse_all() {
    auto f = parse();
    skip_space();
    if (pos_ != text_.size()) fail("trailing input");
    return f;
  }

 private:
  FormulaPtr parse() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of formula");
    if (text_[pos_] == '(') {
      ++pos_;
      const std::string head = word();
      std::vector<FormulaPtr> args;
      while (true) {
        skip_space();
        if (pos_ >= text_.size()) fail("missing ')'");
        if (text_[pos_] == ')') break;
        args.push_back(parse());
      }
      ++pos_;
      return build(head, std::move(args));
    }
    const std::string w = word();
    if (w == "top") return top();
    if (w == "bot") return bot();
    if (w == "not" || w == "and" || w == "or" || w == "box" || w == "dia") fail("'" + w + "' needs parentheses");
    return var(w);
  }

  FormulaPtr build(const std::string& head, std::vector<FormulaPtr> args) {
    auto unary = [&](Op op) {
      if (args.size() != 1) fail("'" + head + "' takes one argument");
      return make(op, args[0]);
    };
    if (head == "not") return unary(Op::Not);
    if (head == "box") return unary(Op::Box);
    if (head == "dia") return unary(Op::Dia);
    if (head == "and" || head == "or") {
      if (args.size() < 2) fail("'" + head + "' takes at least two arguments");
      const Op op = head == "and" ? Op::And : Op::Or;
      FormulaPtr acc = args.back();
      for (std::size_t i = args.size() - 1; i-- > 0;) acc = make(op, args[i], acc);
      return acc;
    }
    fail("unknown connective '" + head + "'");
  }

  std::string word() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    if (start == pos_) fail("expected a name");
    return text_.substr(start, pos_ - start);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw InvalidInput("formula: " + what + " at offset " + std::to_string(pos_));
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

FormulaPtr var(std::string name) {
  auto f = std::make_shared<Formula>();
  f->op = Op::Var;
  f->var = std::move(name);
  return f;
}
FormulaPtr top() { return make(Op::Top); }
FormulaPtr bot() { return make(Op::Bot); }
FormulaPtr neg(FormulaPtr f) { return make(Op::Not, std::move(f)); }
FormulaPtr conj(FormulaPtr a, FormulaPtr b) { return make(Op::And, std::move(a), std::move(b)); }
FormulaPtr disj(FormulaPtr a, FormulaPtr b) { return make(Op::Or, std::move(a), std::move(b)); }
FormulaPtr box(FormulaPtr f) { return make(Op::Box, std::move(f)); }
FormulaPtr dia(FormulaPtr f) { return make(Op::Dia, std::move(f)); }

FormulaPtr parse_formula(const std::string& text) { return Parser(text).parse_all(); }

std::string to_string(const Formula& f) {
  switch (f.op) {
    case Op::Var: return f.var;
    case Op::Top: return "top";
    case Op::Bot: return "bot";
    case Op::Not: return "(not " + to_string(*f.left) + ")";
    case Op::Box: return "(box " + to_string(*f.left) + ")";
    case Op::Dia: return "(dia " + to_string(*f.left) + ")";
    case Op::And: return "(and " + to_string(*f.left) + " " + to_string(*f.right) + ")";
    case Op::Or: return "(or " + to_string(*f.left) + " " + to_string(*f.right) + ")";
  }
  return {};
}

bool is_positive(const Formula& f) {
  if (f.op == Op::Not) return false;
  return (!f.left || is_positive(*f.left)) && (!f.right || is_positive(*f.right));
}

std::size_t depth(const Formula& f) {
  std::size_t d = 0;
  if (f.left) d = std::max(d, depth(*f.left));
  if (f.right) d = std::max(d, depth(*f.right));
  return d + 1;
}

std::vector<FormulaPtr> positive_formulas(const std::vector<std::string>& vars, std::size_t d) {
  std::vector<FormulaPtr> atoms;
  for (const auto& v : vars) atoms.push_back(var(v));
  atoms.push_back(top());
  atoms.push_back(bot());
  if (d == 0) return {};
  // Depth <= k+1 formulas are the atoms plus one connective over depth <= k.
  std::vector<FormulaPtr> level = atoms;
  for (std::size_t k = 1; k < d; ++k) {
    std::vector<FormulaPtr> next = atoms;
    for (const auto& a : level) {
      next.push_back(box(a));
      next.push_back(dia(a));
    }
    for (const auto& a : level)
      for (const auto& b : level) {
        next.push_back(conj(a, b));
        next.push_back(disj(a, b));
      }
    level = std::move(next);
  }
  return level;
}

std::size_t FormulaDag::add(const Formula& f) {
  Node node{f.op, f.var, 0, 0};
  if (f.left) node.left = add(*f.left);
  if (f.right) node.right = add(*f.right);
  std::string key = std::to_string(static_cast<int>(f.op)) + ":" + std::to_string(node.left) + ":" +
                    std::to_string(node.right) + ":" + f.var;
  auto [it, fresh] = index_.emplace(std::move(key), nodes_.size());
  if (fresh) nodes_.push_back(std::move(node));
  return it->second;
}

}  // namespace pcl
