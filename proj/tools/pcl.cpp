// pcl: command-line front end for posetification, positivication,
// Birkhoff duality and positive Kripke semantics.
//
// Exit status: 0 success, 1 property or verification failure, 2 budget
// refusal, 3 malformed input.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "pcl/enumerate.hpp"
#include "pcl/formula.hpp"
#include "pcl/io.hpp"
#include "pcl/posetify.hpp"
#include "pcl/positivize.hpp"
#include "pcl/semantics.hpp"
#include "pcl/verify.hpp"

namespace {

using namespace pcl;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kBudget = 2;
constexpr int kMalformed = 3;

// Member lists of larger inserters are summarised by their size only.
constexpr std::size_t kMaxListed = 256;

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write '" + path + "'");
  out << text;
}

json subset_json(const Subset& s, const FinPoset& x) {
  json out = json::array();
  s.for_each([&](std::size_t i) { out.push_back(x.label(i)); });
  return out;
}

json posetification_json(const SetFunctor& t, const FinPoset& x, const Posetification& p) {
  json classes = json::array();
  for (std::size_t c = 0; c < p.result.size(); ++c) {
    json members = json::array();
    for (std::size_t i = 0; i < p.elements.size(); ++i)
      if (p.projection[i] == c) members.push_back(t.render(p.elements[i], x.labels()));
    classes.push_back({{"class", p.result.label(c)}, {"members", members}});
  }
  return {{"size", p.result.size()}, {"order", poset_to_json(p.result)}, {"classes", classes}};
}

int cmd_posetify(const std::string& functor, const std::string& poset_file, const std::string& method,
                 const std::string& dot, const Budget& budget) {
  const FunctorPtr t = make_functor(functor);
  const FinPoset x = poset_from_json(read_json_file(poset_file));
  json report = {{"functor", t->name()}, {"poset", poset_to_json(x)}, {"method", method}};
  std::optional<Posetification> generic, closed;
  if (method == "generic" || method == "both") {
    generic = posetify_generic(*t, x, budget);
    report["generic"] = posetification_json(*t, x, *generic);
  }
  if (method == "closed" || method == "both") {
    closed = posetify_closed(*t, x, budget);
    report["closed"] = posetification_json(*t, x, *closed);
  }
  int status = kOk;
  for (const auto* p : {generic ? &*generic : nullptr, closed ? &*closed : nullptr})
    if (p)
      if (auto err = check_posetification(*p)) {
        report["failure"] = "posetification-oracle: " + *err;
        status = kFailed;
      }
  if (generic && closed) {
    const CrossCheck cc = cross_check(*generic, *closed);
    report["isomorphic"] = cc.ok;
    if (!cc.ok) {
      report["failure"] = "posetification-oracle: " + cc.message;
      status = kFailed;
    }
  }
  if (!dot.empty()) write_file(dot, hasse_dot((closed ? *closed : *generic).result, t->name() + "'"));
  emit(report);
  return status;
}

int cmd_positivize(const std::string& syntax, const std::string& lattice_file, bool check, const std::string& dot,
                   const Budget& budget) {
  const BAFunctorPtr l = make_syntax(syntax);
  const LatticeInput in = lattice_from_json(read_json_file(lattice_file));
  const FinDistLattice& a = in.lattice;
  const Positivication p = positivize(*l, a, budget);
  json report = {{"syntax", l->name()},
                 {"lattice", lattice_to_json(a)},
                 {"envelope_atoms", p.envelope.atom_count()},
                 {"size", p.result.members.size()},
                 {"spectrum", poset_to_json(p.result.lattice.spectrum)}};
  if (p.result.members.size() <= kMaxListed) {
    json members = json::array();
    for (const auto& m : p.result.members) members.push_back(p.envelope.render(m));
    report["members"] = members;
  }
  const auto elems = a.elements(budget);
  for (const auto& [key, table] : {std::pair{"box", &p.box}, std::pair{"diamond", &p.diamond}}) {
    if (!*table) continue;
    json mods = json::array();
    for (std::size_t i = 0; i < elems.size(); ++i)
      mods.push_back({{"argument", a.render(elems[i])}, {"member", p.result.index_of((**table)[i]).has_value()}});
    report[key] = mods;
  }

  int status = kOk;
  if (check) {
    std::string tag;
    std::vector<Subset> expected;
    FinDistLattice closed;
    if (syntax == "free") {
      tag = "free-modality-positivication";
      expected = expected_members_free(a, budget);
      closed = closed_form_free(a, budget);
    } else {
      const FunctorPtr t = syntax == "dunn" ? make_pow() : make_functor(syntax.substr(syntax.find(':') + 1));
      tag = t->kind() == FunctorKind::Pow ? "dunn-positivication" : "semantic-closed-form";
      expected = expected_members_semantic(*t, a, budget);
      closed = closed_form_semantic(*t, a, budget);
    }
    const bool same_members = expected == p.result.members;
    const bool iso = isomorphic(closed.spectrum, p.result.lattice.spectrum);
    report["closed_form"] = {{"size", closed.elements(budget).size()}, {"members_match", same_members}, {"isomorphic", iso}};
    if (!same_members || !iso) {
      report["failure"] = tag + ": inserter differs from the closed form";
      status = kFailed;
    }
    if (syntax == "dunn" || syntax == "semantic:pow") {
      const AxiomReport axioms = dunn_axiom_check(p);
      report["dunn_axioms"] = {{"checked", axioms.checked}, {"failures", axioms.failures}};
      if (!axioms.ok()) {
        report["failure"] = "dunn-axioms: " + axioms.failures.front();
        status = kFailed;
      }
    }
  }
  if (!dot.empty()) write_file(dot, hasse_dot(lattice_order(p.result.lattice, budget), l->name() + "'"));
  emit(report);
  return status;
}

int cmd_dualize(const std::string& lattice_file, const Budget& budget) {
  const LatticeInput in = lattice_from_json(read_json_file(lattice_file));
  const FinPoset recovered = spectrum(in.lattice, budget);
  const bool round_trip = isomorphic(recovered, in.lattice.spectrum);
  json report = {{"type", in.type},
                 {"spectrum", poset_to_json(in.lattice.spectrum)},
                 {"up_algebra", poset_to_json(lattice_order(in.lattice, budget))},
                 {"prime_filters", poset_to_json(recovered)},
                 {"round_trip", round_trip}};
  if (!round_trip) report["failure"] = "birkhoff-round-trip: prime filters differ from the spectrum";
  emit(report);
  return round_trip ? kOk : kFailed;
}

int cmd_interpret(const std::string& coalgebra_file, const std::string& valuation_file, const std::string& text,
                  const std::string& mode, const Budget& budget) {
  const KripkeCoalgebra g = coalgebra_from_json(read_json_file(coalgebra_file));
  const Valuation v = valuation_from_json(read_json_file(valuation_file), g.carrier);
  const FormulaPtr f = parse_formula(text);
  json report = {{"formula", to_string(*f)}, {"mode", mode}};
  int status = kOk;
  std::optional<Subset> boolean, positive;
  if (mode == "boolean" || mode == "both") {
    boolean = interpret_boolean(g, v, *f);
    report["boolean"] = subset_json(*boolean, g.carrier);
  }
  if (mode == "positive" || mode == "both") {
    positive = interpret_positive(g, v, *f);
    report["positive"] = subset_json(*positive, g.carrier);
    const DeltaPrime d = delta_prime(make_pow(), g.carrier, budget);
    const Subset via = interpret_via_delta_prime(g, v, *f, d);
    report["delta_prime_agrees"] = via == *positive;
    if (!(via == *positive)) {
      report["failure"] = "semantics-coherence: δ′ semantics gives " + subset_json(via, g.carrier).dump();
      status = kFailed;
    }
  }
  if (boolean && positive) {
    report["agree"] = *boolean == *positive;
    if (g.carrier.is_discrete() && !(*boolean == *positive)) {
      report["failure"] = "boolean-positive-agreement: semantics differ on a discrete carrier";
      status = kFailed;
    }
  }
  emit(report);
  return status;
}

int cmd_verify(const std::string& suite, bool as_json, const Budget& budget) {
  const auto checks = run_suite(suite, budget);
  std::size_t failed = 0;
  json out = json::array();
  for (const auto& c : checks) {
    failed += c.ok ? 0 : 1;
    if (as_json) {
      out.push_back({{"suite", c.suite}, {"tag", c.tag}, {"description", c.description}, {"ok", c.ok},
                     {"detail", c.detail}});
    } else {
      std::cout << (c.ok ? "PASS " : "FAIL ") << c.suite << '/' << c.tag << ": " << c.description;
      if (!c.ok) std::cout << " -- " << c.detail;
      std::cout << '\n';
    }
  }
  if (as_json) emit(out);
  else std::cout << checks.size() - failed << '/' << checks.size() << " checks passed\n";
  return failed == 0 ? kOk : kFailed;
}

int cmd_export_dot(const std::string& input, const std::string& output, const Budget& budget) {
  const json j = read_json_file(input);
  const std::string dot = j.is_object() && j.contains("type")
                              ? hasse_dot(lattice_order(lattice_from_json(j).lattice, budget), "lattice")
                              : hasse_dot(poset_from_json(j), "poset");
  if (output.empty()) std::cout << dot;
  else write_file(output, dot);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Posetification and positivication of coalgebraic logics over finite posets"};
  app.require_subcommand(1);

  Budget budget;
  app.add_option("--max-enum", budget.max_enum, "Largest functor-element set that may be enumerated")
      ->capture_default_str();
  app.add_option("--max-generators", budget.max_generators, "Largest generator set for a free Boolean algebra")
      ->capture_default_str();

  std::string functor, poset, method = "closed", dot;
  auto* posetify = app.add_subcommand("posetify", "Compute T′X for a Set-functor T and a finite poset X");
  posetify->add_option("--functor", functor, "pow, nb, mnb, bag:<d> or poly:<name>:<arity>:<coefficients>,...")
      ->required();
  posetify->add_option("--poset", poset, "Poset JSON file")->required()->check(CLI::ExistingFile);
  posetify->add_option("--method", method, "generic, closed or both")
      ->check(CLI::IsMember({"generic", "closed", "both"}))
      ->capture_default_str();
  posetify->add_option("--dot", dot, "Write the Hasse diagram of T′X here");

  std::string syntax, lattice;
  bool check_closed = false;
  auto* positivize_cmd = app.add_subcommand("positivize", "Compute L′A for a modal syntax L and a finite DL A");
  positivize_cmd->add_option("--syntax", syntax, "dunn, free or semantic:<functor>")->required();
  positivize_cmd->add_option("--lattice", lattice, "Lattice JSON file")->required()->check(CLI::ExistingFile);
  positivize_cmd->add_flag("--check-closed-form", check_closed, "Compare the inserter with its closed form");
  positivize_cmd->add_option("--dot", dot, "Write the Hasse diagram of L′A here");

  auto* dualize = app.add_subcommand("dualize", "Print a finite distributive lattice and its spectrum");
  dualize->add_option("--lattice", lattice, "Lattice JSON file")->required()->check(CLI::ExistingFile);

  std::string coalgebra, valuation, formula, mode = "positive";
  auto* interpret = app.add_subcommand("interpret", "Evaluate a modal formula on a Kripke coalgebra");
  interpret->add_option("--coalgebra", coalgebra, "Coalgebra JSON file")->required()->check(CLI::ExistingFile);
  interpret->add_option("--valuation", valuation, "Valuation JSON file")->required()->check(CLI::ExistingFile);
  interpret->add_option("--formula", formula, "S-expression, e.g. (dia (or p q))")->required();
  interpret->add_option("--mode", mode, "boolean, positive or both")
      ->check(CLI::IsMember({"boolean", "positive", "both"}))
      ->capture_default_str();

  std::string suite = "all";
  bool as_json = false;
  auto* verify = app.add_subcommand("verify", "Run the invariant suite");
  verify->add_option("--suite", suite, "all, order, alg, functors, posetify, positivize or semantics")
      ->capture_default_str();
  verify->add_flag("--json", as_json, "Report as JSON");

  std::string input, output;
  auto* export_dot = app.add_subcommand("export-dot", "Hasse diagram of a poset or lattice JSON file as DOT");
  export_dot->add_option("--input", input, "Poset or lattice JSON file")->required()->check(CLI::ExistingFile);
  export_dot->add_option("--output", output, "Output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kMalformed;
  }

  try {
    if (*posetify) return cmd_posetify(functor, poset, method, dot, budget);
    if (*positivize_cmd) return cmd_positivize(syntax, lattice, check_closed, dot, budget);
    if (*dualize) return cmd_dualize(lattice, budget);
    if (*interpret) return cmd_interpret(coalgebra, valuation, formula, mode, budget);
    if (*verify) return cmd_verify(suite, as_json, budget);
    if (*export_dot) return cmd_export_dot(input, output, budget);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kMalformed;
  } catch (const json::exception& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kMalformed;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violated: " << e.what() << '\n';
    return kFailed;
  }
  return kMalformed;
}
