#include "pcl/io.hpp"

#include <fstream>
#include <sstream>

namespace pcl {

namespace {

std::string name_of(const json& j, const char* what) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return j.dump();
  throw InvalidInput(std::string(what) + " must be a string, got " + j.dump());
}

std::size_t lookup(const FinPoset& x, const std::string& label) {
  auto i = x.index_of(label);
  if (!i) throw InvalidInput("unknown element '" + label + "'");
  return *i;
}

Subset subset_from_json(const json& j, const FinPoset& x, const std::string& what) {
  if (!j.is_array()) throw InvalidInput(what + " must be an array of element names");
  Subset s(x.size());
  for (const auto& e : j) s.insert(lookup(x, name_of(e, "element")));
  return s;
}

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvalidInput("'" + path + "' is not valid JSON: " + e.what());
  }
}

FinPoset poset_from_json(const json& j) {
  if (!j.is_object() || !j.contains("elements") || !j["elements"].is_array())
    throw InvalidInput("a poset needs an \"elements\" array");
  std::vector<std::string> labels;
  for (const auto& e : j["elements"]) labels.push_back(name_of(e, "element"));
  FinPoset discrete = FinPoset::discrete(labels);  // validates uniqueness
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  if (j.contains("leq")) {
    if (!j["leq"].is_array()) throw InvalidInput("\"leq\" must be an array of pairs");
    for (const auto& p : j["leq"]) {
      if (!p.is_array() || p.size() != 2) throw InvalidInput("each \"leq\" entry must be a pair, got " + p.dump());
      pairs.emplace_back(lookup(discrete, name_of(p[0], "element")), lookup(discrete, name_of(p[1], "element")));
    }
  }
  return FinPoset::from_pairs(std::move(labels), pairs);
}

json poset_to_json(const FinPoset& x) {
  json leq = json::array();
  for (auto [a, b] : x.covers()) leq.push_back({x.label(a), x.label(b)});
  return {{"elements", x.labels()}, {"leq", leq}};
}

LatticeInput lattice_from_json(const json& j) {
  if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
    throw InvalidInput("a lattice needs a \"type\" of \"dl\", \"ba\" or \"lattice\"");
  const std::string type = j["type"];
  if (type == "dl") {
    if (!j.contains("spectrum")) throw InvalidInput("a \"dl\" lattice needs a \"spectrum\" poset");
    return {type, up_algebra(poset_from_json(j["spectrum"])), std::nullopt};
  }
  if (type == "ba") {
    if (!j.contains("atoms") || !j["atoms"].is_array()) throw InvalidInput("a \"ba\" needs an \"atoms\" array");
    std::vector<std::string> atoms;
    for (const auto& a : j["atoms"]) atoms.push_back(name_of(a, "atom"));
    return {type, boolean_as_lattice(FinBoolAlg{FinPoset::discrete(atoms).labels()}), std::nullopt};
  }
  if (type == "lattice") {
    if (!j.contains("order")) throw InvalidInput("a \"lattice\" needs an \"order\" poset");
    ExplicitLattice e = dualise_explicit(poset_from_json(j["order"]));
    FinDistLattice dual = e.dual;
    return {type, std::move(dual), std::move(e)};
  }
  throw InvalidInput("unknown lattice type '" + type + "'");
}

json lattice_to_json(const FinDistLattice& a) { return {{"type", "dl"}, {"spectrum", poset_to_json(a.spectrum)}}; }

KripkeCoalgebra coalgebra_from_json(const json& j) {
  if (!j.is_object() || !j.contains("carrier") || !j.contains("structure"))
    throw InvalidInput("a coalgebra needs \"carrier\" and \"structure\"");
  KripkeCoalgebra g;
  if (j["carrier"].is_array()) {
    std::vector<std::string> labels;
    for (const auto& e : j["carrier"]) labels.push_back(name_of(e, "element"));
    g.carrier = FinPoset::discrete(std::move(labels));
  } else {
    g.carrier = poset_from_json(j["carrier"]);
  }
  const json& s = j["structure"];
  if (!s.is_object()) throw InvalidInput("\"structure\" must map each element to its successors");
  g.successors.assign(g.carrier.size(), Subset(g.carrier.size()));
  std::vector<bool> seen(g.carrier.size(), false);
  for (const auto& [key, value] : s.items()) {
    const std::size_t x = lookup(g.carrier, key);
    g.successors[x] = subset_from_json(value, g.carrier, "successors of '" + key + "'");
    seen[x] = true;
  }
  for (std::size_t x = 0; x < seen.size(); ++x)
    if (!seen[x]) throw InvalidInput("no successors given for '" + g.carrier.label(x) + "'");
  return g;
}

Valuation valuation_from_json(const json& j, const FinPoset& carrier) {
  if (!j.is_object()) throw InvalidInput("a valuation maps variable names to element lists");
  Valuation v;
  for (const auto& [key, value] : j.items()) v[key] = subset_from_json(value, carrier, "valuation of '" + key + "'");
  return v;
}

std::string hasse_dot(const FinPoset& x, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << dot_quote(name) << " {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  for (std::size_t i = 0; i < x.size(); ++i) out << "  n" << i << " [label=" << dot_quote(x.label(i)) << "];\n";
  for (auto [a, b] : x.covers()) out << "  n" << a << " -> n" << b << " [arrowhead=none];\n";
  out << "}\n";
  return out.str();
}

}  // namespace pcl
