#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "pcl/alg.hpp"
#include "pcl/order.hpp"
#include "pcl/semantics.hpp"

namespace pcl {

using json = nlohmann::json;

/// Parses a file; malformed JSON or an unreadable file is InvalidInput.
json read_json_file(const std::string& path);

/// {"elements": ["p","q"], "leq": [["p","q"]]}; reflexive and transitive
/// pairs may be omitted. Output lists the cover pairs only.
FinPoset poset_from_json(const json& j);
json poset_to_json(const FinPoset& x);

/// {"type":"dl","spectrum":<poset>}, {"type":"ba","atoms":[...]} or
/// {"type":"lattice","order":<poset>} for a lattice given by its own order.
struct LatticeInput {
  std::string type;
  FinDistLattice lattice;
  std::optional<ExplicitLattice> explicit_form;
};
LatticeInput lattice_from_json(const json& j);
json lattice_to_json(const FinDistLattice& a);

/// {"carrier": <poset> or ["x","y"], "structure": {"x": ["y"], "y": []}}
KripkeCoalgebra coalgebra_from_json(const json& j);
/// {"p": ["y"], "q": []}
Valuation valuation_from_json(const json& j, const FinPoset& carrier);

/// Graphviz digraph of the Hasse diagram, edges pointing upwards.
std::string hasse_dot(const FinPoset& x, const std::string& name = "hasse");

}  // namespace pcl
