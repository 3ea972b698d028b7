#pragma once

#include <string>
#include <vector>

#include "pcl/error.hpp"

namespace pcl {

/// One property check. `tag` names the property family (for example
/// "dunn-positivication"), `detail` carries the counterexample on failure.
struct Check {
  std::string suite;
  std::string tag;
  std::string description;
  bool ok = true;
  std::string detail;
};

/// Suites: order, alg, functors, posetify, positivize, semantics, all.
/// Throws InvalidInput for an unknown suite name.
std::vector<Check> run_suite(const std::string& suite, const Budget& budget = {});
std::vector<std::string> suite_names();

}  // namespace pcl
