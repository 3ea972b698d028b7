#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pcl {

/// Malformed input: bad JSON, an order that is not antisymmetric, an
/// unknown functor name, a non-upset valuation, ...
class InvalidInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An enumeration would exceed its configured budget. This says nothing
/// about the validity of the input, only that the computation is refused.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A construction produced a value that violates one of its own
/// invariants (non-lattice inserter, unsaturated image, ...). Always a bug
/// or a counterexample worth reporting.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Enumeration limits. All enumerations consult these before allocating.
struct Budget {
  /// Largest functor-element set T(n) that may be enumerated.
  std::uint64_t max_enum = std::uint64_t{1} << 24;
  /// Largest lattice (number of elements) that may be enumerated.
  std::uint64_t max_lattice = std::uint64_t{1} << 20;
  /// Largest carrier on which a dense binary relation may be built.
  std::uint64_t max_relation = std::uint64_t{1} << 14;
  /// Largest generator set for a free Boolean algebra.
  std::size_t max_generators = 8;

  void require(bool ok, const std::string& what) const {
    if (!ok) throw BudgetExceeded(what);
  }
};

}  // namespace pcl
