#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hspec/eigensolve.hpp"
#include "hspec/hypergraph.hpp"
#include "hspec/tensor.hpp"

namespace hspec {

/// Sample instances used by the fixture table, the CLI and the tests.
namespace samples {
SymmetricTensor quartic_mixed();     ///< order 4, dim 3, mixed signs
SymmetricTensor cubic_mixed();       ///< order 3, dim 5, one negative orbit
SymmetricTensor cubic_nonneg();      ///< order 3, dim 3, nonnegative
SymmetricTensor cubic_equal_rows();  ///< order 3, dim 3, all row sums 1
SymmetricTensor quartic_least();     ///< order 4, dim 3, for least eigenvalues
Hypergraph g4_three_edges();         ///< 4-uniform on 6 vertices, 3 edges
Hypergraph g4_four_edges();          ///< g4_three_edges plus {1,2,4,5}
}  // namespace samples

struct FixtureRow {
  std::string id;
  /// "value": pass iff |measured - expected| <= tolerance.
  /// "check": a yes/no property; measured carries the relevant margin.
  std::string kind;
  double expected = 0.0;
  double measured = 0.0;
  double tolerance = 0.0;
  bool pass = false;

  double deviation() const;
};

struct FixtureOptions {
  SolverConfig solver;
  /// Shift the expected value of this row by `tamper_delta` (negative control).
  std::optional<std::string> tamper;
  double tamper_delta = 0.01;
  /// Skip the randomized property suites.
  bool skip_properties = false;
};

/// Runs the full fixture table in a fixed order.
std::vector<FixtureRow> run_fixtures(const FixtureOptions& opt = {});

}  // namespace hspec
