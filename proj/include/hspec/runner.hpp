#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hspec/bounds.hpp"
#include "hspec/io.hpp"

namespace hspec {

/// Arguments for the solve-then-bound wrappers (all 0-based).
struct BoundArgs {
  std::optional<IndexSet> keep;    ///< kept indices for tensor bounds; the set for perron-entry
  std::optional<IndexSet> remove;  ///< removed vertices for hypergraph bounds
  std::optional<EdgeList> edges;   ///< removed edges
  std::optional<Index> vertex;
};

/// Every bound name accepted by run_bound, in sweep order.
const std::vector<std::string>& bound_names();

/// Solves the eigenpairs a bound needs, evaluates it, and fills `actual` by
/// solving the perturbed instance. A hypergraph may be passed to the tensor
/// bounds (its adjacency tensor is used). `name == "all"` sweeps every bound
/// whose arguments are present. Unsupported regimes come back as valid=false
/// reports; missing or malformed arguments throw BadArgument.
std::vector<BoundReport> run_bound(const std::string& name, const Instance& instance,
                                   const BoundArgs& args, const SolverConfig& cfg = {});

/// Named structural predicates of an instance ("all" lists every applicable one).
std::vector<std::pair<std::string, bool>> run_check(const std::string& name,
                                                    const Instance& instance);

}  // namespace hspec
