#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hspec/eigensolve.hpp"
#include "hspec/hypergraph.hpp"
#include "hspec/tensor.hpp"

namespace hspec {

/// Outcome of one interlacing / perturbation bound.
///
/// When a hypothesis of the bound fails (odd order with negative entries, a
/// disconnected or non-linear hypergraph, zero mass on the kept set, ...)
/// the numbers are still filled where they make sense, but `valid` is false
/// and `reason` names the failed hypothesis. Malformed arguments (wrong
/// dimension, empty or out-of-range index sets, unknown edges) throw.
struct BoundReport {
  std::string name;
  std::optional<double> lower;
  std::optional<double> upper;
  std::optional<double> actual;
  std::optional<double> slack_lower;  ///< actual - lower
  std::optional<double> slack_upper;  ///< upper - actual
  bool valid = true;
  std::string reason;
  std::optional<std::string> equality_hint;
  /// Named intermediate terms (lower1, lower2, gamma, ...), sorted by name.
  std::map<std::string, double> details;
  /// Named boolean diagnostics (strict, steiner, equality_at_v, ...).
  std::map<std::string, bool> flags;

  /// Records the bounded quantity and the two slacks.
  void set_actual(double value);
  void invalidate(std::string why);
  /// lower <= actual + tol and actual <= upper + tol (true when actual is unset).
  bool sandwich_holds(double tol = 1e-8) const;
};

/// Removed-edge list: every edge must be a sorted, existing edge of the graph.
using EdgeList = std::vector<Edge>;

// Tensor bounds. `keep` is the KEPT index set I of T[I].

/// lambda_max(T[I]) >= lambda(1 - k sum_{i notin I} x_i^k) - mixed_correction,
/// upper = lambda_max(T). Needs k even or T nonnegative.
BoundReport subtensor_lmax_bounds(const SymmetricTensor& t, const IndexSet& keep,
                                  const EigenPair& pair);

/// Same numerator divided by the mass sum_{i in I} x_i^k; T nonnegative.
/// flags["strict"] is set when T is weakly irreducible.
BoundReport subtensor_rho_ratio_bound(const SymmetricTensor& t, const IndexSet& keep,
                                      const EigenPair& pair);

/// The ratio bound with the uniform Perron vector of an equal-row-sum tensor:
/// [r(n - k(n-|I|)) - mixed_correction(ones)] / |I|.
BoundReport equal_row_sum_ratio_lower(const SymmetricTensor& t, const IndexSet& keep);

/// lambda_min(T) <= lambda_min(T[I]) <= upper1, upper2 (k even).
BoundReport lmin_subtensor_bounds(const SymmetricTensor& t, const IndexSet& keep,
                                  const EigenPair& pair);

// Hypergraph bounds. `removed` is the REMOVED vertex set I of G - I.

/// rho(G - I) >= rho(1 - k sum_{i in I} x_i^k) + k sum_j (j-1) s_j  (lower1)
/// and the same numerator over 1 - sum_{i in I} x_i^k (lower2).
BoundReport vertex_set_removal_bounds(const Hypergraph& g, const IndexSet& removed,
                                      const EigenPair& pair);
/// Single-vertex case with the "restriction is an eigenvector" equality test.
BoundReport vertex_removal_bounds(const Hypergraph& g, Index v, const EigenPair& pair);
/// sum_{i in I} x_i^k <= 1/k + (1/rho) sum_j (j-1) s_j; for a single vertex
/// also x_v <= (1/k)^{1/k}.
BoundReport perron_entry_bounds(const Hypergraph& g, const IndexSet& set,
                                const EigenPair& pair);
/// rho(G - v) >= rho - (d_v / rho)^{1/(k-1)} for connected linear G.
BoundReport linear_vertex_removal_bound(const Hypergraph& g, Index v, double rho);
/// gamma(G) = max_v rho(G - v) against rho - (delta/rho)^{1/(k-1)} >= rho - 1.
/// Solves rho(G) and every rho(G - v).
BoundReport gamma_bounds(const Hypergraph& g, const SolverConfig& cfg = {});
/// rho(G) - k sum_F x^e <= rho(G - F) <= rho(G) - k sum_F y^e.
BoundReport edge_removal_rho_bounds(const Hypergraph& g, const EdgeList& removed,
                                    const EigenPair& pair_g, const EigenPair& pair_gf);
/// lambda(G) <= lambda(G - I) <= upper1, upper2 (k even).
BoundReport lmin_vertex_removal_bounds(const Hypergraph& g, const IndexSet& removed,
                                       const EigenPair& pair);
/// lambda(G) - k sum_F y^e <= lambda(G - F) <= lambda(G) - k sum_F x^e (k even).
BoundReport lmin_edge_removal_bounds(const Hypergraph& g, const EdgeList& removed,
                                     const EigenPair& pair_g, const EigenPair& pair_gf);
/// x_i^k <= d_i / (d_i + (k-1) L) with L = (lambda^k)^{1/(k-1)} (k even, G linear).
BoundReport least_vector_entry_bound(const Hypergraph& g, Index i, const EigenPair& pair);
/// Bounds on c_max, the largest entry over least eigenvectors. The measured
/// value is the best over solver restarts, so it is a heuristic estimate.
BoundReport cmax_bounds(const Hypergraph& g, const SolverConfig& cfg = {});

/// Largest real root t > r of t (t - r)^{k-1} = d.
double equality_witness_rho(double d, double r, int k);

}  // namespace hspec
