#pragma once

#include <cstdint>
#include <random>

#include "hspec/hypergraph.hpp"
#include "hspec/tensor.hpp"

namespace hspec {

/// Deterministic source for the randomized property checks. Draws are
/// derived from raw 64-bit output, so streams match across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Integer in [lo, hi].
  int integer(int lo, int hi) {
    return lo + static_cast<int>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  bool coin() { return (engine_() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

/// Symmetric tensor with each orbit present with probability `density`
/// and values uniform in [-1, 1] (or [0, 1] when `nonnegative`).
SymmetricTensor random_tensor(Rng& rng, int order, int dim, double density, bool nonnegative,
                              bool zero_diagonal);

/// Random unit-free vector with entries uniform in [-1, 1].
Vector random_vector(Rng& rng, int dim);

/// Nonempty proper subset of [0, n).
IndexSet random_proper_subset(Rng& rng, int n);

/// Connected k-uniform hypergraph on n vertices: a random spanning chain of
/// edges plus `extra` random edges.
Hypergraph random_connected_hypergraph(Rng& rng, int k, int n, int extra);

/// Connected odd-bipartite k-uniform hypergraph (k even): every edge meets a
/// hidden vertex class in an odd number of vertices.
Hypergraph random_odd_bipartite(Rng& rng, int k, int n, int edges);

}  // namespace hspec
