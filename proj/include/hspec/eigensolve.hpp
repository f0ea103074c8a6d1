#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "hspec/hypergraph.hpp"
#include "hspec/tensor.hpp"

namespace hspec {

enum class EigenKind { Max, Min, Rho };

/// How much is known about global extremality of a returned value.
enum class GlobalClaim {
  Heuristic,  ///< best of a multi-start local search
  Bracket,    ///< Collatz-Wielandt bracket on a nonnegative tensor
  Verified,   ///< matched against an oracle enumeration at certified resolution
};

std::string_view to_string(EigenKind kind);
std::string_view to_string(GlobalClaim claim);

struct ShiftPolicy {
  bool automatic = true;
  double alpha = 0.0;  ///< used when !automatic

  static ShiftPolicy fixed(double a) { return {false, a}; }
};

struct SolverConfig {
  double tol = 1e-10;
  long max_iter = 100000;
  int restarts = 16;
  std::uint64_t seed = 0;
  ShiftPolicy shift;

  /// Throws BadArgument unless tol > 0, max_iter >= 1, restarts >= 1.
  void validate() const;
};

struct Bracket {
  double lower = 0.0;
  double upper = 0.0;
};

/// H-eigenpair (value, unit vector in the k-norm) with its residual
/// certificate max_i |(T x^{k-1})_i - value * x_i^{k-1}|.
struct EigenPair {
  double value = 0.0;
  Vector vector;
  double residual = 0.0;
  EigenKind kind = EigenKind::Max;
  long iterations = 0;
  GlobalClaim claim = GlobalClaim::Heuristic;
  std::optional<Bracket> bracket;
};

/// max_i |(T x^{k-1})_i - lambda x_i^{k-1}|.
double eigen_residual(const SymmetricTensor& t, double lambda, std::span<const double> x);
/// x scaled to unit k-norm. Throws BadArgument for the zero vector.
Vector normalize_k(std::span<const double> x, int k);
/// For even k, flips x so its largest-magnitude entry (first on ties) is positive.
void sign_normalize(Vector& x);

/// rho(T) of a nonnegative tensor by shifted power iteration on each weakly
/// irreducible block, tracking the Collatz-Wielandt bracket.
EigenPair spectral_radius_nonneg(const SymmetricTensor& t, const SolverConfig& cfg = {});

/// lambda_max / lambda_min of an even-order symmetric tensor by multi-start
/// shifted fixed-point ascent on T x^k over the unit k-sphere.
EigenPair extreme_h_eigen_even(const SymmetricTensor& t, EigenKind which,
                               const SolverConfig& cfg = {});

/// Every converged restart of extreme_h_eigen_even, best first.
std::vector<EigenPair> stationary_pairs_even(const SymmetricTensor& t, EigenKind which,
                                             const SolverConfig& cfg = {});

/// Largest H-eigenvalue with a nonnegative eigenvector for an arbitrary
/// symmetric tensor (used for odd order with mixed signs): projected ascent of
/// T x^k over the nonnegative part of the unit sphere. The result is a
/// certified H-eigenpair; global maximality is heuristic.
EigenPair largest_h_eigen_orthant(const SymmetricTensor& t, const SolverConfig& cfg = {});

/// Dispatch on order and sign pattern: even k -> extreme_h_eigen_even;
/// nonnegative -> spectral_radius_nonneg (Max/Rho); odd k with mixed signs ->
/// largest_h_eigen_orthant (Max only). Odd-order Min throws OddOrder.
EigenPair extreme_h_eigen(const SymmetricTensor& t, EigenKind which,
                          const SolverConfig& cfg = {});

EigenPair hyper_rho(const Hypergraph& g, const SolverConfig& cfg = {});
/// Least H-eigenvalue lambda(G); needs even uniformity.
EigenPair hyper_lambda_min(const Hypergraph& g, const SolverConfig& cfg = {});

}  // namespace hspec
