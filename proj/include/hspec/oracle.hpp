#pragma once

#include <string>
#include <vector>

#include "hspec/eigensolve.hpp"

namespace hspec {

/// Real H-eigenpairs found by multi-seed Newton on the polynomial eigen-system.
struct OracleResult {
  std::vector<EigenPair> pairs;  ///< sorted by (value, vector), sign-normalized
  bool certified = false;        ///< doubling the grid found no new eigenvalue
  int grid_resolution = 0;

  double max_value() const;
  double min_value() const;
};

/// Seeds Newton's method from a grid of unit directions (resolution points
/// per angular coordinate over a half-sphere; x and -x share an eigenvalue)
/// and keeps every converged real solution with residual <= 1e-8.
/// Needs dim <= 5 and resolution >= 32.
OracleResult enumerate_h_eigenpairs(const SymmetricTensor& t, int resolution = 32);

/// True when `pair` appears in the oracle list up to sign (value within
/// 1e-6, vector distance within `vector_tol`).
bool oracle_contains(const OracleResult& oracle, const EigenPair& pair,
                     double vector_tol = 1e-4);

/// Upgrades pair.claim to Verified when the oracle is certified and the
/// pair's value is the oracle's extreme of the pair's kind within 1e-6.
bool verify_with_oracle(const SymmetricTensor& t, EigenPair& pair, int resolution = 32);

struct ClosedFormRow {
  std::string name;
  double expected = 0.0;
  double measured = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// Hypercycle C_{2n}^3 and hyperpath P_{2n-1}^3 for n = 3..6 against
/// rho(C) = 2^{2/3}, rho(P) = 2^{2/3} cos^{2/3}(pi/(n+1)), and the explicit
/// hypercycle eigenvector checked directly in the eigen-equation.
std::vector<ClosedFormRow> verify_closed_forms(const SolverConfig& cfg = {});

}  // namespace hspec
