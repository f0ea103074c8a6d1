#include <doctest.h>

#include <Eigen/Dense>

#include "hspec/eigensolve.hpp"
#include "hspec/fixtures.hpp"
#include "hspec/generators.hpp"
#include "support.hpp"

using namespace hspec;

namespace {

const double kCbrt4 = std::cbrt(4.0);  // 2^{2/3}

}  // namespace

TEST_SUITE("eigensolve") {

TEST_CASE("config validation") {
  SolverConfig cfg;
  cfg.tol = 0.0;
  CHECK_THROWS_CODE(cfg.validate(), ErrorCode::BadArgument);
  cfg = {};
  cfg.restarts = 0;
  CHECK_THROWS_CODE(extreme_h_eigen(samples::quartic_mixed(), EigenKind::Max, cfg),
                    ErrorCode::BadArgument);
}

TEST_CASE("normalize and residual") {
  Vector x = normalize_k(Vector{3, -4}, 2);
  CHECK(x[0] == doctest::Approx(0.6));
  CHECK(x[1] == doctest::Approx(-0.8));
  CHECK_THROWS_CODE(normalize_k(Vector{0, 0}, 4), ErrorCode::BadArgument);
  Vector y{0.1, -0.9, 0.3};
  sign_normalize(y);
  CHECK(y[1] == doctest::Approx(0.9));

  SymmetricTensor t = adjacency_tensor(complete_graph(2));
  Vector u = normalize_k(Vector{1, 1}, 2);
  CHECK(eigen_residual(t, 1.0, u) <= 1e-15);
  CHECK(eigen_residual(t, 2.0, u) == doctest::Approx(std::sqrt(0.5)));
}

TEST_CASE("spectral radius of nonnegative tensors") {
  EigenPair c6 = hyper_rho(hypercycle3(3));
  CHECK(c6.value == doctest::Approx(kCbrt4).epsilon(1e-9));
  CHECK(c6.claim == GlobalClaim::Bracket);
  REQUIRE(c6.bracket.has_value());
  CHECK(c6.bracket->lower <= c6.value + 1e-12);
  CHECK(c6.bracket->upper >= c6.value - 1e-12);
  CHECK(c6.bracket->upper - c6.bracket->lower <= 1e-8);
  for (double v : c6.vector) CHECK(v > 0.0);

  for (int n = 2; n <= 6; ++n) {
    CHECK(hyper_rho(complete_graph(n)).value == doctest::Approx(n - 1).epsilon(1e-9));
  }
  // A single 3-edge has rho = 1 with the uniform vector.
  EigenPair e = hyper_rho(Hypergraph(3, 3, {{0, 1, 2}}));
  CHECK(e.value == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(e.vector[0] == doctest::Approx(std::cbrt(1.0 / 3)).epsilon(1e-8));

  // Reducible: the larger block wins and the vector vanishes elsewhere.
  Hypergraph two(2, 5, {{0, 1}, {2, 3}, {3, 4}, {2, 4}});
  EigenPair r = hyper_rho(two);
  CHECK(r.value == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(r.vector[0] == 0.0);

  // Fano plane is 3-regular, so rho = degree.
  CHECK(hyper_rho(fano_plane()).value == doctest::Approx(3.0).epsilon(1e-9));
  CHECK(spectral_radius_nonneg(SymmetricTensor(3, 2)).value == 0.0);
  CHECK_THROWS_CODE(spectral_radius_nonneg(samples::quartic_mixed()), ErrorCode::NegativeEntry);
}

TEST_CASE("extreme eigenvalues of the sample tensors") {
  EigenPair mx = extreme_h_eigen(samples::quartic_mixed(), EigenKind::Max);
  CHECK(std::abs(mx.value - 2.4043) <= 1e-3);
  CHECK(mx.residual <= 1e-8);
  EigenPair mn = extreme_h_eigen(samples::quartic_least(), EigenKind::Min);
  CHECK(std::abs(mn.value - (-9.9307)) <= 1e-3);
  CHECK(mn.residual <= 1e-8);
  EigenPair odd = extreme_h_eigen(samples::cubic_mixed(), EigenKind::Max);
  CHECK(std::abs(odd.value - 0.6894) <= 1e-3);
  for (double v : odd.vector) CHECK(v >= 0.0);
  CHECK(odd.claim == GlobalClaim::Heuristic);
  CHECK_THROWS_CODE(extreme_h_eigen(samples::cubic_mixed(), EigenKind::Min), ErrorCode::OddOrder);
  CHECK_THROWS_CODE(hyper_lambda_min(fano_plane()), ErrorCode::OddOrder);

  EigenPair z = extreme_h_eigen(SymmetricTensor(4, 3), EigenKind::Max);
  CHECK(z.value == 0.0);
  CHECK(z.residual == 0.0);
}

TEST_CASE("matrix case agrees with a dense symmetric eigensolver") {
  // k = 2: H-eigenvalues are ordinary eigenvalues.
  Rng rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    int n = rng.integer(2, 5);
    SymmetricTensor t = random_tensor(rng, 2, n, 1.0, false, false);
    Eigen::MatrixXd a(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) a(i, j) = t.entry(std::vector<Index>{Index(i), Index(j)});
    }
    Eigen::VectorXd ev = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(a).eigenvalues();
    double lo = ev.minCoeff(), hi = ev.maxCoeff();
    CHECK(extreme_h_eigen(t, EigenKind::Max).value == doctest::Approx(hi).epsilon(1e-8));
    CHECK(extreme_h_eigen(t, EigenKind::Min).value == doctest::Approx(lo).epsilon(1e-8));
  }
}

TEST_CASE("scaling and negation") {
  SymmetricTensor t = samples::quartic_mixed();
  double mx = extreme_h_eigen(t, EigenKind::Max).value;
  double mn = extreme_h_eigen(t, EigenKind::Min).value;
  CHECK(extreme_h_eigen(t.scaled(2.5), EigenKind::Max).value ==
        doctest::Approx(2.5 * mx).epsilon(1e-9));
  CHECK(extreme_h_eigen(t.scaled(-1.0), EigenKind::Max).value ==
        doctest::Approx(-mn).epsilon(1e-9));
}

TEST_CASE("every unit vector lies between the extremes") {
  Rng rng(57);
  for (int trial = 0; trial < 8; ++trial) {
    int n = rng.integer(2, 4);
    SymmetricTensor t = random_tensor(rng, 4, n, 0.7, false, false);
    double mx = extreme_h_eigen(t, EigenKind::Max).value;
    double mn = extreme_h_eigen(t, EigenKind::Min).value;
    for (int s = 0; s < 50; ++s) {
      Vector x = normalize_k(random_vector(rng, n), 4);
      double f = t.form(x);
      CHECK(f <= mx + 1e-9);
      CHECK(f >= mn - 1e-9);
    }
  }
}

TEST_CASE("removing an edge never raises rho") {
  Rng rng(61);
  for (int trial = 0; trial < 8; ++trial) {
    Hypergraph g = random_connected_hypergraph(rng, 3, 7, 3);
    double rho = hyper_rho(g).value;
    for (const auto& e : g.edges()) {
      double sub = hyper_rho(remove_edges(g, std::vector<Edge>{e})).value;
      CHECK(sub <= rho + 1e-9);
    }
  }
}

TEST_CASE("odd-bipartite hypergraphs have symmetric spectrum ends") {
  Rng rng(67);
  for (int trial = 0; trial < 5; ++trial) {
    Hypergraph g = random_odd_bipartite(rng, 4, 7, 4);
    double rho = hyper_rho(g).value;
    EigenPair lm = hyper_lambda_min(g);
    CHECK(lm.value == doctest::Approx(-rho).epsilon(1e-9));
  }
}

TEST_CASE("stationary pairs are sorted and all certified") {
  SolverConfig cfg;
  cfg.restarts = 8;
  auto pairs = stationary_pairs_even(samples::quartic_mixed(), EigenKind::Max, cfg);
  REQUIRE_FALSE(pairs.empty());
  for (std::size_t i = 1; i < pairs.size(); ++i) CHECK(pairs[i - 1].value >= pairs[i].value - 1e-8);
  for (const auto& p : pairs) CHECK(p.residual <= 1e-8);
}

TEST_CASE("seeded runs are reproducible") {
  SolverConfig cfg;
  cfg.seed = 12345;
  EigenPair a = extreme_h_eigen(samples::quartic_least(), EigenKind::Min, cfg);
  EigenPair b = extreme_h_eigen(samples::quartic_least(), EigenKind::Min, cfg);
  CHECK(a.value == b.value);
  CHECK(a.vector == b.vector);
  CHECK(a.iterations == b.iterations);
}

}  // TEST_SUITE
