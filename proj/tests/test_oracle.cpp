#include <doctest.h>

#include "hspec/fixtures.hpp"
#include "hspec/generators.hpp"
#include "hspec/oracle.hpp"
#include "support.hpp"

using namespace hspec;

TEST_SUITE("oracle") {

TEST_CASE("argument checks") {
  CHECK_THROWS_CODE(enumerate_h_eigenpairs(SymmetricTensor(3, 6)), ErrorCode::DimensionTooLarge);
  CHECK_THROWS_CODE(enumerate_h_eigenpairs(samples::quartic_mixed(), 16), ErrorCode::BadArgument);
}

TEST_CASE("one dimension") {
  SymmetricTensor t = SymmetricTensor::build(3, 1, std::vector<TensorEntry>{{{0, 0, 0}, 2.5}});
  OracleResult o = enumerate_h_eigenpairs(t);
  REQUIRE(o.pairs.size() == 1);
  CHECK(o.pairs[0].value == doctest::Approx(2.5));
  CHECK(o.certified);
}

TEST_CASE("diagonal quartic") {
  // T x^3 = (a x1^3, b x2^3, c x3^3): distinct diagonal values are the only eigenvalues.
  SymmetricTensor t = SymmetricTensor::build(
      4, 3,
      std::vector<TensorEntry>{{{0, 0, 0, 0}, 2.0}, {{1, 1, 1, 1}, 3.0}, {{2, 2, 2, 2}, -1.0}});
  OracleResult o = enumerate_h_eigenpairs(t);
  CHECK(o.certified);
  CHECK(o.pairs.size() == 3);
  std::vector<double> values;
  for (const auto& p : o.pairs) values.push_back(p.value);
  REQUIRE(values.size() == 3);
  CHECK(values[0] == doctest::Approx(-1.0));
  CHECK(values[1] == doctest::Approx(2.0));
  CHECK(values[2] == doctest::Approx(3.0));
}

TEST_CASE("cubic with a single mixed orbit") {
  // (2 x1 x2, x1^2) = lambda (x1^2, x2^2): lambda^3 = 4 when x1 != 0, else lambda = 0.
  SymmetricTensor t = SymmetricTensor::build(3, 2, std::vector<TensorEntry>{{{0, 0, 1}, 1.0}});
  OracleResult o = enumerate_h_eigenpairs(t);
  CHECK(o.certified);
  for (const auto& p : o.pairs) CHECK(eigen_residual(t, p.value, p.vector) <= 1e-8);
  CHECK(o.max_value() == doctest::Approx(std::cbrt(4.0)).epsilon(1e-9));
  CHECK(o.min_value() == doctest::Approx(0.0));
}

TEST_CASE("agrees with the solver on the quartic sample") {
  SymmetricTensor t = samples::quartic_mixed();
  OracleResult o = enumerate_h_eigenpairs(t);
  CHECK(o.certified);
  EigenPair mx = extreme_h_eigen(t, EigenKind::Max);
  EigenPair mn = extreme_h_eigen(t, EigenKind::Min);
  CHECK(o.max_value() == doctest::Approx(mx.value).epsilon(1e-8));
  CHECK(o.min_value() == doctest::Approx(mn.value).epsilon(1e-8));
  CHECK(oracle_contains(o, mx));
  for (std::size_t i = 1; i < o.pairs.size(); ++i) CHECK(o.pairs[i - 1].value <= o.pairs[i].value);

  EigenPair p = mx;
  CHECK(verify_with_oracle(t, p));
  CHECK(p.claim == GlobalClaim::Verified);
}

TEST_CASE("random small tensors: solver extremes are oracle extremes") {
  Rng rng(71);
  for (int trial = 0; trial < 5; ++trial) {
    SymmetricTensor t = random_tensor(rng, 4, 3, 0.8, false, false);
    OracleResult o = enumerate_h_eigenpairs(t);
    if (!o.certified) continue;
    CHECK(extreme_h_eigen(t, EigenKind::Max).value ==
          doctest::Approx(o.max_value()).epsilon(1e-7));
    CHECK(extreme_h_eigen(t, EigenKind::Min).value ==
          doctest::Approx(o.min_value()).epsilon(1e-7));
  }
}

TEST_CASE("closed forms for hypercycles and hyperpaths") {
  auto rows = verify_closed_forms();
  CHECK(rows.size() == 20);
  for (const auto& r : rows) CHECK_MESSAGE(r.pass, r.name << ": " << r.measured);
}

}  // TEST_SUITE
