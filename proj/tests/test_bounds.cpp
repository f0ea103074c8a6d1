#include <doctest.h>

#include "hspec/bounds.hpp"
#include "hspec/fixtures.hpp"
#include "hspec/generators.hpp"
#include "support.hpp"

using namespace hspec;

TEST_SUITE("bounds") {

TEST_CASE("report bookkeeping") {
  BoundReport r;
  r.lower = 1.0;
  r.upper = 2.0;
  CHECK(r.sandwich_holds());
  r.set_actual(1.5);
  CHECK(*r.slack_lower == doctest::Approx(0.5));
  CHECK(*r.slack_upper == doctest::Approx(0.5));
  r.set_actual(2.1);
  CHECK_FALSE(r.sandwich_holds());
  r.invalidate("a");
  r.invalidate("b");
  CHECK_FALSE(r.valid);
  CHECK(r.reason == "a,b");
}

TEST_CASE("tensor interlacing on the quartic sample") {
  SymmetricTensor t = samples::quartic_mixed();
  IndexSet keep({1, 2});
  EigenPair p = extreme_h_eigen(t, EigenKind::Max);
  BoundReport r = subtensor_lmax_bounds(t, keep, p);
  r.set_actual(extreme_h_eigen(principal_subtensor(t, keep).tensor, EigenKind::Max).value);
  CHECK(r.valid);
  CHECK(r.sandwich_holds());
  CHECK(*r.upper == doctest::Approx(p.value));

  // The lower bound is T x^k - T_I x^k rewritten; check it against the raw forms.
  SymmetricTensor ti = embed_restriction(t, keep);
  double raw = ti.form(p.vector);
  CHECK(*r.lower == doctest::Approx(raw).epsilon(1e-10));

  EigenPair bogus = p;
  bogus.value += 0.5;
  CHECK(subtensor_lmax_bounds(t, keep, bogus).reason == "not_an_eigenpair");
  CHECK_THROWS_CODE(subtensor_lmax_bounds(t, IndexSet(), p), ErrorCode::EmptyIndexSet);
  CHECK_THROWS_CODE(subtensor_lmax_bounds(t, IndexSet({3}), p), ErrorCode::IndexOutOfRange);
}

TEST_CASE("odd order with negative entries is flagged") {
  SymmetricTensor t = samples::cubic_mixed();
  EigenPair p = extreme_h_eigen(t, EigenKind::Max);
  BoundReport r = subtensor_lmax_bounds(t, IndexSet({0, 1, 3}), p);
  CHECK_FALSE(r.valid);
  CHECK(r.reason == "regime_unsupported");
  CHECK(r.lower.has_value());
  CHECK_THROWS_CODE(lmin_subtensor_bounds(t, IndexSet({0}), p), ErrorCode::OddOrder);
}

TEST_CASE("equal row sums") {
  SymmetricTensor t = samples::cubic_equal_rows();
  BoundReport r = equal_row_sum_ratio_lower(t, IndexSet({0, 1}));
  CHECK(r.valid);
  CHECK(*r.lower == doctest::Approx(0.5).epsilon(1e-12));
  double sub = spectral_radius_nonneg(principal_subtensor(t, IndexSet({0, 1})).tensor).value;
  CHECK(sub >= *r.lower);
  CHECK_FALSE(equal_row_sum_ratio_lower(samples::cubic_nonneg(), IndexSet({0})).valid);
}

TEST_CASE("ratio bound matches equal-row-sum form with the uniform vector") {
  SymmetricTensor t = samples::cubic_equal_rows();
  EigenPair p = spectral_radius_nonneg(t);
  CHECK(p.value == doctest::Approx(1.0).epsilon(1e-10));
  for (Index drop = 0; drop < 3; ++drop) {
    IndexSet keep = IndexSet({drop}).complement(3);
    BoundReport a = subtensor_rho_ratio_bound(t, keep, p);
    BoundReport b = equal_row_sum_ratio_lower(t, keep);
    CHECK(*a.lower == doctest::Approx(*b.lower).epsilon(1e-8));
    CHECK(a.flags.at("strict"));
  }
}

TEST_CASE("hypergraph vertex removal specializes the tensor bound") {
  Rng rng(83);
  for (int trial = 0; trial < 15; ++trial) {
    int k = rng.integer(2, 4);
    int n = rng.integer(k + 1, 7);
    Hypergraph g = random_connected_hypergraph(rng, k, n, rng.integer(0, 4));
    IndexSet removed = random_proper_subset(rng, n);
    EigenPair p = hyper_rho(g);
    BoundReport hg = vertex_set_removal_bounds(g, removed, p);
    BoundReport tb = subtensor_lmax_bounds(adjacency_tensor(g), removed.complement(n), p);
    CHECK(hg.details.at("lower1") == doctest::Approx(*tb.lower).epsilon(1e-10));
    hg.set_actual(hyper_rho(remove_vertices(g, removed).graph).value);
    CHECK(hg.sandwich_holds());
  }
}

TEST_CASE("second vertex-set lower bound keeps the overlap term outside the factor") {
  // K_3 minus two vertices leaves one isolated vertex with rho = 0.
  Hypergraph k3 = complete_graph(3);
  EigenPair p = hyper_rho(k3);
  BoundReport r = vertex_set_removal_bounds(k3, IndexSet({0, 1}), p);
  r.set_actual(0.0);
  CHECK(r.sandwich_holds());
  // The fully factored form would be rho (1 - 2 m + 2 s_2) / (1 - m) with m = 2/3.
  double m = 2.0 / 3, s2 = 1.0 / 3;
  double factored = 2.0 * (1 - 2 * m + 2 * s2) / (1 - m);
  CHECK(factored > 0.0);
  CHECK(r.details.at("lower2") <= 1e-12);
}

TEST_CASE("linear removal is tight on complete graphs") {
  for (int n = 3; n <= 6; ++n) {
    Hypergraph g = complete_graph(n);
    BoundReport r = linear_vertex_removal_bound(g, 0, n - 1.0);
    CHECK(r.valid);
    CHECK(*r.lower == doctest::Approx(n - 2.0).epsilon(1e-12));
    CHECK(r.flags.at("universal_vertex"));
    CHECK(r.flags.at("remainder_regular"));
  }
  Hypergraph overlap(3, 4, {{0, 1, 2}, {0, 1, 3}});
  CHECK_FALSE(linear_vertex_removal_bound(overlap, 0, 1.0).valid);
}

TEST_CASE("gamma on a single edge and on Steiner systems") {
  BoundReport e = gamma_bounds(Hypergraph(3, 3, {{0, 1, 2}}));
  CHECK(e.details.at("rho") == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(e.details.at("gamma") == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(e.flags.at("equality_rho_minus_one"));

  BoundReport f = gamma_bounds(fano_plane());
  CHECK(f.valid);
  CHECK(f.flags.at("steiner"));
  CHECK(f.flags.at("steiner_agrees"));
  CHECK(f.sandwich_holds());

  BoundReport c = gamma_bounds(hypercycle3(3));
  CHECK_FALSE(c.flags.at("steiner"));
  CHECK(c.flags.at("steiner_agrees"));
}

TEST_CASE("equality witness root") {
  CHECK(equality_witness_rho(1.0, 0.0, 3) == doctest::Approx(1.0).epsilon(1e-14));
  for (int k = 2; k <= 5; ++k) {
    double t = equality_witness_rho(3.0, 2.0, k);
    CHECK(t > 2.0);
    CHECK(t * std::pow(t - 2.0, k - 1) == doctest::Approx(3.0).epsilon(1e-12));
  }
  // k = 2: t (t - r) = d is a quadratic.
  double r = 1.5, d = 4.0;
  CHECK(equality_witness_rho(d, r, 2) == doctest::Approx((r + std::sqrt(r * r + 4 * d)) / 2));
}

TEST_CASE("perron entry bound") {
  Rng rng(89);
  for (int trial = 0; trial < 10; ++trial) {
    Hypergraph g = random_connected_hypergraph(rng, 3, 7, 3);
    EigenPair p = hyper_rho(g);
    for (Index v = 0; v < 7; ++v) {
      BoundReport r = perron_entry_bounds(g, IndexSet({v}), p);
      CHECK(r.valid);
      CHECK(r.sandwich_holds(1e-9));
      CHECK(r.details.at("entry_margin") >= -1e-9);
    }
  }
}

TEST_CASE("edge removal sandwiches") {
  Rng rng(97);
  for (int trial = 0; trial < 10; ++trial) {
    Hypergraph g = random_odd_bipartite(rng, 4, 7, 5);
    EdgeList f{g.edges()[rng.integer(0, static_cast<int>(g.edge_count()) - 1)]};
    Hypergraph h = remove_edges(g, f);
    BoundReport up = edge_removal_rho_bounds(g, f, hyper_rho(g), hyper_rho(h));
    CHECK(up.sandwich_holds(1e-8));
    BoundReport lo = lmin_edge_removal_bounds(g, f, hyper_lambda_min(g), hyper_lambda_min(h));
    CHECK(lo.sandwich_holds(1e-7));
  }
  Hypergraph g = samples::g4_four_edges();
  BoundReport none = edge_removal_rho_bounds(g, {}, hyper_rho(g), hyper_rho(g));
  CHECK(*none.lower == doctest::Approx(*none.upper));
}

TEST_CASE("least-eigenvalue vertex removal") {
  Hypergraph g = samples::g4_three_edges();
  EigenPair p = hyper_lambda_min(g);
  IndexSet removed({4, 5});
  BoundReport r = lmin_vertex_removal_bounds(g, removed, p);
  r.set_actual(hyper_lambda_min(remove_vertices(g, removed).graph).value);
  CHECK(r.sandwich_holds(1e-6));
  CHECK(*r.actual == doctest::Approx(-1.0).epsilon(1e-8));
  CHECK(r.details.at("upper2") ==
        doctest::Approx(r.details.at("upper1") / (1 - r.details.at("removed_mass"))));
  CHECK_THROWS_CODE(lmin_vertex_removal_bounds(fano_plane(), IndexSet({0}), hyper_rho(fano_plane())),
                    ErrorCode::OddOrder);
}

TEST_CASE("least-eigenvalue subtensor bounds on random even tensors") {
  Rng rng(101);
  for (int trial = 0; trial < 10; ++trial) {
    int n = rng.integer(2, 4);
    SymmetricTensor t = random_tensor(rng, 4, n, 0.8, false, true);
    IndexSet keep = random_proper_subset(rng, n);
    BoundReport r = lmin_subtensor_bounds(t, keep, extreme_h_eigen(t, EigenKind::Min));
    r.set_actual(extreme_h_eigen(principal_subtensor(t, keep).tensor, EigenKind::Min).value);
    if (r.valid) CHECK(r.sandwich_holds(1e-7));

    BoundReport m = subtensor_lmax_bounds(t, keep, extreme_h_eigen(t, EigenKind::Max));
    m.set_actual(extreme_h_eigen(principal_subtensor(t, keep).tensor, EigenKind::Max).value);
    CHECK(m.sandwich_holds(1e-7));
  }
}

TEST_CASE("least vector entry and cmax") {
  Hypergraph g = samples::g4_three_edges();
  EigenPair p = hyper_lambda_min(g);
  for (Index v = 0; v < 6; ++v) {
    BoundReport r = least_vector_entry_bound(g, v, p);
    if (r.valid) CHECK(r.sandwich_holds(1e-8));
  }
  BoundReport c = cmax_bounds(g);
  CHECK(c.sandwich_holds(1e-8));
}

}  // TEST_SUITE
