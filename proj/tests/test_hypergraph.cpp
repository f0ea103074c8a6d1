#include <doctest.h>

#include "hspec/fixtures.hpp"
#include "hspec/generators.hpp"
#include "hspec/hypergraph.hpp"
#include "naive.hpp"
#include "support.hpp"

using namespace hspec;

TEST_SUITE("hypergraph") {

TEST_CASE("construction") {
  Hypergraph g(3, 4, {{2, 0, 1}, {0, 1, 2}, {1, 2, 3}});
  CHECK(g.edge_count() == 2);
  CHECK(g.edges()[0] == Edge{0, 1, 2});
  CHECK(g.has_edge({1, 2, 3}));
  CHECK_FALSE(g.has_edge({0, 2, 3}));
  CHECK(g.degrees() == std::vector<int>{1, 2, 2, 1});

  CHECK_THROWS_CODE(Hypergraph(3, 4, {{0, 1, 4}}), ErrorCode::IndexOutOfRange);
  CHECK_THROWS_CODE(Hypergraph(3, 4, {{0, 1}}), ErrorCode::BadArity);
  CHECK_THROWS_CODE(Hypergraph(3, 4, {{0, 1, 1}}), ErrorCode::BadArgument);
}

TEST_CASE("adjacency tensor") {
  Hypergraph g(3, 3, {{0, 1, 2}});
  SymmetricTensor a = adjacency_tensor(g);
  CHECK(a.orbits().size() == 1);
  CHECK(a.orbits()[0].value == doctest::Approx(0.5));

  // T x^k = k sum_e x^e.
  Rng rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    int k = rng.integer(2, 4);
    int n = rng.integer(k + 1, 7);
    Hypergraph h = random_connected_hypergraph(rng, k, n, rng.integer(0, 4));
    Vector x = random_vector(rng, n);
    double s = 0.0;
    for (const auto& e : h.edges()) s += edge_monomial(e, x);
    CHECK(adjacency_tensor(h).form(x) == doctest::Approx(k * s).epsilon(1e-12));
  }
}

TEST_CASE("named families") {
  Hypergraph c6 = hypercycle3(3);
  CHECK(c6.vertex_count() == 6);
  CHECK(c6.edge_count() == 3);
  CHECK(is_linear(c6));
  CHECK(is_connected(c6));
  CHECK_FALSE(is_regular(c6));

  Hypergraph p5 = hyperpath3(3);
  CHECK(p5.vertex_count() == 5);
  CHECK(p5.edge_count() == 2);

  Hypergraph fano = fano_plane();
  CHECK(is_steiner_2(fano));
  CHECK(is_linear(fano));
  CHECK(is_regular(fano));
  CHECK(fano.degree(0) == 3);
  CHECK(affine_plane_3().edge_count() == 12);
  CHECK(is_steiner_2(affine_plane_3()));
  CHECK(affine_plane_3().degree(4) == 4);

  Hypergraph k4 = complete_graph(4);
  CHECK(k4.edge_count() == 6);
  CHECK(is_steiner_2(k4));
  CHECK_FALSE(is_steiner_2(hypercycle3(3)));
}

TEST_CASE("hypercycle minus a degree-one vertex is a hyperpath") {
  for (int n = 3; n <= 6; ++n) {
    Hypergraph c = hypercycle3(n);
    Hypergraph p = hyperpath3(n);
    Index v = 0;
    while (c.degree(v) != 1) ++v;
    VertexRemoval r = remove_vertices(c, IndexSet({v}));
    CHECK(r.graph.vertex_count() == p.vertex_count());
    CHECK(r.graph.edge_count() == p.edge_count());
    CHECK(is_connected(r.graph));
    CHECK(is_linear(r.graph));
    auto da = r.graph.degrees(), db = p.degrees();
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    CHECK(da == db);
  }
  // A degree-two vertex takes both of its edges with it.
  Hypergraph c = hypercycle3(4);
  Index v = 0;
  while (c.degree(v) != 2) ++v;
  CHECK(remove_vertices(c, IndexSet({v})).graph.edge_count() == 2);
}

TEST_CASE("remove vertices matches the principal subtensor") {
  Rng rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    int k = rng.integer(2, 4);
    int n = rng.integer(k + 1, 7);
    Hypergraph g = random_connected_hypergraph(rng, k, n, rng.integer(0, 5));
    IndexSet removed = random_proper_subset(rng, n);
    VertexRemoval r = remove_vertices(g, removed);
    auto sub = principal_subtensor(adjacency_tensor(g), removed.complement(n));
    CHECK(adjacency_tensor(r.graph) == sub.tensor);
    CHECK(r.kept == sub.relabel);
  }
  Hypergraph g(2, 2, {{0, 1}});
  CHECK_THROWS_CODE(remove_vertices(g, IndexSet({0, 1})), ErrorCode::RemovesAllVertices);
}

TEST_CASE("remove edges") {
  Hypergraph g = samples::g4_four_edges();
  Hypergraph h = remove_edges(g, std::vector<Edge>{{0, 1, 3, 4}});
  CHECK(h == samples::g4_three_edges());
  CHECK(remove_edges(g, std::vector<Edge>{}) == g);
  CHECK_THROWS_CODE(remove_edges(g, std::vector<Edge>{{0, 1, 2, 5}}), ErrorCode::UnknownEdge);
}

TEST_CASE("predicates") {
  Hypergraph star(3, 5, {{0, 1, 2}, {0, 3, 4}});
  CHECK(is_linear(star));
  CHECK(is_universal_vertex(star, 0));
  CHECK_FALSE(is_universal_vertex(star, 1));

  Hypergraph overlap(3, 4, {{0, 1, 2}, {0, 1, 3}});
  CHECK_FALSE(is_linear(overlap));

  Hypergraph split(2, 4, {{0, 1}, {2, 3}});
  CHECK_FALSE(is_connected(split));
  CHECK(connected_components(split).size() == 2);
  CHECK(is_regular(split));

  // Odd-bipartiteness is exact over GF(2).
  CHECK(is_odd_bipartite(samples::g4_three_edges()));
  CHECK(is_odd_bipartite(complete_graph(2)));
  CHECK(is_odd_bipartite(Hypergraph(2, 4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}})));
  CHECK_FALSE(is_odd_bipartite(complete_graph(3)));
  CHECK_THROWS_CODE(is_odd_bipartite(fano_plane()), ErrorCode::OddOrderForBipartite);

  Rng rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    Hypergraph g = random_odd_bipartite(rng, 4, 8, 5);
    REQUIRE(is_odd_bipartite(g));
    auto part = odd_bipartition(g);
    for (const auto& e : g.edges()) {
      int c = 0;
      for (Index v : e) c += part[v] ? 1 : 0;
      CHECK(c % 2 == 1);
    }
  }
}

TEST_CASE("edge weighted sums partition the edge mass") {
  Rng rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    int k = rng.integer(2, 4);
    int n = rng.integer(k + 1, 7);
    Hypergraph g = random_connected_hypergraph(rng, k, n, 3);
    IndexSet set = random_proper_subset(rng, n);
    Vector x = random_vector(rng, n);
    auto s = edge_weighted_sums(g, set, x);
    REQUIRE(s.size() == static_cast<std::size_t>(k + 1));
    double total = 0.0, direct = 0.0;
    for (double v : s) total += v;
    for (const auto& e : g.edges()) direct += edge_monomial(e, x);
    CHECK(total == doctest::Approx(direct).epsilon(1e-12));
    // s[0] is the edge mass of G - I.
    VertexRemoval r = remove_vertices(g, set);
    Vector xr;
    for (Index v : r.kept) xr.push_back(x[v]);
    double rest = 0.0;
    for (const auto& e : r.graph.edges()) rest += edge_monomial(e, xr);
    CHECK(s[0] == doctest::Approx(rest).epsilon(1e-12));
  }
}

}  // TEST_SUITE
