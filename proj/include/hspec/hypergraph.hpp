#pragma once

#include <span>
#include <vector>

#include "hspec/tensor.hpp"

namespace hspec {

/// Sorted vertex list of one edge.
using Edge = std::vector<Index>;

/// k-uniform hypergraph on vertices 0..n-1.
///
/// Edges are stored sorted, each as a sorted vertex tuple; duplicates are
/// collapsed at construction.
class Hypergraph {
 public:
  Hypergraph(int uniformity, int n, std::vector<Edge> edges = {});

  int uniformity() const noexcept { return k_; }
  int vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  bool has_edge(const Edge& e) const;
  int degree(Index v) const;
  std::vector<int> degrees() const;

  bool operator==(const Hypergraph&) const = default;

 private:
  int k_;
  int n_;
  std::vector<Edge> edges_;
};

/// Adjacency tensor: value 1/(k-1)! on each edge orbit.
SymmetricTensor adjacency_tensor(const Hypergraph& g);

struct VertexRemoval {
  Hypergraph graph;
  /// kept[new] = old vertex.
  std::vector<Index> kept;
};

/// G - I: drops the vertices in I and every edge meeting them.
VertexRemoval remove_vertices(const Hypergraph& g, const IndexSet& removed);
/// G - F: same vertex set, edges of F removed. Every edge of F must be in G.
Hypergraph remove_edges(const Hypergraph& g, std::span<const Edge> removed);

bool is_linear(const Hypergraph& g);
bool is_connected(const Hypergraph& g);
bool is_regular(const Hypergraph& g);
/// Requires even k. Decided exactly by Gaussian elimination over GF(2).
bool is_odd_bipartite(const Hypergraph& g);
/// A part V1 witnessing odd-bipartiteness (vertex -> in V1), if one exists.
std::vector<bool> odd_bipartition(const Hypergraph& g);
/// Every vertex pair lies in exactly one edge (Steiner system S(2,k,n)).
bool is_steiner_2(const Hypergraph& g);
/// v shares an edge with every other vertex.
bool is_universal_vertex(const Hypergraph& g, Index v);

/// Vertex sets of the connected components, ordered by smallest vertex.
std::vector<IndexSet> connected_components(const Hypergraph& g);

/// s[j] = sum over edges e with |e ∩ I| = j of prod_{w in e} x_w, for
/// j = 0..k (entries 0 and 1 are filled too but unused by the bounds).
std::vector<double> edge_weighted_sums(const Hypergraph& g, const IndexSet& set,
                                       std::span<const double> x);

/// x^e = prod_{w in e} x_w.
double edge_monomial(const Edge& e, std::span<const double> x);

// Named families used throughout the tests and the fixture table.
Hypergraph hypercycle3(int half_length);  ///< C_{2n}^3 on 2n vertices.
Hypergraph hyperpath3(int half_length);   ///< P_{2n-1}^3 on 2n-1 vertices.
Hypergraph complete_graph(int n);         ///< K_n as a 2-uniform hypergraph.
Hypergraph fano_plane();                  ///< S(2,3,7).
Hypergraph affine_plane_3();              ///< AG(2,3) as S(2,3,9).

}  // namespace hspec
