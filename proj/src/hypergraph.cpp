#include "hspec/hypergraph.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <utility>

namespace hspec {

namespace {

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t i) {
    while (parent_[i] != i) {
      parent_[i] = parent_[parent_[i]];
      i = parent_[i];
    }
    return i;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

Hypergraph::Hypergraph(int uniformity, int n, std::vector<Edge> edges)
    : k_(uniformity), n_(n), edges_(std::move(edges)) {
  if (k_ < 2) throw Error(ErrorCode::BadArgument, "uniformity must be >= 2");
  if (n_ < 1) throw Error(ErrorCode::BadArgument, "vertex count must be >= 1");
  for (auto& e : edges_) {
    if (static_cast<int>(e.size()) != k_) {
      throw Error(ErrorCode::BadArity, "edge has " + std::to_string(e.size()) +
                                           " vertices, expected " + std::to_string(k_));
    }
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
      throw Error(ErrorCode::BadArgument, "edge repeats a vertex");
    }
    if (e.back() >= static_cast<Index>(n_)) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "edge vertex " + std::to_string(e.back() + 1) + " outside [1, " +
                      std::to_string(n_) + "]");
    }
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool Hypergraph::has_edge(const Edge& e) const {
  Edge key = e;
  std::sort(key.begin(), key.end());
  return std::binary_search(edges_.begin(), edges_.end(), key);
}

int Hypergraph::degree(Index v) const {
  if (v >= static_cast<Index>(n_)) throw Error(ErrorCode::IndexOutOfRange, "vertex outside graph");
  int d = 0;
  for (const auto& e : edges_) d += std::binary_search(e.begin(), e.end(), v) ? 1 : 0;
  return d;
}

std::vector<int> Hypergraph::degrees() const {
  std::vector<int> d(n_, 0);
  for (const auto& e : edges_) {
    for (Index v : e) ++d[v];
  }
  return d;
}

SymmetricTensor adjacency_tensor(const Hypergraph& g) {
  const double value = 1.0 / factorial(g.uniformity() - 1);
  std::vector<TensorEntry> entries;
  entries.reserve(g.edge_count());
  for (const auto& e : g.edges()) entries.push_back({e, value});
  return SymmetricTensor::build(g.uniformity(), g.vertex_count(), entries);
}

VertexRemoval remove_vertices(const Hypergraph& g, const IndexSet& removed) {
  if (removed.empty()) throw Error(ErrorCode::EmptyIndexSet, "no vertices to remove");
  if (removed.members().back() >= static_cast<Index>(g.vertex_count())) {
    throw Error(ErrorCode::IndexOutOfRange, "removed vertex outside graph");
  }
  if (static_cast<int>(removed.size()) == g.vertex_count()) {
    throw Error(ErrorCode::RemovesAllVertices, "cannot remove every vertex");
  }
  std::vector<int> label(g.vertex_count(), -1);
  std::vector<Index> kept;
  for (Index v = 0; v < static_cast<Index>(g.vertex_count()); ++v) {
    if (!removed.contains(v)) {
      label[v] = static_cast<int>(kept.size());
      kept.push_back(v);
    }
  }
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    bool survives = std::all_of(e.begin(), e.end(), [&](Index v) { return label[v] >= 0; });
    if (!survives) continue;
    Edge relabeled;
    for (Index v : e) relabeled.push_back(static_cast<Index>(label[v]));
    edges.push_back(std::move(relabeled));
  }
  return {Hypergraph(g.uniformity(), static_cast<int>(kept.size()), std::move(edges)),
          std::move(kept)};
}

Hypergraph remove_edges(const Hypergraph& g, std::span<const Edge> removed) {
  std::vector<Edge> drop;
  for (const auto& e : removed) {
    Edge key = e;
    std::sort(key.begin(), key.end());
    if (!g.has_edge(key)) throw Error(ErrorCode::UnknownEdge, "edge is not in the hypergraph");
    drop.push_back(std::move(key));
  }
  std::sort(drop.begin(), drop.end());
  std::vector<Edge> kept;
  for (const auto& e : g.edges()) {
    if (!std::binary_search(drop.begin(), drop.end(), e)) kept.push_back(e);
  }
  return Hypergraph(g.uniformity(), g.vertex_count(), std::move(kept));
}

bool is_linear(const Hypergraph& g) {
  // Linear iff no vertex pair is covered twice.
  std::map<std::pair<Index, Index>, int> cover;
  for (const auto& e : g.edges()) {
    for (std::size_t a = 0; a < e.size(); ++a) {
      for (std::size_t b = a + 1; b < e.size(); ++b) {
        if (++cover[{e[a], e[b]}] > 1) return false;
      }
    }
  }
  return true;
}

std::vector<IndexSet> connected_components(const Hypergraph& g) {
  DisjointSets sets(g.vertex_count());
  for (const auto& e : g.edges()) {
    for (Index v : e) sets.unite(e.front(), v);
  }
  std::map<std::size_t, std::vector<Index>> by_root;
  for (Index v = 0; v < static_cast<Index>(g.vertex_count()); ++v) {
    by_root[sets.find(v)].push_back(v);
  }
  std::vector<IndexSet> out;
  for (auto& [root, members] : by_root) out.emplace_back(std::move(members));
  return out;
}

bool is_connected(const Hypergraph& g) { return connected_components(g).size() == 1; }

bool is_regular(const Hypergraph& g) {
  auto d = g.degrees();
  return std::adjacent_find(d.begin(), d.end(), std::not_equal_to<>()) == d.end();
}

std::vector<bool> odd_bipartition(const Hypergraph& g) {
  if (g.uniformity() % 2 != 0) {
    throw Error(ErrorCode::OddOrderForBipartite, "odd-bipartiteness needs even uniformity");
  }
  // One GF(2) equation per edge: sum of part labels over the edge = 1.
  const std::size_t n = g.vertex_count();
  const std::size_t words = n / 64 + 1;
  using Row = std::vector<std::uint64_t>;
  auto get = [](const Row& r, std::size_t i) { return (r[i / 64] >> (i % 64)) & 1U; };
  auto flip = [](Row& r, std::size_t i) { r[i / 64] ^= std::uint64_t{1} << (i % 64); };

  std::vector<Row> rows;
  for (const auto& e : g.edges()) {
    Row r(words, 0);
    for (Index v : e) flip(r, v);
    flip(r, n);  // right-hand side bit
    rows.push_back(std::move(r));
  }
  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
    std::size_t sel = rank;
    while (sel < rows.size() && !get(rows[sel], col)) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[sel], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && get(rows[r], col)) {
        for (std::size_t w = 0; w < words; ++w) rows[r][w] ^= rows[rank][w];
      }
    }
    pivot_col.push_back(col);
    ++rank;
  }
  for (std::size_t r = rank; r < rows.size(); ++r) {
    if (get(rows[r], n)) return {};  // 0 = 1: infeasible
  }
  std::vector<bool> part(n, false);
  for (std::size_t r = 0; r < rank; ++r) part[pivot_col[r]] = get(rows[r], n) != 0;
  return part;
}

bool is_odd_bipartite(const Hypergraph& g) {
  if (g.uniformity() % 2 != 0) {
    throw Error(ErrorCode::OddOrderForBipartite, "odd-bipartiteness needs even uniformity");
  }
  if (g.edge_count() == 0) return true;
  return !odd_bipartition(g).empty();
}

bool is_steiner_2(const Hypergraph& g) {
  const int n = g.vertex_count();
  if (n < 2) return false;
  std::vector<int> cover(static_cast<std::size_t>(n) * n, 0);
  for (const auto& e : g.edges()) {
    for (std::size_t a = 0; a < e.size(); ++a) {
      for (std::size_t b = a + 1; b < e.size(); ++b) ++cover[e[a] * n + e[b]];
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (cover[a * n + b] != 1) return false;
    }
  }
  return true;
}

bool is_universal_vertex(const Hypergraph& g, Index v) {
  if (v >= static_cast<Index>(g.vertex_count())) {
    throw Error(ErrorCode::IndexOutOfRange, "vertex outside graph");
  }
  std::vector<bool> seen(g.vertex_count(), false);
  seen[v] = true;
  for (const auto& e : g.edges()) {
    if (!std::binary_search(e.begin(), e.end(), v)) continue;
    for (Index w : e) seen[w] = true;
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

double edge_monomial(const Edge& e, std::span<const double> x) {
  double p = 1.0;
  for (Index v : e) p *= x[v];
  return p;
}

std::vector<double> edge_weighted_sums(const Hypergraph& g, const IndexSet& set,
                                       std::span<const double> x) {
  if (static_cast<int>(x.size()) != g.vertex_count()) {
    throw Error(ErrorCode::DimensionMismatch, "vector length differs from vertex count");
  }
  std::vector<double> s(g.uniformity() + 1, 0.0);
  for (const auto& e : g.edges()) {
    int hits = 0;
    for (Index v : e) hits += set.contains(v) ? 1 : 0;
    s[hits] += edge_monomial(e, x);
  }
  return s;
}

// ---------------------------------------------------------------- families

Hypergraph hypercycle3(int half_length) {
  if (half_length < 2) throw Error(ErrorCode::BadArgument, "hypercycle needs n >= 2");
  const Index n = 2 * half_length;
  std::vector<Edge> edges;
  for (Index i = 0; i < static_cast<Index>(half_length); ++i) {
    edges.push_back({2 * i, 2 * i + 1, (2 * i + 2) % n});
  }
  return Hypergraph(3, static_cast<int>(n), std::move(edges));
}

Hypergraph hyperpath3(int half_length) {
  if (half_length < 2) throw Error(ErrorCode::BadArgument, "hyperpath needs n >= 2");
  std::vector<Edge> edges;
  for (Index i = 0; i + 1 < static_cast<Index>(half_length); ++i) {
    edges.push_back({2 * i, 2 * i + 1, 2 * i + 2});
  }
  return Hypergraph(3, 2 * half_length - 1, std::move(edges));
}

Hypergraph complete_graph(int n) {
  std::vector<Edge> edges;
  for (Index a = 0; a < static_cast<Index>(n); ++a) {
    for (Index b = a + 1; b < static_cast<Index>(n); ++b) edges.push_back({a, b});
  }
  return Hypergraph(2, n, std::move(edges));
}

Hypergraph fano_plane() {
  return Hypergraph(3, 7,
                    {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}});
}

Hypergraph affine_plane_3() {
  // Points (a, b) of Z_3^2 labelled 3a + b; lines are the cosets of the four
  // one-dimensional subspaces.
  const int dirs[4][2] = {{0, 1}, {1, 0}, {1, 1}, {1, 2}};
  std::vector<Edge> edges;
  for (const auto& d : dirs) {
    std::vector<bool> used(9, false);
    for (int start = 0; start < 9; ++start) {
      if (used[start]) continue;
      Edge line;
      int a = start / 3;
      int b = start % 3;
      for (int t = 0; t < 3; ++t) {
        int p = 3 * ((a + t * d[0]) % 3) + (b + t * d[1]) % 3;
        used[p] = true;
        line.push_back(static_cast<Index>(p));
      }
      edges.push_back(std::move(line));
    }
  }
  return Hypergraph(3, 9, std::move(edges));
}

}  // namespace hspec
