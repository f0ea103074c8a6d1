#include "hspec/generators.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace hspec {

namespace {

void shuffle(Rng& rng, std::vector<Index>& v) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(rng.integer(0, static_cast<int>(i) - 1));
    std::swap(v[i - 1], v[j]);
  }
}

// `count` distinct members of `pool`, in random order.
std::vector<Index> sample(Rng& rng, std::vector<Index> pool, int count) {
  shuffle(rng, pool);
  pool.resize(count);
  return pool;
}

void for_each_sorted_index(int k, int n, const std::function<void(const MultiIndex&)>& fn) {
  MultiIndex idx(k, 0);
  while (true) {
    fn(idx);
    int p = k - 1;
    while (p >= 0 && static_cast<int>(idx[p]) == n - 1) --p;
    if (p < 0) return;
    ++idx[p];
    for (int q = p + 1; q < k; ++q) idx[q] = idx[p];
  }
}

}  // namespace

SymmetricTensor random_tensor(Rng& rng, int order, int dim, double density, bool nonnegative,
                              bool zero_diagonal) {
  std::vector<TensorEntry> entries;
  for_each_sorted_index(order, dim, [&](const MultiIndex& idx) {
    bool diagonal = idx.front() == idx.back();
    if (zero_diagonal && diagonal) return;
    if (rng.uniform() >= density) return;
    double v = nonnegative ? rng.uniform() : rng.uniform(-1.0, 1.0);
    entries.push_back({idx, v});
  });
  return SymmetricTensor::build(order, dim, entries);
}

Vector random_vector(Rng& rng, int dim) {
  Vector x(dim);
  for (double& v : x) v = rng.uniform(-1.0, 1.0);
  return x;
}

IndexSet random_proper_subset(Rng& rng, int n) {
  std::vector<Index> all(n);
  std::iota(all.begin(), all.end(), 0);
  return IndexSet(sample(rng, all, rng.integer(1, n - 1)));
}

Hypergraph random_connected_hypergraph(Rng& rng, int k, int n, int extra) {
  std::vector<Index> order(n);
  std::iota(order.begin(), order.end(), 0);
  shuffle(rng, order);
  std::vector<Edge> edges;
  std::vector<Index> covered(order.begin(), order.begin() + k);
  edges.push_back(covered);
  std::size_t next = k;
  while (next < order.size()) {
    // One covered vertex joins up to k-1 new ones; short edges borrow covered vertices.
    Edge e{covered[rng.integer(0, static_cast<int>(covered.size()) - 1)]};
    std::vector<Index> fresh;
    while (static_cast<int>(e.size()) < k && next < order.size()) {
      e.push_back(order[next]);
      fresh.push_back(order[next++]);
    }
    while (static_cast<int>(e.size()) < k) {
      Index c = covered[rng.integer(0, static_cast<int>(covered.size()) - 1)];
      if (std::find(e.begin(), e.end(), c) == e.end()) e.push_back(c);
    }
    covered.insert(covered.end(), fresh.begin(), fresh.end());
    edges.push_back(e);
  }
  std::vector<Index> all(n);
  std::iota(all.begin(), all.end(), 0);
  for (int i = 0; i < extra; ++i) edges.push_back(sample(rng, all, k));
  for (auto& e : edges) std::sort(e.begin(), e.end());
  return Hypergraph(k, n, std::move(edges));
}

Hypergraph random_odd_bipartite(Rng& rng, int k, int n, int edges) {
  if (k % 2 != 0) throw Error(ErrorCode::OddOrderForBipartite, "odd-bipartite needs even k");
  if (n < k) throw Error(ErrorCode::BadArgument, "need at least k vertices");
  while (true) {
    std::vector<Index> all(n);
    std::iota(all.begin(), all.end(), 0);
    shuffle(rng, all);
    int split = rng.integer(1, n - 1);
    std::vector<Index> left(all.begin(), all.begin() + split);
    std::vector<Index> right(all.begin() + split, all.end());
    std::vector<int> odd;
    for (int j = 1; j < k; j += 2) {
      if (j <= static_cast<int>(left.size()) && k - j <= static_cast<int>(right.size())) {
        odd.push_back(j);
      }
    }
    if (odd.empty()) continue;
    std::vector<Edge> list;
    for (int i = 0; i < edges; ++i) {
      int j = odd[rng.integer(0, static_cast<int>(odd.size()) - 1)];
      Edge e = sample(rng, left, j);
      Edge r = sample(rng, right, k - j);
      e.insert(e.end(), r.begin(), r.end());
      std::sort(e.begin(), e.end());
      list.push_back(std::move(e));
    }
    Hypergraph g(k, n, std::move(list));
    if (is_connected(g)) return g;
  }
}

}  // namespace hspec
