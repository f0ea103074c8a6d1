#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hspec/error.hpp"

namespace hspec {

/// Vertex / coordinate index. 0-based everywhere in the library; the text
/// formats and the CLI are 1-based.
using Index = std::uint32_t;
using MultiIndex = std::vector<Index>;
using Vector = std::vector<double>;

/// Sorted, duplicate-free set of indices.
class IndexSet {
 public:
  IndexSet() = default;
  /// Sorts and deduplicates `members`.
  explicit IndexSet(std::vector<Index> members);

  static IndexSet range(Index n);

  const std::vector<Index>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(Index i) const;

  /// Indices of [0, n) not in this set.
  IndexSet complement(Index n) const;
  /// Membership bitmap of length n.
  std::vector<bool> mask(Index n) const;

  bool operator==(const IndexSet&) const = default;

 private:
  std::vector<Index> members_;
};

struct TensorEntry {
  MultiIndex index;
  double value = 0.0;
};

/// One stored orbit: a sorted multi-index and its value.
struct Orbit {
  MultiIndex index;
  double value = 0.0;
};

/// Order-k, dimension-n symmetric tensor stored as one value per index orbit.
///
/// Orbits are kept sorted lexicographically; zero orbits are absent. Every
/// evaluation expands an orbit by the multinomial count of its distinct
/// permutations, so an adjacency tensor costs O(|E|) rather than O(n^k).
class SymmetricTensor {
 public:
  /// Zero tensor.
  SymmetricTensor(int order, int dim);

  /// Collapses permutation-equivalent entries into canonical orbits. Accepts
  /// one representative per orbit or a fully expanded list; two different
  /// values on one orbit are rejected. Zero values are dropped.
  static SymmetricTensor build(int order, int dim,
                               std::span<const TensorEntry> entries);

  int order() const noexcept { return order_; }
  int dim() const noexcept { return dim_; }
  const std::vector<Orbit>& orbits() const noexcept { return orbits_; }
  bool is_zero() const noexcept { return orbits_.empty(); }

  /// Value at any (not necessarily sorted) multi-index; 0 when absent.
  double entry(std::span<const Index> idx) const;

  /// (T x^{k-1})_i for every i.
  Vector apply(std::span<const double> x) const;
  /// T x^k.
  double form(std::span<const double> x) const;
  /// M_ij = sum over i3..ik of t_{i j i3..ik} x_i3 ... x_ik  (T x^{k-2}).
  /// The Jacobian of apply() is (k-1) M.
  std::vector<double> contract2(std::span<const double> x) const;

  /// Copy with every value multiplied by c (c = 0 gives the zero tensor).
  SymmetricTensor scaled(double c) const;

  bool operator==(const SymmetricTensor&) const;

 private:
  SymmetricTensor(int order, int dim, std::vector<Orbit> orbits);
  void check_vector(std::span<const double> x) const;

  int order_;
  int dim_;
  std::vector<Orbit> orbits_;
};

/// Number of distinct permutations of a sorted multi-index.
double permutation_count(std::span<const Index> sorted_index);

/// Binomial coefficient as a double (0 when r < 0 or r > n).
double binomial(int n, int r);

struct PrincipalSubtensor {
  SymmetricTensor tensor;
  /// relabel[new] = old index.
  std::vector<Index> relabel;
};

/// T[I]: entries with all indices in I, re-indexed to 0..|I|-1.
PrincipalSubtensor principal_subtensor(const SymmetricTensor& t,
                                       const IndexSet& keep);

/// T_I: same dimension, orbits touching an index outside I dropped.
SymmetricTensor embed_restriction(const SymmetricTensor& t,
                                  const IndexSet& keep);

bool is_zero_diagonal(const SymmetricTensor& t);
bool is_nonnegative(const SymmetricTensor& t);
/// Row sum R_i = sum over i2..ik of t_{i i2..ik}.
double row_sum(const SymmetricTensor& t, Index i);
Vector row_sums(const SymmetricTensor& t);
/// Largest |t| over stored orbits.
double max_abs_value(const SymmetricTensor& t);

/// Connected components of the co-occurrence graph (i ~ j when some orbit
/// holds both). A symmetric tensor is block diagonal over these.
std::vector<IndexSet> components(const SymmetricTensor& t);
bool is_weakly_irreducible(const SymmetricTensor& t);

/// Sum over i_1..i_p outside `keep`, remaining indices free, of
/// t_{i1..ik} x_i1 ... x_ik. Evaluated per orbit by counting arrangements.
double outside_prefix_sum(const SymmetricTensor& t, const IndexSet& keep,
                          std::span<const double> x, int p);

/// Left side of the inclusion-exclusion identity: first s indices outside I,
/// next m inside I, the rest free.
double inclusion_exclusion_lhs(const SymmetricTensor& t, const IndexSet& keep,
                               std::span<const double> x, int s, int m);
/// Right side: sum_{l=0}^{m} (-1)^l C(m,l) outside_prefix_sum(s+l).
double inclusion_exclusion_rhs(const SymmetricTensor& t, const IndexSet& keep,
                               std::span<const double> x, int s, int m);

/// sum_{j=1}^{k-1} (-1)^j C(k, j+1) outside_prefix_sum(j+1): the mixed-sum
/// correction shared by the subtensor interlacing bounds.
double mixed_correction(const SymmetricTensor& t, const IndexSet& keep,
                        std::span<const double> x);

/// sum_i |x_i|^p.
double power_sum(std::span<const double> x, int p);
/// sum_{i in set} x_i^p (signed powers).
double power_sum_on(std::span<const double> x, const IndexSet& set, int p);
/// x_i^e for integer e >= 0.
double ipow(double x, int e);

}  // namespace hspec
