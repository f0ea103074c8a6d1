#include "hspec/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <string>
#include <utility>

namespace hspec {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::ConflictingOrbitValues: return "ConflictingOrbitValues";
    case ErrorCode::NonFiniteValue: return "NonFiniteValue";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::EmptyIndexSet: return "EmptyIndexSet";
    case ErrorCode::BadArity: return "BadArity";
    case ErrorCode::BadArgument: return "BadArgument";
    case ErrorCode::RemovesAllVertices: return "RemovesAllVertices";
    case ErrorCode::UnknownEdge: return "UnknownEdge";
    case ErrorCode::OddOrderForBipartite: return "OddOrderForBipartite";
    case ErrorCode::NegativeEntry: return "NegativeEntry";
    case ErrorCode::OddOrder: return "OddOrder";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorCode::NoRoot: return "NoRoot";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

struct Group {
  Index index;
  int count;
};

// Runs of equal indices in a sorted multi-index.
std::vector<Group> groups_of(std::span<const Index> sorted) {
  std::vector<Group> out;
  for (Index i : sorted) {
    if (!out.empty() && out.back().index == i) {
      ++out.back().count;
    } else {
      out.push_back({i, 1});
    }
  }
  return out;
}

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Product of x over the orbit, with one fewer power at each listed position.
double orbit_product(const std::vector<Group>& groups,
                     std::span<const double> x, int skip_a = -1,
                     int skip_b = -1) {
  double prod = 1.0;
  for (int g = 0; g < static_cast<int>(groups.size()); ++g) {
    int e = groups[g].count - (g == skip_a) - (g == skip_b);
    prod *= ipow(x[groups[g].index], e);
  }
  return prod;
}

int count_outside(std::span<const Index> sorted, const std::vector<bool>& in) {
  int o = 0;
  for (Index i : sorted) o += in[i] ? 0 : 1;
  return o;
}

void require_proper_keep(const IndexSet& keep, int n) {
  if (keep.empty()) throw Error(ErrorCode::EmptyIndexSet, "index set is empty");
  if (keep.members().back() >= static_cast<Index>(n)) {
    throw Error(ErrorCode::IndexOutOfRange, "index set exceeds tensor dimension");
  }
}

}  // namespace

double ipow(double x, int e) {
  double r = 1.0;
  double b = x;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

double binomial(int n, int r) {
  if (r < 0 || r > n || n < 0) return 0.0;
  r = std::min(r, n - r);
  double c = 1.0;
  for (int i = 1; i <= r; ++i) c = c * (n - r + i) / i;
  return std::round(c);
}

double permutation_count(std::span<const Index> sorted_index) {
  double p = factorial(static_cast<int>(sorted_index.size()));
  for (const auto& g : groups_of(sorted_index)) p /= factorial(g.count);
  return p;
}

// ---------------------------------------------------------------- IndexSet

IndexSet::IndexSet(std::vector<Index> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

IndexSet IndexSet::range(Index n) {
  std::vector<Index> all(n);
  std::iota(all.begin(), all.end(), Index{0});
  return IndexSet(std::move(all));
}

bool IndexSet::contains(Index i) const {
  return std::binary_search(members_.begin(), members_.end(), i);
}

IndexSet IndexSet::complement(Index n) const {
  std::vector<Index> out;
  for (Index i = 0; i < n; ++i) {
    if (!contains(i)) out.push_back(i);
  }
  return IndexSet(std::move(out));
}

std::vector<bool> IndexSet::mask(Index n) const {
  std::vector<bool> m(n, false);
  for (Index i : members_) {
    if (i < n) m[i] = true;
  }
  return m;
}

// --------------------------------------------------------- SymmetricTensor

SymmetricTensor::SymmetricTensor(int order, int dim)
    : SymmetricTensor(order, dim, {}) {}

SymmetricTensor::SymmetricTensor(int order, int dim, std::vector<Orbit> orbits)
    : order_(order), dim_(dim), orbits_(std::move(orbits)) {
  if (order < 2) throw Error(ErrorCode::BadArgument, "tensor order must be >= 2");
  if (dim < 1) throw Error(ErrorCode::BadArgument, "tensor dimension must be >= 1");
}

SymmetricTensor SymmetricTensor::build(int order, int dim,
                                       std::span<const TensorEntry> entries) {
  if (order < 2) throw Error(ErrorCode::BadArgument, "tensor order must be >= 2");
  if (dim < 1) throw Error(ErrorCode::BadArgument, "tensor dimension must be >= 1");
  std::map<MultiIndex, double> canonical;
  for (const auto& e : entries) {
    if (static_cast<int>(e.index.size()) != order) {
      throw Error(ErrorCode::BadArity,
                  "entry has " + std::to_string(e.index.size()) +
                      " indices, expected " + std::to_string(order));
    }
    for (Index i : e.index) {
      if (i >= static_cast<Index>(dim)) {
        throw Error(ErrorCode::IndexOutOfRange,
                    "index " + std::to_string(i + 1) + " outside [1, " +
                        std::to_string(dim) + "]");
      }
    }
    if (!std::isfinite(e.value)) {
      throw Error(ErrorCode::NonFiniteValue, "tensor entry is not finite");
    }
    MultiIndex key = e.index;
    std::sort(key.begin(), key.end());
    auto [it, inserted] = canonical.emplace(key, e.value);
    if (!inserted && it->second != e.value) {
      throw Error(ErrorCode::ConflictingOrbitValues,
                  "two different values supplied for one index orbit");
    }
  }
  std::vector<Orbit> orbits;
  orbits.reserve(canonical.size());
  for (auto& [key, value] : canonical) {
    if (value != 0.0) orbits.push_back({key, value});
  }
  return SymmetricTensor(order, dim, std::move(orbits));
}

void SymmetricTensor::check_vector(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != dim_) {
    throw Error(ErrorCode::DimensionMismatch,
                "vector has length " + std::to_string(x.size()) +
                    ", tensor dimension is " + std::to_string(dim_));
  }
}

double SymmetricTensor::entry(std::span<const Index> idx) const {
  if (static_cast<int>(idx.size()) != order_) {
    throw Error(ErrorCode::BadArity, "multi-index length differs from tensor order");
  }
  MultiIndex key(idx.begin(), idx.end());
  for (Index i : key) {
    if (i >= static_cast<Index>(dim_)) {
      throw Error(ErrorCode::IndexOutOfRange, "index outside tensor dimension");
    }
  }
  std::sort(key.begin(), key.end());
  auto it = std::lower_bound(
      orbits_.begin(), orbits_.end(), key,
      [](const Orbit& o, const MultiIndex& k) { return o.index < k; });
  if (it != orbits_.end() && it->index == key) return it->value;
  return 0.0;
}

Vector SymmetricTensor::apply(std::span<const double> x) const {
  check_vector(x);
  Vector out(dim_, 0.0);
  for (const auto& orbit : orbits_) {
    auto groups = groups_of(orbit.index);
    double perms = permutation_count(orbit.index);
    for (int a = 0; a < static_cast<int>(groups.size()); ++a) {
      double count = perms * groups[a].count / order_;
      out[groups[a].index] += orbit.value * count * orbit_product(groups, x, a);
    }
  }
  return out;
}

double SymmetricTensor::form(std::span<const double> x) const {
  check_vector(x);
  double total = 0.0;
  for (const auto& orbit : orbits_) {
    auto groups = groups_of(orbit.index);
    total += orbit.value * permutation_count(orbit.index) * orbit_product(groups, x);
  }
  return total;
}

std::vector<double> SymmetricTensor::contract2(std::span<const double> x) const {
  check_vector(x);
  std::vector<double> m(static_cast<std::size_t>(dim_) * dim_, 0.0);
  for (const auto& orbit : orbits_) {
    auto groups = groups_of(orbit.index);
    double perms = permutation_count(orbit.index);
    int ng = static_cast<int>(groups.size());
    for (int a = 0; a < ng; ++a) {
      for (int b = 0; b < ng; ++b) {
        int cb = groups[b].count - (a == b ? 1 : 0);
        if (cb <= 0) continue;
        double count = perms * groups[a].count / order_ * cb / (order_ - 1);
        m[groups[a].index * dim_ + groups[b].index] +=
            orbit.value * count * orbit_product(groups, x, a, b);
      }
    }
  }
  return m;
}

SymmetricTensor SymmetricTensor::scaled(double c) const {
  if (!std::isfinite(c)) throw Error(ErrorCode::NonFiniteValue, "scale factor is not finite");
  if (c == 0.0) return SymmetricTensor(order_, dim_);
  std::vector<Orbit> orbits = orbits_;
  for (auto& o : orbits) o.value *= c;
  return SymmetricTensor(order_, dim_, std::move(orbits));
}

bool SymmetricTensor::operator==(const SymmetricTensor& other) const {
  if (order_ != other.order_ || dim_ != other.dim_) return false;
  if (orbits_.size() != other.orbits_.size()) return false;
  for (std::size_t i = 0; i < orbits_.size(); ++i) {
    if (orbits_[i].index != other.orbits_[i].index ||
        orbits_[i].value != other.orbits_[i].value) {
      return false;
    }
  }
  return true;
}

// ------------------------------------------------------------ restrictions

PrincipalSubtensor principal_subtensor(const SymmetricTensor& t,
                                       const IndexSet& keep) {
  require_proper_keep(keep, t.dim());
  std::vector<int> new_label(t.dim(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    new_label[keep.members()[i]] = static_cast<int>(i);
  }
  std::vector<TensorEntry> entries;
  for (const auto& orbit : t.orbits()) {
    bool inside = std::all_of(orbit.index.begin(), orbit.index.end(),
                              [&](Index i) { return new_label[i] >= 0; });
    if (!inside) continue;
    MultiIndex idx;
    idx.reserve(orbit.index.size());
    for (Index i : orbit.index) idx.push_back(static_cast<Index>(new_label[i]));
    entries.push_back({std::move(idx), orbit.value});
  }
  return {SymmetricTensor::build(t.order(), static_cast<int>(keep.size()), entries),
          keep.members()};
}

SymmetricTensor embed_restriction(const SymmetricTensor& t, const IndexSet& keep) {
  require_proper_keep(keep, t.dim());
  std::vector<TensorEntry> entries;
  for (const auto& orbit : t.orbits()) {
    bool inside = std::all_of(orbit.index.begin(), orbit.index.end(),
                              [&](Index i) { return keep.contains(i); });
    if (inside) entries.push_back({orbit.index, orbit.value});
  }
  return SymmetricTensor::build(t.order(), t.dim(), entries);
}

// -------------------------------------------------------------- predicates

bool is_zero_diagonal(const SymmetricTensor& t) {
  return std::none_of(t.orbits().begin(), t.orbits().end(), [](const Orbit& o) {
    return o.index.front() == o.index.back();
  });
}

bool is_nonnegative(const SymmetricTensor& t) {
  return std::all_of(t.orbits().begin(), t.orbits().end(),
                     [](const Orbit& o) { return o.value >= 0.0; });
}

double row_sum(const SymmetricTensor& t, Index i) {
  if (i >= static_cast<Index>(t.dim())) {
    throw Error(ErrorCode::IndexOutOfRange, "row index outside tensor dimension");
  }
  Vector ones(t.dim(), 1.0);
  return t.apply(ones)[i];
}

Vector row_sums(const SymmetricTensor& t) {
  Vector ones(t.dim(), 1.0);
  return t.apply(ones);
}

double max_abs_value(const SymmetricTensor& t) {
  double m = 0.0;
  for (const auto& o : t.orbits()) m = std::max(m, std::abs(o.value));
  return m;
}

std::vector<IndexSet> components(const SymmetricTensor& t) {
  std::vector<Index> parent(t.dim());
  std::iota(parent.begin(), parent.end(), Index{0});
  auto find = [&](Index i) {
    while (parent[i] != i) {
      parent[i] = parent[parent[i]];
      i = parent[i];
    }
    return i;
  };
  for (const auto& o : t.orbits()) {
    for (Index i : o.index) {
      Index a = find(o.index.front());
      Index b = find(i);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::map<Index, std::vector<Index>> by_root;
  for (Index i = 0; i < static_cast<Index>(t.dim()); ++i) by_root[find(i)].push_back(i);
  std::vector<IndexSet> out;
  for (auto& [root, members] : by_root) out.emplace_back(std::move(members));
  // Roots are the smallest member, so components come out ordered by it.
  return out;
}

bool is_weakly_irreducible(const SymmetricTensor& t) {
  return components(t).size() == 1;
}

// ------------------------------------------------------------- mixed sums

double outside_prefix_sum(const SymmetricTensor& t, const IndexSet& keep,
                          std::span<const double> x, int p) {
  if (static_cast<int>(x.size()) != t.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "vector length differs from tensor dimension");
  }
  const int k = t.order();
  if (p < 0 || p > k) throw Error(ErrorCode::BadArity, "prefix length outside [0, k]");
  auto in = keep.mask(t.dim());
  double total = 0.0;
  const double denom = binomial(k, p);
  for (const auto& orbit : t.orbits()) {
    int o = count_outside(orbit.index, in);
    if (o < p) continue;
    double count = permutation_count(orbit.index) * binomial(o, p) / denom;
    total += orbit.value * count * orbit_product(groups_of(orbit.index), x);
  }
  return total;
}

double inclusion_exclusion_lhs(const SymmetricTensor& t, const IndexSet& keep,
                               std::span<const double> x, int s, int m) {
  const int k = t.order();
  if (s < 1 || m < 1 || s + m > k) {
    throw Error(ErrorCode::BadArity, "need s >= 1, m >= 1 and s + m <= k");
  }
  require_proper_keep(keep, t.dim());
  if (static_cast<int>(x.size()) != t.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "vector length differs from tensor dimension");
  }
  auto in = keep.mask(t.dim());
  const double denom = binomial(k, s) * binomial(k - s, m);
  double total = 0.0;
  for (const auto& orbit : t.orbits()) {
    int o = count_outside(orbit.index, in);
    double ways = binomial(o, s) * binomial(k - o, m);
    if (ways == 0.0) continue;
    double count = permutation_count(orbit.index) * ways / denom;
    total += orbit.value * count * orbit_product(groups_of(orbit.index), x);
  }
  return total;
}

double inclusion_exclusion_rhs(const SymmetricTensor& t, const IndexSet& keep,
                               std::span<const double> x, int s, int m) {
  const int k = t.order();
  if (s < 1 || m < 1 || s + m > k) {
    throw Error(ErrorCode::BadArity, "need s >= 1, m >= 1 and s + m <= k");
  }
  require_proper_keep(keep, t.dim());
  double total = 0.0;
  for (int l = 0; l <= m; ++l) {
    double sign = (l % 2 == 0) ? 1.0 : -1.0;
    total += sign * binomial(m, l) * outside_prefix_sum(t, keep, x, s + l);
  }
  return total;
}

double mixed_correction(const SymmetricTensor& t, const IndexSet& keep,
                        std::span<const double> x) {
  const int k = t.order();
  double total = 0.0;
  for (int j = 1; j <= k - 1; ++j) {
    double sign = (j % 2 == 0) ? 1.0 : -1.0;
    total += sign * binomial(k, j + 1) * outside_prefix_sum(t, keep, x, j + 1);
  }
  return total;
}

double power_sum(std::span<const double> x, int p) {
  double s = 0.0;
  for (double v : x) s += ipow(std::abs(v), p);
  return s;
}

double power_sum_on(std::span<const double> x, const IndexSet& set, int p) {
  double s = 0.0;
  for (Index i : set.members()) {
    if (i >= x.size()) throw Error(ErrorCode::IndexOutOfRange, "index outside vector");
    s += ipow(x[i], p);
  }
  return s;
}

}  // namespace hspec
