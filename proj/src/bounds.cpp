#include "hspec/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "parallel.hpp"

namespace hspec {

namespace {

constexpr double kEigenTol = 1e-6;
constexpr double kHintTol = 1e-6;

void check_dim(std::span<const double> x, int n) {
  if (static_cast<int>(x.size()) != n) {
    throw Error(ErrorCode::DimensionMismatch, "eigenvector length " + std::to_string(x.size()) +
                                                  " != dimension " + std::to_string(n));
  }
}

void check_set(const IndexSet& set, int n, const char* what) {
  if (set.empty()) throw Error(ErrorCode::EmptyIndexSet, std::string(what) + " set is empty");
  for (Index i : set.members()) {
    if (static_cast<int>(i) >= n) {
      throw Error(ErrorCode::IndexOutOfRange,
                  std::string(what) + " index " + std::to_string(i) + " out of range");
    }
  }
}

void check_vertex(const Hypergraph& g, Index v) {
  if (static_cast<int>(v) >= g.vertex_count()) {
    throw Error(ErrorCode::IndexOutOfRange, "vertex " + std::to_string(v) + " out of range");
  }
}

void check_edges(const Hypergraph& g, const EdgeList& removed) {
  for (const auto& e : removed) {
    if (!g.has_edge(e)) throw Error(ErrorCode::UnknownEdge, "edge is not in the hypergraph");
  }
}

// Marks the report invalid when (value, x) fails the eigen-equation.
void check_eigenpair(BoundReport& r, const SymmetricTensor& t, const EigenPair& pair) {
  double res = eigen_residual(t, pair.value, pair.vector);
  r.details["residual"] = res;
  if (res > kEigenTol * std::max(1.0, std::abs(pair.value))) r.invalidate("not_an_eigenpair");
}

bool nonnegative(std::span<const double> x) {
  return std::all_of(x.begin(), x.end(), [](double v) { return v >= 0.0; });
}

// k * sum_{j>=2} (j-1) s_j.
double overlap_term(const Hypergraph& g, const IndexSet& set, std::span<const double> x) {
  auto s = edge_weighted_sums(g, set, x);
  double w = 0.0;
  for (int j = 2; j <= g.uniformity(); ++j) w += (j - 1) * s[j];
  return g.uniformity() * w;
}

double edge_sum(const EdgeList& edges, std::span<const double> x) {
  double s = 0.0;
  for (const auto& e : edges) s += edge_monomial(e, x);
  return s;
}

// Shared numerator of the tensor interlacing bounds.
double subtensor_numerator(const SymmetricTensor& t, const IndexSet& keep,
                           std::span<const double> x, double lambda) {
  IndexSet outside = keep.complement(t.dim());
  double out_mass = power_sum_on(x, outside, t.order());
  return lambda * (1.0 - t.order() * out_mass) - mixed_correction(t, keep, x);
}

}  // namespace

void BoundReport::set_actual(double value) {
  actual = value;
  slack_lower.reset();
  slack_upper.reset();
  if (lower) slack_lower = value - *lower;
  if (upper) slack_upper = *upper - value;
}

void BoundReport::invalidate(std::string why) {
  if (valid) {
    valid = false;
    reason = std::move(why);
  } else if (reason.find(why) == std::string::npos) {
    reason += "," + why;
  }
}

bool BoundReport::sandwich_holds(double tol) const {
  if (!actual) return true;
  if (lower && *lower > *actual + tol) return false;
  if (upper && *actual > *upper + tol) return false;
  return true;
}

BoundReport subtensor_lmax_bounds(const SymmetricTensor& t, const IndexSet& keep,
                                  const EigenPair& pair) {
  check_dim(pair.vector, t.dim());
  check_set(keep, t.dim(), "kept");
  BoundReport r;
  r.name = "subtensor-lmax";
  if (!is_zero_diagonal(t)) r.invalidate("not_zero_diagonal");
  if (t.order() % 2 != 0 && !is_nonnegative(t)) r.invalidate("regime_unsupported");
  check_eigenpair(r, t, pair);
  double lower = subtensor_numerator(t, keep, pair.vector, pair.value);
  r.lower = lower;
  r.upper = pair.value;
  r.details["mixed_correction"] = mixed_correction(t, keep, pair.vector);
  r.details["outside_mass"] = power_sum_on(pair.vector, keep.complement(t.dim()), t.order());
  if (std::abs(lower - pair.value) <= kHintTol * std::max(1.0, std::abs(pair.value))) {
    r.equality_hint = "eigenvector carried by the kept set";
  }
  return r;
}

BoundReport subtensor_rho_ratio_bound(const SymmetricTensor& t, const IndexSet& keep,
                                      const EigenPair& pair) {
  check_dim(pair.vector, t.dim());
  check_set(keep, t.dim(), "kept");
  BoundReport r;
  r.name = "subtensor-rho-ratio";
  if (!is_zero_diagonal(t)) r.invalidate("not_zero_diagonal");
  if (!is_nonnegative(t)) r.invalidate("negative_entry");
  if (!nonnegative(pair.vector)) r.invalidate("negative_eigenvector");
  check_eigenpair(r, t, pair);
  double numerator = subtensor_numerator(t, keep, pair.vector, pair.value);
  double mass = power_sum_on(pair.vector, keep, t.order());
  r.details["numerator"] = numerator;
  r.details["kept_mass"] = mass;
  r.upper = pair.value;
  r.flags["strict"] = is_weakly_irreducible(t) && static_cast<int>(keep.size()) < t.dim();
  if (mass == 0.0) {
    r.invalidate("zero_mass_on_kept_set");
    return r;
  }
  r.lower = numerator / mass;
  return r;
}

BoundReport equal_row_sum_ratio_lower(const SymmetricTensor& t, const IndexSet& keep) {
  check_set(keep, t.dim(), "kept");
  BoundReport r;
  r.name = "equal-row-sum-ratio";
  const int n = t.dim();
  const int k = t.order();
  Vector rows = row_sums(t);
  double rho = rows.front();
  for (double v : rows) {
    if (std::abs(v - rho) > 1e-12 * std::max(1.0, std::abs(rho))) {
      r.invalidate("unequal_row_sums");
      break;
    }
  }
  if (!is_nonnegative(t)) r.invalidate("negative_entry");
  if (!is_zero_diagonal(t)) r.invalidate("not_zero_diagonal");
  if (!is_weakly_irreducible(t)) r.invalidate("not_weakly_irreducible");
  Vector ones(n, 1.0);
  double correction = mixed_correction(t, keep, ones);
  double size = static_cast<double>(keep.size());
  r.lower = (rho * (n - k * (n - size)) - correction) / size;
  r.upper = rho;
  r.details["rho"] = rho;
  r.details["mixed_correction"] = correction;
  r.flags["strict"] = is_weakly_irreducible(t) && static_cast<int>(keep.size()) < n;
  return r;
}

BoundReport lmin_subtensor_bounds(const SymmetricTensor& t, const IndexSet& keep,
                                  const EigenPair& pair) {
  if (t.order() % 2 != 0) throw Error(ErrorCode::OddOrder, "least-eigenvalue bound needs even k");
  check_dim(pair.vector, t.dim());
  check_set(keep, t.dim(), "kept");
  BoundReport r;
  r.name = "lmin-subtensor";
  if (!is_zero_diagonal(t)) r.invalidate("not_zero_diagonal");
  check_eigenpair(r, t, pair);
  double upper1 = subtensor_numerator(t, keep, pair.vector, pair.value);
  double mass = power_sum_on(pair.vector, keep, t.order());
  r.lower = pair.value;
  r.details["upper1"] = upper1;
  r.details["kept_mass"] = mass;
  double upper = upper1;
  if (mass != 0.0) {
    double upper2 = upper1 / mass;
    r.details["upper2"] = upper2;
    upper = std::min(upper, upper2);
  }
  r.upper = upper;
  if (std::abs(upper1 - pair.value) <= kHintTol * std::max(1.0, std::abs(pair.value))) {
    r.equality_hint = "eigenvector carried by the kept set";
  }
  return r;
}

BoundReport vertex_set_removal_bounds(const Hypergraph& g, const IndexSet& removed,
                                      const EigenPair& pair) {
  const int n = g.vertex_count();
  const int k = g.uniformity();
  check_dim(pair.vector, n);
  check_set(removed, n, "removed");
  if (static_cast<int>(removed.size()) == n) {
    throw Error(ErrorCode::RemovesAllVertices, "cannot remove every vertex");
  }
  BoundReport r;
  r.name = "vertex-set-removal";
  if (!nonnegative(pair.vector)) r.invalidate("negative_eigenvector");
  check_eigenpair(r, adjacency_tensor(g), pair);
  double mass = power_sum_on(pair.vector, removed, k);
  double w = overlap_term(g, removed, pair.vector);
  double lower1 = pair.value * (1.0 - k * mass) + w;
  r.details["lower1"] = lower1;
  r.details["removed_mass"] = mass;
  r.details["overlap_term"] = w;
  double lower = lower1;
  if (std::abs(1.0 - mass) > 1e-15) {
    double lower2 = lower1 / (1.0 - mass);
    r.details["lower2"] = lower2;
    lower = std::max(lower, lower2);
  }
  r.lower = lower;
  r.upper = pair.value;
  if (mass == 0.0 && w == 0.0) r.equality_hint = "eigenvector vanishes on the removed set";
  return r;
}

BoundReport vertex_removal_bounds(const Hypergraph& g, Index v, const EigenPair& pair) {
  check_vertex(g, v);
  const int k = g.uniformity();
  BoundReport r = vertex_set_removal_bounds(g, IndexSet({v}), pair);
  r.name = "vertex-removal";
  double xv = ipow(pair.vector[v], k);
  double lower1 = (1.0 - k * xv) * pair.value;
  r.details["lower1"] = lower1;
  r.lower = lower1;
  r.details.erase("lower2");
  if (std::abs(1.0 - xv) > 1e-15) {
    double lower2 = pair.value * (1.0 - k * xv) / (1.0 - xv);
    r.details["lower2"] = lower2;
    r.lower = std::max(lower1, lower2);
    // Equality in lower2 holds when x restricted to V - v solves G - v's eigen-equation.
    VertexRemoval rest = remove_vertices(g, IndexSet({v}));
    Vector y;
    for (Index w : rest.kept) y.push_back(pair.vector[w]);
    double mass = power_sum(y, k);
    if (mass > 0.0) {
      y = normalize_k(y, k);
      double res = eigen_residual(adjacency_tensor(rest.graph), lower2, y);
      r.details["restriction_residual"] = res;
      bool eq = res <= kHintTol;
      r.flags["restriction_is_eigenvector"] = eq;
      if (eq) r.equality_hint = "restriction is eigenvector";
    }
  }
  return r;
}

BoundReport perron_entry_bounds(const Hypergraph& g, const IndexSet& set, const EigenPair& pair) {
  const int n = g.vertex_count();
  const int k = g.uniformity();
  check_dim(pair.vector, n);
  check_set(set, n, "vertex");
  BoundReport r;
  r.name = "perron-entry";
  if (!is_connected(g)) r.invalidate("not_connected");
  if (!nonnegative(pair.vector)) r.invalidate("negative_eigenvector");
  check_eigenpair(r, adjacency_tensor(g), pair);
  double mass = power_sum_on(pair.vector, set, k);
  double w = overlap_term(g, set, pair.vector);
  if (pair.value > 0.0) {
    r.upper = 1.0 / k + w / (k * pair.value);
  } else {
    r.invalidate("zero_spectral_radius");
  }
  r.details["overlap_term"] = w;
  r.set_actual(mass);
  if (set.size() == 1) {
    double entry = pair.vector[set.members().front()];
    double cap = std::pow(1.0 / k, 1.0 / k);
    r.details["entry"] = entry;
    r.details["entry_bound"] = cap;
    r.details["entry_margin"] = cap - entry;
    if (std::abs(cap - entry) <= kHintTol) r.equality_hint = "entry attains (1/k)^{1/k}";
  }
  return r;
}

BoundReport linear_vertex_removal_bound(const Hypergraph& g, Index v, double rho) {
  check_vertex(g, v);
  const int k = g.uniformity();
  BoundReport r;
  r.name = "linear-vertex-removal";
  if (!is_linear(g)) r.invalidate("not_linear");
  if (!is_connected(g)) r.invalidate("not_connected");
  double d = g.degree(v);
  r.lower = rho - std::pow(d / rho, 1.0 / (k - 1));
  r.upper = rho;
  r.details["degree"] = d;
  bool universal = is_universal_vertex(g, v);
  bool rest_regular = g.vertex_count() > 1 && is_regular(remove_vertices(g, IndexSet({v})).graph);
  r.flags["universal_vertex"] = universal;
  r.flags["remainder_regular"] = rest_regular;
  if (universal && rest_regular) r.equality_hint = "v adjacent to all vertices and G-v regular";
  return r;
}

BoundReport gamma_bounds(const Hypergraph& g, const SolverConfig& cfg) {
  const int n = g.vertex_count();
  const int k = g.uniformity();
  if (n < 2) throw Error(ErrorCode::BadArgument, "gamma needs at least two vertices");
  BoundReport r;
  r.name = "gamma";
  if (!is_linear(g)) r.invalidate("not_linear");
  if (!is_connected(g)) r.invalidate("not_connected");
  double rho = hyper_rho(g, cfg).value;
  auto removed = detail::parallel_map(static_cast<std::size_t>(n), [&](std::size_t v) {
    return hyper_rho(remove_vertices(g, IndexSet({static_cast<Index>(v)})).graph, cfg).value;
  });
  // Ties go to the smallest vertex.
  std::size_t arg = 0;
  for (std::size_t v = 1; v < removed.size(); ++v) {
    if (removed[v] > removed[arg] + kHintTol) arg = v;
  }
  double gamma = removed[arg];
  auto deg = g.degrees();
  double delta = *std::min_element(deg.begin(), deg.end());
  double ggv = rho - std::pow(delta / rho, 1.0 / (k - 1));
  r.lower = ggv;
  r.upper = rho;
  r.set_actual(gamma);
  r.details["rho"] = rho;
  r.details["gamma"] = gamma;
  r.details["gamma_vertex"] = static_cast<double>(arg);
  r.details["delta"] = delta;
  r.details["rho_minus_one"] = rho - 1.0;
  bool eq_ggv = std::abs(gamma - ggv) <= kHintTol;
  bool eq_one = std::abs(gamma - (rho - 1.0)) <= kHintTol;
  bool steiner = is_steiner_2(g);
  r.flags["equality_delta_bound"] = eq_ggv;
  r.flags["equality_rho_minus_one"] = eq_one;
  r.flags["steiner"] = steiner;
  r.flags["steiner_agrees"] = eq_one == steiner;
  bool all_vertices = true;
  for (int v = 0; v < n; ++v) {
    double lv = rho - std::pow(g.degree(v) / rho, 1.0 / (k - 1));
    if (std::abs(removed[v] - lv) > kHintTol) all_vertices = false;
  }
  r.flags["equality_at_every_vertex"] = all_vertices;
  if (eq_one) r.equality_hint = "gamma = rho - 1";
  return r;
}

BoundReport edge_removal_rho_bounds(const Hypergraph& g, const EdgeList& removed,
                                    const EigenPair& pair_g, const EigenPair& pair_gf) {
  check_edges(g, removed);
  check_dim(pair_g.vector, g.vertex_count());
  check_dim(pair_gf.vector, g.vertex_count());
  const int k = g.uniformity();
  BoundReport r;
  r.name = "edge-removal";
  if (!nonnegative(pair_g.vector) || !nonnegative(pair_gf.vector)) {
    r.invalidate("negative_eigenvector");
  }
  check_eigenpair(r, adjacency_tensor(g), pair_g);
  double fx = edge_sum(removed, pair_g.vector);
  double fy = edge_sum(removed, pair_gf.vector);
  r.lower = pair_g.value - k * fx;
  r.upper = pair_g.value - k * fy;
  r.details["removed_weight_x"] = fx;
  r.details["removed_weight_y"] = fy;
  r.set_actual(pair_gf.value);
  return r;
}

BoundReport lmin_vertex_removal_bounds(const Hypergraph& g, const IndexSet& removed,
                                       const EigenPair& pair) {
  const int n = g.vertex_count();
  const int k = g.uniformity();
  if (k % 2 != 0) throw Error(ErrorCode::OddOrder, "least-eigenvalue bound needs even k");
  check_dim(pair.vector, n);
  check_set(removed, n, "removed");
  if (static_cast<int>(removed.size()) == n) {
    throw Error(ErrorCode::RemovesAllVertices, "cannot remove every vertex");
  }
  BoundReport r;
  r.name = "lmin-vertex-removal";
  check_eigenpair(r, adjacency_tensor(g), pair);
  double mass = power_sum_on(pair.vector, removed, k);
  double upper1 = pair.value * (1.0 - k * mass) + overlap_term(g, removed, pair.vector);
  r.lower = pair.value;
  r.details["upper1"] = upper1;
  r.details["removed_mass"] = mass;
  double upper = upper1;
  // Normalized by the mass left on the kept vertices.
  if (std::abs(1.0 - mass) > 1e-15) {
    double upper2 = upper1 / (1.0 - mass);
    r.details["upper2"] = upper2;
    upper = std::min(upper, upper2);
  } else {
    r.invalidate("full_mass_on_removed_set");
  }
  r.upper = upper;
  return r;
}

BoundReport lmin_edge_removal_bounds(const Hypergraph& g, const EdgeList& removed,
                                     const EigenPair& pair_g, const EigenPair& pair_gf) {
  const int k = g.uniformity();
  if (k % 2 != 0) throw Error(ErrorCode::OddOrder, "least-eigenvalue bound needs even k");
  check_edges(g, removed);
  check_dim(pair_g.vector, g.vertex_count());
  check_dim(pair_gf.vector, g.vertex_count());
  BoundReport r;
  r.name = "lmin-edge-removal";
  check_eigenpair(r, adjacency_tensor(g), pair_g);
  double fx = edge_sum(removed, pair_g.vector);
  double fy = edge_sum(removed, pair_gf.vector);
  r.lower = pair_g.value - k * fy;
  r.upper = pair_g.value - k * fx;
  r.details["removed_weight_x"] = fx;
  r.details["removed_weight_y"] = fy;
  r.set_actual(pair_gf.value);
  return r;
}

BoundReport least_vector_entry_bound(const Hypergraph& g, Index i, const EigenPair& pair) {
  const int k = g.uniformity();
  if (k % 2 != 0) throw Error(ErrorCode::OddOrder, "least-eigenvalue bound needs even k");
  check_vertex(g, i);
  check_dim(pair.vector, g.vertex_count());
  BoundReport r;
  r.name = "least-vector-entry";
  if (!is_linear(g)) r.invalidate("not_linear");
  if (g.edge_count() == 0) r.invalidate("no_edges");
  check_eigenpair(r, adjacency_tensor(g), pair);
  const double d = g.degree(i);
  const double cap = std::pow(ipow(pair.value, k), 1.0 / (k - 1));
  r.upper = d == 0.0 ? 0.0 : d / (d + (k - 1) * cap);
  r.details["degree"] = d;
  r.details["lambda_power"] = cap;
  r.set_actual(ipow(pair.vector[i], k));

  // Equality: neighbours carry x_j^k = cap x_i^k / d^2, everything else is 0,
  // and x^{e - i} has one sign over the edges at i.
  if (d > 0.0) {
    const double xi = ipow(pair.vector[i], k);
    std::vector<bool> nbr(g.vertex_count(), false);
    int sign = 0;
    bool same_sign = true;
    for (const auto& e : g.edges()) {
      if (!std::binary_search(e.begin(), e.end(), i)) continue;
      double rest = 1.0;
      for (Index w : e) {
        if (w != i) {
          nbr[w] = true;
          rest *= pair.vector[w];
        }
      }
      int s = rest > 0 ? 1 : (rest < 0 ? -1 : 0);
      if (sign == 0) sign = s;
      if (s != sign) same_sign = false;
    }
    bool pattern = true;
    for (int j = 0; j < g.vertex_count(); ++j) {
      if (static_cast<Index>(j) == i) continue;
      double want = nbr[j] ? cap * xi / (d * d) : 0.0;
      if (std::abs(ipow(pair.vector[j], k) - want) > kHintTol) pattern = false;
    }
    r.flags["neighbour_pattern"] = pattern;
    r.flags["same_sign"] = same_sign;
    if (pattern && same_sign) r.equality_hint = "neighbour values and edge signs match";
  }
  return r;
}

BoundReport cmax_bounds(const Hypergraph& g, const SolverConfig& cfg) {
  const int n = g.vertex_count();
  const int k = g.uniformity();
  if (k % 2 != 0) throw Error(ErrorCode::OddOrder, "c_max needs even k");
  BoundReport r;
  r.name = "cmax";
  if (g.edge_count() == 0) {
    r.invalidate("no_edges");
    return r;
  }
  SymmetricTensor a = adjacency_tensor(g);
  auto pairs = stationary_pairs_even(a, EigenKind::Min, cfg);
  if (pairs.empty()) throw Error(ErrorCode::NoConvergence, "no restart converged");
  const double lambda = pairs.front().value;
  double cmax = 0.0;
  for (const auto& p : pairs) {
    if (std::abs(p.value - lambda) > kHintTol) continue;
    for (double v : p.vector) cmax = std::max(cmax, std::abs(v));
  }
  r.details["lambda"] = lambda;
  const bool linear = is_linear(g);
  const bool bip = is_odd_bipartite(g);
  const bool conn = is_connected(g);
  r.flags["linear"] = linear;
  r.flags["odd_bipartite"] = bip;
  r.flags["connected"] = conn;
  if (linear) {
    r.upper = std::pow((n - 1.0) / (n - 1.0 + (k - 1.0) * (k - 1.0)), 1.0 / k);
  }
  if (bip && conn) {
    r.lower = std::pow(-lambda / (k * static_cast<double>(g.edge_count())), 1.0 / k);
    if (is_regular(g)) r.equality_hint = "regular: lower bound attained";
  }
  if (!r.lower && !r.upper) r.invalidate("not_linear,not_odd_bipartite_connected");
  r.set_actual(cmax);
  return r;
}

double equality_witness_rho(double d, double r, int k) {
  if (!(d > 0.0) || !(r >= 0.0) || k < 2) {
    throw Error(ErrorCode::NoRoot, "need d > 0, r >= 0, k >= 2");
  }
  // f(t) = t (t-r)^{k-1} - d is increasing on (r, inf) with f(r) = -d < 0.
  auto f = [&](double t) { return t * ipow(t - r, k - 1) - d; };
  double lo = r;
  double hi = r + 1.0;
  while (f(hi) < 0.0) {
    hi = r + 2.0 * (hi - r);
    if (!std::isfinite(hi)) throw Error(ErrorCode::NoRoot, "root bracket diverged");
  }
  double t = hi;
  for (int it = 0; it < 200; ++it) {
    double ft = f(t);
    if (ft == 0.0) return t;
    if (ft < 0.0) lo = t; else hi = t;
    double df = ipow(t - r, k - 1) + (k - 1) * t * ipow(t - r, k - 2);
    double next = t - ft / df;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - t) <= 1e-15 * std::max(1.0, std::abs(t))) return next;
    t = next;
  }
  return t;
}

}  // namespace hspec
