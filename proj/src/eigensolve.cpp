#include "hspec/eigensolve.hpp"

#include <Eigen/Dense>

#include "parallel.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <random>
#include <string>

namespace hspec {

std::string_view to_string(EigenKind kind) {
  switch (kind) {
    case EigenKind::Max: return "max";
    case EigenKind::Min: return "min";
    case EigenKind::Rho: return "rho";
  }
  return "?";
}

std::string_view to_string(GlobalClaim claim) {
  switch (claim) {
    case GlobalClaim::Heuristic: return "heuristic";
    case GlobalClaim::Bracket: return "bracket";
    case GlobalClaim::Verified: return "verified";
  }
  return "?";
}

void SolverConfig::validate() const {
  if (!(tol > 0.0) || !std::isfinite(tol)) throw Error(ErrorCode::BadArgument, "tol must be > 0");
  if (max_iter < 1) throw Error(ErrorCode::BadArgument, "max_iter must be >= 1");
  if (restarts < 1) throw Error(ErrorCode::BadArgument, "restarts must be >= 1");
  if (!shift.automatic && !(shift.alpha >= 0.0)) {
    throw Error(ErrorCode::BadArgument, "fixed shift must be >= 0");
  }
}

double eigen_residual(const SymmetricTensor& t, double lambda, std::span<const double> x) {
  Vector g = t.apply(x);
  double r = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    r = std::max(r, std::abs(g[i] - lambda * ipow(x[i], t.order() - 1)));
  }
  return r;
}

Vector normalize_k(std::span<const double> x, int k) {
  double norm = std::pow(power_sum(x, k), 1.0 / k);
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw Error(ErrorCode::BadArgument, "cannot normalize a zero or non-finite vector");
  }
  Vector out(x.begin(), x.end());
  for (double& v : out) v /= norm;
  return out;
}

void sign_normalize(Vector& x) {
  double peak = 0.0;
  for (double v : x) peak = std::max(peak, std::abs(v));
  if (peak == 0.0) return;
  for (double v : x) {
    if (std::abs(v) >= peak * (1.0 - 1e-9)) {
      if (v < 0.0) {
        for (double& w : x) w = -w;
      }
      return;
    }
  }
}

namespace {

constexpr int kStallWindow = 50;

double sgnpow(double v, double p) { return std::copysign(std::pow(std::abs(v), p), v); }

double dot(const Vector& a, const Vector& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Newton on {T x^{k-1} - lambda x^{[k-1]} = 0, sum x_i^k = 1} from a nearby
// approximate pair. Returns nothing if it wanders to a different eigenvalue.
std::optional<std::pair<double, Vector>> newton_polish(const SymmetricTensor& t, double lambda,
                                                       Vector x, double tol, long& iterations) {
  const int n = t.dim();
  const int k = t.order();
  const double start = lambda;
  double best_res = eigen_residual(t, lambda, x);
  for (int it = 0; it < 30 && best_res > tol; ++it) {
    Vector g = t.apply(x);
    std::vector<double> m = t.contract2(x);
    Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(n + 1, n + 1);
    Eigen::VectorXd f(n + 1);
    for (int i = 0; i < n; ++i) {
      f(i) = g[i] - lambda * ipow(x[i], k - 1);
      for (int j = 0; j < n; ++j) jac(i, j) = (k - 1) * m[i * n + j];
      jac(i, i) -= lambda * (k - 1) * ipow(x[i], k - 2);
      jac(i, n) = -ipow(x[i], k - 1);
      jac(n, i) = ipow(x[i], k - 1);
    }
    f(n) = (power_sum(x, k) - 1.0) / k;
    Eigen::VectorXd step = jac.colPivHouseholderQr().solve(-f);
    if (!step.allFinite()) return std::nullopt;
    for (int i = 0; i < n; ++i) x[i] += step(i);
    lambda += step(n);
    ++iterations;
    try {
      x = normalize_k(x, k);
    } catch (const Error&) {
      return std::nullopt;
    }
    best_res = eigen_residual(t, lambda, x);
  }
  if (best_res > tol) return std::nullopt;
  if (std::abs(lambda - start) > 1e-6 * std::max(1.0, std::abs(start))) return std::nullopt;
  return std::make_pair(lambda, std::move(x));
}

// Deterministic standard normals from a 64-bit seed.
class NormalStream {
 public:
  explicit NormalStream(std::uint64_t seed) : rng_(seed) {}
  double next() {
    if (cached_) {
      cached_ = false;
      return spare_;
    }
    double u1 = uniform();
    double u2 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double theta = 2.0 * 3.14159265358979323846 * u2;
    spare_ = r * std::sin(theta);
    cached_ = true;
    return r * std::cos(theta);
  }

 private:
  double uniform() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }
  std::mt19937_64 rng_;
  double spare_ = 0.0;
  bool cached_ = false;
};

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::vector<Vector> starting_points(int n, const SolverConfig& cfg, bool nonnegative) {
  std::vector<Vector> starts;
  starts.emplace_back(n, 1.0);
  for (int i = 0; i < n; ++i) {
    Vector e(n, 0.0);
    e[i] = 1.0;
    starts.push_back(e);
    if (!nonnegative) {
      e[i] = -1.0;
      starts.push_back(e);
    }
  }
  for (int r = 0; r < cfg.restarts; ++r) {
    NormalStream normals(mix_seed(cfg.seed, static_cast<std::uint64_t>(r)));
    Vector v(n);
    for (double& c : v) c = normals.next();
    if (nonnegative) {
      for (double& c : v) c = std::abs(c);
    }
    starts.push_back(std::move(v));
  }
  return starts;
}

struct AscentResult {
  double value;  // of the ascended tensor
  Vector x;
  long iterations;
};

// Shifted fixed-point ascent of f(x) = A x^k on the unit k-sphere, optionally
// projected onto the nonnegative orthant. The shift doubles whenever a step
// would decrease f. Returns a pair whose residual is <= tol, if one is found.
std::optional<AscentResult> shifted_ascent(const SymmetricTensor& a, Vector x, double alpha,
                                           bool project, const SolverConfig& cfg) {
  const int k = a.order();
  const double inv = 1.0 / (k - 1);
  try {
    x = normalize_k(x, k);
  } catch (const Error&) {
    return std::nullopt;
  }
  Vector g = a.apply(x);
  double f = dot(x, g);
  std::deque<double> history;
  long it = 0;
  for (; it < cfg.max_iter; ++it) {
    double res = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      res = std::max(res, std::abs(g[i] - f * ipow(x[i], k - 1)));
    }
    if (res <= cfg.tol) return AscentResult{f, x, it};
    history.push_back(f);
    if (history.size() > kStallWindow) {
      history.pop_front();
      if (std::abs(f - history.front()) < cfg.tol * std::max(1.0, std::abs(f))) break;
    }
    Vector y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      double v = g[i] + alpha * sgnpow(x[i], k - 1);
      if (project) v = std::max(v, 0.0);
      y[i] = sgnpow(v, inv);
    }
    Vector xn;
    try {
      xn = normalize_k(y, k);
    } catch (const Error&) {
      return std::nullopt;
    }
    Vector gn = a.apply(xn);
    double fn = dot(xn, gn);
    if (fn < f - 1e-13 * std::max(1.0, std::abs(f))) {
      alpha = 2.0 * alpha;
      continue;
    }
    x = std::move(xn);
    g = std::move(gn);
    f = fn;
  }
  // Stalled or out of iterations: try to finish with Newton.
  auto polished = newton_polish(a, f, x, cfg.tol, it);
  if (!polished) return std::nullopt;
  if (project) {
    for (double& v : polished->second) {
      if (v < -1e-12) return std::nullopt;
      v = std::max(v, 0.0);
    }
  }
  double value = polished->first;
  return AscentResult{value, std::move(polished->second), it};
}

double default_shift(const SymmetricTensor& t) {
  double a = (t.order() - 1) * max_abs_value(t) * t.dim();
  return a > 0.0 ? a : 1.0;
}

// Lexicographic comparison used to break value ties deterministically.
bool lex_less(const Vector& a, const Vector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Sort best-first: larger ascended value, ties by smallest vector.
void sort_best_first(std::vector<AscentResult>& results, double tol) {
  std::stable_sort(results.begin(), results.end(),
                   [tol](const AscentResult& a, const AscentResult& b) {
                     double scale = 10.0 * tol * std::max(1.0, std::abs(a.value));
                     if (std::abs(a.value - b.value) > scale) return a.value > b.value;
                     return lex_less(a.x, b.x);
                   });
}

std::vector<AscentResult> multistart(const SymmetricTensor& a, bool project,
                                     const SolverConfig& cfg) {
  auto starts = starting_points(a.dim(), cfg, project);
  const double alpha = cfg.shift.automatic ? default_shift(a) : cfg.shift.alpha;
  auto runs = detail::parallel_map(starts.size(), [&](std::size_t i) {
    return shifted_ascent(a, starts[i], alpha, project, cfg);
  });
  std::vector<AscentResult> ok;
  for (auto& r : runs) {
    if (!r) continue;
    if (!project) sign_normalize(r->x);
    ok.push_back(std::move(*r));
  }
  sort_best_first(ok, cfg.tol);
  return ok;
}

EigenPair to_pair(const SymmetricTensor& t, double value, Vector x, EigenKind kind,
                  long iterations, GlobalClaim claim) {
  EigenPair p;
  p.value = value;
  p.residual = eigen_residual(t, value, x);
  p.vector = std::move(x);
  p.kind = kind;
  p.iterations = iterations;
  p.claim = claim;
  return p;
}

// Embeds a per-block vector into the full index space.
Vector embed(const std::vector<Index>& relabel, const Vector& local, int n) {
  Vector x(n, 0.0);
  for (std::size_t i = 0; i < relabel.size(); ++i) x[relabel[i]] = local[i];
  return x;
}

struct BlockResult {
  double value;
  Vector local;
  long iterations;
  Bracket bracket;
};

BlockResult power_iteration_block(const SymmetricTensor& t, const SolverConfig& cfg) {
  const int k = t.order();
  const int n = t.dim();
  double alpha = cfg.shift.alpha;
  if (cfg.shift.automatic) {
    Vector r = row_sums(t);
    alpha = 1.0 + *std::max_element(r.begin(), r.end());
  }
  Vector x = normalize_k(Vector(n, 1.0), k);
  Bracket b{0.0, std::numeric_limits<double>::infinity()};
  for (long it = 0; it < cfg.max_iter; ++it) {
    Vector g = t.apply(x);
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    Vector y(n);
    for (int i = 0; i < n; ++i) {
      double xp = ipow(x[i], k - 1);
      double ratio = g[i] / xp;
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
      y[i] = std::pow(g[i] + alpha * xp, 1.0 / (k - 1));
    }
    b = {lo, hi};
    if (hi - lo <= cfg.tol * std::max(1.0, std::abs(hi))) {
      return {0.5 * (lo + hi), x, it, b};
    }
    x = normalize_k(y, k);
  }
  throw Error(ErrorCode::NoConvergence,
              "power iteration hit the iteration cap with bracket width " +
                  std::to_string(b.upper - b.lower));
}

}  // namespace

EigenPair spectral_radius_nonneg(const SymmetricTensor& t, const SolverConfig& cfg) {
  cfg.validate();
  if (!is_nonnegative(t)) {
    throw Error(ErrorCode::NegativeEntry, "spectral radius solver needs a nonnegative tensor");
  }
  const int n = t.dim();
  std::optional<BlockResult> best;
  std::vector<Index> best_relabel;
  long iterations = 0;
  for (const auto& block : components(t)) {
    BlockResult r;
    if (block.size() == 1) {
      MultiIndex diag(t.order(), block.members().front());
      double d = t.entry(diag);
      r = {d, Vector{1.0}, 0, {d, d}};
    } else {
      r = power_iteration_block(principal_subtensor(t, block).tensor, cfg);
    }
    iterations += r.iterations;
    if (!best || r.value > best->value + 10.0 * cfg.tol * std::max(1.0, best->value)) {
      best = std::move(r);
      best_relabel = block.members();
    }
  }
  EigenPair p = to_pair(t, best->value, embed(best_relabel, best->local, n), EigenKind::Rho,
                        iterations, GlobalClaim::Bracket);
  p.bracket = best->bracket;
  return p;
}

std::vector<EigenPair> stationary_pairs_even(const SymmetricTensor& t, EigenKind which,
                                             const SolverConfig& cfg) {
  cfg.validate();
  if (t.order() % 2 != 0) throw Error(ErrorCode::OddOrder, "solver needs an even-order tensor");
  if (which == EigenKind::Rho) which = EigenKind::Max;
  const double sign = which == EigenKind::Min ? -1.0 : 1.0;
  const SymmetricTensor a = sign > 0 ? t : t.scaled(-1.0);
  auto results = multistart(a, false, cfg);
  std::vector<EigenPair> out;
  for (auto& r : results) {
    out.push_back(to_pair(t, sign * r.value, std::move(r.x), which, r.iterations,
                          GlobalClaim::Heuristic));
  }
  return out;
}

EigenPair extreme_h_eigen_even(const SymmetricTensor& t, EigenKind which,
                               const SolverConfig& cfg) {
  auto pairs = stationary_pairs_even(t, which, cfg);
  if (pairs.empty()) {
    throw Error(ErrorCode::NoConvergence, "no restart converged to an H-eigenpair");
  }
  long total = 0;
  for (const auto& p : pairs) total += p.iterations;
  EigenPair best = std::move(pairs.front());
  best.iterations = total;
  return best;
}

EigenPair largest_h_eigen_orthant(const SymmetricTensor& t, const SolverConfig& cfg) {
  cfg.validate();
  const int n = t.dim();
  std::optional<AscentResult> best;
  std::vector<Index> best_relabel;
  long iterations = 0;
  for (const auto& block : components(t)) {
    AscentResult r;
    if (block.size() == 1) {
      MultiIndex diag(t.order(), block.members().front());
      r = {t.entry(diag), Vector{1.0}, 0};
    } else {
      auto runs = multistart(principal_subtensor(t, block).tensor, true, cfg);
      if (runs.empty()) {
        throw Error(ErrorCode::NoConvergence, "no restart converged to an H-eigenpair");
      }
      for (const auto& run : runs) iterations += run.iterations;
      r = std::move(runs.front());
    }
    if (!best || r.value > best->value + 10.0 * cfg.tol * std::max(1.0, std::abs(best->value))) {
      best = std::move(r);
      best_relabel = block.members();
    }
  }
  return to_pair(t, best->value, embed(best_relabel, best->x, n), EigenKind::Max, iterations,
                 GlobalClaim::Heuristic);
}

EigenPair extreme_h_eigen(const SymmetricTensor& t, EigenKind which, const SolverConfig& cfg) {
  if (t.order() % 2 == 0) {
    if (which == EigenKind::Rho) {
      if (!is_nonnegative(t)) {
        throw Error(ErrorCode::NegativeEntry, "rho requested for a tensor with negative entries");
      }
      return spectral_radius_nonneg(t, cfg);
    }
    return extreme_h_eigen_even(t, which, cfg);
  }
  if (which == EigenKind::Min) {
    throw Error(ErrorCode::OddOrder, "least H-eigenvalue of an odd-order tensor is not supported");
  }
  if (is_nonnegative(t)) {
    EigenPair p = spectral_radius_nonneg(t, cfg);
    p.kind = which;
    return p;
  }
  if (which == EigenKind::Rho) {
    throw Error(ErrorCode::NegativeEntry, "rho requested for a tensor with negative entries");
  }
  return largest_h_eigen_orthant(t, cfg);
}

EigenPair hyper_rho(const Hypergraph& g, const SolverConfig& cfg) {
  return spectral_radius_nonneg(adjacency_tensor(g), cfg);
}

EigenPair hyper_lambda_min(const Hypergraph& g, const SolverConfig& cfg) {
  if (g.uniformity() % 2 != 0) {
    throw Error(ErrorCode::OddOrder, "least H-eigenvalue needs even uniformity");
  }
  return extreme_h_eigen_even(adjacency_tensor(g), EigenKind::Min, cfg);
}

}  // namespace hspec
