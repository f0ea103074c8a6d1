#include "hspec/oracle.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>

#include "parallel.hpp"

namespace hspec {

namespace {

constexpr double kValueTol = 1e-6;
constexpr double kResidualTol = 1e-8;
// Vectors at a singular root (zero coordinates, k >= 3) are only accurate to
// about eps^{1/(k-1)}, so duplicates are merged at this distance.
constexpr double kVectorTol = 1e-4;
constexpr int kNewtonSteps = 200;
// Seeds per run above this are thinned; a thinned run is never certified.
constexpr long kMaxSeeds = 1L << 18;

double max_distance(const Vector& a, const Vector& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

// Unit direction for grid point `cell` (mixed radix over n-1 angles).
Vector direction(int n, int per_angle, long cell) {
  Vector x(n, 0.0);
  double sin_prod = 1.0;
  for (int a = 0; a < n - 1; ++a) {
    int j = static_cast<int>(cell % per_angle);
    cell /= per_angle;
    double phi = (j + 0.5) * std::numbers::pi / per_angle;
    x[a] = sin_prod * std::cos(phi);
    sin_prod *= std::sin(phi);
  }
  x[n - 1] = sin_prod;
  return x;
}

double inf_norm(const Eigen::VectorXd& v) { return v.cwiseAbs().maxCoeff(); }

Eigen::VectorXd system(const SymmetricTensor& t, const Vector& c, const Vector& x, double lambda) {
  const int n = t.dim();
  const int k = t.order();
  Vector g = t.apply(x);
  Eigen::VectorXd f(n + 1);
  double cx = 0.0;
  for (int i = 0; i < n; ++i) {
    f(i) = g[i] - lambda * ipow(x[i], k - 1);
    cx += c[i] * x[i];
  }
  f(n) = cx - 1.0;
  return f;
}

// Damped Newton on {T x^{k-1} = lambda x^{[k-1]}, c.x = 1} from x = c.
std::optional<EigenPair> newton_from(const SymmetricTensor& t, const Vector& c) {
  const int n = t.dim();
  const int k = t.order();
  Vector x = c;
  double mass = 0.0;
  for (double v : x) mass += ipow(v, k);
  double lambda = std::abs(mass) > 1e-3 ? t.form(x) / mass : 0.0;
  Eigen::VectorXd f = system(t, c, x, lambda);
  const double scale = 1.0 + max_abs_value(t);
  // Keeps stepping past a small residual: at a singular root (a zero
  // coordinate of an order >= 3 system) convergence is only linear, and
  // stopping early would leave near-duplicate vectors.
  for (int step = 0; step < kNewtonSteps; ++step) {
    if (inf_norm(f) == 0.0) break;
    std::vector<double> m = t.contract2(x);
    Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(n + 1, n + 1);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) jac(i, j) = (k - 1) * m[i * n + j];
      jac(i, i) -= lambda * (k - 1) * ipow(x[i], k - 2);
      jac(i, n) = -ipow(x[i], k - 1);
      jac(n, i) = c[i];
    }
    Eigen::VectorXd delta = jac.colPivHouseholderQr().solve(-f);
    if (!delta.allFinite()) return std::nullopt;
    double damping = 1.0;
    bool accepted = false;
    for (int halving = 0; halving < 12; ++halving, damping *= 0.5) {
      Vector trial = x;
      for (int i = 0; i < n; ++i) trial[i] += damping * delta(i);
      double trial_lambda = lambda + damping * delta(n);
      Eigen::VectorXd tf = system(t, c, trial, trial_lambda);
      if (tf.allFinite() && tf.norm() < f.norm()) {
        x = std::move(trial);
        lambda = trial_lambda;
        f = tf;
        accepted = true;
        break;
      }
    }
    if (!accepted) break;
    if (damping * delta.lpNorm<Eigen::Infinity>() <= 1e-15 && inf_norm(f) <= 1e-13 * scale) break;
    if (inf_norm(Eigen::Map<const Eigen::VectorXd>(x.data(), n)) > 1e6) return std::nullopt;
  }
  Vector unit;
  try {
    unit = normalize_k(x, k);
  } catch (const Error&) {
    return std::nullopt;
  }
  double res = eigen_residual(t, lambda, unit);
  if (!(res <= kResidualTol) || !std::isfinite(lambda)) return std::nullopt;
  sign_normalize(unit);
  EigenPair p;
  p.value = lambda;
  p.vector = std::move(unit);
  p.residual = res;
  p.claim = GlobalClaim::Heuristic;
  return p;
}

bool same_pair(const EigenPair& a, const EigenPair& b, double vector_tol) {
  if (std::abs(a.value - b.value) > kValueTol) return false;
  if (max_distance(a.vector, b.vector) <= vector_tol) return true;
  Vector neg = b.vector;
  for (double& v : neg) v = -v;
  return max_distance(a.vector, neg) <= vector_tol;
}

struct Sweep {
  std::vector<EigenPair> pairs;
  bool thinned = false;
};

Sweep sweep(const SymmetricTensor& t, int resolution) {
  const int n = t.dim();
  Sweep s;
  if (n == 1) {
    EigenPair p;
    p.value = t.entry(MultiIndex(t.order(), 0));
    p.vector = {1.0};
    s.pairs.push_back(p);
    return s;
  }
  int per_angle = resolution;
  auto total = [&](int r) {
    long c = 1;
    for (int a = 0; a < n - 1; ++a) c *= r;
    return c;
  };
  while (total(per_angle) > kMaxSeeds) {
    --per_angle;
    s.thinned = true;
  }
  const long cells = total(per_angle);
  auto found = detail::parallel_map(static_cast<std::size_t>(cells), [&](std::size_t cell) {
    return newton_from(t, direction(n, per_angle, static_cast<long>(cell)));
  });
  for (auto& p : found) {
    if (!p) continue;
    bool seen = std::any_of(s.pairs.begin(), s.pairs.end(),
                            [&](const EigenPair& q) { return same_pair(q, *p, kVectorTol); });
    if (!seen) s.pairs.push_back(std::move(*p));
  }
  std::sort(s.pairs.begin(), s.pairs.end(), [](const EigenPair& a, const EigenPair& b) {
    if (a.value != b.value) return a.value < b.value;
    return std::lexicographical_compare(a.vector.begin(), a.vector.end(), b.vector.begin(),
                                        b.vector.end());
  });
  return s;
}

}  // namespace

double OracleResult::max_value() const {
  if (pairs.empty()) throw Error(ErrorCode::BadArgument, "oracle found no eigenpairs");
  return pairs.back().value;
}

double OracleResult::min_value() const {
  if (pairs.empty()) throw Error(ErrorCode::BadArgument, "oracle found no eigenpairs");
  return pairs.front().value;
}

OracleResult enumerate_h_eigenpairs(const SymmetricTensor& t, int resolution) {
  if (t.dim() > 5) throw Error(ErrorCode::DimensionTooLarge, "oracle handles dimension <= 5");
  if (resolution < 32) throw Error(ErrorCode::BadArgument, "oracle resolution must be >= 32");
  Sweep coarse = sweep(t, resolution);
  Sweep fine = sweep(t, 2 * resolution);
  OracleResult out;
  out.grid_resolution = resolution;
  out.certified = !coarse.thinned && !fine.thinned;
  // Compared by eigenvalue: a value whose eigenvectors form a continuum yields
  // fresh vectors at every resolution.
  for (const auto& p : fine.pairs) {
    bool known = std::any_of(coarse.pairs.begin(), coarse.pairs.end(), [&](const EigenPair& q) {
      return std::abs(q.value - p.value) <= kValueTol;
    });
    if (!known) out.certified = false;
  }
  // Union of both sweeps, fine first so the sort below is stable.
  out.pairs = std::move(fine.pairs);
  for (auto& p : coarse.pairs) {
    bool known = std::any_of(out.pairs.begin(), out.pairs.end(),
                             [&](const EigenPair& q) { return same_pair(q, p, kVectorTol); });
    if (!known) out.pairs.push_back(std::move(p));
  }
  std::sort(out.pairs.begin(), out.pairs.end(), [](const EigenPair& a, const EigenPair& b) {
    if (a.value != b.value) return a.value < b.value;
    return std::lexicographical_compare(a.vector.begin(), a.vector.end(), b.vector.begin(),
                                        b.vector.end());
  });
  return out;
}

bool oracle_contains(const OracleResult& oracle, const EigenPair& pair, double vector_tol) {
  return std::any_of(oracle.pairs.begin(), oracle.pairs.end(),
                     [&](const EigenPair& q) { return same_pair(q, pair, vector_tol); });
}

bool verify_with_oracle(const SymmetricTensor& t, EigenPair& pair, int resolution) {
  OracleResult oracle = enumerate_h_eigenpairs(t, resolution);
  if (!oracle.certified || oracle.pairs.empty()) return false;
  double target = pair.kind == EigenKind::Min ? oracle.min_value() : oracle.max_value();
  if (std::abs(target - pair.value) > kValueTol) return false;
  pair.claim = GlobalClaim::Verified;
  return true;
}

std::vector<ClosedFormRow> verify_closed_forms(const SolverConfig& cfg) {
  std::vector<ClosedFormRow> rows;
  const double two23 = std::cbrt(4.0);
  for (int n = 3; n <= 6; ++n) {
    const std::string tag = "n=" + std::to_string(n);
    Hypergraph cycle = hypercycle3(n);
    Hypergraph path = hyperpath3(n);
    EigenPair rc = hyper_rho(cycle, cfg);
    EigenPair rp = hyper_rho(path, cfg);
    double expected_p = two23 * std::pow(std::cos(std::numbers::pi / (n + 1)), 2.0 / 3.0);
    rows.push_back({"rho(C_" + std::to_string(2 * n) + "^3) " + tag, two23, rc.value, 1e-8,
                    std::abs(rc.value - two23) <= 1e-8});
    rows.push_back({"rho(P_" + std::to_string(2 * n - 1) + "^3) " + tag, expected_p, rp.value,
                    1e-8, std::abs(rp.value - expected_p) <= 1e-8});

    // Explicit eigenvector: (2/3n)^{1/3} on degree-2 vertices, (1/3n)^{1/3} on the rest.
    Vector x(2 * n);
    for (int v = 0; v < 2 * n; ++v) {
      x[v] = std::cbrt((v % 2 == 0 ? 2.0 : 1.0) / (3.0 * n));
    }
    SymmetricTensor a = adjacency_tensor(cycle);
    double res = eigen_residual(a, two23, x);
    rows.push_back({"C_" + std::to_string(2 * n) + "^3 closed-form eigenvector residual", 0.0,
                    res, 1e-12, res <= 1e-12});
    double norm_err = std::abs(power_sum(x, 3) - 1.0);
    rows.push_back({"C_" + std::to_string(2 * n) + "^3 closed-form eigenvector unit norm", 0.0,
                    norm_err, 1e-12, norm_err <= 1e-12});
    double dist = max_distance(rc.vector, x);
    rows.push_back({"C_" + std::to_string(2 * n) + "^3 solver vector vs closed form", 0.0, dist,
                    1e-6, dist <= 1e-6});
  }
  return rows;
}

}  // namespace hspec
