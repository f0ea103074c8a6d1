// hspec: command-line front end for the solvers, bounds and fixture table.
//
// Exit codes: 0 success, 1 input error, 2 solver did not converge,
// 3 verify-paper found failing rows.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>

#include "hspec/fixtures.hpp"
#include "hspec/io.hpp"
#include "hspec/runner.hpp"

using json = nlohmann::ordered_json;
using namespace hspec;

namespace {

constexpr int kInputError = 1;
constexpr int kNoConvergence = 2;
constexpr int kFixtureFailure = 3;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string fmt(const std::optional<double>& v) { return v ? fmt(*v) : "-"; }

json opt(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

// "2,3" -> {1, 2}. Indices are 1-based on the command line.
std::vector<Index> parse_list(const std::string& text, int n, const std::string& flag) {
  std::vector<Index> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    auto b = tok.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    auto e = tok.find_last_not_of(" \t");
    tok = tok.substr(b, e - b + 1);
    long v = 0;
    try {
      std::size_t used = 0;
      v = std::stol(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, flag + ": '" + tok + "' is not an integer");
    }
    if (v < 1 || v > n) {
      throw Error(ErrorCode::IndexOutOfRange,
                  flag + ": index " + std::to_string(v) + " outside 1.." + std::to_string(n));
    }
    out.push_back(static_cast<Index>(v - 1));
  }
  return out;
}

EdgeList parse_edges(const std::string& text, const Hypergraph& g) {
  EdgeList out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ';')) {
    if (part.find_first_not_of(" \t") == std::string::npos) continue;
    Edge e = parse_list(part, g.vertex_count(), "--edges");
    std::sort(e.begin(), e.end());
    if (static_cast<int>(e.size()) != g.uniformity()) {
      throw Error(ErrorCode::BadArity, "--edges: edge '" + part + "' does not have " +
                                           std::to_string(g.uniformity()) + " vertices");
    }
    if (!g.has_edge(e)) throw Error(ErrorCode::UnknownEdge, "--edges: '" + part + "' is not an edge");
    out.push_back(std::move(e));
  }
  return out;
}

int dim_of(const Instance& inst) {
  if (const auto* g = std::get_if<Hypergraph>(&inst)) return g->vertex_count();
  return std::get<SymmetricTensor>(inst).dim();
}

json pair_json(const EigenPair& p) {
  json j;
  j["value"] = p.value;
  j["vector"] = p.vector;
  j["residual"] = p.residual;
  j["kind"] = std::string(to_string(p.kind));
  j["iterations"] = p.iterations;
  j["global_claim"] = std::string(to_string(p.claim));
  if (p.bracket) {
    j["bracket"] = {{"lower", p.bracket->lower}, {"upper", p.bracket->upper}};
  } else {
    j["bracket"] = nullptr;
  }
  return j;
}

// Vertex-valued details are 0-based in the library; the CLI speaks 1-based.
double shown(const std::string& key, double v) { return key == "gamma_vertex" ? v + 1 : v; }

json report_json(const BoundReport& r) {
  json j;
  j["name"] = r.name;
  j["lower"] = opt(r.lower);
  j["upper"] = opt(r.upper);
  j["actual"] = opt(r.actual);
  j["slack_lower"] = opt(r.slack_lower);
  j["slack_upper"] = opt(r.slack_upper);
  j["valid"] = r.valid;
  j["reason"] = r.reason;
  j["equality_hint"] = r.equality_hint ? json(*r.equality_hint) : json(nullptr);
  j["details"] = json::object();
  for (const auto& [k, v] : r.details) j["details"][k] = shown(k, v);
  j["flags"] = json::object();
  for (const auto& [k, v] : r.flags) j["flags"][k] = v;
  return j;
}

void print_report(const BoundReport& r) {
  std::cout << r.name << (r.valid ? "" : "  [invalid: " + r.reason + "]") << "\n";
  std::cout << "  lower   " << fmt(r.lower) << "\n";
  std::cout << "  upper   " << fmt(r.upper) << "\n";
  std::cout << "  actual  " << fmt(r.actual) << "\n";
  if (r.actual) {
    std::cout << "  slack   " << fmt(r.slack_lower) << " / " << fmt(r.slack_upper) << "\n";
  }
  for (const auto& [k, v] : r.details) std::cout << "  " << k << " = " << fmt(shown(k, v)) << "\n";
  for (const auto& [k, v] : r.flags) std::cout << "  " << k << " = " << (v ? "yes" : "no") << "\n";
  if (r.equality_hint) std::cout << "  equality: " << *r.equality_hint << "\n";
}

struct Options {
  std::string input;
  std::string which = "max";
  std::string keep, remove, edges;
  bool has_keep = false, has_remove = false, has_edges = false;
  long vertex = 0;
  bool has_vertex = false;
  SolverConfig cfg;
  bool json = false;
  std::string bound_name, predicate, tamper;
  bool skip_properties = false;
};

int run_eig(const Options& o) {
  Instance inst = load_instance(o.input);
  EigenKind kind = o.which == "min" ? EigenKind::Min
                   : o.which == "rho" ? EigenKind::Rho
                                      : EigenKind::Max;
  EigenPair p;
  if (const auto* g = std::get_if<Hypergraph>(&inst)) {
    p = kind == EigenKind::Min ? hyper_lambda_min(*g, o.cfg)
                               : extreme_h_eigen(adjacency_tensor(*g), kind, o.cfg);
  } else {
    p = extreme_h_eigen(std::get<SymmetricTensor>(inst), kind, o.cfg);
  }
  if (o.json) {
    json j = pair_json(p);
    j["seed"] = o.cfg.seed;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "lambda        " << fmt(p.value) << "\n";
  std::cout << "vector       ";
  for (double v : p.vector) std::cout << " " << fmt(v);
  std::cout << "\nresidual      " << fmt(p.residual) << "\n";
  std::cout << "iterations    " << p.iterations << "\n";
  std::cout << "global_claim  " << to_string(p.claim) << "\n";
  if (p.bracket) {
    std::cout << "bracket       [" << fmt(p.bracket->lower) << ", " << fmt(p.bracket->upper)
              << "]\n";
  }
  return 0;
}

int run_bound_cmd(const Options& o) {
  Instance inst = load_instance(o.input);
  const int n = dim_of(inst);
  BoundArgs args;
  // Validate every index argument before any solve.
  if (o.has_keep) args.keep = IndexSet(parse_list(o.keep, n, "--keep"));
  if (o.has_remove) args.remove = IndexSet(parse_list(o.remove, n, "--remove"));
  if (o.has_vertex) {
    if (o.vertex < 1 || o.vertex > n) {
      throw Error(ErrorCode::IndexOutOfRange, "--vertex outside 1.." + std::to_string(n));
    }
    args.vertex = static_cast<Index>(o.vertex - 1);
  }
  if (o.has_edges) {
    const auto* g = std::get_if<Hypergraph>(&inst);
    if (!g) throw Error(ErrorCode::BadArgument, "--edges needs a hypergraph input");
    args.edges = parse_edges(o.edges, *g);
  }
  auto reports = run_bound(o.bound_name, inst, args, o.cfg);
  if (o.json) {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(report_json(r));
    std::cout << arr.dump(2) << "\n";
  } else {
    for (const auto& r : reports) print_report(r);
  }
  return 0;
}

int run_check_cmd(const Options& o) {
  Instance inst = load_instance(o.input);
  auto results = run_check(o.predicate, inst);
  if (o.json) {
    json j = json::object();
    for (const auto& [k, v] : results) j[k] = v;
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& [k, v] : results) std::cout << k << ": " << (v ? "yes" : "no") << "\n";
  }
  return 0;
}

int run_verify(const Options& o) {
  FixtureOptions fo;
  fo.solver = o.cfg;
  if (!o.tamper.empty()) fo.tamper = o.tamper;
  fo.skip_properties = o.skip_properties;
  auto rows = run_fixtures(fo);
  int failed = 0;
  for (const auto& r : rows) failed += r.pass ? 0 : 1;
  if (o.json) {
    json arr = json::array();
    for (const auto& r : rows) {
      arr.push_back({{"id", r.id},
                     {"kind", r.kind},
                     {"expected", r.expected},
                     {"measured", r.measured},
                     {"deviation", r.deviation()},
                     {"tolerance", r.tolerance},
                     {"pass", r.pass}});
    }
    std::cout << json{{"fixtures", arr}, {"passed", rows.size() - failed}, {"failed", failed}}.dump(2)
              << "\n";
  } else {
    std::printf("%-4s  %-46s %12s %12s %10s %9s\n", "", "fixture", "expected", "measured",
                "deviation", "tol");
    for (const auto& r : rows) {
      if (r.kind == "check") {
        std::printf("%-4s  %-46s %12s %12s %10s %9s\n", r.pass ? "PASS" : "FAIL", r.id.c_str(),
                    "-", fmt(r.measured).c_str(), "-", "-");
      } else {
        std::printf("%-4s  %-46s %12s %12s %10s %9s\n", r.pass ? "PASS" : "FAIL", r.id.c_str(),
                    fmt(r.expected).c_str(), fmt(r.measured).c_str(), fmt(r.deviation()).c_str(),
                    fmt(r.tolerance).c_str());
      }
    }
    std::printf("%zu passed, %d failed\n", rows.size() - failed, failed);
  }
  return failed == 0 ? 0 : kFixtureFailure;
}

void add_solver_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--tol", o.cfg.tol, "convergence tolerance")->check(CLI::PositiveNumber);
  cmd->add_option("--max-iter", o.cfg.max_iter, "iteration cap per run")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--restarts", o.cfg.restarts, "random restarts")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", o.cfg.seed, "random seed")->envname("HSPEC_SEED");
  cmd->add_flag("--json", o.json, "JSON output with full precision");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral bounds for symmetric tensors and uniform hypergraphs"};
  app.require_subcommand(1);
  Options o;

  auto* eig = app.add_subcommand("eig", "extreme H-eigenpair of an instance");
  eig->add_option("--input", o.input, "tensor or hypergraph file")->required();
  eig->add_option("--which", o.which, "max, min or rho")
      ->check(CLI::IsMember({"max", "min", "rho"}));
  add_solver_flags(eig, o);

  auto* bound = app.add_subcommand("bound", "evaluate a bound (or 'all')");
  std::vector<std::string> names = bound_names();
  names.push_back("all");
  bound->add_option("name", o.bound_name, "bound name")->required()->check(CLI::IsMember(names));
  bound->add_option("--input", o.input, "tensor or hypergraph file")->required();
  auto* keep = bound->add_option("--keep", o.keep, "kept indices, e.g. 2,3 (tensor bounds)");
  auto* remove = bound->add_option("--remove", o.remove, "removed vertices (hypergraph bounds)");
  auto* edges = bound->add_option("--edges", o.edges, "removed edges, e.g. '1,2,3;3,4,5'");
  auto* vertex = bound->add_option("--vertex", o.vertex, "single vertex (1-based)");
  add_solver_flags(bound, o);

  auto* check = app.add_subcommand("check", "structural predicates");
  check->add_option("predicate", o.predicate, "predicate name or 'all'")->required();
  check->add_option("--input", o.input, "tensor or hypergraph file")->required();
  check->add_flag("--json", o.json, "JSON output");

  auto* verify = app.add_subcommand("verify-paper", "run the fixture table");
  verify->add_option("--tamper", o.tamper, "shift one fixture's expected value by 0.01");
  verify->add_flag("--skip-properties", o.skip_properties, "skip the randomized suites");
  add_solver_flags(verify, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }
  o.has_keep = keep->count() > 0;
  o.has_remove = remove->count() > 0;
  o.has_edges = edges->count() > 0;
  o.has_vertex = vertex->count() > 0;

  try {
    if (*eig) return run_eig(o);
    if (*bound) return run_bound_cmd(o);
    if (*check) return run_check_cmd(o);
    return run_verify(o);
  } catch (const Error& e) {
    std::cerr << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
    return e.code() == ErrorCode::NoConvergence ? kNoConvergence : kInputError;
  }
}
