#include "hspec/runner.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace hspec {

namespace {

struct Context {
  const Instance& instance;
  const BoundArgs& args;
  const SolverConfig& cfg;

  bool is_graph() const { return std::holds_alternative<Hypergraph>(instance); }

  const Hypergraph& graph(const std::string& name) const {
    if (!is_graph()) throw Error(ErrorCode::BadArgument, name + " needs a hypergraph input");
    return std::get<Hypergraph>(instance);
  }

  SymmetricTensor tensor() const {
    if (is_graph()) return adjacency_tensor(std::get<Hypergraph>(instance));
    return std::get<SymmetricTensor>(instance);
  }

  const IndexSet& keep(const std::string& name) const {
    if (!args.keep) throw Error(ErrorCode::BadArgument, name + " needs --keep");
    return *args.keep;
  }
  const IndexSet& remove(const std::string& name) const {
    if (!args.remove) throw Error(ErrorCode::BadArgument, name + " needs --remove");
    return *args.remove;
  }
  const EdgeList& edges(const std::string& name) const {
    if (!args.edges) throw Error(ErrorCode::BadArgument, name + " needs --edges");
    return *args.edges;
  }
  Index vertex(const std::string& name) const {
    if (!args.vertex) throw Error(ErrorCode::BadArgument, name + " needs --vertex");
    return *args.vertex;
  }
};

using Runner = std::function<BoundReport(const Context&)>;

BoundReport subtensor_lmax(const Context& c) {
  SymmetricTensor t = c.tensor();
  const IndexSet& keep = c.keep("subtensor-lmax");
  BoundReport r = subtensor_lmax_bounds(t, keep, extreme_h_eigen(t, EigenKind::Max, c.cfg));
  r.set_actual(extreme_h_eigen(principal_subtensor(t, keep).tensor, EigenKind::Max, c.cfg).value);
  return r;
}

BoundReport subtensor_rho_ratio(const Context& c) {
  SymmetricTensor t = c.tensor();
  const IndexSet& keep = c.keep("subtensor-rho-ratio");
  BoundReport r = subtensor_rho_ratio_bound(t, keep, spectral_radius_nonneg(t, c.cfg));
  r.set_actual(spectral_radius_nonneg(principal_subtensor(t, keep).tensor, c.cfg).value);
  return r;
}

BoundReport equal_row_sum(const Context& c) {
  SymmetricTensor t = c.tensor();
  const IndexSet& keep = c.keep("equal-row-sum");
  BoundReport r = equal_row_sum_ratio_lower(t, keep);
  if (is_nonnegative(t)) {
    r.set_actual(spectral_radius_nonneg(principal_subtensor(t, keep).tensor, c.cfg).value);
  }
  return r;
}

BoundReport lmin_subtensor(const Context& c) {
  SymmetricTensor t = c.tensor();
  const IndexSet& keep = c.keep("lmin-subtensor");
  BoundReport r = lmin_subtensor_bounds(t, keep, extreme_h_eigen(t, EigenKind::Min, c.cfg));
  r.set_actual(extreme_h_eigen(principal_subtensor(t, keep).tensor, EigenKind::Min, c.cfg).value);
  return r;
}

BoundReport vertex_set_removal(const Context& c) {
  const Hypergraph& g = c.graph("vertex-set-removal");
  const IndexSet& removed = c.remove("vertex-set-removal");
  BoundReport r = vertex_set_removal_bounds(g, removed, hyper_rho(g, c.cfg));
  r.set_actual(hyper_rho(remove_vertices(g, removed).graph, c.cfg).value);
  return r;
}

BoundReport vertex_removal(const Context& c) {
  const Hypergraph& g = c.graph("vertex-removal");
  Index v = c.vertex("vertex-removal");
  BoundReport r = vertex_removal_bounds(g, v, hyper_rho(g, c.cfg));
  r.set_actual(hyper_rho(remove_vertices(g, IndexSet({v})).graph, c.cfg).value);
  return r;
}

BoundReport perron_entry(const Context& c) {
  const Hypergraph& g = c.graph("perron-entry");
  IndexSet set = c.args.keep ? *c.args.keep : IndexSet({c.vertex("perron-entry")});
  return perron_entry_bounds(g, set, hyper_rho(g, c.cfg));
}

BoundReport linear_vertex_removal(const Context& c) {
  const Hypergraph& g = c.graph("linear-vertex-removal");
  Index v = c.vertex("linear-vertex-removal");
  BoundReport r = linear_vertex_removal_bound(g, v, hyper_rho(g, c.cfg).value);
  r.set_actual(hyper_rho(remove_vertices(g, IndexSet({v})).graph, c.cfg).value);
  return r;
}

BoundReport gamma(const Context& c) { return gamma_bounds(c.graph("gamma"), c.cfg); }

BoundReport edge_removal(const Context& c) {
  const Hypergraph& g = c.graph("edge-removal");
  const EdgeList& f = c.edges("edge-removal");
  return edge_removal_rho_bounds(g, f, hyper_rho(g, c.cfg), hyper_rho(remove_edges(g, f), c.cfg));
}

BoundReport lmin_vertex_removal(const Context& c) {
  const Hypergraph& g = c.graph("lmin-vertex-removal");
  const IndexSet& removed = c.remove("lmin-vertex-removal");
  BoundReport r = lmin_vertex_removal_bounds(g, removed, hyper_lambda_min(g, c.cfg));
  r.set_actual(hyper_lambda_min(remove_vertices(g, removed).graph, c.cfg).value);
  return r;
}

BoundReport lmin_edge_removal(const Context& c) {
  const Hypergraph& g = c.graph("lmin-edge-removal");
  const EdgeList& f = c.edges("lmin-edge-removal");
  return lmin_edge_removal_bounds(g, f, hyper_lambda_min(g, c.cfg),
                                  hyper_lambda_min(remove_edges(g, f), c.cfg));
}

BoundReport least_vector_entry(const Context& c) {
  const Hypergraph& g = c.graph("least-vector-entry");
  return least_vector_entry_bound(g, c.vertex("least-vector-entry"), hyper_lambda_min(g, c.cfg));
}

BoundReport cmax(const Context& c) { return cmax_bounds(c.graph("cmax"), c.cfg); }

struct Entry {
  std::string name;
  Runner run;
  bool graph_only;
  // Present arguments that make the bound part of an "all" sweep.
  std::function<bool(const BoundArgs&)> wanted;
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = [] {
    auto has_keep = [](const BoundArgs& a) { return a.keep.has_value(); };
    auto has_remove = [](const BoundArgs& a) { return a.remove.has_value(); };
    auto has_edges = [](const BoundArgs& a) { return a.edges.has_value(); };
    auto has_vertex = [](const BoundArgs& a) { return a.vertex.has_value(); };
    auto always = [](const BoundArgs&) { return true; };
    return std::vector<Entry>{
        {"subtensor-lmax", subtensor_lmax, false, has_keep},
        {"subtensor-rho-ratio", subtensor_rho_ratio, false, has_keep},
        {"equal-row-sum", equal_row_sum, false, has_keep},
        {"lmin-subtensor", lmin_subtensor, false, has_keep},
        {"vertex-set-removal", vertex_set_removal, true, has_remove},
        {"vertex-removal", vertex_removal, true, has_vertex},
        {"perron-entry", perron_entry, true,
         [](const BoundArgs& a) { return a.vertex.has_value() || a.keep.has_value(); }},
        {"linear-vertex-removal", linear_vertex_removal, true, has_vertex},
        {"gamma", gamma, true, always},
        {"edge-removal", edge_removal, true, has_edges},
        {"lmin-vertex-removal", lmin_vertex_removal, true, has_remove},
        {"lmin-edge-removal", lmin_edge_removal, true, has_edges},
        {"least-vector-entry", least_vector_entry, true, has_vertex},
        {"cmax", cmax, true, always},
    };
  }();
  return entries;
}

// Regime errors become an invalid report; everything else propagates.
BoundReport guarded(const Entry& e, const Context& c) {
  try {
    return e.run(c);
  } catch (const Error& err) {
    switch (err.code()) {
      case ErrorCode::NegativeEntry:
      case ErrorCode::OddOrder:
      case ErrorCode::OddOrderForBipartite: {
        BoundReport r;
        r.name = e.name;
        r.invalidate(std::string(to_string(err.code())));
        return r;
      }
      default:
        throw;
    }
  }
}

}  // namespace

const std::vector<std::string>& bound_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& e : registry()) out.push_back(e.name);
    return out;
  }();
  return names;
}

std::vector<BoundReport> run_bound(const std::string& name, const Instance& instance,
                                   const BoundArgs& args, const SolverConfig& cfg) {
  cfg.validate();
  Context c{instance, args, cfg};
  std::vector<BoundReport> out;
  if (name == "all") {
    for (const auto& e : registry()) {
      if (e.graph_only && !c.is_graph()) continue;
      if (!e.wanted(args)) continue;
      out.push_back(guarded(e, c));
    }
    return out;
  }
  auto it = std::find_if(registry().begin(), registry().end(),
                         [&](const Entry& e) { return e.name == name; });
  if (it == registry().end()) throw Error(ErrorCode::BadArgument, "unknown bound '" + name + "'");
  out.push_back(guarded(*it, c));
  return out;
}

std::vector<std::pair<std::string, bool>> run_check(const std::string& name,
                                                    const Instance& instance) {
  using Check = std::function<bool()>;
  std::vector<std::pair<std::string, Check>> checks;
  if (const auto* g = std::get_if<Hypergraph>(&instance)) {
    checks = {
        {"linear", [g] { return is_linear(*g); }},
        {"connected", [g] { return is_connected(*g); }},
        {"regular", [g] { return is_regular(*g); }},
        {"odd-bipartite", [g] { return is_odd_bipartite(*g); }},
        {"steiner", [g] { return is_steiner_2(*g); }},
    };
  } else {
    const auto& t = std::get<SymmetricTensor>(instance);
    checks = {
        {"zero-diagonal", [&t] { return is_zero_diagonal(t); }},
        {"nonnegative", [&t] { return is_nonnegative(t); }},
        {"weakly-irreducible", [&t] { return is_weakly_irreducible(t); }},
    };
  }
  std::vector<std::pair<std::string, bool>> out;
  for (const auto& [check_name, fn] : checks) {
    if (name == "all") {
      // odd-bipartiteness is undefined for odd k; skip it in the sweep.
      if (check_name == "odd-bipartite" &&
          std::get<Hypergraph>(instance).uniformity() % 2 != 0) {
        continue;
      }
      out.emplace_back(check_name, fn());
    } else if (check_name == name) {
      out.emplace_back(check_name, fn());
    }
  }
  if (out.empty() && name != "all") {
    throw Error(ErrorCode::BadArgument, "unknown predicate '" + name + "' for this input");
  }
  return out;
}

}  // namespace hspec
