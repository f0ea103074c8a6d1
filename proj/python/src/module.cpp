#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "hspec/bounds.hpp"
#include "hspec/eigensolve.hpp"
#include "hspec/fixtures.hpp"
#include "hspec/hypergraph.hpp"
#include "hspec/io.hpp"
#include "hspec/oracle.hpp"
#include "hspec/runner.hpp"
#include "hspec/tensor.hpp"

namespace py = pybind11;
using namespace hspec;

namespace {

EigenKind kind_from(const std::string& which) {
  if (which == "max") return EigenKind::Max;
  if (which == "min") return EigenKind::Min;
  if (which == "rho") return EigenKind::Rho;
  throw Error(ErrorCode::BadArgument, "which must be max, min or rho");
}

SolverConfig make_config(double tol, long max_iter, int restarts, std::uint64_t seed) {
  SolverConfig cfg;
  cfg.tol = tol;
  cfg.max_iter = max_iter;
  cfg.restarts = restarts;
  cfg.seed = seed;
  return cfg;
}

std::optional<IndexSet> to_set(const std::optional<std::vector<Index>>& v) {
  if (!v) return std::nullopt;
  return IndexSet(*v);
}

// Instance has no default-constructible alternative, so the stock variant
// caster does not apply; convert by hand.
Instance to_instance(const py::object& o) {
  if (py::isinstance<SymmetricTensor>(o)) return o.cast<SymmetricTensor>();
  if (py::isinstance<Hypergraph>(o)) return o.cast<Hypergraph>();
  throw py::type_error("expected a SymmetricTensor or a Hypergraph");
}

py::object from_instance(Instance inst) {
  return std::visit([](auto&& v) { return py::cast(std::move(v)); }, std::move(inst));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Symmetric tensors, uniform hypergraphs, H-eigenvalues and interlacing bounds.";

  PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> error_type;
  error_type.call_once_and_store_result(
      [&]() { return py::exception<Error>(m, "HspecError", PyExc_ValueError); });
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object type = error_type.get_stored();
      py::object inst = type(e.what());
      inst.attr("code") = std::string(to_string(e.code()));
      PyErr_SetObject(type.ptr(), inst.ptr());
    }
  });

  py::class_<SymmetricTensor>(m, "SymmetricTensor")
      .def(py::init<int, int>(), py::arg("order"), py::arg("dim"))
      .def_static(
          "build",
          [](int order, int dim, const std::vector<std::pair<std::vector<Index>, double>>& entries) {
            std::vector<TensorEntry> list;
            list.reserve(entries.size());
            for (const auto& [idx, v] : entries) list.push_back({idx, v});
            return SymmetricTensor::build(order, dim, list);
          },
          py::arg("order"), py::arg("dim"), py::arg("entries"),
          "Entries are (index tuple, value) pairs with 0-based indices.")
      .def_property_readonly("order", &SymmetricTensor::order)
      .def_property_readonly("dim", &SymmetricTensor::dim)
      .def_property_readonly("orbits",
                             [](const SymmetricTensor& t) {
                               std::vector<std::pair<std::vector<Index>, double>> out;
                               for (const auto& o : t.orbits()) out.emplace_back(o.index, o.value);
                               return out;
                             })
      .def("is_zero", &SymmetricTensor::is_zero)
      .def("entry", [](const SymmetricTensor& t, const std::vector<Index>& idx) { return t.entry(idx); })
      .def("apply", [](const SymmetricTensor& t, const Vector& x) { return t.apply(x); })
      .def("form", [](const SymmetricTensor& t, const Vector& x) { return t.form(x); })
      .def("scaled", &SymmetricTensor::scaled)
      .def(py::self == py::self)
      .def("__repr__", [](const SymmetricTensor& t) {
        std::ostringstream os;
        os << "SymmetricTensor(order=" << t.order() << ", dim=" << t.dim()
           << ", orbits=" << t.orbits().size() << ")";
        return os.str();
      });

  m.def("principal_subtensor",
        [](const SymmetricTensor& t, const std::vector<Index>& keep) {
          auto p = principal_subtensor(t, IndexSet(keep));
          return py::make_tuple(p.tensor, p.relabel);
        },
        py::arg("t"), py::arg("keep"), "Returns (T[I], relabel) with relabel[new] = old.");
  m.def("embed_restriction",
        [](const SymmetricTensor& t, const std::vector<Index>& keep) {
          return embed_restriction(t, IndexSet(keep));
        });
  m.def("is_nonnegative", &is_nonnegative);
  m.def("is_zero_diagonal", &is_zero_diagonal);
  m.def("is_weakly_irreducible", &is_weakly_irreducible);
  m.def("row_sums", &row_sums);
  m.def("mixed_correction",
        [](const SymmetricTensor& t, const std::vector<Index>& keep, const Vector& x) {
          return mixed_correction(t, IndexSet(keep), x);
        });

  py::class_<Hypergraph>(m, "Hypergraph")
      .def(py::init<int, int, std::vector<Edge>>(), py::arg("k"), py::arg("n"),
           py::arg("edges") = std::vector<Edge>{})
      .def_property_readonly("uniformity", &Hypergraph::uniformity)
      .def_property_readonly("vertex_count", &Hypergraph::vertex_count)
      .def_property_readonly("edges", &Hypergraph::edges)
      .def("degrees", &Hypergraph::degrees)
      .def("has_edge", &Hypergraph::has_edge)
      .def(py::self == py::self)
      .def("__repr__", [](const Hypergraph& g) {
        std::ostringstream os;
        os << "Hypergraph(k=" << g.uniformity() << ", n=" << g.vertex_count()
           << ", edges=" << g.edge_count() << ")";
        return os.str();
      });

  m.def("adjacency_tensor", &adjacency_tensor);
  m.def("remove_vertices",
        [](const Hypergraph& g, const std::vector<Index>& removed) {
          auto r = remove_vertices(g, IndexSet(removed));
          return py::make_tuple(r.graph, r.kept);
        },
        "Returns (G - I, kept) with kept[new] = old.");
  m.def("remove_edges",
        [](const Hypergraph& g, const std::vector<Edge>& removed) { return remove_edges(g, removed); });
  m.def("is_linear", &is_linear);
  m.def("is_connected", &is_connected);
  m.def("is_regular", &is_regular);
  m.def("is_odd_bipartite", &is_odd_bipartite);
  m.def("is_steiner_2", &is_steiner_2);
  m.def("hypercycle3", &hypercycle3);
  m.def("hyperpath3", &hyperpath3);
  m.def("complete_graph", &complete_graph);
  m.def("fano_plane", &fano_plane);
  m.def("affine_plane_3", &affine_plane_3);

  py::class_<SolverConfig>(m, "SolverConfig")
      .def(py::init(&make_config), py::arg("tol") = 1e-10, py::arg("max_iter") = 100000,
           py::arg("restarts") = 16, py::arg("seed") = 0)
      .def_readwrite("tol", &SolverConfig::tol)
      .def_readwrite("max_iter", &SolverConfig::max_iter)
      .def_readwrite("restarts", &SolverConfig::restarts)
      .def_readwrite("seed", &SolverConfig::seed);

  py::class_<EigenPair>(m, "EigenPair")
      .def_readonly("value", &EigenPair::value)
      .def_readonly("vector", &EigenPair::vector)
      .def_readonly("residual", &EigenPair::residual)
      .def_readonly("iterations", &EigenPair::iterations)
      .def_property_readonly("kind", [](const EigenPair& p) { return std::string(to_string(p.kind)); })
      .def_property_readonly("claim", [](const EigenPair& p) { return std::string(to_string(p.claim)); })
      .def_property_readonly("bracket",
                             [](const EigenPair& p) -> std::optional<std::pair<double, double>> {
                               if (!p.bracket) return std::nullopt;
                               return std::make_pair(p.bracket->lower, p.bracket->upper);
                             })
      .def("__repr__", [](const EigenPair& p) {
        std::ostringstream os;
        os.precision(10);
        os << "EigenPair(value=" << p.value << ", residual=" << p.residual << ")";
        return os.str();
      });

  m.def("extreme_h_eigen",
        [](const SymmetricTensor& t, const std::string& which, const SolverConfig& cfg) {
          return extreme_h_eigen(t, kind_from(which), cfg);
        },
        py::arg("t"), py::arg("which") = "max", py::arg("config") = SolverConfig{});
  m.def("spectral_radius_nonneg", &spectral_radius_nonneg, py::arg("t"),
        py::arg("config") = SolverConfig{});
  m.def("hyper_rho", &hyper_rho, py::arg("g"), py::arg("config") = SolverConfig{});
  m.def("hyper_lambda_min", &hyper_lambda_min, py::arg("g"), py::arg("config") = SolverConfig{});
  m.def("eigen_residual", [](const SymmetricTensor& t, double lambda, const Vector& x) {
    return eigen_residual(t, lambda, x);
  });

  py::class_<OracleResult>(m, "OracleResult")
      .def_readonly("pairs", &OracleResult::pairs)
      .def_readonly("certified", &OracleResult::certified)
      .def_readonly("grid_resolution", &OracleResult::grid_resolution)
      .def("max_value", &OracleResult::max_value)
      .def("min_value", &OracleResult::min_value);
  m.def("enumerate_h_eigenpairs", &enumerate_h_eigenpairs, py::arg("t"),
        py::arg("resolution") = 32);

  py::class_<BoundReport>(m, "BoundReport")
      .def_readonly("name", &BoundReport::name)
      .def_readonly("lower", &BoundReport::lower)
      .def_readonly("upper", &BoundReport::upper)
      .def_readonly("actual", &BoundReport::actual)
      .def_readonly("slack_lower", &BoundReport::slack_lower)
      .def_readonly("slack_upper", &BoundReport::slack_upper)
      .def_readonly("valid", &BoundReport::valid)
      .def_readonly("reason", &BoundReport::reason)
      .def_readonly("equality_hint", &BoundReport::equality_hint)
      .def_readonly("details", &BoundReport::details)
      .def_readonly("flags", &BoundReport::flags)
      .def("sandwich_holds", &BoundReport::sandwich_holds, py::arg("tol") = 1e-8);

  m.def("bound_names", &bound_names);
  m.def(
      "run_bound",
      [](const std::string& name, const py::object& instance,
         const std::optional<std::vector<Index>>& keep,
         const std::optional<std::vector<Index>>& remove, const std::optional<EdgeList>& edges,
         std::optional<Index> vertex, const SolverConfig& cfg) {
        BoundArgs args;
        args.keep = to_set(keep);
        args.remove = to_set(remove);
        args.edges = edges;
        args.vertex = vertex;
        return run_bound(name, to_instance(instance), args, cfg);
      },
      py::arg("name"), py::arg("instance"), py::kw_only(), py::arg("keep") = py::none(),
      py::arg("remove") = py::none(), py::arg("edges") = py::none(),
      py::arg("vertex") = py::none(), py::arg("config") = SolverConfig{},
      "Index arguments are 0-based.");
  m.def(
      "run_check",
      [](const std::string& name, const py::object& instance) {
        return run_check(name, to_instance(instance));
      },
      py::arg("name"), py::arg("instance"));

  m.def("parse_tensor", &parse_tensor, py::arg("text"), py::arg("source") = "<string>");
  m.def("parse_hypergraph", &parse_hypergraph, py::arg("text"), py::arg("source") = "<string>");
  m.def(
      "parse_instance",
      [](std::string_view text, std::string_view source) {
        return from_instance(parse_instance(text, source));
      },
      py::arg("text"), py::arg("source") = "<string>");
  m.def(
      "load_instance", [](const std::string& path) { return from_instance(load_instance(path)); },
      py::arg("path"));
  m.def("serialize_tensor", &serialize_tensor);
  m.def("serialize_hypergraph", &serialize_hypergraph);

  m.def(
      "run_fixtures",
      [](bool skip_properties, std::uint64_t seed) {
        FixtureOptions opt;
        opt.skip_properties = skip_properties;
        opt.solver.seed = seed;
        py::list out;
        for (const auto& r : run_fixtures(opt)) {
          py::dict d;
          d["id"] = r.id;
          d["kind"] = r.kind;
          d["expected"] = r.expected;
          d["measured"] = r.measured;
          d["deviation"] = r.deviation();
          d["tolerance"] = r.tolerance;
          d["pass"] = r.pass;
          out.append(d);
        }
        return out;
      },
      py::arg("skip_properties") = false, py::arg("seed") = 0);
}
