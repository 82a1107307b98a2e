#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "bei/canonical.hpp"
#include "bei/errors.hpp"
#include "bei/families.hpp"
#include "bei/graph.hpp"
#include "bei/graph_io.hpp"
#include "bei/ideal_props.hpp"
#include "bei/initial_complex.hpp"
#include "bei/pipeline.hpp"
#include "bei/strong_unmixed.hpp"

namespace py = pybind11;

namespace {

std::vector<std::vector<int>> to_lists(const std::vector<bei::VertexSet>& sets) {
  std::vector<std::vector<int>> out;
  out.reserve(sets.size());
  for (auto s : sets) out.push_back(s.to_vector());
  return out;
}

std::vector<std::string> face_strings(int n, const std::vector<bei::FaceMask>& faces) {
  std::vector<std::string> out;
  out.reserve(faces.size());
  for (auto f : faces) out.push_back(bei::format_face(n, f));
  return out;
}

bei::VertexSet to_set(const std::vector<int>& vs) {
  bei::VertexSet s;
  for (int v : vs) {
    if (v < 0 || v >= bei::kMaxVertices) throw bei::InvalidInput("vertex out of range");
    s = s.with(v);
  }
  return s;
}

py::dict summary_dict(const bei::RunSummary& s) {
  py::dict d;
  d["n"] = s.n;
  d["generated"] = s.generated;
  d["indecomposable"] = s.indecomposable;
  d["indecomposable_unmixed"] = s.indecomposable_unmixed;
  d["accessible"] = s.accessible;
  d["strongly_unmixed"] = s.strongly_unmixed;
  d["s2"] = s.s2 ? py::object(py::int_(*s.s2)) : py::object(py::none());
  d["completed"] = s.completed;
  d["equivalence_verified"] = s.equivalence_verified;
  d["wall_time_seconds"] = s.wall_time_seconds;
  d["workers"] = s.workers;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "binomial edge ideal classification core";

  py::register_exception<bei::TheoremContradiction>(m, "TheoremContradiction", PyExc_RuntimeError);
  py::register_exception<bei::NotAChain>(m, "NotAChain", PyExc_ValueError);

  py::class_<bei::Graph>(m, "Graph")
      .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) { return bei::Graph(n, edges); }),
           py::arg("n"), py::arg("edges") = std::vector<std::pair<int, int>>{})
      .def_static("from_graph6", [](const std::string& s) { return bei::decode_graph6(s); })
      .def("to_graph6", [](const bei::Graph& g) { return bei::encode_graph6(g); })
      .def_property_readonly("order", &bei::Graph::order)
      .def("edges", &bei::Graph::edges)
      .def("edge_count", &bei::Graph::edge_count)
      .def("adjacent", &bei::Graph::adjacent)
      .def("add_edge", &bei::Graph::add_edge)
      .def("remove_edge", &bei::Graph::remove_edge)
      .def(py::self == py::self)
      .def("__repr__", [](const bei::Graph& g) { return "Graph('" + bei::encode_graph6(g) + "')"; });

  m.def("complete_graph", &bei::complete_graph);
  m.def("path_graph", &bei::path_graph);
  m.def("cycle_graph", &bei::cycle_graph);
  m.def("is_connected", &bei::is_connected);
  m.def("cutpoints", [](const bei::Graph& g) { return bei::cutpoints(g).to_vector(); });

  m.def("canonical_certificate", [](const bei::Graph& g) { return py::bytes(bei::canonical_certificate(g).bytes); });
  m.def("canonical_form", [](const bei::Graph& g) {
    auto cf = bei::canonical_form(g);
    return py::make_tuple(cf.graph, cf.position);
  });

  m.def("is_cutset", [](const bei::Graph& g, const std::vector<int>& t) { return bei::is_cutset(g, to_set(t)); });
  m.def("cutsets", [](const bei::Graph& g) { return to_lists(bei::cutsets(g).sets); });
  m.def("is_unmixed", &bei::is_unmixed);
  m.def("is_accessible", &bei::is_accessible);
  m.def("accessibility_witness", [](const bei::Graph& g) -> std::optional<std::vector<int>> {
    auto rep = bei::check_accessible(g);
    if (!rep.witness) return std::nullopt;
    return rep.witness->to_vector();
  });
  m.def("is_strongly_unmixed", py::overload_cast<const bei::Graph&>(&bei::is_strongly_unmixed));
  m.def("is_decomposable", &bei::is_decomposable);
  m.def("decompose", [](const bei::Graph& g) {
    std::vector<std::vector<int>> pieces;
    for (const auto& p : bei::decompose(g).pieces) pieces.push_back(p.to_parent);
    return pieces;
  });

  m.def("delta_facets", [](const bei::Graph& g) { return face_strings(g.order(), bei::delta_facets(g).facets); });
  m.def("minimal_nonfaces", [](const bei::Graph& g) {
    return face_strings(g.order(), bei::minimal_nonfaces(bei::delta_facets(g)).monomials);
  });
  m.def("admissible_initial_generators", [](const bei::Graph& g) {
    return face_strings(g.order(), bei::admissible_initial_generators(g).monomials);
  });
  m.def("is_s2", &bei::is_s2);
  m.def("s2_witness", [](const bei::Graph& g) -> std::optional<std::string> {
    auto rep = bei::check_s2(g);
    if (!rep.witness) return std::nullopt;
    return bei::format_face(g.order(), *rep.witness);
  });
  m.def("s2_disconnected_faces", [](const bei::Graph& g) {
    return face_strings(g.order(), bei::check_s2(g).disconnected);
  });
  m.def("f_vector", [](const bei::Graph& g) { return bei::f_vector(bei::delta_facets(g)); });
  m.def("h_vector", [](const bei::Graph& g) {
    auto c = bei::delta_facets(g);
    return bei::h_vector(bei::f_vector(c), c.max_facet_size());
  });

  m.def("classify_json",
        [](const bei::Graph& g, bool s2, bool complex, bool short_circuit) {
          bei::ClassifyOptions opts;
          opts.s2 = s2;
          opts.complex = complex;
          opts.short_circuit = short_circuit;
          return bei::record_to_json(bei::classify(g, opts));
        },
        py::arg("g"), py::arg("s2") = false, py::arg("complex") = false, py::arg("short_circuit") = false);

  m.def("chain_of_cycles",
        [](const std::vector<int>& cycles, const std::vector<int>& top_steps, const std::vector<int>& whiskers) {
          return bei::chain_of_cycles({cycles, top_steps, to_set(whiskers)});
        },
        py::arg("cycles"), py::arg("top_steps") = std::vector<int>{}, py::arg("whiskers") = std::vector<int>{});
  m.def("chain_setup",
        [](const std::vector<int>& cycles, const std::vector<int>& top_steps, const std::vector<int>& whiskers) {
          auto rep = bei::check_setup(bei::chain_block({cycles, top_steps, to_set(whiskers)}));
          return py::make_tuple(rep.satisfied, rep.violated);
        },
        py::arg("cycles"), py::arg("top_steps") = std::vector<int>{}, py::arg("whiskers") = std::vector<int>{});
  m.def("recognize_chain", [](const bei::Graph& block) { return bei::recognize_chain(block).cycles; });
  m.def("helm", &bei::helm);
  m.def("rank3_catalog", [] {
    std::vector<std::pair<std::string, bei::Graph>> out;
    for (auto& e : bei::rank3_catalog()) out.emplace_back(e.name, e.graph.graph);
    return out;
  });

  m.def("enumerate_connected", [](int n) {
    std::vector<std::string> out;
    for (const auto& c : bei::enumerate_connected_certificates(n)) out.push_back(c.bytes);
    return out;
  });

  m.def("run_pipeline",
        [](int n, std::optional<std::filesystem::path> out_dir, bool s2, int workers, bool resume) {
          bei::PipelineOptions opts;
          opts.n = n;
          opts.out_dir = std::move(out_dir);
          opts.classify.s2 = s2;
          opts.workers = workers > 0 ? workers : bei::default_worker_count();
          opts.resume = resume;
          bei::RunResult res;
          {
            py::gil_scoped_release release;
            res = bei::run_pipeline(opts);
          }
          return summary_dict(res.summary);
        },
        py::arg("n"), py::arg("out_dir") = std::nullopt, py::arg("s2") = false, py::arg("workers") = 0,
        py::arg("resume") = false);
}
