#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "quiverknot/algebra.hpp"
#include "quiverknot/coloring.hpp"
#include "quiverknot/data.hpp"
#include "quiverknot/diagram.hpp"
#include "quiverknot/error.hpp"
#include "quiverknot/poly.hpp"
#include "quiverknot/quiver.hpp"
#include "quiverknot/report.hpp"

namespace py = pybind11;
namespace qk = quiverknot;

namespace {

std::vector<qk::Endomorphism> to_endos(const std::vector<std::vector<int>>& images) {
  std::vector<qk::Endomorphism> out;
  for (const auto& im : images) out.push_back(qk::Endomorphism{im});
  return out;
}

py::dict uni_terms(const qk::UniPoly& p) {
  py::dict d;
  for (auto [e, c] : p.terms()) d[py::int_(e)] = c;
  return d;
}

py::dict bi_terms(const qk::BiPoly& p) {
  py::dict d;
  for (const auto& [e, c] : p.terms()) d[py::make_tuple(e.first, e.second)] = c;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Quandle coloring quivers and their polynomial invariants";

  static py::exception<qk::Error> error(m, "QuiverknotError", PyExc_ValueError);
  static py::exception<qk::CapExceeded> cap_error(m, "CapExceeded", error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const qk::CapExceeded& e) {
      py::set_error(cap_error, e.what());
    } catch (const qk::Error& e) {
      py::set_error(error, (std::string("[") + qk::to_string(e.kind()) + "] " + e.what()).c_str());
    }
  });

  py::class_<qk::Quandle>(m, "Quandle")
      .def(py::init(&qk::validate_quandle), py::arg("table"),
           "Validate a row-major operation table (rows[x-1][y-1] = x |> y).")
      .def_property_readonly("size", &qk::Quandle::size)
      .def("op", &qk::Quandle::op, py::arg("x"), py::arg("y"))
      .def("right_divide", &qk::Quandle::right_divide, py::arg("x"), py::arg("y"))
      .def("rows", &qk::Quandle::rows)
      .def("__len__", &qk::Quandle::size)
      .def("__eq__", [](const qk::Quandle& a, const qk::Quandle& b) { return a == b; })
      .def("__str__", &qk::format_quandle);

  m.def("dihedral", &qk::dihedral, py::arg("n"));
  m.def("trivial_quandle", &qk::trivial_quandle, py::arg("n"));
  m.def("parse_quandle", &qk::parse_quandle, py::arg("text"));
  m.def("resolve_quandle", [](const std::string& spec) { return qk::resolve_quandle(spec); }, py::arg("spec"),
        "dihedral:n, trivial:n, a file, or a bundled name such as 'q3'.");
  m.def("is_endomorphism",
        [](const qk::Quandle& q, const std::vector<int>& image) { return qk::is_endomorphism(q, image); },
        py::arg("quandle"), py::arg("image"));
  m.def(
      "endomorphisms",
      [](const qk::Quandle& q) {
        std::vector<std::vector<int>> out;
        for (const auto& e : qk::enumerate_endomorphisms(q)) out.push_back(e.image);
        return out;
      },
      py::arg("quandle"), "All endomorphisms in lexicographic order.");
  m.def(
      "parse_endomorphisms",
      [](const std::string& spec, const qk::Quandle& q) {
        std::vector<std::vector<int>> out;
        for (const auto& e : qk::resolve_endomorphisms(spec, q)) out.push_back(e.image);
        return out;
      },
      py::arg("spec"), py::arg("quandle"));

  py::class_<qk::LinkDiagram>(m, "LinkDiagram")
      .def(py::init(&qk::parse_pd), py::arg("pd"))
      .def_property_readonly("name", [](const qk::LinkDiagram& d) { return d.name; })
      .def_property_readonly("arc_count", &qk::LinkDiagram::arc_count)
      .def_property_readonly("component_count", &qk::LinkDiagram::component_count)
      .def_property_readonly("crossing_signs",
                             [](const qk::LinkDiagram& d) {
                               std::vector<int> out;
                               for (const auto& c : d.crossings()) out.push_back(c.sign);
                               return out;
                             })
      .def("to_pd", &qk::LinkDiagram::to_pd)
      .def("reverse_component", [](const qk::LinkDiagram& d, int k) { return qk::reverse_component(d, k); },
           py::arg("k"), "Reverse component k (0-based).")
      .def("add_kink", [](const qk::LinkDiagram& d, int arc, int sign) { return qk::add_kink(d, arc, sign); },
           py::arg("arc"), py::arg("sign") = 1)
      .def("__repr__", [](const qk::LinkDiagram& d) { return "LinkDiagram(" + d.name.value_or(d.to_pd()) + ")"; });

  m.def("link", [](const std::string& spec) { return qk::resolve_link(spec, qk::load_bundled_links()); },
        py::arg("name_or_pd"), "A bundled link by name, or a PD literal.");
  m.def("link_names", [] { return qk::load_bundled_links().names(); });

  m.def(
      "colorings",
      [](const qk::LinkDiagram& d, const qk::Quandle& q) {
        std::vector<std::vector<int>> out;
        for (const auto& c : qk::enumerate_colorings(d, q)) out.push_back(c.colors);
        return out;
      },
      py::arg("diagram"), py::arg("quandle"));
  m.def("counting_invariant", &qk::counting_invariant, py::arg("diagram"), py::arg("quandle"));

  py::class_<qk::UniPoly>(m, "UniPoly")
      .def_property_readonly("variable", [](const qk::UniPoly& p) { return std::string(1, p.variable()); })
      .def("terms", &uni_terms, "{exponent: coefficient}")
      .def("evaluate", &qk::UniPoly::evaluate, py::arg("x"))
      .def("to_json", [](const qk::UniPoly& p) { return qk::to_json(p); })
      .def("__eq__", [](const qk::UniPoly& a, const qk::UniPoly& b) { return a == b; })
      .def("__str__", [](const qk::UniPoly& p) { return qk::format_poly(p); })
      .def("__repr__", [](const qk::UniPoly& p) { return "UniPoly(" + qk::format_poly(p) + ")"; });

  py::class_<qk::BiPoly>(m, "BiPoly")
      .def("terms", &bi_terms, "{(i, j): coefficient}")
      .def("at_s", &qk::BiPoly::at_s, py::arg("value"))
      .def("verbatim", [](const qk::BiPoly& p) { return qk::format_poly_verbatim(p); })
      .def("to_json", [](const qk::BiPoly& p) { return qk::to_json(p); })
      .def("__eq__", [](const qk::BiPoly& a, const qk::BiPoly& b) { return a == b; })
      .def("__str__", [](const qk::BiPoly& p) { return qk::format_poly(p); })
      .def("__repr__", [](const qk::BiPoly& p) { return "BiPoly(" + qk::format_poly(p) + ")"; });

  m.def("parse_unipoly", &qk::parse_unipoly, py::arg("text"), py::arg("variable") = 'q');
  m.def("parse_bipoly", &qk::parse_bipoly, py::arg("text"));

  py::class_<qk::ColoringQuiver>(m, "ColoringQuiver")
      .def_property_readonly("vertex_count", &qk::ColoringQuiver::vertex_count)
      .def_property_readonly("edge_count", &qk::ColoringQuiver::edge_count)
      .def("vertices",
           [](const qk::ColoringQuiver& q) {
             std::vector<std::vector<int>> out;
             for (const auto& c : q.vertices()) out.push_back(c.colors);
             return out;
           })
      .def("edges",
           [](const qk::ColoringQuiver& q) {
             std::vector<std::tuple<int, int, int>> out;
             for (const auto& e : q.edges()) out.emplace_back(e.source, e.target, e.label);
             return out;
           })
      .def("in_degree", &qk::ColoringQuiver::in_degree, py::arg("v"))
      .def("out_degree", &qk::ColoringQuiver::out_degree, py::arg("v"))
      .def("two_var_indegree_poly", &qk::two_var_indegree_poly)
      .def("indegree_poly_edge_sum", &qk::indegree_poly_edge_sum)
      .def("indegree_poly_vertex_sum", &qk::indegree_poly_vertex_sum)
      .def(
          "maximal_path_poly",
          [](const qk::ColoringQuiver& q, const std::string& semantics, std::uint64_t cap) {
            const auto trails = qk::maximal_trails(q, qk::parse_trail_semantics(semantics), cap);
            return qk::maximal_path_poly(trails);
          },
          py::arg("semantics") = qk::to_string(qk::default_trail_semantics), py::arg("cap") = qk::default_trail_cap)
      .def(
          "maximal_trails",
          [](const qk::ColoringQuiver& q, const std::string& semantics, std::uint64_t cap) {
            std::vector<std::vector<int>> out;
            for (const auto& t : qk::maximal_trails(q, qk::parse_trail_semantics(semantics), cap))
              out.push_back(t.edges);
            return out;
          },
          py::arg("semantics") = qk::to_string(qk::default_trail_semantics), py::arg("cap") = qk::default_trail_cap,
          "Edge index lists of the maximal trails.")
      .def("to_dot", [](const qk::ColoringQuiver& q, const std::string& name) { return qk::to_dot(q, name); },
           py::arg("name") = "QCQ");

  m.def(
      "build_quiver",
      [](const qk::LinkDiagram& d, const qk::Quandle& q, const std::vector<std::vector<int>>& endos) {
        return qk::build_quiver(qk::enumerate_colorings(d, q), to_endos(endos), q);
      },
      py::arg("diagram"), py::arg("quandle"), py::arg("endos"));

  m.def(
      "invariants",
      [](const qk::LinkDiagram& d, const qk::Quandle& q, const std::vector<std::vector<int>>& endos,
         const std::string& semantics, std::uint64_t cap, bool max_path) {
        qk::InvariantOptions opts;
        opts.semantics = qk::parse_trail_semantics(semantics);
        opts.cap = cap;
        opts.max_path = max_path;
        const auto r = qk::compute_invariants(d, q, to_endos(endos), opts);
        py::dict out;
        out["link"] = r.link;
        out["counting"] = r.counting;
        out["two_var"] = r.two_var;
        out["edge_sum"] = r.edge_sum;
        out["vertex_sum"] = r.vertex_sum;
        out["max_path"] = r.max_path ? py::cast(*r.max_path) : py::none();
        return out;
      },
      py::arg("diagram"), py::arg("quandle"), py::arg("endos"),
      py::arg("semantics") = qk::to_string(qk::default_trail_semantics), py::arg("cap") = qk::default_trail_cap,
      py::arg("max_path") = true);

  m.def(
      "table",
      [](const std::string& preset, const std::string& format) {
        const auto req = qk::table_preset(preset);
        return qk::format_table(qk::compute_table(req, qk::load_bundled_links()), req.invariant,
                                qk::parse_output_format(format));
      },
      py::arg("preset"), py::arg("format") = "text", "Run a bundled table reproduction ('indegree2' or 'maxpath').");

  m.def("data_directory", &qk::data_directory);
  m.def("about", &qk::about_text);
}
