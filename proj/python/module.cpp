// Python bindings for the main operations. Collections cross the boundary
// as label lists and rendered value strings.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "matpaint/binary_suite.hpp"
#include "matpaint/corpus.hpp"
#include "matpaint/graph.hpp"
#include "matpaint/io.hpp"
#include "matpaint/minor_search.hpp"
#include "matpaint/painting.hpp"

namespace py = pybind11;
using namespace matpaint;

namespace {

std::vector<std::vector<std::string>> family_labels(const Matroid& m, const std::vector<Mask>& f) {
    std::vector<std::vector<std::string>> out;
    for (Mask s : f) out.push_back(m.ground().labels_of(s));
    return out;
}

MinorSpec spec_of(const Matroid& m, const std::vector<std::string>& contract,
                  const std::vector<std::string>& remove) {
    return MinorSpec{m.ground().mask_of(contract), m.ground().mask_of(remove)};
}

DirectedGraph graph_of(const std::vector<std::tuple<std::string, std::string, std::string>>& edges) {
    std::vector<std::string> vertices;
    for (const auto& [l, s, t] : edges) {
        vertices.push_back(s);
        vertices.push_back(t);
    }
    return DirectedGraph(vertices, edges);
}

py::object painting_or_none(const Matroid& m, const std::optional<Painting>& p) {
    if (!p) return py::none();
    return py::make_tuple(serialize_painting(m, *p));
}

}  // namespace

PYBIND11_MODULE(matpaint, m) {
    m.doc() = "exact matroid representability toolkit (circuit-cocircuit paintings)";

    py::register_exception<Error>(m, "MatpaintError");

    py::class_<Matroid>(m, "Matroid")
        .def(py::init([](std::vector<std::string> elements,
                         std::vector<std::vector<std::string>> circuits) {
                 return Matroid::from_circuit_labels(std::move(elements), circuits);
             }),
             py::arg("elements"), py::arg("circuits"))
        .def_property_readonly("elements", [](const Matroid& m) { return m.ground().labels(); })
        .def_property_readonly("rank", &Matroid::rank)
        .def("circuits", [](const Matroid& m) { return family_labels(m, m.circuits()); })
        .def("cocircuits", [](const Matroid& m) { return family_labels(m, m.cocircuits()); })
        .def("bases", [](const Matroid& m) { return family_labels(m, m.bases()); })
        .def("dual", &Matroid::dual)
        .def(
            "minor",
            [](const Matroid& m, std::vector<std::string> contract, std::vector<std::string> remove) {
                return m.minor(spec_of(m, contract, remove));
            },
            py::arg("contract") = std::vector<std::string>{},
            py::arg("delete") = std::vector<std::string>{})
        .def("is_connected", &Matroid::is_connected)
        .def("is_tame", &Matroid::is_tame)
        .def("is_scrawl",
             [](const Matroid& m, std::vector<std::string> subset) {
                 return m.is_scrawl(m.ground().mask_of(subset));
             })
        .def("check_scrawl_axioms",
             [](const Matroid& m) {
                 ScrawlAxiomReport r = m.check_scrawl_axioms();
                 return py::make_tuple(r.pass, r.scrawl_count, r.failure);
             })
        .def("__eq__", [](const Matroid& a, const Matroid& b) { return a == b; })
        .def("__repr__", [](const Matroid& m) {
            return "<Matroid n=" + std::to_string(m.n()) + " rank=" + std::to_string(m.rank()) +
                   " circuits=" + std::to_string(m.circuits().size()) + ">";
        });

    m.def("build_uniform", &build_uniform, py::arg("k"), py::arg("n"));
    m.def("build_fano", &build_fano);
    m.def("build_fano_dual", &build_fano_dual);
    m.def("catalog_matroid", &catalog_matroid);

    m.def("parse_matroid", &parse_matroid);
    m.def("serialize_matroid", &serialize_matroid);

    m.def("binary_predicates", [](const Matroid& mm) {
        BinaryReport rep = run_binary_suite(mm);
        py::dict out;
        for (const auto& [name, r] : rep.results) out[name.c_str()] = r.holds;
        return out;
    });
    m.def("binary_suite_agrees",
          [](const Matroid& mm) { return run_binary_suite(mm).all_agree(); });

    m.def(
        "brute_force_representable",
        [](const Matroid& mm, const std::string& field) -> py::object {
            auto rep = brute_force_representable(mm, domain_from_name(field));
            if (!rep) return py::none();
            return py::cast(*rep);
        },
        py::arg("matroid"), py::arg("field"));

    py::class_<Representation>(m, "Representation")
        .def_property_readonly("field",
                               [](const Representation& r) { return std::string(domain_name(r.field)); })
        .def_property_readonly("columns", [](const Representation& r) { return r.ground.labels(); })
        .def_property_readonly("rows", [](const Representation& r) { return r.row_labels; })
        .def("matrix",
             [](const Representation& r) {
                 std::vector<std::vector<std::string>> out;
                 for (int i = 0; i < r.rows(); ++i) {
                     std::vector<std::string> row;
                     for (int c = 0; c < r.ground.size(); ++c) row.push_back(render(r.entry(i, c)));
                     out.push_back(std::move(row));
                 }
                 return out;
             })
        .def("__repr__", [](const Representation& r) {
            return std::string("<Representation ") + domain_name(r.field) + " " +
                   std::to_string(r.rows()) + "x" + std::to_string(r.ground.size()) + ">";
        });

    m.def("matroid_from_representation", &matroid_from_representation);
    m.def("parse_matrix", &parse_matrix);
    m.def("serialize_matrix", &serialize_matrix);

    // paintings travel as their canonical text documents
    m.def("paint_from_representation", [](const Representation& rep) {
        PaintingResult pr = paint_from_representation(rep);
        return py::make_tuple(pr.matroid, serialize_painting(pr.matroid, pr.painting));
    });
    m.def("verify_painting", [](const Matroid& mm, const std::string& doc) {
        Painting p = parse_painting(mm, doc);
        PaintingReport rep = verify_painting(mm, p);
        std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> fails;
        for (const auto& f : rep.failures)
            fails.push_back({mm.ground().labels_of(mm.circuits()[size_t(f.circuit_idx)]),
                             mm.ground().labels_of(mm.cocircuits()[size_t(f.cocircuit_idx)])});
        return py::make_tuple(rep.verified(), fails);
    });
    m.def("representation_from_painting", [](const Matroid& mm, const std::string& doc) {
        return representation_from_painting(mm, parse_painting(mm, doc));
    });
    m.def(
        "induce_painting",
        [](const Matroid& mm, const std::string& doc, std::vector<std::string> contract,
           std::vector<std::string> remove) {
            InducedPainting ind = induce_painting(mm, parse_painting(mm, doc), spec_of(mm, contract, remove));
            return py::make_tuple(ind.minor, serialize_painting(ind.minor, ind.painting));
        },
        py::arg("matroid"), py::arg("painting"), py::arg("contract") = std::vector<std::string>{},
        py::arg("delete") = std::vector<std::string>{});

    m.def("find_signing", [](const Matroid& mm) { return painting_or_none(mm, find_signing(mm)); });

    m.def(
        "has_minor_isomorphic",
        [](const Matroid& mm, const Matroid& target) -> py::object {
            auto w = has_minor_isomorphic(mm, target);
            if (!w) return py::none();
            py::dict out;
            out["contract"] = mm.ground().labels_of(w->spec.contract);
            out["delete"] = mm.ground().labels_of(w->spec.remove);
            py::dict bij;
            for (const auto& [from, to] : w->bijection) bij[from.c_str()] = to;
            out["bijection"] = bij;
            return out;
        },
        py::arg("matroid"), py::arg("target"));
    m.def("is_ternary_by_excluded_minors", &is_ternary_by_excluded_minors);
    m.def("is_regular", &is_regular_by_minors_and_oracle);

    m.def("cycle_matroid",
          [](const std::vector<std::tuple<std::string, std::string, std::string>>& edges) {
              return cycle_matroid(graph_of(edges));
          });
    m.def("incidence_family",
          [](const std::vector<std::tuple<std::string, std::string, std::string>>& edges,
             const std::string& field) {
              return incidence_family(graph_of(edges), domain_from_name(field));
          });
    m.def("graph_signing",
          [](const std::vector<std::tuple<std::string, std::string, std::string>>& edges) {
              GraphSigning s = graph_signing(graph_of(edges));
              return py::make_tuple(s.matroid, serialize_painting(s.matroid, s.signing));
          });

    m.def("equivalence_witness_f3", [](const Matroid& mm, const std::string& d1, const std::string& d2) {
        EquivalenceWitness w = equivalence_witness_f3(mm, parse_painting(mm, d1), parse_painting(mm, d2));
        py::dict out;
        py::dict xe;
        for (int e = 0; e < mm.n(); ++e) xe[mm.ground().label(e).c_str()] = render(w.x_element[size_t(e)]);
        out["x_element"] = xe;
        std::vector<std::string> xo, xb;
        for (const Value& v : w.x_circuit) xo.push_back(render(v));
        for (const Value& v : w.x_cocircuit) xb.push_back(render(v));
        out["x_circuit"] = xo;
        out["x_cocircuit"] = xb;
        out["frobenius"] = w.phi.frobenius;
        return out;
    });

    m.def("standard_corpus_names", [](unsigned long long seed, int random_count) {
        CorpusOptions opts;
        opts.seed = seed;
        opts.random_matroids = random_count;
        std::vector<std::string> names;
        for (const auto& e : standard_corpus(opts)) names.push_back(e.name);
        return names;
    });
}
