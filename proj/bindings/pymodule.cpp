#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <boost/multiprecision/cpp_int.hpp>

#include "flowpoly/arrays.hpp"
#include "flowpoly/flows.hpp"
#include "flowpoly/genperm.hpp"
#include "flowpoly/io.hpp"
#include "flowpoly/multigraph.hpp"
#include "flowpoly/pipedreams.hpp"
#include "flowpoly/reduction.hpp"
#include "flowpoly/verify.hpp"

namespace py = pybind11;
using namespace flowpoly;

namespace {

MultiGraph graph_from_rows_py(int n, const std::vector<std::tuple<int, int, int>>& rows) {
    std::vector<std::array<int, 3>> converted;
    for (const auto& [t, h, m] : rows) converted.push_back({t, h, m});
    return MultiGraph::from_rows(n, converted);
}

py::dict poly_to_dict(const SparsePolynomial& p) {
    py::dict d;
    for (const auto& [e, c] : p.terms()) d[py::tuple(py::cast(e))] = c;
    return d;
}

SparsePolynomial poly_from_dict(int nvars, const py::dict& d) {
    SparsePolynomial p(nvars);
    for (const auto& item : d)
        p.add_term(item.first.cast<std::vector<int>>(), item.second.cast<long long>());
    return p;
}

EdgeSubset subset_from_py(const MultiGraph& g, const std::vector<std::tuple<int, int, int>>& f) {
    EdgeSubset out;
    for (const auto& [t, h, c] : f) {
        Edge e{t, h, c};
        if (!g.has_edge(e)) throw std::invalid_argument("edge subset: edge not in the graph");
        out.insert(e);
    }
    return out;
}

Strategy strategy_from_name(const std::string& name, uint64_t seed) {
    if (name == "special") return special_strategy();
    if (name == "lex") return lex_first_strategy();
    if (name == "lexlast") return lex_last_strategy();
    if (name == "longest") return longest_edge_strategy();
    if (name == "random") return random_strategy(seed);
    throw std::invalid_argument("unknown strategy: " + name);
}

py::dict zspec_to_dict(const GenPermSpec& spec) {
    py::dict d;
    for (uint32_t mask = 1; mask < (1u << spec.n); ++mask) {
        py::list key;
        for (int i = 0; i < spec.n; ++i)
            if (mask >> i & 1) key.append(i + 1);
        d[py::tuple(key)] = spec.z[mask];
    }
    return d;
}

GenPermSpec zspec_from_dict(int n, const py::dict& d) {
    GenPermSpec spec;
    spec.n = n;
    spec.z.assign(size_t{1} << n, 0);
    for (const auto& item : d) {
        uint32_t mask = 0;
        for (const auto& v : item.first.cast<py::tuple>()) {
            int i = v.cast<int>();
            if (i < 1 || i > n) throw std::invalid_argument("z keys are subsets of 1..n");
            mask |= 1u << (i - 1);
        }
        spec.z[mask] = item.second.cast<long long>();
    }
    return spec;
}

}  // namespace

PYBIND11_MODULE(_flowpoly, m) {
    m.doc() = "flow polytope dissections, degree sequences, generalized permutahedra, pipe dreams";

    py::class_<MultiGraph>(m, "Graph")
        .def(py::init(&graph_from_rows_py), py::arg("n"), py::arg("edges"))
        .def_static("from_text", &parse_graph_text)
        .def_property_readonly("n", &MultiGraph::n)
        .def("edges",
             [](const MultiGraph& g) {
                 std::vector<std::tuple<int, int, int>> out;
                 for (const Edge& e : g.edges()) out.push_back({e.tail, e.head, e.copy});
                 return out;
             })
        .def("edge_count", &MultiGraph::edge_count)
        .def("indeg", &MultiGraph::indeg)
        .def("outdeg", &MultiGraph::outdeg)
        .def("outdeg_set",
             [](const MultiGraph& g, const std::vector<int>& s) {
                 return g.outdeg_set(VertexSet(s.begin(), s.end()));
             })
        .def("tilde", &MultiGraph::tilde)
        .def("mirror", &MultiGraph::mirror)
        .def("restrict", &MultiGraph::restrict)
        .def("delete_vertices",
             [](const MultiGraph& g, const std::vector<int>& vs) {
                 return g.delete_vertices(VertexSet(vs.begin(), vs.end()));
             })
        .def("contract_edge",
             [](const MultiGraph& g, int t, int h, int c) { return g.contract_edge({t, h, c}); },
             py::arg("tail"), py::arg("head"), py::arg("copy") = 1)
        .def("increasing_reach",
             [](const MultiGraph& g, int i) {
                 auto r = g.increasing_reach(i);
                 return std::vector<int>(r.begin(), r.end());
             })
        .def("to_text", &graph_to_text)
        .def("__eq__", [](const MultiGraph& a, const MultiGraph& b) { return a == b; })
        .def("__repr__", [](const MultiGraph& g) { return "Graph(" + g.canonical_string() + ")"; });

    m.def("ld", [](const MultiGraph& g, const std::string& strategy, uint64_t seed) {
        py::list out;
        for (const auto& [key, mult] : ld_multiset(g, strategy_from_name(strategy, seed))) {
            py::list labels;
            for (const EdgeLabel& l : key.second)
                labels.append(py::make_tuple(l.edge.tail, l.edge.head, l.edge.copy, l.derived_id));
            out.append(py::make_tuple(py::tuple(py::cast(key.first)), py::tuple(labels), mult));
        }
        return out;
    }, py::arg("graph"), py::arg("strategy") = "special", py::arg("seed") = 0);

    m.def("ld_polynomial", [](const MultiGraph& g) { return poly_to_dict(ld_polynomial(g)); });
    m.def("rd_polynomial", [](const MultiGraph& g) { return poly_to_dict(rd_polynomial(g)); });

    m.def("kostant",
          [](const MultiGraph& g, const Netflow& a) { return kostant(g, a); });
    m.def("feasible", [](const MultiGraph& g, const Netflow& a) { return feasible(g, a); });
    m.def("enumerate_flows",
          [](const MultiGraph& g, const Netflow& a) { return enumerate_flows(g, a); });

    m.def("volume", &volume);
    m.def("ehrhart", [](const MultiGraph& g) {
        py::list out;
        for (const Rational& c : ehrhart(g))
            out.append(py::make_tuple(boost::multiprecision::numerator(c).str(),
                                      boost::multiprecision::denominator(c).str()));
        return out;
    });

    m.def("tri_text", [](const MultiGraph& g, const std::vector<std::tuple<int, int, int>>& f) {
        return render(tri_array(g, subset_from_py(g, f)));
    }, py::arg("graph"), py::arg("F") = std::vector<std::tuple<int, int, int>>{});
    m.def("sol_count", [](const MultiGraph& g, const std::vector<std::tuple<int, int, int>>& f) {
        return sol_count(tri_array(g, subset_from_py(g, f)));
    }, py::arg("graph"), py::arg("F") = std::vector<std::tuple<int, int, int>>{});
    m.def("sol_first_columns",
          [](const MultiGraph& g, const std::vector<std::tuple<int, int, int>>& f) {
              py::list out;
              for (const auto& [seq, mult] : sol_first_columns(tri_array(g, subset_from_py(g, f))))
                  out.append(py::make_tuple(py::tuple(py::cast(seq)), mult));
              return out;
          }, py::arg("graph"), py::arg("F") = std::vector<std::tuple<int, int, int>>{});

    m.def("z_parameters",
          [](const MultiGraph& g, const std::vector<std::tuple<int, int, int>>& f) -> py::object {
              auto spec = z_parameters(g, subset_from_py(g, f));
              if (!spec) return py::none();
              return zspec_to_dict(*spec);
          }, py::arg("graph"), py::arg("F") = std::vector<std::tuple<int, int, int>>{});
    m.def("z_parameters_level",
          [](const MultiGraph& g, long long k) -> py::object {
              auto spec = z_parameters_level(g, k);
              if (!spec) return py::none();
              return zspec_to_dict(*spec);
          });
    m.def("lattice_points", [](int n, const py::dict& z) {
        py::list out;
        for (const auto& p : genperm_lattice_points(zspec_from_dict(n, z)))
            out.append(py::tuple(py::cast(p)));
        return out;
    });

    m.def("snp_check", [](int nvars, const py::dict& poly) {
        SnpVerdict v = snp_check(poly_from_dict(nvars, poly));
        py::dict d;
        d["snp"] = v.snp;
        d["components_gp"] = v.components_gp;
        d["detail"] = v.detail;
        if (v.missing_point) d["missing_point"] = py::tuple(py::cast(*v.missing_point));
        return d;
    });
    m.def("hull_membership", &hull_membership);

    m.def("schubert",
          [](const std::string& pi) { return poly_to_dict(schubert(Permutation::from_string(pi))); });
    m.def("grothendieck", [](const std::string& pi) {
        return poly_to_dict(grothendieck(Permutation::from_string(pi)));
    });
    m.def("transition", [](const std::string& pi) {
        return poly_to_dict(transition(Permutation::from_string(pi)));
    });
    m.def("is_one_dominant", [](const std::string& pi) -> py::object {
        auto shape = is_one_dominant(Permutation::from_string(pi));
        if (!shape) return py::none();
        return py::tuple(py::cast(*shape));
    });

    m.def("verify_theorem_a", [](const MultiGraph& g, uint64_t seed) {
        VerifyReport rep = verify_theorem_A(
            g, {lex_first_strategy(), lex_last_strategy(), random_strategy(seed)});
        return py::make_tuple(rep.ok, rep.detail);
    }, py::arg("graph"), py::arg("seed") = 1);
    m.def("verify_encoding", [](const MultiGraph& g) {
        VerifyReport rep = verify_encoding_chain_all(g);
        return py::make_tuple(rep.ok, rep.detail);
    });
    m.def("verify_corollaries", [](const MultiGraph& g) {
        VerifyReport rep = verify_corollaries(g);
        return py::make_tuple(rep.ok, rep.detail);
    });
    m.def("verify_theorem_c", [](const std::string& pi) {
        TheoremCReport rep = verify_theorem_C(Permutation::from_string(pi));
        py::dict d;
        d["applicable"] = rep.applicable;
        d["grothendieck_snp"] = rep.grothendieck_snp;
        d["components_gp"] = rep.components_gp;
        d["schubert_01_coefficients"] = rep.schubert_01_coefficients;
        d["schubert_saturated"] = rep.schubert_saturated;
        d["ok"] = rep.ok();
        return d;
    });
    m.def("conjecture_scan", [](int n, int jobs) {
        ScanReport rep = conjecture_scan(n, jobs);
        return py::make_tuple(rep.counterexamples, rep.permutations, rep.failures);
    }, py::arg("n"), py::arg("jobs") = 1);
}
