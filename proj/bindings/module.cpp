#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lexspec/json_io.hpp"
#include "lexspec/lex_join.hpp"
#include "lexspec/lex_power.hpp"
#include "lexspec/oracle.hpp"

namespace py = pybind11;
using namespace lexspec;

namespace {

py::object bigint_to_py(const BigInt& v) {
    const std::string s = v.str();
    PyObject* obj = PyLong_FromString(s.c_str(), nullptr, 10);
    if (!obj) throw py::error_already_set();
    return py::reinterpret_steal<py::object>(obj);
}

py::list poly_to_py(const IntPoly& p) {
    py::list out;
    for (const auto& c : p.coeffs) out.append(bigint_to_py(c));
    return out;
}

py::object json_to_py(const Json& j) {
    switch (j.type()) {
    case Json::value_t::null: return py::none();
    case Json::value_t::boolean: return py::bool_(j.get<bool>());
    case Json::value_t::number_integer: return py::int_(j.get<std::int64_t>());
    case Json::value_t::number_unsigned: return py::int_(j.get<std::uint64_t>());
    case Json::value_t::number_float: return py::float_(j.get<double>());
    case Json::value_t::string: return py::str(j.get<std::string>());
    case Json::value_t::array: {
        py::list out;
        for (const auto& e : j) out.append(json_to_py(e));
        return out;
    }
    case Json::value_t::object: {
        py::dict out;
        for (auto it = j.begin(); it != j.end(); ++it)
            out[py::str(it.key())] = json_to_py(it.value());
        return out;
    }
    default: throw std::runtime_error("unsupported json value");
    }
}

Graph generate_by_name(const std::string& family, const std::vector<int>& params) {
    const auto f = family_from_name(family);
    if (!f) throw std::invalid_argument("unknown graph family: " + family);
    return generate(*f, params);
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Spectra and characteristic polynomials of lexicographic graph products.\n"
              "Spectra and reports arrive as dicts mirroring the CLI JSON schemas;\n"
              "polynomial coefficient lists are exact Python integers, ascending.";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<SizeError>(m, "SizeError", PyExc_ValueError);
    py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);

    py::class_<Graph>(m, "Graph")
        .def(py::init<int, std::string>(), py::arg("order"), py::arg("label") = std::string())
        .def_property_readonly("order", &Graph::order)
        .def_property_readonly("label", &Graph::label)
        .def("add_edge", &Graph::add_edge, py::arg("u"), py::arg("v"),
             "add an undirected edge between 0-based vertices")
        .def("adjacent", &Graph::adjacent)
        .def("degree", &Graph::degree)
        .def("adjacency",
             [](const Graph& g) {
                 std::vector<std::vector<int>> rows(static_cast<size_t>(g.order()),
                                                    std::vector<int>(static_cast<size_t>(g.order())));
                 for (int i = 0; i < g.order(); ++i)
                     for (int j = 0; j < g.order(); ++j)
                         rows[static_cast<size_t>(i)][static_cast<size_t>(j)] = g.adjacent(i, j);
                 return rows;
             })
        .def("edge_count", [](const Graph& g) { return edge_count(g); })
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "<Graph order=" + std::to_string(g.order()) +
                   (g.label().empty() ? "" : " '" + g.label() + "'") + ">";
        });

    m.def("from_edge_list", &parse_edge_list, py::arg("text"));
    m.def("from_graph6", &parse_graph6, py::arg("text"));
    m.def("to_graph6", &emit_graph6, py::arg("graph"));
    m.def("generate", &generate_by_name, py::arg("family"), py::arg("params"),
          "families: complete, path, cycle, star, complete_bipartite, empty");
    m.def("lex_product", &lex_product_explicit, py::arg("h"), py::arg("g"),
          py::arg("cap") = kDefaultOracleCap);
    m.def("is_regular", [](const Graph& g) { return is_regular(g); });
    m.def("is_connected", &is_connected);

    m.def("spectrum",
          [](const Graph& g) { return json_to_py(to_json(classify_main(g, eigen_sym(g), {}))); },
          py::arg("graph"), "grouped eigenvalues with main/non-main flags");
    m.def("main_poly",
          [](const Graph& g, int k) {
              const MainPolynomial mp = power_main_poly(g, k);
              py::dict out;
              out["s"] = mp.s;
              py::list coeffs;
              for (const auto& c : mp.coeffs) coeffs.append(bigint_to_py(c));
              out["coeffs"] = coeffs;
              return out;
          },
          py::arg("graph"), py::arg("k") = 1,
          "coefficients c_0..c_{s-1} of m(x) = x^s - sum c_j x^j, exact");
    m.def("char_poly",
          [](const Graph& g) { return poly_to_py(char_poly(int_adjacency(g))); },
          py::arg("graph"), "exact characteristic polynomial, ascending coefficients");

    m.def("lex_spectrum",
          [](const Graph& h, const Graph& g) { return json_to_py(to_json(lex_spectrum(h, g))); },
          py::arg("h"), py::arg("g"));
    m.def("lex_spectrum_regular",
          [](const Graph& h, const Graph& g) {
              return json_to_py(to_json(lex_spectrum_regular(h, g)));
          },
          py::arg("h"), py::arg("g"));
    m.def("lex_char_poly",
          [](const Graph& h, const Graph& g) { return poly_to_py(lex_char_poly(h, g)); },
          py::arg("h"), py::arg("g"));
    m.def("corollary_check",
          [](const Graph& h, const Graph& g) { return json_to_py(to_json(corollary_check(h, g))); },
          py::arg("h"), py::arg("g"));

    m.def("power_spectrum",
          [](const Graph& g, int k) { return json_to_py(to_json(power_spectrum(g, k))); },
          py::arg("graph"), py::arg("k"));
    m.def("power_main_poly",
          [](const Graph& g, int k) {
              return poly_to_py(power_main_poly(g, k).to_poly());
          },
          py::arg("graph"), py::arg("k"), "m_{G^k}(x) as ascending exact coefficients");
    m.def("power_char_poly",
          [](const Graph& g, int k) { return poly_to_py(power_char_poly(g, k)); },
          py::arg("graph"), py::arg("k"));
    m.def("factor_check",
          [](const Graph& g, int j) {
              const FactorCheckReport r = factor_check(g, j);
              py::dict out;
              out["level"] = r.level;
              out["divides"] = r.divides;
              out["cofactor"] = poly_to_py(r.cofactor);
              return out;
          },
          py::arg("graph"), py::arg("j"));

    m.def("oracle_spectrum",
          [](const Graph& h, const Graph& g, std::int64_t cap) {
              return json_to_py(to_json(oracle_spectrum(h, g, {}, cap)));
          },
          py::arg("h"), py::arg("g"), py::arg("cap") = kDefaultOracleCap);
    m.def("verify_product",
          [](const Graph& h, const Graph& g, double tol, std::int64_t cap) {
              const MultisetDiff d =
                  compare_multisets(lex_spectrum(h, g), oracle_spectrum(h, g, {}, cap), tol);
              return json_to_py(to_json(d));
          },
          py::arg("h"), py::arg("g"), py::arg("tol") = 1e-7, py::arg("cap") = kDefaultOracleCap,
          "structured vs explicit-oracle spectrum comparison for H[G]");
    m.def("verify_power",
          [](const Graph& g, int k, double tol, std::int64_t cap) {
              Graph power = g;
              for (int i = 1; i < k; ++i) power = lex_product_explicit(g, power, cap);
              const MultisetDiff d =
                  compare_multisets(power_spectrum(g, k).final_spectrum(), eigen_sym(power), tol);
              return json_to_py(to_json(d));
          },
          py::arg("graph"), py::arg("k"), py::arg("tol") = 1e-7,
          py::arg("cap") = kDefaultOracleCap);
}
