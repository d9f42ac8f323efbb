#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ajpoly/elimination.hpp"
#include "ajpoly/invariants.hpp"
#include "ajpoly/wgz.hpp"

#include <cmath>

namespace py = pybind11;
using namespace ajpoly;

namespace {
const cplx I{0.0, 1.0};

DilogParams make_params(int N, double theta) {
    return DilogParams(N, std::exp(I * theta));
}
}  // namespace

PYBIND11_MODULE(_ajpoly, m) {
    m.doc() = "q-Weyl elimination and state-integral verification toolkit";

    py::register_exception<ParseError>(m, "ParseError");

    py::class_<NCPoly>(m, "NCPoly")
        .def(py::init<>())
        .def("__add__", [](const NCPoly& a, const NCPoly& b) { return a + b; })
        .def("__sub__", [](const NCPoly& a, const NCPoly& b) { return a - b; })
        .def("__mul__", &nc_mul)
        .def("__neg__", [](const NCPoly& a) { return -a; })
        .def("__eq__", [](const NCPoly& a, const NCPoly& b) { return a == b; })
        .def("__str__", &NCPoly::to_string)
        .def("__repr__", [](const NCPoly& p) { return "NCPoly(" + p.to_string() + ")"; })
        .def("is_zero", &NCPoly::is_zero)
        .def("term_count", &NCPoly::term_count)
        .def("substitute_ly_one", [](const NCPoly& p) { return nc_substitute_ly_one(p); })
        .def("rescale_lx",
             [](const NCPoly& p, int sign, long vpow) { return nc_rescale_lx(p, sign, vpow); },
             py::arg("sign"), py::arg("vpow"))
        .def("unit_normalize",
             [](const NCPoly& p) {
                 auto u = nc_unit_normalize(p);
                 return py::make_tuple(u.coeff.to_string(),
                                       py::make_tuple(u.mono.a, u.mono.b, u.mono.c, u.mono.d),
                                       u.normalized);
             })
        .def("classical",
             [](const NCPoly& p) {
                 auto c = nc_classical_limit(p);
                 py::dict d;
                 for (auto& [mo, co] : c.terms())
                     d[py::make_tuple(mo.first, mo.second)] = co.get_str();
                 return d;
             });

    m.def("parse", &nc_parse, py::arg("text"), "parse the operator grammar");
    m.def("default_data_dir", &default_data_dir);

    py::class_<Certificate>(m, "Certificate")
        .def_readonly("knot", &Certificate::knot)
        .def_readonly("g1", &Certificate::g1)
        .def_readonly("g2", &Certificate::g2)
        .def_readonly("a1", &Certificate::a1)
        .def_readonly("a2", &Certificate::a2)
        .def_readonly("ahat", &Certificate::ahat)
        .def_readonly("known_nh", &Certificate::known_nh);

    m.def("load_certificate", &load_certificate, py::arg("knot"), py::arg("data_dir"));

    m.def("verify_certificate", [](const Certificate& c) {
        auto r = verify_certificate(c);
        py::dict d;
        d["valid"] = r.valid;
        d["recipe_index"] = r.recipe_index;
        d["residual_terms"] = r.residual.term_count();
        return d;
    });

    m.def("eliminate_my",
          [](const NCPoly& g1, const NCPoly& g2, std::tuple<int, int, int, int> b1,
             std::tuple<int, int, int, int> b2) {
              EliminationBounds eb1{std::get<0>(b1), std::get<1>(b1), std::get<2>(b1),
                                    std::get<3>(b1)};
              EliminationBounds eb2{std::get<0>(b2), std::get<1>(b2), std::get<2>(b2),
                                    std::get<3>(b2)};
              std::vector<NCPoly> out;
              for (auto& e : eliminate_my(g1, g2, eb1, eb2)) out.push_back(e.normalized);
              return out;
          },
          py::arg("g1"), py::arg("g2"), py::arg("bounds1"), py::arg("bounds2"));

    m.def("ahatc_for_knot", [](const Certificate& c) {
        auto r = ahatc_for_knot(c);
        py::dict d;
        d["source"] = r.source;
        d["ahat_c"] = r.ahat_c;
        d["eliminant"] = r.eliminant;
        return d;
    });

    m.def("check_garoufalidis", [](const NCPoly& ahat_c, const Certificate& c) {
        auto r = check_garoufalidis(ahat_c, c);
        py::dict d;
        d["match"] = r.match;
        if (r.match) {
            d["unit_coeff"] = r.coeff.to_string();
            d["unit_mono"] = py::make_tuple(r.mono.a, r.mono.b, r.mono.c, r.mono.d);
        }
        return d;
    });

    m.def("check_classical", [](const NCPoly& ahat_c, const Certificate& c) {
        auto r = check_classical(ahat_c, c);
        py::dict d;
        d["match"] = r.match;
        d["degeneracy"] = r.degeneracy;
        d["sign"] = r.sign;
        return d;
    });

    m.def("dilog",
          [](std::complex<double> x, int n, int N, double theta) {
              auto p = make_params(N, theta);
              return dilog({x, p.reduce_mod_N(n)}, p);
          },
          py::arg("x"), py::arg("n") = 0, py::arg("N") = 1,
          py::arg("theta") = 3.141592653589793 / 6);

    m.def("gaussian",
          [](std::complex<double> x, int n, int N, double theta) {
              auto p = make_params(N, theta);
              return gaussian({x, p.reduce_mod_N(n)}, p);
          },
          py::arg("x"), py::arg("n") = 0, py::arg("N") = 1,
          py::arg("theta") = 3.141592653589793 / 6);

    m.def("chi",
          [](const std::string& knot, std::complex<double> x, int n, double tol, int N,
             double theta) {
              auto p = make_params(N, theta);
              auto r = chi(knot_from_string(knot), {x, p.reduce_mod_N(n)}, p, tol);
              return py::make_tuple(r.value, r.quad.error);
          },
          py::arg("knot"), py::arg("x"), py::arg("n") = 0, py::arg("tol") = 1e-6,
          py::arg("N") = 1, py::arg("theta") = 3.141592653589793 / 6);

    m.def("integrand_annihilation",
          [](const std::string& knot, int count, uint64_t seed, int N, double theta) {
              auto p = make_params(N, theta);
              Certificate c = load_certificate(knot, default_data_dir());
              auto r = check_integrand_annihilation(knot_from_string(knot), c.g1, c.g2,
                                                    count, seed, p);
              py::dict d;
              d["max_residual_g1"] = r.max_residual_g1;
              d["max_residual_g2"] = r.max_residual_g2;
              return d;
          },
          py::arg("knot"), py::arg("count") = 5, py::arg("seed") = 20260810,
          py::arg("N") = 1, py::arg("theta") = 3.141592653589793 / 6);

    m.def("invariant_annihilation",
          [](const std::string& knot, std::complex<double> x, double tol, int N,
             double theta) {
              auto p = make_params(N, theta);
              Certificate c = load_certificate(knot, default_data_dir());
              auto res = ahatc_for_knot(c);
              auto r = check_invariant_annihilation(knot_from_string(knot), res.ahat_c,
                                                    {x, 0}, p, tol);
              py::dict d;
              d["rel_residual"] = r.rel_residual;
              d["source"] = res.source;
              return d;
          },
          py::arg("knot"), py::arg("x") = std::complex<double>(0, 0),
          py::arg("tol") = 1e-6, py::arg("N") = 1,
          py::arg("theta") = 3.141592653589793 / 6);

    m.def("wgz_check", [](int N, double S, int grid) {
        QuantParams qp(N, S);
        auto r = verify_an_correspondence(qp, grid, 24);
        py::dict d;
        d["mhat"] = r.mhat_residual;
        d["lhat"] = r.lhat_residual;
        d["commutator"] = r.commutator_residual;
        d["isometry"] = r.isometry_residual;
        d["q_formula_diff"] = r.q_formula_diff;
        return d;
    }, py::arg("N") = 1, py::arg("S") = 1.0, py::arg("grid") = 128);
}
