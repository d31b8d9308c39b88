#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "zkpoly/agreement.hpp"
#include "zkpoly/algebra.hpp"
#include "zkpoly/boolfn.hpp"
#include "zkpoly/constructions.hpp"
#include "zkpoly/errors.hpp"
#include "zkpoly/nonclassical.hpp"
#include "zkpoly/ring_poly.hpp"
#include "zkpoly/search.hpp"
#include "zkpoly/symmetric.hpp"
#include "zkpoly/verify.hpp"
#include "zkpoly/version.hpp"

namespace py = pybind11;
using namespace zkpoly;

namespace {

py::object big_to_py(const BigInt& v) {
    // Round-trip through the decimal string; Python ints are arbitrary size.
    return py::int_(py::str(v.str()));
}

RingPoly poly_from_terms(unsigned n, unsigned k, unsigned d,
                         const std::map<std::uint32_t, std::uint32_t>& terms) {
    RingPoly p(n, k, d);
    for (const auto& [mask, coeff] : terms) p.set_coeff(mask, coeff);
    return p;
}

}  // namespace

PYBIND11_MODULE(_zkpoly, m) {
    m.doc() = "Exact approximation of Boolean functions by polynomials over Z/2^k";
    m.attr("__version__") = ZKPOLY_VERSION;

    py::register_exception<Error>(m, "ZkpolyError");

    py::class_<Agreement>(m, "Agreement")
        .def_property_readonly("matches", [](const Agreement& a) { return big_to_py(a.matches); })
        .def_property_readonly("total", [](const Agreement& a) { return big_to_py(a.total); })
        .def_readonly("restricted", &Agreement::restricted)
        .def("value", &Agreement::value)
        .def("__str__", &Agreement::str)
        .def("__repr__", [](const Agreement& a) { return "Agreement(" + a.str() + ")"; })
        .def("__eq__", [](const Agreement& a, const Agreement& b) { return a == b; })
        .def("__le__", [](const Agreement& a, const Agreement& b) { return a <= b; })
        .def("__lt__", [](const Agreement& a, const Agreement& b) { return a < b; });

    py::class_<BoolFn>(m, "BoolFn")
        .def(py::init<unsigned>(), py::arg("n"))
        .def_static("random", &BoolFn::random, py::arg("n"), py::arg("seed"))
        .def_property_readonly("n", &BoolFn::n)
        .def("__len__", &BoolFn::size)
        .def("get", &BoolFn::get)
        .def("set", &BoolFn::set)
        .def("count_ones", &BoolFn::count_ones)
        .def("save", &BoolFn::save_file, py::arg("path"))
        .def_static("load", &BoolFn::load_file, py::arg("path"))
        .def("__eq__", [](const BoolFn& a, const BoolFn& b) { return a == b; });

    py::class_<RingPoly>(m, "RingPoly")
        .def(py::init(&poly_from_terms), py::arg("n"), py::arg("k"), py::arg("d"),
             py::arg("terms") = std::map<std::uint32_t, std::uint32_t>{})
        .def_property_readonly("n", &RingPoly::n)
        .def_property_readonly("k", &RingPoly::k)
        .def_property_readonly("d", &RingPoly::d)
        .def("coeff", &RingPoly::coeff)
        .def("coeffs", [](const RingPoly& p) { return p.coeffs(); })
        .def("set_coeff", &RingPoly::set_coeff)
        .def("degree", &RingPoly::degree)
        .def("is_zero", &RingPoly::is_zero)
        .def("eval", &RingPoly::eval)
        .def("eval_all", [](const RingPoly& p) { return p.eval_all(); })
        .def("project_mod2", &RingPoly::project_mod2)
        .def("to_json", [](const RingPoly& p) { return p.to_json().dump(); })
        .def_static("from_json",
                    [](const std::string& s) { return RingPoly::from_json(nlohmann::json::parse(s)); })
        .def("__eq__", [](const RingPoly& a, const RingPoly& b) { return a == b; });

    py::class_<LiftedFn>(m, "LiftedFn")
        .def_readonly("n", &LiftedFn::n)
        .def_readonly("k", &LiftedFn::k)
        .def_readonly("values", &LiftedFn::values);

    py::class_<NCTerm>(m, "NCTerm")
        .def(py::init([](std::uint32_t mask, unsigned level) {
                 return NCTerm{mask, level};
             }),
             py::arg("mask"), py::arg("level"))
        .def_readonly("mask", &NCTerm::mask)
        .def_readonly("level", &NCTerm::level);

    py::class_<Dyadic>(m, "Dyadic")
        .def_readonly("num", &Dyadic::num)
        .def_readonly("log_den", &Dyadic::log_den)
        .def("__eq__", [](const Dyadic& a, const Dyadic& b) { return a == b; })
        .def("__repr__", [](const Dyadic& v) {
            return std::to_string(v.num) + "/2^" + std::to_string(v.log_den);
        });

    py::class_<NCPoly>(m, "NCPoly")
        .def(py::init<unsigned, unsigned, std::uint32_t, std::vector<NCTerm>>(),
             py::arg("n"), py::arg("depth"), py::arg("shift_num"), py::arg("terms"))
        .def_property_readonly("n", &NCPoly::n)
        .def_property_readonly("depth", &NCPoly::depth)
        .def_property_readonly("shift_num", &NCPoly::shift_num)
        .def("degree", &NCPoly::degree)
        .def("eval", &NCPoly::eval)
        .def("eval_num", &NCPoly::eval_num)
        .def("to_json", [](const NCPoly& p) { return p.to_json().dump(); });

    py::class_<PointSet>(m, "PointSet")
        .def_static("of", &PointSet::of, py::arg("n"), py::arg("points"))
        .def_readonly("n", &PointSet::n)
        .def_readonly("points", &PointSet::points);

    py::class_<GammaResult>(m, "GammaResult")
        .def_readonly("gamma", &GammaResult::gamma)
        .def_readonly("witness", &GammaResult::witness)
        .def_property_readonly("mode", [](const GammaResult& r) {
            return r.mode == GammaMode::exact ? "exact" : "heuristic";
        })
        .def_property_readonly("search_space_size", [](const GammaResult& r) {
            return big_to_py(r.search_space_size);
        })
        .def("to_json", [](const GammaResult& r) { return r.to_json().dump(); });

    m.def("k_lift", &k_lift, py::arg("f"), py::arg("k"));
    m.def("agreement", [](const std::vector<std::uint16_t>& a, const std::vector<std::uint16_t>& b) {
        return agreement(std::span<const std::uint16_t>(a), std::span<const std::uint16_t>(b));
    });
    m.def("mobius_interpolate", [](const std::vector<std::uint16_t>& values, unsigned k, unsigned d_max) {
        return mobius_interpolate(std::span<const std::uint16_t>(values), k, d_max);
    });

    m.def("weight_bit", &weight_bit);
    m.def("elem_sym_mod2", &elem_sym_mod2);
    m.def("borrow_count", &borrow_count);
    m.def("binom_mod_2k", &binom_mod_2k);
    m.def("corollary_kummer_check", &corollary_kummer_check);

    m.def("vanishing_basis", &vanishing_basis, py::arg("s"), py::arg("d"), py::arg("k"),
          py::arg("max_entries") = std::uint64_t(1) << 20);
    m.def("is_interpolating", &is_interpolating, py::arg("s"), py::arg("d"), py::arg("k"),
          py::arg("max_entries") = std::uint64_t(1) << 20);
    m.def("is_forcing", &is_forcing, py::arg("s"), py::arg("d"), py::arg("k"),
          py::arg("max_entries") = std::uint64_t(1) << 20);

    m.def("gamma_exact", &gamma_exact, py::arg("f"), py::arg("d"), py::arg("k"),
          py::arg("budget") = std::uint64_t(1) << 33, py::arg("threads") = 0,
          py::call_guard<py::gil_scoped_release>());
    m.def("gamma_heuristic", &gamma_heuristic, py::arg("f"), py::arg("d"), py::arg("k"),
          py::arg("restarts") = 4, py::arg("seed") = 1,
          py::call_guard<py::gil_scoped_release>());

    m.def("majority", &majority, py::arg("n"));
    m.def("elem_sym_fn", &elem_sym_fn, py::arg("n"), py::arg("t"));
    m.def("sym_witness", &sym_witness, py::arg("n"), py::arg("ell"));
    m.def("sym_separation_agreement", &sym_separation_agreement, py::arg("n"), py::arg("ell"));
    m.def("construct_f_h", &construct_f_h, py::arg("n"), py::arg("d"), py::arg("h"));
    m.def("quad_witness", &quad_witness, py::arg("n"), py::arg("d"));

    m.def("nc_from_ring", &nc_from_ring, py::arg("p"));
    m.def("nc_to_ring", &nc_to_ring, py::arg("p"), py::arg("target_d"));
    m.def("nc_boolean_agreement", &nc_boolean_agreement, py::arg("p"), py::arg("f"));

    m.def("verify_rel_lbd", [] {
        const RelLbdResult r = verify_rel_lbd();
        return py::make_tuple(r.max_agreement, r.witness_q.monomials);
    });
    m.def("verify_lem_main", &verify_lem_main, py::arg("ell"), py::arg("width"));
}
