#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "wckit/brauer_fibration.hpp"
#include "wckit/cli.hpp"
#include "wckit/cohomology.hpp"
#include "wckit/elliptic_ff.hpp"
#include "wckit/errors.hpp"
#include "wckit/modarith.hpp"
#include "wckit/real_curves.hpp"
#include "wckit/textio.hpp"
#include "wckit/torsor_model.hpp"
#include "wckit/unitary_orbits.hpp"

namespace py = pybind11;
using namespace wc;

namespace {

RationalPolynomial poly_from_strings(const std::vector<std::string>& ascending) {
    std::vector<Rational> coeffs;
    coeffs.reserve(ascending.size());
    for (const auto& s : ascending) coeffs.push_back(parse_rational(s));
    return RationalPolynomial(std::move(coeffs));
}

std::array<int64_t, 10> coeffs10(const std::vector<int64_t>& coeffs) {
    if (coeffs.size() != 10)
        throw validation_error("a plane cubic needs 10 coefficients");
    std::array<int64_t, 10> c;
    std::copy(coeffs.begin(), coeffs.end(), c.begin());
    return c;
}

SplitBrauerModel brmodel_from(int64_t n, const std::vector<int64_t>& br_orders,
                              const std::vector<std::vector<int64_t>>& base_generators) {
    FiniteAbelianGroup brauer(br_orders);
    std::vector<int64_t> gens;
    gens.reserve(base_generators.size());
    for (const auto& t : base_generators) gens.push_back(brauer.index_of(t));
    return SplitBrauerModel(n, std::move(brauer), gens);
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Torsor classification toolkit: finite-group cohomology, Weil-Chatelet "
              "class arithmetic, curve point counts, congruence-subgroup orbits";

    py::register_exception<validation_error>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<check_failure>(m, "CheckFailure", PyExc_RuntimeError);

    // modular arithmetic
    m.def("unit_group", &unit_group, py::arg("m"));
    m.def(
        "element_order",
        [](int64_t value, int64_t modulus) { return residue_order(value, modulus); },
        py::arg("value"), py::arg("modulus"));
    m.def(
        "subgroup_generated",
        [](const std::vector<int64_t>& orders, const std::vector<int64_t>& element) {
            FiniteAbelianGroup g(orders);
            std::vector<std::vector<int64_t>> out;
            for (int64_t idx : g.subgroup_generated(g.index_of(element)))
                out.push_back(g.tuple_of(idx));
            return out;
        },
        py::arg("cyclic_orders"), py::arg("element"));

    // cohomology, addressed through the same text specs the CLI uses
    m.def(
        "h1_sizes",
        [](const std::string& group, const std::string& module, const std::string& action) {
            const H1Result r = h1(parse_gmodule(group, module, action));
            return py::make_tuple(r.z1_size, r.b1_size, r.size);
        },
        py::arg("group"), py::arg("module"), py::arg("action") = "trivial");
    m.def(
        "cocycle_count",
        [](const std::string& group, const std::string& module, const std::string& action) {
            return static_cast<int64_t>(cocycles(parse_gmodule(group, module, action)).size());
        },
        py::arg("group"), py::arg("module"), py::arg("action") = "trivial");
    m.def(
        "picd_values",
        [](const std::string& group, const std::string& module, const std::string& action,
           const std::string& values, int64_t d) {
            const GModule gm = parse_gmodule(group, module, action);
            const Cocycle alpha(
                gm, parse_module_values(gm.module(), values,
                                        static_cast<size_t>(gm.group().size())));
            const Cocycle out = picd_cocycle(alpha, d);
            std::vector<std::vector<int64_t>> tuples;
            for (int64_t v : out.values()) tuples.push_back(gm.module().tuple_of(v));
            return tuples;
        },
        py::arg("group"), py::arg("module"), py::arg("action"), py::arg("values"), py::arg("d"));

    // torsor classification
    m.def(
        "classify",
        [](int64_t n, const std::vector<int64_t>& aut) {
            const ClassifyReport r = classify(WCModel(n, aut));
            py::dict out;
            out["iso_classes"] = r.iso_classes;
            out["derived_classes"] = r.derived_classes;
            out["iso_classes_among_generators"] = r.iso_classes_among_generators;
            out["derived_classes_among_generators"] = r.derived_classes_among_generators;
            out["derived_matches_cyclic_partition"] = r.derived_matches_cyclic_partition;
            return out;
        },
        py::arg("n"), py::arg("aut"));
    m.def(
        "iso_related",
        [](int64_t n, const std::vector<int64_t>& aut, int64_t x, int64_t y) {
            WCModel model(n, aut);
            return iso_related(TorsorClass(model, x), TorsorClass(model, y));
        },
        py::arg("n"), py::arg("aut"), py::arg("x"), py::arg("y"));
    m.def(
        "derived_related",
        [](int64_t n, const std::vector<int64_t>& aut, int64_t x, int64_t y) {
            WCModel model(n, aut);
            return derived_related(TorsorClass(model, x), TorsorClass(model, y));
        },
        py::arg("n"), py::arg("aut"), py::arg("x"), py::arg("y"));
    m.def(
        "moduli_label",
        [](int64_t n, int64_t y, int64_t d) {
            WCModel model(n, {1});
            return moduli_label(TorsorClass(model, y), d).value;
        },
        py::arg("n"), py::arg("y"), py::arg("d"));

    // real curves
    m.def(
        "sturm_real_roots",
        [](const std::vector<std::string>& ascending_coeffs) {
            return sturm_real_roots(poly_from_strings(ascending_coeffs));
        },
        py::arg("ascending_coeffs"));
    m.def(
        "real_two_torsion",
        [](const std::string& a, const std::string& b) {
            return to_string(real_two_torsion(RationalCurve(parse_rational(a), parse_rational(b))));
        },
        py::arg("a"), py::arg("b"));
    m.def(
        "h1_real_size",
        [](const std::string& a, const std::string& b) {
            return h1_real_size(RationalCurve(parse_rational(a), parse_rational(b)));
        },
        py::arg("a"), py::arg("b"));

    // finite-field curves
    m.def(
        "curve_group_order",
        [](int64_t p, int64_t a, int64_t b) { return curve_group_order(WeierstrassCurve(p, a, b)); },
        py::arg("p"), py::arg("a"), py::arg("b"));
    m.def(
        "aut_group_order",
        [](int64_t p, int64_t a, int64_t b) { return aut_group_order(WeierstrassCurve(p, a, b)); },
        py::arg("p"), py::arg("a"), py::arg("b"));
    m.def(
        "cubic_point_count",
        [](int64_t p, const std::vector<int64_t>& coeffs) {
            return cubic_point_count(PlaneCubic(p, coeffs10(coeffs)));
        },
        py::arg("p"), py::arg("coeffs"));
    m.def(
        "cubic_rational_point",
        [](int64_t p, const std::vector<int64_t>& coeffs) -> py::object {
            const auto pt = cubic_rational_point(PlaneCubic(p, coeffs10(coeffs)));
            if (!pt) return py::none();
            return py::make_tuple(pt->x, pt->y, pt->z);
        },
        py::arg("p"), py::arg("coeffs"));
    m.def(
        "weierstrass_from_cubic",
        [](int64_t p, const std::vector<int64_t>& coeffs,
           py::object point) {
            const PlaneCubic cubic(p, coeffs10(coeffs));
            ProjectivePoint base{0, 0, 0};
            if (point.is_none()) {
                const auto found = cubic_rational_point(cubic);
                if (!found) throw check_failure("no rational point found on a smooth cubic");
                base = *found;
            } else {
                auto t = point.cast<std::vector<int64_t>>();
                if (t.size() != 3) throw validation_error("point needs three coordinates");
                base = {t[0], t[1], t[2]};
            }
            const ReductionResult r = weierstrass_from_cubic(cubic, base);
            py::dict out;
            out["p"] = r.curve.p;
            out["a"] = r.curve.a;
            out["b"] = r.curve.b;
            out["route"] = to_string(r.route);
            return out;
        },
        py::arg("p"), py::arg("coeffs"), py::arg("point") = py::none());

    // congruence orbits
    m.def(
        "gamma0_size",
        [](int64_t N, int64_t m) { return static_cast<int64_t>(gamma0_image(N, m).matrices.size()); },
        py::arg("N"), py::arg("m"));
    m.def(
        "orbit",
        [](int64_t N, int64_t m, int64_t phi, int64_t x, int64_t y, py::object psi) {
            PolarizationModel pol = default_polarization(phi, m);
            if (!psi.is_none()) pol.psi = mod_reduce(psi.cast<int64_t>(), m);
            std::vector<std::pair<int64_t, int64_t>> out;
            for (const auto& p : orbit(PairClass{x, y}, gamma0_image(N, m), pol))
                out.emplace_back(p.x, p.y);
            return out;
        },
        py::arg("N"), py::arg("m"), py::arg("phi"), py::arg("x"), py::arg("y"),
        py::arg("psi") = py::none());
    m.def(
        "polarized_check",
        [](int64_t N, int64_t m, int64_t phi, py::object psi) {
            PolarizationModel pol = default_polarization(phi, m);
            if (!psi.is_none()) pol.psi = mod_reduce(psi.cast<int64_t>(), m);
            return polarized_conclusion_check(N, m, pol).pass;
        },
        py::arg("N"), py::arg("m"), py::arg("phi"), py::arg("psi") = py::none());
    m.def(
        "sp_size", [](int genus, int64_t m) { return sp_image(genus, m).size; },
        py::arg("genus"), py::arg("m"));

    // split Brauer models
    m.def(
        "fiber_derived_witness",
        [](int64_t n, const std::vector<int64_t>& br_orders,
           const std::vector<std::vector<int64_t>>& base_generators,
           std::pair<int64_t, std::vector<int64_t>> alpha,
           std::pair<int64_t, std::vector<int64_t>> beta) -> py::object {
            const SplitBrauerModel model = brmodel_from(n, br_orders, base_generators);
            const BrauerClass a{alpha.first, model.brauer.index_of(alpha.second)};
            const BrauerClass b{beta.first, model.brauer.index_of(beta.second)};
            const auto w = fiber_derived_witness(a, b, model);
            if (!w) return py::none();
            return py::int_(*w);
        },
        py::arg("n"), py::arg("br_orders"), py::arg("base_generators"), py::arg("alpha"),
        py::arg("beta"));
    m.def(
        "same_cyclic_in_quotient",
        [](int64_t n, const std::vector<int64_t>& br_orders,
           const std::vector<std::vector<int64_t>>& base_generators,
           std::pair<int64_t, std::vector<int64_t>> alpha,
           std::pair<int64_t, std::vector<int64_t>> beta) {
            const SplitBrauerModel model = brmodel_from(n, br_orders, base_generators);
            const BrauerClass a{alpha.first, model.brauer.index_of(alpha.second)};
            const BrauerClass b{beta.first, model.brauer.index_of(beta.second)};
            return same_cyclic_in_quotient(a, b, model);
        },
        py::arg("n"), py::arg("br_orders"), py::arg("base_generators"), py::arg("alpha"),
        py::arg("beta"));

    // the CLI dispatcher, in process: returns (exit_code, stdout, stderr)
    m.def(
        "cli_run",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            const int code = wc::cli::run(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"));
}
