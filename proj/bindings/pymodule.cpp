#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "ugq/sweep.hpp"
#include "ugq/unitgroup.hpp"

namespace py = pybind11;
using namespace ugq;

namespace {

Poly to_poly(const py::object& obj) {
    if (py::isinstance<Poly>(obj)) return obj.cast<Poly>();
    if (py::isinstance<py::str>(obj)) return parse_poly(obj.cast<std::string>());
    if (py::isinstance<py::int_>(obj)) return Poly::from_value(obj.cast<std::uint64_t>());
    throw py::type_error("expected Poly, str or int");
}

py::object degree_obj(const Degree& d) {
    if (d.is_neg_inf()) return py::none();
    return py::int_(d.value());
}

py::dict result_dict(const UnitGroupResult& r) {
    py::dict out;
    out["verdict"] = to_string(r.verdict);
    out["provenance"] = r.provenance;
    out["reduced_g"] = format_poly(r.reduced.g);
    out["reduced_h"] = format_poly(r.reduced.h);
    out["reduced_type"] = to_string(r.reduced_type);
    out["shift"] = format_poly(r.shift);
    if (r.unit) {
        out["a"] = format_poly(r.unit->a);
        out["b"] = format_poly(r.unit->b);
    }
    if (r.verdict == Verdict::Unknown) out["max_deg_b_searched"] = r.max_deg_b_searched;
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact unit-group computations for F2[x,y]/(y^2 + gy + h)";

    py::class_<Poly>(m, "Poly")
        .def(py::init([](const py::object& o) { return to_poly(o); }), py::arg("value"))
        .def_static("monomial", [](std::size_t k) { return Poly::monomial(k); })
        .def_property_readonly("degree", [](const Poly& p) { return degree_obj(p.degree()); })
        .def("is_zero", &Poly::is_zero)
        .def("is_one", &Poly::is_one)
        .def("__add__", [](const Poly& a, const py::object& b) { return a + to_poly(b); })
        .def("__mul__", [](const Poly& a, const py::object& b) { return a * to_poly(b); })
        .def("__divmod__",
             [](const Poly& a, const py::object& b) {
                 const auto [q, r] = divrem(a, to_poly(b));
                 return py::make_tuple(q, r);
             })
        .def("__eq__", [](const Poly& a, const py::object& b) { return a == to_poly(b); })
        .def("__hash__", [](const Poly& p) { return py::hash(py::str(format_poly(p))); })
        .def("__str__", [](const Poly& p) { return format_poly(p); })
        .def("__repr__", [](const Poly& p) { return "Poly('" + format_poly(p) + "')"; });

    m.def("parse_poly", [](const std::string& s) { return parse_poly(s); });
    m.def("format_poly", [](const py::object& p) { return format_poly(to_poly(p)); });
    m.def("gcd", [](const py::object& a, const py::object& b) { return gcd(to_poly(a), to_poly(b)); });
    m.def("sqrt_exact", [](const py::object& p) -> py::object {
        const auto r = sqrt_exact(to_poly(p));
        return r ? py::cast(*r) : py::none();
    });
    m.def("derivative", [](const py::object& p) { return derivative(to_poly(p)); });
    m.def("subst_x_plus1", [](const py::object& p) { return subst_x_plus1(to_poly(p)); });
    m.def("factor", [](const py::object& p) {
        py::list out;
        for (const auto& [q, e] : factor(to_poly(p)).factors) out.append(py::make_tuple(q, e));
        return out;
    });
    m.def("is_irreducible", [](const py::object& p) { return is_irreducible(to_poly(p)); });
    m.def("squarefree_divisors_proper",
          [](const py::object& g) { return squarefree_divisors_proper(to_poly(g)); });
    m.def("squarefree_decompose", [](const py::object& p) {
        const Poly q = to_poly(p);
        const auto d = squarefree_decompose(q, factor(q));
        return py::make_tuple(d.squarefree_part, d.square_root_part);
    });
    m.def("valuation",
          [](const py::object& p, const py::object& q) { return valuation(to_poly(p), to_poly(q)); });

    m.def("apply_shift", [](const py::object& g, const py::object& h, const py::object& f) {
        const ParamPair r = apply_shift({to_poly(g), to_poly(h)}, to_poly(f));
        return py::make_tuple(r.g, r.h);
    });
    m.def("classify_type", [](const py::object& g, const py::object& h) {
        return std::string(to_string(classify_type({to_poly(g), to_poly(h)})));
    });
    m.def("minimal_representative", [](const py::object& g, const py::object& h) {
        const MinimalRep r = minimal_representative({to_poly(g), to_poly(h)});
        py::dict out;
        out["g"] = r.pair.g;
        out["h"] = r.pair.h;
        out["type"] = to_string(r.type);
        out["shift"] = r.shift;
        return out;
    });
    m.def("solve_artin_schreier", [](const py::object& h) -> py::object {
        const ArtinSchreier r = solve_artin_schreier(to_poly(h));
        if (r.kind == ArtinSchreier::Kind::NoSolution) return py::none();
        return py::make_tuple(r.kind == ArtinSchreier::Kind::Zero ? 0 : 1, r.f);
    });

    m.def(
        "verify_unit",
        [](const py::object& g, const py::object& h, const py::object& a, const py::object& b) {
            return verify_unit({to_poly(a), to_poly(b), {to_poly(g), to_poly(h)}});
        },
        py::arg("g"), py::arg("h"), py::arg("a"), py::arg("b"));
    m.def("inverse_unit",
          [](const py::object& g, const py::object& h, const py::object& a, const py::object& b) {
              const RingElem r = inverse_unit({to_poly(a), to_poly(b), {to_poly(g), to_poly(h)}});
              return py::make_tuple(r.a, r.b);
          });
    m.def("mul_ring", [](const py::object& g, const py::object& h, const py::object& a1,
                         const py::object& b1, const py::object& a2, const py::object& b2) {
        const ParamPair amb{to_poly(g), to_poly(h)};
        const RingElem r = mul_ring({to_poly(a1), to_poly(b1), amb}, {to_poly(a2), to_poly(b2), amb});
        return py::make_tuple(r.a, r.b);
    });

    m.def(
        "unit_group",
        [](const py::object& g, const py::object& h, int max_deg_b, bool prune, int workers) {
            SearchBudget budget;
            budget.max_deg_b = max_deg_b;
            SearchOptions opts;
            opts.prune = prune;
            opts.workers = workers;
            return result_dict(unit_group({to_poly(g), to_poly(h)}, budget, opts));
        },
        py::arg("g"), py::arg("h"), py::arg("max_deg_b") = 64, py::arg("prune") = true,
        py::arg("workers") = 0);

    m.def(
        "brute_force_oracle",
        [](const py::object& g, const py::object& h, int max_deg_b) {
            py::list out;
            for (const RingElem& u : brute_force_oracle({to_poly(g), to_poly(h)}, max_deg_b))
                out.append(py::make_tuple(u.a, u.b));
            return out;
        },
        py::arg("g"), py::arg("h"), py::arg("max_deg_b"));

    m.def(
        "sweep_conjecture",
        [](int deg_g, int max_deg_b, int workers) {
            SearchBudget budget;
            budget.max_deg_b = max_deg_b;
            SearchOptions opts;
            opts.workers = workers;
            const SweepReport rep = sweep_conjecture(deg_g, budget, opts);
            py::dict out;
            out["deg_g"] = rep.deg_g;
            out["pairs_total"] = rep.pairs_total;
            out["pairs_resolved"] = rep.pairs_resolved;
            out["max_deg_b"] = rep.max_deg_b;
            py::list achievers;
            for (const auto& p : rep.achievers) achievers.append(py::make_tuple(p.g, p.h));
            out["achievers"] = achievers;
            py::list unknown;
            for (const auto& p : rep.pairs_unknown) unknown.append(py::make_tuple(p.g, p.h));
            out["pairs_unknown"] = unknown;
            return out;
        },
        py::arg("deg_g"), py::arg("max_deg_b") = 64, py::arg("workers") = 0);

    m.def(
        "family_xm",
        [](int m_max, int max_deg_b) {
            SearchBudget budget;
            budget.max_deg_b = max_deg_b;
            py::list out;
            for (const FamilyEntry& e : family_xm(m_max, budget)) {
                py::dict d;
                d["m"] = e.m;
                d["deg_b"] = e.deg_b;
                d["nu_x_b"] = e.nu_x_b;
                if (e.unit) {
                    d["a"] = format_poly(e.unit->a);
                    d["b"] = format_poly(e.unit->b);
                }
                out.append(d);
            }
            return out;
        },
        py::arg("m_max"), py::arg("max_deg_b") = 64);

#ifdef VERSION_INFO
    m.attr("__version__") = VERSION_INFO;
#else
    m.attr("__version__") = "dev";
#endif
}
