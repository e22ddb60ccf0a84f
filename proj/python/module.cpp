#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include "fpure/ceil_arith.hpp"
#include "fpure/closure.hpp"
#include "fpure/errors.hpp"
#include "fpure/fpt.hpp"
#include "fpure/parser.hpp"
#include "fpure/purity.hpp"
#include "fpure/test_ideal.hpp"

namespace py = pybind11;
using namespace fpure;

namespace {

// Exponents cross the boundary as fractions.Fraction; anything whose str()
// parses as a rational ("5/6", 2, Fraction(1, 2)) is accepted.
ExactRational to_rational(const py::handle& t) { return parse_rational(std::string(py::str(t)), false); }

py::object to_fraction(const ExactRational& r) {
  return py::module_::import("fractions").attr("Fraction")(r.to_string());
}

Ideal ideal_arg(const RingPtr& ring, const py::handle& gens) {
  if (py::isinstance<Ideal>(gens)) return gens.cast<Ideal>();
  return Ideal(ring, parse_poly_list(std::string(py::str(gens)), ring));
}

SparsePolynomial poly_arg(const RingPtr& ring, const py::handle& f) {
  if (py::isinstance<SparsePolynomial>(f)) return f.cast<SparsePolynomial>();
  return parse_poly(std::string(py::str(f)), ring);
}

py::dict verdict_dict(const PurityVerdict& v) {
  py::dict d;
  d["criterion"] = criterion_name(v.criterion);
  d["outcome"] = outcome_name(v.outcome);
  d["explanation"] = v.explanation;
  py::list trace;
  for (const auto& s : v.trace) {
    py::dict step;
    step["e"] = s.e;
    step["q"] = s.q;
    step["N"] = py::int_(py::str(s.N.str()));
    step["holds"] = s.holds;
    step["reason"] = s.reason;
    trace.append(step);
  }
  d["trace"] = trace;
  if (v.witness) {
    py::dict w;
    w["e"] = v.witness->e;
    w["q"] = v.witness->q;
    w["a_exponents"] = v.witness->a_exponents;
    w["a_factor"] = v.witness->a_factor;
    w["colon_factor"] = v.witness->colon_factor;
    d["witness"] = w;
  } else {
    d["witness"] = py::none();
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "F-purity, F-pure thresholds and test ideals over F_p";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<UnsupportedError>(m, "UnsupportedError", base);
  py::register_exception<ResourceCapError>(m, "ResourceCapError", base);

  py::class_<Ring, std::shared_ptr<Ring>>(m, "Ring")
      .def(py::init([](const std::string& text) { return std::const_pointer_cast<Ring>(parse_ring(text)); }))
      .def_property_readonly("characteristic", &Ring::characteristic)
      .def_property_readonly("variables", &Ring::variables)
      .def("poly", [](const std::shared_ptr<Ring>& r, const std::string& text) { return parse_poly(text, r); })
      .def("ideal",
           [](const std::shared_ptr<Ring>& r, const std::string& text) {
             return Ideal(r, parse_poly_list(text, r));
           })
      .def("__str__", &Ring::to_string)
      .def("__repr__", [](const Ring& r) { return "Ring(\"" + r.to_string() + "\")"; });

  py::class_<SparsePolynomial>(m, "Polynomial")
      .def("__str__", &SparsePolynomial::to_string)
      .def("__repr__", [](const SparsePolynomial& f) { return "Polynomial(" + f.to_string() + ")"; })
      .def("is_zero", &SparsePolynomial::is_zero)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("__pow__", [](const SparsePolynomial& f, std::uint64_t k) { return poly_pow(f, k); });

  py::class_<Ideal>(m, "Ideal")
      .def_property_readonly("generators", &Ideal::generators)
      .def("is_monomial", &Ideal::is_monomial)
      .def("is_zero", &Ideal::is_zero)
      .def("is_unit", &Ideal::is_unit)
      .def("contains", [](const Ideal& I, const SparsePolynomial& g) { return membership(g, I); })
      .def("contains", [](const Ideal& I, const Ideal& J) { return ideal_contains(I, J); })
      .def("__eq__", [](const Ideal& a, const Ideal& b) { return ideal_equal(a, b); })
      .def("__str__", &Ideal::to_string)
      .def("__repr__", [](const Ideal& I) { return "Ideal" + I.to_string(); });

  m.def("bracket_power", &bracket_power, py::arg("ideal"), py::arg("q"));
  m.def("root_power", &root_power, py::arg("ideal"), py::arg("q"));
  m.def("colon", [](const Ideal& J, const Ideal& I) { return colon(J, I); }, py::arg("J"), py::arg("I"));

  m.def(
      "sharp_fedder",
      [](const Ideal& a, const py::object& t, unsigned e_max, const py::object& ideal) {
        auto pair = PairSpec::make(ideal_arg(a.ring(), ideal), a, to_rational(t));
        return verdict_dict(sharp_fedder(pair, e_max));
      },
      py::arg("a"), py::arg("t"), py::arg("e_max") = 3, py::arg("ideal") = "0");
  m.def(
      "strong_fedder",
      [](const Ideal& a, const py::object& t, unsigned e_max, const py::object& ideal) {
        auto pair = PairSpec::make(ideal_arg(a.ring(), ideal), a, to_rational(t));
        return verdict_dict(strong_fedder(pair, e_max));
      },
      py::arg("a"), py::arg("t"), py::arg("e_max") = 3, py::arg("ideal") = "0");
  m.def(
      "fedder",
      [](const Ideal& ideal, unsigned e_max) {
        std::vector<unsigned> es;
        for (unsigned e = 1; e <= e_max; ++e) es.push_back(e);
        auto pair = PairSpec::make(ideal, Ideal::unit(ideal.ring()), ExactRational(1));
        return verdict_dict(classic_fpure(pair, es));
      },
      py::arg("ideal"), py::arg("e_max") = 3);

  m.def("nu", &nu_value, py::arg("a"), py::arg("q"));
  m.def(
      "fpt_bounds",
      [](const Ideal& a, unsigned e) {
        auto r = fpt_bounds(a, e);
        return py::make_tuple(r.nu, to_fraction(r.lo), to_fraction(r.hi));
      },
      py::arg("a"), py::arg("e"));
  m.def(
      "fpt",
      [](const Ideal& a, unsigned e_max) {
        auto est = fpt_estimate(a, e_max);
        py::dict d;
        d["interval"] = py::make_tuple(to_fraction(est.lo), to_fraction(est.hi));
        d["status"] = status_name(est.status);
        py::list nus;
        for (const auto& r : est.nu_table) nus.append(r.nu);
        d["nu"] = nus;
        if (est.certificate) {
          d["certificate"] = py::make_tuple(to_fraction(est.certificate->t), est.certificate->e,
                                            certificate_name(est.certificate->kind));
        } else {
          d["certificate"] = py::none();
        }
        d["explanation"] = est.explanation;
        return d;
      },
      py::arg("a"), py::arg("e_max") = 3);

  m.def(
      "test_ideal",
      [](const Ideal& a, const py::object& t, std::optional<unsigned> e_floor, unsigned e_cap) {
        auto r = test_ideal(a, to_rational(t), e_floor, e_cap);
        py::dict d;
        d["tau"] = r.tau;
        d["stabilized_at"] = r.stabilized_at;
        d["chain"] = r.chain;
        return d;
      },
      py::arg("a"), py::arg("t"), py::arg("e_floor") = py::none(), py::arg("e_cap") = kDefaultTestIdealCap);

  m.def(
      "closure",
      [](const py::object& z, const Ideal& I, const Ideal& a, const py::object& t, const py::object& defining) {
        auto pair = PairSpec::make(ideal_arg(I.ring(), defining), a, to_rational(t));
        auto v = sharp_frobenius_membership(poly_arg(I.ring(), z), I, pair);
        py::dict d;
        d["outcome"] = closure_outcome_name(v.outcome);
        d["certified_e"] = v.certified_e;
        d["failed"] = v.failed;
        d["explanation"] = v.explanation;
        return d;
      },
      py::arg("z"), py::arg("I"), py::arg("a"), py::arg("t"), py::arg("defining") = "0");

  m.def(
      "lemma_audit",
      [](std::uint32_t p, unsigned e_max, unsigned d_max, unsigned t_bound, unsigned n_max) {
        auto r = audit_inequalities(p, e_max, d_max, rational_grid(t_bound), n_max);
        py::dict d;
        d["checked"] = r.total_checked();
        d["violations"] = r.violations.size();
        return d;
      },
      py::arg("p"), py::arg("e_max") = 5, py::arg("d_max") = 5, py::arg("t_bound") = 12, py::arg("n_max") = 4);
}
