#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "diffops/cli.hpp"
#include "diffops/errors.hpp"
#include "diffops/groebner.hpp"
#include "diffops/jacobian.hpp"
#include "diffops/parse.hpp"
#include "diffops/semigroup.hpp"

namespace py = pybind11;
using namespace diffops;

namespace {

std::vector<std::string> strings(const std::vector<MultiPoly>& ps, const MonomialOrder& order) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string(order));
  return out;
}

MonomialOrder order_named(const std::string& name, std::size_t n) {
  if (name == "grevlex") return MonomialOrder::grevlex(n);
  if (name == "lex") return MonomialOrder::lex(n);
  throw InputError("unknown order '" + name + "'");
}

py::dict jacobian_report(const std::vector<std::string>& vars, const std::string& ideal,
                         std::uint32_t characteristic) {
  const RingPtr ring = make_ring(vars, characteristic);
  const AffinePresentation pres(ring, parse_poly_list(ideal, ring));
  const JacobiData data = rank_and_minors(pres);
  const auto order = MonomialOrder::grevlex(vars.size());
  py::list matrix;
  for (const auto& row : data.matrix) matrix.append(strings(row, order));
  py::list minors;
  for (const auto& m : data.minors) minors.append(py::make_tuple(m.rows, m.cols, m.value.to_string()));
  py::dict d;
  d["matrix"] = matrix;
  d["rank"] = data.rank;
  d["codimension"] = data.codimension;
  d["minors"] = minors;
  d["jacobian_ideal"] = strings(jacobian_ideal(pres), order);
  d["regular"] = is_regular(pres, data);
  d["minor_support_check"] = check_minor_support(data);
  d["warnings"] = data.warnings;
  return d;
}

py::dict stability(const std::vector<std::int64_t>& gens, const std::vector<std::int64_t>& ideal,
                   const std::string& kind) {
  const NumericalSemigroup s(gens);
  const SIdeal e(s, ideal);
  StabilityVerdict v;
  if (kind == "der") {
    v = is_der_stable(s, e);
  } else if (kind == "dop") {
    v = is_dop_stable(s, e);
  } else {
    throw InputError("kind must be der or dop");
  }
  py::dict d;
  d["stable"] = v.stable;
  if (v.witness) {
    d["op_degree"] = v.witness->op_degree;
    d["exponent"] = v.witness->exponent;
    d["value"] = v.witness->value.get_str();
  }
  return d;
}

py::dict simplicity(const std::vector<std::int64_t>& gens, std::int64_t k_max,
                    std::optional<std::int64_t> shift_bound) {
  const NumericalSemigroup s(gens);
  const auto v = simplicity_verdict(s, k_max, shift_bound.value_or(default_shift_bound(s)));
  py::list certs;
  for (const auto& c : v.certificates) {
    py::dict cd;
    cd["k"] = c.k;
    cd["power"] = c.power;
    cd["left"] = c.left.to_string();
    cd["right"] = c.right.to_string();
    cd["gcd"] = c.gcd.to_string();
    cd["roots_disjoint"] = c.roots_disjoint;
    certs.append(cd);
  }
  py::dict d;
  d["outcome"] = v.outcome == SimplicityOutcome::SimpleProven ? "SimpleProven" : "Inconclusive";
  d["jacobian_ideal"] = v.jacobian_ideal.generators();
  d["certificates"] = certs;
  return d;
}

py::tuple run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_diffops, m) {
  m.doc() = "Exact Groebner, Jacobian and graded differential-operator computations";

  auto input_error = py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", input_error.ptr());
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

  m.def(
      "groebner_basis",
      [](const std::vector<std::string>& vars, const std::string& ideal, std::uint32_t characteristic,
         const std::string& order, std::size_t max_pairs) {
        const RingPtr ring = make_ring(vars, characteristic);
        const auto ord = order_named(order, vars.size());
        GbBudget budget;
        budget.max_pairs = max_pairs;
        return strings(groebner_basis(ring, parse_poly_list(ideal, ring), ord, budget).basis(), ord);
      },
      py::arg("vars"), py::arg("ideal"), py::arg("characteristic") = 0, py::arg("order") = "grevlex",
      py::arg("max_pairs") = GbBudget{}.max_pairs);
  m.def(
      "normal_form",
      [](const std::vector<std::string>& vars, const std::string& ideal, const std::string& poly,
         std::uint32_t characteristic) {
        const RingPtr ring = make_ring(vars, characteristic);
        const auto gb = groebner_basis(ring, parse_poly_list(ideal, ring));
        return normal_form(parse_poly(poly, ring), gb).to_string();
      },
      py::arg("vars"), py::arg("ideal"), py::arg("poly"), py::arg("characteristic") = 0);
  m.def("jacobian", &jacobian_report, py::arg("vars"), py::arg("ideal"), py::arg("characteristic") = 0);

  py::class_<GradedOp>(m, "Op")
      .def(py::init([](const std::string& literal) { return parse_op(literal); }))
      .def("__mul__", [](const GradedOp& a, const GradedOp& b) { return op_mul(a, b); })
      .def("__add__", [](const GradedOp& a, const GradedOp& b) { return a + b; })
      .def("__sub__", [](const GradedOp& a, const GradedOp& b) { return a - b; })
      .def("__eq__", [](const GradedOp& a, const GradedOp& b) { return a == b; })
      .def("commutator", [](const GradedOp& a, const GradedOp& b) { return op_commutator(a, b); })
      .def("order", &op_order)
      .def("apply",
           [](const GradedOp& u, std::int64_t n) { return op_apply(u, LaurentPoly::monomial(n)).to_string(); })
      .def("__str__", &GradedOp::to_string)
      .def("__repr__", [](const GradedOp& u) { return "Op('" + u.to_string() + "')"; });

  m.def(
      "dop_generator",
      [](const std::vector<std::int64_t>& gens, std::int64_t i) {
        return dop_generator(NumericalSemigroup(gens), i);
      },
      py::arg("gens"), py::arg("degree"));
  m.def(
      "dop_membership",
      [](const std::vector<std::int64_t>& gens, const GradedOp& u) {
        return dop_membership(NumericalSemigroup(gens), u);
      },
      py::arg("gens"), py::arg("op"));
  m.def(
      "jacobian_ideal_monomial",
      [](const std::vector<std::int64_t>& gens) {
        return jacobian_ideal_monomial(NumericalSemigroup(gens)).generators();
      },
      py::arg("gens"));
  m.def("stability", &stability, py::arg("gens"), py::arg("ideal"), py::arg("kind"));
  m.def("simplicity_verdict", &simplicity, py::arg("gens"), py::arg("k_max") = 5,
        py::arg("shift_bound") = py::none());
  m.def("run_cli", &run, py::arg("args"), "Run one CLI invocation; returns (exit_code, stdout, stderr).");
}
