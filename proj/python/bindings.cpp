#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <vector>

#include "torelli/certificate.hpp"
#include "torelli/cli.hpp"
#include "torelli/errors.hpp"
#include "torelli/families.hpp"
#include "torelli/group_ring.hpp"
#include "torelli/int_matrix.hpp"
#include "torelli/json_io.hpp"
#include "torelli/legendrian.hpp"
#include "torelli/presentation.hpp"
#include "torelli/smith.hpp"
#include "torelli/variation.hpp"

namespace py = pybind11;
using namespace torelli;

// Python int <-> mpz_class through decimal strings, and nested lists <-> IntMatrix.
namespace pybind11::detail {

template <>
struct type_caster<Integer> {
  PYBIND11_TYPE_CASTER(Integer, const_name("int"));

  bool load(handle src, bool) {
    if (!src || !PyLong_Check(src.ptr())) return false;
    value = Integer(py::str(src).cast<std::string>());
    return true;
  }

  static handle cast(const Integer& x, return_value_policy, handle) {
    return PyLong_FromString(x.get_str().c_str(), nullptr, 10);
  }
};

template <>
struct type_caster<IntMatrix> {
  PYBIND11_TYPE_CASTER(IntMatrix, const_name("list[list[int]]"));

  bool load(handle src, bool convert) {
    make_caster<std::vector<IntVector>> rows;
    if (!rows.load(src, convert)) return false;
    const auto& r = cast_op<const std::vector<IntVector>&>(rows);
    value = IntMatrix::from_rows(r);
    return true;
  }

  static handle cast(const IntMatrix& m, return_value_policy policy, handle parent) {
    std::vector<IntVector> rows;
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
    return make_caster<std::vector<IntVector>>::cast(rows, policy, parent);
  }
};

}  // namespace pybind11::detail

namespace {

py::dict smith_dict(const SmithDecomposition& s) {
  py::dict d;
  d["rank"] = s.rank;
  d["diagonal"] = s.diagonal();
  d["S"] = s.S;
  d["U"] = s.U;
  d["V"] = s.V;
  d["U_inv"] = s.U_inv;
  d["V_inv"] = s.V_inv;
  return d;
}

py::tuple exponent_tuple(const Exponent& e) {
  py::tuple t(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) t[i] = e[i];
  return t;
}

std::string certificate_document(const Certificate& c) {
  return io::dump(io::document("certificate", io::certificate_to_json(c)));
}

py::dict group_dict(const FGAbelianGroup& g) {
  py::dict d;
  d["free_rank"] = g.free_rank();
  d["torsion"] = g.torsion();
  d["description"] = g.describe();
  return d;
}

std::vector<FrontEvent> parse_events(const std::vector<std::string>& tokens) {
  std::vector<FrontEvent> out;
  for (const auto& t : tokens) out.push_back(parse_event(t));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Torelli-group computations for 4-manifolds with boundary";

  auto error = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<InvalidInput>(m, "InvalidInput", error);
  py::register_exception<DimensionMismatch>(m, "DimensionMismatch", error);
  py::register_exception<NonPrimitive>(m, "NonPrimitive", error);
  py::register_exception<NotUnimodular>(m, "NotUnimodular", error);
  py::register_exception<NonUnimodularDuality>(m, "NonUnimodularDuality", error);
  py::register_exception<NotPoincare>(m, "NotPoincare", error);
  py::register_exception<NotTorelli>(m, "NotTorelli", error);
  py::register_exception<InjectivityUnverified>(m, "InjectivityUnverified", error);
  py::register_exception<MalformedFront>(m, "MalformedFront", error);
  py::register_exception<GeneratorMismatch>(m, "GeneratorMismatch", error);
  py::register_exception<UnknownGenerator>(m, "UnknownGenerator", error);
  py::register_exception<InconsistentProfile>(m, "InconsistentProfile", error);

  // exact linear algebra
  m.def("smith_normal_form", [](const IntMatrix& a) { return smith_dict(smith_normal_form(a)); }, py::arg("matrix"));
  m.def("cokernel", [](const IntMatrix& a) { return group_dict(cokernel(a)); }, py::arg("matrix"));
  m.def("kernel_basis", &kernel_basis, py::arg("matrix"));
  m.def("complete_to_basis", &complete_to_basis, py::arg("v"));
  m.def("determinant", &determinant, py::arg("matrix"));

  // presentations
  py::class_<LinkTrace>(m, "LinkTrace")
      .def(py::init<IntMatrix, std::vector<std::string>>(), py::arg("linking"),
           py::arg("labels") = std::vector<std::string>{})
      .def_property_readonly("components", &LinkTrace::components)
      .def_property_readonly("linking", &LinkTrace::linking)
      .def_property_readonly("framings", &LinkTrace::framings)
      .def_property_readonly("labels", &LinkTrace::labels)
      .def(py::self == py::self)
      .def("__repr__", [](const LinkTrace& t) { return "LinkTrace(" + to_string(t.linking()) + ")"; });

  m.def("intersection_form", &intersection_form, py::arg("trace"));
  m.def(
      "boundary_homology",
      [](const LinkTrace& t) {
        const BoundaryData bd = boundary_homology(t);
        py::dict d;
        d["h1"] = group_dict(bd.h1);
        d["b1"] = bd.b1();
        d["kernel"] = bd.kernel;
        d["duality"] = bd.duality;
        return d;
      },
      py::arg("trace"));
  m.def("stabilize_trace", py::overload_cast<const LinkTrace&, std::size_t>(&stabilize), py::arg("trace"),
        py::arg("m"));

  // variation algebra
  py::class_<Variation>(m, "Variation")
      .def(py::init<LinkTrace, IntMatrix>(), py::arg("trace"), py::arg("matrix"))
      .def_static("identity", &Variation::identity, py::arg("trace"))
      .def_property_readonly("trace", &Variation::trace)
      .def_property_readonly("matrix", &Variation::matrix)
      .def(py::self == py::self)
      .def("__repr__", [](const Variation& v) { return "Variation(" + to_string(v.matrix()) + ")"; });

  py::class_<SkewForm>(m, "SkewForm")
      .def(py::init<IntMatrix>(), py::arg("matrix"))
      .def_property_readonly("matrix", &SkewForm::matrix)
      .def(py::self == py::self)
      .def("__repr__", [](const SkewForm& s) { return "SkewForm(" + to_string(s.matrix()) + ")"; });

  m.def("is_poincare", &is_poincare, py::arg("variation"));
  m.def("compose", &compose, py::arg("a"), py::arg("b"));
  m.def("inverse", &inverse, py::arg("variation"));
  m.def("induced_automorphism", &induced_automorphism, py::arg("variation"));
  m.def("is_torelli", &is_torelli, py::arg("variation"));
  m.def("variation_from_skew", &variation_from_skew, py::arg("eta"), py::arg("trace"));
  m.def("skew_from_variation", &skew_from_variation, py::arg("variation"));
  m.def("stabilize", py::overload_cast<const Variation&, std::size_t>(&stabilize), py::arg("variation"),
        py::arg("m"));
  m.def("torelli_rank", &torelli_rank, py::arg("trace"));

  // Legendrian fronts
  py::class_<FrontDiagram>(m, "FrontDiagram")
      .def(py::init([](const std::vector<std::string>& events, std::vector<int> orientations) {
             return FrontDiagram(parse_events(events), std::move(orientations));
           }),
           py::arg("events"), py::arg("orientations") = std::vector<int>{})
      .def_static("from_text", &front_from_text, py::arg("text"))
      .def("to_text", [](const FrontDiagram& f) { return front_to_text(f); })
      .def_property_readonly("events",
                             [](const FrontDiagram& f) {
                               std::vector<std::string> out;
                               for (const auto& e : f.events()) out.push_back(to_string(e));
                               return out;
                             })
      .def_property_readonly("orientations", &FrontDiagram::orientations)
      .def_property_readonly("component_count", &FrontDiagram::component_count)
      .def("with_orientation", &FrontDiagram::with_orientation, py::arg("component"), py::arg("sign"));

  m.def(
      "classical_invariants",
      [](const FrontDiagram& f, std::size_t component) {
        const ClassicalInvariants c = classical_invariants(f, component);
        py::dict d;
        d["tb"] = c.tb;
        d["rot"] = c.rot;
        d["writhe"] = c.writhe;
        d["right_cusps"] = c.right_cusps;
        d["crossings"] = c.crossings;
        return d;
      },
      py::arg("front"), py::arg("component") = 0);
  m.def("linking_number", &linking_number, py::arg("front"), py::arg("a"), py::arg("b"));
  m.def("stein_trace", &stein_trace, py::arg("front"));
  m.def("chern_class", &chern_class, py::arg("front"));
  m.def(
      "nontorsion_test",
      [](const IntVector& c1, const LinkTrace& t) -> py::object {
        const auto r = nontorsion_test(c1, t);
        if (!r) return py::none();
        return py::make_tuple(r->d, r->v1);
      },
      py::arg("c1"), py::arg("trace"));
  m.def(
      "distinguish_boundaries",
      [](unsigned r, unsigned mm) {
        const BoundaryDistinction b = distinguish_boundaries(r, mm);
        py::dict d;
        d["r"] = b.r;
        d["m"] = b.m;
        d["n_r"] = b.n_r;
        d["n_m"] = b.n_m;
        d["upper"] = b.upper;
        d["lower"] = b.lower;
        d["distinct"] = b.distinct;
        d["summary"] = b.summary();
        return d;
      },
      py::arg("r"), py::arg("m"));

  // families
  m.def("xn_front", &xn_front, py::arg("n"));
  m.def("xn_trace", [](unsigned n) { return xn_family(n).trace; }, py::arg("n"));
  m.def("z_trace", [] { return z_fixture().trace; });

  // group rings
  py::class_<GroupRingElement>(m, "GroupRingElement")
      .def(py::init<std::vector<std::string>>(), py::arg("generators"))
      .def_static("one", &GroupRingElement::one, py::arg("generators"))
      .def_static("monomial", &GroupRingElement::monomial, py::arg("generators"), py::arg("exponent"),
                  py::arg("coefficient") = Integer(1))
      .def_property_readonly("generators", &GroupRingElement::generators)
      .def_property_readonly("terms",
                             [](const GroupRingElement& x) {
                               py::dict d;
                               for (const auto& [e, c] : x.terms()) d[exponent_tuple(e)] = c;
                               return d;
                             })
      .def("coefficient", &GroupRingElement::coefficient, py::arg("exponent"))
      .def("conjugate", &GroupRingElement::conjugate)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self == py::self)
      .def("__str__", [](const GroupRingElement& x) { return to_string(x); })
      .def("__repr__", [](const GroupRingElement& x) { return "GroupRingElement(" + to_string(x) + ")"; });

  m.def("knot_surgery_family_sw", &knot_surgery_family_sw, py::arg("n"));
  m.def(
      "basic_classes",
      [](const GroupRingElement& sw) {
        py::list out;
        for (const auto& e : basic_classes(sw)) out.append(exponent_tuple(e));
        return out;
      },
      py::arg("sw"));
  m.def(
      "pairwise_distinct", [](const std::vector<GroupRingElement>& f) { return pairwise_distinct(f).equal_pairs; },
      py::arg("family"));

  // certificates
  m.def(
      "certify_json",
      [](const std::string& text) {
        const io::Json j = io::parse(text);
        io::check_schema(j);
        return certificate_document(certify(io::certificate_input_from_json(j)));
      },
      py::arg("input"));
  m.def(
      "stein_certify_json", [](const FrontDiagram& f) { return certificate_document(stein_certify(f)); },
      py::arg("front"));
  m.def(
      "dehn_twist_realizability",
      [](std::int64_t b1, bool is_prime, bool is_T3, bool seifert_over_T2) {
        return to_string(dehn_twist_realizability({b1, is_prime, is_T3, seifert_over_T2}));
      },
      py::arg("b1"), py::arg("is_prime") = true, py::arg("is_T3") = false, py::arg("seifert_over_T2") = false);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args, const std::string& stdin_text) {
        std::istringstream in(stdin_text);
        std::ostringstream out;
        std::ostringstream err;
        const int code = run_cli(args, in, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), py::arg("stdin") = std::string{});
}
