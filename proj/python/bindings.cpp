#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "fano/equivalence.hpp"
#include "fano/growth.hpp"
#include "fano/minimal_catalog.hpp"
#include "fano/polytope.hpp"
#include "fano/report.hpp"
#include "fano/verify.hpp"
#include "fano/weights.hpp"

namespace py = pybind11;
using namespace fano;

namespace {

using Triple = std::array<Int, 3>;

LatticeVector to_vec(const Triple& t) { return {t[0], t[1], t[2]}; }
Triple to_triple(const LatticeVector& v) { return {v.x, v.y, v.z}; }

std::vector<Triple> triples(const std::vector<LatticeVector>& vs) {
  std::vector<Triple> out;
  out.reserve(vs.size());
  for (const auto& v : vs) out.push_back(to_triple(v));
  return out;
}

Polytope hull_of(const std::vector<Triple>& pts) {
  std::vector<LatticeVector> vs;
  vs.reserve(pts.size());
  for (const auto& t : pts) vs.push_back(to_vec(t));
  return Polytope::hull(vs);
}

std::vector<std::array<Int, 3>> matrix_rows(const Matrix3& m) {
  return {std::array<Int, 3>{m(0, 0), m(0, 1), m(0, 2)}, {m(1, 0), m(1, 1), m(1, 2)},
          {m(2, 0), m(2, 1), m(2, 2)}};
}

VerifyScope scope_of(const std::string& s) {
  if (s == "all") return VerifyScope::all;
  if (s == "weights") return VerifyScope::weights;
  if (s == "tetrahedra") return VerifyScope::tetrahedra;
  if (s == "minimal") return VerifyScope::minimal;
  if (s == "classification") return VerifyScope::classification;
  throw std::invalid_argument("unknown scope: " + s);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact classification of Fano polytopes in Z^3";

  py::register_exception<OverflowError>(m, "OverflowError", PyExc_OverflowError);
  py::register_exception<DegenerateInput>(m, "DegenerateInput", PyExc_ValueError);
  py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_RuntimeError);

  py::class_<Polytope>(m, "Polytope")
      .def(py::init(&hull_of), py::arg("points"), "Convex hull of integer points in Z^3.")
      .def_property_readonly("vertices", [](const Polytope& p) { return triples(p.vertices()); })
      .def_property_readonly("facets",
                             [](const Polytope& p) {
                               py::list out;
                               for (const auto& f : p.facets())
                                 out.append(py::make_tuple(to_triple(f.normal), f.level, f.vertices));
                               return out;
                             })
      .def("__len__", &Polytope::vertex_count)
      .def("contains", [](const Polytope& p, const Triple& v) { return p.contains(to_vec(v)); })
      .def(py::self == py::self)
      .def("__repr__", [](const Polytope& p) {
        std::ostringstream os;
        os << "Polytope(" << p << ")";
        return os.str();
      });

  m.def("lattice_points", [](const Polytope& p) { return triples(lattice_points(p)); });
  m.def("is_fano", &is_fano);
  m.def("is_simplicial", &is_simplicial);
  m.def("is_smooth", &is_smooth);
  m.def("is_minimal", &is_minimal);
  m.def("is_maximal", &is_maximal);
  m.def("normalized_volume", &normalized_volume);
  m.def(
      "barycentric_of_origin",
      [](const std::array<Triple, 4>& t) -> std::optional<std::array<Int, 4>> {
        const auto w = barycentric_of_origin({to_vec(t[0]), to_vec(t[1]), to_vec(t[2]), to_vec(t[3])});
        if (!w) return std::nullopt;
        return w->lambdas();
      },
      "Sorted coprime weights of the origin in a tetrahedron, or None if it is not interior.");

  m.def(
      "are_equivalent",
      [](const Polytope& p, const Polytope& q) -> std::optional<std::vector<std::array<Int, 3>>> {
        const auto u = are_equivalent(p, q);
        if (!u) return std::nullopt;
        return matrix_rows(u->matrix());
      },
      "A unimodular matrix (rows) mapping p onto q, or None.");
  m.def("canonical_form", &canonical_form);
  m.def("children", &children);

  m.def("search_h_bound", &search_h_bound);
  m.def("enumerate_weight_systems", [] {
    std::vector<std::array<Int, 4>> out;
    for (const auto& w : enumerate_weight_systems()) out.push_back(w.lambdas());
    return out;
  });
  m.def("fractional_sum",
        [](const std::array<Int, 4>& l, Int kappa) { return fractional_sum(WeightSystem(l), kappa); });
  m.def("enumerate_fano_tetrahedra", [] { return enumerate_fano_tetrahedra(); });
  m.def("enumerate_minimal_polytopes", &enumerate_minimal_polytopes);

  m.def(
      "classify",
      [](unsigned jobs, const std::string& format) {
        std::vector<ClassificationRecord> records;
        {
          py::gil_scoped_release release;
          GrowthOptions g;
          g.jobs = jobs;
          records = classify_all(g);
        }
        if (format == "json") return serialize(records, OutputFormat::json);
        if (format == "tsv") return serialize(records, OutputFormat::tsv);
        if (format == "text") return serialize(records, OutputFormat::text);
        throw std::invalid_argument("format must be json, tsv or text");
      },
      py::arg("jobs") = 1, py::arg("format") = "json",
      "Run the full classification and return it serialized.");

  m.def(
      "stats",
      [](unsigned jobs) {
        py::gil_scoped_release release;
        GrowthOptions g;
        g.jobs = jobs;
        return format_stats(summarize(classify_all(g), enumerate_weight_systems(), search_h_bound()));
      },
      py::arg("jobs") = 1);

  m.def(
      "verify",
      [](const std::string& only, bool oracle, Int box, bool perturb) {
        VerifyOptions v;
        v.scope = scope_of(only);
        v.oracle = oracle;
        v.box = box;
        if (perturb) v.expected = perturbed(v.expected);
        std::vector<CheckResult> checks;
        {
          py::gil_scoped_release release;
          checks = run_verification(v);
        }
        py::list out;
        for (const auto& c : checks) {
          py::dict d;
          d["check"] = c.name;
          d["passed"] = c.passed;
          d["expected"] = c.expected;
          d["actual"] = c.actual;
          out.append(d);
        }
        return out;
      },
      py::arg("only") = "all", py::arg("oracle") = false, py::arg("box") = 7, py::arg("perturb") = false);
}
