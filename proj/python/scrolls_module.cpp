#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "scrolls/classify.hpp"
#include "scrolls/crosscheck.hpp"
#include "scrolls/families.hpp"
#include "scrolls/invariants.hpp"
#include "scrolls/schubert.hpp"
#include "scrolls/tableau.hpp"

namespace py = pybind11;
using namespace scrolls;

namespace {

py::int_ to_py(const Int& value) {
  return py::reinterpret_steal<py::int_>(
      PyLong_FromString(value.str().c_str(), nullptr, 10));
}

py::dict base_dict(const IncidenceBase& base) {
  py::dict out;
  out["n"] = base.ambient();
  out["dims"] = base.dims();
  out["label"] = base.to_string();
  return out;
}

py::dict invariants_dict(const ScrollInvariants& inv) {
  py::dict out;
  out["degree"] = to_py(inv.degree);
  out["genus"] = to_py(inv.genus);
  if (inv.min_directrix_degree) out["directrix"] = to_py(*inv.min_directrix_degree);
  return out;
}

py::dict family_dict(const FamilyResult& res) {
  py::dict out;
  out["degree"] = to_py(res.invariants.degree);
  out["genus"] = to_py(res.invariants.genus);
  out["base"] = base_dict(res.base);
  out["partition_shape"] = res.partition_shape;
  out["consistent"] = res.consistent();
  py::list checks;
  for (const auto& check : res.checks) {
    py::dict c;
    c["name"] = check.name;
    c["lhs"] = check.lhs;
    c["rhs"] = check.rhs;
    c["pass"] = check.pass;
    checks.append(std::move(c));
  }
  out["checks"] = std::move(checks);
  return out;
}

}  // namespace

PYBIND11_MODULE(scrolls, m) {
  m.doc() = "Exact degree/genus engine for incidence scrolls (Schubert calculus core)";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ConsistencyFault>(m, "ConsistencyFault", PyExc_RuntimeError);

  m.def("intersection_number",
        [](const std::vector<int>& hs, int n) { return to_py(intersection_number(hs, n)); },
        py::arg("hs"), py::arg("n"),
        "Schubert point count of the special cycles w(h_i, n) in G(1, n)");

  m.def("schubert_product",
        [](const std::vector<int>& hs, int n) {
          py::dict out;
          for (const auto& [dims, coeff] : product_of_specials(hs, n).terms())
            out[py::tuple(py::cast(dims))] = to_py(coeff);
          return out;
        },
        py::arg("hs"), py::arg("n"),
        "Terms of the Pieri fold of the special classes, as {index: coefficient}");

  m.def("degree",
        [](int n, const std::vector<int>& dims) {
          return to_py(curve_class_degree(IncidenceBase(n, dims)));
        },
        py::arg("n"), py::arg("dims"), "Scroll degree through the Pieri fold");

  m.def("tableau_degree",
        [](int n, const std::vector<int>& dims) {
          return to_py(count_fillings(IncidenceBase(n, dims)));
        },
        py::arg("n"), py::arg("dims"), "Scroll degree by counting rectangle fillings");

  m.def("validate_base",
        [](int n, const std::vector<int>& dims) {
          auto rep = validate_base(IncidenceBase(n, dims));
          py::dict out;
          out["valid"] = rep.valid;
          out["lhs"] = rep.lhs;
          out["target"] = rep.target;
          out["hyperplanes"] = rep.hyperplanes;
          out["points"] = rep.points;
          return out;
        },
        py::arg("n"), py::arg("dims"));

  m.def("genus",
        [](int n, const std::vector<int>& dims) -> py::object {
          auto g = genus_for_base(IncidenceBase(n, dims));
          if (!g) return py::none();
          return to_py(*g);
        },
        py::arg("n"), py::arg("dims"),
        "Genus by the degeneration recursion; None when no recursion applies");

  m.def("catalog",
        [](int n) {
          py::list out;
          for (const auto& base : catalog(n)) out.append(base.dims());
          return out;
        },
        py::arg("n"));

  m.def("join_reduce",
        [](int n, const std::vector<int>& dims, int i, int j) {
          return base_dict(join_reduce(IncidenceBase(n, dims), i, j));
        },
        py::arg("n"), py::arg("dims"), py::arg("i"), py::arg("j"));

  m.def("elementary_transform",
        [](int n, const std::vector<int>& dims) {
          return base_dict(elementary_transform(IncidenceBase(n, dims)));
        },
        py::arg("n"), py::arg("dims"));

  m.def("fundamental_invariants",
        [](int n) { return invariants_dict(fundamental_invariants(n)); }, py::arg("n"));

  m.def("standard_family_invariants",
        [](int n, const std::vector<int>& i) {
          return invariants_dict(standard_family_invariants(StandardFamilyKey{n, i}));
        },
        py::arg("n"), py::arg("i"));

  m.def("partitions_of",
        [](long k) {
          py::list out;
          for (const auto& p : partitions_of(k)) out.append(p.parts());
          return out;
        },
        py::arg("k"));

  m.def("partition_count", [](long k) { return to_py(partition_count(k)); }, py::arg("k"));
  m.def("count_e0_scrolls", [](int r) { return to_py(count_e0_scrolls(r)); }, py::arg("r"));

  m.def("base_from_partition_e0",
        [](int r, const std::vector<int>& parts) {
          return base_dict(base_from_partition_e0(r, Partition(parts)));
        },
        py::arg("r"), py::arg("parts"));

  m.def("base_from_partition_enot0",
        [](int r, const std::vector<int>& parts) {
          return base_dict(base_from_partition_enot0(r, Partition(parts)));
        },
        py::arg("r"), py::arg("parts"));

  m.def("base_from_partition_ege1",
        [](int r, int e, int j, const std::vector<int>& parts) {
          return base_dict(base_from_partition_ege1(r, e, j, Partition(parts)));
        },
        py::arg("r"), py::arg("e"), py::arg("j"), py::arg("parts"));

  m.def("delta_e0",
        [](int r, const std::vector<int>& h) { return to_py(delta_e0(r, h)); }, py::arg("r"),
        py::arg("h"));
  m.def("delta_enot0",
        [](int r, const std::vector<int>& h) { return to_py(delta_enot0(r, h)); }, py::arg("r"),
        py::arg("h"));
  m.def("delta_ege1",
        [](int r, int e, int j, const std::vector<int>& h) {
          return to_py(delta_ege1(r, e, j, h));
        },
        py::arg("r"), py::arg("e"), py::arg("j"), py::arg("h"));

  m.def("invariants_e0",
        [](int r, const std::vector<int>& h) { return family_dict(invariants_e0(r, h)); },
        py::arg("r"), py::arg("h"));
  m.def("invariants_enot0",
        [](int r, const std::vector<int>& h) { return family_dict(invariants_enot0(r, h)); },
        py::arg("r"), py::arg("h"));
  m.def("invariants_ege1",
        [](int r, int e, int j, const std::vector<int>& h) {
          return family_dict(invariants_ege1(r, e, j, h));
        },
        py::arg("r"), py::arg("e"), py::arg("j"), py::arg("h"));

  m.def("classify_g01",
        [](int g, int e, int mm, int i1, int i2, bool e_trivial) {
          auto verdict = classify_g01(ScrollModel{g, e, mm, i1, i2, e_trivial});
          py::dict out;
          out["incidence"] = verdict.incidence;
          out["condition"] = verdict.condition;
          out["base"] = verdict.base ? py::object(base_dict(*verdict.base)) : py::none();
          return out;
        },
        py::arg("g"), py::arg("e"), py::arg("m"), py::arg("i1") = 0, py::arg("i2") = 0,
        py::arg("e_trivial") = false);

  m.def("decomposable_incidence_test",
        [](int g, int e, int mm, int i1, int i2, bool e_trivial, int h1_of_minus_e) {
          auto res =
              decomposable_incidence_test(ScrollModel{g, e, mm, i1, i2, e_trivial}, h1_of_minus_e);
          const char* verdict = nullptr;
          switch (res.verdict) {
            case DecomposableVerdict::Incidence: verdict = "incidence"; break;
            case DecomposableVerdict::NotIncidence: verdict = "not_incidence"; break;
            case DecomposableVerdict::UndeterminedCase3: verdict = "undetermined_case3"; break;
            case DecomposableVerdict::UndeterminedSideCondition:
              verdict = "undetermined_side_condition";
              break;
          }
          py::dict out;
          out["verdict"] = verdict;
          out["lhs"] = to_py(res.lhs);
          out["rhs"] = to_py(res.rhs);
          out["base"] = res.base ? py::object(base_dict(*res.base)) : py::none();
          return out;
        },
        py::arg("g"), py::arg("e"), py::arg("m"), py::arg("i1") = 0, py::arg("i2") = 0,
        py::arg("e_trivial") = false, py::arg("h1_of_minus_e") = 0);

  m.def("crosscheck",
        [](const std::string& scope, bool inject_fault) {
          auto rep = run_crosscheck(
              scope == "full" ? CrosscheckScope::Full : CrosscheckScope::Quick, inject_fault);
          py::dict out;
          out["checks_run"] = rep.total();
          out["pass"] = rep.ok();
          py::list failures;
          for (const auto& f : rep.failures) {
            py::dict fd;
            fd["suite"] = f.suite;
            fd["tuple"] = f.tuple;
            fd["lhs"] = f.lhs;
            fd["rhs"] = f.rhs;
            failures.append(std::move(fd));
          }
          out["failures"] = std::move(failures);
          return out;
        },
        py::arg("scope") = "quick", py::arg("inject_fault") = false);
}
