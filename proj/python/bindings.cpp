#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <fstream>
#include <random>
#include <sstream>

#include "projcoh/cochain.hpp"
#include "projcoh/cohomology.hpp"
#include "projcoh/extension.hpp"
#include "projcoh/group.hpp"
#include "projcoh/io.hpp"
#include "projcoh/projrep.hpp"
#include "projcoh/selftest.hpp"

namespace py = pybind11;
using namespace projcoh;

PYBIND11_MODULE(_core, m) {
    m.doc() = "finite-group 2-cocycles, second cohomology, central extensions, and "
              "projective unitary representations";

    py::register_exception<Error>(m, "Error", PyExc_ValueError);

    py::class_<FiniteGroup>(m, "FiniteGroup")
        .def_property_readonly("order", &FiniteGroup::order)
        .def_property_readonly("name", &FiniteGroup::name)
        .def("op", &FiniteGroup::op, py::arg("a"), py::arg("b"))
        .def("inverse", &FiniteGroup::inverse, py::arg("a"))
        .def("table", &FiniteGroup::rows)
        .def("is_abelian", &FiniteGroup::is_abelian)
        .def("element_order", &FiniteGroup::element_order, py::arg("a"))
        .def("equal_under_relabeling", &FiniteGroup::equal_under_relabeling, py::arg("other"),
             py::arg("perm"))
        .def("same_table", &FiniteGroup::same_table)
        .def("__eq__", [](const FiniteGroup& a, const FiniteGroup& b) { return a == b; })
        .def("__repr__", [](const FiniteGroup& g) {
            return "<FiniteGroup " + g.name() + " of order " + std::to_string(g.order()) + ">";
        });

    m.def("from_cayley_table", &FiniteGroup::from_cayley_table, py::arg("table"),
          py::arg("name") = "unnamed");
    m.def("cyclic", &cyclic, py::arg("n"));
    m.def("direct_product", &direct_product, py::arg("g"), py::arg("k"));
    m.def("dihedral", &dihedral, py::arg("n"));
    m.def("quaternion8", &quaternion8);
    m.def("symmetric", &symmetric, py::arg("k"));

    py::class_<Cochain>(m, "Cochain")
        .def(py::init<FiniteGroup, int, std::int64_t>(), py::arg("group"), py::arg("degree"),
             py::arg("modulus"))
        .def(py::init<FiniteGroup, int, std::int64_t, std::vector<std::int64_t>>(),
             py::arg("group"), py::arg("degree"), py::arg("modulus"), py::arg("values"))
        .def_property_readonly("degree", &Cochain::degree)
        .def_property_readonly("modulus", &Cochain::modulus)
        .def_property_readonly("group", &Cochain::group)
        .def_property_readonly("values", [](const Cochain& c) { return c.values(); })
        .def("value", [](const Cochain& c, const std::vector<int>& args) { return c(args); },
             py::arg("args"))
        .def("is_zero", &Cochain::is_zero)
        .def("__add__", [](const Cochain& a, const Cochain& b) { return a + b; })
        .def("__sub__", [](const Cochain& a, const Cochain& b) { return a - b; })
        .def("__neg__", [](const Cochain& a) { return -a; })
        .def("__mul__", [](const Cochain& a, std::int64_t k) { return a * k; })
        .def("__eq__", [](const Cochain& a, const Cochain& b) { return a == b; })
        .def("__repr__", [](const Cochain& c) {
            return "<Cochain degree " + std::to_string(c.degree()) + " mod " +
                   std::to_string(c.modulus()) + " on " + c.group().name() + ">";
        });

    m.def("coboundary", [](const Cochain& c) { return coboundary(c); }, py::arg("c"));
    m.def("coboundary_truncated", [](const Cochain& c) { return coboundary_truncated(c); },
          py::arg("c"));
    m.def("delta_squared", [](const Cochain& c) { return delta_squared(c); }, py::arg("c"));
    m.def("is_cocycle", [](const Cochain& c) { return is_cocycle(c); }, py::arg("c"));
    m.def("cocycle_witness",
          [](const Cochain& c) -> py::object {
              std::vector<int> w;
              if (is_cocycle(c, &w)) return py::none();
              return py::cast(w);
          },
          py::arg("c"), "argument tuple where the coboundary is nonzero, or None");
    m.def("is_normalized", &is_normalized, py::arg("xi"));
    m.def("normalize", &normalize, py::arg("xi"),
          "returns (normalized cocycle, trivializing 1-cochain)");
    m.def("random_cochain",
          [](const FiniteGroup& g, int degree, std::int64_t modulus, std::uint64_t seed) {
              std::mt19937_64 rng(seed);
              return random_cochain(g, degree, modulus, rng);
          },
          py::arg("group"), py::arg("degree"), py::arg("modulus"), py::arg("seed") = 0);

    py::class_<TrivializationCertificate>(m, "TrivializationCertificate")
        .def_property_readonly("witness",
                               [](const TrivializationCertificate& c) -> py::object {
                                   if (!c.witness) return py::none();
                                   return py::cast(*c.witness);
                               })
        .def_readonly("obstruction_row", &TrivializationCertificate::obstruction_row)
        .def("__bool__", [](const TrivializationCertificate& c) { return static_cast<bool>(c); });

    m.def("is_coboundary", &is_coboundary, py::arg("xi"));
    m.def("are_equivalent", &are_equivalent, py::arg("xi"), py::arg("xi_prime"));
    m.def("alternating_pairing", &alternating_pairing, py::arg("xi"));
    m.def("random_cocycle",
          [](const FiniteGroup& g, std::int64_t modulus, std::uint64_t seed, bool normalized) {
              std::mt19937_64 rng(seed);
              const CocycleSampler sampler(g, modulus);
              return normalized ? sampler.sample_normalized(rng) : sampler.sample(rng);
          },
          py::arg("group"), py::arg("modulus"), py::arg("seed") = 0,
          py::arg("normalized") = true, "uniform sample from the cocycle group Z^2");

    py::class_<CohomologyResult>(m, "CohomologyResult")
        .def_readonly("group", &CohomologyResult::group)
        .def_readonly("modulus", &CohomologyResult::modulus)
        .def_readonly("invariant_factors", &CohomologyResult::invariant_factors)
        .def_readonly("representatives", &CohomologyResult::representatives)
        .def_readonly("z2_rank", &CohomologyResult::z2_rank)
        .def_readonly("b2_rank", &CohomologyResult::b2_rank)
        .def("__repr__", [](const CohomologyResult& r) {
            std::string s = "<H2(" + r.group.name() + ", Z" + std::to_string(r.modulus) + ") = ";
            if (r.invariant_factors.empty()) s += "trivial";
            for (std::size_t i = 0; i < r.invariant_factors.size(); ++i)
                s += (i ? " x Z" : "Z") + std::to_string(r.invariant_factors[i]);
            return s + ">";
        });

    m.def("second_cohomology",
          [](const FiniteGroup& g, std::int64_t m) { return second_cohomology(g, m); },
          py::arg("group"), py::arg("modulus"));

    py::class_<CentralExtension>(m, "CentralExtension")
        .def_readonly("base", &CentralExtension::base)
        .def_readonly("modulus", &CentralExtension::modulus)
        .def_readonly("cocycle", &CentralExtension::cocycle)
        .def_readonly("total", &CentralExtension::total)
        .def("index_of", &CentralExtension::index_of, py::arg("theta"), py::arg("a"))
        .def("project", &CentralExtension::project, py::arg("h"))
        .def("theta_of", &CentralExtension::theta_of, py::arg("h"))
        .def("section", &CentralExtension::section, py::arg("a"))
        .def("center_subgroup", &CentralExtension::center_subgroup);

    m.def("extension_table_unchecked", &extension_table_unchecked, py::arg("group"),
          py::arg("modulus"), py::arg("xi"));
    m.def("build_extension",
          [](const FiniteGroup& g, std::int64_t m, const Cochain& xi, bool auto_normalize) {
              if (auto_normalize && is_cocycle(xi) && !is_normalized(xi))
                  return build_extension(g, m, normalize(xi).first);
              return build_extension(g, m, xi);
          },
          py::arg("group"), py::arg("modulus"), py::arg("xi"), py::arg("auto_normalize") = false);
    m.def("extension_isomorphism", &extension_isomorphism, py::arg("e1"), py::arg("e2"),
          py::arg("x"));
    m.def("quotient_by_center_subgroup", &quotient_by_center_subgroup, py::arg("e"));

    py::class_<UnitaryRep>(m, "UnitaryRep")
        .def_readonly("group", &UnitaryRep::group)
        .def_readonly("dim", &UnitaryRep::dim)
        .def_readonly("tolerance", &UnitaryRep::tolerance)
        .def_property_readonly("matrices", [](const UnitaryRep& r) { return r.matrices; })
        .def("at", &UnitaryRep::at, py::arg("a"), py::return_value_policy::copy);

    m.def("unitary_rep",
          [](FiniteGroup g, std::vector<Matrix> mats, double tol) {
              return UnitaryRep::make(std::move(g), std::move(mats), tol);
          },
          py::arg("group"), py::arg("matrices"), py::arg("tolerance") = 1e-10);

    py::class_<FactorSystem>(m, "FactorSystem")
        .def_readonly("exponent", &FactorSystem::exponent)
        .def_readonly("residual", &FactorSystem::residual);

    m.def("clock", &projcoh::clock, py::arg("n"));
    m.def("shift", &projcoh::shift, py::arg("n"));
    m.def("schwinger_rep", &schwinger_rep, py::arg("n"));
    m.def("extract_factor_system", &extract_factor_system, py::arg("rep"), py::arg("modulus"));
    m.def("rephase", &rephase, py::arg("rep"), py::arg("x"));
    m.def("twisted_regular_rep", &twisted_regular_rep, py::arg("group"), py::arg("modulus"),
          py::arg("xi"));
    m.def("lift_to_extension", &lift_to_extension, py::arg("rep"), py::arg("extension"));
    m.def("max_abs", &max_abs, py::arg("matrix"));

    m.def("read_group_file", &read_group_file, py::arg("path"), py::arg("name") = "");
    m.def("write_group_file", &write_group_file, py::arg("path"), py::arg("group"));
    m.def("read_cochain_file", &read_cochain_file, py::arg("path"), py::arg("group"));
    m.def("write_cochain_file",
          [](const std::string& path, const Cochain& c) {
              std::ofstream f(path);
              if (!f) throw ParseError("cannot open '" + path + "' for writing");
              write_cochain(f, c);
          },
          py::arg("path"), py::arg("cochain"));
    m.def("cochain_text", [](const Cochain& c) {
        std::ostringstream os;
        write_cochain(os, c);
        return os.str();
    });

    m.def("selftest",
          [](std::uint64_t seed) {
              py::list out;
              for (const auto& r : selftest::run_all(seed)) {
                  py::dict d;
                  d["index"] = r.index;
                  d["name"] = r.name;
                  d["passed"] = r.passed;
                  d["seconds"] = r.seconds;
                  d["detail"] = r.detail;
                  out.append(d);
              }
              return out;
          },
          py::arg("seed") = 0);

    m.attr("__version__") = "0.1.0";
}
