#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "rookalg/central_families.hpp"
#include "rookalg/hecke.hpp"
#include "rookalg/monoid_algebra.hpp"
#include "rookalg/report.hpp"
#include "rookalg/reps.hpp"
#include "rookalg/rook.hpp"
#include "rookalg/shifted_symmetric.hpp"

namespace py = pybind11;
using namespace rookalg;

namespace {

Partition partition_from_list(const std::vector<int>& parts) { return Partition(parts); }

std::string rational_to_str(const Rational& q) { return q.get_str(); }

}  // namespace

PYBIND11_MODULE(_rookalg, m) {
    m.doc() = "exact computations in the rook-monoid algebra, its centralizers and friends";

    py::class_<PartialBijection>(m, "PartialBijection")
        .def(py::init([](const std::string& text) { return PartialBijection::parse(text); }),
             py::arg("text"))
        .def_static("identity", &PartialBijection::identity)
        .def_static("zero", &PartialBijection::zero)
        .def_static("eps", &PartialBijection::eps)
        .def_static("transposition", &PartialBijection::transposition)
        .def_static("cycle", &PartialBijection::cycle)
        .def_property_readonly("n", &PartialBijection::n)
        .def_property_readonly("rank", &PartialBijection::rank)
        .def("deg", &PartialBijection::deg)
        .def("deg_m", &PartialBijection::deg_m)
        .def("star", &PartialBijection::star)
        .def("pairs", [](const PartialBijection& g) { return g.pairs(); })
        .def("is_permutation", &PartialBijection::is_permutation)
        .def("__mul__",
             [](const PartialBijection& a, const PartialBijection& b) { return compose(a, b); })
        .def("__eq__", [](const PartialBijection& a, const PartialBijection& b) { return a == b; })
        .def("__hash__", &PartialBijection::hash)
        .def("__repr__", &PartialBijection::str)
        .def("__str__", &PartialBijection::str);

    m.def("compose", &compose);
    m.def("project_theta", &project_theta);
    m.def("embed_phi", &embed_phi);
    m.def("embed_psi", &embed_psi);
    m.def("enumerate_gamma", &enumerate_gamma, py::arg("n"));
    m.def("gamma_size", &gamma_size, py::arg("n"));
    m.def("orbit_invariant", [](const PartialBijection& s, int m) {
        auto [alpha, M] = orbit_invariant(s, m);
        return py::make_tuple(alpha.str(), M.parts());
    });

    py::class_<AlgebraElement>(m, "AlgebraElement")
        .def(py::init([](const std::string& text, std::optional<int> n) {
                 return AlgebraElement::parse(text, n);
             }),
             py::arg("text"), py::arg("n") = std::nullopt)
        .def_static("unit", &AlgebraElement::unit)
        .def_static("zero", &AlgebraElement::zero)
        .def_property_readonly("n", &AlgebraElement::n)
        .def("is_zero", &AlgebraElement::is_zero)
        .def("deg", &AlgebraElement::deg)
        .def("deg_m", &AlgebraElement::deg_m)
        .def("rank", &AlgebraElement::rank)
        .def("support_size", &AlgebraElement::support_size)
        .def("__add__", [](const AlgebraElement& a, const AlgebraElement& b) { return a + b; })
        .def("__sub__", [](const AlgebraElement& a, const AlgebraElement& b) { return a - b; })
        .def("__mul__", [](const AlgebraElement& a, const AlgebraElement& b) { return a * b; })
        .def("__eq__", [](const AlgebraElement& a, const AlgebraElement& b) { return a == b; })
        .def("__repr__", &AlgebraElement::str)
        .def("__str__", &AlgebraElement::str);

    m.def("theta", [](const AlgebraElement& a) { return theta_n(a); });
    m.def("retraction", [](const AlgebraElement& a) { return retraction(a); });
    m.def("centralizer_dim", [](int n, int mm) { return centralizer(n, mm).dim(); });
    m.def("centralizer_basis", [](int n, int mm) {
        SubspaceHandle handle = centralizer(n, mm);
        std::vector<std::string> out;
        for (const auto& b : handle.basis()) out.push_back(b.str());
        return out;
    });

    m.def("c_element", [](int n, const std::vector<int>& M) {
        return c_element(n, partition_from_list(M));
    });
    m.def("delta_element", [](int n, const std::vector<int>& M) {
        return delta_element(n, partition_from_list(M));
    });
    m.def("jm_element", &jm_element, py::arg("n"), py::arg("k"));

    m.def("rep_dimension", [](int n, const std::vector<int>& lam) {
        return GammaRep(n, partition_from_list(lam)).dim();
    });
    m.def(
        "central_eigenvalue",
        [](int n, const std::vector<int>& lam, int r) {
            GammaRep rep(n, partition_from_list(lam));
            return rational_to_str(
                central_eigenvalue(delta_element(n, Partition({r})), rep));
        },
        py::arg("n"), py::arg("lam"), py::arg("r"));
    m.def("classification_ok", [](int n) { return classification_check(n).ok(); });

    m.def(
        "shifted_generator",
        [](const std::string& kind, int M, int n) {
            GenKind k = kind == "e"   ? GenKind::E
                        : kind == "h" ? GenKind::H
                                      : GenKind::P;
            return generator(k, M, n).str();
        },
        py::arg("kind"), py::arg("M"), py::arg("n"));
    m.def("power_sum_eval", [](int M, const std::vector<int>& lam) {
        return rational_to_str(power_sum_eval(M, partition_from_list(lam)));
    });
    m.def("bridge_ok", [](int r, int B) { return bridge_check(r, B).ok(); });

    m.def(
        "hecke_normal_form",
        [](const std::string& word, int mm, const std::string& variant) {
            HeckeVariant v = variant == "plain" ? HeckeVariant::Plain : HeckeVariant::Tilde;
            return parse_word_expr(word, mm, v).str();
        },
        py::arg("word"), py::arg("m"), py::arg("variant") = "tilde");
    m.def("hecke_truncated_dimension", [](int mm, int M, const std::string& variant) {
        HeckeVariant v = variant == "plain" ? HeckeVariant::Plain : HeckeVariant::Tilde;
        return truncated_dimension(mm, M, v);
    });

    m.def(
        "run_suite",
        [](const std::string& suite, int n_max, int m_max, int threads) {
            VerificationReport rep = run_suite(suite, n_max, m_max, threads);
            py::dict out;
            out["all_pass"] = rep.all_pass();
            py::list checks;
            for (const auto& c : rep.checks) {
                py::dict jc;
                jc["name"] = c.name;
                jc["status"] = c.status == CheckStatus::Pass   ? "pass"
                               : c.status == CheckStatus::Fail ? "fail"
                                                               : "skipped";
                jc["details"] = c.details;
                checks.append(jc);
            }
            out["checks"] = checks;
            return out;
        },
        py::arg("suite"), py::arg("n_max") = 4, py::arg("m_max") = 2, py::arg("threads") = 1);
}
