#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sncstab/builders.hpp"
#include "sncstab/io.hpp"

namespace py = pybind11;
using namespace sncstab;

namespace {

Mode mode_of(const std::string& s) {
    if (s == "minus") return Mode::Minus;
    if (s == "plus") return Mode::Plus;
    throw std::invalid_argument("mode must be 'minus' or 'plus'");
}

Scope scope_of(const std::string& s) {
    if (s == "pairs") return Scope::ConnectedPairs;
    if (s == "all") return Scope::AllUnions;
    throw std::invalid_argument("scope must be 'pairs' or 'all'");
}

ClassExpr class_of(const Configuration& cfg, const std::string& s) { return parse_class(cfg, s); }

ClassExpr polarization_of(const Configuration& cfg, const std::string& s) {
    if (!s.empty()) return parse_class(cfg, s);
    if (cfg.canonical) return ClassExpr::basis(*cfg.canonical);
    throw PreconditionError("no polarization given and no canonical class designated");
}

std::vector<std::vector<long long>> twist_list(const std::set<Twist>& s) {
    std::vector<std::vector<long long>> out;
    for (const auto& t : s) out.push_back(t.a);
    return out;
}

}  // namespace

PYBIND11_MODULE(_sncstab, m) {
    m.doc() = "semistability of line bundles on SNC degeneration fibers";

    py::register_exception<PreconditionError>(m, "PreconditionError");

    py::class_<Configuration>(m, "Configuration")
        .def_property_readonly("dimension", [](const Configuration& c) { return c.dim; })
        .def_property_readonly("components",
                               [](const Configuration& c) { return c.syms.components; })
        .def_property_readonly("bundles", [](const Configuration& c) { return c.syms.bundles; })
        .def_property_readonly("canonical",
                               [](const Configuration& c) -> py::object {
                                   if (!c.canonical) return py::none();
                                   return py::str(c.syms.name(*c.canonical));
                               })
        .def("to_json", [](const Configuration& c) { return config_to_string(c); })
        .def("__repr__", [](const Configuration& c) {
            return "<Configuration dim=" + std::to_string(c.dim) + " components=" +
                   std::to_string(c.n()) + ">";
        });

    m.def("parse_config", &config_from_string, py::arg("text"));
    m.def("load_config", &load_config, py::arg("path"));

    m.def(
        "curve",
        [](const std::vector<int>& genera, const std::vector<std::tuple<int, int, int>>& edges,
           const std::map<std::string, std::vector<long long>>& degrees) {
            std::vector<CurveEdgeSpec> es;
            for (const auto& [i, j, nodes] : edges) es.push_back({i, j, nodes});
            return curve_builder(genera, es, degrees);
        },
        py::arg("genera"), py::arg("edges"), py::arg("degrees"));

    m.def(
        "synth",
        [](int dim, int components, const std::vector<std::pair<int, int>>& edges, uint64_t seed) {
            std::vector<Edge> es;
            for (const auto& [i, j] : edges) es.push_back({i, j});
            return synth_generator(dim, components, es, seed);
        },
        py::arg("dim"), py::arg("components"), py::arg("edges"), py::arg("seed") = 0);

    m.def("validate", [](const Configuration& cfg) {
        std::vector<std::tuple<std::string, bool, std::string>> out;
        for (const auto& c : validate(cfg)) out.emplace_back(c.name, c.pass, c.witness);
        return out;
    });

    m.def(
        "e_value",
        [](const Configuration& cfg, const std::string& subset, const std::string& bundle) {
            return rat_to_string(e_value(cfg, parse_subset(cfg, subset), class_of(cfg, bundle)));
        },
        py::arg("config"), py::arg("subset"), py::arg("bundle"));

    m.def(
        "e_poly",
        [](const Configuration& cfg, const std::string& subset, const std::string& bundle,
           const std::string& polarization, const std::string& twist_subset) {
            Poly p = e_poly(cfg, parse_subset(cfg, subset), class_of(cfg, bundle),
                            polarization_of(cfg, polarization),
                            parse_subset(cfg, twist_subset));
            return poly_to_json(p).dump();
        },
        py::arg("config"), py::arg("subset"), py::arg("bundle"), py::arg("polarization") = "",
        py::arg("twist_subset") = "");

    m.def(
        "is_semistable",
        [](const Configuration& cfg, const std::string& bundle, const std::string& polarization,
           const std::string& mode, const std::string& scope) {
            return is_semistable(cfg, class_of(cfg, bundle), polarization_of(cfg, polarization),
                                 mode_of(mode), scope_of(scope));
        },
        py::arg("config"), py::arg("bundle"), py::arg("polarization") = "",
        py::arg("mode") = "minus", py::arg("scope") = "pairs");

    m.def(
        "twistable_interval",
        [](const Configuration& cfg, const std::string& subset, const std::string& bundle,
           const std::string& polarization, const std::string& mode) {
            auto rep = twistable_interval(cfg, parse_subset(cfg, subset), class_of(cfg, bundle),
                                          polarization_of(cfg, polarization), mode_of(mode));
            return interval_report_to_json(rep).dump();
        },
        py::arg("config"), py::arg("subset"), py::arg("bundle"), py::arg("polarization") = "",
        py::arg("mode") = "minus");

    m.def(
        "enumerate_twists",
        [](const Configuration& cfg, const std::string& bundle, const std::string& polarization,
           const std::string& mode) {
            return twist_list(enumerate_semistable_twists(cfg, class_of(cfg, bundle),
                                                          polarization_of(cfg, polarization),
                                                          mode_of(mode)));
        },
        py::arg("config"), py::arg("bundle"), py::arg("polarization") = "",
        py::arg("mode") = "minus");

    m.def(
        "brute_force_twists",
        [](const Configuration& cfg, const std::string& bundle, const std::string& polarization,
           const std::string& mode, long long window) {
            return twist_list(brute_force_twists(cfg, class_of(cfg, bundle),
                                                 polarization_of(cfg, polarization), mode_of(mode),
                                                 window));
        },
        py::arg("config"), py::arg("bundle"), py::arg("polarization") = "",
        py::arg("mode") = "minus", py::arg("window") = 10);

    m.def(
        "apply_twist",
        [](const Configuration& cfg, const std::string& bundle,
           const std::vector<long long>& twist) {
            return class_to_text(cfg, apply_twist(cfg, class_of(cfg, bundle), Twist{twist}));
        },
        py::arg("config"), py::arg("bundle"), py::arg("twist"));

    m.def(
        "classify",
        [](const Configuration& cfg, const std::string& bundle,
           const std::vector<long long>& twist, const std::string& polarization,
           const std::string& mode) {
            return classification_name(classify(cfg, class_of(cfg, bundle),
                                                polarization_of(cfg, polarization), mode_of(mode),
                                                Twist{twist}));
        },
        py::arg("config"), py::arg("bundle"), py::arg("twist"), py::arg("polarization") = "",
        py::arg("mode") = "minus");

    m.def(
        "kx_criterion",
        [](const Configuration& cfg, const std::string& subset) {
            auto [v, c] = kx_criterion(cfg, parse_subset(cfg, subset));
            return std::make_pair(rat_to_string(v), kx_name(c));
        },
        py::arg("config"), py::arg("subset"));

    m.def(
        "intersect",
        [](const Configuration& cfg, const std::vector<std::string>& classes) {
            std::vector<ClassExpr> cl;
            for (const auto& s : classes) cl.push_back(class_of(cfg, s));
            return rat_to_string(intersect(cfg, cl));
        },
        py::arg("config"), py::arg("classes"));

    m.def(
        "chi",
        [](const Configuration& cfg, const std::string& subset, const std::string& bundle) {
            ClassExpr M = bundle.empty() ? ClassExpr{} : class_of(cfg, bundle);
            return rat_to_string(chi_union(cfg, parse_subset(cfg, subset), M));
        },
        py::arg("config"), py::arg("subset"), py::arg("bundle") = "");
}
