#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "amd/amdcheck.hpp"
#include "amd/fixtures.hpp"
#include "amd/generic.hpp"
#include "amd/io.hpp"
#include "amd/varieties.hpp"

namespace py = pybind11;
using namespace amd;

namespace {

py::object json_loads(const std::string& s) { return py::module_::import("json").attr("loads")(s); }

Point to_point(const py::object& p, const GradedIdeal& I) {
  if (py::isinstance<py::str>(p)) return parse_point(p.cast<std::string>(), I.nvars(), I.ring()->prime());
  const std::uint32_t q = I.ring()->prime();
  Point out;
  for (auto c : p.cast<std::vector<long long>>()) out.push_back(static_cast<std::uint32_t>(((c % q) + q) % q));
  if (static_cast<int>(out.size()) != I.nvars()) throw Error("point has the wrong number of coordinates");
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Varieties of almost minimal degree: Groebner bases, resolutions and checks over F_p";
  m.attr("__version__") = AMDKIT_VERSION;
  m.attr("DEFAULT_PRIME") = kDefaultPrime;

  py::register_exception<Error>(m, "AmdError", PyExc_ValueError);

  py::class_<GradedIdeal>(m, "Ideal")
      .def(py::init([](const std::string& text) { return parse_ideal(text); }), py::arg("text"),
           "Parse the ideal file format: a 'ring ...' header line, then one generator per line.")
      .def_property_readonly("nvars", &GradedIdeal::nvars)
      .def_property_readonly("prime", [](const GradedIdeal& I) { return I.ring()->prime(); })
      .def_property_readonly("variables", [](const GradedIdeal& I) { return I.ring()->names(); })
      .def_property_readonly("generators",
                             [](const GradedIdeal& I) {
                               std::vector<std::string> out;
                               for (const auto& g : I.generators()) out.push_back(g.str());
                               return out;
                             })
      .def("contains", [](const GradedIdeal& I, const std::string& f) {
        return I.contains(parse_polynomial(f, I.ring()));
      })
      .def("same_as", [](const GradedIdeal& a, const GradedIdeal& b) { return same_ideal(a, b); })
      .def("to_text", &format_ideal)
      .def("to_json", [](const GradedIdeal& I) { return json_loads(ideal_to_json(I)); })
      .def("__str__", &format_ideal)
      .def("__repr__", [](const GradedIdeal& I) {
        return "<Ideal in " + std::to_string(I.nvars()) + " variables, " + std::to_string(I.generators().size()) +
               " generators>";
      });

  m.def("read_ideal", &read_ideal_file, py::arg("path"));
  m.def(
      "scroll", [](const std::string& spec, std::uint32_t prime) { return scroll_ideal(ScrollSpec::parse(spec), prime).ideal; },
      py::arg("spec"), py::arg("prime") = kDefaultPrime, "Ideal of S(d1,...,dl), optionally '+vertex:h'.");
  m.def("veronese", &veronese_ideal, py::arg("prime") = kDefaultPrime);
  m.def("pfaffian", &pfaffian_fixture, py::arg("prime") = kDefaultPrime);
  m.def(
      "project",
      [](const GradedIdeal& I, const py::object& point, std::optional<int> pivot) {
        return project_from_point(I, to_point(point, I), pivot).ideal;
      },
      py::arg("ideal"), py::arg("point"), py::arg("pivot") = py::none(),
      "Project from a point given as 'e<i>', 'c0,c1,...' or a list of integers.");
  m.def(
      "random_point_off", [](const GradedIdeal& I, std::uint64_t seed) { return random_point_off(I, seed); },
      py::arg("ideal"), py::arg("seed") = 1);

  m.def(
      "hilbert_numerator",
      [](const GradedIdeal& I) {
        IntPoly n = hilbert_series(I).numerator;
        poly_trim(n);
        return n;
      },
      py::arg("ideal"), "Numerator of the Hilbert series over (1 - l)^nvars, lowest power first.");
  m.def(
      "dimension_degree",
      [](const GradedIdeal& I) {
        const DimensionDegree d = dimension_degree(hilbert_series(I));
        return py::dict(py::arg("dim") = d.dim, py::arg("codim") = d.codim, py::arg("degree") = d.degree);
      },
      py::arg("ideal"));
  m.def(
      "betti",
      [](const GradedIdeal& I) {
        std::map<std::pair<int, int>, long long> out;
        const BettiTable table = minimalize(free_resolution(I)).betti;
        for (const auto& [ij, b] : table.entries())
          if (b) out[ij] = b;
        return out;
      },
      py::arg("ideal"), py::call_guard<py::gil_scoped_release>(), "Graded Betti numbers {(i, j): beta_ij} of S/I.");
  m.def(
      "depth",
      [](const GradedIdeal& I, const std::string& method, std::uint64_t seed) {
        if (method == "gin") return generic_initial(I, seed).depth;
        if (method == "resolution") return depth_from_betti(minimalize(free_resolution(I)).betti, I.nvars());
        throw Error("depth: method must be 'gin' or 'resolution'");
      },
      py::arg("ideal"), py::arg("method") = "gin", py::arg("seed") = 1, py::call_guard<py::gil_scoped_release>());
  m.def(
      "analyze",
      [](const GradedIdeal& I, bool scroll_projection, bool deficiency, bool gin, std::uint64_t seed) {
        AnalysisOptions o;
        o.scroll_projection = scroll_projection;
        o.deficiency = deficiency && !gin;
        o.resolve = !gin;
        o.seed = seed;
        std::string j;
        {
          py::gil_scoped_release release;
          j = analyze(I, o).to_json();
        }
        return json_loads(j);
      },
      py::arg("ideal"), py::arg("scroll_projection") = false, py::arg("deficiency") = true, py::arg("gin") = false,
      py::arg("seed") = 1, "Invariants and checks as a dict (same layout as `amdtool analyze --format json`).");
  m.def(
      "hyperplane_section",
      [](const GradedIdeal& I, std::uint64_t seed) {
        const HyperplaneSection h = hyperplane_section(I, std::nullopt, seed);
        return py::make_tuple(h.ideal, h.depth_before, h.depth_after);
      },
      py::arg("ideal"), py::arg("seed") = 1);

  m.def("fixtures", [] {
    std::vector<std::string> names;
    for (const auto& fx : fixture_registry()) names.push_back(fx.name);
    return names;
  });
  m.def(
      "fixture_ideal", [](const std::string& name) { return build_fixture(find_fixture(name)).ideal; },
      py::arg("name"));
  m.def(
      "verify",
      [](const std::string& name, std::uint64_t seed) {
        VerifyOptions o;
        o.seed = seed;
        std::string j;
        {
          py::gil_scoped_release release;
          j = verify_fixture(find_fixture(name), o).to_json();
        }
        return json_loads(j);
      },
      py::arg("name"), py::arg("seed") = 1);
}
