// Python bindings. Languages are given as a regex plus an alphabet string;
// JSON reports are returned as strings for the caller to decode.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "synmon/checks.hpp"
#include "synmon/cli.hpp"
#include "synmon/dautomata.hpp"
#include "synmon/duality.hpp"
#include "synmon/errors.hpp"
#include "synmon/oracle.hpp"
#include "synmon/synalg.hpp"

namespace py = pybind11;
using namespace synmon;

namespace {

  Limits limits_from(std::size_t max_jsl_states, std::size_t max_dim) {
    Limits l;
    l.max_jsl_states = max_jsl_states;
    l.max_dim        = max_dim;
    return l;
  }

}  // namespace

PYBIND11_MODULE(_synmon, m) {
  m.doc() = "Syntactic monoids and algebras of regular languages";

  py::register_exception<CapacityError>(m, "CapacityError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) {
        std::rethrow_exception(p);
      }
    } catch (ParseError const& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  Limits const defaults;

  py::class_<Dfa>(m, "Dfa")
      .def_property_readonly("alphabet", [](Dfa const& d) { return d.alphabet().letters(); })
      .def_property_readonly("states", &Dfa::number_of_states)
      .def_property_readonly("initial", &Dfa::initial)
      .def_property_readonly("finals", &Dfa::finals)
      .def("accepts", [](Dfa const& d, std::string const& w) { return membership(d, w); })
      .def("to_json", [](Dfa const& d) { return dfa_to_json(d); })
      .def_static("from_json", [](std::string const& s) { return minimize(dfa_from_json(s)); })
      .def("__eq__", [](Dfa const& a, Dfa const& b) { return language_equal(a, b); });

  m.def(
      "min_dfa",
      [](std::string const& regex, std::string const& alphabet) {
        return min_dfa(regex, Alphabet(alphabet));
      },
      py::arg("regex"), py::arg("alphabet") = "ab");

  py::class_<SynAlgebra>(m, "SynAlgebra")
      .def_property_readonly("variety", [](SynAlgebra const& s) { return to_string(s.tag); })
      .def_property_readonly("size", &SynAlgebra::size)
      .def("__len__", &SynAlgebra::size)
      .def_property_readonly("unit", [](SynAlgebra const& s) { return s.unit; })
      .def_property_readonly("mult", [](SynAlgebra const& s) { return s.mult; })
      .def_property_readonly("generators", [](SynAlgebra const& s) { return s.gen; })
      .def_property_readonly("representatives",
                             [](SynAlgebra const& s) {
                               std::vector<std::string> out;
                               for (auto const& e : s.elements) {
                                 out.push_back(to_string(e.representative));
                               }
                               return out;
                             })
      .def_property_readonly("outputs",
                             [](SynAlgebra const& s) {
                               std::vector<std::uint32_t> out;
                               for (auto const& y : s.output) {
                                 out.push_back(y.value);
                               }
                               return out;
                             })
      .def_property_readonly("zero",
                             [](SynAlgebra const& s) -> std::optional<Index> {
                               if (s.tag.variety == Variety::pset
                                   || s.tag.variety == Variety::jsl) {
                                 return s.zero;
                               }
                               return multiplicative_zero(s);
                             })
      .def(
          "class_of",
          [](SynAlgebra const& s, std::string const& text) {
            return class_of(s, parse_free_elem(s.tag, text, s.alphabet));
          },
          "index of the class of an element written in the variety's textual form")
      .def("coordinates",
           [](SynAlgebra const& s, std::string const& text) {
             return coordinates_of(s, parse_free_elem(s.tag, text, s.alphabet));
           })
      .def("law_violations", &algebra_law_violations)
      .def("to_table", [](SynAlgebra const& s) { return to_table(s); })
      .def("to_json", [](SynAlgebra const& s) { return to_json(s); })
      .def("to_csv", [](SynAlgebra const& s) { return to_csv(s); })
      .def("to_dot", [](SynAlgebra const& s) { return to_dot(s); });

  m.def(
      "syntactic_algebra",
      [](std::string const& variety, std::string const& regex, std::string const& alphabet,
         std::uint32_t prime, std::size_t max_jsl_states, std::size_t max_dim) {
        return syntactic_algebra(parse_variety(variety, prime), min_dfa(regex, Alphabet(alphabet)),
                                 limits_from(max_jsl_states, max_dim));
      },
      py::arg("variety"), py::arg("regex"), py::arg("alphabet") = "ab", py::arg("prime") = 2,
      py::arg("max_jsl_states") = defaults.max_jsl_states, py::arg("max_dim") = defaults.max_dim);

  m.def(
      "minimal_automaton",
      [](std::string const& variety, std::string const& regex, std::string const& alphabet,
         std::uint32_t prime) {
        return to_json(
            minimal_dautomaton(parse_variety(variety, prime), min_dfa(regex, Alphabet(alphabet))));
      },
      "JSON description of the minimal automaton", py::arg("variety"), py::arg("regex"),
      py::arg("alphabet") = "ab", py::arg("prime") = 2);

  m.def(
      "congruent",
      [](std::string const& variety, std::string const& regex, std::string const& u,
         std::string const& v, std::string const& alphabet, std::uint32_t prime) {
        Alphabet const      a(alphabet);
        VarietyTag const    tag = parse_variety(variety, prime);
        ContextOracle const o(tag, min_dfa(regex, a));
        return o.congruent(parse_free_elem(tag, u, a), parse_free_elem(tag, v, a));
      },
      "decide u ~ v in the syntactic congruence by bounded contexts", py::arg("variety"),
      py::arg("regex"), py::arg("u"), py::arg("v"), py::arg("alphabet") = "ab",
      py::arg("prime") = 2);

  m.def(
      "check",
      [](std::string const& variety, std::string const& regex, std::string const& alphabet,
         std::uint32_t prime, std::uint64_t seed) {
        std::vector<std::tuple<std::string, bool, std::string>> out;
        for (auto const& r : check_variety(parse_variety(variety, prime),
                                           min_dfa(regex, Alphabet(alphabet)), seed)) {
          out.emplace_back(r.name, r.passed, r.detail);
        }
        return out;
      },
      py::arg("variety"), py::arg("regex"), py::arg("alphabet") = "ab", py::arg("prime") = 2,
      py::arg("seed") = 0);

  m.def(
      "duality",
      [](std::string const& regex, std::string const& alphabet) {
        Dfa const d = min_dfa(regex, Alphabet(alphabet));
        return py::make_tuple(to_json(verify_syntactic_duality(d)),
                              to_json(verify_minimal_duality(d)));
      },
      "JSON reports for the syntactic and the minimal duality", py::arg("regex"),
      py::arg("alphabet") = "ab");

  m.def("varieties", [] {
    std::vector<std::string> out;
    for (auto const& t : all_varieties()) {
      out.emplace_back(variety_name(t.variety));
    }
    return out;
  });

  m.def(
      "run_cli",
      [](std::vector<std::string> const& args) {
        std::ostringstream out, err;
        int const          code = cli::run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      "run the command-line interface in-process; returns (exit code, stdout, stderr)");
}
