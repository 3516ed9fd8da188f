#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "endofree/suites.hpp"

namespace py = pybind11;
using namespace endofree;

PYBIND11_MODULE(_core, m) {
  m.doc() = "free-algebra endomorphism monoids and their automorphisms";

  py::class_<VarietySpec>(m, "Variety")
      .def_property_readonly("rank", [](const VarietySpec& v) { return v.rank; })
      .def("__repr__", [](const VarietySpec& v) {
        return "Variety(" + v.name() + ", rank=" + std::to_string(v.rank) + ")";
      });

  m.def(
      "variety",
      [](const std::string& name, int rank, const std::string& ring) {
        return parse_variety(name, rank, ring);
      },
      py::arg("name"), py::arg("rank"), py::arg("ring") = "Z");

  m.def("canon", [](const VarietySpec& v, const std::string& t) {
    return print_element(v, canonicalize(parse_term(t, v), v));
  });
  m.def("multiply", [](const VarietySpec& v, const std::string& a, const std::string& b) {
    return print_element(v, multiply(v, canonicalize(parse_term(a, v), v),
                                     canonicalize(parse_term(b, v), v)));
  });
  m.def("invert", [](const VarietySpec& v, const std::string& a) {
    return print_element(v, invert(v, canonicalize(parse_term(a, v), v)));
  });

  m.def("apply_endo", [](const VarietySpec& v, const std::string& images, const std::string& a) {
    return print_element(v, apply_endo(parse_endo(v, images), canonicalize(parse_term(a, v), v)));
  });
  m.def("compose", [](const VarietySpec& v, const std::string& f, const std::string& g) {
    return print_endo(compose(parse_endo(v, f), parse_endo(v, g)));
  });
  m.def("is_automorphism", [](const VarietySpec& v, const std::string& images) {
    return is_automorphism(parse_endo(v, images)).ok();
  });
  m.def("invert_automorphism", [](const VarietySpec& v, const std::string& images) {
    return print_endo(invert_automorphism(parse_endo(v, images)));
  });

  m.def("matrix", [](const VarietySpec& v, const std::string& aut) {
    return print_matrix(matrix_of(parse_endaut(v, aut)));
  });
  m.def("main_permutation", [](const VarietySpec& v, const std::string& aut, const std::string& a) {
    return print_element(v, main_permutation(parse_endaut(v, aut),
                                             canonicalize(parse_term(a, v), v)));
  });
  m.def(
      "verify_aut",
      [](const VarietySpec& v, const std::string& aut, int count, std::uint64_t seed) {
        return verify_endaut(parse_endaut(v, aut), SampleSpec{count, 5, seed}).to_json().dump();
      },
      py::arg("variety"), py::arg("aut"), py::arg("count") = 100, py::arg("seed") = 0);

  m.def("suite_semigroup_binary",
        [](int max_len) { return suite_semigroup_binary(max_len).to_json().dump(); },
        py::arg("max_len") = 6);
  m.def(
      "suite_inverse_system",
      [](int max_len, const std::string& reading) {
        return suite_inverse_system(max_len, reading.at(0)).to_json().dump();
      },
      py::arg("max_len") = 6, py::arg("reading") = "A");
  m.def(
      "suite_group_words",
      [](int max_syllables, int max_exp) {
        return suite_group_words(max_syllables, max_exp).to_json().dump();
      },
      py::arg("max_syllables") = 3, py::arg("max_exp") = 2);
  m.def(
      "suite_mirror_classification",
      [](int rank, int count, std::uint64_t seed) {
        return suite_mirror_classification(rank, SampleSpec{count, 5, seed}).to_json().dump();
      },
      py::arg("rank") = 2, py::arg("count") = 100, py::arg("seed") = 0);
}
