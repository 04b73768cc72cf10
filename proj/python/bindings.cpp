#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "charloci/errors.hpp"
#include "charloci/intersection.hpp"
#include "charloci/io.hpp"

namespace py = pybind11;
using namespace charloci;

namespace {

CharacterPoint point_from(const std::vector<std::string>& coords) {
  std::vector<Rational> qs;
  for (const auto& s : coords) qs.push_back(parse_rational(s));
  return CharacterPoint(qs);
}

const CharacterTorus* torus_ptr(const std::optional<CharacterTorus>& t) { return t ? &*t : nullptr; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact computations with transforms of local systems on abelian varieties";

  static py::exception<Error> error(m, "Error", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  py::class_<CharacterTorus>(m, "Torus")
      .def(py::init([](int g, const std::string& order) { return CharacterTorus(g, order_from_name(order)); }),
           py::arg("g"), py::arg("order") = "grevlex")
      .def_property_readonly("g", &CharacterTorus::g)
      .def_property_readonly("n", &CharacterTorus::n);

  py::class_<FreeComplex>(m, "Complex")
      .def_static("from_json", [](const std::string& s) { return complex_from_json(parse_json(s)); })
      .def("to_json", [](const FreeComplex& c) { return complex_to_json(c).dump(); })
      .def_property_readonly("lo", &FreeComplex::lo)
      .def_property_readonly("hi", &FreeComplex::hi)
      .def("rank", &FreeComplex::rank)
      .def("euler_characteristic", &euler_characteristic)
      .def("derived_fiber", [](const FreeComplex& c, const std::vector<std::string>& pt) {
        return derived_fiber(c, point_from(pt));
      })
      .def("shift", &shift)
      .def("dual", &dual)
      .def("invert_coords", &invert_coords)
      .def("__eq__", &FreeComplex::operator==);

  py::class_<ObjectFile>(m, "ObjectFile")
      .def_static("from_json", [](const std::string& s) { return object_file_from_json(parse_json(s)); })
      .def_readonly("name", &ObjectFile::name)
      .def_readonly("torus", &ObjectFile::torus)
      .def("complex", &ObjectFile::complex)
      .def("oracle_fiber", [](const ObjectFile& f, const std::vector<std::string>& pt) {
        return f.oracle_fiber(point_from(pt));
      });

  m.def("ell", &ell, py::arg("n"));

  m.def(
      "jump_locus",
      [](const FreeComplex& c, int k, int mult, const CharacterTorus& t) {
        return locus_report_to_json(jump_locus(c, k, mult, t), t).dump();
      },
      py::arg("complex"), py::arg("k"), py::arg("m"), py::arg("torus"));

  m.def(
      "oracle_check",
      [](const FreeComplex& c, int k, int mult, const CharacterTorus& t, int samples, std::uint64_t seed) {
        return oracle_report_to_json(sampled_oracle_check(c, k, mult, t, samples, seed)).dump();
      },
      py::arg("complex"), py::arg("k"), py::arg("m"), py::arg("torus"), py::arg("samples"), py::arg("seed"));

  m.def(
      "is_m_perverse",
      [](const FreeComplex& c, const std::optional<CharacterTorus>& t) { return is_m_perverse(c, torus_ptr(t)); },
      py::arg("complex"), py::arg("torus") = py::none());

  m.def(
      "perversity_report",
      [](const FreeComplex& c, const std::optional<CharacterTorus>& t) {
        return perversity_report_to_json(perversity_report(c, torus_ptr(t))).dump();
      },
      py::arg("complex"), py::arg("torus") = py::none());

  m.def(
      "ic_report",
      [](const std::string& s, std::optional<int> ell_override) {
        return ic_report_to_json(ic_verify(ic_file_from_json(parse_json(s)).input, ell_override)).dump();
      },
      py::arg("document"), py::arg("ell") = py::none());
}
