// Copyright 2026 The omegarep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "omegarep/fixtures.hpp"
#include "omegarep/io.hpp"
#include "omegarep/polymorphism.hpp"
#include "omegarep/tensor.hpp"

namespace py = pybind11;
using namespace omegarep;

namespace {

// JSON text in, JSON text out: Python callers work with plain dicts.
template <class T>
T from_text(const std::string& text, T (*decode)(const io::Json&)) {
  return decode(io::parse_json(text));
}

std::string text(const auto& obj) { return io::to_json(obj).dump(); }

}  // namespace

PYBIND11_MODULE(_omegarep, m) {
  m.doc() = "Finite universal-algebra representations, congruences and tensor products";

  static py::exception<Error> error_type(m, "Error");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error_type)(e.what());
      exc.attr("kind") = std::string(to_string(e.kind()));
      PyErr_SetObject(error_type.ptr(), exc.ptr());
    }
  });

  py::class_<FiniteAlgebra>(m, "Algebra")
      .def(py::init([](const std::string& json) { return from_text(json, io::algebra_from_json); }), py::arg("json"))
      .def_property_readonly("size", &FiniteAlgebra::size)
      .def("apply", [](const FiniteAlgebra& a, const std::string& op, const Tuple& args) { return a.apply(op, args); })
      .def("to_json", [](const FiniteAlgebra& a) { return text(a); })
      .def("__eq__", [](const FiniteAlgebra& a, const FiniteAlgebra& b) { return a == b; });

  py::class_<Mapping>(m, "Mapping")
      .def(py::init<std::size_t, std::size_t, std::vector<Element>>(), py::arg("src_size"), py::arg("dst_size"),
           py::arg("values"))
      .def_static("identity", &Mapping::identity)
      .def_property_readonly("values", &Mapping::values)
      .def("__call__", &Mapping::operator())
      .def("__eq__", [](const Mapping& a, const Mapping& b) { return a == b; });

  py::class_<MultiMap>(m, "MultiMap")
      .def(py::init<std::vector<std::size_t>, std::size_t, std::vector<Element>>(), py::arg("src_sizes"),
           py::arg("dst_size"), py::arg("values"))
      .def_property_readonly("values", &MultiMap::values)
      .def_property_readonly("src_sizes", &MultiMap::src_sizes)
      .def("__call__", [](const MultiMap& f, const Tuple& t) { return f(t); })
      .def("to_json", [](const MultiMap& f) { return text(f); });

  py::class_<Representation>(m, "Representation")
      .def(py::init([](const std::string& json) { return from_text(json, io::representation_from_json); }),
           py::arg("json"))
      .def_property_readonly("carrier", &Representation::carrier)
      .def_property_readonly("actor", &Representation::actor)
      .def("action", &Representation::action)
      .def("to_json", [](const Representation& r) { return text(r); })
      .def("__eq__", [](const Representation& a, const Representation& b) { return a == b; });

  py::class_<Congruence>(m, "Congruence")
      .def_static("from_classes", &Congruence::from_classes)
      .def_property_readonly("class_count", &Congruence::class_count)
      .def("classes", &Congruence::classes)
      .def("representative", &Congruence::representative);

  py::class_<RepMorphism>(m, "RepMorphism").def_readonly("r", &RepMorphism::r).def_readonly("R", &RepMorphism::R);

  py::class_<TensorResult>(m, "TensorResult")
      .def_property_readonly("complete", &TensorResult::complete)
      .def_property_readonly("quotient", [](const TensorResult& t) { return t.quotient; })
      .def_property_readonly("induced", [](const TensorResult& t) { return t.induced; })
      .def_readonly("gen_map", &TensorResult::gen_map)
      .def_property_readonly("class_terms",
                             [](const TensorResult& t) {
                               std::vector<std::string> out;
                               for (const auto& term : t.class_terms) out.push_back(to_string(term));
                               return out;
                             })
      .def("to_json", [](const TensorResult& t) { return text(t); });

  m.def("cyclic_group", &fixtures::cyclic_group);
  m.def("scalar_representation", &fixtures::scalar_representation);
  m.def("ring_representation", &fixtures::ring_representation);
  m.def("multiplication_map", &fixtures::multiplication_map);
  m.def("projection_map", [](const std::vector<std::size_t>& sizes, std::size_t slot) {
    return fixtures::projection_map(sizes, slot);
  });

  m.def("validate_algebra", [](const FiniteAlgebra& a) {
    std::vector<std::pair<std::string, Tuple>> out;
    for (const auto& v : validate_algebra(a).violations) out.emplace_back(v.op, v.args);
    return out;
  });
  m.def("is_homomorphism", [](const Mapping& h, const FiniteAlgebra& src, const FiniteAlgebra& dst) {
    return is_homomorphism(h, src, dst).ok;
  });
  m.def("endomorphisms", [](const FiniteAlgebra& a) { return endomorphisms(a); });
  m.def(
      "congruence_closure",
      [](const FiniteAlgebra& a, const std::vector<ElementPair>& pairs, const std::vector<Mapping>& maps) {
        return congruence_closure(a, pairs, maps);
      },
      py::arg("algebra"), py::arg("pairs"), py::arg("transformations") = std::vector<Mapping>{});
  m.def("quotient_algebra", [](const FiniteAlgebra& a, const Congruence& c) {
    Quotient q = quotient_algebra(a, c);
    return py::make_tuple(q.algebra, q.projection);
  });
  m.def("quotient_representation", [](const Representation& r, const Congruence& c) {
    QuotientRepresentation q = quotient_representation(r, c);
    return py::make_tuple(q.rep, q.projection);
  });
  m.def("is_reduced_polymorphism", [](const MultiMap& R, const std::vector<Representation>& reps,
                                      const Representation& target) {
    return is_reduced_polymorphism(R, reps, target).ok;
  });
  m.def("is_polymorphism", [](const MultiMap& r, const MultiMap& R, const std::vector<Representation>& reps,
                              const Representation& target) { return is_polymorphism(r, R, reps, target).ok; });
  m.def("check_action_commutation", [](const MultiMap& R, const std::vector<Representation>& reps,
                                       const Representation& target) {
    return check_action_commutation(R, reps, target).ok;
  });
  m.def(
      "tensor_product",
      [](const std::vector<Representation>& reps, std::size_t depth, std::size_t classes) {
        TensorBudgets b;
        b.depth = depth;
        b.classes = classes;
        return tensor_product(reps, b);
      },
      py::arg("reps"), py::arg("depth") = TensorBudgets{}.depth, py::arg("classes") = TensorBudgets{}.classes);
  m.def("tensor_element", [](const TensorResult& t, const Tuple& tuple) { return tensor_element(t, tuple); });
  m.def("factor_polymorphism", &factor_polymorphism);
  m.def(
      "verify_universal_property",
      [](const TensorResult& t, std::size_t bound) {
        const UniversalReport u = verify_universal_property(t, t.factors, bound);
        py::dict d;
        d["ok"] = u.ok();
        d["targets"] = u.targets;
        d["reduced_polymorphisms"] = u.reduced_polymorphisms;
        d["unique"] = u.unique;
        d["counterexamples"] = u.counterexamples;
        return d;
      },
      py::arg("result"), py::arg("bound"));
  m.def("load_tensor_result", [](const std::string& json) { return from_text(json, io::tensor_result_from_json); });
}
