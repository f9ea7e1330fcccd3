#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "isokit/boxfree.hpp"
#include "isokit/cli.hpp"
#include "isokit/formulas.hpp"
#include "isokit/grassmann.hpp"
#include "isokit/io.hpp"
#include "isokit/isotropy.hpp"
#include "isokit/rank.hpp"

namespace py = pybind11;
using namespace isokit;

namespace {

py::object to_py(const BigInt& v) { return py::module_::import("builtins").attr("int")(v.str()); }

py::object to_py(const io::Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

io::Json from_py(const py::object& o) {
  return io::Json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

Tensor tensor_arg(const py::object& o) {
  auto any = io::tensor_from_json(from_py(o));
  if (auto* t = std::get_if<Tensor>(&any)) return *t;
  return expand(std::get<AltTensor>(any));
}

AltTensor alt_arg(const py::object& o) {
  auto any = io::tensor_from_json(from_py(o));
  if (auto* t = std::get_if<AltTensor>(&any)) return *t;
  throw PreconditionError("expected an alternating tensor");
}

py::dict evaluation(const formulas::Evaluation& e) {
  py::dict d;
  d["value"] = to_py(e.value);
  d["branch"] = e.branch;
  return d;
}

}  // namespace

PYBIND11_MODULE(_isokit, m) {
  m.doc() = "Isotropic subspaces of multilinear maps over finite fields";

  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);
  py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_AssertionError);

  py::class_<Field>(m, "Field")
      .def_static("make", &Field::make, py::arg("p"), py::arg("e") = 1)
      .def_static("of_order", &Field::of_order, py::arg("q"))
      .def_property_readonly("order", &Field::order)
      .def_property_readonly("characteristic", &Field::characteristic)
      .def_property_readonly("degree", &Field::degree)
      .def_property_readonly("modulus", [](const Field& f) { return f.spec().modulus; })
      .def("add", &Field::add)
      .def("sub", &Field::sub)
      .def("neg", &Field::neg)
      .def("mul", &Field::mul)
      .def("inv", &Field::inv)
      .def("pow", &Field::pow)
      .def("elements", &Field::elements)
      .def("embed", [](const Field& f, Elem a, const Field& target) { return embed(a, f, target); })
      .def("__repr__", [](const Field& f) { return "Field(q=" + std::to_string(f.order()) + ")"; });

  m.def(
      "random_tensor",
      [](std::uint64_t q, std::size_t n, std::size_t d, std::size_t mm, std::uint64_t seed, const std::string& kind) {
        const auto f = Field::of_order(q);
        if (kind == "alt") return to_py(io::to_json(random_alt_tensor(f, n, d, mm, seed)));
        if (kind != "hom") throw PreconditionError("kind must be hom or alt");
        return to_py(io::to_json(random_tensor(f, n, d, mm, seed)));
      },
      py::arg("q"), py::arg("n"), py::arg("d"), py::arg("m"), py::arg("seed") = 0, py::arg("kind") = "hom");

  m.def("gauss_binom", [](std::uint64_t n, std::uint64_t k, std::uint64_t q) { return to_py(gauss_binom(n, k, q)); });
  m.def("grassmannian", [](std::uint64_t q, std::size_t n, std::size_t k) {
    io::Json out = io::Json::array();
    for (const auto& s : enumerate_grassmannian(Field::of_order(q), n, k)) out.push_back(io::to_json(s));
    return to_py(out);
  });
  m.def("sigma_counts", [](std::uint64_t q, std::size_t n, std::size_t k) {
    py::list out;
    for (const auto& c : sigma_counts(Field::of_order(q), n, k)) out.append(to_py(c));
    return out;
  });

  m.def("alpha_alt", [](const py::object& t) { return to_py(io::to_json(alpha_alt(alt_arg(t)))); });
  m.def("count_DT", [](const py::object& t) { return count_DT(tensor_arg(t)); });
  m.def("zero_count", [](const py::object& t) { return to_py(zero_count(tensor_arg(t))); });
  m.def("analytic_rank", [](const py::object& t) { return to_py(io::to_json(analytic_rank(tensor_arg(t)))); });
  m.def("certificate", [](const py::object& t) { return to_py(io::to_json(delete_and_verify(tensor_arg(t)).certificate)); });

  m.def("k0", &formulas::k0);
  m.def("alpha_alt_closed", [](std::int64_t n, std::int64_t d, std::int64_t mm, bool cz) {
    return evaluation(formulas::alpha_alt_closed(n, d, mm, cz));
  }, py::arg("n"), py::arg("d"), py::arg("m"), py::arg("char_zero") = false);
  m.def("fp_number", [](std::int64_t d, std::int64_t mm, std::int64_t k, bool cz) {
    return evaluation(formulas::fp_number(d, mm, k, cz));
  }, py::arg("d"), py::arg("m"), py::arg("k"), py::arg("char_zero") = false);
  m.def("turan_number", [](std::int64_t n, std::int64_t d, std::int64_t k, bool cz) {
    return evaluation(formulas::turan_number(n, d, k, cz));
  }, py::arg("n"), py::arg("d"), py::arg("k"), py::arg("char_zero") = false);
  m.def("gq_number", [](std::int64_t n, std::int64_t d) { return to_py(formulas::gq_number(n, d)); });

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = 0;
        {
          py::gil_scoped_release release;
          code = run_cli(args, out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
