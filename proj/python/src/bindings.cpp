#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "nilschouten/algebra_file.hpp"
#include "nilschouten/catalog.hpp"
#include "nilschouten/curvature.hpp"
#include "nilschouten/golden.hpp"
#include "nilschouten/soliton.hpp"
#include "nilschouten/verification.hpp"

namespace py = pybind11;
namespace ns = nilschouten;

namespace {

template <typename T>
std::vector<std::vector<std::string>> rows(const ns::Matrix<T>& m) {
  std::vector<std::vector<std::string>> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i].push_back(m(i, j).to_string());
  return out;
}

// Samples arrive either as "a=1,b=sqrt(2)" or as a dict of name -> value text.
ns::Sample to_sample(const py::object& obj) {
  if (obj.is_none()) return {};
  if (py::isinstance<py::str>(obj)) return ns::parse_sample_assignments(obj.cast<std::string>());
  ns::Sample sample;
  for (auto [key, value] : obj.cast<py::dict>())
    sample[py::str(key).cast<std::string>()] = ns::Surd::parse(py::str(value).cast<std::string>());
  return sample;
}

py::dict verdict_dict(const ns::SolitonVerdict& v) {
  py::dict d;
  d["feasible"] = v.feasible();
  d["mu"] = v.mu;
  d["mu_exact"] = v.exact_mu ? py::object(py::str(v.exact_mu->to_string())) : py::none();
  d["residual"] = v.residual_norm;
  if (v.exact_witness) d["witness"] = rows(*v.exact_witness);
  else if (v.witness) {
    std::vector<std::vector<double>> w(v.witness->rows());
    for (std::size_t i = 0; i < w.size(); ++i)
      for (std::size_t j = 0; j < v.witness->cols(); ++j) w[i].push_back((*v.witness)(i, j));
    d["witness"] = w;
  } else {
    d["witness"] = py::none();
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  static py::exception<ns::Error> error(m, "Error", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ns::Error& e) {
      py::set_error(error, e.what());
    }
  });

  py::class_<ns::MetricLieAlgebra>(m, "Algebra")
      .def_static("builtin", [](const std::string& id) { return ns::get_algebra(id); }, py::arg("id"))
      .def_static("from_text", [](const std::string& text) { return ns::parse_algebra_file(text).algebra; },
                  py::arg("text"))
      .def_property_readonly("label", &ns::MetricLieAlgebra::label)
      .def_property_readonly("dim", &ns::MetricLieAlgebra::dim)
      .def_property_readonly("parameters", &ns::MetricLieAlgebra::parameters)
      .def("to_text", [](const ns::MetricLieAlgebra& g) { return ns::print_algebra_file(g); })
      .def("ricci_tensor",
           [](const ns::MetricLieAlgebra& g, bool general) {
             return rows(general ? ns::ricci_tensor_general(g) : ns::ricci_tensor_nilpotent(g));
           },
           py::arg("general") = false)
      .def("ricci_operator", [](const ns::MetricLieAlgebra& g) { return rows(ns::ricci_operator(g)); })
      .def("scalar_curvature", [](const ns::MetricLieAlgebra& g) { return ns::scalar_curvature(g).to_string(); })
      .def("obstruction_system",
           [](const ns::MetricLieAlgebra& g) {
             std::vector<std::string> out;
             for (const auto& gen : ns::obstruction_system(g).generators) out.push_back(gen.polynomial.to_string());
             return out;
           })
      .def("check",
           [](const ns::MetricLieAlgebra& g, const py::object& sample, bool floating) {
             return verdict_dict(ns::numeric_soliton_oracle(
                 g, to_sample(sample), floating ? ns::OracleMode::floating : ns::OracleMode::exact));
           },
           py::arg("sample") = py::none(), py::arg("floating") = false)
      .def("nilsoliton_check",
           [](const ns::MetricLieAlgebra& g, const py::object& sample) {
             return verdict_dict(ns::nilsoliton_check(g, to_sample(sample)));
           },
           py::arg("sample") = py::none())
      .def("__eq__", [](const ns::MetricLieAlgebra& a, const ns::MetricLieAlgebra& b) { return a == b; })
      .def("__repr__", [](const ns::MetricLieAlgebra& g) { return "<Algebra " + g.label() + ">"; });

  m.def("algebra_ids", [] {
    std::vector<std::string> ids;
    for (auto id : ns::all_algebra_ids()) ids.emplace_back(ns::to_string(id));
    return ids;
  });

  m.def("verdict", [](const std::string& id) {
    return std::string(ns::to_string(ns::classification_entry(ns::parse_algebra_id(id)).verdict));
  });

  m.def("verify_paper",
        [](std::uint64_t seed, std::size_t samples, std::optional<std::filesystem::path> golden_dir, bool floating) {
          py::gil_scoped_release release;
          auto report = ns::verify_paper(seed, samples, golden_dir.value_or(ns::default_golden_dir()),
                                         floating ? ns::OracleMode::floating : ns::OracleMode::exact);
          py::gil_scoped_acquire acquire;
          py::dict d;
          d["passed"] = report.passed();
          d["summary"] = report.summary();
          d["porcelain"] = report.porcelain;
          d["problems"] = report.problems;
          return d;
        },
        py::arg("seed") = 7, py::arg("samples") = 50, py::arg("golden_dir") = py::none(),
        py::arg("floating") = false);
}
