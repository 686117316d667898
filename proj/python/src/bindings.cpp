#include <optional>
#include <utility>
#include <vector>

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ellspec/ellipse.hpp"
#include "ellspec/matform.hpp"
#include "ellspec/serialize.hpp"
#include "ellspec/spectrum.hpp"

namespace py = pybind11;
using namespace ellspec;

PYBIND11_MODULE(_core, m) {
  m.doc() = "elliptical decomposition of N-dimensional vector signals";

  py::class_<Sinusoid>(m, "Sinusoid")
      .def(py::init([](Vec direction, double omega, double phi) {
             return Sinusoid{std::move(direction), omega, phi};
           }),
           py::arg("direction"), py::arg("omega") = 1.0, py::arg("phi") = 0.0)
      .def_readwrite("direction", &Sinusoid::direction)
      .def_readwrite("omega", &Sinusoid::omega)
      .def_readwrite("phi", &Sinusoid::phi);

  py::class_<EllipseCS>(m, "EllipseCS")
      .def(py::init([](Vec c, Vec s, double omega) {
             return EllipseCS{std::move(c), std::move(s), omega};
           }),
           py::arg("c"), py::arg("s"), py::arg("omega") = 1.0)
      .def_readwrite("c", &EllipseCS::c)
      .def_readwrite("s", &EllipseCS::s)
      .def_readwrite("omega", &EllipseCS::omega);

  py::class_<EllipseAB>(m, "EllipseAB")
      .def(py::init([](Vec a, Vec b, double psi, double omega) {
             return EllipseAB{std::move(a), std::move(b), psi, omega};
           }),
           py::arg("a"), py::arg("b"), py::arg("psi") = 0.0,
           py::arg("omega") = 1.0)
      .def_readwrite("a", &EllipseAB::a)
      .def_readwrite("b", &EllipseAB::b)
      .def_readwrite("psi", &EllipseAB::psi)
      .def_readwrite("omega", &EllipseAB::omega);

  py::class_<VectorSignal>(m, "VectorSignal")
      .def(py::init([](Mat samples, std::optional<double> sample_interval) {
             return VectorSignal{std::move(samples), sample_interval};
           }),
           py::arg("samples"), py::arg("sample_interval") = std::nullopt)
      .def_readwrite("samples", &VectorSignal::samples)
      .def_readwrite("sample_interval", &VectorSignal::sample_interval);

  py::class_<SpectrumBin>(m, "SpectrumBin")
      .def(py::init([](std::size_t index, EllipseAB component) {
             return SpectrumBin{index, std::move(component)};
           }),
           py::arg("index"), py::arg("component"))
      .def_readwrite("index", &SpectrumBin::index)
      .def_readwrite("component", &SpectrumBin::component);

  py::class_<EllipseSpectrum>(m, "EllipseSpectrum")
      .def(py::init<>())
      .def_readwrite("n_samples", &EllipseSpectrum::n_samples)
      .def_readwrite("dim", &EllipseSpectrum::dim)
      .def_readwrite("dc", &EllipseSpectrum::dc)
      .def_readwrite("bins", &EllipseSpectrum::bins)
      .def_readwrite("nyquist", &EllipseSpectrum::nyquist)
      .def_readwrite("sample_interval", &EllipseSpectrum::sample_interval);

  py::class_<MatrixRoot>(m, "MatrixRoot")
      .def(py::init([](std::size_t dim, Mat matrix) {
             return MatrixRoot{dim, std::move(matrix)};
           }),
           py::arg("dim"), py::arg("matrix"))
      .def_readwrite("dim", &MatrixRoot::dim)
      .def_readwrite("matrix", &MatrixRoot::matrix);

  py::class_<PlanePair>(m, "PlanePair")
      .def(py::init([](Vec u, Vec v) {
             return PlanePair{std::move(u), std::move(v)};
           }),
           py::arg("u"), py::arg("v"))
      .def_readwrite("u", &PlanePair::u)
      .def_readwrite("v", &PlanePair::v);

  m.def(
      "eval_superposition",
      [](const std::vector<Sinusoid>& terms, double t, std::size_t dim) {
        return eval_superposition(terms, t, dim);
      },
      py::arg("terms"), py::arg("t"), py::arg("dim_if_empty") = 0);
  m.def(
      "cs_from_sinusoids",
      [](const std::vector<Sinusoid>& terms) {
        return cs_from_sinusoids(terms);
      },
      py::arg("terms"));
  m.def("eval_cs", &eval_cs, py::arg("e"), py::arg("t"));
  m.def("psi_from_cs", &psi_from_cs, py::arg("c"), py::arg("s"));
  m.def("ab_from_cs", &ab_from_cs, py::arg("e"));
  m.def("eval_ab", &eval_ab, py::arg("e"), py::arg("t"));
  m.def(
      "classify_polarization",
      [](const EllipseAB& e, double tol_rel, double tol_abs) {
        return std::string(to_string(
            classify_polarization(e, tol_rel, tol_abs).kind));
      },
      py::arg("e"), py::arg("tol_rel") = kClassifyTolRel,
      py::arg("tol_abs") = 0.0);
  m.def(
      "planarity_residual",
      [](const Mat& samples, const EllipseCS& e) {
        return planarity_residual(samples, e);
      },
      py::arg("samples"), py::arg("e"));

  m.def("unitary_dft", &unitary_dft, py::arg("x"));
  m.def("unitary_idft", &unitary_idft, py::arg("f"));
  m.def("ellipse_spectrum", &ellipse_spectrum, py::arg("signal"));
  m.def("synthesize_spectrum", &synthesize_spectrum, py::arg("spectrum"));
  m.def("spectrum_to_json", &spectrum_to_json, py::arg("spectrum"),
        py::arg("classify_tol_rel") = kClassifyTolRel);
  m.def("spectrum_from_json", &spectrum_from_json, py::arg("text"));

  m.def("root_residual", &root_residual, py::arg("matrix"));
  m.def("canonical_root", &canonical_root, py::arg("n"));
  m.def(
      "root_from_planes",
      [](const std::vector<PlanePair>& pairs) {
        return root_from_planes(pairs);
      },
      py::arg("pairs"));
  m.def("generalized_exp", &generalized_exp, py::arg("root"),
        py::arg("theta"));
  m.def("matrix_dft", &matrix_dft, py::arg("signal"), py::arg("root"));
  m.def("matrix_idft", &matrix_idft, py::arg("coeffs"), py::arg("root"));
}
