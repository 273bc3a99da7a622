#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pdicke/exact.hpp"
#include "pdicke/metric.hpp"
#include "pdicke/model.hpp"
#include "pdicke/qpt.hpp"
#include "pdicke/spectral.hpp"

namespace py = pybind11;
using namespace pdicke;

namespace {

py::array_t<std::complex<double>> matrix_array(const ComplexMatrix& m) {
  py::array_t<std::complex<double>> out({m.rows(), m.cols()});
  auto buf = out.mutable_unchecked<2>();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t k = 0; k < m.cols(); ++k) buf(i, k) = m(i, k);
  return out;
}

py::array_t<double> real_array(const std::vector<double>& v) {
  py::array_t<double> out(static_cast<py::ssize_t>(v.size()));
  std::copy(v.begin(), v.end(), out.mutable_data());
  return out;
}

py::array_t<std::complex<double>> complex_array(const std::vector<complex>& v) {
  py::array_t<std::complex<double>> out(static_cast<py::ssize_t>(v.size()));
  std::copy(v.begin(), v.end(), out.mutable_data());
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "truncated spin-boson models with a diagonal similarity metric";

  py::register_exception<contract_error>(m, "ContractError", PyExc_ValueError);
  py::register_exception<validation_error>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<numerical_error>(m, "NumericalError", PyExc_ArithmeticError);

  py::class_<ModelParams>(m, "ModelParams")
      .def(py::init([](double omega, double omega0, double theta1, double theta2,
                       double alpha, double beta, double gamma, double delta,
                       double xi1, double xi2, double xi3, double j, int cutoff) {
             ModelParams p;
             p.omega = omega;
             p.omega0 = omega0;
             p.theta1 = theta1;
             p.theta2 = theta2;
             p.alpha = alpha;
             p.beta = beta;
             p.gamma = gamma;
             p.delta = delta;
             p.xi1 = xi1;
             p.xi2 = xi2;
             p.xi3 = xi3;
             p.j = j;
             p.cutoff = cutoff;
             return p;
           }),
           py::arg("omega") = 1.0, py::arg("omega0") = 1.0, py::arg("theta1") = 0.0,
           py::arg("theta2") = 0.0, py::arg("alpha") = 0.0, py::arg("beta") = 0.0,
           py::arg("gamma") = 0.0, py::arg("delta") = 0.0, py::arg("xi1") = 0.0,
           py::arg("xi2") = 0.0, py::arg("xi3") = 0.0, py::arg("j") = 0.5,
           py::arg("cutoff") = 16)
      .def_readwrite("omega", &ModelParams::omega)
      .def_readwrite("omega0", &ModelParams::omega0)
      .def_readwrite("theta1", &ModelParams::theta1)
      .def_readwrite("theta2", &ModelParams::theta2)
      .def_readwrite("alpha", &ModelParams::alpha)
      .def_readwrite("beta", &ModelParams::beta)
      .def_readwrite("gamma", &ModelParams::gamma)
      .def_readwrite("delta", &ModelParams::delta)
      .def_readwrite("xi1", &ModelParams::xi1)
      .def_readwrite("xi2", &ModelParams::xi2)
      .def_readwrite("xi3", &ModelParams::xi3)
      .def_readwrite("j", &ModelParams::j)
      .def_readwrite("cutoff", &ModelParams::cutoff);

  py::class_<ValidationReport>(m, "ValidationReport")
      .def_readonly("quasi_hermitian", &ValidationReport::quasi_hermitian)
      .def_readonly("positivity_ok", &ValidationReport::positivity_ok)
      .def_property_readonly(
          "case_tag", [](const ValidationReport& r) { return to_string(r.case_tag); })
      .def_readonly("violated_conditions", &ValidationReport::violated_conditions);

  py::class_<MetricFactors>(m, "MetricFactors")
      .def_readonly("c_boson", &MetricFactors::c_boson)
      .def_readonly("c_spin", &MetricFactors::c_spin)
      .def_property_readonly(
          "rho_diag", [](const MetricFactors& f) { return real_array(f.rho_diag); })
      .def_property_readonly(
          "eta_diag", [](const MetricFactors& f) { return real_array(f.eta_diag); });

  py::class_<SpectralComparison>(m, "SpectralComparison")
      .def_property_readonly("eigenvalues_h",
                             [](const SpectralComparison& c) {
                               return complex_array(c.spectrum_H.eigenvalues);
                             })
      .def_property_readonly("eigenvalues_image",
                             [](const SpectralComparison& c) {
                               return complex_array(c.spectrum_image.eigenvalues);
                             })
      .def_readonly("max_pairwise_gap", &SpectralComparison::max_pairwise_gap)
      .def_readonly("reality_defect", &SpectralComparison::reality_defect)
      .def_readonly("params_valid", &SpectralComparison::params_valid)
      .def_readonly("h_norm", &SpectralComparison::h_norm)
      .def_readonly("image_norm", &SpectralComparison::image_norm);

  py::class_<EigenSolution>(m, "EigenSolution")
      .def_property_readonly(
          "eigenvalues",
          [](const EigenSolution& s) { return real_array(s.eigenvalues); })
      .def_property_readonly(
          "states", [](const EigenSolution& s) { return matrix_array(s.states); })
      .def_readonly("parity", &EigenSolution::parity);

  py::class_<BogoliubovReduction>(m, "BogoliubovReduction")
      .def_readonly("phi", &BogoliubovReduction::phi)
      .def_readonly("theta_b", &BogoliubovReduction::theta_b)
      .def_readonly("delta", &BogoliubovReduction::delta)
      .def_readonly("omega_k", &BogoliubovReduction::omega_k)
      .def_readonly("omega_l", &BogoliubovReduction::omega_l)
      .def_readonly("shift", &BogoliubovReduction::shift)
      .def_readonly("omega0", &BogoliubovReduction::omega0);

  py::class_<TCBlockSolution>(m, "TCBlockSolution")
      .def_readonly("k_value", &TCBlockSolution::k_value)
      .def_property_readonly("eigenvalues", [](const TCBlockSolution& b) {
        return real_array(b.eigenvalues);
      });

  py::class_<CriticalData>(m, "CriticalData")
      .def_readonly("lambda1_c", &CriticalData::lambda1_c)
      .def_readonly("lambda2_c", &CriticalData::lambda2_c)
      .def_readonly("lambda3", &CriticalData::lambda3)
      .def_readonly("lambda4", &CriticalData::lambda4)
      .def_readonly("mu", &CriticalData::mu);

  py::class_<GeneralOrderParams>(m, "GeneralOrderParams")
      .def_readonly("jz_over_j", &GeneralOrderParams::jz_over_j)
      .def_readonly("n_over_j", &GeneralOrderParams::n_over_j)
      .def_readonly("mu", &GeneralOrderParams::mu);

  py::class_<ScanRecord>(m, "ScanRecord")
      .def_readonly("coupling", &ScanRecord::coupling)
      .def_readonly("j", &ScanRecord::j)
      .def_readonly("cutoff", &ScanRecord::cutoff)
      .def_readonly("jz_over_j", &ScanRecord::jz_over_j)
      .def_readonly("n_over_j", &ScanRecord::n_over_j)
      .def_readonly("e0_over_j", &ScanRecord::e0_over_j)
      .def_readonly("analytic_jz", &ScanRecord::analytic_jz)
      .def_readonly("analytic_n", &ScanRecord::analytic_n)
      .def_readonly("converged", &ScanRecord::converged)
      .def_readonly("error", &ScanRecord::error);

  py::class_<ConvergenceSettings>(m, "ConvergenceSettings")
      .def(py::init([](int min_cutoff, int max_cutoff, double tol) {
             return ConvergenceSettings{min_cutoff, max_cutoff, tol};
           }),
           py::arg("min_cutoff") = 16, py::arg("max_cutoff") = 512,
           py::arg("tol") = 1e-8)
      .def_readwrite("min_cutoff", &ConvergenceSettings::min_cutoff)
      .def_readwrite("max_cutoff", &ConvergenceSettings::max_cutoff)
      .def_readwrite("tol", &ConvergenceSettings::tol);

  py::class_<SweepSpec>(m, "SweepSpec")
      .def(py::init([](const std::string& param, double start, double stop, int steps,
                       const std::vector<double>& j_list, const ModelParams& base) {
             SweepSpec s;
             s.param = param;
             s.start = start;
             s.stop = stop;
             s.steps = steps;
             s.j_list = j_list;
             s.base = base;
             return s;
           }),
           py::arg("param") = "lambda2", py::arg("start") = 0.0, py::arg("stop") = 1.0,
           py::arg("steps") = 2, py::arg("j_list") = std::vector<double>{},
           py::arg("base") = ModelParams{})
      .def_readwrite("param", &SweepSpec::param)
      .def_readwrite("start", &SweepSpec::start)
      .def_readwrite("stop", &SweepSpec::stop)
      .def_readwrite("steps", &SweepSpec::steps)
      .def_readwrite("j_list", &SweepSpec::j_list)
      .def_readwrite("base", &SweepSpec::base);

  m.def("validate", &validate, py::arg("params"));
  m.def("standard_dicke", &standard_dicke, py::arg("lambda2"), py::arg("j"),
        py::arg("cutoff"), py::arg("omega") = 1.0, py::arg("omega0") = 1.0);
  m.def("nonhermitian_dicke", &nonhermitian_dicke, py::arg("alpha"), py::arg("beta"),
        py::arg("sign"), py::arg("j"), py::arg("cutoff"), py::arg("omega") = 1.0,
        py::arg("omega0") = 1.0);
  m.def("tavis_cummings", &tavis_cummings, py::arg("alpha"), py::arg("beta"),
        py::arg("j"), py::arg("cutoff"), py::arg("omega") = 1.0,
        py::arg("omega0") = 1.0);
  m.def("jaynes_cummings", &jaynes_cummings, py::arg("alpha"), py::arg("beta"),
        py::arg("cutoff"), py::arg("omega") = 1.0, py::arg("omega0") = 1.0);
  m.def("swanson", &swanson, py::arg("omega"), py::arg("theta1"), py::arg("theta2"),
        py::arg("xi1"), py::arg("cutoff"));
  m.def("hermitian_dicke", &hermitian_dicke, py::arg("omega"), py::arg("omega0"),
        py::arg("theta"), py::arg("g_rot"), py::arg("g_cr"), py::arg("j"),
        py::arg("cutoff"));

  m.def(
      "build_hamiltonian",
      [](const ModelParams& p) { return matrix_array(build_H(p, basis_for(p))); },
      py::arg("params"), "dense non-hermitian Hamiltonian on the truncated basis");
  m.def(
      "build_image",
      [](const ModelParams& p) { return matrix_array(build_H_image(p, basis_for(p))); },
      py::arg("params"), "hermitian similarity image rho H rho^-1");
  m.def(
      "metric_factors",
      [](const ModelParams& p) { return build_metric(p, basis_for(p)); },
      py::arg("params"));
  m.def(
      "pseudo_hermiticity_residual",
      [](const ModelParams& p) {
        const SpinBosonBasis basis = basis_for(p);
        return pseudo_hermiticity_residual(build_metric(p, basis), build_H(p, basis));
      },
      py::arg("params"), "relative max-norm defect of eta H - H^dag eta");

  m.def("compare_spectra", &compare_spectra, py::arg("params"),
        py::call_guard<py::gil_scoped_release>());
  m.def("solve_eigensystem", &solve_eigensystem, py::arg("params"),
        py::call_guard<py::gil_scoped_release>());

  m.def("reduce", &reduce, py::arg("params"));
  m.def("trivial_reduction", &trivial_reduction, py::arg("params"));
  m.def("with_tc_constraint", &with_tc_constraint, py::arg("params"));
  m.def("exact_spectrum", &exact_spectrum, py::arg("reduction"), py::arg("j"),
        py::arg("k_max"));
  m.def(
      "flatten_spectrum",
      [](const std::vector<TCBlockSolution>& blocks) {
        return real_array(flatten_spectrum(blocks));
      },
      py::arg("blocks"));
  m.def(
      "swanson_spectrum",
      [](double omega, double theta1, double theta2, int n_max) {
        return real_array(swanson_spectrum(omega, theta1, theta2, n_max));
      },
      py::arg("omega"), py::arg("theta1"), py::arg("theta2"), py::arg("n_max"));

  m.def("critical_data", &critical_data, py::arg("params"));
  m.def(
      "analytic_order_params_tc",
      [](const BogoliubovReduction& red, double omega0, double lambda1) {
        const OrderParams o = analytic_order_params_tc(red, omega0, lambda1);
        return py::make_tuple(o.jz_over_j, o.n_over_j);
      },
      py::arg("reduction"), py::arg("omega0"), py::arg("lambda1"));
  m.def(
      "analytic_order_params_dicke",
      [](double omega, double omega0, double lambda2) {
        const OrderParams o = analytic_order_params_dicke(omega, omega0, lambda2);
        return py::make_tuple(o.jz_over_j, o.n_over_j);
      },
      py::arg("omega"), py::arg("omega0"), py::arg("lambda2"));
  m.def("analytic_order_params_general", &analytic_order_params_general,
        py::arg("params"));
  m.def("finite_j_order_params", &finite_j_order_params, py::arg("params"),
        py::arg("settings") = ConvergenceSettings{},
        py::call_guard<py::gil_scoped_release>());
  m.def("scan", &scan, py::arg("sweep"), py::arg("settings") = ConvergenceSettings{},
        py::call_guard<py::gil_scoped_release>());
}
