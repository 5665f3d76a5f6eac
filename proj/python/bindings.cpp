#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "z2mem/cli.hpp"
#include "z2mem/eigensolve.hpp"
#include "z2mem/errors.hpp"
#include "z2mem/macroscopicity.hpp"
#include "z2mem/pauli.hpp"
#include "z2mem/rvb.hpp"
#include "z2mem/tfim.hpp"
#include "z2mem/thermal.hpp"

namespace py = pybind11;
using namespace z2mem;

namespace {

using ComplexArray = py::array_t<Complex, py::array::c_style | py::array::forcecast>;

StateVector state_from_array(int n_sites, const ComplexArray& amps) {
  if (amps.ndim() != 1) throw DomainError("amplitudes must be one-dimensional");
  const Complex* data = amps.data();
  return StateVector(n_sites, std::vector<Complex>(data, data + amps.size()));
}

py::array_t<Complex> state_to_array(const StateVector& s) {
  py::array_t<Complex> out(static_cast<py::ssize_t>(s.dim()));
  std::copy(s.amplitudes().begin(), s.amplitudes().end(), out.mutable_data());
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact-diagonalization toolkit for the periodic transverse-field Ising chain";
  m.attr("__version__") = Z2MEM_VERSION;

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ContractError>(m, "ContractError", PyExc_ValueError);
  py::register_exception<CapabilityError>(m, "CapabilityError", PyExc_RuntimeError);
  py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);

  py::enum_<PauliAxis>(m, "PauliAxis")
      .value("X", PauliAxis::X)
      .value("Y", PauliAxis::Y)
      .value("Z", PauliAxis::Z);

  py::class_<StateVector>(m, "StateVector")
      .def(py::init(&state_from_array), py::arg("n_sites"), py::arg("amplitudes"))
      .def_static("basis", &StateVector::basis, py::arg("n_sites"), py::arg("index"))
      .def_property_readonly("n_sites", &StateVector::n_sites)
      .def_property_readonly("dim", &StateVector::dim)
      .def_property_readonly("amplitudes", &state_to_array)
      .def("norm", &StateVector::norm)
      .def("inner", &StateVector::inner, py::arg("other"));

  py::class_<AdditiveOperator>(m, "AdditiveOperator")
      .def_static("uniform", &AdditiveOperator::uniform)
      .def_static("staggered", &AdditiveOperator::staggered)
      .def_property_readonly("n_sites", &AdditiveOperator::n_sites)
      .def("coefficient", &AdditiveOperator::coefficient)
      .def("weight", &AdditiveOperator::weight);

  m.def("apply_pauli", &apply_pauli, py::arg("state"), py::arg("axis"), py::arg("site"));
  m.def("expectation", &expectation, py::arg("state"), py::arg("axis"), py::arg("site"));
  m.def("two_point", &two_point);
  m.def("additive_variance", &additive_variance, py::arg("state"), py::arg("op"));
  m.def("magnetization_z", &magnetization_z);
  m.def("ghz_state", &ghz_state);

  py::class_<TfimHamiltonian>(m, "TfimHamiltonian")
      .def(py::init<int, double>(), py::arg("n_sites"), py::arg("lambda_"))
      .def_property_readonly("n_sites", &TfimHamiltonian::n_sites)
      .def_property_readonly("lambda_", &TfimHamiltonian::lambda)
      .def("apply", py::overload_cast<const StateVector&>(&TfimHamiltonian::apply, py::const_))
      .def("energy", &TfimHamiltonian::energy)
      .def("dense", &TfimHamiltonian::dense);
  m.def("build_tfim", &build_tfim, py::arg("n"), py::arg("lambda_"));
  m.def("apply_global_flip", &apply_global_flip);
  m.def("global_flip_expectation", &global_flip_expectation);

  py::class_<StabilizerReport>(m, "StabilizerReport")
      .def_readonly("n_sites", &StabilizerReport::n_sites)
      .def_readonly("code_dimension", &StabilizerReport::code_dimension)
      .def("max_residual", &StabilizerReport::max_residual);
  m.def("stabilizer_check", &stabilizer_check, py::arg("n"));

  py::class_<EigenPairs>(m, "EigenPairs")
      .def_readonly("eigenvalues", &EigenPairs::eigenvalues)
      .def_readonly("eigenvectors", &EigenPairs::eigenvectors)
      .def_readonly("residuals", &EigenPairs::residuals)
      .def_readonly("parities", &EigenPairs::parities)
      .def_readonly("applications", &EigenPairs::applications);
  m.def("lowest_eigenpairs",
        py::overload_cast<const TfimHamiltonian&, int, double>(&lowest_eigenpairs), py::arg("h"),
        py::arg("k"), py::arg("tol") = 1e-10);

  py::class_<FullSpectrum>(m, "FullSpectrum")
      .def_readonly("n_sites", &FullSpectrum::n_sites)
      .def_readonly("eigenvalues", &FullSpectrum::eigenvalues)
      .def_readonly("eigenvectors", &FullSpectrum::eigenvectors);
  m.def("full_spectrum", &full_spectrum, py::arg("h"), py::arg("keep_vectors") = true);

  py::class_<GapPoint>(m, "GapPoint")
      .def_readonly("n", &GapPoint::n)
      .def_readonly("e0", &GapPoint::e0)
      .def_readonly("e1", &GapPoint::e1)
      .def_readonly("gap", &GapPoint::gap);
  m.def("gap_scan", &gap_scan, py::arg("lambda_"), py::arg("n_min"), py::arg("n_max"),
        py::arg("threads") = 1);
  m.def("superposed_state", &superposed_state, py::arg("e0"), py::arg("e1"));

  py::enum_<CorrelationKind>(m, "CorrelationKind")
      .value("Vcm", CorrelationKind::Vcm)
      .value("W", CorrelationKind::W);
  py::class_<CorrelationMatrix>(m, "CorrelationMatrix")
      .def_readonly("n_sites", &CorrelationMatrix::n_sites)
      .def_readonly("kind", &CorrelationMatrix::kind)
      .def_readonly("entries", &CorrelationMatrix::entries)
      .def_readonly("eigenvalues", &CorrelationMatrix::eigenvalues)
      .def_readonly("principal_vectors", &CorrelationMatrix::principal_vectors)
      .def_property_readonly("e1", &CorrelationMatrix::e1)
      .def_property_readonly("e2", &CorrelationMatrix::e2);
  m.def("build_vcm", &build_vcm, py::arg("state"));

  py::enum_<FitModel>(m, "FitModel")
      .value("PowerLaw", FitModel::PowerLaw)
      .value("Exponential", FitModel::Exponential);
  py::class_<ScalingFit>(m, "ScalingFit")
      .def_readonly("slope", &ScalingFit::slope)
      .def_readonly("intercept", &ScalingFit::intercept)
      .def_readonly("r_squared", &ScalingFit::r_squared)
      .def("predict", &ScalingFit::predict);
  m.def(
      "fit_scaling",
      [](const std::vector<double>& xs, const std::vector<double>& ys, FitModel model) {
        return fit_scaling(xs, ys, model);
      },
      py::arg("xs"), py::arg("ys"), py::arg("model"));

  py::class_<SpectrumPoint>(m, "SpectrumPoint")
      .def_readonly("n", &SpectrumPoint::n)
      .def_readonly("e1", &SpectrumPoint::e1)
      .def_readonly("e2", &SpectrumPoint::e2)
      .def_readonly("ground_energy", &SpectrumPoint::ground_energy);
  m.def("vcm_scan", &vcm_scan, py::arg("lambda_"), py::arg("n_min") = 6, py::arg("n_max") = 13,
        py::arg("threads") = 1);

  py::class_<FluctuationOperator>(m, "FluctuationOperator")
      .def_readonly("op", &FluctuationOperator::op)
      .def_readonly("ambiguous", &FluctuationOperator::ambiguous)
      .def_readonly("z_weight_fraction", &FluctuationOperator::z_weight_fraction)
      .def_readonly("imaginary_residual", &FluctuationOperator::imaginary_residual);
  m.def("max_fluctuation_operator", &max_fluctuation_operator, py::arg("matrix"));

  py::class_<MzDistribution>(m, "MzDistribution")
      .def_readonly("support", &MzDistribution::support)
      .def_readonly("probabilities", &MzDistribution::probabilities)
      .def("probability", &MzDistribution::probability)
      .def("mean", &MzDistribution::mean)
      .def("asymmetry", &MzDistribution::asymmetry)
      .def("positive_weight", &MzDistribution::positive_weight);
  m.def("mz_distribution", &mz_distribution, py::arg("state"));

  py::class_<GibbsState>(m, "GibbsState")
      .def_readonly("n_sites", &GibbsState::n_sites)
      .def_readonly("kT", &GibbsState::kT)
      .def_readonly("rho", &GibbsState::rho)
      .def_readonly("trace_correction", &GibbsState::trace_correction);
  m.def("gibbs_state", py::overload_cast<const TfimHamiltonian&, double>(&gibbs_state),
        py::arg("h"), py::arg("kT"));
  m.def("pure_density", &pure_density, py::arg("state"));
  m.def("build_w_matrix", &build_w_matrix, py::arg("state"));
  py::class_<ThermalPoint>(m, "ThermalPoint")
      .def_readonly("kT", &ThermalPoint::kT)
      .def_readonly("e1", &ThermalPoint::e1)
      .def_readonly("energy", &ThermalPoint::energy);
  m.def(
      "thermal_scan",
      [](double lambda, int n, const std::vector<double>& grid, int threads) {
        return thermal_scan(lambda, n, grid, threads);
      },
      py::arg("lambda_"), py::arg("n"), py::arg("kT_grid"), py::arg("threads") = 1);
  m.def("log_grid", &log_grid, py::arg("lo"), py::arg("hi"), py::arg("points"));

  m.def("build_rvb", &build_rvb, py::arg("n"));
  m.def("vb_overlap_closed_form", &vb_overlap_closed_form, py::arg("n"));
  py::class_<IdentityCheck>(m, "IdentityCheck")
      .def_readonly("name", &IdentityCheck::name)
      .def_readonly("value", &IdentityCheck::value)
      .def_readonly("expected", &IdentityCheck::expected)
      .def_readonly("passed", &IdentityCheck::passed);
  m.def("rvb_identity_checks", &rvb_identity_checks, py::arg("n"));

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command line in-process; returns (exit_code, stdout, stderr).");
}
