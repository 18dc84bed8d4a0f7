#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "randtherm/bounds.hpp"
#include "randtherm/dynamics.hpp"
#include "randtherm/experiments.hpp"
#include "randtherm/haar.hpp"
#include "randtherm/montecarlo.hpp"
#include "randtherm/partition.hpp"
#include "randtherm/spectral.hpp"

namespace py = pybind11;
using namespace randtherm;

namespace {

SpectrumTable table_of(const std::vector<double>& energies) {
  SpectrumTable t;
  t.energies = energies;
  t.validate();
  return t;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Quench simulations under fixed-spectrum random-basis Hamiltonians";

  m.def("sample_haar_unitary", &sample_haar_unitary, py::arg("d"), py::arg("seed"));

  m.def(
      "phi_direct",
      [](const std::vector<double>& energies, double t) {
        return phi_direct(table_of(energies), t);
      },
      py::arg("energies"), py::arg("t"));

  m.def(
      "phi_solvable_abs",
      [](const std::vector<double>& epsilons, double t) {
        return phi_solvable_abs(SolvableSpectrumSpec{epsilons}, t);
      },
      py::arg("epsilons"), py::arg("t"));

  m.def(
      "spectrum_from_solvable",
      [](const std::vector<double>& epsilons) {
        return spectrum_from_solvable(SolvableSpectrumSpec{epsilons}).energies;
      },
      py::arg("epsilons"));

  m.def(
      "sigma2_from_spectrum",
      [](const std::vector<double>& energies) {
        return sigma2_from_spectrum(table_of(energies)).sigma2;
      },
      py::arg("energies"));

  m.def(
      "expected_purity",
      [](long long dS, long long dB, Complex phi_t, Complex phi_2t) {
        return expected_purity(SubsystemSplit::leading(dS, dB), phi_t, phi_2t);
      },
      py::arg("dS"), py::arg("dB"), py::arg("phi_t"), py::arg("phi_2t"));

  m.def(
      "separable_purity_gap_bound",
      [](long long dS, long long dB, double phi_abs) {
        return separable_purity_gap_bound(SubsystemSplit::leading(dS, dB), phi_abs);
      },
      py::arg("dS"), py::arg("dB"), py::arg("phi_abs"));

  m.def(
      "separable_distance_bound",
      [](long long dS, long long dB, double phi_abs) {
        return separable_distance_bound(SubsystemSplit::leading(dS, dB), phi_abs);
      },
      py::arg("dS"), py::arg("dB"), py::arg("phi_abs"));

  m.def(
      "evolve",
      [](const MatrixXcd& basis, const std::vector<double>& energies, const MatrixXcd& rho0,
         double t) {
        DiagonalizedHamiltonian h{basis, table_of(energies)};
        return evolve(h, DensityMatrix::checked(rho0), t).matrix();
      },
      py::arg("basis"), py::arg("energies"), py::arg("rho0"), py::arg("t"));

  m.def(
      "partial_trace_B",
      [](const MatrixXcd& rho, long long dS, long long dB) {
        return partial_trace_B(DensityMatrix::checked(rho), SubsystemSplit::leading(dS, dB))
            .matrix();
      },
      py::arg("rho"), py::arg("dS"), py::arg("dB"));

  m.def(
      "trace_distance",
      [](const MatrixXcd& a, const MatrixXcd& b) { return trace_distance_raw(a, b); },
      py::arg("a"), py::arg("b"));

  m.def(
      "purity", [](const MatrixXcd& rho) { return purity_raw(rho); }, py::arg("rho"));

  m.def("l1_ball_count", &l1_ball_count, py::arg("D"), py::arg("r"));

  m.def(
      "lattice_constants",
      [](int D, long long M, long long R, double h) {
        const LatticeConstants c = lemma_constants(LatticeSpec{D, M, R}, h);
        py::dict out;
        out["beta_2r"] = c.beta_2r;
        out["beta_4r"] = c.beta_4r;
        out["c2"] = c.c2;
        out["c4"] = c.c4;
        out["x"] = c.x;
        out["a0_lemma"] = c.a0_lemma;
        out["b0_lemma"] = c.b0_lemma;
        out["a0_lattice"] = c.a0_lattice;
        out["b0_lattice"] = c.b0_lattice;
        out["b0_forecast"] = c.b0_forecast;
        return out;
      },
      py::arg("D"), py::arg("M"), py::arg("R"), py::arg("h"));

  m.def(
      "build_partition",
      [](int D, long long M, long long R) {
        const Partition p = build_partition(LatticeSpec{D, M, R});
        py::dict out;
        out["K"] = p.K;
        out["blocks"] = p.blocks;
        out["buffers"] = p.buffers;
        out["slab_width"] = p.slab_width;
        return out;
      },
      py::arg("D"), py::arg("M"), py::arg("R"));

  m.def(
      "estimate_purity",
      [](const std::vector<double>& energies, long long dS, long long dB, double t,
         long long n, std::uint64_t seed) {
        const SubsystemSplit split = SubsystemSplit::leading(dS, dB);
        const InitialState init = make_initial("product_basis", dS, dB, seed);
        const EstimatorResult r =
            estimate_purity(table_of(energies), split, init, t, n, SeedStream{seed});
        return py::make_tuple(r.mean, r.std_error, r.n_samples);
      },
      py::arg("energies"), py::arg("dS"), py::arg("dB"), py::arg("t"), py::arg("n"),
      py::arg("seed"));

  m.attr("__version__") = "0.1.0";
}
