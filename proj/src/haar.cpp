#include "randtherm/haar.hpp"

#include <cmath>

namespace randtherm {

MatrixXcd sample_haar_unitary(long long d, std::uint64_t seed) {
  if (d < 1) throw std::domain_error("haar sampler: d must be >= 1");
  GaussianRng rng(seed);
  MatrixXcd a(d, d);
  for (long long i = 0; i < d; ++i)
    for (long long j = 0; j < d; ++j) {
      const double re = rng.gaussian();
      const double im = rng.gaussian();
      a(i, j) = Complex(re, im);
    }
  Eigen::HouseholderQR<MatrixXcd> qr(a);
  MatrixXcd q = qr.householderQ() * MatrixXcd::Identity(d, d);
  const auto r_diag = qr.matrixQR().diagonal();
  for (long long j = 0; j < d; ++j) {
    const Complex r = r_diag(j);
    const double mag = std::abs(r);
    if (mag > 0.0) q.col(j) *= r / mag;
  }
  return q;
}

MatrixXcd DiagonalizedHamiltonian::materialize() const {
  const long long d = dim();
  MatrixXcd out(d, d);
  VectorXd e = Eigen::Map<const VectorXd>(energies.energies.data(), d);
  out.noalias() = basis * e.asDiagonal() * basis.adjoint();
  return out;
}

void DiagonalizedHamiltonian::validate() const {
  energies.validate();
  if (basis.rows() != basis.cols()) throw std::invalid_argument("hamiltonian: U not square");
  if (energies.dim() != dim())
    throw std::invalid_argument("hamiltonian: spectrum length != dimension");
  MatrixXcd g = basis.adjoint() * basis - MatrixXcd::Identity(dim(), dim());
  if (g.cwiseAbs().maxCoeff() > kHermitianTol)
    throw std::invalid_argument("hamiltonian: U not unitary within 1e-10");
}

DiagonalizedHamiltonian randomized_hamiltonian(const SpectrumTable& spectrum,
                                               std::uint64_t seed) {
  spectrum.validate();
  DiagonalizedHamiltonian h;
  h.basis = sample_haar_unitary(spectrum.dim(), seed);
  h.energies = spectrum;
  return h;
}

}  // namespace randtherm
