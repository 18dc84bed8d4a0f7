#pragma once

#include "randtherm/common.hpp"
#include "randtherm/model.hpp"
#include "randtherm/seeds.hpp"

namespace randtherm {

// Haar-distributed d x d unitary. A Ginibre matrix is QR-factorized and each
// column of Q is multiplied by the phase that makes the corresponding
// diagonal entry of R real positive; without that phase fix the distribution
// is not Haar.
MatrixXcd sample_haar_unitary(long long d, std::uint64_t seed);

// H = U diag(E) U^dagger held in factored form.
struct DiagonalizedHamiltonian {
  MatrixXcd basis;         // U, columns are eigenvectors
  SpectrumTable energies;  // E, in basis-column order

  long long dim() const { return static_cast<long long>(basis.rows()); }
  MatrixXcd materialize() const;
  void validate() const;  // unitarity of U within 1e-10, dimension match
};

// Fresh Haar basis paired with the given spectrum.
DiagonalizedHamiltonian randomized_hamiltonian(const SpectrumTable& spectrum,
                                               std::uint64_t seed);

}  // namespace randtherm
