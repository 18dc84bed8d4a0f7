#pragma once

#include <optional>
#include <vector>

#include "randtherm/common.hpp"
#include "randtherm/embedding.hpp"
#include "randtherm/model.hpp"

namespace randtherm {

// phi(t) = (1/d) sum_k e^{i t E_k}.
Complex phi_direct(const SpectrumTable& spectrum, double t);

// |phi(t)| = prod_k |cos(epsilon_k t / 2)| for free-mode spectra.
double phi_solvable_abs(const SolvableSpectrumSpec& spec, double t);

struct BlockMoments {
  int block_index = 0;
  long long block_size = 0;  // number of anchor sites
  double sigma_n2 = 0.0;     // <H_n^2> of the centered block Hamiltonian
  double moment4 = 0.0;      // <H_n^4>
};

struct MomentReport {
  double sigma2 = 0.0;
  double sigma_bar2 = 0.0;  // sigma2 / n_sites
  double mean_energy = 0.0;
  long long n_sites = 1;
  std::vector<BlockMoments> blocks;
  std::optional<double> cross_term_deficit;  // |sigma^2 - sigma_A^2|
};

// Variance of the energies under the uniform (maximally mixed) distribution.
MomentReport sigma2_from_spectrum(const SpectrumTable& spectrum);

// Full sorted eigenvalue list of sum_i h_i. Dense diagonalization runs on the
// union of the term supports; sites outside it contribute multiplicity only.
SpectrumTable exact_spectrum_local(const LocalHamiltonianSpec& spec);

// Sorted eigenvalues of the terms anchored at `anchors`, on the union of
// their supports (length = union dimension; the full spectrum repeats each
// value d/d_union times, which leaves phi and all normalized moments equal).
SpectrumTable anchored_subset_spectrum(const LocalHamiltonianSpec& spec,
                                       const std::vector<long long>& anchors);

// sigma^2 = sum over pairs within distance 2R of <h_i h_j> after centering,
// each pair contracted on the union of the two supports only. Scales to
// lattices far beyond dense diagonalization.
MomentReport sigma2_local_contraction(const LocalHamiltonianSpec& spec);

// Exact <H_n^2> and <H_n^4> for H_n = sum of centered terms anchored in
// `block`. Fourth moments are evaluated by cluster enumeration: a product
// factorizes over support-overlap components, and any component consisting
// of a single (centered) factor kills the trace.
BlockMoments block_moments(const LocalHamiltonianSpec& centered_spec,
                           const std::vector<long long>& block, int block_index = 0);

}  // namespace randtherm
