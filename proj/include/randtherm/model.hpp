#pragma once

#include <optional>
#include <vector>

#include "randtherm/common.hpp"

namespace randtherm {

enum class SpectrumProvenance { Explicit, Solvable, Diagonalized };

// A fixed list of energies. The eigenbasis is supplied separately (haar.hpp).
struct SpectrumTable {
  std::vector<double> energies;
  SpectrumProvenance provenance = SpectrumProvenance::Explicit;
  // Number of lattice sites the spectrum derives from, when known. Used for
  // the per-site variance sigma_bar^2 = sigma^2 / n_sites.
  std::optional<int> n_sites;

  long long dim() const { return static_cast<long long>(energies.size()); }
  double min_energy() const;
  double max_energy() const;
  void validate() const;  // throws std::invalid_argument on non-finite entries
};

// Couplings epsilon_k of a free-mode spectrum E = sum_k epsilon_k n_k, n_k in {0,1}.
struct SolvableSpectrumSpec {
  std::vector<double> epsilons;

  int n_sites() const { return static_cast<int>(epsilons.size()); }
  double epsilon_max() const;
  double sigma2() const;       // sum epsilon_k^2 / 4
  double sigma_bar2() const;   // sigma2 / N
  double mean_energy() const;  // sum epsilon_k / 2
};

// Enumerates all 2^N energies, in lexicographic order of (n_1 .. n_N) with
// n_1 the most significant digit. N <= 24.
SpectrumTable spectrum_from_solvable(const SolvableSpectrumSpec& spec);

// Bipartition of a tensor-factorized Hilbert space into an observed subsystem
// S and the bath B. Factors are listed in a fixed order; S is an explicit
// subset of factor indices (default: the leading factor).
struct SubsystemSplit {
  std::vector<long long> site_dims;
  std::vector<int> s_sites;  // sorted factor indices belonging to S
  long long dS = 1;
  long long dB = 1;

  static SubsystemSplit leading(long long dS, long long dB);
  static SubsystemSplit of_sites(std::vector<long long> site_dims, std::vector<int> s_sites);

  long long d() const { return dS * dB; }
  long long delta() const { return dS + dB; }
};

// d x d Hermitian, PSD, unit-trace complex matrix. `checked` enforces all
// three invariants; `unchecked` is the fast path for matrices produced by
// operations that preserve them.
class DensityMatrix {
 public:
  static DensityMatrix checked(MatrixXcd m);
  static DensityMatrix unchecked(MatrixXcd m);

  const MatrixXcd& matrix() const { return mat_; }
  long long dim() const { return static_cast<long long>(mat_.rows()); }

  static DensityMatrix maximally_mixed(long long d);

 private:
  explicit DensityMatrix(MatrixXcd m) : mat_(std::move(m)) {}
  MatrixXcd mat_;
};

// |psiS><psiS| (x) |psiB><psiB|. Both vectors must be unit norm.
DensityMatrix pure_product_state(const VectorXcd& psiS, const VectorXcd& psiB);

struct SeparableComponent {
  double weight;
  DensityMatrix rhoS;
  DensityMatrix rhoB;
};

// sum_n p_n rhoS_n (x) rhoB_n with nonnegative weights summing to one.
DensityMatrix separable_mixture(const std::vector<SeparableComponent>& components);

// D-dimensional cubic lattice {1..M}^D with open boundaries and l1 distance.
// Sites are indexed 0..M^D-1 in row-major (lexicographic coordinate) order.
struct LatticeSpec {
  int D = 1;
  long long M = 1;
  long long R = 1;

  long long n_sites() const;
  // Large-lattice condition 4^(3/2) R <= M^(3/5), evaluated exactly as
  // 32768 R^5 <= M^3 in integer arithmetic.
  bool theorem1_applicable() const;

  std::vector<long long> coords(long long site) const;   // entries in 1..M
  long long site_index(const std::vector<long long>& c) const;
  long long dist(long long i, long long j) const;
  void validate() const;
};

// One bounded-norm term: a Hermitian matrix on the tensor factors of
// `support` (sorted site indices), anchored at `anchor`.
struct LocalTerm {
  long long anchor = 0;
  std::vector<long long> support;
  MatrixXcd matrix;
};

struct LocalHamiltonianSpec {
  LatticeSpec lattice;
  std::vector<long long> site_dims;  // one entry per lattice site
  std::vector<LocalTerm> terms;
  double h = 1.0;  // bound on each term's operator norm

  long long total_dim() const;
  void validate() const;

  // Subtracts <term> * identity from every term, where <.> is the normalized
  // trace (which factorizes over sites). All appendix-facing computations run
  // on the centered spec.
  LocalHamiltonianSpec centered() const;
  double max_term_norm() const;
};

}  // namespace randtherm
