#pragma once

#include <string>
#include <vector>

#include "randtherm/common.hpp"
#include "randtherm/model.hpp"
#include "randtherm/reports.hpp"
#include "randtherm/spectral.hpp"

namespace randtherm {

// Exact number of lattice sites within l1 distance r of a point of the
// infinite lattice Z^D.
long long l1_ball_count(int D, long long r);

// Smallest c such that l1_ball_count(D, r) <= 1 + c r^D for all 1 <= r <= 4R.
double ball_bound_coeff(int D, long long R);

struct DerivationEntry {
  std::string name;
  double value = 0.0;
  std::string formula;
  std::vector<std::pair<std::string, double>> inputs;
};

// Machine-checkable provenance: every derived constant is logged with the
// inputs it was computed from, and recompute_derived replays the formula.
struct DerivationLog {
  std::vector<DerivationEntry> entries;

  std::string to_text() const;
  const DerivationEntry* find(const std::string& name) const;
};

double recompute_derived(const DerivationEntry& entry);

// Explicit constants of the lattice bounds, assembled from exact ball counts.
//   c2 = h^2 beta_2R                           (pair-moment coefficient)
//   c4 = h^4 (3 b2 b4^2 + b2^3 + 6 b2 b4 + 3 b2^2)  (fourth-moment coefficient)
//   x  = min( sqrt(1/c2^3), 22 / (6 sqrt(c2 c4)) )  (admissible-time factor)
//   a0_lemma = x,  b0_lemma = max( h^2 (1+3 b2)/6, 57 sqrt(pi), (3 c2)^(1/3) )
//   a0_lattice = x/8,  b0_lattice = b0_lemma * max( (R+1) x^2 c2^2 / 32, 8/x )
//   b0_forecast = max( 2 b0_lattice, 8 )
struct LatticeConstants {
  long long beta_2r = 0;
  long long beta_4r = 0;
  double ball_coeff = 0.0;
  double h = 0.0;
  double c2 = 0.0;
  double c4 = 0.0;
  double x = 0.0;
  double a0_lemma = 0.0;
  double b0_lemma = 0.0;
  double a0_lattice = 0.0;
  double b0_lattice = 0.0;
  double b0_forecast = 0.0;
  DerivationLog log;
};

LatticeConstants lemma_constants(const LatticeSpec& lattice, double h);

// Admissible-time constant used by the Gaussian-window and time-average
// reports: x sigma^2 / (|A| max_n |A_n|^(1/2)); +inf when c2 = 0.
double admissible_time_window(double sigma2, long long total_block_sites,
                              long long max_block_size, const LatticeConstants& consts);

// Decomposition of the lattice into well-separated blocks A_k and buffers
// C_k. Block/buffer lists are disjoint, cover the lattice, and satisfy
// dist(A_n, A_m) >= 2R + 1.
struct Partition {
  LatticeSpec lattice;
  std::vector<std::vector<long long>> blocks;   // sorted site lists
  std::vector<std::vector<long long>> buffers;  // sorted site lists
  long long K = 0;
  double slab_width = 0.0;  // M/K - 2R for slab-built partitions
  bool slab_built = false;

  long long total_block_sites() const;
  long long max_block_size() const;
  long long buffer_size() const;
  std::vector<long long> all_buffer_sites() const;

  // Structural invariants; slab-built partitions under the large-lattice
  // condition additionally satisfy the exact size windows.
  void validate() const;

  static Partition custom(const LatticeSpec& lattice,
                          std::vector<std::vector<long long>> blocks);
};

// Slab construction along the last axis: K = floor(M / (M^(3/5) + 2R)),
// a = M/K - 2R, A_k = X x (a_k, a_k + a], C_k = X x (a_k + a, a_{k+1}] with
// a_k = (a + 2R) k. Interval membership is evaluated in exact integer
// arithmetic; the set-builder form is authoritative.
Partition build_partition(const LatticeSpec& lattice);

// rhs of |phi(t) - phi_A(t)| <= |C| h^2 t^2 (1 + 3 beta_2R) / 2.
double buffer_truncation_rhs(double t, long long buffer_size, double h, long long beta_2r);
BoundReport buffer_truncation_report(double lhs, double t, long long buffer_size,
                                     const LatticeConstants& consts);

// rhs of |phi_A(t) - e^{-sigma^2 t^2/2}| <= (17 sigma^2 / 36) t^2 e^{-sigma^2 t^2/36},
// gated on: 81 c2 |C| <= 4 sigma^2, per-block sigma_n^2 t^2 < 2, and |t|
// within the admissible window.
double gaussian_window_rhs(double t, double sigma2);
BoundReport gaussian_window_report(double lhs, double t, double sigma2,
                                   const std::vector<BlockMoments>& blocks, double sigma_A2,
                                   long long buffer_size, const Partition& partition,
                                   const LatticeConstants& consts);

// (1/T) int_0^T |phi| <= b0 (|C| T^2 + 1/(T sigma)), valid for T within the
// admissible window or in the trivial regime 81 c2 |C| >= 4 sigma^2.
BoundReport phi_average_report(double lhs, double T, double sigma2,
                               const Partition& partition, const LatticeConstants& consts);

// Per-block sigma_n^2 <= c2 |A_n| and <H_n^4> <= c4 |A_n|^2, plus the global
// |sigma^2 - sigma_A^2| <= 3 c2 |C|. All lhs values from exact contraction.
std::vector<BoundReport> moment_bound_ledger(const LocalHamiltonianSpec& spec,
                                             const Partition& partition);

struct LedgerOptions {
  std::vector<double> t_values;  // grid for the truncation/window rows
  int window_points = 4;         // extra window rows at fractions of the admissible time
  std::vector<double> T_values;  // time-average rows; empty -> derived from the window
  double rhs_scale = 1.0;        // self-test hook: scales every rhs
};

// Full inequality ledger on one instance: moment rows, truncation rows,
// Gaussian-window rows, and time-average rows, with exact lhs values from
// dense diagonalization where capacity allows.
std::vector<BoundReport> appendix_ledger(const LocalHamiltonianSpec& spec,
                                         const Partition& partition,
                                         const LedgerOptions& options);

}  // namespace randtherm
