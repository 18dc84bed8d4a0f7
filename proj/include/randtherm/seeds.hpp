#pragma once

#include <cstdint>
#include <random>

namespace randtherm {

// Counter-based per-sample seed derivation: sample index -> independent seed.
// Distinct indices always yield distinct seeds (the pre-mix values are
// distinct and the mix is a bijection on 64-bit words).
struct SeedStream {
  std::uint64_t master = 0;

  std::uint64_t seed_for(std::uint64_t sample_index) const;
};

// Deterministic Gaussian source: mt19937_64 plus an explicit Box-Muller
// transform. Avoids std::normal_distribution, whose output sequence is
// implementation-defined.
class GaussianRng {
 public:
  explicit GaussianRng(std::uint64_t seed) : eng_(seed) {}

  // Uniform double in [0, 1), 53 random bits.
  double uniform();
  double gaussian();

 private:
  std::mt19937_64 eng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace randtherm
