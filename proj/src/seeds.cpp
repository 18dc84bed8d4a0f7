#include "randtherm/seeds.hpp"

#include <cmath>

namespace randtherm {

namespace {
std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}
}  // namespace

std::uint64_t SeedStream::seed_for(std::uint64_t sample_index) const {
  return splitmix64(master + sample_index * 0x9E3779B97F4A7C15ULL);
}

double GaussianRng::uniform() {
  return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
}

double GaussianRng::gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  const double u1 = 1.0 - uniform();  // (0, 1], keeps log finite
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 2.0 * M_PI * u2;
  spare_ = r * std::sin(a);
  have_spare_ = true;
  return r * std::cos(a);
}

}  // namespace randtherm
