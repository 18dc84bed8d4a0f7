#include <doctest.h>

#include <set>

#include "randtherm/experiments.hpp"
#include "randtherm/haar.hpp"

using namespace randtherm;

TEST_CASE("haar sampler rejects d = 0") {
  CHECK_THROWS_AS(sample_haar_unitary(0, 1), std::domain_error);
}

TEST_CASE("d = 1 gives a unit-modulus scalar with uniform phase") {
  double re = 0.0, im = 0.0;
  const int n = 4000;
  for (int k = 0; k < n; ++k) {
    const MatrixXcd u = sample_haar_unitary(1, SeedStream{11}.seed_for(k));
    CHECK(std::abs(std::abs(u(0, 0)) - 1.0) < 1e-12);
    re += u(0, 0).real();
    im += u(0, 0).imag();
  }
  // mean of a uniform phase is 0; SE of each component ~ sqrt(1/(2n))
  const double se = std::sqrt(0.5 / n);
  CHECK(std::abs(re / n) < 4.0 * se);
  CHECK(std::abs(im / n) < 4.0 * se);
}

TEST_CASE("unitarity over dimensions") {
  int draw = 0;
  for (long long d : {2, 4, 8, 16}) {
    for (int k = 0; k < 25; ++k) {
      const MatrixXcd u = sample_haar_unitary(d, SeedStream{42}.seed_for(draw++));
      const double defect =
          (u.adjoint() * u - MatrixXcd::Identity(d, d)).cwiseAbs().maxCoeff();
      CHECK(defect < 1e-10);
    }
  }
}

TEST_CASE("haar first moments") {
  // E|U_ij|^2 = 1/d; E[U_ij] = 0 and E[U_ij conj(U_kj)] = 0 for i != k.
  // The entry-mean check catches a missing phase fix on the QR factor.
  const long long d = 4;
  const long long n = 10000;
  double m_abs2 = 0.0;
  Complex m_entry = 0.0, m_cross = 0.0;
  for (long long k = 0; k < n; ++k) {
    const MatrixXcd u = sample_haar_unitary(d, SeedStream{7}.seed_for(k));
    m_abs2 += std::norm(u(0, 0));
    m_entry += u(1, 1);
    m_cross += u(0, 0) * std::conj(u(1, 0));
  }
  m_abs2 /= n;
  m_entry /= static_cast<double>(n);
  m_cross /= static_cast<double>(n);
  // |U_00|^2 ~ Beta(1, d-1): var = (d-1)/(d^2 (d+1))
  const double se_abs2 = std::sqrt(3.0 / (16.0 * 5.0) / n);
  CHECK(std::abs(m_abs2 - 0.25) < 4.0 * se_abs2);
  const double se_entry = std::sqrt(1.0 / (d * 2.0) / n);  // per-component var ~ 1/(2d)
  CHECK(std::abs(m_entry.real()) < 4.0 * se_entry);
  CHECK(std::abs(m_entry.imag()) < 4.0 * se_entry);
  CHECK(std::abs(m_cross.real()) < 4.0 * se_entry);
  CHECK(std::abs(m_cross.imag()) < 4.0 * se_entry);
}

TEST_CASE("randomized hamiltonian preserves the spectrum") {
  SUBCASE("all-zero spectrum gives the zero operator") {
    SpectrumTable zeros;
    zeros.energies.assign(8, 0.0);
    const DiagonalizedHamiltonian h = randomized_hamiltonian(zeros, 3);
    CHECK(h.materialize().cwiseAbs().maxCoeff() < 1e-12);
  }
  SUBCASE("trace invariants for spectrum (0, 1)") {
    SpectrumTable s;
    s.energies = {0.0, 1.0};
    const DiagonalizedHamiltonian h = randomized_hamiltonian(s, 5);
    const MatrixXcd hm = h.materialize();
    CHECK(std::abs(hm.trace().real() - 1.0) < 1e-10);
    CHECK(std::abs((hm * hm).trace().real() - 1.0) < 1e-10);
  }
  SUBCASE("materialized eigenvalues match the input multiset") {
    const SpectrumTable s = random_spectrum(16, 10.0, 99);
    const DiagonalizedHamiltonian h = randomized_hamiltonian(s, 77);
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(h.materialize(), Eigen::EigenvaluesOnly);
    std::vector<double> got(es.eigenvalues().data(), es.eigenvalues().data() + 16);
    std::vector<double> want = s.energies;
    std::sort(want.begin(), want.end());
    for (int k = 0; k < 16; ++k) CHECK(std::abs(got[k] - want[k]) < 1e-8);
  }
}

TEST_CASE("seed stream determinism and distinctness") {
  const SeedStream a{123456789}, b{123456789}, c{987654321};
  std::set<std::uint64_t> seen;
  for (std::uint64_t i = 0; i < 100000; ++i) {
    CHECK(a.seed_for(i) == b.seed_for(i));
    seen.insert(a.seed_for(i));
  }
  CHECK(seen.size() == 100000);
  CHECK(a.seed_for(0) != c.seed_for(0));

  const MatrixXcd u1 = sample_haar_unitary(8, a.seed_for(4));
  const MatrixXcd u2 = sample_haar_unitary(8, b.seed_for(4));
  CHECK((u1 - u2).cwiseAbs().maxCoeff() == 0.0);  // bit-identical rerun
}
