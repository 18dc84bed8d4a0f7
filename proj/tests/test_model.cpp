#include <doctest.h>

#include "randtherm/model.hpp"
#include "randtherm/seeds.hpp"
#include "test_util.hpp"

using namespace randtherm;

TEST_CASE("solvable spectrum enumeration") {
  CHECK(spectrum_from_solvable({{0.0}}).energies == std::vector<double>{0.0, 0.0});
  CHECK(spectrum_from_solvable({{1.0}}).energies == std::vector<double>{0.0, 1.0});
  // lexicographic order of (n_1, n_2): 00, 01, 10, 11
  CHECK(spectrum_from_solvable({{1.0, 2.0}}).energies ==
        std::vector<double>{0.0, 2.0, 1.0, 3.0});
}

TEST_CASE("solvable spectrum capacity and metadata") {
  CHECK_THROWS_AS(spectrum_from_solvable({std::vector<double>(25, 1.0)}), CapacityError);
  const SpectrumTable t = spectrum_from_solvable({{0.5, -0.25, 1.5}});
  CHECK(t.dim() == 8);
  CHECK(t.provenance == SpectrumProvenance::Solvable);
  CHECK(t.n_sites.value() == 3);
}

TEST_CASE("solvable mean and variance identities") {
  GaussianRng rng(7);
  for (int rep = 0; rep < 20; ++rep) {
    const int n = 1 + static_cast<int>(rng.uniform() * 10);
    std::vector<double> eps(n);
    for (double& e : eps) e = 4.0 * rng.uniform() - 2.0;
    const SolvableSpectrumSpec spec{eps};
    const SpectrumTable table = spectrum_from_solvable(spec);
    double mean = 0.0, var = 0.0;
    for (double e : table.energies) mean += e;
    mean /= static_cast<double>(table.dim());
    for (double e : table.energies) var += sqr(e - mean);
    var /= static_cast<double>(table.dim());
    CHECK(std::abs(mean - spec.mean_energy()) < 1e-10);
    CHECK(std::abs(var - spec.sigma2()) < 1e-10);
  }
}

TEST_CASE("pure product state") {
  VectorXcd e0 = VectorXcd::Zero(2);
  e0(0) = 1.0;
  const DensityMatrix rho = pure_product_state(e0, e0);
  CHECK(rho.dim() == 4);
  CHECK(std::abs(rho.matrix()(0, 0) - 1.0) < 1e-15);
  CHECK(rho.matrix().cwiseAbs().sum() == doctest::Approx(1.0));

  VectorXcd plus(2);
  plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  const DensityMatrix rho2 = pure_product_state(plus, e0);
  CHECK(std::abs((rho2.matrix() * rho2.matrix()).trace().real() - 1.0) < 1e-12);

  VectorXcd bad(2);
  bad << 1.0, 1.0;
  CHECK_THROWS_AS(pure_product_state(bad, e0), std::invalid_argument);
}

TEST_CASE("separable mixture") {
  VectorXcd e0 = VectorXcd::Zero(2), e1 = VectorXcd::Zero(2);
  e0(0) = 1.0;
  e1(1) = 1.0;
  const DensityMatrix r00 = DensityMatrix::checked(e0 * e0.adjoint());
  const DensityMatrix r11 = DensityMatrix::checked(e1 * e1.adjoint());

  SUBCASE("single component is a plain tensor product") {
    const DensityMatrix rho = separable_mixture({{1.0, r00, r11}});
    CHECK((rho.matrix() - kron(r00.matrix(), r11.matrix())).cwiseAbs().maxCoeff() < 1e-15);
  }
  SUBCASE("two equal-weight orthogonal products have purity 1/2") {
    const DensityMatrix rho = separable_mixture({{0.5, r00, r00}, {0.5, r11, r11}});
    // oracle: direct matrix computation
    MatrixXcd direct = 0.5 * kron(r00.matrix(), r00.matrix()) +
                       0.5 * kron(r11.matrix(), r11.matrix());
    CHECK((rho.matrix() - direct).cwiseAbs().maxCoeff() < 1e-15);
    CHECK(std::abs((direct * direct).trace().real() - 0.5) < 1e-12);
  }
  SUBCASE("maximally mixed times maximally mixed is globally maximally mixed") {
    const DensityMatrix mm2 = DensityMatrix::maximally_mixed(2);
    const DensityMatrix rho = separable_mixture({{1.0, mm2, mm2}});
    CHECK((rho.matrix() - MatrixXcd::Identity(4, 4) / 4.0).cwiseAbs().maxCoeff() < 1e-15);
  }
  SUBCASE("weight violations are rejected") {
    CHECK_THROWS_AS(separable_mixture({{0.7, r00, r00}, {0.7, r11, r11}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(separable_mixture({{-0.5, r00, r00}, {1.5, r11, r11}}),
                    std::invalid_argument);
  }
}

TEST_CASE("density matrix validation") {
  MatrixXcd m(2, 2);
  m << 0.5, Complex(0.0, 0.3), Complex(0.0, 0.3), 0.5;  // not Hermitian
  CHECK_THROWS_AS(DensityMatrix::checked(m), std::invalid_argument);
  m << 0.7, 0.0, 0.0, 0.7;  // trace != 1
  CHECK_THROWS_AS(DensityMatrix::checked(m), std::invalid_argument);
  m << 1.5, 0.0, 0.0, -0.5;  // negative eigenvalue
  CHECK_THROWS_AS(DensityMatrix::checked(m), std::invalid_argument);
  m << 0.5, 0.25, 0.25, 0.5;
  CHECK_NOTHROW(DensityMatrix::checked(m));
}

TEST_CASE("constructor outputs satisfy the density-matrix invariants") {
  for (std::uint64_t s = 1; s <= 5; ++s) {
    const auto psiS = testutil::random_unit_vector(2, s);
    const auto psiB = testutil::random_unit_vector(4, s + 100);
    CHECK_NOTHROW(DensityMatrix::checked(pure_product_state(psiS, psiB).matrix()));
    const auto rs = testutil::random_density(2, s + 200);
    const auto rb = testutil::random_density(4, s + 300);
    CHECK_NOTHROW(
        DensityMatrix::checked(separable_mixture({{0.3, rs, rb}, {0.7, rs, rb}}).matrix()));
  }
}

TEST_CASE("subsystem split") {
  const SubsystemSplit split = SubsystemSplit::leading(2, 8);
  CHECK(split.d() == 16);
  CHECK(split.delta() == 10);
  const SubsystemSplit s2 = SubsystemSplit::of_sites({2, 2, 2}, {1});
  CHECK(s2.dS == 2);
  CHECK(s2.dB == 4);
  CHECK_THROWS_AS(SubsystemSplit::of_sites({2, 2}, {5}), std::invalid_argument);
}

TEST_CASE("lattice geometry") {
  const LatticeSpec l{2, 5, 1};
  CHECK(l.n_sites() == 25);
  const long long a = l.site_index({1, 1});
  const long long b = l.site_index({3, 4});
  CHECK(l.dist(a, b) == 5);
  CHECK(l.coords(b) == std::vector<long long>{3, 4});
  // exact applicability: (8R)^5 <= M^3
  CHECK(LatticeSpec{1, 32, 1}.theorem1_applicable());
  CHECK_FALSE(LatticeSpec{1, 31, 1}.theorem1_applicable());
  CHECK_FALSE(LatticeSpec{1, 16, 1}.theorem1_applicable());
  CHECK(LatticeSpec{2, 32, 1}.theorem1_applicable());
}

TEST_CASE("local hamiltonian validation") {
  LocalHamiltonianSpec spec;
  spec.lattice = LatticeSpec{1, 4, 1};
  spec.site_dims = {2, 2, 2, 2};
  spec.h = 1.0;
  MatrixXcd sz(2, 2);
  sz << 1.0, 0.0, 0.0, -1.0;
  spec.terms.push_back({0, {0}, sz});
  CHECK_NOTHROW(spec.validate());

  SUBCASE("support outside the interaction ball is rejected") {
    spec.terms.push_back({0, {0, 2}, MatrixXcd::Zero(4, 4)});
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
  }
  SUBCASE("norm bound is enforced") {
    spec.terms.push_back({1, {1}, 2.0 * sz});
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
  }
  SUBCASE("centering makes terms traceless and updates the norm bound") {
    MatrixXcd shifted = sz + MatrixXcd::Identity(2, 2) * 0.5;
    shifted *= 1.0 / operator_norm_hermitian(shifted);
    spec.terms.push_back({1, {1}, shifted});
    const LocalHamiltonianSpec c = spec.centered();
    for (const auto& t : c.terms) CHECK(std::abs(t.matrix.trace()) < 1e-12);
    CHECK(c.h == doctest::Approx(c.max_term_norm()));
    CHECK_NOTHROW(c.validate());
  }
}
