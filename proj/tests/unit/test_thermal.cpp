#include <cmath>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "z2mem/eigensolve.hpp"
#include "z2mem/errors.hpp"
#include "z2mem/macroscopicity.hpp"
#include "z2mem/thermal.hpp"

using namespace z2mem;
using testing_support::random_state;
using testing_support::to_eigen;

TEST_SUITE("thermal") {
  TEST_CASE("Gibbs state matches the oracle") {
    const int n = 5;
    const GibbsState g = gibbs_state(build_tfim(n, 0.7), 0.4);
    const oracle::Mat ref = oracle::gibbs(oracle::tfim(n, 0.7), 0.4);
    CHECK(testing_support::max_abs_diff(g.rho, ref) < 1e-12);
    CHECK(std::abs(g.rho.trace() - Complex{1, 0}) < 1e-12);
    CHECK((g.rho - g.rho.adjoint()).norm() < 1e-14);
  }

  TEST_CASE("W matrix matches the oracle commutator Gram matrix") {
    const int n = 4;
    const GibbsState g = gibbs_state(build_tfim(n, 0.5), 0.3);
    const CorrelationMatrix w = build_w_matrix(g);
    CHECK(w.kind == CorrelationKind::W);
    CHECK(testing_support::max_abs_diff(w.entries, oracle::w_matrix(g.rho, n)) < 1e-12);
  }

  TEST_CASE("W of a pure state is twice the real part of the VCM") {
    std::mt19937_64 rng(61);
    for (int n = 3; n <= 5; ++n) {
      const StateVector psi = random_state(n, rng);
      const CorrelationMatrix w = build_w_matrix(pure_density(psi));
      const Eigen::MatrixXcd two_re_v = (2.0 * build_vcm(psi).entries.real()).cast<Complex>();
      CHECK(testing_support::max_abs_diff(w.entries, two_re_v) < 1e-12);
    }
  }

  TEST_CASE("W is PSD for random temperatures") {
    std::mt19937_64 rng(67);
    std::uniform_real_distribution<double> kt(0.02, 5.0);
    const FullSpectrum s = full_spectrum(build_tfim(5, 0.6));
    for (int trial = 0; trial < 10; ++trial) {
      CHECK(build_w_matrix(gibbs_state(s, kt(rng))).eigenvalues.minCoeff() > -1e-8);
    }
  }

  TEST_CASE("frozen thermal values at N = 8, lambda = 0.5") {
    const TfimHamiltonian h = build_tfim(8, 0.5);
    const FullSpectrum s = full_spectrum(h);
    CHECK(build_w_matrix(gibbs_state(s, 0.05)).e1() == doctest::Approx(1.0652760042212162).epsilon(1e-9));
    CHECK(build_w_matrix(gibbs_state(s, 1e-4)).e1() == doctest::Approx(15.0327).epsilon(1e-4));
    CHECK(build_w_matrix(gibbs_state(s, 2.0)).e1() == doctest::Approx(0.0325).epsilon(1e-2));
    const GibbsState cold = gibbs_state(s, 0.05);
    CHECK(thermal_energy(cold, h) == doctest::Approx(-8.5083649081010098).epsilon(1e-10));
  }

  TEST_CASE("thermal scan is monotone on the default grid") {
    const auto grid = log_grid(0.05, 2.0, 40);
    REQUIRE(grid.size() == 40);
    CHECK(grid.front() == doctest::Approx(0.05));
    CHECK(grid.back() == doctest::Approx(2.0));
    const auto pts = thermal_scan(0.5, 6, grid, 2);
    for (std::size_t i = 1; i < pts.size(); ++i) CHECK(pts[i].e1 <= pts[i - 1].e1 + 1e-6);
  }

  TEST_CASE("density_state renormalizes and records the correction") {
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Identity(8, 8) * 0.25;
    const GibbsState g = density_state(3, rho);
    CHECK(std::abs(g.rho.trace() - Complex{1, 0}) < 1e-15);
    CHECK(g.trace_correction == doctest::Approx(1.0));
    // Maximally mixed: every commutator vanishes.
    CHECK(build_w_matrix(g).e1() == doctest::Approx(0.0));
  }

  TEST_CASE("cold gapped Gibbs state is the ground projector") {
    const TfimHamiltonian h = build_tfim(6, 1.5);
    const StateVector e0 = lowest_eigenpairs(h, 1).eigenvectors[0];
    const GibbsState g = gibbs_state(h, 1e-4);
    const Eigen::VectorXcd v = testing_support::to_eigen(e0);
    CHECK(std::real(v.dot(g.rho * v)) > 1.0 - 1e-6);
  }

  TEST_CASE("W of a product state does not grow with N") {
    for (int n = 3; n <= 7; ++n) CHECK(build_w_matrix(pure_density(StateVector(n))).e1() <= 4.0 + 1e-10);
  }

  TEST_CASE("argument validation") {
    const TfimHamiltonian h = build_tfim(4, 0.5);
    CHECK_THROWS_AS(gibbs_state(h, 0.0), DomainError);
    CHECK_THROWS_AS(gibbs_state(h, -1.0), DomainError);
    CHECK_THROWS_AS(gibbs_state(build_tfim(11, 0.5), 1.0), CapabilityError);
    CHECK_THROWS_AS(thermal_scan(0.5, 4, std::vector<double>{0.2, 0.1}), DomainError);
    CHECK_THROWS_AS(log_grid(0.0, 1.0, 5), DomainError);
    CHECK_THROWS_AS(density_state(3, Eigen::MatrixXcd::Zero(8, 8)), ContractError);
  }
}
