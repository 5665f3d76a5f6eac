#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "z2mem/eigensolve.hpp"
#include "z2mem/errors.hpp"
#include "z2mem/macroscopicity.hpp"

using namespace z2mem;
using testing_support::to_eigen;

TEST_SUITE("eigensolve") {
  TEST_CASE("frozen low-lying energies") {
    struct Case {
      int n;
      double lambda;
      double e0, e1;
    };
    const Case cases[] = {
        {8, 0.5, -8.509082235140284, -8.507626387639508},
        {10, 1.5, -16.72302491394847, -15.71545506983697},
        {8, 0.3, -8.181049336928965, -8.181022901208975},
        {8, 1.0, -10.251661790966036, -10.054678984251698},
    };
    for (const auto& c : cases) {
      CAPTURE(c.n);
      CAPTURE(c.lambda);
      const EigenPairs p = lowest_eigenpairs(build_tfim(c.n, c.lambda), 2);
      CHECK(p.eigenvalues[0] == doctest::Approx(c.e0).epsilon(1e-11));
      CHECK(p.eigenvalues[1] == doctest::Approx(c.e1).epsilon(1e-11));
    }
  }

  TEST_CASE("third level at N = 8, lambda = 0.5") {
    const EigenPairs p = lowest_eigenpairs(build_tfim(8, 0.5), 3);
    CHECK(p.eigenvalues[2] == doctest::Approx(-6.22480390712956).epsilon(1e-11));
  }

  TEST_CASE("Lanczos agrees with the Kronecker oracle") {
    for (int n = 3; n <= 8; ++n) {
      for (double lambda : {0.3, 0.5, 1.0, 1.5}) {
        const auto ref = oracle::spectrum(oracle::tfim(n, lambda));
        const EigenPairs p = lowest_eigenpairs(build_tfim(n, lambda), 2);
        CHECK(std::abs(p.eigenvalues[0] - ref(0)) < 1e-9);
        CHECK(std::abs(p.eigenvalues[1] - ref(1)) < 1e-9);
      }
    }
  }

  TEST_CASE("eigenpairs are accurate and carry opposite parities") {
    const TfimHamiltonian h = build_tfim(11, 0.5);
    const EigenPairs p = lowest_eigenpairs(h, 2);
    for (int k = 0; k < 2; ++k) {
      CHECK(p.residuals[k] < 1e-10);
      CHECK(std::abs(std::abs(p.parities[k]) - 1.0) < 1e-10);
      CHECK(p.eigenvectors[k].norm() == doctest::Approx(1.0));
      // Variational bound: the Rayleigh quotient of any state is >= E0.
      CHECK(h.energy(p.eigenvectors[k]) >= p.eigenvalues[0] - 1e-12);
    }
    CHECK(p.parities[0] * p.parities[1] < 0.0);
    CHECK(std::abs(p.eigenvectors[0].inner(p.eigenvectors[1])) < 1e-10);
  }

  TEST_CASE("ground parity is (-1)^N for lambda > 0") {
    for (int n = 3; n <= 9; ++n) {
      const EigenPairs p = lowest_eigenpairs(build_tfim(n, 0.7), 1);
      CHECK(p.parities[0] == doctest::Approx(n % 2 == 0 ? 1.0 : -1.0));
    }
  }

  TEST_CASE("N = 13 ground state") {
    const EigenPairs p = lowest_eigenpairs(build_tfim(13, 0.5), 2);
    CHECK(p.eigenvalues[0] == doctest::Approx(-13.826094668447354).epsilon(1e-11));
    CHECK(p.eigenvalues[1] == doctest::Approx(-13.82605998939799).epsilon(1e-10));
  }

  TEST_CASE("sector solver") {
    const TfimHamiltonian h = build_tfim(8, 0.5);
    const EigenPairs plus = lowest_in_sector(h, +1, 2);
    const EigenPairs minus = lowest_in_sector(h, -1, 1);
    CHECK(plus.eigenvalues[0] == doctest::Approx(-8.509082235140284).epsilon(1e-11));
    CHECK(minus.eigenvalues[0] == doctest::Approx(-8.507626387639508).epsilon(1e-11));
    CHECK(plus.eigenvalues[1] > plus.eigenvalues[0]);
  }

  TEST_CASE("full spectrum") {
    const FullSpectrum s = full_spectrum(build_tfim(6, 1.2));
    const auto ref = oracle::spectrum(oracle::tfim(6, 1.2));
    CHECK((s.eigenvalues - ref).norm() < 1e-10);
    REQUIRE(s.eigenvectors.has_value());
    const Eigen::MatrixXd& v = *s.eigenvectors;
    CHECK((v.transpose() * v - Eigen::MatrixXd::Identity(64, 64)).norm() < 1e-10);
    CHECK_THROWS_AS(full_spectrum(build_tfim(11, 0.5)), CapabilityError);
  }

  TEST_CASE("gap scan and adiabatic estimate") {
    const auto gaps = gap_scan(0.5, 4, 8, 2);
    REQUIRE(gaps.size() == 5);
    CHECK(gaps[0].gap == doctest::Approx(3.549043263992413e-2).epsilon(1e-9));
    for (std::size_t i = 1; i < gaps.size(); ++i) CHECK(gaps[i].gap < gaps[i - 1].gap);
    const auto t = adiabatic_time_estimate(gaps);
    for (std::size_t i = 0; i < t.size(); ++i) {
      CHECK(t[i].time == doctest::Approx(1.0 / (gaps[i].gap * gaps[i].gap)));
    }
    CHECK_THROWS_AS(gap_scan(0.0, 4, 8), DomainError);
    CHECK_THROWS_AS(gap_scan(0.5, 8, 4), DomainError);
    const GapPoint bad{5, -1.0, -1.0, 0.0};
    CHECK_THROWS_AS(adiabatic_time_estimate(std::span<const GapPoint>(&bad, 1)), DomainError);
  }

  TEST_CASE("gapped phase: the gap levels off instead of closing") {
    const auto gaps = gap_scan(1.5, 4, 10, 2);
    const double frozen[] = {1.15446, 1.08834, 1.05230, 1.03165, 1.01945, 1.01208, 1.00757};
    std::vector<ScalePoint> pts;
    for (std::size_t i = 0; i < gaps.size(); ++i) {
      CHECK(gaps[i].gap == doctest::Approx(frozen[i]).epsilon(1e-5));
      pts.push_back({gaps[i].n, gaps[i].gap});
    }
    // Thermodynamic gap 2(lambda - 1) = 1.
    CHECK(std::abs(gaps.back().gap - 1.0) < 0.01);
    const ScalingFit gapped = fit_exponential_gap(pts);
    CHECK(gapped.slope > -0.05);
    CHECK(gapped.r_squared < 0.9);

    std::vector<ScalePoint> ordered;
    for (const auto& g : gap_scan(0.5, 4, 10, 2)) ordered.push_back({g.n, g.gap});
    CHECK(fit_exponential_gap(ordered).r_squared > 0.99);
  }

  TEST_CASE("superposed state leans on the positive branch") {
    for (int n = 6; n <= 9; ++n) {
      const EigenPairs p = lowest_eigenpairs(build_tfim(n, 0.5), 2);
      const StateVector s = superposed_state(p.eigenvectors[0], p.eigenvectors[1]);
      CHECK(s.norm() == doctest::Approx(1.0));
      CHECK(magnetization_z(s) > 0.9 * n);
      CHECK(mz_distribution(s).positive_weight() > 0.99);
    }
  }

  TEST_CASE("superposed state rejects bad inputs") {
    const StateVector a = StateVector::basis(3, 0);
    CHECK_THROWS_AS(superposed_state(a, a), ContractError);
    StateVector b(3, std::vector<Complex>(8, 0.0));
    b[1] = 2.0;
    CHECK_THROWS_AS(superposed_state(a, b), ContractError);
  }

  TEST_CASE("argument validation") {
    const TfimHamiltonian h = build_tfim(6, 0.5);
    CHECK_THROWS_AS(lowest_eigenpairs(h, 0), DomainError);
    CHECK_THROWS_AS(lowest_eigenpairs(h, 5), DomainError);
    CHECK_THROWS_AS(lowest_eigenpairs(h, 2, 1e-14), DomainError);
  }

  TEST_CASE("a starved budget reports non-convergence") {
    LanczosOptions opts;
    opts.max_applications = 3;
    opts.krylov_dim = 3;
    CHECK_THROWS_AS(lowest_eigenpairs(build_tfim(10, 1.0), 1, opts), ConvergenceError);
  }
}
