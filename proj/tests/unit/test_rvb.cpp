#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "z2mem/errors.hpp"
#include "z2mem/macroscopicity.hpp"
#include "z2mem/rvb.hpp"

using namespace z2mem;

TEST_SUITE("rvb") {
  TEST_CASE("valence-bond coverings") {
    const PairCovering a = PairCovering::vb1(6);
    CHECK(a.pairs == std::vector<std::pair<int, int>>{{1, 2}, {3, 4}, {5, 6}});
    const PairCovering b = PairCovering::vb2(6);
    CHECK(b.pairs == std::vector<std::pair<int, int>>{{2, 3}, {4, 5}, {1, 6}});
    CHECK_THROWS_AS((PairCovering{4, {{1, 2}, {2, 3}}}.validate()), DomainError);
    CHECK_THROWS_AS(PairCovering::vb1(5), DomainError);
  }

  TEST_CASE("singlet orientation") {
    const StateVector s = build_vb(PairCovering{2, {{1, 2}}});
    // Site 1 is bit 0: |up down> is index 0b10.
    CHECK(s[0b10].real() == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(s[0b01].real() == doctest::Approx(-1.0 / std::sqrt(2.0)));
  }

  TEST_CASE("overlap and normalization closed forms") {
    for (int n : {4, 6, 8, 10, 12}) {
      const StateVector v1 = build_vb(PairCovering::vb1(n));
      const StateVector v2 = build_vb(PairCovering::vb2(n));
      CHECK(std::abs(v2.inner(v1).real() - std::pow(-0.5, n / 2 - 1)) < 1e-12);
      CHECK(build_rvb(n).norm() == doctest::Approx(1.0).epsilon(1e-12));
    }
    CHECK(rvb_norm_squared_closed_form(8) == doctest::Approx(1.75));
  }

  TEST_CASE("singlet projector is a projector") {
    const StateVector psi = build_rvb(6);
    for (int l = 1; l <= 6; ++l) {
      const StateVector once = singlet_projector_apply(psi, l);
      const StateVector twice = singlet_projector_apply(once, l);
      CHECK((testing_support::to_eigen(once) - testing_support::to_eigen(twice)).norm() < 1e-14);
    }
  }

  TEST_CASE("swap identities") {
    const SwapResult r = singlet_swap_coefficient();
    CHECK(r.coefficient == doctest::Approx(-0.5));
    CHECK(r.residual < 1e-12);
    for (int n : {4, 6, 8, 10}) CHECK(iterated_swap_residual(n) < 1e-10);
  }

  TEST_CASE("RVB state is a total singlet") {
    for (int n : {4, 6, 8}) CHECK(total_spin_residual(n) < 1e-12);
  }

  TEST_CASE("T operator moments") {
    const double expected[] = {0.1875, 0.15, 0.16071428571428571, 0.14558823529411766, 0.15120967741935484};
    int i = 0;
    for (int n : {4, 6, 8, 10, 12}) {
      const TMoments m = t_operator_moments(n);
      CHECK(std::abs(m.mean) < 1e-12);
      CHECK(m.variance / (n * n) == doctest::Approx(expected[i++]).epsilon(1e-9));
      CHECK(vb1_t_expectation(n) == doctest::Approx(-3.0 * n / 8.0));
    }
  }

  TEST_CASE("long-range connected correlations are distance independent") {
    // |o| / (1 + o) with o = <VB2|VB1>.
    CHECK(connected_correlation_scan(6) == doctest::Approx(0.2).epsilon(1e-10));
    CHECK(connected_correlation_scan(8) == doctest::Approx(1.0 / 7.0).epsilon(1e-10));
    CHECK(connected_correlation_scan(10) == doctest::Approx(1.0 / 17.0).epsilon(1e-10));
    CHECK(connected_correlation_scan(12) == doctest::Approx(1.0 / 31.0).epsilon(1e-10));
  }

  TEST_CASE("VCM principal eigenvalue of the RVB state") {
    const double expected[] = {2.0, 2.8, 1.9510, 2.4706, 1.9262};
    int i = 0;
    for (int n : {4, 6, 8, 10, 12}) CHECK(rvb_vcm_check(n) == doctest::Approx(expected[i++]).epsilon(1e-3));
  }

  TEST_CASE("ring distance") {
    CHECK(ring_distance(1, 8, 8) == 1);
    CHECK(ring_distance(2, 6, 8) == 4);
    CHECK(ring_distance(3, 3, 8) == 0);
  }
}
