#include "z2mem/rvb.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <set>

#include "z2mem/errors.hpp"
#include "z2mem/macroscopicity.hpp"

namespace z2mem {

namespace {

void check_even(int n, int max_sites = kMaxRvbSites) {
  if (n % 2 != 0 || n < kMinRvbSites || n > max_sites) {
    throw DomainError("RVB construction needs even N in " + std::to_string(kMinRvbSites) + ".." +
                      std::to_string(max_sites) + ", got " + std::to_string(n));
  }
}

// Amplitude of |s_{first,second}> on the two bits of `index`.
double singlet_amplitude(std::size_t index, int first, int second) {
  const bool a = (index >> (first - 1)) & 1U;
  const bool b = (index >> (second - 1)) & 1U;
  if (a == b) return 0.0;
  return (a ? -1.0 : 1.0) / std::sqrt(2.0);
}

IdentityCheck equality(std::string name, double value, double expected, double tol) {
  IdentityCheck c{std::move(name), value, expected, expected - tol, expected + tol, false};
  c.passed = std::abs(value - expected) <= tol;
  return c;
}

IdentityCheck window(std::string name, double value, double expected, double lo, double hi) {
  IdentityCheck c{std::move(name), value, expected, lo, hi, false};
  c.passed = value >= lo && value <= hi;
  return c;
}

}  // namespace

PairCovering PairCovering::vb1(int n) {
  check_even(n);
  PairCovering c;
  c.n_sites = n;
  for (int l = 1; l <= n / 2; ++l) c.pairs.emplace_back(2 * l - 1, 2 * l);
  return c;
}

PairCovering PairCovering::vb2(int n) {
  check_even(n);
  PairCovering c;
  c.n_sites = n;
  for (int l = 1; l < n / 2; ++l) c.pairs.emplace_back(2 * l, 2 * l + 1);
  c.pairs.emplace_back(1, n);
  return c;
}

void PairCovering::validate() const {
  if (n_sites % 2 != 0 || n_sites < 2 || n_sites > kMaxSites) {
    throw DomainError("pair covering needs an even number of sites");
  }
  if (static_cast<int>(pairs.size()) * 2 != n_sites) {
    throw DomainError("pair covering must hold N/2 pairs");
  }
  std::set<int> seen;
  for (const auto& [a, b] : pairs) {
    if (a < 1 || a > n_sites || b < 1 || b > n_sites || a == b) {
      throw DomainError("pair (" + std::to_string(a) + "," + std::to_string(b) + ") is invalid");
    }
    if (!seen.insert(a).second || !seen.insert(b).second) {
      throw DomainError("pairs of a covering must be disjoint");
    }
  }
}

StateVector build_vb(const PairCovering& covering) {
  covering.validate();
  StateVector s(covering.n_sites);
  for (std::size_t i = 0; i < s.dim(); ++i) {
    double amp = 1.0;
    for (const auto& [a, b] : covering.pairs) {
      amp *= singlet_amplitude(i, a, b);
      if (amp == 0.0) break;
    }
    s[i] = amp;
  }
  return s;
}

double vb_overlap_closed_form(int n) {
  check_even(n);
  return std::pow(-0.5, n / 2 - 1);
}

double rvb_norm_squared_closed_form(int n) { return 2.0 + 2.0 * vb_overlap_closed_form(n); }

StateVector build_rvb(int n) {
  check_even(n);
  const StateVector vb1 = build_vb(PairCovering::vb1(n));
  const StateVector vb2 = build_vb(PairCovering::vb2(n));
  const double scale = 1.0 / std::sqrt(rvb_norm_squared_closed_form(n));
  std::vector<Complex> amps(vb1.dim());
  for (std::size_t i = 0; i < amps.size(); ++i) amps[i] = scale * (vb1[i] + vb2[i]);
  return StateVector(n, std::move(amps));
}

StateVector singlet_projector_apply(const StateVector& state, int l) {
  const int n = state.n_sites();
  if (l < 1 || l > n) throw DomainError("bond index outside 1..N");
  const int a = l;
  const int b = (l % n) + 1;
  const std::size_t flip = (std::size_t{1} << (a - 1)) | (std::size_t{1} << (b - 1));
  std::vector<Complex> out(state.dim());
  for (std::size_t i = 0; i < state.dim(); ++i) {
    const double si = singlet_amplitude(i, a, b);
    if (si == 0.0) continue;
    const std::size_t j = i ^ flip;
    out[i] = si * (si * state[i] + singlet_amplitude(j, a, b) * state[j]);
  }
  return StateVector(n, std::move(out));
}

StateVector apply_t_operator(const StateVector& state) {
  const int n = state.n_sites();
  std::vector<Complex> acc(state.dim(), Complex{});
  for (int l = 1; l <= n; ++l) {
    const StateVector term = singlet_projector_apply(state, l);
    const double sign = (l % 2 == 0) ? 1.0 : -1.0;
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += sign * term[i];
  }
  return StateVector(n, std::move(acc));
}

TMoments t_operator_moments(int n) {
  const StateVector psi = build_rvb(n);
  const StateVector t_psi = apply_t_operator(psi);
  TMoments m;
  m.mean = std::real(psi.inner(t_psi));
  // T is Hermitian: <T^2> = ||T psi||^2.
  m.variance = t_psi.norm_squared() - m.mean * m.mean;
  return m;
}

double vb1_t_expectation(int n) {
  const StateVector vb1 = build_vb(PairCovering::vb1(n));
  return std::real(vb1.inner(apply_t_operator(vb1)));
}

SwapResult singlet_swap_coefficient() {
  const StateVector source = build_vb(PairCovering::vb1(4));
  const StateVector target = build_vb(PairCovering{4, {{2, 3}, {1, 4}}});
  const StateVector image = singlet_projector_apply(source, 2);
  SwapResult r;
  r.coefficient = std::real(target.inner(image));
  double res = 0.0;
  for (std::size_t i = 0; i < image.dim(); ++i) res += std::norm(image[i] - r.coefficient * target[i]);
  r.residual = std::sqrt(res);
  return r;
}

double iterated_swap_residual(int n) {
  check_even(n);
  StateVector x = build_vb(PairCovering::vb1(n));
  for (int l = 1; l < n / 2; ++l) x = singlet_projector_apply(x, 2 * l);
  const double scale = std::pow(-2.0, n / 2 - 1);
  const StateVector vb2 = build_vb(PairCovering::vb2(n));
  double res = 0.0;
  for (std::size_t i = 0; i < x.dim(); ++i) res += std::norm(scale * x[i] - vb2[i]);
  return std::sqrt(res);
}

double total_spin_residual(int n) {
  const StateVector psi = build_rvb(n);
  double worst = 0.0;
  for (PauliAxis axis : kPauliAxes) {
    worst = std::max(worst, apply_additive(psi, AdditiveOperator::uniform(n, axis)).norm());
  }
  return worst;
}

int ring_distance(int a, int b, int n) {
  const int d = std::abs(a - b);
  return std::min(d, n - d);
}

double connected_correlation_max(const StateVector& state, int min_distance) {
  const CorrelationMatrix vcm = build_vcm(state);
  const int n = state.n_sites();
  double worst = 0.0;
  for (int l = 1; l <= n; ++l) {
    for (int lp = 1; lp <= n; ++lp) {
      if (ring_distance(l, lp, n) < min_distance) continue;
      for (PauliAxis a : kPauliAxes) {
        for (PauliAxis b : kPauliAxes) {
          const Complex v = vcm.entries(CorrelationMatrix::flat_index(a, l),
                                        CorrelationMatrix::flat_index(b, lp));
          worst = std::max(worst, std::abs(v));
        }
      }
    }
  }
  return worst;
}

double connected_correlation_scan(int n) {
  check_even(n, 12);
  return connected_correlation_max(build_rvb(n), 2);
}

double rvb_vcm_check(int n) {
  check_even(n, 12);
  return build_vcm(build_rvb(n)).e1();
}

std::vector<IdentityCheck> rvb_identity_checks(int n) {
  check_even(n);
  const StateVector vb1 = build_vb(PairCovering::vb1(n));
  const StateVector vb2 = build_vb(PairCovering::vb2(n));
  const StateVector psi = build_rvb(n);

  std::vector<IdentityCheck> checks;
  checks.push_back(equality("vb_overlap", std::real(vb2.inner(vb1)), vb_overlap_closed_form(n), 1e-12));
  checks.push_back(equality("rvb_norm", psi.norm_squared(), 1.0, 1e-12));

  const SwapResult swap = singlet_swap_coefficient();
  checks.push_back(equality("swap_coefficient", swap.coefficient, -0.5, 1e-12));
  checks.push_back(equality("swap_proportionality_residual", swap.residual, 0.0, 1e-12));
  checks.push_back(equality("vb1_t23_vb1", std::real(vb1.inner(singlet_projector_apply(vb1, 2))),
                            0.25, 1e-12));
  checks.push_back(equality("iterated_swap_residual", iterated_swap_residual(n), 0.0, 1e-10));
  checks.push_back(equality("total_spin_residual", total_spin_residual(n), 0.0, 1e-12));
  checks.push_back(equality("vb1_T_vb1", vb1_t_expectation(n), -3.0 * n / 8.0, 1e-10));

  const TMoments moments = t_operator_moments(n);
  checks.push_back(window("T_mean", moments.mean, 0.0, -0.5, 0.5));
  checks.push_back(window("T_variance_over_N2", moments.variance / (n * n), 9.0 / 64.0, 0.10, 0.18));

  if (n <= 12) {
    checks.push_back(equality("connected_correlation_distance_ge2", connected_correlation_scan(n),
                              0.0, 1e-12));
    checks.push_back(window("vcm_e1_at_least_1", rvb_vcm_check(n), 1.0, 1.0, INFINITY));
  }
  return checks;
}

}  // namespace z2mem
