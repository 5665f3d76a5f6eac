#include "z2mem/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "z2mem/errors.hpp"

namespace z2mem {

namespace {

void check_site(int n_sites, int site) {
  if (site < 1 || site > n_sites) {
    throw DomainError("site " + std::to_string(site) + " outside 1.." + std::to_string(n_sites));
  }
}

void check_sites(int n_sites) {
  if (n_sites < 1 || n_sites > kMaxSites) {
    throw DomainError("n_sites " + std::to_string(n_sites) + " outside 1.." +
                      std::to_string(kMaxSites));
  }
}

}  // namespace

std::string_view axis_name(PauliAxis axis) noexcept {
  switch (axis) {
    case PauliAxis::X: return "x";
    case PauliAxis::Y: return "y";
    case PauliAxis::Z: return "z";
  }
  return "?";
}

StateVector::StateVector(int n_sites) : n_sites_(n_sites) {
  check_sites(n_sites);
  amplitudes_.assign(std::size_t{1} << n_sites, Complex{});
  amplitudes_[0] = 1.0;
}

StateVector::StateVector(int n_sites, std::vector<Complex> amplitudes)
    : n_sites_(n_sites), amplitudes_(std::move(amplitudes)) {
  check_sites(n_sites);
  if (amplitudes_.size() != (std::size_t{1} << n_sites)) {
    throw DomainError("amplitude count " + std::to_string(amplitudes_.size()) +
                      " is not 2^" + std::to_string(n_sites));
  }
}

StateVector StateVector::basis(int n_sites, std::uint64_t index) {
  StateVector s(n_sites);
  if (index >= s.dim()) throw DomainError("basis index out of range");
  s.amplitudes_[0] = 0.0;
  s.amplitudes_[index] = 1.0;
  return s;
}

double StateVector::norm_squared() const noexcept {
  double acc = 0.0;
  for (const auto& a : amplitudes_) acc += std::norm(a);
  return acc;
}

double StateVector::norm() const noexcept { return std::sqrt(norm_squared()); }

StateVector& StateVector::normalize() {
  const double nrm = norm();
  if (nrm == 0.0) throw ContractError("cannot normalize the zero vector");
  for (auto& a : amplitudes_) a /= nrm;
  return *this;
}

Complex StateVector::inner(const StateVector& other) const {
  if (other.n_sites_ != n_sites_) throw DomainError("inner product of mismatched chains");
  Complex acc{};
  for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
    acc += std::conj(amplitudes_[i]) * other.amplitudes_[i];
  }
  return acc;
}

void require_normalized(const StateVector& state, double tolerance) {
  const double dev = std::abs(state.norm_squared() - 1.0);
  if (dev > tolerance) {
    throw ContractError("state is not normalized (|norm^2 - 1| = " + std::to_string(dev) + ")");
  }
}

void apply_pauli_inplace(std::span<Complex> amplitudes, int n_sites, PauliAxis axis, int site) {
  check_site(n_sites, site);
  const std::size_t mask = std::size_t{1} << (site - 1);
  const std::size_t dim = amplitudes.size();
  switch (axis) {
    case PauliAxis::X:
      for (std::size_t i = 0; i < dim; ++i) {
        if (!(i & mask)) std::swap(amplitudes[i], amplitudes[i | mask]);
      }
      break;
    case PauliAxis::Y:
      // sigma_y|0> = i|1>, sigma_y|1> = -i|0>
      for (std::size_t i = 0; i < dim; ++i) {
        if (!(i & mask)) {
          const Complex up = amplitudes[i];
          const Complex down = amplitudes[i | mask];
          amplitudes[i] = Complex{0.0, -1.0} * down;
          amplitudes[i | mask] = Complex{0.0, 1.0} * up;
        }
      }
      break;
    case PauliAxis::Z:
      for (std::size_t i = 0; i < dim; ++i) {
        if (i & mask) amplitudes[i] = -amplitudes[i];
      }
      break;
  }
}

StateVector apply_pauli(const StateVector& state, PauliAxis axis, int site) {
  StateVector out = state;
  apply_pauli_inplace(out.amplitudes(), out.n_sites(), axis, site);
  return out;
}

double expectation(const StateVector& state, PauliAxis axis, int site) {
  require_normalized(state);
  check_site(state.n_sites(), site);
  const std::size_t mask = std::size_t{1} << (site - 1);
  const auto amps = state.amplitudes();
  double acc = 0.0;
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if (i & mask) {
      if (axis == PauliAxis::Z) acc -= std::norm(amps[i]);
      continue;
    }
    const Complex up = amps[i];
    const Complex down = amps[i | mask];
    switch (axis) {
      case PauliAxis::X: acc += 2.0 * std::real(std::conj(up) * down); break;
      case PauliAxis::Y: acc += 2.0 * std::imag(std::conj(up) * down); break;
      case PauliAxis::Z: acc += std::norm(up); break;
    }
  }
  return std::clamp(acc, -1.0, 1.0);
}

Complex two_point(const StateVector& state, PauliAxis axis_a, int site_a, PauliAxis axis_b,
                  int site_b) {
  require_normalized(state);
  check_site(state.n_sites(), site_a);
  check_site(state.n_sites(), site_b);
  if (site_a == site_b && axis_a == axis_b) return 1.0;
  // sigma_a is Hermitian: <psi|a b|psi> = <a psi | b psi>.
  return apply_pauli(state, axis_a, site_a).inner(apply_pauli(state, axis_b, site_b));
}

AdditiveOperator::AdditiveOperator(int n_sites, std::vector<SiteCoefficients> coeffs)
    : n_sites_(n_sites), coeffs_(std::move(coeffs)) {
  check_sites(n_sites);
  if (static_cast<int>(coeffs_.size()) != n_sites) {
    throw DomainError("coefficient table needs one row per site");
  }
}

AdditiveOperator AdditiveOperator::uniform(int n_sites, PauliAxis axis) {
  check_sites(n_sites);
  std::vector<SiteCoefficients> c(n_sites, SiteCoefficients{0.0, 0.0, 0.0});
  for (auto& row : c) row[axis_index(axis)] = 1.0;
  return AdditiveOperator(n_sites, std::move(c));
}

AdditiveOperator AdditiveOperator::staggered(int n_sites, PauliAxis axis) {
  check_sites(n_sites);
  std::vector<SiteCoefficients> c(n_sites, SiteCoefficients{0.0, 0.0, 0.0});
  for (int l = 1; l <= n_sites; ++l) c[l - 1][axis_index(axis)] = (l % 2 == 0) ? 1.0 : -1.0;
  return AdditiveOperator(n_sites, std::move(c));
}

double AdditiveOperator::coefficient(int site, PauliAxis axis) const {
  check_site(n_sites_, site);
  return coeffs_[site - 1][axis_index(axis)];
}

double AdditiveOperator::weight() const noexcept {
  double w = 0.0;
  for (const auto& row : coeffs_) {
    for (double c : row) w += c * c;
  }
  return w;
}

AdditiveOperator AdditiveOperator::normalized() const {
  const double w = weight();
  if (w == 0.0) throw ContractError("cannot normalize the zero additive operator");
  const double scale = std::sqrt(n_sites_ / w);
  auto c = coeffs_;
  for (auto& row : c) {
    for (double& x : row) x *= scale;
  }
  return AdditiveOperator(n_sites_, std::move(c));
}

std::vector<double> AdditiveOperator::flattened() const {
  std::vector<double> v;
  v.reserve(3 * coeffs_.size());
  for (const auto& row : coeffs_) v.insert(v.end(), row.begin(), row.end());
  return v;
}

StateVector apply_additive(const StateVector& state, const AdditiveOperator& op) {
  if (op.n_sites() != state.n_sites()) throw DomainError("operator and state sizes differ");
  std::vector<Complex> acc(state.dim(), Complex{});
  std::vector<Complex> scratch(state.dim());
  for (int l = 1; l <= state.n_sites(); ++l) {
    for (PauliAxis axis : kPauliAxes) {
      const double c = op.coefficients()[l - 1][axis_index(axis)];
      if (c == 0.0) continue;
      std::copy(state.amplitudes().begin(), state.amplitudes().end(), scratch.begin());
      apply_pauli_inplace(scratch, state.n_sites(), axis, l);
      for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += c * scratch[i];
    }
  }
  return StateVector(state.n_sites(), std::move(acc));
}

double additive_variance(const StateVector& state, const AdditiveOperator& op) {
  if (op.n_sites() != state.n_sites()) throw DomainError("operator and state sizes differ");
  require_normalized(state);
  const StateVector a_psi = apply_additive(state, op);
  const double mean = std::real(state.inner(a_psi));
  return std::max(0.0, a_psi.norm_squared() - mean * mean);
}

double magnetization_z(const StateVector& state) {
  const int n = state.n_sites();
  const auto amps = state.amplitudes();
  double acc = 0.0;
  for (std::size_t i = 0; i < amps.size(); ++i) {
    acc += std::norm(amps[i]) * (n - 2 * std::popcount(static_cast<std::uint64_t>(i)));
  }
  return acc;
}

StateVector ghz_state(int n) {
  if (n < 2) throw DomainError("GHZ state needs at least 2 sites");
  StateVector s(n);
  const double h = 1.0 / std::sqrt(2.0);
  s[0] = h;
  s[s.dim() - 1] = h;
  return s;
}

}  // namespace z2mem
