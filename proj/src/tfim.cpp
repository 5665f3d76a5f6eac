#include "z2mem/tfim.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include <Eigen/Sparse>

#include "z2mem/errors.hpp"

namespace z2mem {

namespace {

constexpr int kMaxDenseSites = 12;
constexpr int kMaxStabilizerSites = 12;

// Bits set where site l and site l+1 (cyclically) disagree.
std::uint64_t domain_walls(std::uint64_t index, int n) noexcept {
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  const std::uint64_t rotated = ((index >> 1) | (index << (n - 1))) & full;
  return index ^ rotated;
}

}  // namespace

TfimHamiltonian::TfimHamiltonian(int n_sites, double lambda) : n_sites_(n_sites), lambda_(lambda) {
  if (n_sites < kMinChainSites || n_sites > kMaxSites) {
    throw DomainError("periodic chain needs " + std::to_string(kMinChainSites) + " <= N <= " +
                      std::to_string(kMaxSites) + ", got " + std::to_string(n_sites));
  }
  if (!std::isfinite(lambda)) throw DomainError("lambda must be finite");
}

double TfimHamiltonian::diagonal(std::uint64_t basis_index) const noexcept {
  const int walls = std::popcount(domain_walls(basis_index, n_sites_));
  return -static_cast<double>(n_sites_ - 2 * walls);
}

void TfimHamiltonian::apply(std::span<const Complex> in, std::span<Complex> out) const {
  const std::size_t d = dim();
  if (in.size() != d || out.size() != d) throw DomainError("vector length is not 2^N");
  for (std::size_t i = 0; i < d; ++i) {
    Complex acc = diagonal(i) * in[i];
    if (lambda_ != 0.0) {
      Complex flips{};
      for (int b = 0; b < n_sites_; ++b) flips += in[i ^ (std::size_t{1} << b)];
      acc += lambda_ * flips;
    }
    out[i] = acc;
  }
}

StateVector TfimHamiltonian::apply(const StateVector& state) const {
  if (state.n_sites() != n_sites_) throw DomainError("state and Hamiltonian sizes differ");
  StateVector out(n_sites_);
  apply(state.amplitudes(), out.amplitudes());
  return out;
}

double TfimHamiltonian::energy(const StateVector& state) const {
  require_normalized(state);
  return std::real(state.inner(apply(state)));
}

Eigen::MatrixXd TfimHamiltonian::dense() const {
  if (n_sites_ > kMaxDenseSites) {
    throw CapabilityError("dense Hamiltonian limited to N <= " + std::to_string(kMaxDenseSites));
  }
  const auto d = static_cast<Eigen::Index>(dim());
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    h(i, i) = diagonal(static_cast<std::uint64_t>(i));
    for (int b = 0; b < n_sites_; ++b) h(i ^ (Eigen::Index{1} << b), i) += lambda_;
  }
  return h;
}

TfimHamiltonian build_tfim(int n, double lambda) { return TfimHamiltonian(n, lambda); }

StateVector apply_global_flip(const StateVector& state) {
  const std::size_t full = state.dim() - 1;
  std::vector<Complex> out(state.dim());
  for (std::size_t i = 0; i < state.dim(); ++i) out[i ^ full] = state[i];
  return StateVector(state.n_sites(), std::move(out));
}

double global_flip_expectation(const StateVector& state) {
  require_normalized(state);
  const std::size_t full = state.dim() - 1;
  Complex acc{};
  for (std::size_t i = 0; i < state.dim(); ++i) acc += std::conj(state[i]) * state[i ^ full];
  return std::clamp(std::real(acc), -1.0, 1.0);
}

double StabilizerReport::max_residual() const noexcept {
  return std::max({product_identity_residual, x_commutation_residual, z_commutation_residual,
                   anticommutation_residual});
}

StabilizerReport stabilizer_check(int n) {
  if (n < kMinChainSites || n > kMaxStabilizerSites) {
    throw DomainError("stabilizer check supports 3 <= N <= " +
                      std::to_string(kMaxStabilizerSites));
  }
  using Sparse = Eigen::SparseMatrix<double>;
  const auto d = Eigen::Index{1} << n;

  auto diagonal_matrix = [d](auto&& entry) {
    Sparse m(d, d);
    m.reserve(Eigen::VectorXi::Constant(d, 1));
    for (Eigen::Index i = 0; i < d; ++i) m.insert(i, i) = entry(static_cast<std::uint64_t>(i));
    m.makeCompressed();
    return m;
  };
  auto z_sign = [](std::uint64_t i, int site) { return ((i >> (site - 1)) & 1U) ? -1.0 : 1.0; };

  std::vector<Sparse> bonds;
  bonds.reserve(n);
  for (int l = 1; l <= n; ++l) {
    const int next = (l % n) + 1;
    bonds.push_back(diagonal_matrix([&](std::uint64_t i) { return z_sign(i, l) * z_sign(i, next); }));
  }

  Sparse flip(d, d);
  flip.reserve(Eigen::VectorXi::Constant(d, 1));
  for (Eigen::Index i = 0; i < d; ++i) flip.insert(i ^ (d - 1), i) = 1.0;
  flip.makeCompressed();
  const Sparse phase = diagonal_matrix([&](std::uint64_t i) { return z_sign(i, 1); });

  StabilizerReport report;
  report.n_sites = n;

  // Projector onto the common +1 eigenspace of B_1..B_{N-1}.
  Sparse identity(d, d);
  identity.setIdentity();
  Sparse projector = identity;
  Sparse product = identity;
  for (int l = 0; l < n - 1; ++l) {
    projector = Sparse(projector * (0.5 * (identity + bonds[l])));
    product = Sparse(product * bonds[l]);
  }
  report.code_dimension = static_cast<int>(std::lround(projector.diagonal().sum()));
  for (Eigen::Index i = 0; i < d; ++i) {
    if (projector.coeff(i, i) > 0.5) report.code_basis.push_back(static_cast<std::uint64_t>(i));
  }

  report.product_identity_residual = Sparse(bonds[n - 1] - product).norm();
  for (const Sparse& b : bonds) {
    report.x_commutation_residual =
        std::max(report.x_commutation_residual, Sparse(flip * b - b * flip).norm());
    report.z_commutation_residual =
        std::max(report.z_commutation_residual, Sparse(phase * b - b * phase).norm());
  }
  report.anticommutation_residual = Sparse(flip * phase + phase * flip).norm();
  return report;
}

}  // namespace z2mem
