#pragma once

// H = -sum_l sigma_z(l) sigma_z(l+1) + lambda sum_l sigma_x(l) on a periodic
// chain (sigma_z(N+1) = sigma_z(1)), energy unit J = 1.

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "z2mem/pauli.hpp"

namespace z2mem {

inline constexpr int kMinChainSites = 3;

class TfimHamiltonian {
 public:
  TfimHamiltonian(int n_sites, double lambda);

  int n_sites() const noexcept { return n_sites_; }
  double lambda() const noexcept { return lambda_; }
  std::size_t dim() const noexcept { return std::size_t{1} << n_sites_; }

  /// out = H in. Both spans have length dim() and must not alias.
  void apply(std::span<const Complex> in, std::span<Complex> out) const;
  StateVector apply(const StateVector& state) const;

  /// <basis|H|basis> = -(N - 2 * number of domain walls).
  double diagonal(std::uint64_t basis_index) const noexcept;

  /// <psi|H|psi> for a normalized state.
  double energy(const StateVector& state) const;

  /// Explicit real matrix. Limited to N <= 12.
  Eigen::MatrixXd dense() const;

 private:
  int n_sites_;
  double lambda_;
};

TfimHamiltonian build_tfim(int n, double lambda);

/// Global flip X = prod_l sigma_x(l): index i -> i xor (2^N - 1).
StateVector apply_global_flip(const StateVector& state);
double global_flip_expectation(const StateVector& state);

struct StabilizerReport {
  int n_sites = 0;
  /// Dimension of the common +1 eigenspace of B_1..B_{N-1}.
  int code_dimension = 0;
  /// Basis indices spanning the code space.
  std::vector<std::uint64_t> code_basis;
  /// ||B_N - prod_{l<N} B_l||_F
  double product_identity_residual = 0.0;
  /// max_l ||[X, B_l]||_F
  double x_commutation_residual = 0.0;
  /// max_l ||[Z, B_l]||_F
  double z_commutation_residual = 0.0;
  /// ||X Z + Z X||_F
  double anticommutation_residual = 0.0;

  double max_residual() const noexcept;
};

/// Builds B_l, X = prod sigma_x, Z = sigma_z(1) as explicit sparse matrices and
/// checks the code algebra. 3 <= n <= 12.
StabilizerReport stabilizer_check(int n);

}  // namespace z2mem
