#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "z2mem/pauli.hpp"
#include "z2mem/tfim.hpp"

namespace z2mem {

struct EigenPairs {
  std::vector<double> eigenvalues;          // ascending
  std::vector<StateVector> eigenvectors;
  std::vector<double> residuals;            // ||H v - E v||
  std::vector<double> parities;             // <v|X|v>, +-1
  long applications = 0;                    // total H applications
};

struct LanczosOptions {
  /// Residual tolerance ||H v - E v|| for accepting an eigenpair.
  double tol = 1e-10;
  /// Budget of H applications per eigenpair.
  long max_applications = 5000;
  /// Krylov dimension before an explicit restart from the best Ritz vector.
  int krylov_dim = 160;
  std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
};

/// The k (1 <= k <= 4) algebraically smallest eigenpairs. Each X-parity
/// sector is solved separately, so exponentially split doublets are
/// resolved regardless of their splitting. Throws ConvergenceError when a
/// pair does not reach tol within the budget.
EigenPairs lowest_eigenpairs(const TfimHamiltonian& h, int k, double tol = 1e-10);
EigenPairs lowest_eigenpairs(const TfimHamiltonian& h, int k, const LanczosOptions& options);

/// Lowest `count` eigenpairs restricted to the parity sector (+1 or -1).
EigenPairs lowest_in_sector(const TfimHamiltonian& h, int parity, int count,
                            const LanczosOptions& options = {});

inline constexpr int kMaxDenseSpectrumSites = 10;

struct FullSpectrum {
  int n_sites = 0;
  double lambda = 0.0;
  Eigen::VectorXd eigenvalues;                 // ascending, length 2^N
  std::optional<Eigen::MatrixXd> eigenvectors; // columns, orthonormal
};

/// Dense eigen-decomposition, N <= 10 (CapabilityError above).
FullSpectrum full_spectrum(const TfimHamiltonian& h, bool keep_vectors = true);

struct GapPoint {
  int n = 0;
  double e0 = 0.0;
  double e1 = 0.0;
  double gap = 0.0;
};

/// Delta E = E1 - E0 for every N in [n_min, n_max]. lambda = 0 is rejected
/// (exactly degenerate doublet).
std::vector<GapPoint> gap_scan(double lambda, int n_min, int n_max, int threads = 1);

/// (e0 + s e1)/sqrt(2). Each input is first rotated so its largest-magnitude
/// amplitude is real positive; s = +-1 is chosen so <M_z> of the result is
/// nonnegative, i.e. the combination leans on the M_z > 0 branch.
StateVector superposed_state(const StateVector& e0, const StateVector& e1);

struct AdiabaticPoint {
  int n = 0;
  double time = 0.0;
};

/// T ~ 1/(Delta E)^2 per N.
std::vector<AdiabaticPoint> adiabatic_time_estimate(std::span<const GapPoint> gaps);

}  // namespace z2mem
