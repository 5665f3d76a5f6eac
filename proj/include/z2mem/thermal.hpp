#pragma once

// Gibbs states rho = exp(-H/kT)/Z of the TFIM and the commutator matrix
// W_{al,bl'} = Tr([rho, s_a(l)] [s_b(l'), rho]).
//
// W is the Gram matrix of C_{al} = [rho, s_a(l)] under the Hilbert-Schmidt
// product, so it is PSD by construction. For a pure state W = 2 Re V.

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "z2mem/eigensolve.hpp"
#include "z2mem/macroscopicity.hpp"
#include "z2mem/tfim.hpp"

namespace z2mem {

struct GibbsState {
  int n_sites = 0;
  double lambda = 0.0;
  double kT = 0.0;             // units of J = 1; 0 for states not built from H
  Eigen::MatrixXcd rho;
  /// |Tr(rho) - 1| before renormalization.
  double trace_correction = 0.0;
};

/// Density matrix from the dense spectrum. kT > 0, N <= 10.
GibbsState gibbs_state(const TfimHamiltonian& h, double kT);
/// Same, reusing an existing decomposition (must carry eigenvectors).
GibbsState gibbs_state(const FullSpectrum& spectrum, double kT);

/// Wraps an arbitrary density matrix on n sites, renormalizing to unit trace
/// and recording the correction.
GibbsState density_state(int n_sites, Eigen::MatrixXcd rho);
GibbsState pure_density(const StateVector& state);

/// Tr(rho H).
double thermal_energy(const GibbsState& state, const TfimHamiltonian& h);

CorrelationMatrix build_w_matrix(const GibbsState& state);

struct ThermalPoint {
  double kT = 0.0;
  double e1 = 0.0;      // largest eigenvalue of W, not rescaled by N
  double energy = 0.0;  // Tr(rho H)
};

std::vector<ThermalPoint> thermal_scan(double lambda, int n, std::span<const double> kT_grid,
                                       int threads = 1);

/// `points` log-spaced values in [lo, hi]; the default scan grid is
/// log_grid(0.05, 2.0, 40).
std::vector<double> log_grid(double lo, double hi, int points);

}  // namespace z2mem
