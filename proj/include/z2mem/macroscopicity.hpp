#pragma once

// Variance-covariance matrix (VCM) of a pure state and the finite-size
// scaling fits used to read off index p.

#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "z2mem/pauli.hpp"

namespace z2mem {

enum class CorrelationKind { Vcm, W };

/// 3N x 3N Hermitian matrix indexed by (alpha, l) -> 3(l-1) + alpha, with
/// alpha in {0: x, 1: y, 2: z}. Holds either the VCM of a pure state or the
/// commutator Gram matrix W of a mixed state.
struct CorrelationMatrix {
  int n_sites = 0;
  CorrelationKind kind = CorrelationKind::Vcm;
  Eigen::MatrixXcd entries;
  Eigen::VectorXd eigenvalues;        // descending
  Eigen::MatrixXcd principal_vectors; // 3N x 2, columns for e1 and e2

  double e1() const { return eigenvalues[0]; }
  double e2() const { return eigenvalues[1]; }

  static Eigen::Index flat_index(PauliAxis axis, int site) {
    return 3 * static_cast<Eigen::Index>(site - 1) + axis_index(axis);
  }
};

/// Hermitizes `entries` and attaches the descending spectrum.
CorrelationMatrix make_correlation_matrix(int n_sites, CorrelationKind kind,
                                          Eigen::MatrixXcd entries);

/// V_{al,bl'} = <s_a(l) s_b(l')> - <s_a(l)><s_b(l')>, all 9N^2 entries.
CorrelationMatrix build_vcm(const StateVector& state);

enum class FitModel {
  PowerLaw,    // log y vs log x
  Exponential, // log y vs x
};

struct ScalingFit {
  std::vector<double> xs;
  std::vector<double> ys;
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  FitModel model = FitModel::PowerLaw;

  /// Model value at x (back-transformed).
  double predict(double x) const;
};

/// Least-squares line through the transformed points. Needs >= 3 points and
/// y > 0 (x > 0 as well for power laws).
ScalingFit fit_scaling(std::span<const double> xs, std::span<const double> ys, FitModel model);

struct ScalePoint {
  int n = 0;
  double value = 0.0;
};

struct IndexPEstimate {
  ScalingFit fit;
  double p = 1.0;  // 1 + slope of log e1 vs log N
};

IndexPEstimate fit_index_p(std::span<const ScalePoint> points);

/// ln(Delta E) against N.
ScalingFit fit_exponential_gap(std::span<const ScalePoint> points);

struct SpectrumPoint {
  int n = 0;
  double e1 = 0.0;
  double e2 = 0.0;
  double ground_energy = 0.0;
};

/// Ground state of H(N, lambda) for every N in range, with the top two VCM
/// eigenvalues. Default range N = 6..13.
std::vector<SpectrumPoint> vcm_scan(double lambda, int n_min = 6, int n_max = 13, int threads = 1);

/// (N, e1) for the ground state.
std::vector<ScalePoint> e1_scan(double lambda, int n_min = 6, int n_max = 13, int threads = 1);
/// (N, e2) for the ground state.
std::vector<ScalePoint> second_eigenvalue_scan(double lambda, int n_min = 6, int n_max = 13,
                                               int threads = 1);

struct FluctuationOperator {
  AdditiveOperator op;
  /// e1 - e2 < 1e-10 e1: the principal direction is not unique.
  bool ambiguous = false;
  /// Fraction of sum c^2 carried by z components.
  double z_weight_fraction = 0.0;
  /// Norm of the imaginary part of the phase-aligned principal vector; zero
  /// when the maximizing direction is realizable with real coefficients.
  double imaginary_residual = 0.0;
};

/// Principal eigenvector of the matrix reshaped into per-site coefficients,
/// rescaled so sum c^2 = N.
FluctuationOperator max_fluctuation_operator(const CorrelationMatrix& matrix);

struct MzDistribution {
  int n_sites = 0;
  std::vector<int> support;            // -N, -N+2, ..., N
  std::vector<double> probabilities;

  double probability(int mz) const;
  double mean() const;
  /// max |P(M) - P(-M)|
  double asymmetry() const;
  /// Total weight on M_z > 0.
  double positive_weight() const;
};

MzDistribution mz_distribution(const StateVector& state);

}  // namespace z2mem
