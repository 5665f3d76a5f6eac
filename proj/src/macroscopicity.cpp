#include "z2mem/macroscopicity.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>

#include "z2mem/eigensolve.hpp"
#include "z2mem/errors.hpp"
#include "z2mem/parallel.hpp"
#include "z2mem/tfim.hpp"

namespace z2mem {

CorrelationMatrix make_correlation_matrix(int n_sites, CorrelationKind kind,
                                          Eigen::MatrixXcd entries) {
  const Eigen::Index dim = 3 * static_cast<Eigen::Index>(n_sites);
  if (entries.rows() != dim || entries.cols() != dim) {
    throw DomainError("correlation matrix must be 3N x 3N");
  }
  CorrelationMatrix m;
  m.n_sites = n_sites;
  m.kind = kind;
  m.entries = 0.5 * (entries + entries.adjoint());

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m.entries);
  if (solver.info() != Eigen::Success) {
    throw ConvergenceError("correlation matrix diagonalization failed", 0.0, 0);
  }
  m.eigenvalues = solver.eigenvalues().reverse();
  const Eigen::Index top = std::min<Eigen::Index>(2, dim);
  m.principal_vectors = solver.eigenvectors().rightCols(top).rowwise().reverse();
  return m;
}

CorrelationMatrix build_vcm(const StateVector& state) {
  require_normalized(state);
  const int n = state.n_sites();
  const auto dim = static_cast<Eigen::Index>(state.dim());
  const Eigen::Index k = 3 * static_cast<Eigen::Index>(n);

  // Column (alpha, l) holds sigma_alpha(l)|psi>.
  Eigen::MatrixXcd images(dim, k);
  const Eigen::Map<const Eigen::VectorXcd> psi(state.amplitudes().data(), dim);
  for (int l = 1; l <= n; ++l) {
    for (PauliAxis axis : kPauliAxes) {
      const Eigen::Index c = CorrelationMatrix::flat_index(axis, l);
      images.col(c) = psi;
      apply_pauli_inplace(std::span<Complex>(images.col(c).data(), state.dim()), n, axis, l);
    }
  }
  const Eigen::VectorXd means = (psi.adjoint() * images).transpose().real();
  Eigen::MatrixXcd v = images.adjoint() * images;
  v -= (means * means.transpose()).cast<Complex>();
  return make_correlation_matrix(n, CorrelationKind::Vcm, std::move(v));
}

double ScalingFit::predict(double x) const {
  switch (model) {
    case FitModel::PowerLaw: return std::exp(intercept) * std::pow(x, slope);
    case FitModel::Exponential: return std::exp(intercept + slope * x);
  }
  return 0.0;
}

ScalingFit fit_scaling(std::span<const double> xs, std::span<const double> ys, FitModel model) {
  if (xs.size() != ys.size()) throw DomainError("fit needs equally many x and y values");
  if (xs.size() < 3) throw DomainError("fit needs at least 3 points");

  ScalingFit fit;
  fit.model = model;
  fit.xs.assign(xs.begin(), xs.end());
  fit.ys.assign(ys.begin(), ys.end());

  std::vector<double> u(xs.size());
  std::vector<double> w(ys.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!(ys[i] > 0.0)) throw DomainError("fit values must be positive, got " + std::to_string(ys[i]));
    if (model == FitModel::PowerLaw && !(xs[i] > 0.0)) {
      throw DomainError("power-law abscissae must be positive");
    }
    u[i] = model == FitModel::PowerLaw ? std::log(xs[i]) : xs[i];
    w[i] = std::log(ys[i]);
  }

  const double count = static_cast<double>(u.size());
  const double mu = std::accumulate(u.begin(), u.end(), 0.0) / count;
  const double mw = std::accumulate(w.begin(), w.end(), 0.0) / count;
  double suu = 0.0;
  double suw = 0.0;
  double sww = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    suu += (u[i] - mu) * (u[i] - mu);
    suw += (u[i] - mu) * (w[i] - mw);
    sww += (w[i] - mw) * (w[i] - mw);
  }
  if (suu == 0.0) throw DomainError("fit abscissae are all equal");
  fit.slope = suw / suu;
  fit.intercept = mw - fit.slope * mu;

  double ss_res = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double r = w[i] - (fit.intercept + fit.slope * u[i]);
    ss_res += r * r;
  }
  if (sww <= 1e-300) {
    fit.r_squared = 1.0;  // flat data is fitted exactly by a zero slope
  } else {
    fit.r_squared = std::clamp(1.0 - ss_res / sww, 0.0, 1.0);
  }
  return fit;
}

namespace {

void split(std::span<const ScalePoint> points, std::vector<double>& xs, std::vector<double>& ys) {
  xs.clear();
  ys.clear();
  for (const ScalePoint& p : points) {
    xs.push_back(p.n);
    ys.push_back(p.value);
  }
}

}  // namespace

IndexPEstimate fit_index_p(std::span<const ScalePoint> points) {
  std::vector<double> xs;
  std::vector<double> ys;
  split(points, xs, ys);
  IndexPEstimate est;
  est.fit = fit_scaling(xs, ys, FitModel::PowerLaw);
  est.p = 1.0 + est.fit.slope;
  return est;
}

ScalingFit fit_exponential_gap(std::span<const ScalePoint> points) {
  std::vector<double> xs;
  std::vector<double> ys;
  split(points, xs, ys);
  return fit_scaling(xs, ys, FitModel::Exponential);
}

std::vector<SpectrumPoint> vcm_scan(double lambda, int n_min, int n_max, int threads) {
  if (n_min < kMinChainSites || n_min > n_max || n_max > 14) {
    throw DomainError("VCM scan needs 3 <= n_min <= n_max <= 14");
  }
  return parallel_map(static_cast<std::size_t>(n_max - n_min + 1), threads, [&](std::size_t i) {
    const int n = n_min + static_cast<int>(i);
    const EigenPairs ground = lowest_eigenpairs(build_tfim(n, lambda), 1);
    const CorrelationMatrix vcm = build_vcm(ground.eigenvectors.front());
    return SpectrumPoint{n, vcm.e1(), vcm.e2(), ground.eigenvalues.front()};
  });
}

std::vector<ScalePoint> e1_scan(double lambda, int n_min, int n_max, int threads) {
  std::vector<ScalePoint> out;
  for (const SpectrumPoint& p : vcm_scan(lambda, n_min, n_max, threads)) out.push_back({p.n, p.e1});
  return out;
}

std::vector<ScalePoint> second_eigenvalue_scan(double lambda, int n_min, int n_max, int threads) {
  std::vector<ScalePoint> out;
  for (const SpectrumPoint& p : vcm_scan(lambda, n_min, n_max, threads)) out.push_back({p.n, p.e2});
  return out;
}

FluctuationOperator max_fluctuation_operator(const CorrelationMatrix& matrix) {
  const int n = matrix.n_sites;
  if (matrix.principal_vectors.cols() < 1) throw ContractError("correlation matrix not decomposed");

  Eigen::VectorXcd u = matrix.principal_vectors.col(0);
  // Rotate so that sum u_i^2 is real positive, which maximizes ||Re u||.
  const Complex square_sum = (u.array() * u.array()).sum();
  if (std::abs(square_sum) > 1e-14) u *= std::polar(1.0, -0.5 * std::arg(square_sum));

  Eigen::VectorXd re = u.real();
  Eigen::Index largest = 0;
  re.cwiseAbs().maxCoeff(&largest);
  if (re[largest] < 0.0) {
    re = -re;
    u = -u;
  }

  FluctuationOperator out{AdditiveOperator::uniform(n, PauliAxis::Z), false, 0.0, 0.0};
  out.imaginary_residual = u.imag().norm();
  const double e1 = matrix.eigenvalues[0];
  const double e2 = matrix.eigenvalues.size() > 1 ? matrix.eigenvalues[1] : -INFINITY;
  out.ambiguous = (e1 - e2) < 1e-10 * std::max(std::abs(e1), 1e-300);

  std::vector<AdditiveOperator::SiteCoefficients> coeffs(static_cast<std::size_t>(n));
  double z_weight = 0.0;
  for (int l = 1; l <= n; ++l) {
    for (PauliAxis axis : kPauliAxes) {
      const double c = re[CorrelationMatrix::flat_index(axis, l)];
      coeffs[static_cast<std::size_t>(l - 1)][axis_index(axis)] = c;
      if (axis == PauliAxis::Z) z_weight += c * c;
    }
  }
  const double total = re.squaredNorm();
  out.z_weight_fraction = total > 0.0 ? z_weight / total : 0.0;
  out.op = AdditiveOperator(n, std::move(coeffs)).normalized();
  return out;
}

double MzDistribution::probability(int mz) const {
  if ((mz + n_sites) % 2 != 0 || mz < -n_sites || mz > n_sites) return 0.0;
  return probabilities[static_cast<std::size_t>((mz + n_sites) / 2)];
}

double MzDistribution::mean() const {
  double acc = 0.0;
  for (std::size_t i = 0; i < support.size(); ++i) acc += support[i] * probabilities[i];
  return acc;
}

double MzDistribution::asymmetry() const {
  double worst = 0.0;
  const std::size_t m = probabilities.size();
  for (std::size_t i = 0; i < m; ++i) {
    worst = std::max(worst, std::abs(probabilities[i] - probabilities[m - 1 - i]));
  }
  return worst;
}

double MzDistribution::positive_weight() const {
  double acc = 0.0;
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (support[i] > 0) acc += probabilities[i];
  }
  return acc;
}

MzDistribution mz_distribution(const StateVector& state) {
  require_normalized(state);
  const int n = state.n_sites();
  MzDistribution dist;
  dist.n_sites = n;
  dist.probabilities.assign(static_cast<std::size_t>(n + 1), 0.0);
  for (int m = 0; m <= n; ++m) dist.support.push_back(-n + 2 * m);
  for (std::size_t i = 0; i < state.dim(); ++i) {
    // M_z = N - 2 * (number of down spins) -> index N - downs.
    const int downs = std::popcount(static_cast<std::uint64_t>(i));
    dist.probabilities[static_cast<std::size_t>(n - downs)] += std::norm(state[i]);
  }
  return dist;
}

}  // namespace z2mem
