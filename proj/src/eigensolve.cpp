#include "z2mem/eigensolve.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "z2mem/errors.hpp"
#include "z2mem/parallel.hpp"

namespace z2mem {

namespace {

using Vec = Eigen::VectorXcd;

constexpr int kMaxLowest = 4;
constexpr int kMaxScanSites = 14;

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Symmetrizes v into the sector X v = parity * v.
void project_sector(Vec& v, int parity) {
  const Eigen::Index full = v.size() - 1;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const Eigen::Index j = i ^ full;
    if (i < j) {
      const Complex avg = 0.5 * (v[i] + static_cast<double>(parity) * v[j]);
      v[i] = avg;
      v[j] = static_cast<double>(parity) * avg;
    }
  }
}

void orthogonalize(Vec& w, const std::vector<Vec>& basis) {
  for (int pass = 0; pass < 2; ++pass) {
    for (const Vec& u : basis) w -= u.dot(w) * u;
  }
}

Vec start_vector(Eigen::Index dim, std::uint64_t seed) {
  Vec v(dim);
  std::uint64_t state = seed;
  for (Eigen::Index i = 0; i < dim; ++i) {
    const double u = static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53;
    v[i] = Complex{2.0 * u - 1.0, 0.0};
  }
  return v;
}

void apply_h(const TfimHamiltonian& h, const Vec& in, Vec& out) {
  h.apply(std::span<const Complex>(in.data(), static_cast<std::size_t>(in.size())),
          std::span<Complex>(out.data(), static_cast<std::size_t>(out.size())));
}

struct RitzPair {
  double value;
  Vec vector;
  double residual;
};

// Explicitly restarted Lanczos with full reorthogonalization for the lowest
// eigenpair in a parity sector, orthogonal to `locked`.
RitzPair lanczos_lowest(const TfimHamiltonian& h, int parity, const std::vector<Vec>& locked,
                        const LanczosOptions& opt, long& applications) {
  const auto dim = static_cast<Eigen::Index>(h.dim());
  Vec v = start_vector(dim, opt.seed + 0x1000ULL * locked.size() + (parity > 0 ? 0 : 0x77ULL));
  project_sector(v, parity);
  orthogonalize(v, locked);
  if (v.norm() < 1e-8) throw ContractError("parity sector exhausted by deflation");
  v.normalize();

  long used = 0;
  double best_residual = std::numeric_limits<double>::infinity();
  Vec w(dim);
  Vec hy(dim);

  while (used < opt.max_applications) {
    std::vector<Vec> basis{v};
    std::vector<double> alpha;
    std::vector<double> beta;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri;

    for (int j = 0; j < opt.krylov_dim && used < opt.max_applications; ++j) {
      apply_h(h, basis[j], w);
      ++used;
      project_sector(w, parity);
      orthogonalize(w, locked);
      const double a = std::real(basis[j].dot(w));
      w -= a * basis[j];
      if (j > 0) w -= beta[j - 1] * basis[j - 1];
      orthogonalize(w, basis);
      alpha.push_back(a);
      const double b = w.norm();

      const auto m = static_cast<Eigen::Index>(alpha.size());
      Eigen::VectorXd diag = Eigen::Map<Eigen::VectorXd>(alpha.data(), m);
      Eigen::VectorXd sub = Eigen::Map<Eigen::VectorXd>(beta.data(), m - 1);
      tri.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
      const double estimate = b * std::abs(tri.eigenvectors()(m - 1, 0));
      const double scale = std::abs(tri.eigenvalues()[0]) + 1.0;
      if (estimate < 0.05 * opt.tol || b < 1e-13 * scale) break;
      beta.push_back(b);
      basis.push_back(w / b);
    }

    // Ritz vector of the lowest Ritz value.
    const Eigen::VectorXd s = tri.eigenvectors().col(0);
    Vec y = Vec::Zero(dim);
    for (Eigen::Index i = 0; i < s.size(); ++i) y += s[i] * basis[static_cast<std::size_t>(i)];
    project_sector(y, parity);
    orthogonalize(y, locked);
    y.normalize();

    apply_h(h, y, hy);
    ++used;
    const double theta = std::real(y.dot(hy));
    const double residual = (hy - theta * y).norm();
    best_residual = std::min(best_residual, residual);
    if (residual < opt.tol) {
      applications += used;
      return {theta, std::move(y), residual};
    }
    v = std::move(y);
  }
  applications += used;
  throw ConvergenceError("Lanczos did not converge for N=" + std::to_string(h.n_sites()) +
                             ", lambda=" + std::to_string(h.lambda()) + " (best residual " +
                             std::to_string(best_residual) + ")",
                         best_residual, used);
}

StateVector to_state(int n, const Vec& v) {
  return StateVector(n, std::vector<Complex>(v.data(), v.data() + v.size()));
}

void check_lowest_args(int k, double tol) {
  if (k < 1 || k > kMaxLowest) {
    throw DomainError("k must lie in 1.." + std::to_string(kMaxLowest));
  }
  if (!(tol >= 1e-12)) throw DomainError("tolerance must be >= 1e-12");
}

}  // namespace

EigenPairs lowest_in_sector(const TfimHamiltonian& h, int parity, int count,
                            const LanczosOptions& options) {
  if (parity != 1 && parity != -1) throw DomainError("parity must be +1 or -1");
  if (count < 1 || static_cast<std::size_t>(count) > h.dim() / 2) {
    throw DomainError("requested more eigenpairs than the sector holds");
  }
  EigenPairs out;
  std::vector<Vec> locked;
  for (int i = 0; i < count; ++i) {
    RitzPair pair = lanczos_lowest(h, parity, locked, options, out.applications);
    StateVector state = to_state(h.n_sites(), pair.vector);
    out.eigenvalues.push_back(pair.value);
    out.residuals.push_back(pair.residual);
    out.parities.push_back(global_flip_expectation(state));
    out.eigenvectors.push_back(std::move(state));
    locked.push_back(std::move(pair.vector));
  }
  return out;
}

EigenPairs lowest_eigenpairs(const TfimHamiltonian& h, int k, double tol) {
  LanczosOptions options;
  options.tol = tol;
  return lowest_eigenpairs(h, k, options);
}

EigenPairs lowest_eigenpairs(const TfimHamiltonian& h, int k, const LanczosOptions& options) {
  check_lowest_args(k, options.tol);
  const int per_sector = std::min<int>(k, static_cast<int>(h.dim() / 2));
  EigenPairs even = lowest_in_sector(h, +1, per_sector, options);
  EigenPairs odd = lowest_in_sector(h, -1, per_sector, options);

  struct Entry {
    double value;
    const EigenPairs* source;
    std::size_t index;
  };
  std::vector<Entry> merged;
  for (std::size_t i = 0; i < even.eigenvalues.size(); ++i) merged.push_back({even.eigenvalues[i], &even, i});
  for (std::size_t i = 0; i < odd.eigenvalues.size(); ++i) merged.push_back({odd.eigenvalues[i], &odd, i});
  std::stable_sort(merged.begin(), merged.end(),
                   [](const Entry& a, const Entry& b) { return a.value < b.value; });

  EigenPairs out;
  out.applications = even.applications + odd.applications;
  for (int i = 0; i < k; ++i) {
    const Entry& e = merged[static_cast<std::size_t>(i)];
    out.eigenvalues.push_back(e.value);
    out.eigenvectors.push_back(e.source->eigenvectors[e.index]);
    out.residuals.push_back(e.source->residuals[e.index]);
    out.parities.push_back(e.source->parities[e.index]);
  }
  return out;
}

FullSpectrum full_spectrum(const TfimHamiltonian& h, bool keep_vectors) {
  if (h.n_sites() > kMaxDenseSpectrumSites) {
    throw CapabilityError("full spectrum limited to N <= " +
                          std::to_string(kMaxDenseSpectrumSites));
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
      h.dense(), keep_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw ConvergenceError("dense eigensolver failed", std::numeric_limits<double>::infinity(), 0);
  }
  FullSpectrum out;
  out.n_sites = h.n_sites();
  out.lambda = h.lambda();
  out.eigenvalues = solver.eigenvalues();
  if (keep_vectors) out.eigenvectors = solver.eigenvectors();
  return out;
}

std::vector<GapPoint> gap_scan(double lambda, int n_min, int n_max, int threads) {
  if (lambda == 0.0) throw DomainError("lambda = 0 has an exactly degenerate ground doublet");
  if (n_min < kMinChainSites || n_min > n_max || n_max > kMaxScanSites) {
    throw DomainError("gap scan needs 3 <= n_min <= n_max <= 14");
  }
  return parallel_map(static_cast<std::size_t>(n_max - n_min + 1), threads, [&](std::size_t i) {
    const int n = n_min + static_cast<int>(i);
    const EigenPairs pairs = lowest_eigenpairs(build_tfim(n, lambda), 2);
    GapPoint p;
    p.n = n;
    p.e0 = pairs.eigenvalues[0];
    p.e1 = pairs.eigenvalues[1];
    p.gap = p.e1 - p.e0;
    return p;
  });
}

StateVector superposed_state(const StateVector& e0, const StateVector& e1) {
  if (e0.n_sites() != e1.n_sites()) throw DomainError("states on different chains");
  require_normalized(e0, 1e-8);
  require_normalized(e1, 1e-8);
  if (std::abs(e0.inner(e1)) > 1e-8) throw ContractError("superposed_state needs orthogonal inputs");

  auto fix_phase = [](const StateVector& s) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < s.dim(); ++i) {
      if (std::abs(s[i]) > std::abs(s[best]) * (1.0 + 1e-12)) best = i;
    }
    const Complex phase = std::conj(s[best]) / std::abs(s[best]);
    StateVector out = s;
    for (auto& a : out.amplitudes()) a *= phase;
    return out;
  };
  const StateVector a = fix_phase(e0);
  const StateVector b = fix_phase(e1);

  // <M_z> of (a + s b)/sqrt2 is (<a|Mz|a> + <b|Mz|b>)/2 + s Re<a|Mz|b>; the
  // cross term decides the branch.
  const int n = a.n_sites();
  double cross = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const int mz = n - 2 * std::popcount(static_cast<std::uint64_t>(i));
    cross += mz * std::real(std::conj(a[i]) * b[i]);
  }
  const double sign = cross < 0.0 ? -1.0 : 1.0;

  std::vector<Complex> amps(a.dim());
  const double h = 1.0 / std::sqrt(2.0);
  for (std::size_t i = 0; i < a.dim(); ++i) amps[i] = h * (a[i] + sign * b[i]);
  StateVector out(n, std::move(amps));
  out.normalize();
  return out;
}

std::vector<AdiabaticPoint> adiabatic_time_estimate(std::span<const GapPoint> gaps) {
  std::vector<AdiabaticPoint> out;
  out.reserve(gaps.size());
  for (const GapPoint& g : gaps) {
    if (!(g.gap > 0.0)) {
      throw DomainError("adiabatic estimate needs a positive gap (N=" + std::to_string(g.n) + ")");
    }
    out.push_back({g.n, 1.0 / (g.gap * g.gap)});
  }
  return out;
}

}  // namespace z2mem
