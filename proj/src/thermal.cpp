#include "z2mem/thermal.hpp"

#include <array>
#include <cmath>
#include <string>

#include "z2mem/errors.hpp"
#include "z2mem/parallel.hpp"

namespace z2mem {

namespace {

using Index = Eigen::Index;

// Above this many stored entries the commutators are regenerated per site
// pair instead of cached.
constexpr double kCommutatorCacheEntries = 16.0 * 1024 * 1024;

void check_kT(double kT) {
  if (!(kT > 0.0) || !std::isfinite(kT)) {
    throw DomainError("temperature must be positive and finite, got " + std::to_string(kT));
  }
}

// [rho, sigma_axis(site)] without forming sigma. For X and Y,
// sigma|k> = phase(k)|k ^ mask>.
Eigen::MatrixXcd commutator(const Eigen::MatrixXcd& rho, PauliAxis axis, int site) {
  const Index d = rho.rows();
  const Index mask = Index{1} << (site - 1);
  Eigen::MatrixXcd c(d, d);

  if (axis == PauliAxis::Z) {
    for (Index j = 0; j < d; ++j) {
      const double zj = (j & mask) ? -1.0 : 1.0;
      for (Index i = 0; i < d; ++i) {
        const double zi = (i & mask) ? -1.0 : 1.0;
        c(i, j) = rho(i, j) * (zj - zi);
      }
    }
    return c;
  }

  auto phase = [axis, mask](Index k) -> Complex {
    if (axis == PauliAxis::X) return 1.0;
    return (k & mask) ? Complex{0.0, -1.0} : Complex{0.0, 1.0};
  };
  for (Index j = 0; j < d; ++j) {
    const Complex pj = phase(j);
    for (Index i = 0; i < d; ++i) {
      // (rho s)_ij = rho_{i, j^m} phase(j);  (s rho)_ij = phase(i^m) rho_{i^m, j}
      c(i, j) = rho(i, j ^ mask) * pj - phase(i ^ mask) * rho(i ^ mask, j);
    }
  }
  return c;
}

std::array<Eigen::MatrixXcd, 3> site_commutators(const Eigen::MatrixXcd& rho, int site) {
  return {commutator(rho, PauliAxis::X, site), commutator(rho, PauliAxis::Y, site),
          commutator(rho, PauliAxis::Z, site)};
}

// Hilbert-Schmidt product <b, a> = Tr(b^dagger a) = sum conj(b_ij) a_ij.
Complex hs_product(const Eigen::MatrixXcd& b, const Eigen::MatrixXcd& a) {
  const Index len = a.size();
  return Eigen::Map<const Eigen::VectorXcd>(b.data(), len)
      .dot(Eigen::Map<const Eigen::VectorXcd>(a.data(), len));
}

}  // namespace

GibbsState gibbs_state(const FullSpectrum& spectrum, double kT) {
  check_kT(kT);
  if (!spectrum.eigenvectors) throw ContractError("Gibbs state needs eigenvectors");
  const Eigen::VectorXd& energies = spectrum.eigenvalues;
  const double ground = energies.minCoeff();
  Eigen::VectorXd weights = ((-(energies.array() - ground)) / kT).exp();
  weights /= weights.sum();

  const Eigen::MatrixXd& u = *spectrum.eigenvectors;
  const Eigen::MatrixXd rho = u * weights.asDiagonal() * u.transpose();

  GibbsState state = density_state(spectrum.n_sites, rho.cast<Complex>());
  state.lambda = spectrum.lambda;
  state.kT = kT;
  return state;
}

GibbsState gibbs_state(const TfimHamiltonian& h, double kT) {
  check_kT(kT);
  return gibbs_state(full_spectrum(h, true), kT);
}

GibbsState density_state(int n_sites, Eigen::MatrixXcd rho) {
  if (n_sites < 1 || n_sites > kMaxDenseSpectrumSites) {
    throw CapabilityError("density matrices limited to N <= " +
                          std::to_string(kMaxDenseSpectrumSites));
  }
  const Index d = Index{1} << n_sites;
  if (rho.rows() != d || rho.cols() != d) throw DomainError("density matrix must be 2^N x 2^N");
  const Complex trace = rho.trace();
  if (!(std::real(trace) > 0.0)) throw ContractError("density matrix has nonpositive trace");

  GibbsState state;
  state.n_sites = n_sites;
  state.trace_correction = std::abs(trace - 1.0);
  state.rho = std::move(rho);
  state.rho /= std::real(trace);
  state.rho = 0.5 * (state.rho + state.rho.adjoint()).eval();
  return state;
}

GibbsState pure_density(const StateVector& state) {
  require_normalized(state);
  const Eigen::Map<const Eigen::VectorXcd> psi(state.amplitudes().data(),
                                               static_cast<Index>(state.dim()));
  return density_state(state.n_sites(), psi * psi.adjoint());
}

double thermal_energy(const GibbsState& state, const TfimHamiltonian& h) {
  if (h.n_sites() != state.n_sites) throw DomainError("state and Hamiltonian sizes differ");
  // Tr(rho H) = sum_ij rho_ij H_ji
  const Eigen::MatrixXd hd = h.dense();
  return std::real((state.rho.array() * hd.transpose().cast<Complex>().array()).sum());
}

CorrelationMatrix build_w_matrix(const GibbsState& state) {
  const int n = state.n_sites;
  const Index k = 3 * static_cast<Index>(n);
  const auto d = static_cast<double>(state.rho.rows());
  Eigen::MatrixXcd w(k, k);

  auto fill_block = [&](int l, const std::array<Eigen::MatrixXcd, 3>& ca, int lp,
                        const std::array<Eigen::MatrixXcd, 3>& cb) {
    for (PauliAxis a : kPauliAxes) {
      for (PauliAxis b : kPauliAxes) {
        const Index ia = CorrelationMatrix::flat_index(a, l);
        const Index ib = CorrelationMatrix::flat_index(b, lp);
        if (ib < ia) continue;
        // W_ab = Tr(C_a C_b^dagger) with C = [rho, sigma]
        const Complex value = hs_product(cb[axis_index(b)], ca[axis_index(a)]);
        w(ia, ib) = value;
        w(ib, ia) = std::conj(value);
      }
    }
  };

  if (3.0 * n * d * d <= kCommutatorCacheEntries) {
    std::vector<std::array<Eigen::MatrixXcd, 3>> cache;
    cache.reserve(static_cast<std::size_t>(n));
    for (int l = 1; l <= n; ++l) cache.push_back(site_commutators(state.rho, l));
    for (int l = 1; l <= n; ++l) {
      for (int lp = l; lp <= n; ++lp) fill_block(l, cache[l - 1], lp, cache[lp - 1]);
    }
  } else {
    for (int l = 1; l <= n; ++l) {
      const auto ca = site_commutators(state.rho, l);
      fill_block(l, ca, l, ca);
      for (int lp = l + 1; lp <= n; ++lp) fill_block(l, ca, lp, site_commutators(state.rho, lp));
    }
  }
  return make_correlation_matrix(n, CorrelationKind::W, std::move(w));
}

std::vector<ThermalPoint> thermal_scan(double lambda, int n, std::span<const double> kT_grid,
                                       int threads) {
  if (kT_grid.empty()) throw DomainError("temperature grid is empty");
  for (std::size_t i = 0; i < kT_grid.size(); ++i) {
    check_kT(kT_grid[i]);
    if (i > 0 && !(kT_grid[i] > kT_grid[i - 1])) {
      throw DomainError("temperature grid must be strictly ascending");
    }
  }
  const TfimHamiltonian h = build_tfim(n, lambda);
  const FullSpectrum spectrum = full_spectrum(h, true);
  return parallel_map(kT_grid.size(), threads, [&](std::size_t i) {
    const GibbsState rho = gibbs_state(spectrum, kT_grid[i]);
    return ThermalPoint{kT_grid[i], build_w_matrix(rho).e1(), thermal_energy(rho, h)};
  });
}

std::vector<double> log_grid(double lo, double hi, int points) {
  if (!(lo > 0.0) || !(hi >= lo) || points < 1) throw DomainError("invalid log grid");
  if (points == 1) return {lo};
  std::vector<double> grid(static_cast<std::size_t>(points));
  const double a = std::log(lo);
  const double step = (std::log(hi) - a) / (points - 1);
  for (int i = 0; i < points; ++i) grid[static_cast<std::size_t>(i)] = std::exp(a + step * i);
  grid.front() = lo;
  grid.back() = hi;
  return grid;
}

}  // namespace z2mem
