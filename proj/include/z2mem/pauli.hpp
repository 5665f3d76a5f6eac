#pragma once

// State vectors over the z basis of N spin-1/2 sites and the action of
// single-site Pauli operators on them.
//
// Bit convention: site l (1-based) is bit l-1 of the basis index, and a
// clear bit is the sigma_z = +1 state |0>.

#include <array>
#include <complex>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace z2mem {

using Complex = std::complex<double>;

enum class PauliAxis : std::uint8_t { X = 0, Y = 1, Z = 2 };

inline constexpr std::array<PauliAxis, 3> kPauliAxes{PauliAxis::X, PauliAxis::Y, PauliAxis::Z};

constexpr int axis_index(PauliAxis axis) noexcept { return static_cast<int>(axis); }
std::string_view axis_name(PauliAxis axis) noexcept;

/// Largest chain length for which a StateVector may be allocated.
inline constexpr int kMaxSites = 24;

class StateVector {
 public:
  /// |0...0> on n_sites sites.
  explicit StateVector(int n_sites);
  StateVector(int n_sites, std::vector<Complex> amplitudes);

  static StateVector basis(int n_sites, std::uint64_t index);

  int n_sites() const noexcept { return n_sites_; }
  std::size_t dim() const noexcept { return amplitudes_.size(); }

  std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
  std::span<Complex> amplitudes() noexcept { return amplitudes_; }

  const Complex& operator[](std::size_t i) const noexcept { return amplitudes_[i]; }
  Complex& operator[](std::size_t i) noexcept { return amplitudes_[i]; }

  double norm_squared() const noexcept;
  double norm() const noexcept;

  /// Rescales to unit norm. Throws ContractError for the zero vector.
  StateVector& normalize();

  /// <this|other>
  Complex inner(const StateVector& other) const;

 private:
  int n_sites_;
  std::vector<Complex> amplitudes_;
};

/// Throws ContractError when |norm^2 - 1| > tolerance.
void require_normalized(const StateVector& state, double tolerance = 1e-9);

/// sigma_axis(site)|state>, 1 <= site <= N.
StateVector apply_pauli(const StateVector& state, PauliAxis axis, int site);

/// In-place variant on a raw amplitude buffer of length 2^n_sites.
void apply_pauli_inplace(std::span<Complex> amplitudes, int n_sites, PauliAxis axis, int site);

double expectation(const StateVector& state, PauliAxis axis, int site);

/// <psi| sigma_a(site_a) sigma_b(site_b) |psi>
Complex two_point(const StateVector& state, PauliAxis axis_a, int site_a, PauliAxis axis_b,
                  int site_b);

/// A = sum_l sum_alpha c[l][alpha] sigma_alpha(l). Identity parts are dropped,
/// they never change a variance.
class AdditiveOperator {
 public:
  using SiteCoefficients = std::array<double, 3>;

  AdditiveOperator(int n_sites, std::vector<SiteCoefficients> coeffs);

  /// M_axis = sum_l sigma_axis(l).
  static AdditiveOperator uniform(int n_sites, PauliAxis axis);
  /// sum_l (-1)^l sigma_axis(l).
  static AdditiveOperator staggered(int n_sites, PauliAxis axis);

  int n_sites() const noexcept { return n_sites_; }
  const std::vector<SiteCoefficients>& coefficients() const noexcept { return coeffs_; }
  double coefficient(int site, PauliAxis axis) const;

  /// sum_{l,alpha} c^2
  double weight() const noexcept;
  /// Rescaled copy with weight() == N.
  AdditiveOperator normalized() const;

  /// Flattened coefficient vector, index 3(l-1) + alpha.
  std::vector<double> flattened() const;

 private:
  int n_sites_;
  std::vector<SiteCoefficients> coeffs_;
};

/// A|state>
StateVector apply_additive(const StateVector& state, const AdditiveOperator& op);

/// <A^2> - <A>^2, clamped at zero.
double additive_variance(const StateVector& state, const AdditiveOperator& op);

/// <M_z> computed from the diagonal.
double magnetization_z(const StateVector& state);

/// (|0...0> + |1...1>)/sqrt(2)
StateVector ghz_state(int n);

}  // namespace z2mem
