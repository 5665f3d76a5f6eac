#pragma once

// Nearest-neighbour resonating-valence-bond state on the periodic chain,
//   |Psi> = (|VB1> + |VB2>) / sqrt(2 + 2 <VB2|VB1>),
// with VB1 pairing (2l-1, 2l) and VB2 pairing (2l, 2l+1), the wraparound bond
// of VB2 written as (1, N).
//
// Singlet convention: |i,j> = (|0_i 1_j> - |1_i 0_j>)/sqrt(2), i the first
// listed site. With this orientation the valence-bond overlap is
// <VB2|VB1> = (-1/2)^{N/2-1} exactly.

#include <string>
#include <utility>
#include <vector>

#include "z2mem/pauli.hpp"

namespace z2mem {

inline constexpr int kMinRvbSites = 4;
inline constexpr int kMaxRvbSites = 14;

struct PairCovering {
  int n_sites = 0;
  std::vector<std::pair<int, int>> pairs;  // ordered (first, second) site pairs

  /// (1,2), (3,4), ..., (N-1,N)
  static PairCovering vb1(int n);
  /// (2,3), (4,5), ..., (N-2,N-1), (1,N)
  static PairCovering vb2(int n);

  /// Throws DomainError unless pairs are disjoint and cover 1..N.
  void validate() const;
};

/// Normalized product of singlets over the covering.
StateVector build_vb(const PairCovering& covering);

/// Closed form (-1/2)^{N/2-1}.
double vb_overlap_closed_form(int n);

/// Exact normalization constant 2 + 2 (-1/2)^{N/2-1} of |VB1> + |VB2>.
double rvb_norm_squared_closed_form(int n);

/// Even N with 4 <= N <= 14.
StateVector build_rvb(int n);

/// t_{l,l+1}|state>, the projector on the singlet of sites l and l+1
/// (l = N couples N and 1). The result is not renormalized.
StateVector singlet_projector_apply(const StateVector& state, int l);

/// T|state> with T = sum_l (-1)^l t_{l,l+1}.
StateVector apply_t_operator(const StateVector& state);

struct TMoments {
  double mean = 0.0;
  double variance = 0.0;
};

/// <Psi|T|Psi> and <Psi|T^2|Psi> - <Psi|T|Psi>^2 for the RVB state.
TMoments t_operator_moments(int n);

/// <VB1|T|VB1>, equal to -3N/8.
double vb1_t_expectation(int n);

/// Coefficient c in t_{2,3}(|1,2>|3,4>) = c |2,3>|1,4> on four sites, with the
/// residual of that proportionality.
struct SwapResult {
  double coefficient = 0.0;
  double residual = 0.0;
};
SwapResult singlet_swap_coefficient();

/// || (-2)^{N/2-1} prod_{l<N/2} t_{2l,2l+1} |VB1> - |VB2> ||
double iterated_swap_residual(int n);

/// max_alpha ||M_alpha |Psi>||; zero for a total-spin singlet.
double total_spin_residual(int n);

/// max |<s_a(l) s_b(l')> - <s_a(l)><s_b(l')>| over all axes and all site
/// pairs with ring distance >= min_distance.
double connected_correlation_max(const StateVector& state, int min_distance);

/// connected_correlation_max(build_rvb(n), 2). Even n <= 12.
double connected_correlation_scan(int n);

/// e1 of the VCM of the RVB state. Even n <= 12.
double rvb_vcm_check(int n);

int ring_distance(int a, int b, int n);

/// One verified identity: passes iff lower <= value <= upper.
struct IdentityCheck {
  std::string name;
  double value = 0.0;
  double expected = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  bool passed = false;
};

/// Every RVB identity for chain length n, each with its verdict.
std::vector<IdentityCheck> rvb_identity_checks(int n);

}  // namespace z2mem
