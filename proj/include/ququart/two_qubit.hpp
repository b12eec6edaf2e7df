// Broken-symmetry two-qubit description of a ququart.
//
// Splitting the photons by frequency (one dichroic channel receives the high
// bin, the other the low bin) leaves a polarization-only two-qubit state per
// channel. The high channel sees amplitudes (C1, C2, C3, C4); the low channel
// sees the photons in swapped roles, so C2 and C3 trade places.
#pragma once

#include <array>
#include <cmath>
#include <utility>

#include "density.hpp"
#include "measures.hpp"
#include "states.hpp"

namespace ququart {

/// Pure polarization state of two distinguishable qubits, amplitudes over
/// (HH, HV, VH, VV) with the first slot naming the channel photon.
struct TwoQubitState {
  std::array<cx, 4> amp{};

  static TwoQubitState make(const std::array<cx, 4>& a, bool auto_normalize = true) {
    TwoQubitState s{a};
    detail::enforce_unit_norm(s.amp.data(), 4, auto_normalize, "TwoQubitState");
    return s;
  }
};

/// The per-channel states (Psi_h, Psi_l) of a ququart.
inline std::pair<TwoQubitState, TwoQubitState> two_qubit_states(const QuquartCoeffs& q) {
  const TwoQubitState high = TwoQubitState::make({q.c1, q.c2, q.c3, q.c4});
  const TwoQubitState low = TwoQubitState::make({q.c1, q.c3, q.c2, q.c4});
  return {high, low};
}

inline DensityMatrix pure_density(const TwoQubitState& s) {
  CMat r(4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r(i, j) = s.amp[i] * std::conj(s.amp[j]);
  return DensityMatrix(std::move(r), BasisTag::Natural);
}

/// Single-qubit reduction of a pure two-qubit state (second qubit traced by
/// explicit summation).
inline DensityMatrix reduce_first_qubit(const TwoQubitState& s) {
  CMat r(2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      cx acc = 0.0;
      for (int k = 0; k < 2; ++k) acc += s.amp[2 * i + k] * std::conj(s.amp[2 * j + k]);
      r(i, j) = acc;
    }
  return DensityMatrix(std::move(r), BasisTag::Natural);
}

struct ChannelPair {
  DensityMatrix rho_h;
  DensityMatrix rho_l;
};

/// Reduced one-photon polarization matrices of the two channels.
inline ChannelPair channel_reduced(const QuquartCoeffs& q) {
  const auto [high, low] = two_qubit_states(q);
  return {reduce_first_qubit(high), reduce_first_qubit(low)};
}

inline DensityMatrix half_sum(const ChannelPair& p) {
  CMat r = 0.5 * (p.rho_h.mat() + p.rho_l.mat());
  return DensityMatrix(std::move(r), BasisTag::Natural);
}

/// Polarization-basis rotation of a two-qubit state, same convention as for
/// the full biphoton state: H' = cos(a) H + sin(a) V, V' = -sin(a) H + cos(a) V.
inline TwoQubitState rotate_polarization_basis(const TwoQubitState& s, double alpha) {
  const double c = std::cos(alpha);
  const double sn = std::sin(alpha);
  const double r[2][2] = {{c, sn}, {-sn, c}};
  std::array<cx, 4> a{};
  for (int p1 = 0; p1 < 2; ++p1)
    for (int p2 = 0; p2 < 2; ++p2) {
      cx acc = 0.0;
      for (int o1 = 0; o1 < 2; ++o1)
        for (int o2 = 0; o2 < 2; ++o2) acc += r[p1][o1] * r[p2][o2] * s.amp[2 * o1 + o2];
      a[2 * p1 + p2] = acc;
    }
  return TwoQubitState::make(a, false);
}

inline double schmidt_parameter(const TwoQubitState& s) {
  return schmidt_parameter(reduce_first_qubit(s));
}

struct TwoQubitMeasures {
  double concurrence;
  double schmidt_k;
  double polarization_degree;
};

/// Channel-model measures. The concurrence has two printed forms,
/// 2 |C1 C4 - C2 C3| and |2 C1 C4 - B+^2 + B-^2|; both are evaluated and
/// required to agree, which catches coefficient-transform regressions for
/// free. K and P then follow from purity of the channel states.
inline TwoQubitMeasures two_qubit_measures(const QuquartCoeffs& q) {
  const double direct = 2.0 * std::abs(q.c1 * q.c4 - q.c2 * q.c3);
  const MixedCoeffs m = to_mixed_coeffs(q);
  const double via_mixed =
      std::abs(2.0 * m.c1 * m.c4 - m.b_plus * m.b_plus + m.b_minus * m.b_minus);
  if (std::abs(direct - via_mixed) > 1e-10)
    throw DomainError("two_qubit_measures: concurrence forms disagree");
  TwoQubitMeasures r;
  r.concurrence = direct;
  r.schmidt_k = 2.0 / (2.0 - direct * direct);
  r.polarization_degree = std::sqrt(std::max(0.0, 1.0 - direct * direct));
  return r;
}

}  // namespace ququart
