// Pure biphoton polarization-frequency states and the coefficient algebra on
// top of them.
//
// Single-photon modes combine polarization (H, V) with one of two possible
// frequencies (high, low); the canonical mode index is m = 2*pol + freq, so
// Hh=0, Hl=1, Vh=2, Vl=3. A two-photon amplitude vector is indexed flat as
// 4*m1 + m2. Physical states in this model are exchange-symmetric and the two
// photons never share a frequency, which leaves a four-dimensional
// (polarization ququart) subspace spanned by the correlated basis states
// |HH>, |HV>, |VH>, |VV>.
#pragma once

#include <array>
#include <cmath>

#include "common.hpp"

namespace ququart {

enum class Pol : int { H = 0, V = 1 };
enum class Freq : int { High = 0, Low = 1 };

struct PolFreqMode {
  Pol pol;
  Freq freq;

  constexpr int index() const { return 2 * static_cast<int>(pol) + static_cast<int>(freq); }
  static constexpr PolFreqMode from_index(int m) {
    return {static_cast<Pol>((m >> 1) & 1), static_cast<Freq>(m & 1)};
  }
  constexpr bool operator==(const PolFreqMode&) const = default;
};

constexpr int pair_index(int m1, int m2) { return 4 * m1 + m2; }

namespace detail {

inline double norm_sq(const cx* v, int n) {
  double s = 0.0;
  for (int i = 0; i < n; ++i) s += std::norm(v[i]);
  return s;
}

// Shared normalization policy: deviations up to auto_normalize_tol are fixed
// up silently (when allowed), larger ones are rejected. With auto_normalize
// off the vector must already be unit to within norm_tol.
inline void enforce_unit_norm(cx* v, int n, bool auto_normalize, const char* what) {
  for (int i = 0; i < n; ++i) {
    if (!is_finite(v[i])) throw DomainError(std::string(what) + ": non-finite amplitude");
  }
  const double nrm = std::sqrt(norm_sq(v, n));
  const double dev = std::abs(nrm - 1.0);
  if (auto_normalize) {
    if (dev > auto_normalize_tol)
      throw NormalizationError(std::string(what) + ": norm deviates from 1 beyond 1e-6");
    if (dev > 0.0) {
      for (int i = 0; i < n; ++i) v[i] /= nrm;
    }
  } else if (dev > norm_tol) {
    throw NormalizationError(std::string(what) + ": norm deviates from 1 beyond 1e-10");
  }
}

}  // namespace detail

/// Amplitudes (C1, C2, C3, C4) on |HH>, |HV>, |VH>, |VV>.
struct QuquartCoeffs {
  cx c1{}, c2{}, c3{}, c4{};

  static QuquartCoeffs make(cx c1, cx c2, cx c3, cx c4, bool auto_normalize = true) {
    std::array<cx, 4> v{c1, c2, c3, c4};
    detail::enforce_unit_norm(v.data(), 4, auto_normalize, "QuquartCoeffs");
    return {v[0], v[1], v[2], v[3]};
  }

  std::array<cx, 4> as_array() const { return {c1, c2, c3, c4}; }
  double norm() const { return std::sqrt(detail::norm_sq(as_array().data(), 4)); }
};

/// Amplitudes on the Bell-like combinations of the correlated basis:
/// C+- = (C1 +- C4)/sqrt2 on (|HH> +- |VV>)/sqrt2 and
/// B+- = (C2 +- C3)/sqrt2 on (|HV> +- |VH>)/sqrt2.
struct BellCoeffs {
  cx c_plus{}, c_minus{}, b_plus{}, b_minus{};

  static BellCoeffs make(cx c_plus, cx c_minus, cx b_plus, cx b_minus,
                         bool auto_normalize = true) {
    std::array<cx, 4> v{c_plus, c_minus, b_plus, b_minus};
    detail::enforce_unit_norm(v.data(), 4, auto_normalize, "BellCoeffs");
    return {v[0], v[1], v[2], v[3]};
  }
};

/// The half-rotated set (C1, B+, C4, B-) that diagonalizes most of the closed
/// forms in this library. Aggregate-initializable on purpose so tests can
/// construct unnormalized instances; the factory checks the norm.
struct MixedCoeffs {
  cx c1{}, b_plus{}, c4{}, b_minus{};

  static MixedCoeffs make(cx c1, cx b_plus, cx c4, cx b_minus, bool auto_normalize = true) {
    std::array<cx, 4> v{c1, b_plus, c4, b_minus};
    detail::enforce_unit_norm(v.data(), 4, auto_normalize, "MixedCoeffs");
    return {v[0], v[1], v[2], v[3]};
  }

  double norm() const {
    return std::sqrt(std::norm(c1) + std::norm(b_plus) + std::norm(c4) + std::norm(b_minus));
  }
};

inline BellCoeffs to_bell_coeffs(const QuquartCoeffs& q) {
  BellCoeffs b;
  b.c_plus = (q.c1 + q.c4) * inv_sqrt2;
  b.c_minus = (q.c1 - q.c4) * inv_sqrt2;
  b.b_plus = (q.c2 + q.c3) * inv_sqrt2;
  b.b_minus = (q.c2 - q.c3) * inv_sqrt2;
  return b;
}

inline QuquartCoeffs from_bell_coeffs(const BellCoeffs& b) {
  QuquartCoeffs q;
  q.c1 = (b.c_plus + b.c_minus) * inv_sqrt2;
  q.c4 = (b.c_plus - b.c_minus) * inv_sqrt2;
  q.c2 = (b.b_plus + b.b_minus) * inv_sqrt2;
  q.c3 = (b.b_plus - b.b_minus) * inv_sqrt2;
  return q;
}

inline MixedCoeffs to_mixed_coeffs(const QuquartCoeffs& q) {
  MixedCoeffs m;
  m.c1 = q.c1;
  m.c4 = q.c4;
  m.b_plus = (q.c2 + q.c3) * inv_sqrt2;
  m.b_minus = (q.c2 - q.c3) * inv_sqrt2;
  return m;
}

inline QuquartCoeffs from_mixed_coeffs(const MixedCoeffs& m) {
  QuquartCoeffs q;
  q.c1 = m.c1;
  q.c4 = m.c4;
  q.c2 = (m.b_plus + m.b_minus) * inv_sqrt2;
  q.c3 = (m.b_plus - m.b_minus) * inv_sqrt2;
  return q;
}

/// Pure two-photon state: 16 amplitudes over mode pairs (m1, m2).
class PureBiphotonState {
public:
  PureBiphotonState() { a_[0] = 1.0; }

  /// Builds from raw amplitudes. Only the norm is checked here; use this for
  /// states outside the correlated ququart subspace (for instance when
  /// exercising photon exchange on asymmetric vectors).
  static PureBiphotonState from_raw(const std::array<cx, 16>& amps, bool auto_normalize = true) {
    PureBiphotonState s;
    s.a_ = amps;
    detail::enforce_unit_norm(s.a_.data(), 16, auto_normalize, "PureBiphotonState");
    return s;
  }

  cx amplitude(int m1, int m2) const { return a_[pair_index(m1, m2)]; }
  cx amplitude(PolFreqMode m1, PolFreqMode m2) const { return amplitude(m1.index(), m2.index()); }
  cx operator[](int flat) const { return a_[static_cast<std::size_t>(flat)]; }
  const std::array<cx, 16>& amplitudes() const { return a_; }

  double norm() const { return std::sqrt(detail::norm_sq(a_.data(), 16)); }

  double exchange_asymmetry() const {
    double d = 0.0;
    for (int m1 = 0; m1 < 4; ++m1)
      for (int m2 = 0; m2 < 4; ++m2)
        d = std::max(d, std::abs(amplitude(m1, m2) - amplitude(m2, m1)));
    return d;
  }

  /// Largest amplitude living on an equal-frequency mode pair. Zero for every
  /// state in the correlated subspace.
  double equal_frequency_leak() const {
    double d = 0.0;
    for (int m1 = 0; m1 < 4; ++m1)
      for (int m2 = 0; m2 < 4; ++m2)
        if ((m1 & 1) == (m2 & 1)) d = std::max(d, std::abs(amplitude(m1, m2)));
    return d;
  }

private:
  std::array<cx, 16> a_{};
};

inline cx inner_product(const PureBiphotonState& u, const PureBiphotonState& v) {
  cx s = 0.0;
  for (int k = 0; k < 16; ++k) s += std::conj(u[k]) * v[k];
  return s;
}

enum class BasisLabel { HH, HV, VH, VV };

/// Correlated basis state: both photons share the given polarizations while
/// occupying opposite frequency bins, symmetrized over exchange. |HV> means
/// the H photon sits in the high bin and the V photon in the low bin; |VH> is
/// the opposite frequency assignment.
inline PureBiphotonState basis_state(BasisLabel which) {
  std::array<cx, 16> a{};
  auto put = [&](PolFreqMode x, PolFreqMode y) {
    a[pair_index(x.index(), y.index())] = inv_sqrt2;
    a[pair_index(y.index(), x.index())] = inv_sqrt2;
  };
  switch (which) {
    case BasisLabel::HH: put({Pol::H, Freq::High}, {Pol::H, Freq::Low}); break;
    case BasisLabel::HV: put({Pol::H, Freq::High}, {Pol::V, Freq::Low}); break;
    case BasisLabel::VH: put({Pol::V, Freq::High}, {Pol::H, Freq::Low}); break;
    case BasisLabel::VV: put({Pol::V, Freq::High}, {Pol::V, Freq::Low}); break;
  }
  return PureBiphotonState::from_raw(a, false);
}

/// General polarization ququart C1|HH> + C2|HV> + C3|VH> + C4|VV>.
inline PureBiphotonState ququart_state(const QuquartCoeffs& q) {
  const std::array<cx, 4> c = q.as_array();
  const std::array<BasisLabel, 4> basis{BasisLabel::HH, BasisLabel::HV, BasisLabel::VH,
                                        BasisLabel::VV};
  std::array<cx, 16> a{};
  for (int k = 0; k < 4; ++k) {
    const auto b = basis_state(basis[static_cast<std::size_t>(k)]).amplitudes();
    for (int i = 0; i < 16; ++i) a[static_cast<std::size_t>(i)] += c[static_cast<std::size_t>(k)] * b[static_cast<std::size_t>(i)];
  }
  return PureBiphotonState::from_raw(a);
}

enum class DoubleBell { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

/// Four-dimensional Bell analogs: Phi+- = (|HH> +- |VV>)/sqrt2 and
/// Psi+- = (|HV> +- |VH>)/sqrt2. Each factors into a polarization Bell state
/// times a frequency Bell state.
inline PureBiphotonState double_bell_state(DoubleBell which) {
  QuquartCoeffs q;
  switch (which) {
    case DoubleBell::PhiPlus:  q = QuquartCoeffs::make(inv_sqrt2, 0.0, 0.0, inv_sqrt2); break;
    case DoubleBell::PhiMinus: q = QuquartCoeffs::make(inv_sqrt2, 0.0, 0.0, -inv_sqrt2); break;
    case DoubleBell::PsiPlus:  q = QuquartCoeffs::make(0.0, inv_sqrt2, inv_sqrt2, 0.0); break;
    case DoubleBell::PsiMinus: q = QuquartCoeffs::make(0.0, inv_sqrt2, -inv_sqrt2, 0.0); break;
  }
  return ququart_state(q);
}

inline PureBiphotonState swap_photons(const PureBiphotonState& s) {
  std::array<cx, 16> a{};
  for (int m1 = 0; m1 < 4; ++m1)
    for (int m2 = 0; m2 < 4; ++m2) a[pair_index(m1, m2)] = s.amplitude(m2, m1);
  return PureBiphotonState::from_raw(a, false);
}

/// Re-expresses the state in a polarization basis rotated by alpha:
/// H' = cos(a) H + sin(a) V, V' = -sin(a) H + cos(a) V, applied to both
/// photons. Frequencies are untouched. The state itself does not change,
/// only its amplitudes.
inline PureBiphotonState rotate_polarization_basis(const PureBiphotonState& s, double alpha) {
  const double c = std::cos(alpha);
  const double sn = std::sin(alpha);
  // r[p'][p]: amplitude of old polarization p inside new basis vector p'.
  const double r[2][2] = {{c, sn}, {-sn, c}};
  std::array<cx, 16> a{};
  for (int p1 = 0; p1 < 2; ++p1)
    for (int f1 = 0; f1 < 2; ++f1)
      for (int p2 = 0; p2 < 2; ++p2)
        for (int f2 = 0; f2 < 2; ++f2) {
          cx acc = 0.0;
          for (int o1 = 0; o1 < 2; ++o1)
            for (int o2 = 0; o2 < 2; ++o2)
              acc += r[p1][o1] * r[p2][o2] * s.amplitude(2 * o1 + f1, 2 * o2 + f2);
          a[pair_index(2 * p1 + f1, 2 * p2 + f2)] = acc;
        }
  return PureBiphotonState::from_raw(a, false);
}

}  // namespace ququart
