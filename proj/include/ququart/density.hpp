// Density operators and the reductions between them.
//
// Partial traces are carried out by explicit index summation in the natural
// product basis. The closed-form matrices the reductions are known to equal
// live in the test suite as cross-checks, not here.
#pragma once

#include <array>
#include <vector>

#include "eig.hpp"
#include "matrix.hpp"
#include "states.hpp"

namespace ququart {

/// Basis a 4x4 (or 16x16 / 2x2) density block is written in.
///  - Natural: product basis in canonical mode order.
///  - BellFreq: frequency Bell basis {Psi+, Psi-, Phi+, Phi-} built on (h, l).
///  - BellPol: polarization Bell basis {Phi+, Phi-, Psi+, Psi-} built on (H, V).
///  - QuquartMixed: the correlated-state set {HH, (HV+VH)/sqrt2, VV, (HV-VH)/sqrt2};
///    these are 16-dimensional vectors, so blocks tagged with it cannot be
///    converted to the other three.
enum class BasisTag { Natural, BellFreq, BellPol, QuquartMixed };

enum class SubsystemSelector { Photon1, Photon2, Polarization, Frequency };

class DensityMatrix {
public:
  /// Validates dimension (2, 3, 4 or 16), Hermiticity (entry-wise 1e-12) and
  /// unit trace (1e-10), then stores the exactly hermitized matrix.
  DensityMatrix(CMat m, BasisTag tag) : m_(std::move(m)), tag_(tag) {
    const int n = m_.dim();
    if (n != 2 && n != 3 && n != 4 && n != 16)
      throw DimensionError("DensityMatrix: dimension must be 2, 3, 4 or 16");
    if (m_.hermiticity_defect() > hermiticity_tol)
      throw DomainError("DensityMatrix: matrix is not Hermitian");
    if (std::abs(m_.trace() - cx(1.0)) > trace_tol)
      throw DomainError("DensityMatrix: trace deviates from 1");
    m_.hermitize();
  }

  /// Skips all checks. Exists so the self-test harness can push deliberately
  /// broken matrices through the pipeline; library code never uses it.
  static DensityMatrix unchecked(CMat m, BasisTag tag) {
    DensityMatrix d;
    d.m_ = std::move(m);
    d.tag_ = tag;
    return d;
  }

  const CMat& mat() const { return m_; }
  int dim() const { return m_.dim(); }
  BasisTag basis() const { return tag_; }

  double purity() const { return (m_ * m_).trace().real(); }

  /// Smallest eigenvalue; PSD means this stays above the -1e-10 floor.
  double min_eigenvalue() const {
    auto vals = eigenvalues_hermitian(m_);
    return vals.back();
  }

private:
  DensityMatrix() = default;

  CMat m_;
  BasisTag tag_ = BasisTag::Natural;
};

/// Rank-one projector |psi><psi| in the natural 16-dimensional basis.
inline DensityMatrix pure_density(const PureBiphotonState& psi) {
  CMat r(16);
  for (int i = 0; i < 16; ++i)
    for (int j = 0; j < 16; ++j) r(i, j) = psi[i] * std::conj(psi[j]);
  return DensityMatrix(std::move(r), BasisTag::Natural);
}

/// Projector onto the ququart written directly in the correlated-state basis
/// {HH, (HV+VH)/sqrt2, VV, (HV-VH)/sqrt2}, i.e. the outer product of the
/// mixed coefficient vector (C1, B+, C4, B-).
inline DensityMatrix ququart_density_4x4(const MixedCoeffs& m) {
  const std::array<cx, 4> v{m.c1, m.b_plus, m.c4, m.b_minus};
  const double n2 = std::norm(v[0]) + std::norm(v[1]) + std::norm(v[2]) + std::norm(v[3]);
  if (std::abs(std::sqrt(n2) - 1.0) > auto_normalize_tol)
    throw NormalizationError("ququart_density_4x4: coefficient norm deviates from 1 beyond 1e-6");
  CMat r(4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r(i, j) = v[i] * std::conj(v[j]) / n2;
  return DensityMatrix(std::move(r), BasisTag::QuquartMixed);
}

enum class Photon { One, Two };

/// Traces out one photon of a 16-dimensional state; the survivor keeps its
/// four-dimensional mode space. Input must be in the natural basis.
inline DensityMatrix partial_trace_photon(const DensityMatrix& rho, Photon traced_out) {
  if (rho.dim() != 16 || rho.basis() != BasisTag::Natural)
    throw DimensionError("partial_trace_photon: expected 16-dim natural-basis input");
  const CMat& a = rho.mat();
  CMat r(4);
  if (traced_out == Photon::Two) {
    for (int m1 = 0; m1 < 4; ++m1)
      for (int n1 = 0; n1 < 4; ++n1) {
        cx s = 0.0;
        for (int k = 0; k < 4; ++k) s += a(pair_index(m1, k), pair_index(n1, k));
        r(m1, n1) = s;
      }
  } else {
    for (int m2 = 0; m2 < 4; ++m2)
      for (int n2 = 0; n2 < 4; ++n2) {
        cx s = 0.0;
        for (int k = 0; k < 4; ++k) s += a(pair_index(k, m2), pair_index(k, n2));
        r(m2, n2) = s;
      }
  }
  return DensityMatrix(std::move(r), BasisTag::Natural);
}

/// Traces out both polarizations, leaving the two-frequency state in the
/// natural pair basis (hh, hl, lh, ll).
inline DensityMatrix partial_trace_polarization(const DensityMatrix& rho) {
  if (rho.dim() != 16 || rho.basis() != BasisTag::Natural)
    throw DimensionError("partial_trace_polarization: expected 16-dim natural-basis input");
  const CMat& a = rho.mat();
  CMat r(4);
  for (int f1 = 0; f1 < 2; ++f1)
    for (int f2 = 0; f2 < 2; ++f2)
      for (int g1 = 0; g1 < 2; ++g1)
        for (int g2 = 0; g2 < 2; ++g2) {
          cx s = 0.0;
          for (int p1 = 0; p1 < 2; ++p1)
            for (int p2 = 0; p2 < 2; ++p2)
              s += a(pair_index(2 * p1 + f1, 2 * p2 + f2), pair_index(2 * p1 + g1, 2 * p2 + g2));
          r(2 * f1 + f2, 2 * g1 + g2) = s;
        }
  return DensityMatrix(std::move(r), BasisTag::Natural);
}

/// Traces out both frequency bins, leaving the two-polarization state in the
/// natural pair basis (HH, HV, VH, VV).
inline DensityMatrix partial_trace_frequency(const DensityMatrix& rho) {
  if (rho.dim() != 16 || rho.basis() != BasisTag::Natural)
    throw DimensionError("partial_trace_frequency: expected 16-dim natural-basis input");
  const CMat& a = rho.mat();
  CMat r(4);
  for (int p1 = 0; p1 < 2; ++p1)
    for (int p2 = 0; p2 < 2; ++p2)
      for (int q1 = 0; q1 < 2; ++q1)
        for (int q2 = 0; q2 < 2; ++q2) {
          cx s = 0.0;
          for (int f1 = 0; f1 < 2; ++f1)
            for (int f2 = 0; f2 < 2; ++f2)
              s += a(pair_index(2 * p1 + f1, 2 * p2 + f2), pair_index(2 * q1 + f1, 2 * q2 + f2));
          r(2 * p1 + p2, 2 * q1 + q2) = s;
        }
  return DensityMatrix(std::move(r), BasisTag::Natural);
}

inline DensityMatrix partial_trace(const DensityMatrix& rho, SubsystemSelector keep) {
  switch (keep) {
    case SubsystemSelector::Photon1: return partial_trace_photon(rho, Photon::Two);
    case SubsystemSelector::Photon2: return partial_trace_photon(rho, Photon::One);
    case SubsystemSelector::Polarization: return partial_trace_frequency(rho);
    case SubsystemSelector::Frequency: return partial_trace_polarization(rho);
  }
  throw DomainError("partial_trace: bad selector");
}

namespace detail {

// Columns are the target-basis vectors expressed in the natural two-qubit
// pair basis; for Natural this is the identity.
inline CMat basis_columns(BasisTag tag) {
  CMat u = CMat::identity(4);
  const double s = inv_sqrt2;
  switch (tag) {
    case BasisTag::Natural:
      break;
    case BasisTag::BellFreq:
      // {Psi+, Psi-, Phi+, Phi-} over (h, l) pairs in order hh, hl, lh, ll.
      u = CMat(4);
      u(1, 0) = s; u(2, 0) = s;
      u(1, 1) = s; u(2, 1) = -s;
      u(0, 2) = s; u(3, 2) = s;
      u(0, 3) = s; u(3, 3) = -s;
      break;
    case BasisTag::BellPol:
      // {Phi+, Phi-, Psi+, Psi-} over (H, V) pairs in order HH, HV, VH, VV.
      u = CMat(4);
      u(0, 0) = s; u(3, 0) = s;
      u(0, 1) = s; u(3, 1) = -s;
      u(1, 2) = s; u(2, 2) = s;
      u(1, 3) = s; u(2, 3) = -s;
      break;
    case BasisTag::QuquartMixed:
      throw DomainError("basis_columns: the correlated-state basis is not a two-qubit basis");
  }
  return u;
}

}  // namespace detail

/// Rewrites a 4x4 density block in another basis. The correlated-state tag is
/// only compatible with itself (no-op); the other three convert freely.
inline DensityMatrix change_basis(const DensityMatrix& rho, BasisTag target) {
  if (rho.dim() != 4) throw DimensionError("change_basis: expected a 4x4 density block");
  if (rho.basis() == target) return rho;
  if (rho.basis() == BasisTag::QuquartMixed || target == BasisTag::QuquartMixed)
    throw DomainError("change_basis: correlated-state basis blocks cannot be converted");
  const CMat u_cur = detail::basis_columns(rho.basis());
  const CMat u_tgt = detail::basis_columns(target);
  CMat natural = u_cur * rho.mat() * u_cur.adjoint();
  CMat out = u_tgt.adjoint() * natural * u_tgt;
  return DensityMatrix(std::move(out), target);
}

/// Reduces a two-qubit 4x4 block to the 2x2 state of the first qubit by
/// tracing the second. Bell-tagged blocks are converted to the natural basis
/// first; correlated-state blocks have no qubit factorization to reduce over.
inline DensityMatrix reduce_single_qubit(const DensityMatrix& rho) {
  if (rho.dim() != 4) throw DimensionError("reduce_single_qubit: expected a 4x4 density block");
  if (rho.basis() == BasisTag::QuquartMixed)
    throw DimensionError("reduce_single_qubit: correlated-state basis has no qubit factorization");
  const DensityMatrix nat = change_basis(rho, BasisTag::Natural);
  const CMat& a = nat.mat();
  CMat r(2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      cx s = 0.0;
      for (int k = 0; k < 2; ++k) s += a(2 * i + k, 2 * j + k);
      r(i, j) = s;
    }
  return DensityMatrix(std::move(r), BasisTag::Natural);
}

}  // namespace ququart
