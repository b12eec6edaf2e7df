// Correlation and entanglement measures: spectra, entropies, the Schmidt
// parameter and decomposition, Wootters concurrence, relative entropy of
// entanglement for Bell-diagonal two-state mixtures, and the Stokes picture
// of the reduced one-qubit state.
//
// Closed-form expressions are provided next to the generic numeric routes so
// that each quantity can be computed twice and the two answers compared.
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <vector>

#include "density.hpp"
#include "eig.hpp"
#include "states.hpp"

namespace ququart {

inline double xlog2(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

/// Density-operator spectrum: descending, clamped into [0, 1], unit sum.
struct Spectrum {
  std::vector<double> values;

  double sum() const {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
  }
};

/// Eigenvalues of a density block with the PSD policy applied: values in
/// [-1e-10, 0) count as zero, anything lower is an error.
inline Spectrum hermitian_eigenvalues(const DensityMatrix& rho) {
  std::vector<double> vals = eigenvalues_hermitian(rho.mat());
  for (double& v : vals) {
    if (v < psd_floor)
      throw DomainError("hermitian_eigenvalues: eigenvalue below the PSD floor");
    v = std::clamp(v, 0.0, 1.0);
  }
  Spectrum s{std::move(vals)};
  if (std::abs(s.sum() - 1.0) > trace_tol)
    throw DomainError("hermitian_eigenvalues: spectrum does not sum to 1");
  return s;
}

inline double von_neumann_entropy(const Spectrum& s) {
  double acc = 0.0;
  for (double v : s.values) acc -= xlog2(v);
  return std::max(0.0, acc);
}

inline double von_neumann_entropy(const DensityMatrix& rho) {
  return von_neumann_entropy(hermitian_eigenvalues(rho));
}

/// Schmidt parameter K = 1 / sum(lambda^2) of a reduced state; 1 for pure
/// reductions, up to dim for maximally mixed ones.
inline double schmidt_parameter(const Spectrum& s) {
  double p = 0.0;
  for (double v : s.values) p += v * v;
  if (p <= 0.0) throw DomainError("schmidt_parameter: zero spectrum");
  return 1.0 / p;
}

inline double schmidt_parameter(const DensityMatrix& rho_reduced) {
  return schmidt_parameter(hermitian_eigenvalues(rho_reduced));
}

/// I = 2 S_reduced - S_full; valid when both one-qubit reductions share the
/// same entropy, which exchange symmetry guarantees here.
inline double mutual_information(double s_full, double s_reduced) {
  return 2.0 * s_reduced - s_full;
}

inline double mutual_information(double s_reduced1, double s_reduced2, double s_full) {
  return s_reduced1 + s_reduced2 - s_full;
}

/// I(rho) = S(rho_1) + S(rho_2) - S(rho) for a two-qubit 4x4 block.
inline double mutual_information(const DensityMatrix& rho4) {
  if (rho4.dim() != 4) throw DimensionError("mutual_information: expected a 4x4 density block");
  const DensityMatrix nat = change_basis(rho4, BasisTag::Natural);
  const CMat& a = nat.mat();
  CMat r1(2), r2(2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      cx s1 = 0.0, s2 = 0.0;
      for (int k = 0; k < 2; ++k) {
        s1 += a(2 * i + k, 2 * j + k);
        s2 += a(2 * k + i, 2 * k + j);
      }
      r1(i, j) = s1;
      r2(i, j) = s2;
    }
  const double e1 = von_neumann_entropy(DensityMatrix(std::move(r1), BasisTag::Natural));
  const double e2 = von_neumann_entropy(DensityMatrix(std::move(r2), BasisTag::Natural));
  return mutual_information(e1, e2, von_neumann_entropy(nat));
}

// ---------------------------------------------------------------------------
// Schmidt decomposition of a pure two-photon state.

struct SchmidtMode {
  double lambda;
  std::array<cx, 4> photon1;
  std::array<cx, 4> photon2;
};

struct SchmidtDecomposition {
  std::vector<SchmidtMode> modes;   // weights above the cut, descending
  std::array<double, 4> spectrum;   // all four reduced eigenvalues, descending
  bool degenerate;                  // repeated weights: the mode pairing is then not unique

  double schmidt_parameter() const {
    double p = 0.0;
    for (double v : spectrum) p += v * v;
    return 1.0 / p;
  }
};

/// Diagonalizes the photon-1 reduction and back-solves the partner mode of
/// each retained eigenvector. Weights below 1e-12 are dropped.
inline SchmidtDecomposition schmidt_decompose(const PureBiphotonState& psi) {
  constexpr double cut = 1e-12;
  constexpr double degeneracy_gap = 1e-9;

  CMat rho1(4);
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n) {
      cx s = 0.0;
      for (int k = 0; k < 4; ++k) s += psi.amplitude(m, k) * std::conj(psi.amplitude(n, k));
      rho1(m, n) = s;
    }
  EigResult e = eig_hermitian(rho1);

  SchmidtDecomposition d;
  d.degenerate = false;
  for (int k = 0; k < 4; ++k) {
    double lam = e.values[k];
    if (lam < psd_floor) throw DomainError("schmidt_decompose: reduction is not PSD");
    d.spectrum[k] = std::clamp(lam, 0.0, 1.0);
  }
  for (int k = 0; k + 1 < 4; ++k)
    if (d.spectrum[k] > cut && d.spectrum[k] - d.spectrum[k + 1] < degeneracy_gap)
      d.degenerate = true;

  for (int k = 0; k < 4; ++k) {
    const double lam = d.spectrum[k];
    if (lam <= cut) continue;
    SchmidtMode m;
    m.lambda = lam;
    for (int i = 0; i < 4; ++i) m.photon1[i] = e.vectors(i, k);
    const double inv_root = 1.0 / std::sqrt(lam);
    for (int j = 0; j < 4; ++j) {
      cx s = 0.0;
      for (int i = 0; i < 4; ++i) s += std::conj(m.photon1[i]) * psi.amplitude(i, j);
      m.photon2[j] = s * inv_root;
    }
    d.modes.push_back(std::move(m));
  }
  return d;
}

// ---------------------------------------------------------------------------
// Concurrence.

/// Spin-flipped block rho~ = (Y (x) Y) rho* (Y (x) Y), computed in the natural
/// basis; Y(x)Y is the anti-diagonal (-1, 1, 1, -1).
inline DensityMatrix spin_flip(const DensityMatrix& rho4) {
  if (rho4.dim() != 4) throw DimensionError("spin_flip: expected a 4x4 density block");
  const DensityMatrix nat = change_basis(rho4, BasisTag::Natural);
  CMat f(4);
  f(0, 3) = -1.0; f(1, 2) = 1.0; f(2, 1) = 1.0; f(3, 0) = -1.0;
  CMat out = f * nat.mat().conjugate() * f;
  return DensityMatrix(std::move(out), BasisTag::Natural);
}

/// Square roots of the eigenvalues of rho * rho~, descending. With rho = Z Z+
/// (columns of Z are eigenvectors scaled by root-eigenvalues) these equal the
/// singular values of the complex symmetric T = Z^T (Y (x) Y) Z, read off the
/// Hermitian embedding [[0, T], [T+, 0]]. Unlike diagonalizing rho * rho~
/// itself, nothing is squared, so vanishing values come out at machine
/// precision instead of its square root.
inline std::array<double, 4> wootters_numbers(const DensityMatrix& rho4) {
  const DensityMatrix nat = change_basis(rho4, BasisTag::Natural);
  const EigResult e = eig_hermitian(nat.mat());
  CMat z(4);
  for (int k = 0; k < 4; ++k) {
    const double lam = e.values[static_cast<std::size_t>(k)];
    if (lam < psd_floor) throw DomainError("wootters_numbers: input is not PSD");
    const double scale = std::sqrt(std::max(0.0, lam));
    for (int i = 0; i < 4; ++i) z(i, k) = scale * e.vectors(i, k);
  }
  CMat f(4);
  f(0, 3) = -1.0; f(1, 2) = 1.0; f(2, 1) = 1.0; f(3, 0) = -1.0;
  const CMat fz = f * z;
  CMat t(4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      cx s = 0.0;
      for (int k = 0; k < 4; ++k) s += z(k, i) * fz(k, j);
      t(i, j) = s;
    }
  CMat embed(8);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      embed(i, 4 + j) = t(i, j);
      embed(4 + i, j) = std::conj(t(j, i));
    }
  const std::vector<double> vals = eigenvalues_hermitian(embed);
  // Spectrum is {+sigma_k, -sigma_k}; the top half holds the singular values.
  std::array<double, 4> w{};
  for (int k = 0; k < 4; ++k) {
    const double v = vals[static_cast<std::size_t>(k)];
    if (v < psd_floor) throw DomainError("wootters_numbers: corrupted singular spectrum");
    w[static_cast<std::size_t>(k)] = std::max(0.0, v);
  }
  return w;
}

inline double wootters_concurrence(const DensityMatrix& rho4) {
  const std::array<double, 4> w = wootters_numbers(rho4);
  return std::max(0.0, w[0] - w[1] - w[2] - w[3]);
}

/// Polarization concurrence of the traced state, directly from coefficients:
/// C = | |2 C1 C4 - B+^2| - |B-|^2 |.
inline double concurrence_pol_closed(const MixedCoeffs& m) {
  const double q = std::abs(2.0 * m.c1 * m.c4 - m.b_plus * m.b_plus);
  return std::abs(q - std::norm(m.b_minus));
}

/// Frequency concurrence: C = |1 - 2 |B-|^2|.
inline double concurrence_freq_closed(const MixedCoeffs& m) {
  return std::abs(1.0 - 2.0 * std::norm(m.b_minus));
}

// ---------------------------------------------------------------------------
// Closed forms for the polarization block.

struct ClosedForms {
  double lambda_plus;                  // larger nonzero eigenvalue of the traced block
  double lambda_minus;                 // smaller one
  double k_pol;                        // Schmidt parameter of its one-qubit reduction
  double c_pol;                        // concurrence
  std::array<double, 4> spectrum_full; // {1-|B-|^2, |B-|^2} padded with zeros, descending
};

inline ClosedForms closed_forms(const MixedCoeffs& m) {
  const double b2 = std::norm(m.b_minus);
  const double q = std::abs(2.0 * m.c1 * m.c4 - m.b_plus * m.b_plus);
  double rad = (1.0 - b2) * (1.0 - b2) - q * q;
  if (rad < -1e-12) throw DomainError("closed_forms: inconsistent coefficient magnitudes");
  rad = std::max(0.0, rad);
  const double root = std::sqrt(rad);
  ClosedForms f;
  f.lambda_plus = 0.5 * (1.0 + root);
  f.lambda_minus = 0.5 * (1.0 - root);
  f.k_pol = 2.0 / (1.0 + rad);
  f.c_pol = std::abs(q - b2);
  f.spectrum_full = {std::max(1.0 - b2, b2), std::min(1.0 - b2, b2), 0.0, 0.0};
  return f;
}

// ---------------------------------------------------------------------------
// Relative entropy of entanglement and classical correlations. Both are
// defined here only for mixtures of at most two Bell states, where the
// closest separable state is known analytically.

/// S_rel(C) = (1+C)/2 log2(1+C) + (1-C)/2 log2(1-C), i.e. 1 - h((1+C)/2).
inline double relative_entropy_bell_diagonal(double concurrence) {
  if (concurrence < -1e-12 || concurrence > 1.0 + 1e-12)
    throw DomainError("relative_entropy_bell_diagonal: concurrence outside [0, 1]");
  const double c = std::clamp(concurrence, 0.0, 1.0);
  const double p = 0.5 * (1.0 + c);
  const double binary_entropy = -xlog2(p) - xlog2(1.0 - p);
  return std::max(0.0, 1.0 - binary_entropy);
}

inline double classical_correlations(double mutual_info, double rel_entropy) {
  return mutual_info - rel_entropy;
}

/// Detects whether a 4x4 block is a mixture of at most two Bell states and,
/// if so, returns its concurrence |2 p_max - 1|. Anything with off-diagonal
/// weight in the Bell basis, or more than two Bell components, gives nullopt.
inline std::optional<double> two_bell_mixture_concurrence(const DensityMatrix& rho4,
                                                          double tol = 1e-10) {
  if (rho4.dim() != 4)
    throw DimensionError("two_bell_mixture_concurrence: expected a 4x4 density block");
  const DensityMatrix bell = change_basis(rho4, BasisTag::BellPol);
  const CMat& a = bell.mat();
  double p_max = 0.0;
  int components = 0;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (i != j && std::abs(a(i, j)) > tol) return std::nullopt;
    }
    const double p = a(i, i).real();
    if (p > tol) {
      ++components;
      p_max = std::max(p_max, p);
    }
  }
  if (components > 2) return std::nullopt;
  return std::abs(2.0 * p_max - 1.0);
}

// ---------------------------------------------------------------------------
// Stokes picture of a one-qubit state.

struct StokesVector {
  double xi1, xi2, xi3;

  double norm() const { return std::sqrt(xi1 * xi1 + xi2 * xi2 + xi3 * xi3); }
};

inline StokesVector stokes_vector(const DensityMatrix& rho2) {
  if (rho2.dim() != 2) throw DimensionError("stokes_vector: expected a 2x2 density block");
  const CMat& a = rho2.mat();
  const cx z = a(0, 1);
  return {2.0 * z.real(), -2.0 * z.imag(), 2.0 * a(0, 0).real() - 1.0};
}

inline double degree_of_polarization(const StokesVector& s) { return s.norm(); }

inline double degree_of_polarization(const DensityMatrix& rho2) {
  return degree_of_polarization(stokes_vector(rho2));
}

// ---------------------------------------------------------------------------
// Aggregate report for one mixed two-qubit block.

struct CorrelationReport {
  Spectrum spectrum_full;
  Spectrum spectrum_reduced;
  double entropy_full;
  double entropy_reduced;
  double schmidt_k;
  double mutual_info;
  double concurrence;
  StokesVector stokes;
  double polarization_degree;
  // Present only when the block is a mixture of at most two Bell states.
  std::optional<double> rel_entropy;
  std::optional<double> classical_corr;
};

inline CorrelationReport build_correlation_report(const DensityMatrix& rho4) {
  if (rho4.dim() != 4)
    throw DimensionError("build_correlation_report: expected a 4x4 density block");
  if (rho4.basis() == BasisTag::QuquartMixed)
    throw DimensionError("build_correlation_report: needs a two-qubit block");
  const DensityMatrix nat = change_basis(rho4, BasisTag::Natural);

  CorrelationReport r;
  r.spectrum_full = hermitian_eigenvalues(nat);
  r.entropy_full = von_neumann_entropy(r.spectrum_full);

  const DensityMatrix red = reduce_single_qubit(nat);
  r.spectrum_reduced = hermitian_eigenvalues(red);
  r.entropy_reduced = von_neumann_entropy(r.spectrum_reduced);
  r.schmidt_k = schmidt_parameter(r.spectrum_reduced);
  r.mutual_info = mutual_information(nat);

  r.concurrence = wootters_concurrence(nat);
  r.stokes = stokes_vector(red);
  r.polarization_degree = degree_of_polarization(r.stokes);

  if (auto bell_c = two_bell_mixture_concurrence(nat)) {
    r.rel_entropy = relative_entropy_bell_diagonal(*bell_c);
    r.classical_corr = classical_correlations(r.mutual_info, *r.rel_entropy);
  }
  return r;
}

}  // namespace ququart
