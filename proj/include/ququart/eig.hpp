// Eigen-decomposition of small complex Hermitian matrices.
//
// A cyclic Jacobi iteration is enough at these sizes (nothing here is larger
// than 16x16) and keeps the library dependency-free. Each elementary step
// absorbs the phase of the pivot entry into a diagonal unitary, then applies
// the classic real rotation that annihilates it.
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <vector>

#include "matrix.hpp"

namespace ququart {

struct EigResult {
  std::vector<double> values;  // descending
  CMat vectors;                // column k pairs with values[k]
};

namespace detail {

inline double off_diagonal_norm(const CMat& a) {
  double s = 0.0;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = i + 1; j < a.dim(); ++j) s += 2.0 * std::norm(a(i, j));
  return std::sqrt(s);
}

// One similarity transform A <- U^dagger A U, V <- V U with
// U = diag(1, e^{-i theta}) * [[c, s], [-s, c]] acting on rows/columns (p, q).
// theta is the phase of A(p,q); the rotation angle solves the usual
// t^2 + 2 tau t - 1 = 0 with tau = (A_qq - A_pp) / (2 |A_pq|).
inline void jacobi_rotate(CMat& a, CMat& v, int p, int q) {
  const cx apq = a(p, q);
  const double ab = std::abs(apq);
  if (ab == 0.0) return;
  const cx phase = apq / ab;  // e^{i theta}
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double tau = (aqq - app) / (2.0 * ab);
  const double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;
  const cx ph_s = std::conj(phase) * s;   // e^{-i theta} s
  const cx ph_c = std::conj(phase) * c;   // e^{-i theta} c

  const int n = a.dim();
  for (int k = 0; k < n; ++k) {  // A <- A U
    const cx tp = a(k, p), tq = a(k, q);
    a(k, p) = c * tp - ph_s * tq;
    a(k, q) = s * tp + ph_c * tq;
  }
  for (int k = 0; k < n; ++k) {  // A <- U^dagger A
    const cx tp = a(p, k), tq = a(q, k);
    a(p, k) = c * tp - std::conj(ph_s) * tq;
    a(q, k) = s * tp + std::conj(ph_c) * tq;
  }
  for (int k = 0; k < n; ++k) {  // V <- V U
    const cx tp = v(k, p), tq = v(k, q);
    v(k, p) = c * tp - ph_s * tq;
    v(k, q) = s * tp + ph_c * tq;
  }
  a(p, q) = 0.0;  // annihilated by construction; clear the residue
  a(q, p) = 0.0;
  a(p, p) = cx(a(p, p).real(), 0.0);
  a(q, q) = cx(a(q, q).real(), 0.0);
}

}  // namespace detail

/// Full decomposition of a Hermitian matrix. Eigenvalues come back sorted in
/// descending order with the eigenvector columns permuted to match.
/// Throws DomainError when the input is not Hermitian (entry-wise 1e-12) and
/// ConvergenceError if the sweep budget runs out, which for these sizes would
/// indicate a genuinely broken input.
inline EigResult eig_hermitian(const CMat& input, int max_sweeps = 64) {
  if (input.hermiticity_defect() > hermiticity_tol)
    throw DomainError("eig_hermitian: matrix is not Hermitian");

  const int n = input.dim();
  CMat a = input;
  a.hermitize();
  CMat v = CMat::identity(n);
  const double scale = std::max(1.0, a.frobenius_norm());

  bool converged = (n == 1);
  for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
    if (detail::off_diagonal_norm(a) <= eig_tol * scale) {
      converged = true;
      break;
    }
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) detail::jacobi_rotate(a, v, p, q);
  }
  if (!converged && detail::off_diagonal_norm(a) > eig_tol * scale)
    throw ConvergenceError("eig_hermitian: Jacobi sweeps exhausted");

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return a(i, i).real() > a(j, j).real(); });

  EigResult r;
  r.values.resize(n);
  r.vectors = CMat(n);
  for (int k = 0; k < n; ++k) {
    r.values[k] = a(order[k], order[k]).real();
    for (int i = 0; i < n; ++i) r.vectors(i, k) = v(i, order[k]);
  }
  return r;
}

/// Eigenvalues only, descending. 2x2 inputs take the closed quadratic route;
/// anything larger goes through the Jacobi iteration.
inline std::vector<double> eigenvalues_hermitian(const CMat& m) {
  if (m.dim() == 2) {
    if (m.hermiticity_defect() > hermiticity_tol)
      throw DomainError("eigenvalues_hermitian: matrix is not Hermitian");
    const double a = m(0, 0).real();
    const double d = m(1, 1).real();
    const double half_sum = 0.5 * (a + d);
    const double half_diff = 0.5 * (a - d);
    const double r = std::sqrt(half_diff * half_diff + std::norm(m(0, 1)));
    return {half_sum + r, half_sum - r};
  }
  return eig_hermitian(m).values;
}

/// Positive-semidefinite square root. Tiny negative eigenvalues (down to the
/// PSD floor) are treated as zero; anything below the floor is an error.
inline CMat hermitian_sqrt(const CMat& m) {
  EigResult e = eig_hermitian(m);
  const int n = m.dim();
  for (double lam : e.values) {
    if (lam < psd_floor) throw DomainError("hermitian_sqrt: matrix is not positive semidefinite");
  }
  CMat r(n);
  for (int k = 0; k < n; ++k) {
    const double s = e.values[k] > 0.0 ? std::sqrt(e.values[k]) : 0.0;
    if (s == 0.0) continue;
    for (int i = 0; i < n; ++i) {
      const cx ui = s * e.vectors(i, k);
      if (ui == cx{}) continue;
      for (int j = 0; j < n; ++j) r(i, j) += ui * std::conj(e.vectors(j, k));
    }
  }
  return r;
}

}  // namespace ququart
