// Reference implementations used only by the tests, written along different
// algorithmic routes than the library so the two can check each other:
// eigenvalues via characteristic-polynomial roots, randomness via xorshift.
#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "ququart/matrix.hpp"

namespace oracles {

using ququart::CMat;
using ququart::cx;

// Faddeev-LeVerrier recurrence. Returns c with
// p(x) = x^n + c[n-1] x^{n-1} + ... + c[0].
inline std::vector<cx> char_poly(const CMat& a) {
  const int n = a.dim();
  std::vector<cx> c(static_cast<std::size_t>(n));
  CMat m = a;
  cx ck = -m.trace();
  c[static_cast<std::size_t>(n - 1)] = ck;
  for (int k = 2; k <= n; ++k) {
    CMat shifted = m;
    for (int i = 0; i < n; ++i) shifted(i, i) += ck;
    m = a * shifted;
    ck = -m.trace() / static_cast<double>(k);
    c[static_cast<std::size_t>(n - k)] = ck;
  }
  return c;
}

// Durand-Kerner simultaneous iteration for all roots of a monic polynomial.
inline std::vector<cx> poly_roots(const std::vector<cx>& c) {
  const int n = static_cast<int>(c.size());
  auto eval = [&](cx x) {
    cx v = 1.0;
    for (int k = n - 1; k >= 0; --k) v = v * x + c[static_cast<std::size_t>(k)];
    return v;
  };
  std::vector<cx> z(static_cast<std::size_t>(n));
  const cx w(0.4, 0.9);
  cx p = w;
  for (int k = 0; k < n; ++k) {
    z[static_cast<std::size_t>(k)] = p;
    p *= w;
  }
  for (int iter = 0; iter < 1000; ++iter) {
    double moved = 0.0;
    for (int k = 0; k < n; ++k) {
      cx denom = 1.0;
      for (int j = 0; j < n; ++j)
        if (j != k) denom *= z[static_cast<std::size_t>(k)] - z[static_cast<std::size_t>(j)];
      const cx delta = eval(z[static_cast<std::size_t>(k)]) / denom;
      z[static_cast<std::size_t>(k)] -= delta;
      moved = std::max(moved, std::abs(delta));
    }
    if (moved < 1e-14) break;
  }
  return z;
}

// Hermitian eigenvalue oracle: characteristic roots, real parts, descending.
inline std::vector<double> eigenvalues_reference(const CMat& a) {
  const std::vector<cx> roots = poly_roots(char_poly(a));
  std::vector<double> vals;
  vals.reserve(roots.size());
  for (cx r : roots) vals.push_back(r.real());
  std::sort(vals.rbegin(), vals.rend());
  return vals;
}

// xorshift64* generator, deliberately unrelated to the library's RNG.
struct Rand {
  std::uint64_t s;

  explicit Rand(std::uint64_t seed) : s(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

  double real01() {
    s ^= s >> 12;
    s ^= s << 25;
    s ^= s >> 27;
    return static_cast<double>((s * 0x2545F4914F6CDD1DULL) >> 11) * 0x1.0p-53;
  }

  double sym() { return 2.0 * real01() - 1.0; }
  cx c() { return {sym(), sym()}; }
};

inline CMat random_hermitian(Rand& r, int n) {
  CMat a(n);
  for (int i = 0; i < n; ++i) {
    a(i, i) = r.sym();
    for (int j = i + 1; j < n; ++j) {
      a(i, j) = r.c();
      a(j, i) = std::conj(a(i, j));
    }
  }
  return a;
}

// Random density matrix: B B^dagger normalized to unit trace. PSD by
// construction, generically non-degenerate.
inline CMat random_density(Rand& r, int n) {
  CMat b(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b(i, j) = r.c();
  CMat rho = b * b.adjoint();
  const double t = rho.trace().real();
  return cx(1.0 / t) * rho;
}

}  // namespace oracles
