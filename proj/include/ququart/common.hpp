// Shared scalar type, error types, tolerances, and deterministic number
// formatting used by every other header in the library.
#pragma once

#include <charconv>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace ququart {

/// Dimensionless complex probability amplitude.
using cx = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846264338327950288;
inline constexpr double inv_sqrt2 = 0.70710678118654752440084436210484904;

// Tolerances. These are part of the library contract, not tuning knobs.
inline constexpr double norm_tol = 1e-10;            // unit-norm invariant
inline constexpr double auto_normalize_tol = 1e-6;   // max deviation fixed up silently
inline constexpr double hermiticity_tol = 1e-12;     // entry-wise
inline constexpr double trace_tol = 1e-10;
inline constexpr double psd_floor = -1e-10;          // eigenvalues below this are an error
inline constexpr double eig_tol = 1e-13;             // Jacobi off-diagonal convergence

struct NormalizationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DimensionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline bool is_finite(cx v) {
  return std::isfinite(v.real()) && std::isfinite(v.imag());
}

/// Text form used by every CSV/JSON/report emitter: 12 significant digits,
/// lowercase exponent, locale-independent. Identical inputs give identical
/// bytes, which is what regression diffs rely on.
inline std::string format_number(double v) {
  if (v == 0.0) v = 0.0;  // collapse -0
  char buf[40];
  auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 12);
  return std::string(buf, res.ptr);
}

}  // namespace ququart
