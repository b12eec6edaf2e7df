// Dense complex square matrix. Everything in this library is 2x2 .. 16x16,
// so the representation is a flat vector and the algorithms are plain loops.
#pragma once

#include <cstddef>
#include <vector>

#include "common.hpp"

namespace ququart {

class CMat {
public:
  CMat() = default;
  explicit CMat(int n) : n_(n), a_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
    if (n < 1) throw DimensionError("CMat: dimension must be positive");
  }

  static CMat identity(int n) {
    CMat m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  int dim() const { return n_; }

  cx& operator()(int i, int j) { return a_[flat(i, j)]; }
  const cx& operator()(int i, int j) const { return a_[flat(i, j)]; }

  CMat adjoint() const {
    CMat r(n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) r(i, j) = std::conj((*this)(j, i));
    return r;
  }

  CMat conjugate() const {
    CMat r(n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) r(i, j) = std::conj((*this)(i, j));
    return r;
  }

  cx trace() const {
    cx t = 0.0;
    for (int i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (const cx& v : a_) s += std::norm(v);
    return std::sqrt(s);
  }

  /// Largest entry-wise violation of A = A^dagger.
  double hermiticity_defect() const {
    double d = 0.0;
    for (int i = 0; i < n_; ++i)
      for (int j = i; j < n_; ++j)
        d = std::max(d, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return d;
  }

  /// Replace A by (A + A^dagger)/2.
  void hermitize() {
    for (int i = 0; i < n_; ++i) {
      (*this)(i, i) = cx((*this)(i, i).real(), 0.0);
      for (int j = i + 1; j < n_; ++j) {
        cx m = 0.5 * ((*this)(i, j) + std::conj((*this)(j, i)));
        (*this)(i, j) = m;
        (*this)(j, i) = std::conj(m);
      }
    }
  }

  double max_abs_diff(const CMat& other) const {
    if (other.n_ != n_) throw DimensionError("max_abs_diff: dimension mismatch");
    double d = 0.0;
    for (std::size_t k = 0; k < a_.size(); ++k) d = std::max(d, std::abs(a_[k] - other.a_[k]));
    return d;
  }

  friend CMat operator+(const CMat& a, const CMat& b) {
    if (a.n_ != b.n_) throw DimensionError("CMat+: dimension mismatch");
    CMat r(a.n_);
    for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] = a.a_[k] + b.a_[k];
    return r;
  }

  friend CMat operator-(const CMat& a, const CMat& b) {
    if (a.n_ != b.n_) throw DimensionError("CMat-: dimension mismatch");
    CMat r(a.n_);
    for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] = a.a_[k] - b.a_[k];
    return r;
  }

  friend CMat operator*(cx s, const CMat& a) {
    CMat r(a.n_);
    for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] = s * a.a_[k];
    return r;
  }

  friend CMat operator*(const CMat& a, const CMat& b) {
    if (a.n_ != b.n_) throw DimensionError("CMat*: dimension mismatch");
    const int n = a.n_;
    CMat r(n);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        const cx aik = a(i, k);
        if (aik == cx{}) continue;
        for (int j = 0; j < n; ++j) r(i, j) += aik * b(k, j);
      }
    return r;
  }

private:
  std::size_t flat(int i, int j) const { return static_cast<std::size_t>(i) * n_ + j; }

  int n_ = 0;
  std::vector<cx> a_;
};

inline std::vector<cx> operator*(const CMat& a, const std::vector<cx>& v) {
  const int n = a.dim();
  if (static_cast<int>(v.size()) != n) throw DimensionError("CMat*vec: dimension mismatch");
  std::vector<cx> r(v.size());
  for (int i = 0; i < n; ++i) {
    cx s = 0.0;
    for (int j = 0; j < n; ++j) s += a(i, j) * v[j];
    r[i] = s;
  }
  return r;
}

/// <u, v> with conjugation on the first argument.
inline cx inner_product(const std::vector<cx>& u, const std::vector<cx>& v) {
  if (u.size() != v.size()) throw DimensionError("inner_product: length mismatch");
  cx s = 0.0;
  for (std::size_t k = 0; k < u.size(); ++k) s += std::conj(u[k]) * v[k];
  return s;
}

}  // namespace ququart
