#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include "qhb/errors.hpp"

// Dense complex kernels for the small matrices this library works with
// (fiber dimensions are binom(n+l, n) at desk scale, so O(d^3) is fine).

namespace qhb {

using Complex = std::complex<double>;
using CVec = std::vector<Complex>;

struct CMat {
  std::size_t rows = 0;
  std::size_t cols = 0;
  CVec data;  // row-major

  CMat() = default;
  CMat(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, Complex(0.0, 0.0)) {}

  Complex& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

  static CMat identity(std::size_t d) {
    CMat m(d, d);
    for (std::size_t i = 0; i < d; ++i) m(i, i) = 1.0;
    return m;
  }
};

inline CMat operator*(const CMat& a, const CMat& b) {
  if (a.cols != b.rows) throw DomainError("matrix product: inner dimensions differ");
  CMat c(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex(0.0, 0.0)) continue;
      for (std::size_t j = 0; j < b.cols; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

inline CVec operator*(const CMat& a, const CVec& v) {
  if (a.cols != v.size()) throw DomainError("matrix-vector product: dimensions differ");
  CVec r(a.rows, Complex(0.0, 0.0));
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < a.cols; ++j) r[i] += a(i, j) * v[j];
  return r;
}

inline CMat operator+(const CMat& a, const CMat& b) {
  CMat c = a;
  for (std::size_t i = 0; i < c.data.size(); ++i) c.data[i] += b.data[i];
  return c;
}

inline CMat operator-(const CMat& a, const CMat& b) {
  CMat c = a;
  for (std::size_t i = 0; i < c.data.size(); ++i) c.data[i] -= b.data[i];
  return c;
}

inline CMat operator*(Complex s, const CMat& a) {
  CMat c = a;
  for (auto& x : c.data) x *= s;
  return c;
}

inline CMat transpose(const CMat& a) {
  CMat t(a.cols, a.rows);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < a.cols; ++j) t(j, i) = a(i, j);
  return t;
}

inline CMat adjoint(const CMat& a) {
  CMat t(a.cols, a.rows);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < a.cols; ++j) t(j, i) = std::conj(a(i, j));
  return t;
}

inline CMat conjugate(const CMat& a) {
  CMat c = a;
  for (auto& x : c.data) x = std::conj(x);
  return c;
}

inline double max_abs(const CMat& a) {
  double m = 0.0;
  for (const auto& x : a.data) m = std::max(m, std::abs(x));
  return m;
}

inline double max_abs(const CVec& v) {
  double m = 0.0;
  for (const auto& x : v) m = std::max(m, std::abs(x));
  return m;
}

inline double frobenius_norm(const CMat& a) {
  double s = 0.0;
  for (const auto& x : a.data) s += std::norm(x);
  return std::sqrt(s);
}

// LU with partial pivoting; returns determinant and (optionally) the inverse.
// Throws DomainError on a numerically singular pivot.
inline Complex determinant(const CMat& a) {
  if (a.rows != a.cols) throw DomainError("determinant: matrix not square");
  const std::size_t n = a.rows;
  CMat lu = a;
  Complex det(1.0, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    double best = std::abs(lu(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      const double v = std::abs(lu(i, k));
      if (v > best) {
        best = v;
        piv = i;
      }
    }
    if (best == 0.0) return Complex(0.0, 0.0);
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(lu(k, j), lu(piv, j));
      det = -det;
    }
    det *= lu(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const Complex f = lu(i, k) / lu(k, k);
      lu(i, k) = f;
      for (std::size_t j = k + 1; j < n; ++j) lu(i, j) -= f * lu(k, j);
    }
  }
  return det;
}

inline CMat inverse(const CMat& a) {
  if (a.rows != a.cols) throw DomainError("inverse: matrix not square");
  const std::size_t n = a.rows;
  CMat lu = a;
  CMat inv = CMat::identity(n);
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    double best = std::abs(lu(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      const double v = std::abs(lu(i, k));
      if (v > best) {
        best = v;
        piv = i;
      }
    }
    if (best < 1e-300) throw DomainError("inverse: matrix numerically singular");
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(lu(k, j), lu(piv, j));
        std::swap(inv(k, j), inv(piv, j));
      }
    }
    const Complex d = lu(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      lu(k, j) /= d;
      inv(k, j) /= d;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      const Complex f = lu(i, k);
      if (f == Complex(0.0, 0.0)) continue;
      for (std::size_t j = 0; j < n; ++j) {
        lu(i, j) -= f * lu(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

// Cholesky of a Hermitian matrix; empty optional when not positive definite.
inline std::optional<CMat> cholesky(const CMat& a) {
  if (a.rows != a.cols) return std::nullopt;
  const std::size_t n = a.rows;
  CMat l(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      Complex s = a(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * std::conj(l(j, k));
      if (i == j) {
        if (s.real() <= 0.0 || std::abs(s.imag()) > 1e-10 * (1.0 + std::abs(s.real())))
          return std::nullopt;
        l(i, j) = std::sqrt(s.real());
      } else {
        l(i, j) = s / l(j, j).real();
      }
    }
  }
  return l;
}

inline bool is_positive_definite(const CMat& a) { return cholesky(a).has_value(); }

// Largest singular value, via power iteration on A^H A. Deterministic start
// vector; small fixed-size matrices converge in a handful of sweeps.
inline double operator_norm(const CMat& a) {
  if (a.rows == 0 || a.cols == 0) return 0.0;
  CVec v(a.cols);
  for (std::size_t i = 0; i < v.size(); ++i)
    v[i] = Complex(1.0 + 0.013 * static_cast<double>(i), 0.37 - 0.011 * static_cast<double>(i));
  const CMat ah = adjoint(a);
  double lambda = 0.0;
  for (int it = 0; it < 500; ++it) {
    CVec w = ah * (a * v);
    double nw = 0.0;
    for (const auto& x : w) nw += std::norm(x);
    nw = std::sqrt(nw);
    if (nw == 0.0) return 0.0;
    for (auto& x : w) x /= nw;
    const double prev = lambda;
    lambda = nw;
    v = std::move(w);
    if (it > 4 && std::abs(lambda - prev) <= 1e-14 * std::max(1.0, lambda)) break;
  }
  return std::sqrt(lambda);
}

}  // namespace qhb
