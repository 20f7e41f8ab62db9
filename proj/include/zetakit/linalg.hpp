// Copyright 2026 The zetakit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ZETAKIT_LINALG_HPP
#define ZETAKIT_LINALG_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <numbers>
#include <span>
#include <utility>
#include <vector>

#include "zetakit/error.hpp"

namespace zetakit {

using cx = std::complex<double>;

inline cx ipow(cx z, std::size_t k) {
  cx r = 1.0;
  for (; k > 0; k >>= 1) {
    if (k & 1) r *= z;
    z *= z;
  }
  return r;
}

/// Comparison tolerance: relative with an absolute floor.
struct Tolerance {
  double rel = 1e-9;
  double abs = 1e-12;
};

/// |a - b| scaled by the larger magnitude; 0 when both vanish.
inline double relative_deviation(cx a, cx b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  if (scale == 0.0) return 0.0;
  return std::abs(a - b) / scale;
}

inline bool close(cx a, cx b, Tolerance tol = {}) {
  return std::abs(a - b) <= std::max(tol.abs, tol.rel * std::max(std::abs(a), std::abs(b)));
}

/// Dense row-major complex matrix.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cx> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    require(data_.size() == rows_ * cols_, "matrix data size does not match its shape");
  }

  static ComplexMatrix identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  static ComplexMatrix diagonal(std::span<const cx> d) {
    ComplexMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  cx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const cx& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const cx> data() const { return data_; }

  ComplexMatrix& operator+=(const ComplexMatrix& o) {
    require(rows_ == o.rows_ && cols_ == o.cols_, "matrix sum: shape mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  ComplexMatrix& operator-=(const ComplexMatrix& o) {
    require(rows_ == o.rows_ && cols_ == o.cols_, "matrix difference: shape mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  ComplexMatrix& operator*=(cx s) {
    for (auto& v : data_) v *= s;
    return *this;
  }

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, cx s) { return a *= s; }
  friend ComplexMatrix operator*(cx s, ComplexMatrix a) { return a *= s; }

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    require(a.cols_ == b.rows_, "matrix product: inner dimensions differ");
    ComplexMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const cx aik = a(i, k);
        if (aik == cx{}) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  cx trace() const {
    require(square(), "trace of a non-square matrix");
    cx t{};
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  double max_abs() const {
    double m = 0.0;
    for (const auto& v : data_) m = std::max(m, std::abs(v));
    return m;
  }

  /// Maximum absolute row sum.
  double norm_inf() const {
    double m = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < cols_; ++j) s += std::abs((*this)(i, j));
      m = std::max(m, s);
    }
    return m;
  }

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cx> data_;
};

/// Largest entrywise |a - b|.
inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), "max_abs_diff: shape mismatch");
  double m = 0.0;
  for (std::size_t k = 0; k < a.data().size(); ++k) m = std::max(m, std::abs(a.data()[k] - b.data()[k]));
  return m;
}

/// Determinant by LU with partial pivoting. A singular matrix yields 0,
/// the empty matrix yields 1.
inline cx det(ComplexMatrix m) {
  require(m.square(), "det: matrix is not square");
  const std::size_t n = m.rows();
  cx result = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    double best = std::abs(m(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      const double a = std::abs(m(i, k));
      if (a > best) {
        best = a;
        piv = i;
      }
    }
    if (best == 0.0) return 0.0;
    if (piv != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(m(k, j), m(piv, j));
      result = -result;
    }
    const cx pivot = m(k, k);
    result *= pivot;
    for (std::size_t i = k + 1; i < n; ++i) {
      const cx f = m(i, k) / pivot;
      if (f == cx{}) continue;
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return result;
}

inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const cx aij = a(i, j);
      if (aij == cx{}) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) c(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return c;
}

inline ComplexMatrix matrix_power(const ComplexMatrix& m, unsigned k) {
  ComplexMatrix result = ComplexMatrix::identity(m.rows());
  for (unsigned i = 0; i < k; ++i) result = result * m;
  return result;
}

/// Complex-coefficient polynomial, ascending powers.
class UnivariatePoly {
 public:
  UnivariatePoly() = default;
  explicit UnivariatePoly(std::vector<cx> coeffs) : c_(std::move(coeffs)) { trim_exact(); }

  const std::vector<cx>& coefficients() const { return c_; }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }

  cx coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : cx{}; }

  cx operator()(cx u) const {
    cx acc{};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * u + *it;
    return acc;
  }

  double max_abs_coefficient() const {
    double m = 0.0;
    for (const auto& v : c_) m = std::max(m, std::abs(v));
    return m;
  }

  /// Drops trailing coefficients below rel * max |c_k|.
  UnivariatePoly trimmed(double rel) const {
    std::vector<cx> c = c_;
    const double cut = rel * max_abs_coefficient();
    while (!c.empty() && std::abs(c.back()) <= cut) c.pop_back();
    return UnivariatePoly(std::move(c));
  }

  friend UnivariatePoly operator*(const UnivariatePoly& a, const UnivariatePoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<cx> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return UnivariatePoly(std::move(c));
  }

  friend UnivariatePoly operator+(const UnivariatePoly& a, const UnivariatePoly& b) {
    std::vector<cx> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coefficient(i) + b.coefficient(i);
    return UnivariatePoly(std::move(c));
  }

 private:
  void trim_exact() {
    while (!c_.empty() && c_.back() == cx{}) c_.pop_back();
  }
  std::vector<cx> c_;
};

inline UnivariatePoly poly_pow(const UnivariatePoly& p, unsigned k) {
  UnivariatePoly r({1.0});
  for (unsigned i = 0; i < k; ++i) r = r * p;
  return r;
}

/// Largest coefficientwise |a_k - b_k| divided by the largest coefficient
/// magnitude of either polynomial.
inline double coefficient_deviation(const UnivariatePoly& a, const UnivariatePoly& b) {
  const std::size_t n = std::max(a.coefficients().size(), b.coefficients().size());
  const double scale = std::max(a.max_abs_coefficient(), b.max_abs_coefficient());
  if (scale == 0.0) return 0.0;
  double m = 0.0;
  for (std::size_t k = 0; k < n; ++k) m = std::max(m, std::abs(a.coefficient(k) - b.coefficient(k)));
  return m / scale;
}

inline cx poly_derivative_at(const UnivariatePoly& p, cx u0) {
  const auto& c = p.coefficients();
  cx acc{};
  for (std::size_t k = c.size(); k-- > 1;) acc = acc * u0 + static_cast<double>(k) * c[k];
  return acc;
}

/// Quotient and remainder of p divided by (u - root), by synthetic division.
inline std::pair<UnivariatePoly, cx> divide_by_linear(const UnivariatePoly& p, cx root) {
  const auto& c = p.coefficients();
  if (c.empty()) return {UnivariatePoly{}, cx{}};
  std::vector<cx> q(c.size() - 1);
  cx carry = c.back();
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    q[k] = carry;
    carry = c[k] + carry * root;
  }
  return {UnivariatePoly(std::move(q)), carry};
}

/// Polynomial long division; returns quotient and remainder.
inline std::pair<UnivariatePoly, UnivariatePoly> poly_divmod(const UnivariatePoly& num, const UnivariatePoly& den) {
  require(!den.is_zero(), "polynomial division by zero");
  std::vector<cx> r = num.coefficients();
  const auto& d = den.coefficients();
  if (r.size() < d.size()) return {UnivariatePoly{}, num};
  std::vector<cx> q(r.size() - d.size() + 1);
  for (std::size_t k = q.size(); k-- > 0;) {
    q[k] = r[k + d.size() - 1] / d.back();
    for (std::size_t j = 0; j < d.size(); ++j) r[k + j] -= q[k] * d[j];
  }
  r.resize(d.size() - 1);
  return {UnivariatePoly(std::move(q)), UnivariatePoly(std::move(r))};
}

struct InterpolationOptions {
  double radius = 1.0;
  double residual_tol = 1e-7;
};

/// Recovers a polynomial of degree <= degree_bound from point evaluations.
/// Samples at degree_bound + 1 scaled roots of unity and inverts the DFT,
/// then checks the result at three off-grid points.
inline UnivariatePoly interpolate_poly(const std::function<cx(cx)>& evaluator, std::size_t degree_bound,
                                       InterpolationOptions opt = {}) {
  const std::size_t n = degree_bound + 1;
  const double two_pi = 2.0 * std::numbers::pi;
  std::vector<cx> values(n);
  for (std::size_t k = 0; k < n; ++k)
    values[k] = evaluator(std::polar(opt.radius, two_pi * static_cast<double>(k) / static_cast<double>(n)));

  std::vector<cx> coeffs(n);
  for (std::size_t j = 0; j < n; ++j) {
    cx acc{};
    for (std::size_t k = 0; k < n; ++k)
      acc += values[k] * std::polar(1.0, -two_pi * static_cast<double>((j * k) % n) / static_cast<double>(n));
    coeffs[j] = acc / (static_cast<double>(n) * std::pow(opt.radius, static_cast<double>(j)));
  }
  UnivariatePoly p(std::move(coeffs));

  for (int t = 0; t < 3; ++t) {
    const cx u = std::polar(opt.radius * (0.55 + 0.15 * t), 0.3 + 2.1 * t);
    const cx f = evaluator(u);
    double scale = std::abs(f);
    double upow = 1.0;
    for (const auto& c : p.coefficients()) {
      scale += std::abs(c) * upow;
      upow *= std::abs(u);
    }
    if (std::abs(p(u) - f) > opt.residual_tol * std::max(scale, 1e-300))
      throw NumericError("interpolation residual too large: degree bound too low or evaluator not polynomial");
  }
  return p;
}

}  // namespace zetakit

#endif  // ZETAKIT_LINALG_HPP
