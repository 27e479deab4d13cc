#pragma once

#include <stdexcept>

#include <Eigen/Core>

#include "f4l/poly.hpp"
#include "f4l/rational.hpp"

namespace Eigen {
template <>
struct NumTraits<f4l::BiPoly> : GenericNumTraits<f4l::BiPoly> {
  typedef f4l::BiPoly Real;
  typedef f4l::BiPoly NonInteger;
  typedef f4l::BiPoly Nested;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 20,
    AddCost = 100,
    MulCost = 200
  };
  static inline Real epsilon() { return f4l::BiPoly(); }
  static inline Real dummy_precision() { return f4l::BiPoly(); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<f4l::UniPoly> : GenericNumTraits<f4l::UniPoly> {
  typedef f4l::UniPoly Real;
  typedef f4l::UniPoly NonInteger;
  typedef f4l::UniPoly Nested;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 20,
    AddCost = 100,
    MulCost = 200
  };
  static inline Real epsilon() { return f4l::UniPoly(); }
  static inline Real dummy_precision() { return f4l::UniPoly(); }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen

namespace f4l {

using MatrixP = Matrix<BiPoly>;

/// Exact solution of M x = rhs by Gaussian elimination over a field scalar.
/// Throws on a singular matrix.
template <class S>
Vector<S> solve_linear(Matrix<S> m, Vector<S> rhs) {
  const Eigen::Index n = m.rows();
  if (m.cols() != n || rhs.size() != n) throw std::invalid_argument("solve_linear: shape mismatch");
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index piv = -1;
    for (Eigen::Index r = col; r < n; ++r)
      if (!(m(r, col) == S(0))) {
        piv = r;
        break;
      }
    if (piv < 0) throw std::domain_error("singular system");
    if (piv != col) {
      m.row(piv).swap(m.row(col));
      std::swap(rhs(piv), rhs(col));
    }
    const S inv = S(1) / m(col, col);
    for (Eigen::Index c = col; c < n; ++c) m(col, c) = m(col, c) * inv;
    rhs(col) = rhs(col) * inv;
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == col) continue;
      const S f = m(r, col);
      if (f == S(0)) continue;
      for (Eigen::Index c = col; c < n; ++c) m(r, c) = m(r, c) - f * m(col, c);
      rhs(r) = rhs(r) - f * rhs(col);
    }
  }
  return rhs;
}

/// Determinant over a commutative ring scalar by Laplace expansion.
/// Meant for small matrices (n <= 6).
template <class S>
S ring_det(const Matrix<S>& m) {
  const Eigen::Index n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("ring_det: square matrix required");
  if (n == 0) return S(1);
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  S acc(0);
  for (Eigen::Index r = 0; r < n; ++r) {
    if (m(r, 0) == S(0)) continue;
    Matrix<S> minor(n - 1, n - 1);
    Eigen::Index rr = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == r) continue;
      for (Eigen::Index j = 1; j < n; ++j) minor(rr, j - 1) = m(i, j);
      ++rr;
    }
    const S term = m(r, 0) * ring_det(minor);
    if (r % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  return acc;
}

}  // namespace f4l
