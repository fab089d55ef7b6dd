#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace moduli {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using IntMatrix2 = Eigen::Matrix<std::int64_t, 2, 2>;
using IntRow2 = Eigen::Matrix<std::int64_t, 1, 2>;

namespace detail {

template <typename Scalar>
Scalar floor_div(Scalar a, Scalar b) {
  Scalar q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// (g, x, y) with a x + b y = g >= 0.
template <typename Scalar>
std::tuple<Scalar, Scalar, Scalar> extended_gcd(Scalar a, Scalar b) {
  Scalar old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    Scalar q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
    old_t = std::exchange(t, old_t - q * t);
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

}  // namespace detail

// left * input * right == diagonal, with d_0 | d_1 | ... and d_i >= 0.
template <typename Scalar>
struct SmithForm {
  DenseMatrix<Scalar> diagonal;
  DenseMatrix<Scalar> left;
  DenseMatrix<Scalar> right;

  std::vector<Scalar> invariants() const {
    std::vector<Scalar> out;
    for (Eigen::Index i = 0; i < std::min(diagonal.rows(), diagonal.cols()); ++i)
      out.push_back(diagonal(i, i));
    return out;
  }
};

template <typename Derived>
SmithForm<typename Derived::Scalar> smith_normal_form(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  using Mat = DenseMatrix<Scalar>;
  Mat d = input;
  const Eigen::Index m = d.rows(), n = d.cols();
  Mat u = Mat::Identity(m, m);
  Mat v = Mat::Identity(n, n);

  for (Eigen::Index t = 0; t < std::min(m, n); ++t) {
    for (;;) {
      Eigen::Index pi = -1, pj = -1;
      for (Eigen::Index i = t; i < m; ++i)
        for (Eigen::Index j = t; j < n; ++j)
          if (d(i, j) != 0 && (pi < 0 || std::abs(d(i, j)) < std::abs(d(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi < 0) return {d, u, v};
      d.row(t).swap(d.row(pi));
      u.row(t).swap(u.row(pi));
      d.col(t).swap(d.col(pj));
      v.col(t).swap(v.col(pj));

      bool clean = true;
      for (Eigen::Index i = t + 1; i < m; ++i) {
        Scalar q = d(i, t) / d(t, t);
        if (q != 0) {
          d.row(i) -= q * d.row(t);
          u.row(i) -= q * u.row(t);
        }
        if (d(i, t) != 0) clean = false;
      }
      for (Eigen::Index j = t + 1; j < n; ++j) {
        Scalar q = d(t, j) / d(t, t);
        if (q != 0) {
          d.col(j) -= q * d.col(t);
          v.col(j) -= q * v.col(t);
        }
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      Eigen::Index bad = -1;
      for (Eigen::Index i = t + 1; i < m && bad < 0; ++i)
        for (Eigen::Index j = t + 1; j < n; ++j)
          if (d(i, j) % d(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      d.row(t) += d.row(bad);
      u.row(t) += u.row(bad);
    }
    if (d(t, t) < 0) {
      d.row(t) *= Scalar(-1);
      u.row(t) *= Scalar(-1);
    }
  }
  return {d, u, v};
}

// Row-style Hermite form of the lattice spanned by the rows: upper echelon,
// positive pivots, entries above each pivot reduced into [0, pivot). Zero rows dropped.
template <typename Derived>
DenseMatrix<typename Derived::Scalar> hermite_normal_form(const Eigen::MatrixBase<Derived>& gens) {
  using Scalar = typename Derived::Scalar;
  DenseMatrix<Scalar> h = gens;
  const Eigen::Index m = h.rows(), n = h.cols();
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < n && r < m; ++c) {
    for (Eigen::Index i = r + 1; i < m; ++i) {
      if (h(i, c) == 0) continue;
      auto [g, x, y] = detail::extended_gcd(h(r, c), h(i, c));
      Scalar a = h(r, c) / g, b = h(i, c) / g;
      auto top = (x * h.row(r) + y * h.row(i)).eval();
      auto bottom = (a * h.row(i) - b * h.row(r)).eval();
      h.row(r) = top;
      h.row(i) = bottom;
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) h.row(r) *= Scalar(-1);
    for (Eigen::Index i = 0; i < r; ++i) {
      Scalar q = detail::floor_div(h(i, c), h(r, c));
      if (q != 0) h.row(i) -= q * h.row(r);
    }
    ++r;
  }
  return h.topRows(r);
}

template <typename Derived>
typename Derived::Scalar determinant2(const Eigen::MatrixBase<Derived>& m) {
  return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
}

template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, 2, 2> adjugate2(const Eigen::MatrixBase<Derived>& m) {
  Eigen::Matrix<typename Derived::Scalar, 2, 2> a;
  a << m(1, 1), -m(0, 1), -m(1, 0), m(0, 0);
  return a;
}

}  // namespace moduli
