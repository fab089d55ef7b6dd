#pragma once

#include "moduli/arith.hpp"

#include <Eigen/Dense>

#include <vector>

namespace moduli {

using FpVector = Eigen::Matrix<Int, Eigen::Dynamic, 1>;

// Echelon basis of a subspace of F_p^m, grown one vector at a time.
class FpSpan {
 public:
  FpSpan(Int p, Eigen::Index dim) : p_(p), dim_(dim) {}
  FpVector reduce(FpVector v) const;
  // Returns true when v was independent of the current basis.
  bool insert(const FpVector& v);
  Eigen::Index rank() const { return static_cast<Eigen::Index>(basis_.size()); }
  const std::vector<FpVector>& basis() const { return basis_; }

 private:
  Int p_;
  Eigen::Index dim_;
  std::vector<FpVector> basis_;
  std::vector<Eigen::Index> pivots_;
};

template <typename Derived>
Eigen::Index rank_mod_p(const Eigen::MatrixBase<Derived>& rows, Int p) {
  FpSpan span(p, rows.cols());
  for (Eigen::Index i = 0; i < rows.rows(); ++i) span.insert(rows.row(i).transpose());
  return span.rank();
}

// F_p[zeta] / (zeta^M - 1), elements as coefficient vectors of length M.
class FpPolyRing {
 public:
  FpPolyRing(Int p, Int M);
  Int characteristic() const { return p_; }
  Int dimension() const { return M_; }

  FpVector zero() const { return FpVector::Zero(M_); }
  FpVector constant(Int c) const;
  FpVector zeta_power(Int k) const;
  FpVector add(const FpVector& x, const FpVector& y) const;
  FpVector sub(const FpVector& x, const FpVector& y) const;
  FpVector mul(const FpVector& x, const FpVector& y) const;
  FpVector shift(const FpVector& x, Int k) const;

  // dim_F_p of R / (generators).
  Int quotient_dimension(const std::vector<FpVector>& generators) const;

 private:
  Int p_;
  Int M_;
};

}  // namespace moduli
