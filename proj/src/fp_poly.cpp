#include "moduli/fp_poly.hpp"

#include <deque>
#include <stdexcept>

namespace moduli {

FpVector FpSpan::reduce(FpVector v) const {
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = mod(v(i), p_);
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    Int c = v(pivots_[k]);
    if (c == 0) continue;
    v = (v - c * basis_[k]).unaryExpr([this](Int x) { return mod(x, p_); });
  }
  return v;
}

bool FpSpan::insert(const FpVector& v) {
  if (v.size() != dim_) throw std::invalid_argument("FpSpan: dimension mismatch");
  FpVector r = reduce(v);
  Eigen::Index pivot = 0;
  while (pivot < r.size() && r(pivot) == 0) ++pivot;
  if (pivot == r.size()) return false;
  Int inv = inverse_mod(r(pivot), p_);
  r = r.unaryExpr([&](Int x) { return mod(x * inv, p_); });
  for (auto& b : basis_) {
    Int c = b(pivot);
    if (c != 0) b = (b - c * r).unaryExpr([this](Int x) { return mod(x, p_); });
  }
  basis_.push_back(std::move(r));
  pivots_.push_back(pivot);
  return true;
}

FpPolyRing::FpPolyRing(Int p, Int M) : p_(p), M_(M) {
  if (!is_prime(p)) throw std::invalid_argument("FpPolyRing: p must be prime");
  if (M < 1) throw std::invalid_argument("FpPolyRing: M must be positive");
}

FpVector FpPolyRing::constant(Int c) const {
  FpVector v = zero();
  v(0) = mod(c, p_);
  return v;
}

FpVector FpPolyRing::zeta_power(Int k) const {
  FpVector v = zero();
  v(mod(k, M_)) = 1;
  return v;
}

FpVector FpPolyRing::add(const FpVector& x, const FpVector& y) const {
  return (x + y).unaryExpr([this](Int c) { return mod(c, p_); });
}

FpVector FpPolyRing::sub(const FpVector& x, const FpVector& y) const {
  return (x - y).unaryExpr([this](Int c) { return mod(c, p_); });
}

FpVector FpPolyRing::mul(const FpVector& x, const FpVector& y) const {
  FpVector r = zero();
  for (Int i = 0; i < M_; ++i) {
    if (x(i) == 0) continue;
    for (Int j = 0; j < M_; ++j)
      if (y(j) != 0) r((i + j) % M_) = mod(r((i + j) % M_) + x(i) * y(j), p_);
  }
  return r;
}

FpVector FpPolyRing::shift(const FpVector& x, Int k) const {
  FpVector r(M_);
  for (Int i = 0; i < M_; ++i) r(mod(i + k, M_)) = x(i);
  return r;
}

Int FpPolyRing::quotient_dimension(const std::vector<FpVector>& generators) const {
  FpSpan ideal(p_, M_);
  std::deque<FpVector> pending(generators.begin(), generators.end());
  while (!pending.empty()) {
    FpVector v = std::move(pending.front());
    pending.pop_front();
    if (ideal.insert(v)) pending.push_back(shift(v, 1));
  }
  return M_ - ideal.rank();
}

}  // namespace moduli
