#pragma once

#include "moduli/field.hpp"

#include <memory>
#include <mutex>
#include <utility>
#include <optional>
#include <string>
#include <vector>

namespace moduli {

class CurvePoint;

// y^2 = x^3 + A x + B over F_q, p >= 5. Cheap to copy.
class Curve {
 public:
  Curve(FieldElem a, FieldElem b);

  const FieldPtr& field() const { return data_->field; }
  const FieldElem& a() const { return data_->a; }
  const FieldElem& b() const { return data_->b; }
  FieldElem discriminant() const;
  FieldElem j_invariant() const;

  CurvePoint infinity() const;
  CurvePoint point(const FieldElem& x, const FieldElem& y) const;
  bool on_curve(const FieldElem& x, const FieldElem& y) const;

  // All rational points, infinity first, then by (x, y) index.
  std::vector<CurvePoint> points() const;
  Int point_count() const;
  Int frobenius_trace() const { return field()->order() + 1 - point_count(); }
  std::vector<CurvePoint> torsion(Int N) const;

  bool same_as(const Curve& o) const;
  std::string to_string() const;

 private:
  struct Data {
    FieldPtr field;
    FieldElem a;
    FieldElem b;
    mutable std::once_flag points_once;
    mutable std::vector<std::pair<std::uint32_t, std::uint32_t>> affine;
  };
  std::shared_ptr<const Data> data_;
};

class CurvePoint {
 public:
  CurvePoint(Curve curve) : curve_(std::move(curve)) {}
  CurvePoint(Curve curve, FieldElem x, FieldElem y)
      : curve_(std::move(curve)), x_(std::move(x)), y_(std::move(y)), infinite_(false) {}

  const Curve& curve() const { return curve_; }
  bool is_infinity() const { return infinite_; }
  const FieldElem& x() const { return x_; }
  const FieldElem& y() const { return y_; }

  CurvePoint operator+(const CurvePoint& o) const;
  CurvePoint operator-() const;
  CurvePoint operator-(const CurvePoint& o) const { return *this + (-o); }
  CurvePoint& operator+=(const CurvePoint& o) { return *this = *this + o; }
  CurvePoint multiple(Int n) const;

  // Least t > 0 with tP = O, given that multiple_of * P = O.
  Int order(Int multiple_of) const;
  Int order() const { return order(curve_.point_count()); }
  std::string to_string() const;

  friend bool operator==(const CurvePoint& P, const CurvePoint& Q) {
    if (P.infinite_ || Q.infinite_) return P.infinite_ == Q.infinite_;
    return P.x_ == Q.x_ && P.y_ == Q.y_;
  }
  friend bool operator<(const CurvePoint& P, const CurvePoint& Q) {
    if (P.infinite_ != Q.infinite_) return P.infinite_;
    if (P.infinite_) return false;
    if (P.x_ != Q.x_) return P.x_ < Q.x_;
    return P.y_ < Q.y_;
  }

 private:
  Curve curve_;
  FieldElem x_;
  FieldElem y_;
  bool infinite_ = true;
};

inline CurvePoint operator*(Int n, const CurvePoint& P) { return P.multiple(n); }

// Weil pairing e_N via Miller functions with an auxiliary shift point.
FieldElem weil_pairing(const CurvePoint& P, const CurvePoint& Q, Int N);

}  // namespace moduli
