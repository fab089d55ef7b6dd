#include "moduli/curve.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace moduli {

Curve::Curve(FieldElem a, FieldElem b) {
  if (!a.field() || !b.field() || !a.field()->same_as(*b.field()))
    throw std::invalid_argument("curve: coefficients from different fields");
  if (a.field()->characteristic() < 5) throw std::invalid_argument("curve: characteristic must be at least 5");
  auto data = std::make_shared<Data>();
  data->field = a.field();
  data->a = std::move(a);
  data->b = std::move(b);
  data_ = std::move(data);
  if (discriminant().is_zero()) throw std::invalid_argument("curve: singular (4A^3 + 27B^2 = 0)");
}

FieldElem Curve::discriminant() const { return a().pow(3) * 4 + b() * b() * 27; }

FieldElem Curve::j_invariant() const { return a().pow(3) * 4 * 1728 / discriminant(); }

CurvePoint Curve::infinity() const { return CurvePoint(*this); }

bool Curve::on_curve(const FieldElem& x, const FieldElem& y) const { return y * y == x * x * x + a() * x + b(); }

CurvePoint Curve::point(const FieldElem& x, const FieldElem& y) const {
  if (!on_curve(x, y)) throw std::invalid_argument("curve: point not on curve");
  return CurvePoint(*this, x, y);
}

std::vector<CurvePoint> Curve::points() const {
  std::call_once(data_->points_once, [this] {
    for (const auto& x : field()->elements()) {
      auto rhs = x * x * x + a() * x + b();
      auto s = rhs.sqrt();
      if (!s) continue;
      data_->affine.emplace_back(x.index(), s->index());
      if (!s->is_zero()) data_->affine.emplace_back(x.index(), (-*s).index());
    }
    std::sort(data_->affine.begin(), data_->affine.end());
  });
  std::vector<CurvePoint> out{infinity()};
  for (auto [x, y] : data_->affine) out.emplace_back(*this, FieldElem(field(), x), FieldElem(field(), y));
  return out;
}

Int Curve::point_count() const { return static_cast<Int>(points().size()); }

std::vector<CurvePoint> Curve::torsion(Int N) const {
  std::vector<CurvePoint> out;
  for (const auto& P : points())
    if (P.multiple(N).is_infinity()) out.push_back(P);
  return out;
}

bool Curve::same_as(const Curve& o) const {
  return field()->same_as(*o.field()) && a() == o.a() && b() == o.b();
}

std::string Curve::to_string() const {
  return "y^2 = x^3 + " + a().to_string() + " x + " + b().to_string() + " over F_" + std::to_string(field()->order());
}

CurvePoint CurvePoint::operator+(const CurvePoint& o) const {
  if (infinite_) return o;
  if (o.infinite_) return *this;
  if (x_ == o.x_ && (y_ + o.y_).is_zero()) return curve_.infinity();
  FieldElem lambda = (x_ == o.x_) ? (x_ * x_ * 3 + curve_.a()) / (y_ * 2) : (o.y_ - y_) / (o.x_ - x_);
  FieldElem x3 = lambda * lambda - x_ - o.x_;
  FieldElem y3 = lambda * (x_ - x3) - y_;
  return CurvePoint(curve_, x3, y3);
}

CurvePoint CurvePoint::operator-() const {
  if (infinite_) return *this;
  return CurvePoint(curve_, x_, -y_);
}

CurvePoint CurvePoint::multiple(Int n) const {
  if (n < 0) return (-*this).multiple(-n);
  CurvePoint result = curve_.infinity(), base = *this;
  while (n > 0) {
    if (n & 1) result += base;
    base += base;
    n >>= 1;
  }
  return result;
}

Int CurvePoint::order(Int multiple_of) const {
  if (!multiple(multiple_of).is_infinity()) throw std::invalid_argument("order: point not killed by the given multiple");
  Int t = multiple_of;
  for (auto [l, e] : factorize(multiple_of))
    for (int i = 0; i < e && t % l == 0 && multiple(t / l).is_infinity(); ++i) t /= l;
  return t;
}

std::string CurvePoint::to_string() const {
  if (infinite_) return "O";
  return "(" + x_.to_string() + ", " + y_.to_string() + ")";
}

namespace {

// Value at R of the line through T1 and T2 (tangent when equal), or nullopt if it vanishes.
std::optional<FieldElem> line_value(const CurvePoint& T1, const CurvePoint& T2, const CurvePoint& R) {
  const FieldPtr& F = R.curve().field();
  if (T1.is_infinity() && T2.is_infinity()) return F->one();
  if (T1.is_infinity() || T2.is_infinity()) {
    const CurvePoint& T = T1.is_infinity() ? T2 : T1;
    FieldElem v = R.x() - T.x();
    return v.is_zero() ? std::nullopt : std::optional(v);
  }
  if (T1.x() == T2.x() && (T1.y() + T2.y()).is_zero()) {
    FieldElem v = R.x() - T1.x();
    return v.is_zero() ? std::nullopt : std::optional(v);
  }
  FieldElem lambda = (T1.x() == T2.x()) ? (T1.x() * T1.x() * 3 + R.curve().a()) / (T1.y() * 2)
                                        : (T2.y() - T1.y()) / (T2.x() - T1.x());
  FieldElem v = R.y() - T1.y() - lambda * (R.x() - T1.x());
  return v.is_zero() ? std::nullopt : std::optional(v);
}

std::optional<FieldElem> vertical_value(const CurvePoint& V, const CurvePoint& R) {
  if (V.is_infinity()) return R.curve().field()->one();
  FieldElem v = R.x() - V.x();
  return v.is_zero() ? std::nullopt : std::optional(v);
}

// f_{N,P}(R) with div f = N(P) - N(O); nullopt on a degenerate evaluation.
std::optional<FieldElem> miller(const CurvePoint& P, Int N, const CurvePoint& R) {
  if (R.is_infinity()) return std::nullopt;
  FieldElem f = R.curve().field()->one();
  CurvePoint T = P;
  int top = 63;
  while (top > 0 && !((N >> top) & 1)) --top;
  for (int bit = top - 1; bit >= 0; --bit) {
    auto l = line_value(T, T, R);
    CurvePoint T2 = T + T;
    auto v = vertical_value(T2, R);
    if (!l || !v) return std::nullopt;
    f = f * f * *l / *v;
    T = T2;
    if ((N >> bit) & 1) {
      auto l2 = line_value(T, P, R);
      CurvePoint TP = T + P;
      auto v2 = vertical_value(TP, R);
      if (!l2 || !v2) return std::nullopt;
      f = f * *l2 / *v2;
      T = TP;
    }
  }
  return f;
}

}  // namespace

FieldElem weil_pairing(const CurvePoint& P, const CurvePoint& Q, Int N) {
  if (N < 1) throw std::invalid_argument("weil_pairing: N must be positive");
  const Curve& E = P.curve();
  if (!E.same_as(Q.curve())) throw std::invalid_argument("weil_pairing: points on different curves");
  if (std::gcd(N, E.field()->characteristic()) != 1)
    throw std::invalid_argument("weil_pairing: N must be prime to the characteristic");
  if (!P.multiple(N).is_infinity() || !Q.multiple(N).is_infinity())
    throw std::invalid_argument("weil_pairing: points not killed by N");
  const FieldPtr& F = E.field();
  if (P.is_infinity() || Q.is_infinity() || P == Q) return F->one();
  for (const auto& S : E.points()) {
    if (S.is_infinity()) continue;
    auto a = miller(P, N, Q + S);
    auto b = miller(P, N, S);
    auto c = miller(Q, N, P - S);
    auto d = miller(Q, N, -S);
    if (!a || !b || !c || !d) continue;
    FieldElem e = (*a / *b) / (*c / *d);
    if (!e.pow(N).is_one()) throw std::logic_error("weil_pairing: value is not an N-th root of unity");
    return e;
  }
  throw std::runtime_error("weil_pairing: no admissible auxiliary point");
}

}  // namespace moduli
