#include "moduli/isogeny.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace moduli {

bool is_subgroup(const std::vector<CurvePoint>& points) {
  if (points.empty()) return false;
  std::set<CurvePoint> s(points.begin(), points.end());
  if (!s.count(points.front().curve().infinity())) return false;
  for (const auto& P : s) {
    if (!s.count(-P)) return false;
    for (const auto& Q : s)
      if (!s.count(P + Q)) return false;
  }
  return true;
}

std::vector<CurvePoint> generated_subgroup(const CurvePoint& P) {
  std::vector<CurvePoint> out{P.curve().infinity()};
  for (CurvePoint T = P; !T.is_infinity(); T += P) out.push_back(T);
  std::sort(out.begin(), out.end());
  return out;
}

Isogeny velu_quotient(const Curve& E, const std::vector<CurvePoint>& kernel) {
  std::vector<CurvePoint> D(kernel);
  std::sort(D.begin(), D.end());
  D.erase(std::unique(D.begin(), D.end()), D.end());
  for (const auto& P : D)
    if (!P.curve().same_as(E)) throw std::invalid_argument("velu: kernel point on a different curve");
  if (!is_subgroup(D)) throw std::invalid_argument("velu: kernel is not a subgroup");
  const FieldPtr& F = E.field();
  if (static_cast<Int>(D.size()) % F->characteristic() == 0)
    throw std::invalid_argument("velu: kernel order divisible by the characteristic");

  std::vector<Isogeny::Term> terms;
  FieldElem v = F->zero(), w = F->zero();
  for (const auto& Q : D) {
    if (Q.is_infinity()) continue;
    const bool two_torsion = Q.y().is_zero();
    // one representative per {Q, -Q}
    if (!two_torsion && (-Q) < Q) continue;
    FieldElem gx = Q.x() * Q.x() * 3 + E.a();
    FieldElem gy = -(Q.y() * 2);
    FieldElem vq = two_torsion ? gx : gx * 2;
    FieldElem uq = gy * gy;
    v += vq;
    w += uq + Q.x() * vq;
    terms.push_back({Q.x(), vq, uq});
  }
  Isogeny phi(E, Curve(E.a() - v * 5, E.b() - w * 7));
  phi.kernel_ = D;
  phi.terms_ = terms;
  phi.scale_ = F->one();

  // X = x + sum v_Q/(x - x_Q) + u_Q/(x - x_Q)^2 over a common denominator.
  FieldPoly den = FieldPoly::constant(F->one());
  for (const auto& t : terms) den = den * FieldPoly::x_minus(t.x) * FieldPoly::x_minus(t.x);
  FieldPoly num = FieldPoly(F, {F->zero(), F->one()}) * den;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    FieldPoly rest = FieldPoly::constant(F->one());
    for (std::size_t j = 0; j < terms.size(); ++j)
      if (j != i) rest = rest * FieldPoly::x_minus(terms[j].x) * FieldPoly::x_minus(terms[j].x);
    FieldPoly part = FieldPoly::x_minus(terms[i].x) * terms[i].v + FieldPoly::constant(terms[i].u);
    num = num + part * rest;
  }
  phi.x_num_ = num;
  phi.x_den_ = den;
  return phi;
}

CurvePoint Isogeny::operator()(const CurvePoint& P) const {
  if (!P.curve().same_as(domain_)) throw std::invalid_argument("isogeny: point not on the domain");
  if (P.is_infinity() || std::binary_search(kernel_.begin(), kernel_.end(), P)) return codomain_.infinity();
  const FieldPtr& F = domain_.field();
  FieldElem X = P.x(), dX = F->one();
  for (const auto& t : terms_) {
    FieldElem r = (P.x() - t.x).inverse();
    FieldElem r2 = r * r;
    X += t.v * r + t.u * r2;
    dX -= t.v * r2 + t.u * r2 * r * 2;
  }
  FieldElem Y = P.y() * dX;
  FieldElem u2 = scale_ * scale_;
  return codomain_.point(X * u2, Y * u2 * scale_);
}

Isogeny Isogeny::followed_by_scaling(const FieldElem& u) const {
  if (u.is_zero()) throw std::invalid_argument("isogeny: zero scaling");
  FieldElem total = scale_ * u;
  FieldElem t2 = total * total;
  Isogeny out = *this;
  // codomain is the unscaled Velu curve twisted by the accumulated scale
  FieldElem a0 = codomain_.a() / (scale_.pow(4)), b0 = codomain_.b() / (scale_.pow(6));
  out.codomain_ = Curve(a0 * t2 * t2, b0 * t2 * t2 * t2);
  out.scale_ = total;
  return out;
}

std::vector<FieldElem> isomorphism_scalars(const Curve& from, const Curve& to) {
  std::vector<FieldElem> out;
  for (const auto& u : from.field()->elements()) {
    if (u.is_zero()) continue;
    FieldElem u2 = u * u;
    FieldElem u4 = u2 * u2;
    if (from.a() * u4 == to.a() && from.b() * u4 * u2 == to.b()) out.push_back(u);
  }
  return out;
}

Isogeny dual_isogeny(const Isogeny& phi) {
  const Int n = phi.degree();
  const Curve& E = phi.domain();
  auto torsion = E.torsion(n);
  if (static_cast<Int>(torsion.size()) != n * n)
    throw std::invalid_argument("dual_isogeny: E[deg] is not rational over the base field");
  std::vector<CurvePoint> image;
  for (const auto& T : torsion) image.push_back(phi(T));
  Isogeny psi = velu_quotient(phi.codomain(), image);

  std::vector<CurvePoint> samples;
  for (const auto& P : E.points()) {
    CurvePoint nP = P.multiple(n);
    if (!nP.is_infinity()) samples.push_back(P);
    if (samples.size() == 2) break;
  }
  for (const auto& u : isomorphism_scalars(psi.codomain(), E)) {
    Isogeny candidate = psi.followed_by_scaling(u);
    bool ok = std::all_of(samples.begin(), samples.end(),
                          [&](const CurvePoint& P) { return candidate(phi(P)) == P.multiple(n); });
    if (ok) return candidate;
  }
  throw std::runtime_error("dual_isogeny: no isomorphism matches multiplication by the degree");
}

}  // namespace moduli
