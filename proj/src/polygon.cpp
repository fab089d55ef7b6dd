#include "moduli/polygon.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace moduli {

PolygonPicard::PolygonPicard(FieldPtr field, Int d) : field_(std::move(field)), d_(d) {
  if (!field_) throw std::invalid_argument("polygon: missing field");
  if (d < 1) throw std::invalid_argument("polygon: stacky index must be positive");
}

PicardElement PolygonPicard::element(const FieldElem& unit, Int component) const {
  if (unit.is_zero()) throw std::invalid_argument("polygon: unit coordinate must be nonzero");
  return {unit, mod(component, d_)};
}

PicardElement PolygonPicard::identity() const { return {field_->one(), 0}; }

PicardElement PolygonPicard::add(const PicardElement& x, const PicardElement& y) const {
  return {x.unit * y.unit, mod(x.component + y.component, d_)};
}

PicardElement PolygonPicard::negate(const PicardElement& x) const { return {x.unit.inverse(), mod(-x.component, d_)}; }

PicardElement PolygonPicard::multiple(const PicardElement& x, Int m) const {
  return {x.unit.pow(m), mod(x.component * m, d_)};
}

std::vector<PicardElement> PolygonPicard::elements() const {
  std::vector<PicardElement> out;
  for (const auto& u : field_->elements())
    if (!u.is_zero())
      for (Int c = 0; c < d_; ++c) out.push_back({u, c});
  return out;
}

std::vector<PicardElement> PolygonPicard::torsion(Int N) const {
  std::vector<PicardElement> out;
  for (const auto& x : elements())
    if (multiple(x, N) == identity()) out.push_back(x);
  return out;
}

Int PolygonPicard::expected_torsion_order(Int N) const {
  return static_cast<Int>(field_->roots_of_unity(N).size()) * std::gcd(N, d_);
}

bool is_full_coset_divisor(const std::vector<FieldElem>& units) {
  if (units.empty()) return false;
  const FieldPtr& F = units.front().field();
  const FieldElem base = units.front();
  FieldPoly prod = FieldPoly::constant(F->one());
  for (const auto& u : units) prod = prod * FieldPoly::x_minus(u / base);
  std::vector<FieldElem> target(units.size() + 1, F->zero());
  target.front() = -F->one();
  target.back() = F->one();
  return prod == FieldPoly(F, target);
}

namespace {

// Splits the multiset of unit coordinates by component and tests each fibre.
std::vector<ComponentFibre> fibres_of(const PolygonPicard& M, const std::vector<PicardElement>& divisor) {
  std::map<Int, std::vector<FieldElem>> by_component;
  for (const auto& x : divisor) by_component[x.component].push_back(x.unit);
  std::vector<ComponentFibre> out;
  for (Int c = 0; c < M.stacky_index(); ++c) {
    auto it = by_component.find(c);
    std::vector<FieldElem> units = it == by_component.end() ? std::vector<FieldElem>{} : it->second;
    std::sort(units.begin(), units.end());
    bool ok = !units.empty() && is_full_coset_divisor(units);
    if (ok && c == 0) ok = std::all_of(units.begin(), units.end(), [&](const FieldElem& u) { return u.pow(static_cast<Int>(units.size())).is_one(); });
    out.push_back({c, std::move(units), ok});
  }
  return out;
}

bool wild_level(const PolygonPicard& M, Int N) {
  const Int p = M.field()->characteristic();
  return N % (p * p) == 0;
}

}  // namespace

PolygonReport polygon_gamma1_report(const PolygonPicard& M, const PicardElement& phi1, Int N) {
  PolygonReport r{"gamma1", N, M.stacky_index(), false, false, {}, {}};
  if (N < 1) throw std::invalid_argument("polygon: level must be positive");
  const Int d = M.stacky_index();
  if (N % d != 0) {
    r.reasons.push_back("d does not divide N");
    return r;
  }
  if (!M.multiple(phi1, N).unit.is_one()) r.reasons.push_back("zeta^N != 1");
  std::vector<PicardElement> divisor;
  for (Int m = 0; m < N; ++m) divisor.push_back(M.multiple(phi1, m));
  r.fibres = fibres_of(M, divisor);
  for (const auto& f : r.fibres) {
    if (f.units.empty()) r.reasons.push_back("component " + std::to_string(f.component) + " is missed");
    else if (!f.identity_holds)
      r.reasons.push_back("component " + std::to_string(f.component) + " is not a full coset of mu_" +
                          std::to_string(N / d));
  }
  r.ambiguous = wild_level(M, N);
  r.passed = r.reasons.empty();
  return r;
}

PolygonReport polygon_gamma_report(const PolygonPicard& M, const PicardElement& e1, const PicardElement& e2, Int N) {
  PolygonReport r{"gamma", N, M.stacky_index(), false, false, {}, {}};
  if (N < 1) throw std::invalid_argument("polygon: level must be positive");
  if (M.stacky_index() != N) {
    r.reasons.push_back("d != N");
    return r;
  }
  for (const auto& e : {e1, e2})
    if (!(M.multiple(e, N) == M.identity())) r.reasons.push_back("generator not killed by N");
  std::vector<PicardElement> divisor;
  for (Int m1 = 0; m1 < N; ++m1)
    for (Int m2 = 0; m2 < N; ++m2) divisor.push_back(M.add(M.multiple(e1, m1), M.multiple(e2, m2)));
  r.fibres = fibres_of(M, divisor);
  for (const auto& f : r.fibres) {
    if (f.units.empty()) r.reasons.push_back("component " + std::to_string(f.component) + " is missed");
    else if (static_cast<Int>(f.units.size()) != N || !f.identity_holds)
      r.reasons.push_back("component " + std::to_string(f.component) + " is not a full coset of mu_" + std::to_string(N));
  }
  r.ambiguous = wild_level(M, N);
  r.passed = r.reasons.empty();
  return r;
}

bool polygon_gamma1_check(const PolygonPicard& M, const PicardElement& phi1, Int N) {
  return polygon_gamma1_report(M, phi1, N).passed;
}

bool polygon_gamma_check(const PolygonPicard& M, const PicardElement& e1, const PicardElement& e2, Int N) {
  return polygon_gamma_report(M, e1, e2, N).passed;
}

TorsorClassTable torsor_class_decomposition(Int d, Int N, const FieldPtr& field) {
  if (d < 1 || N < 1 || N % d != 0) throw std::invalid_argument("torsor classes: d must divide N");
  TorsorClassTable t{d, N, {}};
  for (const auto& z : field->roots_of_unity(N))
    for (Int a = 0; a < d; ++a) t.rows.push_back({z, a, std::gcd(a, d) == 1});
  return t;
}

}  // namespace moduli
