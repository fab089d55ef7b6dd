#pragma once

#include "moduli/field.hpp"

#include <string>
#include <vector>

namespace moduli {

struct PicardElement {
  FieldElem unit;
  Int component = 0;
  friend bool operator==(const PicardElement& x, const PicardElement& y) {
    return x.unit == y.unit && x.component == y.component;
  }
  friend bool operator<(const PicardElement& x, const PicardElement& y) {
    if (x.unit != y.unit) return x.unit < y.unit;
    return x.component < y.component;
  }
};

// Pic^0 of the mu_d-stacky Neron 1-gon over F_q: F_q^* x Z/d.
class PolygonPicard {
 public:
  PolygonPicard(FieldPtr field, Int d);

  const FieldPtr& field() const { return field_; }
  Int stacky_index() const { return d_; }

  PicardElement element(const FieldElem& unit, Int component) const;
  PicardElement identity() const;
  PicardElement add(const PicardElement& x, const PicardElement& y) const;
  PicardElement negate(const PicardElement& x) const;
  PicardElement multiple(const PicardElement& x, Int m) const;
  std::vector<PicardElement> elements() const;
  std::vector<PicardElement> torsion(Int N) const;
  Int expected_torsion_order(Int N) const;

 private:
  FieldPtr field_;
  Int d_;
};

// The multiset `units` equals c * mu_k (as a divisor) for some c, tested by
// prod (T - u / u_0) = T^k - 1 in F_q[T].
bool is_full_coset_divisor(const std::vector<FieldElem>& units);

struct ComponentFibre {
  Int component;
  std::vector<FieldElem> units;
  bool identity_holds;
};

struct PolygonReport {
  std::string check;
  Int N = 0;
  Int d = 0;
  bool passed = false;
  // Set when p | N with p^2 | N: the coset step relies on the per-component identity alone.
  bool ambiguous = false;
  std::vector<std::string> reasons;
  std::vector<ComponentFibre> fibres;
};

PolygonReport polygon_gamma1_report(const PolygonPicard& M, const PicardElement& phi1, Int N);
PolygonReport polygon_gamma_report(const PolygonPicard& M, const PicardElement& e1, const PicardElement& e2, Int N);
bool polygon_gamma1_check(const PolygonPicard& M, const PicardElement& phi1, Int N);
bool polygon_gamma_check(const PolygonPicard& M, const PicardElement& e1, const PicardElement& e2, Int N);

struct TorsorClassRow {
  FieldElem zeta;
  Int component;
  bool generates_components;
};

struct TorsorClassTable {
  Int d;
  Int N;
  std::vector<TorsorClassRow> rows;
  Int order() const { return static_cast<Int>(rows.size()); }
};

// mu_N(F) x Z/d with the component-generator flag on the second factor.
TorsorClassTable torsor_class_decomposition(Int d, Int N, const FieldPtr& field);

}  // namespace moduli
