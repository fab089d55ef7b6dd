#pragma once

#include "moduli/curve.hpp"

#include <optional>
#include <vector>

namespace moduli {

// Separable isogeny E -> E' from Velu's formulas, optionally followed by
// the isomorphism (X, Y) -> (u^2 X, u^3 Y).
class Isogeny {
 public:
  const Curve& domain() const { return domain_; }
  const Curve& codomain() const { return codomain_; }
  const std::vector<CurvePoint>& kernel() const { return kernel_; }
  Int degree() const { return static_cast<Int>(kernel_.size()); }

  // X = x_numerator / x_denominator before the scaling.
  const FieldPoly& x_numerator() const { return x_num_; }
  const FieldPoly& x_denominator() const { return x_den_; }
  const FieldElem& scale() const { return scale_; }

  CurvePoint operator()(const CurvePoint& P) const;
  Isogeny followed_by_scaling(const FieldElem& u) const;

  friend Isogeny velu_quotient(const Curve& E, const std::vector<CurvePoint>& kernel);

 private:
  struct Term {
    FieldElem x;
    FieldElem v;
    FieldElem u;
  };
  Isogeny(Curve domain, Curve codomain) : domain_(std::move(domain)), codomain_(std::move(codomain)) {}

  Curve domain_;
  Curve codomain_;
  std::vector<CurvePoint> kernel_;
  std::vector<Term> terms_;
  FieldPoly x_num_{nullptr};
  FieldPoly x_den_{nullptr};
  FieldElem scale_;
};

// Kernel must be a finite subgroup of rational points of order prime to p.
Isogeny velu_quotient(const Curve& E, const std::vector<CurvePoint>& kernel);

bool is_subgroup(const std::vector<CurvePoint>& points);
std::vector<CurvePoint> generated_subgroup(const CurvePoint& P);

// u with (x, y) -> (u^2 x, u^3 y) carrying `from` onto `to`, sorted.
std::vector<FieldElem> isomorphism_scalars(const Curve& from, const Curve& to);

// Dual of phi; needs E[deg phi] rational over the base field.
Isogeny dual_isogeny(const Isogeny& phi);

}  // namespace moduli
