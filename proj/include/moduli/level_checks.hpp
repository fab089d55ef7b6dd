#pragma once

#include "moduli/curve.hpp"

#include <vector>

namespace moduli {

bool exact_order_check(const CurvePoint& P, Int N);
// Gamma_1(N)-structure on a smooth curve with gcd(N, p) = 1.
bool gamma1_check(const Curve& E, const CurvePoint& P, Int N);
// Gamma_0(N)-structure: D is a cyclic subgroup of order N, gcd(N, p) = 1.
bool gamma0_check(const Curve& E, const std::vector<CurvePoint>& D, Int N);

bool ordinary_check(const Curve& E);

struct AbLabel {
  int a = 0;
  int b = 0;
  friend bool operator==(const AbLabel&, const AbLabel&) = default;
};

// (a, b) with p^b the exact order of P and a = n - b. E must be ordinary.
AbLabel char_p_component_label(const Curve& E, const CurvePoint& P, int n);

struct LevelRaiseResult {
  AbLabel at_level;
  AbLabel at_next_level;
  bool shifted() const { return at_next_level.a == at_level.a + 1 && at_next_level.b == at_level.b; }
};
LevelRaiseResult level_raise_check(const Curve& E, const CurvePoint& P, int n);

// Subgroups counted by brute force on E(F_q).
Int count_gamma1_structures(const Curve& E, Int N);
Int count_gamma0_structures(const Curve& E, Int N);
// Rational points of exact order p^b.
Int count_exact_order(const Curve& E, Int order);

}  // namespace moduli
