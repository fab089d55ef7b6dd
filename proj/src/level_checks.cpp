#include "moduli/level_checks.hpp"

#include "moduli/isogeny.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace moduli {

namespace {

void require_prime_to_p(const Curve& E, Int N) {
  if (N < 1) throw std::invalid_argument("level must be positive");
  if (std::gcd(N, E.field()->characteristic()) != 1)
    throw std::invalid_argument("level must be prime to the characteristic");
}

}  // namespace

bool exact_order_check(const CurvePoint& P, Int N) {
  if (N < 1) throw std::invalid_argument("level must be positive");
  if (!P.multiple(N).is_infinity()) return false;
  return P.order(N) == N;
}

bool gamma1_check(const Curve& E, const CurvePoint& P, Int N) {
  require_prime_to_p(E, N);
  if (!P.curve().same_as(E)) throw std::invalid_argument("gamma1_check: point on a different curve");
  return exact_order_check(P, N);
}

bool gamma0_check(const Curve& E, const std::vector<CurvePoint>& D, Int N) {
  require_prime_to_p(E, N);
  std::vector<CurvePoint> pts(D);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (static_cast<Int>(pts.size()) != N) return false;
  for (const auto& P : pts)
    if (!P.curve().same_as(E)) return false;
  if (!is_subgroup(pts)) return false;
  return std::any_of(pts.begin(), pts.end(), [&](const CurvePoint& P) { return P.order(N) == N; });
}

bool ordinary_check(const Curve& E) { return mod(E.frobenius_trace(), E.field()->characteristic()) != 0; }

AbLabel char_p_component_label(const Curve& E, const CurvePoint& P, int n) {
  if (!ordinary_check(E)) throw std::domain_error("component label: curve is supersingular");
  if (n < 0) throw std::invalid_argument("component label: exponent must be non-negative");
  const Int p = E.field()->characteristic();
  const Int pn = ipow(p, static_cast<unsigned>(n));
  if (!P.multiple(pn).is_infinity()) throw std::invalid_argument("component label: P is not killed by p^n");
  const int b = valuation(P.order(pn), p);
  return {n - b, b};
}

LevelRaiseResult level_raise_check(const Curve& E, const CurvePoint& P, int n) {
  return {char_p_component_label(E, P, n), char_p_component_label(E, P, n + 1)};
}

Int count_gamma1_structures(const Curve& E, Int N) {
  require_prime_to_p(E, N);
  Int count = 0;
  for (const auto& P : E.torsion(N))
    if (gamma1_check(E, P, N)) ++count;
  return count;
}

Int count_gamma0_structures(const Curve& E, Int N) {
  require_prime_to_p(E, N);
  std::set<std::vector<CurvePoint>> seen;
  for (const auto& P : E.torsion(N)) {
    if (P.order(N) != N) continue;
    auto D = generated_subgroup(P);
    if (gamma0_check(E, D, N)) seen.insert(D);
  }
  return static_cast<Int>(seen.size());
}

Int count_exact_order(const Curve& E, Int order) {
  Int count = 0;
  for (const auto& P : E.torsion(order))
    if (P.order(order) == order) ++count;
  return count;
}

}  // namespace moduli
