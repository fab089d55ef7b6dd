#include "moduli/torsor.hpp"

#include "moduli/isogeny.hpp"
#include "moduli/level_checks.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace moduli {

bool TorsorReport::passed() const {
  return preconditions_met() &&
         std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

TorsorReport verify_quotient_torsor(const Curve& E, const CurvePoint& Q, Int N, const TorsorOptions& options) {
  TorsorReport report;
  report.N = N;
  const FieldPtr& F = E.field();
  if (N < 1) {
    report.precondition_failures.push_back("N must be positive");
    return report;
  }
  if (std::gcd(N, F->characteristic()) != 1) report.precondition_failures.push_back("N is divisible by the characteristic");
  if (!Q.curve().same_as(E)) report.precondition_failures.push_back("Q is not on E");
  if (!report.precondition_failures.empty()) return report;
  if (!exact_order_check(Q, N)) report.precondition_failures.push_back("Q does not have exact order N");
  const auto torsion = E.torsion(N);
  if (static_cast<Int>(torsion.size()) != N * N) report.precondition_failures.push_back("E[N] is not rational");
  const auto mu = F->roots_of_unity(N);
  if (static_cast<Int>(mu.size()) != N) report.precondition_failures.push_back("mu_N is not rational");
  const CurvePoint partner = options.pairing_partner.value_or(Q);
  if (!partner.curve().same_as(E) || !partner.multiple(N).is_infinity())
    report.precondition_failures.push_back("pairing partner is not in E[N]");
  if (!report.precondition_failures.empty()) return report;

  const auto D = generated_subgroup(Q);
  std::map<CurvePoint, FieldElem> pairing;
  for (const auto& T : torsion) pairing.emplace(T, weil_pairing(partner, T, N));

  // (i)
  {
    CheckResult c{"pairing_bijection", true, "", {}};
    std::map<FieldElem, CurvePoint> by_value;
    std::set<CurvePoint> seen_cosets;
    for (const auto& T : torsion) {
      for (const auto& d : D) {
        const auto& lhs = pairing.at(T);
        const auto& rhs = pairing.at(T + d);
        if (lhs != rhs) {
          c.passed = false;
          c.witnesses.push_back("e(Q," + T.to_string() + ") != e(Q," + (T + d).to_string() + ")");
          break;
        }
      }
      if (!c.passed) break;
      by_value.emplace(pairing.at(T), T);
    }
    if (c.passed && static_cast<Int>(by_value.size()) != N) {
      c.passed = false;
      c.witnesses.push_back("image has " + std::to_string(by_value.size()) + " values");
    }
    c.detail = c.passed ? "E[N]/D -> mu_N is well defined and bijective" : "pairing does not descend to a bijection";
    report.checks.push_back(std::move(c));
  }

  const Isogeny phi = velu_quotient(E, D);
  const Curve& Ep = phi.codomain();
  std::vector<CurvePoint> image;
  for (const auto& T : torsion) image.push_back(phi(T));
  const Isogeny psi = velu_quotient(Ep, image);

  // (ii)
  {
    CheckResult c{"torsor_action", true, "", {}};
    std::map<FieldElem, CurvePoint> translation;
    for (const auto& T : torsion) {
      const auto& zeta = pairing.at(T);
      CurvePoint t = phi(T);
      auto [it, inserted] = translation.emplace(zeta, t);
      if (!inserted && !(it->second == t)) {
        c.passed = false;
        c.witnesses.push_back("zeta=" + zeta.to_string() + " translates by both " + it->second.to_string() + " and " +
                              t.to_string());
        break;
      }
    }
    if (c.passed && static_cast<Int>(translation.size()) != N) {
      c.passed = false;
      c.witnesses.push_back("only " + std::to_string(translation.size()) + " roots of unity act");
    }
    if (c.passed) {
      for (const auto& z1 : mu)
        for (const auto& z2 : mu)
          if (!(translation.at(z1) + translation.at(z2) == translation.at(z1 * z2))) {
            c.passed = false;
            c.witnesses.push_back("action is not a homomorphism at " + z1.to_string() + "," + z2.to_string());
          }
    }
    if (c.passed) {
      std::map<CurvePoint, std::set<CurvePoint>> fibres;
      for (const auto& x : Ep.points()) fibres[psi(x)].insert(x);
      for (const auto& [base, fibre] : fibres) {
        for (const auto& x : fibre) {
          std::set<CurvePoint> orbit;
          for (const auto& z : mu) orbit.insert(x + translation.at(z));
          if (orbit != fibre || static_cast<Int>(orbit.size()) != N) {
            c.passed = false;
            c.witnesses.push_back("orbit of " + x.to_string() + " is not its fibre");
            break;
          }
        }
        if (!c.passed) break;
      }
      c.detail = c.passed ? "free and transitive on " + std::to_string(fibres.size()) + " fibres" : "";
    }
    if (!c.passed && c.detail.empty()) c.detail = "translation action is not a mu_N-torsor structure";
    report.checks.push_back(std::move(c));
  }

  // (iii)
  {
    CheckResult c{"dual_kills_Q", true, "", {}};
    if (!phi(Q).is_infinity()) {
      c.passed = false;
      c.witnesses.push_back("phi(Q) = " + phi(Q).to_string());
    }
    auto scalars = isomorphism_scalars(psi.codomain(), E);
    bool composite = false;
    for (const auto& u : scalars) {
      Isogeny psi_u = psi.followed_by_scaling(u);
      bool all = true;
      for (const auto& P : E.points())
        if (!(psi_u(phi(P)) == P.multiple(N))) {
          all = false;
          break;
        }
      if (all) {
        composite = true;
        break;
      }
    }
    if (!composite) {
      c.passed = false;
      c.witnesses.push_back("no isomorphism E/E[N] -> E makes psi o phi = [N]");
    }
    c.detail = c.passed ? "phi(Q) = O and psi o phi = [N]" : "quotient/dual identity fails";
    report.checks.push_back(std::move(c));
  }
  return report;
}

}  // namespace moduli
