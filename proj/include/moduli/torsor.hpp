#pragma once

#include "moduli/curve.hpp"

#include <optional>
#include <string>
#include <vector>

namespace moduli {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  std::vector<std::string> witnesses;
};

struct TorsorReport {
  Int N = 1;
  std::vector<std::string> precondition_failures;
  std::vector<CheckResult> checks;
  bool preconditions_met() const { return precondition_failures.empty(); }
  bool passed() const;
};

struct TorsorOptions {
  // Pairs against this point instead of Q (negative control).
  std::optional<CurvePoint> pairing_partner;
};

// Checks on E(F_q), with D = <Q>, phi: E -> E/D and psi: E/D -> E/E[N]:
//   pairing_bijection: T -> e_N(Q, T) descends to a bijection E[N]/D -> mu_N;
//   torsor_action: mu_N acting through phi(E[N]) is well defined, free and
//     transitive on each fibre of psi;
//   dual_kills_Q: phi(Q) = O and psi o phi = [N] up to isomorphism.
TorsorReport verify_quotient_torsor(const Curve& E, const CurvePoint& Q, Int N, const TorsorOptions& options = {});

}  // namespace moduli
