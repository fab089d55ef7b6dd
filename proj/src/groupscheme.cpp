#include "moduli/groupscheme.hpp"

#include "moduli/fp_poly.hpp"
#include "moduli/parallel.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace moduli {

void GroupSchemeProfile::add(FactorKind kind, Int order) {
  if (order < 1) throw std::invalid_argument("profile: factor order must be positive");
  if (kind == FactorKind::EtalePrimeToP) {
    if (std::gcd(order, p_) != 1) throw std::invalid_argument("profile: EtPrime order must be prime to p");
  } else if (!is_power_of(order, p_)) {
    throw std::invalid_argument("profile: Mu/Et order must be a power of p");
  }
  factors_.push_back({kind, order});
  std::sort(factors_.begin(), factors_.end());
}

GroupSchemeProfile& GroupSchemeProfile::mu(Int order) {
  add(FactorKind::Multiplicative, order);
  return *this;
}
GroupSchemeProfile& GroupSchemeProfile::etale(Int order) {
  add(FactorKind::Etale, order);
  return *this;
}
GroupSchemeProfile& GroupSchemeProfile::etale_prime_to_p(Int order) {
  add(FactorKind::EtalePrimeToP, order);
  return *this;
}

Int GroupSchemeProfile::rank() const {
  Int r = 1;
  for (const auto& f : factors_) r *= f.order;
  return r;
}

GroupSchemeProfile GroupSchemeProfile::cartier_dual() const {
  GroupSchemeProfile dual(p_);
  for (const auto& f : factors_) {
    switch (f.kind) {
      case FactorKind::Multiplicative: dual.etale(f.order); break;
      case FactorKind::Etale: dual.mu(f.order); break;
      case FactorKind::EtalePrimeToP: dual.etale_prime_to_p(f.order); break;
    }
  }
  return dual;
}

std::string GroupSchemeProfile::to_string() const {
  if (factors_.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) os << " x ";
    switch (factors_[i].kind) {
      case FactorKind::Multiplicative: os << "Mu(" << factors_[i].order << ')'; break;
      case FactorKind::Etale: os << "Et(" << factors_[i].order << ')'; break;
      case FactorKind::EtalePrimeToP: os << "EtPrime(" << factors_[i].order << ')'; break;
    }
  }
  return os.str();
}

Int hom_rank(Int d, const GroupSchemeProfile& G) {
  if (d < 1) throw std::invalid_argument("hom_rank: order must be positive");
  const Int p = G.characteristic();
  const int vd = valuation(d, p);
  Int r = 1;
  for (const auto& f : G.factors()) {
    if (f.kind == FactorKind::EtalePrimeToP) {
      r *= std::gcd(f.order, d);
    } else {
      r *= ipow(p, static_cast<unsigned>(std::min(valuation(f.order, p), vd)));
    }
  }
  return r;
}

Int hom_rank(const std::vector<Int>& cyclic_orders, const GroupSchemeProfile& G) {
  Int r = 1;
  for (Int d : cyclic_orders) r *= hom_rank(d, G);
  return r;
}

Int fss_generator_rank_oracle(Int p, int a, int e) {
  if (!is_prime(p)) throw std::invalid_argument("fss oracle: p must be prime");
  if (a < 0 || e < 0) throw std::invalid_argument("fss oracle: exponents must be non-negative");
  const Int M = ipow(p, static_cast<unsigned>(a + e));
  require_within_rank(M, "p^(a+e)");
  const Int pe = ipow(p, static_cast<unsigned>(e));
  const Int pa = ipow(p, static_cast<unsigned>(a));
  FpPolyRing R(p, M);

  // Coefficients in T of prod_j (T - zeta^{p^e j}), lowest degree first.
  std::vector<FpVector> poly{R.constant(1)};
  for (Int j = 0; j < pa; ++j) {
    std::vector<FpVector> next(poly.size() + 1, R.zero());
    for (std::size_t k = 0; k < poly.size(); ++k) {
      next[k + 1] = R.add(next[k + 1], poly[k]);
      next[k] = R.sub(next[k], R.shift(poly[k], pe * j));
    }
    poly = std::move(next);
  }
  poly[static_cast<std::size_t>(pa)] = R.sub(poly[static_cast<std::size_t>(pa)], R.constant(1));
  poly[0] = R.add(poly[0], R.constant(1));
  return R.quotient_dimension(poly);
}

std::string to_string(StructureKind kind) {
  switch (kind) {
    case StructureKind::Gamma1: return "gamma1";
    case StructureKind::GammaFull: return "gamma";
    case StructureKind::GK: return "gK";
  }
  return "unknown";
}

Int DrinfeldLocus::total() const {
  Int t = 0;
  for (const auto& s : strata) t += s.rank;
  return t;
}

bool DrinfeldLocus::oracle_checked() const {
  return !strata.empty() &&
         std::all_of(strata.begin(), strata.end(), [](const Stratum& s) { return s.oracle_connected_factor.has_value(); });
}

bool DrinfeldLocus::oracle_agrees() const {
  return std::all_of(strata.begin(), strata.end(), [](const Stratum& s) { return s.oracle_agrees(); });
}

namespace {

Int phi_prime_power(Int p, int e) { return e == 0 ? 1 : totient(ipow(p, static_cast<unsigned>(e))); }

void run_oracle(std::vector<Stratum>& strata, const std::vector<std::pair<int, int>>& exponents, Int p,
                const OracleOptions& oracle) {
  if (!oracle.enabled) return;
  auto values = parallel_map(strata.size(), oracle.jobs, [&](std::size_t i) {
    return fss_generator_rank_oracle(p, exponents[i].first, exponents[i].second);
  });
  for (std::size_t i = 0; i < strata.size(); ++i) strata[i].oracle_connected_factor = values[i];
}

}  // namespace

Int gamma1_stratum_rank(Int p, int a, int b) {
  return phi_prime_power(p, b) * ipow(p, static_cast<unsigned>(b)) * phi_prime_power(p, a);
}

DrinfeldLocus gamma1_components(Int p, int n, const OracleOptions& oracle) {
  if (!is_prime(p)) throw std::invalid_argument("gamma1_components: p must be prime");
  if (n < 0) throw std::invalid_argument("gamma1_components: exponent must be non-negative");
  const Int N = ipow(p, static_cast<unsigned>(n));
  require_within_rank(N, "p^n");
  GroupSchemeProfile base(p);
  if (n > 0) base.mu(N).etale(N);
  DrinfeldLocus locus{base, StructureKind::Gamma1, N, std::nullopt, {}};
  std::vector<std::pair<int, int>> exponents;
  for (int b = 0; b <= n; ++b) {
    const int a = n - b;
    Stratum s;
    s.id = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    s.a = a;
    s.b = b;
    s.etale_factor = phi_prime_power(p, b);
    s.connected_factor = ipow(p, static_cast<unsigned>(b)) * phi_prime_power(p, a);
    s.rank = s.etale_factor * s.connected_factor;
    locus.strata.push_back(std::move(s));
    exponents.emplace_back(a, b);
  }
  run_oracle(locus.strata, exponents, p, oracle);
  return locus;
}

Int ZComponent::rank() const {
  Int r = 0;
  for (const auto& m : members) r += m.rank;
  return r;
}

Int H1Decomposition::total() const {
  Int t = 0;
  for (const auto& z : components) t += z.rank();
  return t;
}

H1Decomposition h1_decomposition(Int p, int n) {
  H1Decomposition out{p, n, {}, {}};
  for (int m = 0; m <= n; ++m) out.levels.push_back(gamma1_components(p, m));
  for (int b = 0; b <= n; ++b) {
    ZComponent z{b, {}};
    for (int m = b; m <= n; ++m) {
      const auto& s = out.levels[static_cast<std::size_t>(m)].strata[static_cast<std::size_t>(b)];
      z.members.push_back({m, s.a, s.b, s.rank});
    }
    out.components.push_back(std::move(z));
  }
  return out;
}

DrinfeldLocus gK_components(const Subgroup& K, Int p, const OracleOptions& oracle) {
  if (!is_prime(p)) throw std::invalid_argument("gK_components: p must be prime");
  const Int order = K.index();
  if (!is_power_of(order, p)) throw std::invalid_argument("gK_components: G_K is not a p-group");
  const QuotientType type = K.quotient_type();
  require_within_rank(type.n1, "exponent of G_K");

  GroupSchemeProfile base(p);
  if (type.n1 > 1) base.mu(type.n1).etale(type.n1);
  if (type.n2 > 1) base.mu(type.n2).etale(type.n2);
  DrinfeldLocus locus{base, StructureKind::GK, K.modulus(), K, {}};
  std::vector<std::pair<int, int>> exponents;
  for (const auto& H : label_set(K, p)) {
    const int h = H.h_exponent(), c = H.c_exponent();
    Stratum s;
    s.id = H.to_string();
    s.label = H;
    s.etale_factor = phi_prime_power(p, c);
    s.connected_factor = phi_prime_power(p, h) * ipow(p, static_cast<unsigned>(c));
    s.rank = s.etale_factor * s.connected_factor;
    locus.strata.push_back(std::move(s));
    exponents.emplace_back(h, c);
  }
  run_oracle(locus.strata, exponents, p, oracle);
  return locus;
}

HTotal h_total(Int p, int n) {
  HTotal out{p, n, {}, 0};
  const Int N = ipow(p, static_cast<unsigned>(n));
  std::map<std::pair<Subgroup, Subgroup>, Int> ranks;
  for (const auto& K : enumerate_subgroups(N)) {
    for (const auto& s : gK_components(K, p).strata) ranks[{K, s.label->preimage()}] = s.rank;
  }
  for (auto& cls : lambda_classes(p, n)) {
    LambdaRow row;
    Int length = 0;
    std::optional<Int> degree;
    bool uniform = true;
    for (const auto& member : cls.members) {
      Int r = ranks.at({member.parent(), member.preimage()});
      row.member_ranks.push_back(r);
      row.rank += r;
      length += phi_prime_power(p, member.h_exponent());
      Int deg = phi_prime_power(p, member.c_exponent()) * ipow(p, static_cast<unsigned>(member.c_exponent()));
      if (degree && *degree != deg) uniform = false;
      degree = deg;
    }
    if (n <= 1 && uniform) {
      row.length = length;
      row.reduced_degree = degree;
    }
    row.cls = std::move(cls);
    out.total += row.rank;
    out.rows.push_back(std::move(row));
  }
  return out;
}

}  // namespace moduli
