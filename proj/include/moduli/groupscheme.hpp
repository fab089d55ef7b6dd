#pragma once

#include "moduli/arith.hpp"
#include "moduli/lattice.hpp"

#include <optional>
#include <string>
#include <vector>

namespace moduli {

enum class FactorKind { Multiplicative, Etale, EtalePrimeToP };

struct GroupSchemeFactor {
  FactorKind kind;
  Int order;
  friend auto operator<=>(const GroupSchemeFactor&, const GroupSchemeFactor&) = default;
};

// Product of mu_{p^a}, Z/p^b and prime-to-p constant factors over an ordinary base.
class GroupSchemeProfile {
 public:
  explicit GroupSchemeProfile(Int p) : p_(p) {
    if (!is_prime(p)) throw std::invalid_argument("profile: p must be prime");
  }
  GroupSchemeProfile& mu(Int order);
  GroupSchemeProfile& etale(Int order);
  GroupSchemeProfile& etale_prime_to_p(Int order);

  Int characteristic() const { return p_; }
  const std::vector<GroupSchemeFactor>& factors() const { return factors_; }
  Int rank() const;
  GroupSchemeProfile cartier_dual() const;
  std::string to_string() const;

  friend bool operator==(const GroupSchemeProfile&, const GroupSchemeProfile&) = default;

 private:
  void add(FactorKind kind, Int order);
  Int p_;
  std::vector<GroupSchemeFactor> factors_;
};

// Rank of Hom(Z/d, G), and of Hom(Z/d_1 x ... x Z/d_r, G).
Int hom_rank(Int d, const GroupSchemeProfile& G);
Int hom_rank(const std::vector<Int>& cyclic_orders, const GroupSchemeProfile& G);

// Rank of the locus of zeta in mu_{p^{a+e}} with zeta^{p^e} a full set of sections of mu_{p^a},
// computed as dim R / I in R = F_p[zeta]/(zeta^{p^{a+e}} - 1).
Int fss_generator_rank_oracle(Int p, int a, int e);

enum class StructureKind { Gamma1, GammaFull, GK };
std::string to_string(StructureKind kind);

struct Stratum {
  std::string id;
  // (a, b) for Gamma1 strata.
  int a = -1;
  int b = -1;
  std::optional<Label> label;
  Int etale_factor = 1;
  Int connected_factor = 1;
  Int rank = 1;
  std::optional<Int> oracle_connected_factor;
  bool oracle_agrees() const {
    return !oracle_connected_factor || *oracle_connected_factor == connected_factor;
  }
};

struct DrinfeldLocus {
  GroupSchemeProfile base;
  StructureKind kind;
  Int level;
  std::optional<Subgroup> K;
  std::vector<Stratum> strata;
  Int total() const;
  bool oracle_checked() const;
  bool oracle_agrees() const;
};

struct OracleOptions {
  bool enabled = false;
  unsigned jobs = 1;
};

Int gamma1_stratum_rank(Int p, int a, int b);
DrinfeldLocus gamma1_components(Int p, int n, const OracleOptions& oracle = {});

struct H1Member {
  int m;
  int a;
  int b;
  Int rank;
};

struct ZComponent {
  int b;
  std::vector<H1Member> members;
  Int rank() const;
};

struct H1Decomposition {
  Int p;
  int n;
  std::vector<DrinfeldLocus> levels;
  std::vector<ZComponent> components;
  Int total() const;
};

H1Decomposition h1_decomposition(Int p, int n);

// Strata of the G_K-structure problem indexed by labels H; G_K must be a p-group.
DrinfeldLocus gK_components(const Subgroup& K, Int p, const OracleOptions& oracle = {});

struct LambdaRow {
  LambdaClass cls;
  std::vector<Int> member_ranks;
  Int rank = 0;
  std::optional<Int> length;
  std::optional<Int> reduced_degree;
};

struct HTotal {
  Int p;
  int n;
  std::vector<LambdaRow> rows;
  Int total = 0;
  bool lengths_known() const { return n <= 1; }
};

HTotal h_total(Int p, int n);

}  // namespace moduli
