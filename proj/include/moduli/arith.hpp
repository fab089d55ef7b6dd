#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace moduli {

using Int = std::int64_t;

// Raised when a computation would exceed the configured size bound.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bound on p^n style sizes, read from MODULI_MAX_RANK (default 32).
Int max_rank();
void require_within_rank(Int value, std::string_view what);

Int mod(Int a, Int m);
Int inverse_mod(Int a, Int m);
bool is_prime(Int n);
Int ipow(Int base, unsigned exp);
int valuation(Int n, Int p);
bool is_power_of(Int n, Int p);

std::vector<std::pair<Int, int>> factorize(Int n);
std::vector<Int> divisors(Int n);
Int totient(Int n);
Int jordan_totient2(Int n);
Int dedekind_psi(Int n);

// N = p^n * cofactor with gcd(cofactor, p) = 1.
struct PrimePowerSplit {
  Int p = 0;
  int n = 0;
  Int prime_power = 1;
  Int cofactor = 1;
};
PrimePowerSplit split_prime_power(Int N, Int p);

}  // namespace moduli
