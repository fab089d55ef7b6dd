#include "moduli/arith.hpp"

#include <cstdlib>
#include <limits>
#include <numeric>

namespace moduli {

Int max_rank() {
  const char* env = std::getenv("MODULI_MAX_RANK");
  if (env == nullptr || *env == '\0') return 32;
  char* end = nullptr;
  long long v = std::strtoll(env, &end, 10);
  if (end == env || *end != '\0' || v <= 0)
    throw std::invalid_argument("MODULI_MAX_RANK must be a positive integer");
  return static_cast<Int>(v);
}

void require_within_rank(Int value, std::string_view what) {
  const Int bound = max_rank();
  if (value > bound) {
    throw ResourceLimitError(std::string(what) + " = " + std::to_string(value) +
                             " exceeds MODULI_MAX_RANK = " + std::to_string(bound));
  }
}

Int mod(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

Int inverse_mod(Int a, Int m) {
  Int old_r = mod(a, m), r = m, old_s = 1, s = 0;
  while (r != 0) {
    Int q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
  }
  if (old_r != 1) throw std::domain_error("inverse_mod: not a unit");
  return mod(old_s, m);
}

bool is_prime(Int n) {
  if (n < 2) return false;
  for (Int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Int ipow(Int base, unsigned exp) {
  Int result = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && std::abs(result) > std::numeric_limits<Int>::max() / std::abs(base))
      throw std::overflow_error("ipow overflow");
    result *= base;
  }
  return result;
}

int valuation(Int n, Int p) {
  if (n == 0) throw std::invalid_argument("valuation of zero");
  int v = 0;
  n = std::abs(n);
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

bool is_power_of(Int n, Int p) {
  if (n < 1) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

std::vector<std::pair<Int, int>> factorize(Int n) {
  std::vector<std::pair<Int, int>> out;
  for (Int d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<Int> divisors(Int n) {
  std::vector<Int> small, large;
  for (Int d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

Int totient(Int n) {
  Int r = n;
  for (auto [l, e] : factorize(n)) r = r / l * (l - 1);
  return r;
}

Int jordan_totient2(Int n) {
  Int r = n * n;
  for (auto [l, e] : factorize(n)) r = r / (l * l) * (l * l - 1);
  return r;
}

Int dedekind_psi(Int n) {
  Int r = n;
  for (auto [l, e] : factorize(n)) r = r / l * (l + 1);
  return r;
}

PrimePowerSplit split_prime_power(Int N, Int p) {
  if (N < 1) throw std::invalid_argument("level must be positive");
  if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime");
  PrimePowerSplit s;
  s.p = p;
  s.cofactor = N;
  while (s.cofactor % p == 0) {
    s.cofactor /= p;
    s.prime_power *= p;
    ++s.n;
  }
  return s;
}

}  // namespace moduli
