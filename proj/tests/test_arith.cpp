#include "moduli/arith.hpp"
#include "moduli/matrix.hpp"
#include "test_helpers.hpp"

#include <doctest.h>

#include <numeric>
#include <random>

using namespace moduli;

namespace {

// Laplace expansion in 128-bit arithmetic.
__int128 exact_determinant(const DenseMatrix<Int>& m) {
  const Eigen::Index n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  __int128 det = 0;
  for (Eigen::Index j = 0; j < n; ++j) {
    DenseMatrix<Int> minor(n - 1, n - 1);
    for (Eigen::Index r = 1; r < n; ++r)
      for (Eigen::Index c = 0, k = 0; c < n; ++c)
        if (c != j) minor(r - 1, k++) = m(r, c);
    const __int128 term = static_cast<__int128>(m(0, j)) * exact_determinant(minor);
    det += (j % 2 == 0) ? term : -term;
  }
  return det;
}

bool unimodular(const DenseMatrix<Int>& m) {
  const __int128 d = exact_determinant(m);
  return d == 1 || d == -1;
}

}  // namespace

TEST_SUITE("arith") {
  TEST_CASE("multiplicative functions agree with direct counts") {
    for (Int n = 1; n <= 60; ++n) {
      Int phi = 0, j2 = 0;
      for (Int a = 0; a < n; ++a) {
        if (std::gcd(a, n) == 1) ++phi;
        for (Int b = 0; b < n; ++b)
          if (std::gcd(std::gcd(a, b), n) == 1) ++j2;
      }
      CHECK(totient(n) == phi);
      CHECK(jordan_totient2(n) == j2);
      Int psi = n;
      for (auto [l, e] : factorize(n)) psi = psi / l * (l + 1);
      CHECK(dedekind_psi(n) == psi);
    }
  }

  TEST_CASE("prime power split") {
    auto s = split_prime_power(72, 3);
    CHECK(s.n == 2);
    CHECK(s.prime_power == 9);
    CHECK(s.cofactor == 8);
    CHECK_THROWS_AS(split_prime_power(10, 4), std::invalid_argument);
  }

  TEST_CASE("rank guard reads the environment") {
    CHECK(max_rank() == 32);
    testing::ScopedMaxRank guard("8");
    CHECK(max_rank() == 8);
    CHECK_NOTHROW(require_within_rank(8, "x"));
    CHECK_THROWS_AS(require_within_rank(9, "x"), ResourceLimitError);
  }

  TEST_CASE("smith form of random integer matrices") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<Int> entry(-12, 12);
    std::uniform_int_distribution<int> dim(1, 4);
    for (int trial = 0; trial < 300; ++trial) {
      DenseMatrix<Int> a(dim(rng), dim(rng));
      for (Eigen::Index i = 0; i < a.size(); ++i) a.data()[i] = entry(rng);
      auto s = smith_normal_form(a);
      CHECK(s.left * a * s.right == s.diagonal);
      CHECK(unimodular(s.left));
      CHECK(unimodular(s.right));
      auto inv = s.invariants();
      for (std::size_t i = 0; i + 1 < inv.size(); ++i) {
        CHECK(inv[i] >= 0);
        if (inv[i] != 0) CHECK(inv[i + 1] % inv[i] == 0);
        else CHECK(inv[i + 1] == 0);
      }
      for (Eigen::Index i = 0; i < s.diagonal.rows(); ++i)
        for (Eigen::Index j = 0; j < s.diagonal.cols(); ++j)
          if (i != j) CHECK(s.diagonal(i, j) == 0);
    }
  }

  TEST_CASE("hermite form spans the same lattice") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<Int> entry(-9, 9);
    for (int trial = 0; trial < 300; ++trial) {
      DenseMatrix<Int> g(4, 2);
      for (Eigen::Index i = 0; i < g.size(); ++i) g.data()[i] = entry(rng);
      g.row(3) << 30, 0;
      g.row(2) << 0, 30;
      auto h = hermite_normal_form(g);
      REQUIRE(h.rows() == 2);
      CHECK(h(1, 0) == 0);
      CHECK(h(0, 0) > 0);
      CHECK(h(1, 1) > 0);
      CHECK(h(0, 1) >= 0);
      CHECK(h(0, 1) < h(1, 1));
      // every generator lies in the row lattice of h, and conversely the covolumes agree
      for (Eigen::Index i = 0; i < g.rows(); ++i) {
        CHECK(g(i, 0) % h(0, 0) == 0);
        Int x = g(i, 0) / h(0, 0);
        CHECK((g(i, 1) - x * h(0, 1)) % h(1, 1) == 0);
      }
      auto s = smith_normal_form(g);
      auto inv = s.invariants();
      CHECK(inv[0] * inv[1] == h(0, 0) * h(1, 1));
    }
  }
}
