#include "moduli/fp_poly.hpp"
#include "moduli/groupscheme.hpp"
#include "test_helpers.hpp"

#include <doctest.h>

#include <fstream>
#include <set>

using namespace moduli;

namespace {

Int phi_pp(Int p, int e) { return e == 0 ? 1 : totient(ipow(p, static_cast<unsigned>(e))); }

// Rank of mu_{p^a}[p^k] as dim F_p[zeta]/(zeta^{p^a} - 1, zeta^{p^k} - 1).
Int mu_torsion_rank(Int p, int a, int k) {
  FpPolyRing R(p, ipow(p, static_cast<unsigned>(a)));
  return R.quotient_dimension({R.sub(R.zeta_power(ipow(p, static_cast<unsigned>(k))), R.constant(1))});
}

// |{x in Z/p^a : p^k x = 0}|.
Int etale_torsion_count(Int p, int a, int k) {
  const Int M = ipow(p, static_cast<unsigned>(a)), pk = ipow(p, static_cast<unsigned>(k));
  Int c = 0;
  for (Int x = 0; x < M; ++x)
    if ((pk * x) % M == 0) ++c;
  return c;
}

}  // namespace

TEST_SUITE("groupscheme") {
  TEST_CASE("rank of profiles") {
    CHECK(GroupSchemeProfile(3).mu(3).etale(3).rank() == 9);
    CHECK(GroupSchemeProfile(5).rank() == 1);
    CHECK(GroupSchemeProfile(2).mu(4).etale(4).rank() == 16);
    CHECK_THROWS_AS(GroupSchemeProfile(2).mu(6), std::invalid_argument);
    CHECK_THROWS_AS(GroupSchemeProfile(3).etale_prime_to_p(6), std::invalid_argument);
  }

  TEST_CASE("rank from coordinate rings") {
    // mu_{p^a} = Spec F_p[zeta]/(zeta^{p^a} - 1) and Z/p^a has p^a points
    for (Int p : {2, 3, 5})
      for (int a = 0; ipow(p, static_cast<unsigned>(a)) <= 32; ++a) {
        const Int pa = ipow(p, static_cast<unsigned>(a));
        FpPolyRing R(p, pa);
        CHECK(R.quotient_dimension({}) == pa);
        CHECK(R.quotient_dimension({R.sub(R.zeta_power(pa), R.constant(1))}) == pa);
      }
    FpPolyRing R(2, 4);
    CHECK(R.quotient_dimension({}) * etale_torsion_count(2, 2, 2) == GroupSchemeProfile(2).mu(4).etale(4).rank());
  }

  TEST_CASE("Cartier duality is an involution") {
    const std::vector<Int> orders2 = {1, 2, 4, 8, 16, 32};
    const std::vector<Int> orders3 = {1, 3, 9, 27};
    for (Int p : {2, 3}) {
      const auto& orders = p == 2 ? orders2 : orders3;
      for (Int a : orders)
        for (Int b : orders)
          for (Int m : {1, 5, 7}) {
            GroupSchemeProfile G(p);
            if (a > 1) G.mu(a);
            if (b > 1) G.etale(b);
            if (m > 1) G.etale_prime_to_p(m);
            CHECK(G.cartier_dual().cartier_dual() == G);
            CHECK(G.cartier_dual().rank() == G.rank());
            GroupSchemeProfile swapped(p);
            if (b > 1) swapped.mu(b);
            if (a > 1) swapped.etale(a);
            if (m > 1) swapped.etale_prime_to_p(m);
            CHECK(G.cartier_dual() == swapped);
          }
    }
  }

  TEST_CASE("hom ranks") {
    for (Int p : {2, 3, 5})
      for (int n = 0; ipow(p, static_cast<unsigned>(n)) <= 32; ++n) {
        const Int pn = ipow(p, static_cast<unsigned>(n));
        GroupSchemeProfile G(p);
        if (n > 0) G.mu(pn).etale(pn);
        CHECK(hom_rank(pn, G) == pn * pn);
        CHECK(hom_rank(1, G) == 1);
        CHECK(hom_rank({pn, pn}, G) == pn * pn * pn * pn);
      }
    // d = p into Mu(p^2) x Et(p^2): p-torsion of each factor
    for (Int p : {2, 3, 5}) {
      GroupSchemeProfile G(p);
      G.mu(p * p).etale(p * p);
      CHECK(hom_rank(p, G) == p * p);
      CHECK(hom_rank(p, G) == mu_torsion_rank(p, 2, 1) * etale_torsion_count(p, 2, 1));
    }
    CHECK(hom_rank(6, GroupSchemeProfile(2).mu(4).etale_prime_to_p(9)) == 2 * 3);
  }

  TEST_CASE("full-set-of-sections oracle examples") {
    CHECK(fss_generator_rank_oracle(3, 1, 0) == 2);
    CHECK(fss_generator_rank_oracle(2, 1, 1) == 2);
    CHECK(fss_generator_rank_oracle(2, 2, 0) == 2);
    for (Int p : {2, 3, 5, 7}) CHECK(fss_generator_rank_oracle(p, 0, 0) == 1);
    CHECK(fss_generator_rank_oracle(2, 0, 3) == 8);
  }

  TEST_CASE("oracle agrees with the frozen rank table and the closed form") {
    std::ifstream in(testing::fixture_path("fss_rank_table.json"));
    REQUIRE(in);
    auto table = nlohmann::json::parse(in);
    std::size_t rows = 0;
    for (const auto& row : table.at("rows")) {
      const Int p = row.at("p");
      const int a = row.at("a"), e = row.at("e");
      const Int rank = row.at("rank");
      CHECK(fss_generator_rank_oracle(p, a, e) == rank);
      CHECK(rank == phi_pp(p, a) * ipow(p, static_cast<unsigned>(e)));
      ++rows;
    }
    std::size_t expected = 0;
    for (Int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31})
      for (int s = 0; ipow(p, static_cast<unsigned>(s)) <= 32; ++s) expected += static_cast<std::size_t>(s + 1);
    CHECK(rows == expected);
  }

  TEST_CASE("oracle respects the rank guard") {
    CHECK_THROWS_AS(fss_generator_rank_oracle(2, 3, 3), ResourceLimitError);
    testing::ScopedMaxRank guard("64");
    CHECK(fss_generator_rank_oracle(2, 3, 3) == 4 * 8);
  }

  TEST_CASE("gamma1 strata") {
    for (Int p : {2, 3, 5, 7}) {
      auto locus = gamma1_components(p, 1, {true, 1});
      REQUIRE(locus.strata.size() == 2);
      CHECK(locus.strata[0].id == "(1,0)");
      CHECK(locus.strata[0].rank == p - 1);
      CHECK(locus.strata[1].id == "(0,1)");
      CHECK(locus.strata[1].rank == p * p - p);
      CHECK(locus.oracle_agrees());
    }
    auto l0 = gamma1_components(2, 0);
    REQUIRE(l0.strata.size() == 1);
    CHECK(l0.total() == 1);
    auto l22 = gamma1_components(2, 2, {true, 2});
    std::vector<Int> ranks;
    for (const auto& s : l22.strata) ranks.push_back(s.rank);
    CHECK(ranks == std::vector<Int>{2, 2, 8});
    CHECK(l22.oracle_checked());
    CHECK(l22.oracle_agrees());
  }

  TEST_CASE("gamma1 totals and telescoping") {
    for (Int p : {2, 3, 5})
      for (int n = 0; ipow(p, static_cast<unsigned>(n)) <= 32 && n <= 3; ++n) {
        const Int p2n = ipow(p, static_cast<unsigned>(2 * n));
        const Int expected = n == 0 ? 1 : p2n - p2n / (p * p);
        auto locus = gamma1_components(p, n, {true, 1});
        CHECK(locus.total() == expected);
        CHECK(locus.oracle_agrees());
        for (const auto& s : locus.strata) CHECK(s.rank > 0);
        Int sum = 0;
        for (int m = 0; m <= n; ++m) sum += gamma1_components(p, m).total();
        CHECK(sum == p2n);
      }
  }

  TEST_CASE("closed form equals oracle times etale factor on every stratum") {
    for (Int p : {2, 3, 5})
      for (int n = 0; ipow(p, static_cast<unsigned>(n)) <= 32; ++n)
        for (const auto& s : gamma1_components(p, n).strata)
          CHECK(s.rank == fss_generator_rank_oracle(p, s.a, s.b) * phi_pp(p, s.b));
  }

  TEST_CASE("level raising shadow on strata") {
    for (Int p : {2, 3, 5})
      for (int n = 0; ipow(p, static_cast<unsigned>(n + 1)) <= 32; ++n) {
        auto here = gamma1_components(p, n), next = gamma1_components(p, n + 1);
        for (const auto& s : here.strata) {
          const auto& raised = next.strata[static_cast<std::size_t>(s.b)];
          CHECK(raised.a == s.a + 1);
          CHECK(raised.b == s.b);
          if (s.a >= 1) CHECK(raised.rank == p * s.rank);
          else CHECK(raised.rank == (p - 1) * s.rank);
        }
      }
  }

  TEST_CASE("gamma1 respects the rank guard") {
    CHECK_THROWS_AS(gamma1_components(2, 6), ResourceLimitError);
    testing::ScopedMaxRank guard("4");
    CHECK_THROWS_AS(gamma1_components(3, 2), ResourceLimitError);
  }

  TEST_CASE("H1 decomposition") {
    auto h = h1_decomposition(3, 1);
    REQUIRE(h.components.size() == 2);
    const auto& z0 = h.components[0];
    REQUIRE(z0.members.size() == 2);
    CHECK(z0.members[0].m == 0);
    CHECK(z0.members[0].rank == 1);
    CHECK(z0.members[1].m == 1);
    CHECK(z0.members[1].a == 1);
    CHECK(z0.members[1].rank == 2);
    const auto& z1 = h.components[1];
    REQUIRE(z1.members.size() == 1);
    CHECK(z1.members[0].b == 1);
    CHECK(z1.members[0].rank == 6);
    CHECK(h.total() == 9);
    CHECK(h1_decomposition(2, 2).total() == 16);
    auto h0 = h1_decomposition(5, 0);
    CHECK(h0.components.size() == 1);
    CHECK(h0.total() == 1);
    for (Int p : {2, 3, 5})
      for (int n = 0; ipow(p, static_cast<unsigned>(n)) <= 32; ++n)
        CHECK(h1_decomposition(p, n).total() == ipow(p, static_cast<unsigned>(2 * n)));
  }

  TEST_CASE("G_K strata") {
    for (Int p : {2, 3, 5}) {
      auto locus = gK_components(Subgroup::trivial(p), p, {true, 1});
      CHECK(locus.strata.size() == static_cast<std::size_t>(p + 1));
      for (const auto& s : locus.strata) CHECK(s.rank == (p - 1) * (p * p - p));
      CHECK(locus.total() == p * p * p * p - p * p * p - p * p + p);
      CHECK(locus.oracle_agrees());
      auto trivial = gK_components(Subgroup::whole(p), p);
      REQUIRE(trivial.strata.size() == 1);
      CHECK(trivial.strata[0].rank == 1);
    }
    CHECK_THROWS_AS(gK_components(Subgroup::trivial(6), 3), std::invalid_argument);
    CHECK_NOTHROW(gK_components(Subgroup::trivial(8), 2));
    CHECK_THROWS_AS(gK_components(Subgroup::trivial(64), 2), ResourceLimitError);
  }

  TEST_CASE("G_K with cyclic quotient reproduces the gamma1 strata") {
    for (Int p : {2, 3, 5})
      for (int n = 1; ipow(p, static_cast<unsigned>(n)) <= 32; ++n) {
        const Int N = ipow(p, static_cast<unsigned>(n));
        auto gk = gK_components(Subgroup::from_generators(N, {{0, 1}}), p);
        auto g1 = gamma1_components(p, n);
        std::multiset<Int> a, b;
        for (const auto& s : gk.strata) a.insert(s.rank);
        for (const auto& s : g1.strata) b.insert(s.rank);
        CHECK(a == b);
      }
  }

  TEST_CASE("G_K strata split into etale and connected factors") {
    auto locus = gK_components(Subgroup::trivial(4), 2);
    CHECK(locus.strata.size() == 6);
    for (const auto& s : locus.strata) {
      const int h = s.label->h_exponent(), c = s.label->c_exponent();
      CHECK(h + c == 4);
      CHECK(s.etale_factor == phi_pp(2, c));
      CHECK(s.connected_factor == fss_generator_rank_oracle(2, h, c));
    }
  }

  TEST_CASE("h_total") {
    for (Int p : {2, 3, 5}) {
      auto h = h_total(p, 1);
      REQUIRE(h.rows.size() == static_cast<std::size_t>(p + 2));
      CHECK(h.rows[0].length == p * p);
      CHECK(h.rows[0].reduced_degree == 1);
      Int sum = 0;
      for (std::size_t i = 1; i < h.rows.size(); ++i) {
        CHECK(h.rows[i].length == p);
        CHECK(h.rows[i].reduced_degree == p * p - p);
      }
      for (const auto& r : h.rows) {
        sum += *r.length * *r.reduced_degree;
        CHECK(*r.length * *r.reduced_degree == r.rank);
      }
      CHECK(sum == p * p * p * p);
      CHECK(h.total == p * p * p * p);
    }
    auto h22 = h_total(2, 2);
    CHECK(h22.total == 256);
    CHECK(h22.total == hom_rank({4, 4}, GroupSchemeProfile(2).mu(4).etale(4)));
    CHECK_FALSE(h22.lengths_known());
    for (const auto& r : h22.rows) CHECK_FALSE(r.length.has_value());
  }

  TEST_CASE("members of one Lambda class share the reduced degree") {
    for (Int p : {2, 3, 5}) {
      for (const auto& row : h_total(p, 1).rows) {
        std::set<Int> degrees;
        for (const auto& m : row.cls.members) {
          const int c = m.c_exponent();
          degrees.insert(phi_pp(p, c) * ipow(p, static_cast<unsigned>(c)));
        }
        CHECK(degrees.size() == 1);
        CHECK(*degrees.begin() == *row.reduced_degree);
      }
    }
  }

  TEST_CASE("parallel oracle runs merge deterministically") {
    auto serial = gamma1_components(2, 5, {true, 1});
    auto parallel = gamma1_components(2, 5, {true, 4});
    REQUIRE(serial.strata.size() == parallel.strata.size());
    for (std::size_t i = 0; i < serial.strata.size(); ++i)
      CHECK(serial.strata[i].oracle_connected_factor == parallel.strata[i].oracle_connected_factor);
  }
}
