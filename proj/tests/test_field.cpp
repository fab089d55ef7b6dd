#include "moduli/field.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace moduli;

TEST_SUITE("field") {
  TEST_CASE("prime field arithmetic") {
    auto F = GaloisField::prime(7);
    CHECK(F->order() == 7);
    auto three = F->from_int(3), five = F->from_int(5);
    CHECK((three + five) == F->from_int(1));
    CHECK((three * five) == F->one());
    CHECK((three - five) == F->from_int(5));
    CHECK(three.inverse() == five);
    CHECK(F->from_int(-1) == F->from_int(6));
    CHECK(three.pow(6) == F->one());
    CHECK(three.pow(-1) == five);
  }

  TEST_CASE("irreducibility by trial division") {
    CHECK(GaloisField::is_irreducible(5, {1, 1, 1}));
    CHECK(GaloisField::is_irreducible(7, {1, 0, 1}));
    CHECK_FALSE(GaloisField::is_irreducible(5, {1, 0, 1}));
    CHECK_FALSE(GaloisField::is_irreducible(2, {1, 0, 0, 1}));
    CHECK(GaloisField::is_irreducible(2, {1, 1, 0, 1}));
    CHECK_THROWS_AS(GaloisField::make(5, {1, 0, 1}), std::invalid_argument);
  }

  TEST_CASE("extension field axioms on a sample") {
    auto F = GaloisField::make(5, {1, 1, 1});
    CHECK(F->order() == 25);
    const auto elems = F->elements();
    CHECK(elems.size() == 25);
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
    for (int i = 0; i < 200; ++i) {
      auto x = elems[pick(rng)], y = elems[pick(rng)], z = elems[pick(rng)];
      CHECK((x + y) * z == x * z + y * z);
      CHECK((x * y) * z == x * (y * z));
      if (!x.is_zero()) CHECK(x * x.inverse() == F->one());
      CHECK(x.pow(25) == x);
    }
  }

  TEST_CASE("multiplicative group is cyclic with the primitive element") {
    for (auto F : {GaloisField::prime(31), GaloisField::make(5, {1, 1, 1}), GaloisField::make(5, {1, 0, 1, 1})}) {
      auto g = F->primitive_element();
      std::set<std::uint32_t> seen;
      auto x = F->one();
      for (Int i = 0; i < F->order() - 1; ++i, x *= g) seen.insert(x.index());
      CHECK(static_cast<Int>(seen.size()) == F->order() - 1);
    }
  }

  TEST_CASE("square roots") {
    auto F = GaloisField::make(7, {1, 0, 1});
    Int squares = 0;
    for (const auto& x : F->elements()) {
      if (auto r = x.sqrt()) {
        CHECK(*r * *r == x);
        ++squares;
      }
    }
    CHECK(squares == (49 - 1) / 2 + 1);
  }

  TEST_CASE("roots of unity") {
    auto F = GaloisField::make(5, {1, 1, 1});
    CHECK(F->roots_of_unity(3).size() == 3);
    CHECK(F->roots_of_unity(24).size() == 24);
    CHECK(F->roots_of_unity(5).size() == 1);
    CHECK(F->roots_of_unity(7).size() == 1);
    for (const auto& z : F->roots_of_unity(6)) CHECK(z.pow(6) == F->one());
  }

  TEST_CASE("seeded random modulus is reproducible") {
    auto m1 = GaloisField::random_irreducible(3, 4, 42);
    auto m2 = GaloisField::random_irreducible(3, 4, 42);
    CHECK(m1 == m2);
    CHECK(m1.size() == 5);
    CHECK(m1.back() == 1);
    CHECK(GaloisField::is_irreducible(3, m1));
    CHECK(GaloisField::with_random_modulus(3, 4, 42)->same_as(*GaloisField::make(3, m1)));
  }

  TEST_CASE("polynomials") {
    auto F = GaloisField::prime(11);
    auto f = FieldPoly::x_minus(F->from_int(2)) * FieldPoly::x_minus(F->from_int(3));
    CHECK(f.degree() == 2);
    CHECK(f.evaluate(F->from_int(2)).is_zero());
    CHECK(f.evaluate(F->from_int(4)) == F->from_int(2));
    CHECK(f.derivative().evaluate(F->zero()) == F->from_int(-5));
    CHECK((f - f).is_zero());
  }

  TEST_CASE("rejects bad input") {
    CHECK_THROWS_AS(GaloisField::prime(9), std::invalid_argument);
    CHECK_THROWS(GaloisField::prime(7)->zero().inverse());
  }
}
