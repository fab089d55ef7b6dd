#pragma once

#include "moduli/arith.hpp"
#include "moduli/matrix.hpp"

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace moduli {

using Vec2 = std::array<Int, 2>;

// Z/n1 x Z/n2 with n2 | n1.
struct QuotientType {
  Int n1 = 1;
  Int n2 = 1;
  bool cyclic() const { return n2 == 1; }
  friend bool operator==(const QuotientType&, const QuotientType&) = default;
};

// Subgroup K of (Z/N)^2, stored through the lattice K + N Z^2 in Hermite form
// [[a, b], [0, d]] with a | N, d | N, 0 <= b < d.
class Subgroup {
 public:
  static Subgroup from_generators(Int N, const std::vector<Vec2>& gens);
  static Subgroup from_hermite(Int N, Int a, Int b, Int d);
  static Subgroup whole(Int N) { return from_hermite(N, 1, 0, 1); }
  static Subgroup trivial(Int N) { return from_hermite(N, N, 0, N); }

  Int modulus() const { return modulus_; }
  const IntMatrix2& lattice_basis() const { return hnf_; }
  // Generators of K itself, rows reduced mod N.
  std::vector<Vec2> generators() const;
  Int order() const;
  // Type of (Z/N)^2 / K.
  QuotientType quotient_type() const;
  Int index() const { return hnf_(0, 0) * hnf_(1, 1); }

  bool contains(const Vec2& v) const;
  bool contains(const Subgroup& other) const;
  std::vector<Vec2> elements() const;
  Subgroup intersect(const Subgroup& other) const;
  Subgroup sum(const Subgroup& other) const;

  // Smith coordinates on (Z/N)^2 / K: x -> (x V)_1 mod n1, (x V)_0 mod n2.
  Vec2 smith_coordinates(const Vec2& x) const;

  std::string to_string() const;

  friend bool operator==(const Subgroup& x, const Subgroup& y) {
    return x.modulus_ == y.modulus_ && x.hnf_ == y.hnf_;
  }
  // Ordered by (order, Hermite entries).
  friend std::strong_ordering operator<=>(const Subgroup& x, const Subgroup& y);

 private:
  Subgroup(Int N, IntMatrix2 hnf) : modulus_(N), hnf_(std::move(hnf)) {}
  Int modulus_ = 1;
  IntMatrix2 hnf_;
};

std::vector<Subgroup> enumerate_subgroups(Int N);

// A cyclic p-subgroup H of G_K = (Z/N)^2 / K with G_K / H cyclic on the p-part,
// recorded through its preimage K_H in (Z/N)^2.
class Label {
 public:
  Label(Subgroup parent, Subgroup preimage, Int p);

  const Subgroup& parent() const { return parent_; }
  const Subgroup& preimage() const { return preimage_; }
  Int characteristic() const { return p_; }
  Int order() const { return preimage_.order() / parent_.order(); }
  // log_p |H| and log_p of the p-part of |G_K / H|.
  int h_exponent() const;
  int c_exponent() const;
  // Generator of H in the Smith coordinates of G_K.
  Vec2 smith_generator() const;
  std::string to_string() const;

  friend bool operator==(const Label&, const Label&) = default;
  friend std::strong_ordering operator<=>(const Label& x, const Label& y);

 private:
  Subgroup parent_;
  Subgroup preimage_;
  Int p_;
};

// Type of big / small when small <= big.
QuotientType relative_type(const Subgroup& big, const Subgroup& small);

std::vector<Label> label_set(const Subgroup& K, Int p);

// nullopt when the preimage of H in G_{Kp} is not cyclic.
std::optional<Label> lift_label(const Subgroup& Kp, const Label& H);

struct LambdaClass {
  std::size_t index = 0;
  std::vector<Label> members;
  const Subgroup& common_preimage() const { return members.front().preimage(); }
};

// Equivalence classes on pairs (K, H) for N = p^n, generated by lifting along K' <= K.
std::vector<LambdaClass> lambda_classes(Int p, int n);

}  // namespace moduli
