#pragma once

#include "moduli/arith.hpp"

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace moduli {

class FieldElem;

// F_q = F_p[x] / (modulus), elements indexed by their base-p coefficient digits.
class GaloisField : public std::enable_shared_from_this<GaloisField> {
 public:
  static constexpr Int kTableLimit = Int{1} << 20;
  static constexpr Int kEnumerationLimit = 10000;

  // modulus: monic, low to high, length k + 1. Irreducibility is verified.
  static std::shared_ptr<const GaloisField> make(Int p, std::vector<Int> modulus);
  static std::shared_ptr<const GaloisField> prime(Int p);
  static std::shared_ptr<const GaloisField> with_random_modulus(Int p, int k, std::uint64_t seed);

  static bool is_irreducible(Int p, const std::vector<Int>& poly);
  static std::vector<Int> random_irreducible(Int p, int k, std::uint64_t seed);

  Int characteristic() const { return p_; }
  int degree() const { return k_; }
  Int order() const { return q_; }
  const std::vector<Int>& modulus() const { return modulus_; }

  FieldElem zero() const;
  FieldElem one() const;
  FieldElem from_int(Int c) const;
  FieldElem from_coefficients(const std::vector<Int>& coeffs) const;
  FieldElem from_index(Int index) const;
  FieldElem primitive_element() const;
  std::vector<FieldElem> elements() const;
  // Elements u with u^n = 1.
  std::vector<FieldElem> roots_of_unity(Int n) const;

  std::vector<Int> coefficients(std::uint32_t v) const;
  std::uint32_t add(std::uint32_t x, std::uint32_t y) const;
  std::uint32_t neg(std::uint32_t x) const;
  std::uint32_t mul(std::uint32_t x, std::uint32_t y) const;
  std::uint32_t inv(std::uint32_t x) const;
  std::optional<std::uint32_t> sqrt(std::uint32_t x) const;

  bool same_as(const GaloisField& other) const { return p_ == other.p_ && modulus_ == other.modulus_; }

 private:
  GaloisField(Int p, std::vector<Int> modulus);
  std::uint32_t slow_mul(std::uint32_t x, std::uint32_t y) const;

  Int p_;
  int k_;
  Int q_;
  std::vector<Int> modulus_;
  std::vector<std::uint32_t> exp_;
  std::vector<std::int64_t> log_;
  std::vector<std::int64_t> sqrt_;
};

using FieldPtr = std::shared_ptr<const GaloisField>;

class FieldElem {
 public:
  FieldElem() = default;
  FieldElem(FieldPtr field, std::uint32_t value) : field_(std::move(field)), value_(value) {}

  const FieldPtr& field() const { return field_; }
  std::uint32_t index() const { return value_; }
  std::vector<Int> coefficients() const { return field_->coefficients(value_); }
  bool is_zero() const { return value_ == 0; }
  bool is_one() const { return value_ == 1; }

  FieldElem operator+(const FieldElem& o) const { return {field_, field_->add(value_, o.value_)}; }
  FieldElem operator-(const FieldElem& o) const { return {field_, field_->add(value_, field_->neg(o.value_))}; }
  FieldElem operator-() const { return {field_, field_->neg(value_)}; }
  FieldElem operator*(const FieldElem& o) const { return {field_, field_->mul(value_, o.value_)}; }
  FieldElem operator/(const FieldElem& o) const { return {field_, field_->mul(value_, field_->inv(o.value_))}; }
  FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
  FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
  FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }
  FieldElem operator*(Int c) const { return *this * field_->from_int(c); }
  FieldElem inverse() const { return {field_, field_->inv(value_)}; }
  FieldElem pow(Int e) const;
  std::optional<FieldElem> sqrt() const;
  bool is_square() const { return sqrt().has_value(); }
  std::string to_string() const;

  friend bool operator==(const FieldElem& x, const FieldElem& y) { return x.value_ == y.value_; }
  friend std::strong_ordering operator<=>(const FieldElem& x, const FieldElem& y) { return x.value_ <=> y.value_; }

 private:
  FieldPtr field_;
  std::uint32_t value_ = 0;
};

// Dense polynomial over F_q, low to high.
class FieldPoly {
 public:
  explicit FieldPoly(FieldPtr field, std::vector<FieldElem> coeffs = {});
  static FieldPoly constant(const FieldElem& c);
  static FieldPoly x_minus(const FieldElem& root);

  const FieldPtr& field() const { return field_; }
  const std::vector<FieldElem>& coefficients() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  FieldElem coefficient(std::size_t i) const;
  FieldElem evaluate(const FieldElem& x) const;
  FieldPoly derivative() const;

  FieldPoly operator+(const FieldPoly& o) const;
  FieldPoly operator-(const FieldPoly& o) const;
  FieldPoly operator*(const FieldPoly& o) const;
  FieldPoly operator*(const FieldElem& c) const;
  friend bool operator==(const FieldPoly& x, const FieldPoly& y) { return x.coeffs_ == y.coeffs_; }

 private:
  void trim();
  FieldPtr field_;
  std::vector<FieldElem> coeffs_;
};

}  // namespace moduli
