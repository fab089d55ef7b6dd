#include "moduli/field.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace moduli {

namespace {

using ZpPoly = std::vector<Int>;

void trim(ZpPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f modulo monic g over Z/p.
ZpPoly poly_rem(ZpPoly f, const ZpPoly& g, Int p) {
  trim(f);
  const std::size_t dg = g.size() - 1;
  while (f.size() > dg) {
    Int lead = f.back();
    std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i) f[shift + i] = mod(f[shift + i] - lead * g[i], p);
    trim(f);
  }
  return f;
}

}  // namespace

bool GaloisField::is_irreducible(Int p, const std::vector<Int>& poly) {
  ZpPoly f = poly;
  for (auto& c : f) c = mod(c, p);
  trim(f);
  if (f.size() < 2) return false;
  const int k = static_cast<int>(f.size()) - 1;
  if (f.back() != 1) {
    Int inv = inverse_mod(f.back(), p);
    for (auto& c : f) c = mod(c * inv, p);
  }
  for (int d = 1; 2 * d <= k; ++d) {
    Int count = ipow(p, static_cast<unsigned>(d));
    for (Int idx = 0; idx < count; ++idx) {
      ZpPoly g(static_cast<std::size_t>(d) + 1);
      Int t = idx;
      for (int i = 0; i < d; ++i) {
        g[static_cast<std::size_t>(i)] = t % p;
        t /= p;
      }
      g[static_cast<std::size_t>(d)] = 1;
      if (poly_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::vector<Int> GaloisField::random_irreducible(Int p, int k, std::uint64_t seed) {
  if (!is_prime(p) || k < 1) throw std::invalid_argument("random_irreducible: bad parameters");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Int> digit(0, p - 1);
  for (;;) {
    std::vector<Int> f(static_cast<std::size_t>(k) + 1);
    for (int i = 0; i < k; ++i) f[static_cast<std::size_t>(i)] = digit(rng);
    f[static_cast<std::size_t>(k)] = 1;
    if (is_irreducible(p, f)) return f;
  }
}

std::shared_ptr<const GaloisField> GaloisField::make(Int p, std::vector<Int> modulus) {
  return std::shared_ptr<const GaloisField>(new GaloisField(p, std::move(modulus)));
}

std::shared_ptr<const GaloisField> GaloisField::prime(Int p) { return make(p, {0, 1}); }

std::shared_ptr<const GaloisField> GaloisField::with_random_modulus(Int p, int k, std::uint64_t seed) {
  return make(p, random_irreducible(p, k, seed));
}

GaloisField::GaloisField(Int p, std::vector<Int> modulus) : p_(p), modulus_(std::move(modulus)) {
  if (!is_prime(p)) throw std::invalid_argument("field: characteristic must be prime");
  for (auto& c : modulus_) c = mod(c, p);
  if (modulus_.size() < 2 || modulus_.back() != 1) throw std::invalid_argument("field: modulus must be monic");
  if (!is_irreducible(p, modulus_)) throw std::invalid_argument("field: modulus is not irreducible");
  k_ = static_cast<int>(modulus_.size()) - 1;
  q_ = ipow(p, static_cast<unsigned>(k_));
  if (q_ > kTableLimit) throw ResourceLimitError("field: q exceeds table limit");

  const Int n = q_ - 1;
  auto slow_pow = [&](std::uint32_t x, Int e) {
    std::uint32_t r = 1;
    while (e > 0) {
      if (e & 1) r = slow_mul(r, x);
      x = slow_mul(x, x);
      e >>= 1;
    }
    return r;
  };
  std::uint32_t g = 0;
  const auto primes = factorize(n);
  for (std::uint32_t cand = 1; cand < q_; ++cand) {
    bool primitive = true;
    for (auto [l, e] : primes)
      if (slow_pow(cand, n / l) == 1) {
        primitive = false;
        break;
      }
    if (primitive) {
      g = cand;
      break;
    }
  }
  exp_.resize(static_cast<std::size_t>(n));
  log_.assign(static_cast<std::size_t>(q_), -1);
  std::uint32_t x = 1;
  for (Int i = 0; i < n; ++i) {
    exp_[static_cast<std::size_t>(i)] = x;
    log_[x] = i;
    x = slow_mul(x, g);
  }
  sqrt_.assign(static_cast<std::size_t>(q_), -1);
  for (std::uint32_t y = 0; y < q_; ++y) {
    std::uint32_t s = mul(y, y);
    if (sqrt_[s] < 0) sqrt_[s] = y;
  }
}

std::vector<Int> GaloisField::coefficients(std::uint32_t v) const {
  std::vector<Int> out(static_cast<std::size_t>(k_));
  for (int i = 0; i < k_; ++i) {
    out[static_cast<std::size_t>(i)] = v % p_;
    v /= static_cast<std::uint32_t>(p_);
  }
  return out;
}

std::uint32_t GaloisField::add(std::uint32_t x, std::uint32_t y) const {
  std::uint32_t r = 0, scale = 1;
  const auto p = static_cast<std::uint32_t>(p_);
  for (int i = 0; i < k_; ++i) {
    r += ((x % p + y % p) % p) * scale;
    x /= p;
    y /= p;
    scale *= p;
  }
  return r;
}

std::uint32_t GaloisField::neg(std::uint32_t x) const {
  std::uint32_t r = 0, scale = 1;
  const auto p = static_cast<std::uint32_t>(p_);
  for (int i = 0; i < k_; ++i) {
    r += ((p - x % p) % p) * scale;
    x /= p;
    scale *= p;
  }
  return r;
}

std::uint32_t GaloisField::slow_mul(std::uint32_t x, std::uint32_t y) const {
  auto a = coefficients(x), b = coefficients(y);
  ZpPoly prod(static_cast<std::size_t>(2 * k_), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = mod(prod[i + j] + a[i] * b[j], p_);
  auto r = poly_rem(prod, modulus_, p_);
  std::uint32_t v = 0;
  for (std::size_t i = r.size(); i-- > 0;) v = v * static_cast<std::uint32_t>(p_) + static_cast<std::uint32_t>(r[i]);
  return v;
}

std::uint32_t GaloisField::mul(std::uint32_t x, std::uint32_t y) const {
  if (x == 0 || y == 0) return 0;
  const Int n = q_ - 1;
  return exp_[static_cast<std::size_t>((log_[x] + log_[y]) % n)];
}

std::uint32_t GaloisField::inv(std::uint32_t x) const {
  if (x == 0) throw std::domain_error("field: division by zero");
  const Int n = q_ - 1;
  return exp_[static_cast<std::size_t>((n - log_[x]) % n)];
}

std::optional<std::uint32_t> GaloisField::sqrt(std::uint32_t x) const {
  if (sqrt_[x] < 0) return std::nullopt;
  return static_cast<std::uint32_t>(sqrt_[x]);
}

FieldElem GaloisField::zero() const { return {shared_from_this(), 0}; }
FieldElem GaloisField::one() const { return {shared_from_this(), 1}; }
FieldElem GaloisField::from_int(Int c) const { return {shared_from_this(), static_cast<std::uint32_t>(mod(c, p_))}; }

FieldElem GaloisField::from_coefficients(const std::vector<Int>& coeffs) const {
  if (coeffs.size() > static_cast<std::size_t>(k_)) throw std::invalid_argument("field: too many coefficients");
  std::uint32_t v = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;)
    v = v * static_cast<std::uint32_t>(p_) + static_cast<std::uint32_t>(mod(coeffs[i], p_));
  return {shared_from_this(), v};
}

FieldElem GaloisField::from_index(Int index) const {
  if (index < 0 || index >= q_) throw std::out_of_range("field: index out of range");
  return {shared_from_this(), static_cast<std::uint32_t>(index)};
}

FieldElem GaloisField::primitive_element() const { return {shared_from_this(), exp_.size() > 1 ? exp_[1] : 1}; }

std::vector<FieldElem> GaloisField::elements() const {
  if (q_ > kEnumerationLimit) throw ResourceLimitError("field: q exceeds enumeration limit");
  std::vector<FieldElem> out;
  out.reserve(static_cast<std::size_t>(q_));
  for (Int i = 0; i < q_; ++i) out.push_back(from_index(i));
  return out;
}

std::vector<FieldElem> GaloisField::roots_of_unity(Int n) const {
  if (n < 1) throw std::invalid_argument("roots_of_unity: n must be positive");
  const Int m = std::gcd(n, q_ - 1);
  std::vector<FieldElem> out;
  const Int step = (q_ - 1) / m;
  for (Int i = 0; i < m; ++i) out.push_back(FieldElem(shared_from_this(), exp_[static_cast<std::size_t>(i * step)]));
  std::sort(out.begin(), out.end());
  return out;
}

FieldElem FieldElem::pow(Int e) const {
  if (e < 0) return inverse().pow(-e);
  FieldElem r = field_->one(), b = *this;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

std::optional<FieldElem> FieldElem::sqrt() const {
  auto s = field_->sqrt(value_);
  if (!s) return std::nullopt;
  return FieldElem(field_, *s);
}

std::string FieldElem::to_string() const {
  if (field_->degree() == 1) return std::to_string(value_);
  std::ostringstream os;
  auto c = coefficients();
  os << '[';
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  os << ']';
  return os.str();
}

FieldPoly::FieldPoly(FieldPtr field, std::vector<FieldElem> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  trim();
}

FieldPoly FieldPoly::constant(const FieldElem& c) { return FieldPoly(c.field(), {c}); }

FieldPoly FieldPoly::x_minus(const FieldElem& root) { return FieldPoly(root.field(), {-root, root.field()->one()}); }

void FieldPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

FieldElem FieldPoly::coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : field_->zero(); }

FieldElem FieldPoly::evaluate(const FieldElem& x) const {
  FieldElem r = field_->zero();
  for (std::size_t i = coeffs_.size(); i-- > 0;) r = r * x + coeffs_[i];
  return r;
}

FieldPoly FieldPoly::derivative() const {
  std::vector<FieldElem> d;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * static_cast<Int>(i));
  return FieldPoly(field_, std::move(d));
}

FieldPoly FieldPoly::operator+(const FieldPoly& o) const {
  std::vector<FieldElem> r;
  for (std::size_t i = 0; i < std::max(coeffs_.size(), o.coeffs_.size()); ++i) r.push_back(coefficient(i) + o.coefficient(i));
  return FieldPoly(field_, std::move(r));
}

FieldPoly FieldPoly::operator-(const FieldPoly& o) const {
  std::vector<FieldElem> r;
  for (std::size_t i = 0; i < std::max(coeffs_.size(), o.coeffs_.size()); ++i) r.push_back(coefficient(i) - o.coefficient(i));
  return FieldPoly(field_, std::move(r));
}

FieldPoly FieldPoly::operator*(const FieldPoly& o) const {
  if (is_zero() || o.is_zero()) return FieldPoly(field_);
  std::vector<FieldElem> r(coeffs_.size() + o.coeffs_.size() - 1, field_->zero());
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
  return FieldPoly(field_, std::move(r));
}

FieldPoly FieldPoly::operator*(const FieldElem& c) const {
  std::vector<FieldElem> r;
  for (const auto& a : coeffs_) r.push_back(a * c);
  return FieldPoly(field_, std::move(r));
}

}  // namespace moduli
