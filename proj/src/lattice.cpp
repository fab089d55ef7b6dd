#include "moduli/lattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace moduli {

namespace {

Vec2 reduce(const Vec2& v, Int N) { return {mod(v[0], N), mod(v[1], N)}; }

// Union-find with path halving.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

Subgroup Subgroup::from_generators(Int N, const std::vector<Vec2>& gens) {
  if (N < 1) throw std::invalid_argument("modulus must be positive");
  DenseMatrix<Int> m(static_cast<Eigen::Index>(gens.size()) + 2, 2);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    auto r = reduce(gens[i], N);
    m(static_cast<Eigen::Index>(i), 0) = r[0];
    m(static_cast<Eigen::Index>(i), 1) = r[1];
  }
  auto k = static_cast<Eigen::Index>(gens.size());
  m.row(k) << N, 0;
  m.row(k + 1) << 0, N;
  DenseMatrix<Int> h = hermite_normal_form(m);
  return from_hermite(N, h(0, 0), h(0, 1), h(1, 1));
}

Subgroup Subgroup::from_hermite(Int N, Int a, Int b, Int d) {
  if (N < 1 || a < 1 || d < 1 || N % a != 0 || N % d != 0 || b < 0 || b >= d ||
      ((N / a) * b) % d != 0)
    throw std::invalid_argument("not a Hermite basis of a lattice containing N Z^2");
  IntMatrix2 h;
  h << a, b, 0, d;
  return Subgroup(N, h);
}

std::vector<Vec2> Subgroup::generators() const {
  return {reduce({hnf_(0, 0), hnf_(0, 1)}, modulus_), reduce({0, hnf_(1, 1)}, modulus_)};
}

Int Subgroup::order() const { return modulus_ * modulus_ / index(); }

QuotientType Subgroup::quotient_type() const {
  auto inv = smith_normal_form(hnf_).invariants();
  return {inv[1], inv[0]};
}

bool Subgroup::contains(const Vec2& v) const {
  auto r = reduce(v, modulus_);
  if (r[0] % hnf_(0, 0) != 0) return false;
  Int x = r[0] / hnf_(0, 0);
  return mod(r[1] - x * hnf_(0, 1), hnf_(1, 1)) == 0;
}

bool Subgroup::contains(const Subgroup& other) const {
  if (other.modulus_ != modulus_) throw std::invalid_argument("subgroups of different levels");
  return contains(Vec2{other.hnf_(0, 0), other.hnf_(0, 1)}) && contains(Vec2{0, other.hnf_(1, 1)});
}

std::vector<Vec2> Subgroup::elements() const {
  std::vector<Vec2> out;
  const Int a = hnf_(0, 0), b = hnf_(0, 1), d = hnf_(1, 1);
  for (Int i = 0; i < modulus_ / a; ++i)
    for (Int j = 0; j < modulus_ / d; ++j) out.push_back(reduce({i * a, i * b + j * d}, modulus_));
  std::sort(out.begin(), out.end());
  return out;
}

Subgroup Subgroup::intersect(const Subgroup& other) const {
  std::vector<Vec2> common;
  for (const auto& e : elements())
    if (other.contains(e)) common.push_back(e);
  return from_generators(modulus_, common);
}

Subgroup Subgroup::sum(const Subgroup& other) const {
  auto g = generators();
  auto h = other.generators();
  g.insert(g.end(), h.begin(), h.end());
  return from_generators(modulus_, g);
}

Vec2 Subgroup::smith_coordinates(const Vec2& x) const {
  auto snf = smith_normal_form(hnf_);
  auto inv = snf.invariants();
  Eigen::Matrix<Int, 1, 2> row;
  row << x[0], x[1];
  Eigen::Matrix<Int, 1, 2> y = row * snf.right;
  return {mod(y(1), inv[1]), mod(y(0), inv[0])};
}

std::string Subgroup::to_string() const {
  std::ostringstream os;
  os << '[' << hnf_(0, 0) << ',' << hnf_(0, 1) << ";0," << hnf_(1, 1) << ']';
  return os.str();
}

std::strong_ordering operator<=>(const Subgroup& x, const Subgroup& y) {
  if (auto c = x.order() <=> y.order(); c != 0) return c;
  for (auto [i, j] : {std::pair{0, 0}, {0, 1}, {1, 1}})
    if (auto c = x.hnf_(i, j) <=> y.hnf_(i, j); c != 0) return c;
  return x.modulus_ <=> y.modulus_;
}

std::vector<Subgroup> enumerate_subgroups(Int N) {
  std::vector<Subgroup> out;
  for (Int a : divisors(N))
    for (Int d : divisors(N))
      for (Int b = 0; b < d; ++b)
        if (((N / a) * b) % d == 0) out.push_back(Subgroup::from_hermite(N, a, b, d));
  std::sort(out.begin(), out.end());
  return out;
}

QuotientType relative_type(const Subgroup& big, const Subgroup& small) {
  if (!big.contains(small)) throw std::invalid_argument("relative_type: not a subgroup");
  const IntMatrix2& mb = big.lattice_basis();
  const Int det = determinant2(mb);
  IntMatrix2 c = small.lattice_basis() * adjugate2(mb);
  for (Int v : c.reshaped())
    if (v % det != 0) throw std::logic_error("relative_type: non-integral transition");
  c /= det;
  auto inv = smith_normal_form(c).invariants();
  return {inv[1], inv[0]};
}

Label::Label(Subgroup parent, Subgroup preimage, Int p)
    : parent_(std::move(parent)), preimage_(std::move(preimage)), p_(p) {
  if (!is_prime(p)) throw std::invalid_argument("label: characteristic must be prime");
  if (!preimage_.contains(parent_)) throw std::invalid_argument("label: K is not contained in K_H");
  if (!is_power_of(order(), p)) throw std::invalid_argument("label: H is not a p-group");
  if (!relative_type(preimage_, parent_).cyclic()) throw std::invalid_argument("label: H is not cyclic");
  if (preimage_.quotient_type().n2 % p == 0)
    throw std::invalid_argument("label: G_K / H is not cyclic on the p-part");
}

int Label::h_exponent() const { return valuation(order(), p_); }

int Label::c_exponent() const { return valuation(preimage_.index(), p_); }

Vec2 Label::smith_generator() const {
  const Int h = order();
  if (h == 1) return {0, 0};
  auto gens = preimage_.generators();
  auto g1 = parent_.smith_coordinates(gens[0]);
  auto g2 = parent_.smith_coordinates(gens[1]);
  auto q = parent_.quotient_type();
  for (Int i = 0; i < h; ++i)
    for (Int j = 0; j < h; ++j) {
      Vec2 x{mod(i * g1[0] + j * g2[0], q.n1), mod(i * g1[1] + j * g2[1], q.n2)};
      Vec2 lifted = {i * gens[0][0] + j * gens[1][0], i * gens[0][1] + j * gens[1][1]};
      Int ord = 1;
      Vec2 acc = lifted;
      while (!parent_.contains(acc)) {
        acc = {acc[0] + lifted[0], acc[1] + lifted[1]};
        ++ord;
      }
      if (ord == h) return x;
    }
  throw std::logic_error("label: no generator found");
}

std::string Label::to_string() const { return "K" + parent_.to_string() + "/KH" + preimage_.to_string(); }

std::strong_ordering operator<=>(const Label& x, const Label& y) {
  if (auto c = x.parent_ <=> y.parent_; c != 0) return c;
  return x.preimage_ <=> y.preimage_;
}

std::vector<Label> label_set(const Subgroup& K, Int p) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime");
  std::vector<Label> out;
  for (const auto& S : enumerate_subgroups(K.modulus())) {
    if (!S.contains(K)) continue;
    if (!is_power_of(S.order() / K.order(), p)) continue;
    if (!relative_type(S, K).cyclic()) continue;
    if (S.quotient_type().n2 % p == 0) continue;
    out.emplace_back(K, S, p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Label> lift_label(const Subgroup& Kp, const Label& H) {
  const Subgroup& K = H.parent();
  if (Kp.modulus() != K.modulus() || !K.contains(Kp))
    throw std::invalid_argument("lift_label: K' is not contained in K");
  if (!is_power_of(K.order() / Kp.order(), H.characteristic()))
    throw std::invalid_argument("lift_label: K / K' is not a p-group");
  if (!relative_type(H.preimage(), Kp).cyclic()) return std::nullopt;
  return Label(Kp, H.preimage(), H.characteristic());
}

std::vector<LambdaClass> lambda_classes(Int p, int n) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime");
  if (n < 0) throw std::invalid_argument("exponent must be non-negative");
  const Int N = ipow(p, static_cast<unsigned>(n));
  require_within_rank(N, "p^n");
  const auto subgroups = enumerate_subgroups(N);

  std::vector<Label> pairs;
  std::map<std::pair<Subgroup, Subgroup>, std::size_t> index;
  for (const auto& K : subgroups)
    for (auto& label : label_set(K, p)) {
      index.emplace(std::pair{label.parent(), label.preimage()}, pairs.size());
      pairs.push_back(std::move(label));
    }

  DisjointSets sets(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const Label& label = pairs[i];
    for (const auto& Kp : subgroups) {
      if (!label.parent().contains(Kp)) continue;
      auto lifted = lift_label(Kp, label);
      if (lifted) sets.unite(i, index.at({Kp, lifted->preimage()}));
    }
  }

  std::map<std::size_t, std::vector<Label>> grouped;
  for (std::size_t i = 0; i < pairs.size(); ++i) grouped[sets.find(i)].push_back(pairs[i]);

  std::vector<LambdaClass> classes;
  for (auto& [root, members] : grouped) {
    std::sort(members.begin(), members.end());
    classes.push_back({0, std::move(members)});
  }
  const Subgroup whole = Subgroup::whole(N);
  auto is_base = [&](const LambdaClass& c) {
    return std::any_of(c.members.begin(), c.members.end(),
                       [&](const Label& l) { return l.parent() == whole; });
  };
  std::sort(classes.begin(), classes.end(), [&](const LambdaClass& x, const LambdaClass& y) {
    bool bx = is_base(x), by = is_base(y);
    if (bx != by) return bx;
    return x.members.front() < y.members.front();
  });
  for (std::size_t i = 0; i < classes.size(); ++i) classes[i].index = i;
  return classes;
}

}  // namespace moduli
