#include "loophopf/gf.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace loophopf {

namespace {

using Poly = std::vector<std::uint32_t>;  // little-endian coefficients mod p

void poly_trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a by monic b, coefficients mod p.
Poly poly_rem(Poly a, const Poly& b, std::uint64_t p) {
  poly_trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::uint64_t c = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t j = 0; j < db; ++j) {
      std::uint64_t sub = c * b[j] % p;
      a[shift + j] = static_cast<std::uint32_t>((a[shift + j] + p - sub) % p);
    }
    a.pop_back();
    poly_trim(a);
  }
  return a;
}

bool poly_irreducible(const Poly& m, std::uint64_t p) {
  const std::size_t k = m.size() - 1;
  if (k == 1) return true;
  // Trial division by every monic polynomial of degree 1..k/2.
  for (std::size_t deg = 1; deg <= k / 2; ++deg) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < deg; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Poly div(deg + 1, 0);
      std::uint64_t v = idx;
      for (std::size_t i = 0; i < deg; ++i) {
        div[i] = static_cast<std::uint32_t>(v % p);
        v /= p;
      }
      div[deg] = 1;
      if (poly_rem(m, div, p).empty()) return false;
    }
  }
  return true;
}

const std::map<std::pair<std::uint64_t, unsigned>, Poly>& builtin_moduli() {
  static const std::map<std::pair<std::uint64_t, unsigned>, Poly> table = {
      {{2, 2}, {1, 1, 1}},    {{2, 3}, {1, 1, 0, 1}}, {{2, 4}, {1, 1, 0, 0, 1}},
      {{3, 2}, {2, 2, 1}},    {{3, 3}, {1, 2, 0, 1}}, {{3, 4}, {2, 0, 0, 2, 1}},
      {{5, 2}, {2, 4, 1}},    {{5, 3}, {3, 3, 0, 1}}, {{5, 4}, {2, 4, 4, 0, 1}},
      {{7, 2}, {3, 6, 1}},    {{7, 3}, {4, 0, 6, 1}}, {{7, 4}, {3, 4, 5, 0, 1}},
  };
  return table;
}

void require_same_field(const Fe& a, const Fe& b) {
  if (!a.field() || !b.field() || !a.field()->same(*b.field()))
    throw std::invalid_argument("field element operands from different fields");
}

}  // namespace

Gf::Gf(Prime p, unsigned k, std::vector<std::uint32_t> modulus)
    : p_(p), k_(k), modulus_(std::move(modulus)) {
  if (k_ == 0) throw std::invalid_argument("extension degree must be >= 1");
  if (modulus_.size() != k_ + 1) throw std::invalid_argument("modulus must have degree k");
  if (modulus_.back() != 1) throw std::invalid_argument("modulus must be monic");
  for (auto c : modulus_)
    if (c >= p_.value) throw std::invalid_argument("modulus coefficient out of range");
  if (!poly_irreducible(modulus_, p_.value))
    throw std::invalid_argument("modulus is reducible over GF(p)");
  order_ = 1;
  for (unsigned i = 0; i < k_; ++i) {
    if (order_ > UINT64_MAX / p_.value) throw std::invalid_argument("field order overflow");
    order_ *= p_.value;
  }
}

GfPtr Gf::make(Prime p, unsigned k) {
  if (k == 1) return make(p, 1, {0, 1});
  auto it = builtin_moduli().find({p.value, k});
  if (it == builtin_moduli().end())
    throw std::invalid_argument("no built-in modulus for p=" + std::to_string(p.value) +
                                ", k=" + std::to_string(k) + "; supply one explicitly");
  return make(p, k, it->second);
}

GfPtr Gf::make(Prime p, unsigned k, std::vector<std::uint32_t> modulus) {
  return GfPtr(new Gf(p, k, std::move(modulus)));
}

bool Gf::same(const Gf& o) const {
  return p_.value == o.p_.value && k_ == o.k_ && modulus_ == o.modulus_;
}

Fe Gf::zero() const {
  return Fe(shared_from_this(), std::vector<std::uint32_t>(k_, 0));
}

Fe Gf::one() const { return from_int(1); }

Fe Gf::from_int(std::uint64_t v) const {
  std::vector<std::uint32_t> c(k_, 0);
  c[0] = static_cast<std::uint32_t>(v % p_.value);
  return Fe(shared_from_this(), std::move(c));
}

Fe Gf::element(std::uint64_t index) const {
  if (index >= order_) throw std::invalid_argument("element index out of range");
  std::vector<std::uint32_t> c(k_, 0);
  for (unsigned i = 0; i < k_ && index > 0; ++i) {
    c[i] = static_cast<std::uint32_t>(index % p_.value);
    index /= p_.value;
  }
  return Fe(shared_from_this(), std::move(c));
}

Fe Gf::make_element(std::vector<std::uint32_t> coords) const {
  if (coords.size() != k_) throw std::invalid_argument("coordinate vector has wrong length");
  for (auto c : coords)
    if (c >= p_.value) throw std::invalid_argument("coordinate out of range");
  return Fe(shared_from_this(), std::move(coords));
}

std::uint64_t Gf::index_of(const Fe& x) const {
  if (!x.field() || !x.field()->same(*this))
    throw std::invalid_argument("element does not belong to this field");
  std::uint64_t idx = 0;
  for (auto it = x.coords().rbegin(); it != x.coords().rend(); ++it) idx = idx * p_.value + *it;
  return idx;
}

bool Fe::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](std::uint32_t c) { return c == 0; });
}

bool Fe::is_one() const {
  if (!field_) throw std::logic_error("detached field element");
  return *this == field_->one();
}

Fe Fe::operator-() const {
  if (!field_) throw std::logic_error("detached field element");
  const std::uint64_t p = field_->p();
  Fe r = *this;
  for (auto& c : r.coords_) c = static_cast<std::uint32_t>((p - c) % p);
  return r;
}

Fe& Fe::operator+=(const Fe& o) {
  require_same_field(*this, o);
  const std::uint64_t p = field_->p();
  for (std::size_t i = 0; i < coords_.size(); ++i)
    coords_[i] = static_cast<std::uint32_t>((coords_[i] + o.coords_[i]) % p);
  return *this;
}

Fe& Fe::operator-=(const Fe& o) {
  require_same_field(*this, o);
  const std::uint64_t p = field_->p();
  for (std::size_t i = 0; i < coords_.size(); ++i)
    coords_[i] = static_cast<std::uint32_t>((coords_[i] + p - o.coords_[i]) % p);
  return *this;
}

Fe& Fe::operator*=(const Fe& o) {
  require_same_field(*this, o);
  const std::uint64_t p = field_->p();
  const unsigned k = field_->k();
  std::vector<std::uint32_t> prod(2 * k - 1, 0);
  for (unsigned i = 0; i < k; ++i) {
    if (coords_[i] == 0) continue;
    for (unsigned j = 0; j < k; ++j)
      prod[i + j] = static_cast<std::uint32_t>(
          (prod[i + j] + static_cast<std::uint64_t>(coords_[i]) * o.coords_[j]) % p);
  }
  Poly rem = poly_rem(std::move(prod), field_->modulus(), p);
  rem.resize(k, 0);
  coords_ = std::move(rem);
  return *this;
}

bool operator==(const Fe& a, const Fe& b) {
  if (!a.field() && !b.field()) return true;
  require_same_field(a, b);
  return a.coords() == b.coords();
}

Fe inv(const Fe& x) {
  if (!x.field()) throw std::logic_error("detached field element");
  if (x.is_zero()) throw std::domain_error("division by zero in GF(p^k)");
  return pow(x, x.field()->order() - 2);
}

Fe pow(Fe base, std::uint64_t e) {
  if (!base.field()) throw std::logic_error("detached field element");
  Fe r = base.field()->one();
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

std::string render(const Fe& x) {
  if (!x.field()) throw std::logic_error("detached field element");
  if (x.field()->k() == 1) return std::to_string(x.coords()[0]);
  std::string s = "[";
  for (std::size_t i = 0; i < x.coords().size(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(x.coords()[i]);
  }
  return s + "]";
}

std::optional<Fe> find_root(const std::vector<Fe>& poly) {
  if (poly.empty()) throw std::invalid_argument("zero polynomial");
  GfPtr f;
  bool nonzero = false;
  for (const auto& c : poly) {
    if (!c.field()) throw std::invalid_argument("detached coefficient");
    if (!f) f = c.field();
    if (!f->same(*c.field())) throw std::invalid_argument("mixed-field polynomial");
    nonzero = nonzero || !c.is_zero();
  }
  if (!nonzero) throw std::invalid_argument("zero polynomial");
  for (std::uint64_t idx = 0; idx < f->order(); ++idx) {
    Fe x = f->element(idx);
    Fe v = f->zero();
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) v = v * x + *it;
    if (v.is_zero()) return x;
  }
  return std::nullopt;
}

std::vector<std::uint32_t> find_irreducible(Prime p, unsigned k) {
  if (k == 1) return {0, 1};
  auto it = builtin_moduli().find({p.value, k});
  if (it != builtin_moduli().end()) return it->second;
  std::uint64_t count = 1;
  for (unsigned i = 0; i < k; ++i) count *= p.value;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    Poly m(k + 1, 0);
    std::uint64_t v = idx;
    for (unsigned i = 0; i < k; ++i) {
      m[i] = static_cast<std::uint32_t>(v % p.value);
      v /= p.value;
    }
    m[k] = 1;
    if (poly_irreducible(m, p.value)) return m;
  }
  throw std::logic_error("no irreducible polynomial found");  // unreachable
}

FieldEmbedding::FieldEmbedding(GfPtr from, GfPtr to) : from_(std::move(from)), to_(std::move(to)) {
  if (from_->p() != to_->p() || to_->k() % from_->k() != 0)
    throw std::invalid_argument("no embedding: target is not an extension of source");
  std::vector<Fe> lifted;
  lifted.reserve(from_->modulus().size());
  for (auto c : from_->modulus()) lifted.push_back(to_->from_int(c));
  auto root = find_root(lifted);
  if (!root) throw std::logic_error("source modulus has no root in target field");
  gen_image_ = *root;
}

Fe FieldEmbedding::map(const Fe& x) const {
  if (!x.field() || !x.field()->same(*from_))
    throw std::invalid_argument("element does not belong to the source field");
  Fe v = to_->zero();
  for (auto it = x.coords().rbegin(); it != x.coords().rend(); ++it)
    v = v * gen_image_ + to_->from_int(*it);
  return v;
}

}  // namespace loophopf
