#include "loophopf/loop.hpp"

#include <algorithm>
#include <stdexcept>

namespace loophopf {

namespace {

void require_compatible(const GfPtr& a, const GfPtr& b) {
  if (!a || !b || !a->same(*b))
    throw std::invalid_argument("loop elements over different fields");
}

}  // namespace

LoopElement::LoopElement(GfPtr field, std::size_t bound)
    : field_(std::move(field)), bound_(bound) {
  if (!field_) throw std::invalid_argument("null field");
  if (bound_ == 0) throw std::invalid_argument("truncation bound must be >= 1");
}

LoopElement LoopElement::basis(GfPtr field, std::size_t bound, std::size_t m) {
  LoopElement x(std::move(field), bound);
  x.set_coeff(m, x.field_->one());
  return x;
}

Fe LoopElement::coeff(std::size_t m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? field_->zero() : it->second;
}

void LoopElement::set_coeff(std::size_t m, const Fe& c) {
  if (m >= bound_) throw std::out_of_range("path index exceeds truncation bound");
  require_compatible(field_, c.field());
  if (c.is_zero())
    terms_.erase(m);
  else
    terms_[m] = c;
}

void LoopElement::add_term(std::size_t m, const Fe& c) {
  if (m >= bound_) throw std::out_of_range("path index exceeds truncation bound");
  require_compatible(field_, c.field());
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

LoopElement LoopElement::operator-() const {
  LoopElement r(field_, bound_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

LoopElement& LoopElement::operator+=(const LoopElement& o) {
  require_compatible(field_, o.field_);
  bound_ = std::max(bound_, o.bound_);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

LoopElement& LoopElement::operator-=(const LoopElement& o) {
  require_compatible(field_, o.field_);
  bound_ = std::max(bound_, o.bound_);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

LoopElement operator*(const Fe& c, const LoopElement& x) {
  require_compatible(x.field_, c.field());
  LoopElement r(x.field_, x.bound_);
  if (c.is_zero()) return r;
  for (const auto& [m, v] : x.terms_) {
    Fe s = c * v;
    if (!s.is_zero()) r.terms_.emplace(m, s);
  }
  return r;
}

bool operator==(const LoopElement& a, const LoopElement& b) {
  require_compatible(a.field_, b.field_);
  return a.terms_ == b.terms_;
}

TensorElement::TensorElement(GfPtr field, std::size_t bound)
    : field_(std::move(field)), bound_(bound) {
  if (!field_) throw std::invalid_argument("null field");
  if (bound_ == 0) throw std::invalid_argument("truncation bound must be >= 1");
}

void TensorElement::add_term(std::size_t i, std::size_t j, const Fe& c) {
  if (i >= bound_ || j >= bound_) throw std::out_of_range("path index exceeds truncation bound");
  require_compatible(field_, c.field());
  auto key = std::make_pair(i, j);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_.emplace(key, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
  require_compatible(field_, o.field_);
  bound_ = std::max(bound_, o.bound_);
  for (const auto& [ij, c] : o.terms_) add_term(ij.first, ij.second, c);
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
  require_compatible(field_, o.field_);
  bound_ = std::max(bound_, o.bound_);
  for (const auto& [ij, c] : o.terms_) add_term(ij.first, ij.second, -c);
  return *this;
}

TensorElement operator*(const Fe& c, const TensorElement& x) {
  require_compatible(x.field_, c.field());
  TensorElement r(x.field_, x.bound_);
  if (c.is_zero()) return r;
  for (const auto& [ij, v] : x.terms_) {
    Fe s = c * v;
    if (!s.is_zero()) r.terms_.emplace(ij, s);
  }
  return r;
}

bool operator==(const TensorElement& a, const TensorElement& b) {
  require_compatible(a.field_, b.field_);
  return a.terms_ == b.terms_;
}

TensorElement tensor_of(const LoopElement& x, const LoopElement& y) {
  require_compatible(x.field(), y.field());
  TensorElement r(x.field(), std::max(x.bound(), y.bound()));
  for (const auto& [i, ci] : x.terms())
    for (const auto& [j, cj] : y.terms()) r.add_term(i, j, ci * cj);
  return r;
}

TensorElement comult(const LoopElement& x) {
  TensorElement r(x.field(), x.bound());
  for (const auto& [n, c] : x.terms())
    for (std::size_t i = 0; i <= n; ++i) r.add_term(i, n - i, c);
  return r;
}

Fe counit(const LoopElement& x) { return x.coeff(0); }

bool is_primitive(const LoopElement& x) {
  TensorElement expected(x.field(), x.bound());
  for (const auto& [m, c] : x.terms()) {
    expected.add_term(m, 0, c);
    expected.add_term(0, m, c);
  }
  return comult(x) == expected;
}

LoopElement component(const LoopElement& x, std::size_t i) {
  LoopElement r(x.field(), x.bound());
  for (const auto& [m, c] : x.terms())
    if (m >= i) r.add_term(m - i, c);
  return r;
}

LoopElement verschiebung(const LoopElement& x) {
  const std::uint64_t p = x.field()->p();
  LoopElement r(x.field(), x.bound());
  for (const auto& [m, c] : x.terms())
    if (m % p == 0) r.add_term(m / p, c);
  return r;
}

LoopElement truncate(const LoopElement& x, std::size_t M) {
  if (M > x.bound()) throw std::invalid_argument("truncate target exceeds bound");
  LoopElement r(x.field(), M);
  for (const auto& [m, c] : x.terms())
    if (m < M) r.add_term(m, c);
  return r;
}

std::string render(const LoopElement& x) {
  if (x.is_zero()) return "0";
  std::string s;
  for (const auto& [m, c] : x.terms()) {
    if (!s.empty()) s += " + ";
    s += render(c) + "*a" + std::to_string(m);
  }
  return s;
}

}  // namespace loophopf
