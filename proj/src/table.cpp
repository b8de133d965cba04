#include "loophopf/table.hpp"

#include <stdexcept>

namespace loophopf {

MultTable::MultTable(GfPtr field, std::size_t N) : field_(std::move(field)), N_(N) {
  if (!field_) throw std::invalid_argument("null field");
  if (N_ == 0) throw std::invalid_argument("table dimension must be >= 1");
  entries_.reserve(N_ * N_);
  for (std::size_t a = 0; a < N_; ++a)
    for (std::size_t b = 0; b < N_; ++b) {
      if (a == 0)
        entries_.push_back(LoopElement::basis(field_, N_, b));
      else if (b == 0)
        entries_.push_back(LoopElement::basis(field_, N_, a));
      else
        entries_.push_back(LoopElement(field_, N_));
    }
}

const LoopElement& MultTable::entry(std::size_t a, std::size_t b) const {
  if (a >= N_ || b >= N_) throw std::out_of_range("table index out of range");
  return entries_[a * N_ + b];
}

void MultTable::set_entry(std::size_t a, std::size_t b, LoopElement v) {
  if (a >= N_ || b >= N_) throw std::out_of_range("table index out of range");
  if (!v.field()->same(*field_)) throw std::invalid_argument("entry over a different field");
  if (!v.terms().empty() && v.terms().rbegin()->first >= N_)
    throw std::invalid_argument("entry support exceeds table dimension");
  entries_[a * N_ + b] = truncate(v, N_);
}

bool operator==(const MultTable& a, const MultTable& b) {
  if (a.N_ != b.N_ || !a.field_->same(*b.field_)) return false;
  return a.entries_ == b.entries_;
}

LoopElement multiply(const MultTable& t, const LoopElement& x, const LoopElement& y) {
  if (!x.field()->same(*t.field()) || !y.field()->same(*t.field()))
    throw std::invalid_argument("operands over a different field");
  if (x.bound() > t.dim() || y.bound() > t.dim())
    throw std::invalid_argument("operand bound exceeds table dimension");
  LoopElement out(t.field(), t.dim());
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : y.terms()) out += (ca * cb) * t.entry(a, b);
  return out;
}

TensorElement multiply(const MultTable& t, const TensorElement& x, const TensorElement& y) {
  TensorElement out(t.field(), t.dim());
  for (const auto& [ij, cx] : x.terms())
    for (const auto& [uv, cy] : y.terms()) {
      const LoopElement& left = t.entry(ij.first, uv.first);
      const LoopElement& right = t.entry(ij.second, uv.second);
      Fe scale = cx * cy;
      if (scale.is_zero()) continue;
      for (const auto& [m1, c1] : left.terms())
        for (const auto& [m2, c2] : right.terms()) out.add_term(m1, m2, scale * c1 * c2);
    }
  return out;
}

LoopElement power(const MultTable& t, const LoopElement& x, std::uint64_t e) {
  LoopElement out = LoopElement::basis(t.field(), t.dim(), 0);
  for (std::uint64_t i = 0; i < e; ++i) out = multiply(t, out, x);
  return out;
}

LoopElement frobenius(const MultTable& t, const LoopElement& x) {
  return power(t, x, t.field()->p());
}

LoopElement apply_matrix(const FeMat& m, const LoopElement& x) {
  if (m.rows() != m.cols() || m.rows() < x.bound())
    throw std::invalid_argument("matrix does not act on this truncation");
  LoopElement out(x.field(), x.bound());
  for (const auto& [col, c] : x.terms())
    for (std::size_t r = 0; r < x.bound(); ++r) out.add_term(r, c * m.at(r, col));
  return out;
}

MultTable conjugate(const MultTable& t, const LambdaSeq& f) {
  if (!is_automorphism(f)) throw std::invalid_argument("conjugation needs an automorphism");
  const std::size_t N = t.dim();
  FeMat m = matrix(f, N);
  auto minv = m.inverse();
  if (!minv) throw std::logic_error("automorphism matrix must invert");
  MultTable out(t.field(), N);
  out.family = t.family;
  for (std::size_t a = 1; a < N; ++a)
    for (std::size_t b = 1; b < N; ++b) {
      LoopElement fa = apply_matrix(m, LoopElement::basis(t.field(), N, a));
      LoopElement fb = apply_matrix(m, LoopElement::basis(t.field(), N, b));
      out.set_entry(a, b, apply_matrix(*minv, multiply(t, fa, fb)));
    }
  return out;
}

MultTable map_table(const MultTable& t, const FieldEmbedding& emb) {
  const std::size_t N = t.dim();
  MultTable out(emb.to(), N);
  out.family = t.family;
  for (std::size_t a = 1; a < N; ++a)
    for (std::size_t b = 1; b < N; ++b) {
      LoopElement v(emb.to(), N);
      for (const auto& [m, c] : t.entry(a, b).terms()) v.set_coeff(m, emb.map(c));
      out.set_entry(a, b, std::move(v));
    }
  return out;
}

}  // namespace loophopf
