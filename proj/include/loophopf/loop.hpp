#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>

#include "loophopf/gf.hpp"

namespace loophopf {

/// Element of the truncated loop path coalgebra k-loop_N.  Basis paths are
/// a_0 (the empty path / unit group-like) through a_{N-1}; coefficients are
/// sparse and never stored when zero, so equality is structural.
class LoopElement {
 public:
  LoopElement(GfPtr field, std::size_t bound);
  static LoopElement basis(GfPtr field, std::size_t bound, std::size_t m);

  std::size_t bound() const { return bound_; }
  const GfPtr& field() const { return field_; }
  const std::map<std::size_t, Fe>& terms() const { return terms_; }

  Fe coeff(std::size_t m) const;
  void set_coeff(std::size_t m, const Fe& c);
  void add_term(std::size_t m, const Fe& c);

  bool is_zero() const { return terms_.empty(); }

  LoopElement operator-() const;
  LoopElement& operator+=(const LoopElement& o);
  LoopElement& operator-=(const LoopElement& o);
  friend LoopElement operator+(LoopElement a, const LoopElement& b) { return a += b; }
  friend LoopElement operator-(LoopElement a, const LoopElement& b) { return a -= b; }
  friend LoopElement operator*(const Fe& c, const LoopElement& x);

  /// Structural equality of coefficients (bounds need not match: the natural
  /// inclusions k-loop_N -> k-loop_M identify elements by support).
  friend bool operator==(const LoopElement& a, const LoopElement& b);
  friend bool operator!=(const LoopElement& a, const LoopElement& b) { return !(a == b); }

 private:
  GfPtr field_;
  std::size_t bound_;
  std::map<std::size_t, Fe> terms_;
};

/// Element of the tensor square of k-loop_N, sparse over basis pairs.
class TensorElement {
 public:
  TensorElement(GfPtr field, std::size_t bound);

  std::size_t bound() const { return bound_; }
  const GfPtr& field() const { return field_; }
  const std::map<std::pair<std::size_t, std::size_t>, Fe>& terms() const { return terms_; }

  void add_term(std::size_t i, std::size_t j, const Fe& c);
  bool is_zero() const { return terms_.empty(); }

  TensorElement& operator+=(const TensorElement& o);
  TensorElement& operator-=(const TensorElement& o);
  friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
  friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
  friend TensorElement operator*(const Fe& c, const TensorElement& x);

  friend bool operator==(const TensorElement& a, const TensorElement& b);
  friend bool operator!=(const TensorElement& a, const TensorElement& b) { return !(a == b); }

 private:
  GfPtr field_;
  std::size_t bound_;
  std::map<std::pair<std::size_t, std::size_t>, Fe> terms_;
};

/// x tensor y.
TensorElement tensor_of(const LoopElement& x, const LoopElement& y);

/// Deconcatenation comultiplication: Delta(a_n) = sum_{i=0}^{n} a_i (x) a_{n-i}.
TensorElement comult(const LoopElement& x);

/// Coefficient of a_0.
Fe counit(const LoopElement& x);

/// Whether Delta(x) = x (x) a_0 + a_0 (x) x.
bool is_primitive(const LoopElement& x);

/// The component p_(i) with Delta(x) = sum_i a_i (x) p_(i).
LoopElement component(const LoopElement& x, std::size_t i);

/// Verschiebung: V(a_m) = a_{m/p} when p | m, else 0 (so V(a_0) = a_0).
LoopElement verschiebung(const LoopElement& x);

/// Drops all coefficients with index >= M.  Requires M <= bound.
LoopElement truncate(const LoopElement& x, std::size_t M);

/// "1*a0 + 2*a3"; the zero element renders as "0".
std::string render(const LoopElement& x);

}  // namespace loophopf
