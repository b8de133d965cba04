#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "loophopf/endo.hpp"
#include "loophopf/loop.hpp"

namespace loophopf {

/// Provenance metadata carried into table files.
struct FamilyTag {
  std::string name;
  std::optional<std::uint32_t> n;
  std::optional<std::uint32_t> d;
  friend bool operator==(const FamilyTag&, const FamilyTag&) = default;
};

/// Structure constants of a candidate Hopf product on k-loop_N:
/// entry(a, b) = a_a * a_b.  Freshly constructed tables carry the forced unit
/// row and column (a_0 is the unit); every other entry starts at zero.
class MultTable {
 public:
  MultTable(GfPtr field, std::size_t N);

  std::size_t dim() const { return N_; }
  const GfPtr& field() const { return field_; }

  const LoopElement& entry(std::size_t a, std::size_t b) const;
  void set_entry(std::size_t a, std::size_t b, LoopElement v);

  friend bool operator==(const MultTable& a, const MultTable& b);
  friend bool operator!=(const MultTable& a, const MultTable& b) { return !(a == b); }

  std::optional<FamilyTag> family;

 private:
  GfPtr field_;
  std::size_t N_;
  std::vector<LoopElement> entries_;
};

/// Bilinear extension of the table to arbitrary elements.
LoopElement multiply(const MultTable& t, const LoopElement& x, const LoopElement& y);

/// Entrywise product on the tensor square: (a (x) b)(c (x) d) = ac (x) bd.
TensorElement multiply(const MultTable& t, const TensorElement& x, const TensorElement& y);

/// x^e through the table; e = 0 gives a_0.
LoopElement power(const MultTable& t, const LoopElement& x, std::uint64_t e);

/// x^p, p the field characteristic.
LoopElement frobenius(const MultTable& t, const LoopElement& x);

/// Column vector y = m x of a loop element under a linear endomorphism.
LoopElement apply_matrix(const FeMat& m, const LoopElement& x);

/// Pullback of the product along the coalgebra automorphism f:
/// entry'(a, b) = f^{-1}(f(a_a) * f(a_b)), so f is an algebra isomorphism
/// from the returned table to t.  Requires is_automorphism(f).
MultTable conjugate(const MultTable& t, const LambdaSeq& f);

/// Coefficientwise image of the table under a field embedding.
MultTable map_table(const MultTable& t, const FieldEmbedding& emb);

}  // namespace loophopf
