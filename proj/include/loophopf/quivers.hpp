#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "loophopf/combinat.hpp"

namespace loophopf {

/// Finite group given by an explicit Cayley table; closure, associativity,
/// identity and inverses are validated on construction.
class GroupTable {
 public:
  explicit GroupTable(std::vector<std::vector<unsigned>> cayley);

  unsigned order() const { return static_cast<unsigned>(cayley_.size()); }
  unsigned mul(unsigned a, unsigned b) const;
  unsigned identity() const { return identity_; }
  unsigned inverse(unsigned a) const;

  /// Conjugacy classes, each sorted ascending, ordered by smallest element.
  std::vector<std::vector<unsigned>> conjugacy_classes() const;

 private:
  std::vector<std::vector<unsigned>> cayley_;
  unsigned identity_ = 0;
  std::vector<unsigned> inverse_;
};

/// Ramification data: multiplicity r_C per conjugacy class, keyed by the
/// class's smallest element.
class RamificationData {
 public:
  RamificationData() = default;
  void set(unsigned class_rep, unsigned multiplicity) { mult_[class_rep] = multiplicity; }
  unsigned get(unsigned class_rep) const;
  const std::map<unsigned, unsigned>& entries() const { return mult_; }

 private:
  std::map<unsigned, unsigned> mult_;
};

struct Quiver {
  unsigned vertices = 0;
  /// (source, target) -> arrow multiplicity (>= 1 when present).
  std::map<std::pair<unsigned, unsigned>, unsigned> arrows;

  friend bool operator==(const Quiver&, const Quiver&) = default;
};

/// Q(G, r): vertices G; for each class C with r_C > 0, each c in C and each
/// x in G, r_C arrows x -> cx.  Keys of r must be class representatives.
Quiver build_hopf_quiver(const GroupTable& g, const RamificationData& r);

/// Adjacency-list text: "v -> w (xk)" lines sorted by (v, w).
std::string render(const Quiver& q);

/// All 0/1 sequences of length m+n with exactly m ones, in lexicographic
/// order (the thin splits D_m^{m+n}).
std::vector<std::vector<std::uint8_t>> thin_splits(unsigned m, unsigned n);

/// |D_m^{m+n}|, by explicit enumeration (= C(m+n, m)).
std::uint64_t thin_split_count(unsigned m, unsigned n);

/// The loop-quiver product coefficient: sums 1 over D_a^{a+b} mod p
/// (each thin split contributes the single path a_{a+b} with coefficient 1).
std::uint32_t thin_split_product_loop(unsigned a, unsigned b, Prime p);

}  // namespace loophopf
