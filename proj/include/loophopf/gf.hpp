#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "loophopf/combinat.hpp"

namespace loophopf {

class Gf;
using GfPtr = std::shared_ptr<const Gf>;

/// Element of GF(p^k) in the polynomial basis.  coords[i] multiplies x^i.
class Fe {
 public:
  Fe() = default;  // detached placeholder; any arithmetic throws

  const GfPtr& field() const { return field_; }
  const std::vector<std::uint32_t>& coords() const { return coords_; }
  bool is_zero() const;
  bool is_one() const;

  Fe operator-() const;
  Fe& operator+=(const Fe& o);
  Fe& operator-=(const Fe& o);
  Fe& operator*=(const Fe& o);

  friend Fe operator+(Fe a, const Fe& b) { return a += b; }
  friend Fe operator-(Fe a, const Fe& b) { return a -= b; }
  friend Fe operator*(Fe a, const Fe& b) { return a *= b; }
  friend bool operator==(const Fe& a, const Fe& b);
  friend bool operator!=(const Fe& a, const Fe& b) { return !(a == b); }

 private:
  friend class Gf;
  Fe(GfPtr field, std::vector<std::uint32_t> coords)
      : field_(std::move(field)), coords_(std::move(coords)) {}

  GfPtr field_;
  std::vector<std::uint32_t> coords_;
};

/// Field descriptor (p, k, modulus) with element factories.  Shared via GfPtr;
/// two descriptors with equal (p, k, modulus) are interchangeable.
class Gf : public std::enable_shared_from_this<Gf> {
 public:
  /// Built-in irreducible modulus (p in {2,3,5,7}, k <= 4).
  static GfPtr make(Prime p, unsigned k);
  /// Custom modulus: little-endian, length k+1, monic, irreducible over GF(p).
  static GfPtr make(Prime p, unsigned k, std::vector<std::uint32_t> modulus);

  std::uint64_t p() const { return p_.value; }
  unsigned k() const { return k_; }
  std::uint64_t order() const { return order_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  Prime prime() const { return p_; }
  bool same(const Gf& o) const;

  Fe zero() const;
  Fe one() const;
  /// Embeds v mod p into the prime subfield.
  Fe from_int(std::uint64_t v) const;
  /// Element with the given scan index: coords = base-p digits of the index.
  Fe element(std::uint64_t index) const;
  Fe make_element(std::vector<std::uint32_t> coords) const;
  std::uint64_t index_of(const Fe& x) const;

 private:
  friend class Fe;
  Gf(Prime p, unsigned k, std::vector<std::uint32_t> modulus);

  Prime p_;
  unsigned k_;
  std::uint64_t order_;
  std::vector<std::uint32_t> modulus_;
};

Fe inv(const Fe& x);
Fe pow(Fe base, std::uint64_t e);

/// "2" over a prime field, "[c0,...,c{k-1}]" otherwise.
std::string render(const Fe& x);

/// Smallest root in scan order of a nonzero polynomial over the coefficients'
/// field (poly little-endian), or absent if the field contains none.
std::optional<Fe> find_root(const std::vector<Fe>& poly);

/// Smallest (in coefficient scan order) monic irreducible of degree k over
/// GF(p); used when a normalization needs an extension with no built-in.
std::vector<std::uint32_t> find_irreducible(Prime p, unsigned k);

/// Ring embedding GF(p^k) -> GF(p^K) (k | K), determined by sending the
/// polynomial-basis generator to the smallest root of the source modulus.
class FieldEmbedding {
 public:
  FieldEmbedding(GfPtr from, GfPtr to);
  const GfPtr& from() const { return from_; }
  const GfPtr& to() const { return to_; }
  Fe map(const Fe& x) const;

 private:
  GfPtr from_;
  GfPtr to_;
  Fe gen_image_;
};

}  // namespace loophopf
