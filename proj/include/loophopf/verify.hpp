#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "loophopf/femat.hpp"
#include "loophopf/table.hpp"

namespace loophopf {

enum class Check { Pass, Fail, Skipped };

/// Outcome of one axiom; a failure carries the lexicographically smallest
/// failing tuple of path indices.
struct AxiomResult {
  Check status = Check::Skipped;
  std::vector<std::size_t> witness;

  bool passed() const { return status == Check::Pass; }
};

enum class ClassKind { Family, NonCommutative, Unclassified };

/// Classifier outcome: L(n,d) parameters or a diagnostic bucket.
struct Classification {
  ClassKind kind = ClassKind::Unclassified;
  std::uint32_t n = 0;
  std::uint32_t d = 0;

  std::string text() const;
  friend bool operator==(const Classification&, const Classification&) = default;
};

struct HopfReport {
  AxiomResult associativity, unit, delta_mult, eps_mult;
  AxiomResult antipode_left, antipode_right;
  AxiomResult commutative, uniserial;
  std::optional<FeMat> antipode_matrix;
  std::optional<bool> semisimple, local;
  std::optional<Classification> classification;

  /// The Hopf axioms proper (commutativity and uniseriality are reported,
  /// not required).
  bool hopf_ok() const {
    return associativity.passed() && unit.passed() && delta_mult.passed() &&
           eps_mult.passed() && antipode_left.passed() && antipode_right.passed();
  }
};

/// Associativity, unit, Delta/eps-multiplicativity, commutativity and (when
/// N is a p-power) uniseriality, checked exactly on all basis tuples.
HopfReport verify_bialgebra(const MultTable& t);

/// verify_bialgebra plus the two-sided antipode, the semisimple/local flags
/// and the classification (flags and classification only when the Hopf
/// axioms hold).
HopfReport verify_table(const MultTable& t);

struct AntipodeResult {
  FeMat matrix;
  AxiomResult left, right;
};

/// Antipode candidate from the triangular convolution recursion
/// S(a_m) = -a_m - sum_{0<l<m} S(a_l) * a_{m-l}, with both convolution
/// identities verified rather than assumed.  Requires the bialgebra axioms.
AntipodeResult antipode(const MultTable& t);

std::string render(const HopfReport& r);

}  // namespace loophopf
