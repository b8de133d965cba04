#pragma once

#include <cstdint>
#include <vector>

#include "loophopf/table.hpp"
#include "loophopf/verify.hpp"

namespace loophopf {

/// Integrals of a (verified) bialgebra table.
struct IntegralInfo {
  /// The explicit candidate t = prod_{0<l<N} (a_0 - a_l^{p-1}).
  LoopElement t;
  Fe t_counit;        // always 1: eps is an algebra map killing every a_l
  bool t_is_integral; // whether x * t = eps(x) t holds for all basis x
  std::vector<LoopElement> basis;  // solved basis of the space of left integrals
  std::size_t dim() const { return basis.size(); }
  bool has_counit_one() const;  // some integral has nonzero counit
};

/// Explicit product candidate plus the solved left-integral space
/// {x : a_a * x = eps(a_a) x for all a}.
IntegralInfo integral(const MultTable& t);

/// Integral with nonzero counit exists (Larson--Sweedler criterion).
bool is_semisimple(const MultTable& t);

/// Every non-unit basis path is nilpotent (iterated p-th powers, capped at
/// dim(t) iterations).
bool is_local(const MultTable& t);

/// Frobenius-rank classifier.  Requires a table passing the full verifier;
/// returns non-commutative / unclassified diagnostics instead of guessing.
Classification classify(const MultTable& t);

struct NormalizeResult {
  MultTable table;       // normalized table (over an extension if required)
  std::uint32_t tag;     // alpha_1^p = tag * alpha_1 afterwards; tag in {0,1}
  unsigned ext_degree;   // 1 when no extension was needed
  Fe lambda;             // the original scalar with alpha_1^p = lambda alpha_1
};

/// Normalization of a verified dimension-p table: rescale alpha_1 by a
/// nonzero root of lambda x^p - x so that alpha_1^p becomes 0 or alpha_1,
/// passing to the minimal field extension when the ground field has no
/// such root.
NormalizeResult normalize_dim_p(const MultTable& t);

/// All multiplication tables on k-loop_p over the given field that pass the
/// full verifier (bialgebra axioms + two-sided antipode).  The search fixes
/// the unit row/column and prunes by eps- and Delta-multiplicativity.
std::vector<MultTable> enumerate_dim_p(const GfPtr& field);

}  // namespace loophopf
