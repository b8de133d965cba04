#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "loophopf/table.hpp"

namespace loophopf {

struct FamilyParams {
  FamilyParams(Prime p, std::uint32_t n, std::uint32_t d);
  Prime p;
  std::uint32_t n;
  std::uint32_t d;
};

/// Monomial reduction for the L(n,d) relations: repeatedly, at the largest
/// index i with e_i >= p, subtract p and (for i >= d) add 1 at i - d; an
/// overflow below index d collapses to zero (absent result).
std::optional<std::vector<std::uint32_t>> reduce(std::vector<std::uint32_t> e, Prime p,
                                                 std::uint32_t d);

/// Graded product table: a_a * a_b = C(a+b, a) a_{a+b}, truncated at p^n.
MultTable build_graded(Prime p, std::uint32_t n, GfPtr field = nullptr);

/// (kZ_{p^n})^* on the path basis (dual of k[u]/(u^{p^n}) with
/// Delta(u) = u(x)1 + 1(x)u + u(x)u).
MultTable build_dual_cyclic(Prime p, std::uint32_t n, GfPtr field = nullptr);

/// The L(n,d) table.  Tries the monomial normal form first; when that fails
/// the full verifier, falls back to the dual of a height-(d+1) formal group
/// law, which satisfies F = V^d on the nose.  The emitted table is always
/// re-verified; failure throws.
MultTable build_Lnd(const FamilyParams& params, GfPtr field = nullptr);

/// The published 4-dimensional "non-commutative" structure at p = 2
/// (xy - yx = x, x^2 = y^2 = 0, Delta(y) = 1(x)y + y(x)1 + x(x)x), realized
/// literally.  Those relations are inconsistent: in any associative algebra
/// with [x,y] = bx and y^2 = cx (both memberships forced by Delta), char 2
/// gives [x, y^2] = b(xy + yx) = b^2 x = 0, so b = 0 -- and exhausting all
/// multiplication tables on k-loop_4 over GF(2) confirms every Hopf
/// structure is commutative.  The emitted table therefore fails
/// associativity at (1,2,2) while exhibiting the intended commutativity
/// failure at (1,2); the verifier reports both.
MultTable build_nc2(GfPtr field = nullptr);

struct RelationReport {
  bool commutation;      // generator pairs a_{p^i} commute
  bool low_powers;       // a_{p^i}^p = 0 for i < d
  bool high_powers;      // a_{p^i}^p = a_{p^{i-d}} for i >= d
  bool frobenius_is_vd;  // F = V^d on every basis path
  bool ok() const { return commutation && low_powers && high_powers && frobenius_is_vd; }
};

RelationReport relation_suite(const MultTable& t, const FamilyParams& params);

namespace fgl {

/// Truncated bivariate series over GF(p): row-major N x N grid,
/// grid[x * N + y] = coefficient of X^x Y^y.
using Grid = std::vector<std::uint32_t>;

Grid grid_additive(std::size_t N);                  // X + Y
Grid grid_multiplicative(std::size_t N);            // X + Y + XY
/// Honda/Lubin-Tate law of the given height, computed by an exact rational
/// fixpoint of l(F) = l(X) + l(Y) with l(t) = sum_i t^{p^{h i}} / p^i, then
/// reduced mod p (every coefficient is p-integral).
Grid grid_honda(Prime p, unsigned height, std::size_t N);

Grid grid_mul(const Grid& a, const Grid& b, std::size_t N, std::uint64_t p);

/// The dual Hopf structure: entries[a][b] = sum_m [X^a Y^b](F^m) a_m.
MultTable table_from_grid(const Grid& F, Prime p, std::size_t N, GfPtr field);

}  // namespace fgl

}  // namespace loophopf
