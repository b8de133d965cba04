#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "loophopf/femat.hpp"
#include "loophopf/loop.hpp"

namespace loophopf {

/// A coalgebra endomorphism of k-loop encoded by its lambda-sequence
/// (lambda_1, ..., lambda_L); indices beyond L are zero.  The sequence is the
/// series s(t) = sum_i lambda_i t^i, and the a_r-coefficient of f(a_n) is the
/// t^n-coefficient of s(t)^r.
class LambdaSeq {
 public:
  LambdaSeq(GfPtr field, std::vector<Fe> lambdas);
  static LambdaSeq identity(GfPtr field);

  const GfPtr& field() const { return field_; }
  std::size_t size() const { return lambdas_.size(); }
  const std::vector<Fe>& entries() const { return lambdas_; }
  /// lambda_i, 1-based; zero for i == 0 or i > size().
  Fe lambda(std::size_t i) const;

  /// Equality of the encoded maps (trailing zeros are immaterial).
  friend bool operator==(const LambdaSeq& a, const LambdaSeq& b);
  friend bool operator!=(const LambdaSeq& a, const LambdaSeq& b) { return !(a == b); }

 private:
  GfPtr field_;
  std::vector<Fe> lambdas_;
};

/// f(a_n), an element of k-loop_{n+1}.
LoopElement evaluate(const LambdaSeq& f, std::size_t n);

/// Linear extension of f to an arbitrary element.
LoopElement apply(const LambdaSeq& f, const LoopElement& x);

/// N x N matrix with column m = coefficient vector of f(a_m).
FeMat matrix(const LambdaSeq& f, std::size_t N);

/// Whether a square matrix (columns = images of basis paths) is a coalgebra
/// map: fixes a_0 up to counit, (f x f)Delta = Delta f, eps f = eps.
bool is_coalgebra_map(const FeMat& m);

/// f after g: the series substitution s_f(s_g(t)), computed exactly.
LambdaSeq compose(const LambdaSeq& f, const LambdaSeq& g);

/// lambda_1 != 0 (equivalent to invertibility on every truncation).
bool is_automorphism(const LambdaSeq& f);

/// Inverse endomorphism of k-loop_N (length N-1).  Requires lambda_1 != 0.
LambdaSeq invert(const LambdaSeq& f, std::size_t N);

/// Zero-pads so the sequence determines an endomorphism of k-loop_M.
LambdaSeq extend(const LambdaSeq& f, std::size_t M);

/// Comma-joined coefficients, trailing zeros trimmed; zero map renders "0".
std::string render(const LambdaSeq& f);

}  // namespace loophopf
