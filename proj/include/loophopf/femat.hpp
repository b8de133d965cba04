#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "loophopf/gf.hpp"

namespace loophopf {

/// Dense matrix over GF(p^k); exact Gaussian elimination.
class FeMat {
 public:
  FeMat(GfPtr field, std::size_t rows, std::size_t cols);  // zero-filled
  static FeMat identity(GfPtr field, std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const GfPtr& field() const { return field_; }

  Fe& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Fe& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend FeMat operator*(const FeMat& a, const FeMat& b);
  friend bool operator==(const FeMat& a, const FeMat& b);
  friend bool operator!=(const FeMat& a, const FeMat& b) { return !(a == b); }

  std::size_t rank() const;
  std::optional<FeMat> inverse() const;
  /// Basis of {x : Ax = 0}, each vector of length cols().
  std::vector<std::vector<Fe>> nullspace() const;

 private:
  GfPtr field_;
  std::size_t rows_, cols_;
  std::vector<Fe> data_;
};

}  // namespace loophopf
