#include "loophopf/femat.hpp"

#include <stdexcept>
#include <utility>

namespace loophopf {

FeMat::FeMat(GfPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_->zero()) {}

FeMat FeMat::identity(GfPtr field, std::size_t n) {
  FeMat m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = m.field_->one();
  return m;
}

FeMat operator*(const FeMat& a, const FeMat& b) {
  if (a.cols_ != b.rows_ || !a.field_->same(*b.field_))
    throw std::invalid_argument("matrix dimension/field mismatch");
  FeMat r(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Fe& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) r.at(i, j) += aik * b.at(k, j);
    }
  return r;
}

bool operator==(const FeMat& a, const FeMat& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_->same(*b.field_) &&
         a.data_ == b.data_;
}

namespace {

// Row echelon in place; returns pivot columns.
std::vector<std::size_t> echelon(FeMat& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m.at(sel, col).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(row, j), m.at(sel, j));
    Fe scale = inv(m.at(row, col));
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(row, j) *= scale;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m.at(i, col).is_zero()) continue;
      Fe factor = m.at(i, col);
      for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) -= factor * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t FeMat::rank() const {
  FeMat work = *this;
  return echelon(work).size();
}

std::optional<FeMat> FeMat::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse of a non-square matrix");
  FeMat aug(field_, rows_, 2 * cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_ + i) = field_->one();
  }
  auto pivots = echelon(aug);
  if (pivots.size() != rows_ || (rows_ > 0 && pivots.back() >= cols_)) return std::nullopt;
  for (std::size_t i = 0; i < rows_; ++i)
    if (pivots[i] != i) return std::nullopt;
  FeMat inv_m(field_, rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) inv_m.at(i, j) = aug.at(i, cols_ + j);
  return inv_m;
}

std::vector<std::vector<Fe>> FeMat::nullspace() const {
  FeMat work = *this;
  auto pivots = echelon(work);
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Fe>> basis;
  for (std::size_t free_col = 0; free_col < cols_; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Fe> v(cols_, field_->zero());
    v[free_col] = field_->one();
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -work.at(r, free_col);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace loophopf
