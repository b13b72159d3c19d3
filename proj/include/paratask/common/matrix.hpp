#pragma once

#include <cassert>
#include <span>
#include <vector>

namespace paratask {

// Row-major dense matrix of feature values.
class FeatureMatrix {
 public:
  FeatureMatrix() = default;
  explicit FeatureMatrix(std::size_t cols) : cols_(cols) {}

  std::size_t rows() const noexcept { return cols_ == 0 ? 0 : data_.size() / cols_; }
  std::size_t cols() const noexcept { return cols_; }

  void reserve_rows(std::size_t n) { data_.reserve(n * cols_); }

  void add_row(std::span<const double> row) {
    assert(row.size() == cols_);
    data_.insert(data_.end(), row.begin(), row.end());
  }

  std::span<const double> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }

  double at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

 private:
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

}  // namespace paratask
