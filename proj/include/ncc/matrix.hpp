#pragma once

#include <vector>

#include "ncc/errors.hpp"

namespace ncc {

// Dense row-major matrix container over an arbitrary entry type.
template <class T>
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols, const T& fill)
      : r_(rows), c_(cols), d_(static_cast<std::size_t>(rows) * cols, fill) {}

  int rows() const { return r_; }
  int cols() const { return c_; }
  T& operator()(int i, int j) { return d_[static_cast<std::size_t>(i) * c_ + j]; }
  const T& operator()(int i, int j) const { return d_[static_cast<std::size_t>(i) * c_ + j]; }

  std::vector<T> col(int j) const {
    std::vector<T> v;
    v.reserve(r_);
    for (int i = 0; i < r_; ++i) v.push_back((*this)(i, j));
    return v;
  }
  void set_col(int j, const std::vector<T>& v) {
    for (int i = 0; i < r_; ++i) (*this)(i, j) = v[static_cast<std::size_t>(i)];
  }
  std::vector<T> row(int i) const {
    std::vector<T> v;
    v.reserve(c_);
    for (int j = 0; j < c_; ++j) v.push_back((*this)(i, j));
    return v;
  }

  Mat<T> transposed() const {
    Mat<T> m;
    m.r_ = c_;
    m.c_ = r_;
    m.d_.reserve(d_.size());
    for (int j = 0; j < c_; ++j)
      for (int i = 0; i < r_; ++i) m.d_.push_back((*this)(i, j));
    return m;
  }

  // Horizontal concatenation.
  static Mat<T> hcat(const Mat<T>& a, const Mat<T>& b) {
    require(a.rows() == b.rows(), Err::BadParameters, "hcat row mismatch");
    Mat<T> m;
    m.r_ = a.rows();
    m.c_ = a.cols() + b.cols();
    m.d_.reserve(static_cast<std::size_t>(m.r_) * m.c_);
    for (int i = 0; i < m.r_; ++i) {
      for (int j = 0; j < a.cols(); ++j) m.d_.push_back(a(i, j));
      for (int j = 0; j < b.cols(); ++j) m.d_.push_back(b(i, j));
    }
    return m;
  }

  bool operator==(const Mat<T>& o) const { return r_ == o.r_ && c_ == o.c_ && d_ == o.d_; }

 private:
  int r_{0}, c_{0};
  std::vector<T> d_;
};

}  // namespace ncc
