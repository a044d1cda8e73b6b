#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hopfarb {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Dense row-major integer matrix with arbitrary precision entries.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  IntMatrix transposed() const;
  bool symmetric() const;

  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(const BigInt& k, const IntMatrix& a);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

// Rank over the rationals, by fraction-free (Bareiss) elimination.
std::size_t rank(const IntMatrix& m);

// Determinant by Bareiss elimination; every intermediate division is exact.
// The 0x0 determinant is 1.
BigInt determinant(const IntMatrix& m);

struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;

  long signature() const noexcept {
    return static_cast<long>(positive) - static_cast<long>(negative);
  }
  std::size_t rank() const noexcept { return positive + negative; }

  friend bool operator==(const Inertia&, const Inertia&) = default;
};

// Sylvester inertia of a symmetric integer matrix, computed by symmetric
// (congruence) Gaussian elimination over the rationals.
Inertia inertia(const IntMatrix& symmetric);

}  // namespace hopfarb
