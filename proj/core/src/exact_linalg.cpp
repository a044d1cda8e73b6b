#include "hopfarb/exact_linalg.hpp"

#include <utility>

#include "hopfarb/errors.hpp"

namespace hopfarb {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DomainError("ragged matrix literal");
    for (long long x : r) data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

bool IntMatrix::symmetric() const {
  if (!square()) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = r + 1; c < cols_; ++c) {
      if ((*this)(r, c) != (*this)(c, r)) return false;
    }
  }
  return true;
}

namespace {

void require_same_shape(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DomainError("matrix shape mismatch");
  }
}

// Runs Bareiss elimination with row pivoting on m in place. Returns the rank;
// `sign` receives the parity of the row swaps.
std::size_t bareiss(IntMatrix& m, int& sign) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  BigInt prev = 1;
  std::size_t r = 0;
  sign = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t k = 0; k < cols; ++k) std::swap(m(p, k), m(r, k));
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t k = c + 1; k < cols; ++k) {
        m(i, k) = (m(r, c) * m(i, k) - m(i, c) * m(r, k)) / prev;
      }
      m(i, c) = 0;
    }
    prev = m(r, c);
    ++r;
  }
  return r;
}

}  // namespace

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  require_same_shape(a, b);
  IntMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  require_same_shape(a, b);
  IntMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw DomainError("matrix shape mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  }
  return out;
}

IntMatrix operator*(const BigInt& k, const IntMatrix& a) {
  IntMatrix out = a;
  for (auto& x : out.data_) x *= k;
  return out;
}

std::size_t rank(const IntMatrix& m) {
  IntMatrix work = m;
  int sign = 1;
  return bareiss(work, sign);
}

BigInt determinant(const IntMatrix& m) {
  if (!m.square()) throw DomainError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix work = m;
  int sign = 1;
  if (bareiss(work, sign) < n) return 0;
  return sign * work(n - 1, n - 1);
}

Inertia inertia(const IntMatrix& symmetric) {
  if (!symmetric.symmetric()) {
    throw DomainError("inertia requires a symmetric matrix");
  }
  const std::size_t n = symmetric.rows();
  std::vector<Rational> a(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = Rational(symmetric(i, j));
  }
  auto at = [&](std::size_t i, std::size_t j) -> Rational& { return a[i * n + j]; };
  auto swap_index = [&](std::size_t p, std::size_t q) {
    if (p == q) return;
    for (std::size_t k = 0; k < n; ++k) std::swap(at(p, k), at(q, k));
    for (std::size_t k = 0; k < n; ++k) std::swap(at(k, p), at(k, q));
  };

  Inertia out;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && at(p, p) == 0) ++p;
    if (p == n) {
      // No usable diagonal pivot. If an off-diagonal entry a_ij survives,
      // adding row/column j to row/column i makes the diagonal 2 a_ij != 0.
      std::size_t pi = n, pj = n;
      for (std::size_t i = k; i < n && pi == n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          if (at(i, j) != 0) {
            pi = i;
            pj = j;
            break;
          }
        }
      }
      if (pi == n) {
        out.zero += n - k;
        break;
      }
      for (std::size_t c = 0; c < n; ++c) at(pi, c) += at(pj, c);
      for (std::size_t r = 0; r < n; ++r) at(r, pi) += at(r, pj);
      p = pi;
    }
    swap_index(k, p);
    const Rational pivot = at(k, k);
    if (pivot > 0) {
      ++out.positive;
    } else {
      ++out.negative;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      if (at(i, k) == 0) continue;
      const Rational f = at(i, k) / pivot;
      for (std::size_t j = k; j < n; ++j) at(i, j) -= f * at(k, j);
    }
    // Row operations done; the matching column operations only clear column
    // k, since the trailing block is already the Schur complement.
    for (std::size_t i = k + 1; i < n; ++i) at(k, i) = 0;
  }
  return out;
}

}  // namespace hopfarb
