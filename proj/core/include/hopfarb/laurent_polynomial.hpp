#pragma once

#include <span>
#include <string>
#include <vector>

#include "hopfarb/exact_linalg.hpp"

namespace hopfarb {

// Integer Laurent polynomial in t. Stored trimmed: coefficients()[0] is the
// coefficient of t^lowest_exponent() and both end coefficients are nonzero.
// The zero polynomial has no coefficients and lowest exponent 0.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  LaurentPolynomial(long lowest_exponent, std::vector<BigInt> coefficients);

  static LaurentPolynomial monomial(BigInt c, long exponent);

  // Coefficients of the unique polynomial of degree < values.size() taking
  // values[k] at t = k, k = 0, 1, ...; throws DomainError if that polynomial
  // does not have integer coefficients.
  static LaurentPolynomial interpolate(std::span<const BigInt> values);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  long lowest_exponent() const noexcept { return lowest_; }
  long highest_exponent() const noexcept {
    return lowest_ + static_cast<long>(coeffs_.size()) - 1;
  }
  const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }
  BigInt coefficient(long exponent) const;

  // Value at t = +1 or t = -1, where negative powers stay integral.
  BigInt evaluate_at_unit(int unit) const;
  Rational evaluate(const Rational& t) const;

  // Representative of the class modulo units +-t^k: lowest exponent 0 and a
  // positive leading (highest-degree) coefficient.
  LaurentPolynomial normalized() const;

  // Descending exponents, e.g. "t^2 - 3*t + 1"; "0" for the zero polynomial.
  std::string to_string() const;

  friend LaurentPolynomial operator+(const LaurentPolynomial&,
                                     const LaurentPolynomial&);
  friend LaurentPolynomial operator-(const LaurentPolynomial&,
                                     const LaurentPolynomial&);
  friend LaurentPolynomial operator*(const LaurentPolynomial&,
                                     const LaurentPolynomial&);
  friend LaurentPolynomial operator-(const LaurentPolynomial&);
  friend bool operator==(const LaurentPolynomial&,
                         const LaurentPolynomial&) = default;

 private:
  void trim();

  long lowest_ = 0;
  std::vector<BigInt> coeffs_;
};

}  // namespace hopfarb
