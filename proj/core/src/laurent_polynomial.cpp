#include "hopfarb/laurent_polynomial.hpp"

#include <algorithm>
#include <cstdlib>

#include "hopfarb/errors.hpp"

namespace hopfarb {

LaurentPolynomial::LaurentPolynomial(long lowest_exponent,
                                     std::vector<BigInt> coefficients)
    : lowest_(lowest_exponent), coeffs_(std::move(coefficients)) {
  trim();
}

LaurentPolynomial LaurentPolynomial::monomial(BigInt c, long exponent) {
  return LaurentPolynomial(exponent, {std::move(c)});
}

void LaurentPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  const auto first = std::find_if(coeffs_.begin(), coeffs_.end(),
                                  [](const BigInt& c) { return c != 0; });
  lowest_ += static_cast<long>(first - coeffs_.begin());
  coeffs_.erase(coeffs_.begin(), first);
  if (coeffs_.empty()) lowest_ = 0;
}

LaurentPolynomial LaurentPolynomial::interpolate(std::span<const BigInt> values) {
  const std::size_t m = values.size();
  // Newton divided differences on the nodes 0, 1, ..., m-1.
  std::vector<Rational> dd(values.begin(), values.end());
  for (std::size_t level = 1; level < m; ++level) {
    for (std::size_t i = m - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / Rational(static_cast<long>(level));
    }
  }
  // Horner expansion of sum dd[k] * prod_{j<k} (t - j) into monomials.
  std::vector<Rational> poly;
  for (std::size_t k = m; k-- > 0;) {
    // poly <- poly * (t - k) + dd[k]
    std::vector<Rational> next(poly.size() + 1, Rational(0));
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] -= poly[i] * static_cast<long>(k);
    }
    next[0] += dd[k];
    poly = std::move(next);
  }
  std::vector<BigInt> coeffs;
  coeffs.reserve(poly.size());
  for (const auto& c : poly) {
    if (denominator(c) != 1) {
      throw DomainError("interpolated polynomial is not integral");
    }
    coeffs.push_back(numerator(c));
  }
  return LaurentPolynomial(0, std::move(coeffs));
}

BigInt LaurentPolynomial::coefficient(long exponent) const {
  if (is_zero() || exponent < lowest_ || exponent > highest_exponent()) return 0;
  return coeffs_[static_cast<std::size_t>(exponent - lowest_)];
}

BigInt LaurentPolynomial::evaluate_at_unit(int unit) const {
  if (unit != 1 && unit != -1) throw DomainError("unit must be +1 or -1");
  BigInt sum = 0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const long e = lowest_ + static_cast<long>(i);
    const bool odd = (e % 2) != 0;
    sum += (unit == -1 && odd) ? -coeffs_[i] : coeffs_[i];
  }
  return sum;
}

Rational LaurentPolynomial::evaluate(const Rational& t) const {
  if (is_zero()) return 0;
  if (t == 0 && lowest_ < 0) throw DomainError("negative power of zero");
  Rational acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * t + Rational(coeffs_[i]);
  Rational scale = 1;
  for (long e = 0; e < std::abs(lowest_); ++e) scale *= t;
  return lowest_ >= 0 ? Rational(acc * scale) : Rational(acc / scale);
}

LaurentPolynomial LaurentPolynomial::normalized() const {
  if (is_zero()) return *this;
  LaurentPolynomial out(0, coeffs_);
  if (out.coeffs_.back() < 0) {
    for (auto& c : out.coeffs_) c = -c;
  }
  return out;
}

std::string LaurentPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    const long e = lowest_ + static_cast<long>(i);
    const BigInt mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::string var;
    if (e == 1) {
      var = "t";
    } else if (e != 0) {
      var = "t^" + std::to_string(e);
    }
    if (var.empty()) {
      out += mag.str();
    } else if (mag == 1) {
      out += var;
    } else {
      out += mag.str() + "*" + var;
    }
  }
  return out;
}

LaurentPolynomial operator+(const LaurentPolynomial& a,
                            const LaurentPolynomial& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const long lo = std::min(a.lowest_, b.lowest_);
  const long hi = std::max(a.highest_exponent(), b.highest_exponent());
  std::vector<BigInt> c(static_cast<std::size_t>(hi - lo + 1), 0);
  for (long e = lo; e <= hi; ++e) {
    c[static_cast<std::size_t>(e - lo)] = a.coefficient(e) + b.coefficient(e);
  }
  return LaurentPolynomial(lo, std::move(c));
}

LaurentPolynomial operator-(const LaurentPolynomial& a) {
  LaurentPolynomial out = a;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

LaurentPolynomial operator-(const LaurentPolynomial& a,
                            const LaurentPolynomial& b) {
  return a + (-b);
}

LaurentPolynomial operator*(const LaurentPolynomial& a,
                            const LaurentPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return LaurentPolynomial(a.lowest_ + b.lowest_, std::move(c));
}

}  // namespace hopfarb
