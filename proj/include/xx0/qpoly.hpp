#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "xx0/errors.hpp"

namespace xx0 {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Laurent polynomial in q with arbitrary-precision integer coefficients.
///
/// Canonical form: the coefficient vector never has a zero leading or
/// trailing entry; the zero polynomial is the empty vector with
/// min_degree() == 0.  Equality is therefore structural.
class QPoly {
 public:
  QPoly() = default;
  QPoly(long value) : QPoly(BigInt(value), 0) {}  // implicit: integer constant
  QPoly(const BigInt& value) : QPoly(value, 0) {}
  QPoly(const BigInt& coeff, long degree);
  QPoly(std::vector<BigInt> coeffs, long min_degree);

  static QPoly zero() { return QPoly(); }
  static QPoly one() { return QPoly(1); }
  static QPoly q(long degree = 1) { return QPoly(BigInt(1), degree); }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  /// True when the polynomial is a single term c*q^d.
  bool is_monomial() const { return coeffs_.size() == 1; }

  long min_degree() const { return min_degree_; }
  long max_degree() const;
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  BigInt coeff(long degree) const;

  QPoly operator-() const;
  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  QPoly& operator*=(const QPoly& o) { return *this = *this * o; }
  bool operator==(const QPoly& o) const = default;

  /// Multiply by q^shift.
  QPoly shifted(long shift) const;
  QPoly pow(unsigned long e) const;
  /// Drop all terms of degree > max_degree (power-series truncation).
  QPoly truncated(long max_degree) const;

  BigInt eval_at_one() const;
  Rational eval(const Rational& x) const;
  double eval(double x) const;
  std::complex<double> eval(const std::complex<double>& x) const;

  long weight_of_terms() const { return static_cast<long>(coeffs_.size()); }

  std::string str() const;
  std::string json() const;
  static QPoly from_json(const std::string& text);

 private:
  void canonicalize();

  long min_degree_ = 0;
  std::vector<BigInt> coeffs_;
};

/// Exact quotient num/den. Throws DivisionByZero when den == 0 and
/// NonDivisible when the remainder is nonzero: every ratio arising from the
/// implemented identities is polynomial, so a nonzero remainder signals a bug.
QPoly exact_div(const QPoly& num, const QPoly& den);

std::ostream& operator<<(std::ostream& os, const QPoly& p);

}  // namespace xx0
