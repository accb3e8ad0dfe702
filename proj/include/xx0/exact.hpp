#pragma once

#include <complex>
#include <string>
#include <variant>
#include <vector>

#include "xx0/qpoly.hpp"

namespace xx0 {

/// Exact scalar: either a rational number or a Laurent polynomial in q.
/// The two kinds mix only through integers (an integral rational promotes to
/// a constant polynomial); any other mixing is a usage bug and throws.
class Scalar {
 public:
  Scalar() : v_(Rational(0)) {}
  Scalar(long n) : v_(Rational(n)) {}
  Scalar(const Rational& r) : v_(r) { canon(); }
  Scalar(const QPoly& p) : v_(p) {}
  static Scalar rational(long num, long den);
  static Scalar q_power(long d) { return Scalar(QPoly::q(d)); }

  bool is_rational() const { return std::holds_alternative<Rational>(v_); }
  bool is_poly() const { return !is_rational(); }
  const Rational& rat() const { return std::get<Rational>(v_); }
  const QPoly& poly() const { return std::get<QPoly>(v_); }
  /// Polynomial view; promotes an integral rational to a constant QPoly.
  QPoly as_poly() const;

  bool is_zero() const;
  bool is_one() const;
  bool operator==(const Scalar& o) const;

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  Scalar pow(unsigned long e) const;
  /// Multiplicative inverse; defined for nonzero rationals and for Laurent
  /// monomials with unit coefficient.
  Scalar inverse() const;

  std::string str() const;

 private:
  void canon() {
    if (is_rational()) std::get<Rational>(v_).canonicalize();
  }
  std::variant<Rational, QPoly> v_;
};

/// Exact quotient; throws NonDivisible / DivisionByZero like the QPoly one.
Scalar exact_div(const Scalar& num, const Scalar& den);

bool is_zero(const QPoly& p);
bool is_zero(const Scalar& s);
bool is_zero(const Rational& r);
inline QPoly exact_div_generic(const QPoly& a, const QPoly& b) { return exact_div(a, b); }
inline Scalar exact_div_generic(const Scalar& a, const Scalar& b) { return exact_div(a, b); }
Rational exact_div_generic(const Rational& a, const Rational& b);

/// Evaluation point: tuple of exact scalars.
using EvalPoint = std::vector<Scalar>;

EvalPoint q_powers(long n);           // (q, q^2, ..., q^n)
EvalPoint q_powers_over_q(long n);    // (1, q, ..., q^(n-1))
EvalPoint inv_q_powers(long n);       // (q^-1, ..., q^-n)
/// Entries q^(i-1) for i in the complement of i_set within [N].
EvalPoint q_powers_over_q_complement(long n, const std::vector<long>& i_set);

/// 1 + u + ... + u^(p-1); the closed form (1-u^p)/(1-u) including its value
/// p at the removable singularity u = 1.
template <class T>
T geometric_sum(const T& u, long p) {
  T acc(0), term(1);
  for (long r = 0; r < p; ++r) {
    acc += term;
    if (r + 1 < p) term = term * u;
  }
  return acc;
}

/// Vandermonde determinant in the descending-power convention:
/// det(x_i^{n-j}) = prod_{i<j} (x_i - x_j).
template <class T>
T vandermonde_det(const std::vector<T>& x) {
  T acc(1);
  for (size_t i = 0; i < x.size(); ++i)
    for (size_t j = i + 1; j < x.size(); ++j) acc = acc * (x[i] - x[j]);
  return acc;
}

/// Fraction-free (Bareiss) determinant over an exact integral domain;
/// all divisions are exact by Sylvester's identity.
template <class T>
T det_bareiss(std::vector<std::vector<T>> a) {
  const size_t n = a.size();
  if (n == 0) return T(1);
  int sign = 1;
  T prev(1);
  for (size_t k = 0; k + 1 < n; ++k) {
    size_t piv = k;
    while (piv < n && is_zero(a[piv][k])) ++piv;
    if (piv == n) return T(0);
    if (piv != k) {
      std::swap(a[piv], a[k]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j)
        a[i][j] = exact_div_generic(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
    prev = a[k][k];
  }
  T d = a[n - 1][n - 1];
  return sign < 0 ? T(0) - d : d;
}

/// LU determinant with partial pivoting for floating-point matrices.
std::complex<double> det_lu(std::vector<std::vector<std::complex<double>>> a);

std::complex<double> vandermonde_det_c(const std::vector<std::complex<double>>& x);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace xx0
