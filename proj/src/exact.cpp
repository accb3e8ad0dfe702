#include "xx0/exact.hpp"

#include <cmath>
#include <ostream>

namespace xx0 {

Scalar Scalar::rational(long num, long den) {
  ensure(den != 0, "rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return Scalar(r);
}

QPoly Scalar::as_poly() const {
  if (is_poly()) return poly();
  const Rational& r = rat();
  ensure(r.get_den() == 1, "non-integer rational used in a q context");
  return QPoly(r.get_num());
}

bool Scalar::is_zero() const {
  return is_rational() ? rat() == 0 : poly().is_zero();
}

bool Scalar::is_one() const {
  return is_rational() ? rat() == 1 : poly().is_one();
}

bool Scalar::operator==(const Scalar& o) const {
  if (is_rational() && o.is_rational()) return rat() == o.rat();
  if (is_poly() && o.is_poly()) return poly() == o.poly();
  // Mixed: equal only when both are the same integer constant.
  const Scalar& r = is_rational() ? *this : o;
  const Scalar& p = is_rational() ? o : *this;
  if (r.rat().get_den() != 1) return false;
  return p.poly() == QPoly(r.rat().get_num());
}

Scalar Scalar::operator-() const {
  if (is_rational()) return Scalar(Rational(-rat()));
  return Scalar(-poly());
}

namespace {
// Applies op after promoting an integral rational next to a polynomial.
template <class RatOp, class PolyOp>
Scalar combine(const Scalar& a, const Scalar& b, RatOp rop, PolyOp pop) {
  if (a.is_rational() && b.is_rational()) return Scalar(rop(a.rat(), b.rat()));
  return Scalar(pop(a.as_poly(), b.as_poly()));
}
}  // namespace

Scalar operator+(const Scalar& a, const Scalar& b) {
  return combine(a, b, [](const Rational& x, const Rational& y) { return Rational(x + y); },
                 [](const QPoly& x, const QPoly& y) { return x + y; });
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  return combine(a, b, [](const Rational& x, const Rational& y) { return Rational(x - y); },
                 [](const QPoly& x, const QPoly& y) { return x - y; });
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  return combine(a, b, [](const Rational& x, const Rational& y) { return Rational(x * y); },
                 [](const QPoly& x, const QPoly& y) { return x * y; });
}

Scalar Scalar::pow(unsigned long e) const {
  Scalar base = *this, acc(1);
  while (e) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

Scalar Scalar::inverse() const {
  if (is_rational()) {
    ensure(rat() != 0, "inverse of zero");
    return Scalar(Rational(1 / rat()));
  }
  const QPoly& p = poly();
  ensure(p.is_monomial(), "inverse requires a monomial");
  const BigInt c = p.coeffs()[0];
  ensure(c == 1 || c == -1, "inverse requires a unit coefficient");
  return Scalar(QPoly(c, -p.min_degree()));
}

Scalar exact_div(const Scalar& num, const Scalar& den) {
  if (num.is_rational() && den.is_rational()) {
    if (den.rat() == 0) throw DivisionByZero("exact_div: zero divisor");
    return Scalar(Rational(num.rat() / den.rat()));
  }
  if (den.is_rational()) {
    // poly / rational p/s  ==  poly * s / p, requiring p | every coefficient.
    const Rational& r = den.rat();
    if (r == 0) throw DivisionByZero("exact_div: zero divisor");
    QPoly scaled = num.as_poly() * QPoly(BigInt(r.get_den()));
    return Scalar(exact_div(scaled, QPoly(BigInt(r.get_num()))));
  }
  return Scalar(exact_div(num.as_poly(), den.as_poly()));
}

bool is_zero(const QPoly& p) { return p.is_zero(); }
bool is_zero(const Scalar& s) { return s.is_zero(); }
bool is_zero(const Rational& r) { return r == 0; }

Rational exact_div_generic(const Rational& a, const Rational& b) {
  if (b == 0) throw DivisionByZero("exact_div: zero divisor");
  return a / b;
}

EvalPoint q_powers(long n) {
  EvalPoint x;
  for (long i = 1; i <= n; ++i) x.push_back(Scalar::q_power(i));
  return x;
}

EvalPoint q_powers_over_q(long n) {
  EvalPoint x;
  for (long i = 0; i < n; ++i) x.push_back(Scalar::q_power(i));
  return x;
}

EvalPoint inv_q_powers(long n) {
  EvalPoint x;
  for (long i = 1; i <= n; ++i) x.push_back(Scalar::q_power(-i));
  return x;
}

EvalPoint q_powers_over_q_complement(long n, const std::vector<long>& i_set) {
  EvalPoint x;
  for (long i = 1; i <= n; ++i) {
    bool dropped = false;
    for (long v : i_set) dropped = dropped || (v == i);
    if (!dropped) x.push_back(Scalar::q_power(i - 1));
  }
  return x;
}

std::complex<double> det_lu(std::vector<std::vector<std::complex<double>>> a) {
  const size_t n = a.size();
  std::complex<double> det(1.0, 0.0);
  for (size_t k = 0; k < n; ++k) {
    size_t piv = k;
    double best = std::abs(a[k][k]);
    for (size_t i = k + 1; i < n; ++i)
      if (std::abs(a[i][k]) > best) {
        best = std::abs(a[i][k]);
        piv = i;
      }
    if (best == 0.0) return {0.0, 0.0};
    if (piv != k) {
      std::swap(a[piv], a[k]);
      det = -det;
    }
    det *= a[k][k];
    for (size_t i = k + 1; i < n; ++i) {
      const std::complex<double> f = a[i][k] / a[k][k];
      for (size_t j = k + 1; j < n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return det;
}

std::complex<double> vandermonde_det_c(const std::vector<std::complex<double>>& x) {
  std::complex<double> acc(1.0, 0.0);
  for (size_t i = 0; i < x.size(); ++i)
    for (size_t j = i + 1; j < x.size(); ++j) acc *= x[i] - x[j];
  return acc;
}

std::string Scalar::str() const {
  if (is_rational()) return rat().get_str();
  return poly().str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << s.str();
}

}  // namespace xx0
