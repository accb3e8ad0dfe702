#include "xx0/qpoly.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace xx0 {

QPoly::QPoly(const BigInt& coeff, long degree) {
  if (coeff != 0) {
    min_degree_ = degree;
    coeffs_ = {coeff};
  }
}

QPoly::QPoly(std::vector<BigInt> coeffs, long min_degree)
    : min_degree_(min_degree), coeffs_(std::move(coeffs)) {
  canonicalize();
}

void QPoly::canonicalize() {
  size_t lo = 0, hi = coeffs_.size();
  while (hi > lo && coeffs_[hi - 1] == 0) --hi;
  while (lo < hi && coeffs_[lo] == 0) ++lo;
  if (lo == hi) {
    coeffs_.clear();
    min_degree_ = 0;
    return;
  }
  min_degree_ += static_cast<long>(lo);
  coeffs_ = std::vector<BigInt>(coeffs_.begin() + lo, coeffs_.begin() + hi);
}

bool QPoly::is_one() const {
  return coeffs_.size() == 1 && min_degree_ == 0 && coeffs_[0] == 1;
}

long QPoly::max_degree() const {
  ensure(!is_zero(), "max_degree of zero polynomial");
  return min_degree_ + static_cast<long>(coeffs_.size()) - 1;
}

BigInt QPoly::coeff(long degree) const {
  long idx = degree - min_degree_;
  if (idx < 0 || idx >= static_cast<long>(coeffs_.size())) return 0;
  return coeffs_[idx];
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  long lo = std::min(min_degree_, o.min_degree_);
  long hi = std::max(max_degree(), o.max_degree());
  std::vector<BigInt> out(static_cast<size_t>(hi - lo + 1));
  for (size_t i = 0; i < coeffs_.size(); ++i)
    out[static_cast<size_t>(min_degree_ - lo) + i] += coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i)
    out[static_cast<size_t>(o.min_degree_ - lo) + i] += o.coeffs_[i];
  min_degree_ = lo;
  coeffs_ = std::move(out);
  canonicalize();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) { return *this += -o; }

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return QPoly();
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j)
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return QPoly(std::move(out), a.min_degree_ + b.min_degree_);
}

QPoly QPoly::shifted(long shift) const {
  QPoly r = *this;
  if (!r.is_zero()) r.min_degree_ += shift;
  return r;
}

QPoly QPoly::pow(unsigned long e) const {
  QPoly base = *this, acc = QPoly::one();
  while (e) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

QPoly QPoly::truncated(long max_deg) const {
  if (is_zero() || max_degree() <= max_deg) return *this;
  if (min_degree_ > max_deg) return QPoly();
  std::vector<BigInt> out(coeffs_.begin(),
                          coeffs_.begin() + (max_deg - min_degree_ + 1));
  return QPoly(std::move(out), min_degree_);
}

BigInt QPoly::eval_at_one() const {
  BigInt s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

Rational QPoly::eval(const Rational& x) const {
  if (is_zero()) return Rational(0);
  if (min_degree_ < 0) ensure(x != 0, "evaluating q^(negative) at 0");
  Rational s = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    s = s * x + Rational(*it);
  if (min_degree_ > 0) {
    for (long i = 0; i < min_degree_; ++i) s *= x;
  } else {
    for (long i = 0; i < -min_degree_; ++i) s /= x;
  }
  return s;
}

double QPoly::eval(double x) const {
  double s = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    s = s * x + it->get_d();
  return s * std::pow(x, static_cast<double>(min_degree_));
}

std::complex<double> QPoly::eval(const std::complex<double>& x) const {
  std::complex<double> s = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    s = s * x + std::complex<double>(it->get_d());
  return s * std::pow(x, std::complex<double>(static_cast<double>(min_degree_)));
}

QPoly exact_div(const QPoly& num, const QPoly& den) {
  if (den.is_zero()) throw DivisionByZero("exact_div: zero divisor");
  if (num.is_zero()) return QPoly();
  const auto& a = num.coeffs();
  const auto& b = den.coeffs();
  if (a.size() < b.size())
    throw NonDivisible("exact_div: deg(num) < deg(den)");
  std::vector<BigInt> rem = a;
  std::vector<BigInt> quot(a.size() - b.size() + 1);
  const BigInt& lead = b.back();
  for (size_t i = quot.size(); i-- > 0;) {
    BigInt& top = rem[i + b.size() - 1];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
      throw NonDivisible("exact_div: leading coefficient does not divide");
    quot[i] = top / lead;
    for (size_t j = 0; j < b.size(); ++j) rem[i + j] -= quot[i] * b[j];
  }
  for (const auto& c : rem)
    if (c != 0) throw NonDivisible("exact_div: nonzero remainder");
  return QPoly(std::move(quot), num.min_degree() - den.min_degree());
}

std::string QPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    long d = min_degree_ + static_cast<long>(i);
    BigInt ab = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (d == 0) {
      os << ab.get_str();
    } else {
      if (ab != 1) os << ab.get_str() << " ";
      os << "q";
      if (d != 1) os << "^" << d;
    }
  }
  return os.str();
}

std::string QPoly::json() const {
  nlohmann::json j;
  j["min_degree"] = min_degree_;
  auto arr = nlohmann::json::array();
  for (const auto& c : coeffs_) arr.push_back(c.get_str());
  j["coeffs"] = arr;
  return j.dump();
}

QPoly QPoly::from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  std::vector<BigInt> cs;
  for (const auto& s : j.at("coeffs"))
    cs.emplace_back(s.get<std::string>());
  return QPoly(std::move(cs), j.at("min_degree").get<long>());
}

std::ostream& operator<<(std::ostream& os, const QPoly& p) {
  return os << p.str();
}

}  // namespace xx0
