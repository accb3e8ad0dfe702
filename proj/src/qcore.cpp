#include "xx0/qcore.hpp"

namespace xx0 {

QPoly q_int(long n) {
  ensure(n >= 0, "q_int: negative argument");
  return geometric_sum(QPoly::q(), n);
}

QPoly q_factorial(long n) {
  ensure(n >= 0, "q_factorial: negative argument");
  QPoly acc = QPoly::one();
  for (long i = 1; i <= n; ++i) acc *= q_int(i);
  return acc;
}

std::pair<QPoly, QPoly> q_int_factorial(long n) {
  return {q_int(n), q_factorial(n)};
}

QPoly q_binomial(long n, long r) {
  ensure(n >= 0, "q_binomial: negative n");
  if (r < 0 || r > n) return QPoly::zero();
  // [n][n-1]...[n-r+1] / [r]!
  QPoly num = QPoly::one();
  for (long i = 0; i < r; ++i) num *= q_int(n - i);
  return exact_div(num, q_factorial(r));
}

QPoly q_binomial_det(const std::vector<long>& a, const std::vector<long>& b) {
  ensure(a.size() == b.size(), "q_binomial_det: tuple sizes differ");
  for (size_t i = 0; i + 1 < a.size(); ++i) {
    ensure(a[i] < a[i + 1], "q_binomial_det: a not strictly increasing");
    ensure(b[i] < b[i + 1], "q_binomial_det: b not strictly increasing");
  }
  const size_t s = a.size();
  std::vector<std::vector<QPoly>> m(s, std::vector<QPoly>(s));
  for (size_t i = 0; i < s; ++i)
    for (size_t j = 0; j < s; ++j) m[i][j] = q_binomial(a[j], b[i]);
  return det_bareiss(std::move(m));
}

BigInt binomial(long n, long r) {
  if (r < 0 || r > n || n < 0) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(r));
  return out;
}

}  // namespace xx0
