#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "xx0/schur.hpp"

using namespace xx0;

namespace {

EvalPoint rational_tuple(std::mt19937& rng, long n) {
  std::uniform_int_distribution<long> num(-50, 50), den(1, 50);
  EvalPoint x;
  while (static_cast<long>(x.size()) < n) {
    long p = 0;
    while (p == 0) p = num(rng);
    Scalar v(Rational(p, den(rng)));
    bool dup = false;
    for (const auto& e : x) dup = dup || (e == v);
    if (!dup) x.push_back(v);
  }
  return x;
}

}  // namespace

TEST_CASE("elementary evaluations") {
  EvalPoint ab = {Scalar::rational(2, 3), Scalar::rational(5, 7)};
  CHECK(schur_eval(Partition({1, 0}), ab) == ab[0] + ab[1]);

  EvalPoint ones = {Scalar(1), Scalar(1), Scalar(1)};
  CHECK(schur_eval(Partition({2, 1, 0}), ones) == Scalar(8));

  // zero-entry limit: trailing zero parts survive on the nonzero sub-tuple
  EvalPoint abz = {ab[0], ab[1], Scalar(0)};
  CHECK(schur_eval(Partition({1, 0, 0}), abz) == ab[0] + ab[1]);
  CHECK_THROWS_AS(schur_eval(Partition({1, 1, 1}), abz), ZeroLimitInvalid);
  CHECK_THROWS_AS(schur_eval(Partition({2, 1}), EvalPoint{ab[0], ab[0]}),
                  RepeatedPoint);
}

TEST_CASE("tableau counts") {
  CHECK(schur_tableau_oracle(Partition({1}), 3) == 3);
  CHECK(schur_tableau_oracle(Partition({2, 1}), 3) == 8);
  CHECK(ssyt_count_product(Partition({2, 1}), 3) == 8);
  // product formula across the 4^4 box
  for (long a = 0; a <= 4; ++a)
    for (long b = 0; b <= a; ++b)
      for (long c = 0; c <= b; ++c)
        for (long d = 0; d <= c; ++d)
          CHECK(schur_tableau_oracle(Partition({a, b, c, d}), 4) ==
                ssyt_count_product(Partition({a, b, c, d}), 4));
}

TEST_CASE("three evaluation routes agree at random rational points") {
  std::mt19937 rng(3);
  for (long a = 0; a <= 3; ++a)
    for (long b = 0; b <= a; ++b)
      for (long c = 0; c <= b; ++c) {
        const Partition lam({a, b, c});
        for (int rep = 0; rep < 5; ++rep) {
          const EvalPoint x = rational_tuple(rng, 3);
          const Scalar v = schur_eval(lam, x);
          CHECK(v == schur_from_tableaux(lam, x));
          CHECK(v == schur_jacobi_trudi(lam, x));
        }
      }
}

TEST_CASE("symmetry under transpositions") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<size_t> pick(0, 3);
  for (int rep = 0; rep < 40; ++rep) {
    EvalPoint x = rational_tuple(rng, 4);
    const Partition lam({3, 2, 1, 0});
    const Scalar base = schur_eval(lam, x);
    const size_t i = pick(rng), j = pick(rng);
    std::swap(x[i], x[j]);
    CHECK(schur_eval(lam, x) == base);
  }
}

TEST_CASE("limit of vanishing points equals the truncated evaluation") {
  std::mt19937 rng(29);
  for (long n = 1; n <= 4; ++n)
    for (long k = 0; k <= std::min(n, 2L); ++k) {
      const EvalPoint xbar = rational_tuple(rng, n - k);
      // lambda with k trailing zeros
      std::vector<long> lam;
      for (long i = n - k; i >= 1; --i) lam.push_back(i);
      Partition lam_hat(lam);
      lam_hat = hat_extend(lam_hat, k);
      EvalPoint x = xbar;
      for (long i = 0; i < k; ++i) x.push_back(Scalar(0));
      CHECK(schur_eval(lam_hat, x) ==
            schur_eval(Partition(std::vector<long>(lam.begin(), lam.end())), xbar));
    }
}

TEST_CASE("principal specializations and their scaling relations") {
  CHECK(principal_specialization(Partition({1}), 2, PrincipalMode::QN_OVER_Q) ==
        QPoly({1, 1}, 0));
  CHECK(principal_specialization(Partition({1, 1}), 2, PrincipalMode::QN) ==
        QPoly::q(3));

  for (long n = 1; n <= 4; ++n)
    for (long a = 0; a <= 2; ++a)
      for (long b = 0; b <= a; ++b) {
        const Partition lam({a, b});
        if (lam.length() > n) continue;
        const QPoly qn = principal_specialization(lam, n, PrincipalMode::QN);
        const QPoly over =
            principal_specialization(lam, n, PrincipalMode::QN_OVER_Q);
        const QPoly inv = principal_specialization(lam, n, PrincipalMode::INV_QN);
        CHECK(qn == over.shifted(lam.weight()));
        CHECK(qn == inv.shifted((n + 1) * lam.weight()));
      }
}

TEST_CASE("shifted-alphabet specialization rescales by the weight") {
  // S_lambda(q^{k+1}..q^N) = q^{k|lambda|} S_lambda(q..q^{N-k})
  for (long n = 2; n <= 4; ++n)
    for (long k = 1; k <= 2; ++k) {
      if (k >= n) continue;
      const Partition lam({2, 1});
      if (lam.length() > n - k) continue;
      EvalPoint shifted;
      for (long i = k + 1; i <= n; ++i) shifted.push_back(Scalar::q_power(i));
      const QPoly lhs = schur_eval(lam, shifted).as_poly();
      const QPoly rhs = schur_eval(lam, q_powers(n - k)).as_poly();
      CHECK(lhs == rhs.shifted(k * lam.weight()));
    }
}

TEST_CASE("skew rectangle-complement evaluation") {
  std::mt19937 rng(31);
  // full shape: exactly one skew tableau
  EvalPoint y = rational_tuple(rng, 3);
  CHECK(skew_schur_eval(Partition({2, 2, 2}), 2, y) == Scalar(1));

  // empty lambda gives the full rectangle: product of y^M
  Scalar prod(1);
  for (const auto& e : y) prod *= e.pow(2);
  CHECK(skew_schur_eval(Partition({0, 0, 0}), 2, y) == prod);

  EvalPoint ab = {Scalar::rational(3, 4), Scalar::rational(-2, 5)};
  CHECK(skew_schur_eval(Partition({1, 0}), 1, ab) == ab[0] + ab[1]);

  CHECK_THROWS_AS(skew_schur_eval(Partition({1, 0}), 1,
                                  EvalPoint{Scalar(1), Scalar(0)}),
                  ZeroArgument);
}

TEST_CASE("skew enumeration is in bijection with straight tableaux") {
  for (long n = 1; n <= 3; ++n)
    for (long mc = 0; mc <= 3; ++mc)
      for (long a = 0; a <= mc; ++a)
        for (long b = 0; b <= a; ++b) {
          const Partition lam = n == 1 ? Partition({a}) : Partition({a, b});
          if (lam.length() > n) continue;
          long skew = 0, straight = 0;
          skew_ssyt_enumerate(lam, mc, n, [&](const std::vector<long>&) { ++skew; });
          ssyt_enumerate(lam, n, 1, [&](const std::vector<long>&) { ++straight; });
          CHECK(skew == straight);
        }
}

TEST_CASE("complete homogeneous against the q-binomial form") {
  // h_m(1, q, ..., q^{v-1}) = [v+m-1 over m]
  for (long v = 1; v <= 5; ++v)
    for (long m = 0; m <= 6; ++m)
      CHECK(complete_homogeneous(m, q_powers_over_q(v)).as_poly() ==
            q_binomial(v + m - 1, m));
}
