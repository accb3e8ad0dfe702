#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "dense_oracle.hpp"
#include "xx0/xx0chain.hpp"

using namespace xx0;

TEST_CASE("single-particle propagator") {
  for (long M : {2L, 3L, 4L, 6L}) {
    for (long j = 0; j <= M; ++j) {
      CHECK(hopping_propagator(j, j, 0.0, M).value.real() == doctest::Approx(1.0));
      double row = 0.0;
      for (long l = 0; l <= M; ++l)
        row += hopping_propagator(j, l, 0.7, M).value.real();
      CHECK(row == doctest::Approx(std::exp(0.7)).epsilon(1e-12));
    }
  }
  // two-site chain: both hopping terms land on the same bond
  CHECK(hopping_propagator(0, 0, 0.9, 1).value.real() ==
        doctest::Approx(std::cosh(0.9)).epsilon(1e-14));
  CHECK(hopping_propagator(0, 1, 0.9, 1).value.real() ==
        doctest::Approx(std::sinh(0.9)).epsilon(1e-14));
  CHECK(degenerate_geometry(1));
  CHECK(degenerate_geometry(2));
  CHECK(!degenerate_geometry(3));
}

TEST_CASE("amplitude basics") {
  BasisState j{{3, 1}}, l{{3, 1}}, other{{2, 0}};
  CHECK(amplitude(j, l, 0.0, 4).value.real() == doctest::Approx(1.0));
  CHECK(amplitude(j, other, 0.0, 4).value.real() ==
        doctest::Approx(0.0).epsilon(1e-14));
  // N = 1 reduction
  const double a1 = amplitude(BasisState{{2}}, BasisState{{0}}, 0.4, 5).value.real();
  CHECK(a1 == doctest::Approx(std::exp(-0.4) *
                              hopping_propagator(2, 0, 0.4, 5).value.real())
                  .epsilon(1e-13));
  CHECK_THROWS_AS(amplitude(BasisState{{1, 1}}, BasisState{{2, 0}}, 0.1, 4),
                  Collision);
  CHECK_THROWS_AS(amplitude(BasisState{{1}}, BasisState{{2, 0}}, 0.1, 4),
                  SizeMismatch);
}

TEST_CASE("amplitude three-route agreement") {
  for (long N = 1; N <= 3; ++N)
    for (long M = std::max(N, 2L); M <= 6; ++M) {
      BasisState j, l;
      for (long s = 0; s < N; ++s) j.sites.push_back(M - s);
      for (long s = 0; s < N; ++s) l.sites.push_back(N - 1 - s);
      for (double t : {0.1, 0.5, 1.0}) {
        const auto det = amplitude(j, l, t, M);
        const auto spec = amplitude_spectral(j, l, t, M);
        const auto ser = amplitude_series(j, l, t, M);
        CHECK(std::abs(det.value - spec.value) <= 1e-9);
        CHECK(std::abs(det.value - ser.value) <= 1e-9);
      }
    }
}

TEST_CASE("amplitude against dense evolution") {
  for (long N = 1; N <= 2; ++N)
    for (long M = std::max(N, 2L); M <= 5; ++M) {
      const auto cfgs = dense::configs_of(N, M);
      const auto e = dense::evolution(dense::sector_hxx(N, M, cfgs), 0.7);
      for (size_t a = 0; a < cfgs.size(); ++a)
        for (size_t b = 0; b < cfgs.size(); ++b) {
          const auto amp =
              amplitude(BasisState{cfgs[a]}, BasisState{cfgs[b]}, 0.7, M);
          CHECK(amp.value.real() ==
                doctest::Approx(e(a, b)).epsilon(1e-10));
        }
    }
}

TEST_CASE("series oracle at short times") {
  BasisState j{{3, 1}}, l{{2, 0}};
  const auto det = amplitude(j, l, 0.1, 4);
  const auto ser = amplitude_series(j, l, 0.1, 4);
  CHECK(std::abs(det.value - ser.value) <= 1e-10);
}

TEST_CASE("two-time amplitude") {
  BasisState j{{3, 1}}, l{{2, 0}};
  // m = 0 joins the evolutions
  const auto joined = amplitude(j, l, 0.5, 4);
  const auto tt = two_time_amplitude(j, l, 0.3, 0.2, 0, 4);
  CHECK(std::abs(joined.value - tt.value) <= 1e-12);

  // identity at zero times on projector-compatible states
  const auto idem = two_time_amplitude(BasisState{{3, 2}}, BasisState{{3, 2}},
                                       0.0, 0.0, 2, 4);
  CHECK(idem.value.real() == doctest::Approx(1.0));

  // one particle, explicit two-term sum
  double direct = 0.0;
  for (long k = 2; k <= 3; ++k)
    direct += hopping_propagator(1, k, 0.2, 3).value.real() *
              hopping_propagator(k, 0, 0.2, 3).value.real();
  const auto one = two_time_amplitude(BasisState{{1}}, BasisState{{0}}, 0.2, 0.2,
                                      2, 3);
  CHECK(one.value.real() ==
        doctest::Approx(std::exp(-0.4) * direct).epsilon(1e-13));
}

TEST_CASE("two-time series coefficients match bottleneck counts") {
  // expand e^{(t1+t2)N} G(j;l|t1,t2,m) in (t1/2)^K1 (t2/2)^K2 by finite
  // differences on the integer-coefficient series
  const long M = 4, m = 1;
  BasisState j{{3, 1}}, l{{4, 2}};
  // series reconstruction from counts
  for (double t1 : {0.2, 0.4})
    for (double t2 : {0.1, 0.3}) {
      double series = 0.0;
      for (long K1 = 0; K1 <= 24; ++K1)
        for (long K2 = 0; K2 <= 24; ++K2) {
          const BigInt c = bottleneck_count(l.sites, j.sites, K2, K1, m, M);
          // note: counts are symmetric in path reversal; order fixed here
          double w = c.get_d();
          if (w == 0.0) continue;
          series += std::pow(t1 / 2.0, static_cast<double>(K1)) /
                    std::tgamma(static_cast<double>(K1 + 1)) *
                    std::pow(t2 / 2.0, static_cast<double>(K2)) /
                    std::tgamma(static_cast<double>(K2 + 1)) * w;
        }
      const auto tt = two_time_amplitude(j, l, t1, t2, m, M);
      const double expected =
          series * std::exp(-(t1 + t2) * 2.0);
      CHECK(tt.value.real() == doctest::Approx(expected).epsilon(1e-9));
    }
}

TEST_CASE("bethe ground data") {
  // single particle: zero mode
  const auto one = bethe_ground(ChainConfig{5, 1}, 0);
  CHECK(one.theta.size() == 1);
  CHECK(one.theta[0] == doctest::Approx(0.0));
  CHECK(one.energy == doctest::Approx(0.0));
  CHECK(one.norm_sq == doctest::Approx(6.0));

  // two particles on four sites
  const auto two = bethe_ground(ChainConfig{3, 2}, 0);
  CHECK(two.energy == doctest::Approx(2.0 - std::sqrt(2.0)).epsilon(1e-14));

  // closed form against the cosine sum across the acceptance range
  for (long M = 1; M <= 20; ++M)
    for (long N = 0; N <= std::min(M + 1, 5L); ++N) {
      const auto bd = bethe_ground(ChainConfig{M, N}, 0);
      CHECK(std::abs(bd.energy - ground_energy_closed(M, N)) <= 1e-12);
      for (double th : bd.theta) {
        const auto resid = std::polar(1.0, static_cast<double>(M + 1) * th) -
                           std::complex<double>(N % 2 ? 1.0 : -1.0, 0.0);
        CHECK(std::abs(resid) <= 1e-12);
      }
    }
}

TEST_CASE("projector form factor") {
  // m = 0 is the scalar product; q-parameterized identities are asserted
  // inside the call
  CHECK(projector_formfactor_q(ChainConfig{2, 1}, 1) == QPoly({1, 1}, 1));
  CHECK(projector_formfactor_q(ChainConfig{3, 2}, 0).eval_at_one() == 20);
  for (long N = 1; N <= 3; ++N)
    for (long M = N; M <= 5; ++M)
      for (long m = 0; m <= M; ++m) {
        const QPoly ff = projector_formfactor_q(ChainConfig{M, N}, m);
        if (m <= M - N + 1)
          CHECK(ff.eval_at_one() == macmahon_count(N, N, M - N + 1 - m));
        else
          CHECK(ff.is_zero());
      }

  // generic exact points against the brute-force sum
  const ChainConfig cfg{4, 2};
  EvalPoint v = {Scalar::rational(2, 3), Scalar::rational(5, 4)};
  EvalPoint u = {Scalar::rational(1, 2), Scalar::rational(7, 5)};
  CBSpec spec;
  spec.N = 2;
  spec.L = cfg.mcal();
  spec.n = 1;
  for (const auto& e : v) spec.x.push_back(e.inverse().pow(2));
  for (const auto& e : u) spec.y.push_back(e.pow(2));
  CHECK(projector_formfactor(cfg, v, u, 1) == cb_pair_sum(spec));
}

TEST_CASE("domain-wall form factor") {
  // n = 0 reduces to the scalar product
  const ChainConfig cfg{3, 2};
  CHECK(domainwall_formfactor_q(cfg, 0) == projector_formfactor_q(cfg, 0));
  CHECK(domainwall_formfactor_q(cfg, 1).eval_at_one() == 6);  // A(1,2,2)
  for (long N = 1; N <= 3; ++N)
    for (long M = N; M <= 5; ++M)
      for (long n = 0; n <= N; ++n)
        CHECK(domainwall_formfactor_q(ChainConfig{M, N}, n).eval_at_one() ==
              macmahon_count(N - n, N, M - N + 1));

  // single-basis-state element: empty shape leaves only the prefactor
  EvalPoint v = {Scalar::rational(3, 2)};
  const Scalar el = domainwall_state_element(v, Partition({0}), 1);
  CHECK(el == Scalar::rational(4, 9));
}

TEST_CASE("persistence sanity") {
  // trivial wall: exact identity at the zero-energy filling
  for (double t : {0.0, 0.3, 1.0, 3.0})
    CHECK(persistence(ChainConfig{6, 1}, 0, t) == doctest::Approx(1.0).epsilon(1e-10));
  // t = 0: Gram ratio from the state expansion
  for (long M = 2; M <= 5; ++M)
    for (long N = 1; N <= 2; ++N)
      for (long n = 0; n <= N; ++n) {
        const auto bd = bethe_ground(ChainConfig{M, N}, n);
        // direct contraction
        const long np = N - n;
        double num = 0.0, den = 0.0;
        std::vector<std::complex<double>> z;
        for (double th : bd.theta) z.push_back(std::polar(1.0, th));
        iter_partitions_in_box(np, M - np + 1, 0, [&](const Partition& lam) {
          const double w = std::norm(schur_eval_c(lam, z));
          den += w;
          // surviving states need all sites >= n
          const long min_site = np > 0 ? lam.part(np - 1) : n;
          if (min_site >= n) num += w;
        });
        CHECK(persistence(ChainConfig{M, N}, n, 0.0) ==
              doctest::Approx(num / den).epsilon(1e-10));
      }
}

TEST_CASE("persistence against dense evolution") {
  CHECK(persistence(ChainConfig{4, 2}, 1, 0.5) ==
        doctest::Approx(dense::persistence_dense(4, 2, 1, 0.5)).epsilon(1e-11));
  for (long M = 2; M <= 5; ++M)
    for (long N = 1; N <= 2; ++N)
      for (long n = 0; n <= N; ++n)
        for (double t : {0.2, 0.9})
          CHECK(persistence(ChainConfig{M, N}, n, t) ==
                doctest::Approx(dense::persistence_dense(M, N, n, t))
                    .epsilon(1e-10));
}

TEST_CASE("autocorrelation") {
  // m = 0 collapses onto persistence
  for (long n = 0; n <= 2; ++n)
    CHECK(autocorrelation(ChainConfig{4, 2}, n, 0, 0.3, 0.3) ==
          doctest::Approx(persistence(ChainConfig{4, 2}, n, 0.6)).epsilon(1e-9));
  CHECK(autocorrelation(ChainConfig{4, 2}, 0, 0, 0.0, 0.0) ==
        doctest::Approx(1.0).epsilon(1e-12));

  // dense oracle
  CHECK(autocorrelation(ChainConfig{4, 2}, 0, 1, 0.3, 0.3) ==
        doctest::Approx(dense::autocorrelation_dense(4, 2, 0, 1, 0.3, 0.3))
            .epsilon(1e-11));
  for (long m = 0; m <= 3; ++m)
    CHECK(autocorrelation(ChainConfig{4, 2}, 1, m, 0.2, 0.4) ==
          doctest::Approx(dense::autocorrelation_dense(4, 2, 1, m, 0.2, 0.4))
              .epsilon(1e-10));

  CHECK_THROWS_AS(
      autocorrelation(ChainConfig{20, 10}, 0, 0, 0.1, 0.1, SumOptions{100, 1}),
      ModeEnumerationTooLarge);
}

TEST_CASE("threaded mode sums are deterministic") {
  const double one = persistence(ChainConfig{6, 2}, 1, 0.7, SumOptions{2000000, 1});
  const double four = persistence(ChainConfig{6, 2}, 1, 0.7, SumOptions{2000000, 4});
  CHECK(one == doctest::Approx(four).epsilon(1e-13));
}
