#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "xx0/paths.hpp"

using namespace xx0;

TEST_CASE("star enumeration counts") {
  long c = 0;
  enumerate_stars(Partition({1}), 2, 0, [&](const PathNest&) { ++c; });
  CHECK(c == 2);
  c = 0;
  enumerate_stars(Partition({2, 1}), 3, 0, [&](const PathNest&) { ++c; });
  CHECK(c == 8);
  c = 0;
  enumerate_stars(Partition({1}), 3, 1, [&](const PathNest&) { ++c; });
  CHECK(c == 2);  // entries 2 or 3 only
}

TEST_CASE("conjugate star enumeration counts") {
  long c = 0;
  enumerate_conj_stars(Partition({1, 1}), 1, 2, 0, [&](const PathNest&) { ++c; });
  CHECK(c == 1);  // full rectangle: empty skew shape
  c = 0;
  enumerate_conj_stars(Partition({1}), 1, 2, 0, [&](const PathNest&) { ++c; });
  CHECK(c == 2);  // involution: matches the star count

  // deviation forces full columns on the trailing lines
  enumerate_conj_stars(Partition({1}), 2, 3, 1, [&](const PathNest& nest) {
    CHECK(nest.line_totals().back() == 2);
  });
}

TEST_CASE("watermelon enumeration counts") {
  long c = 0;
  enumerate_watermelons(2, 2, 1, 0, 0, [&](const PathNest&, long) { ++c; });
  CHECK(c == 6);  // A(2,2,1)
  c = 0;
  enumerate_watermelons(2, 1, 1, 0, 0, [&](const PathNest&, long) { ++c; });
  CHECK(c == 3);  // A(2,1,1)
  c = 0;
  QPoly gf;
  enumerate_watermelons(1, 1, 2, 1, 0, [&](const PathNest&, long vol) {
    ++c;
    gf += QPoly::q(vol);
  });
  CHECK(c == 2);
  CHECK(gf == QPoly({1, 1}, 1));  // volumes 1 and 2

  CHECK_THROWS_AS(
      enumerate_watermelons(2, 1, 1, 0, 2, [](const PathNest&, long) {}),
      InvalidDeviation);
}

TEST_CASE("volume additivity inside each watermelon") {
  for (long N = 1; N <= 3; ++N)
    for (long mc = 0; mc <= 3; ++mc)
      enumerate_watermelons(N, N, mc, 0, 0, [&](const PathNest& w, long vol) {
        // split the glued nest back into its halves
        PathNest star = w, conj = w;
        star.steps.assign(static_cast<size_t>(N), {});
        conj.steps.assign(static_cast<size_t>(N), {});
        for (long p = 0; p < N; ++p) {
          star.steps[static_cast<size_t>(p)] =
              std::vector<long>(w.steps[static_cast<size_t>(p)].begin(),
                                w.steps[static_cast<size_t>(p)].begin() + N);
          conj.steps[static_cast<size_t>(p)] =
              std::vector<long>(w.steps[static_cast<size_t>(p)].begin() + N,
                                w.steps[static_cast<size_t>(p)].end());
        }
        const long cw = nest_volume(star, VolumeFlavor::StarExtended);
        const long bw = nest_volume(conj, VolumeFlavor::ConjExtended);
        CHECK(cw + bw == vol);
        CHECK(vol == nest_volume(w, VolumeFlavor::Melon));
      });
}

TEST_CASE("deviation volume additivity") {
  for (long N = 1; N <= 3; ++N)
    for (long L = 0; L <= N; ++L)
      for (long mc = 0; mc <= 2; ++mc)
        for (long delta : {0L, N - L})
          enumerate_watermelons(N, L, mc, 0, delta, [&](const PathNest& w,
                                                        long vol) {
            PathNest star = w, conj = w;
            star.k = N - L;
            star.lambda = w.lambda;
            star.steps.assign(static_cast<size_t>(N), {});
            conj.steps.assign(static_cast<size_t>(N), {});
            for (long p = 0; p < N; ++p) {
              star.steps[static_cast<size_t>(p)] =
                  std::vector<long>(w.steps[static_cast<size_t>(p)].begin(),
                                    w.steps[static_cast<size_t>(p)].begin() + N);
              conj.steps[static_cast<size_t>(p)] =
                  std::vector<long>(w.steps[static_cast<size_t>(p)].begin() + N,
                                    w.steps[static_cast<size_t>(p)].end());
            }
            const long cw = nest_volume(
                star, delta == 0 ? VolumeFlavor::StarExtended
                                 : VolumeFlavor::StarExtendedDev);
            const long bw = nest_volume(conj, VolumeFlavor::ConjExtended);
            CHECK(cw + bw == vol);
          });
}

TEST_CASE("star generating functions against their specializations") {
  for (long N = 1; N <= 3; ++N)
    for (long k = 0; k <= std::min(N, 2L); ++k)
      for (long a = 0; a <= 2; ++a)
        for (long b = 0; b <= a; ++b) {
          const Partition lam = (N - k >= 2) ? Partition({a, b}) : Partition({a});
          if (lam.length() > N - k) continue;
          CHECK_NOTHROW(star_gf(lam, N, k, false));
          CHECK_NOTHROW(star_gf(lam, N, k, true));
        }
  CHECK_NOTHROW(conj_star_gf(Partition({2, 1}), 3, 2));
}

TEST_CASE("watermelon generating functions match every closed form") {
  for (long N = 1; N <= 3; ++N)
    for (long mc = 0; mc <= 3; ++mc)
      for (long n = 0; n <= mc; ++n)
        CHECK_NOTHROW(watermelon_gf(N, mc, n));
  for (long N = 1; N <= 3; ++N)
    for (long L = 0; L <= N; ++L)
      for (long mc = 0; mc <= 3; ++mc)
        for (long delta : {0L, N - L})
          CHECK_NOTHROW(watermelon_gf_dev(N, L, mc, delta));
  CHECK(watermelon_gf(1, 1, 0) == QPoly({1, 1}, 0));
  CHECK(watermelon_gf(2, 1, 0) == zq_product(2, 2, 1));
  CHECK(watermelon_gf_dev(2, 1, 1, 0) == watermelon_det(2, 1, 1));
}

TEST_CASE("random turns walker counts") {
  CHECK(random_turns_count({0}, {0}, 2, 3) == 2);
  CHECK(random_turns_count({1, 0}, {2, 0}, 1, 4) == 1);
  CHECK(random_turns_count({2, 0}, {2, 0}, 0, 4) == 1);
  CHECK(random_turns_count({2, 0}, {1, 0}, 0, 4) == 0);
  CHECK_THROWS_AS(random_turns_count({2, 2}, {1, 0}, 1, 4), Collision);
  CHECK_THROWS_AS(random_turns_count({2, 1}, {0}, 1, 4), SizeMismatch);
}

TEST_CASE("walker count routes agree") {
  for (long N = 1; N <= 3; ++N)
    for (long M = std::max(1L, N - 1); M <= 5; ++M) {
      if (N > M + 1) continue;
      std::vector<std::vector<long>> cfgs;
      std::vector<long> cur;
      std::function<void(long)> rec = [&](long next) {
        if (static_cast<long>(cur.size()) == N) {
          cfgs.push_back(cur);
          return;
        }
        for (long s = next; s >= N - static_cast<long>(cur.size()) - 1; --s) {
          cur.push_back(s);
          rec(s - 1);
          cur.pop_back();
        }
      };
      rec(M);
      for (long K = 0; K <= 5; ++K)
        for (const auto& l : cfgs)
          for (const auto& j : cfgs)
            CHECK(random_turns_count(l, j, K, M) ==
                  random_turns_count_det(l, j, K, M));
    }
}

TEST_CASE("single-walker count is the hopping matrix power") {
  // N = 1 reduces the determinant sum to a plain matrix power; the M = 1
  // chain doubles the bond, so counts come with multiplicity 2 per hop.
  CHECK(random_turns_count({0}, {0}, 2, 1) == 4);
  CHECK(random_turns_count({0}, {1}, 3, 1) == 8);
}

TEST_CASE("bottleneck counts") {
  CHECK(bottleneck_count({2}, {2}, 1, 1, 1, 3) == 2);
  // m = 0 removes the constraint
  for (long K1 = 0; K1 <= 3; ++K1)
    for (long K2 = 0; K2 <= 3; ++K2)
      CHECK(bottleneck_count({2, 0}, {3, 1}, K1, K2, 0, 4) ==
            random_turns_count({2, 0}, {3, 1}, K1 + K2, 4));
  // intermediate state in the forbidden zone contributes nothing
  CHECK(bottleneck_count({1}, {1}, 1, 1, 1, 2) == 1);  // only via site 2
}

TEST_CASE("bottleneck gluing matches the masked evolution everywhere small") {
  for (long N = 1; N <= 2; ++N)
    for (long M = N; M <= 5; ++M) {
      std::vector<long> l, j;
      for (long s = 0; s < N; ++s) l.push_back(M - s);
      for (long s = 0; s < N; ++s) j.push_back(N - 1 - s);
      for (long K1 = 0; K1 <= 3; ++K1)
        for (long K2 = 0; K2 <= 3; ++K2)
          for (long m = 0; m <= M; ++m)
            CHECK_NOTHROW(bottleneck_count(l, j, K1, K2, m, M));
    }
}

TEST_CASE("trajectory enumeration matches the count") {
  long c = 0;
  enumerate_random_turns_paths({1, 0}, {2, 0}, 3, 4,
                               [&](const PathNest&) { ++c; });
  CHECK(BigInt(c) == random_turns_count({1, 0}, {2, 0}, 3, 4));
}

TEST_CASE("nest export is valid JSON with step totals") {
  std::vector<PathNest> nests;
  std::vector<long> vols;
  enumerate_watermelons(2, 2, 1, 0, 0, [&](const PathNest& w, long v) {
    nests.push_back(w);
    vols.push_back(v);
  });
  const std::string doc = nest_family_json(nests, vols);
  CHECK(doc.find("\"watermelon\"") != std::string::npos);
  CHECK(doc.find("\"volume\"") != std::string::npos);
}
