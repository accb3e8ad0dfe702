#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "xx0/partitions.hpp"

using namespace xx0;

TEST_CASE("staircase conversions") {
  // Young-diagram correspondence at M = 8, N = 4
  CHECK(to_strict(Partition({5, 3, 2, 2})) == StrictPartition({8, 5, 3, 2}));
  CHECK(to_weak(StrictPartition({8, 5, 3, 2})) == Partition({5, 3, 2, 2}));

  CHECK(to_strict(Partition({0, 0, 0, 0})) == staircase(4));

  // deviation k = 2 extension at N = 6
  CHECK(mu_hat(Partition({5, 5, 3, 2}), 2) ==
        StrictPartition({10, 9, 6, 4, 1, 0}));

  CHECK_THROWS_AS(StrictPartition({3, 3}), NotStrict);
  CHECK_THROWS_AS(Partition({1, 2}), Error);
}

TEST_CASE("partitions in a box: counts and order") {
  auto p1 = partitions_in_box(1, 2, 0);
  REQUIRE(p1.size() == 3);
  CHECK(p1[0] == Partition({2}));
  CHECK(p1[2] == Partition({0}));

  auto p2 = partitions_in_box(2, 1, 0);
  REQUIRE(p2.size() == 3);
  CHECK(p2[0] == Partition({1, 1}));
  CHECK(p2[1] == Partition({1, 0}));
  CHECK(p2[2] == Partition({0, 0}));

  auto p3 = partitions_in_box(2, 2, 1);
  REQUIRE(p3.size() == 3);
  CHECK(p3[0] == Partition({2, 2}));
  CHECK(p3[1] == Partition({2, 1}));
  CHECK(p3[2] == Partition({1, 1}));

  for (long n = 0; n <= 4; ++n)
    for (long bound = 0; bound <= 4; ++bound)
      for (long floor = 0; floor <= bound; ++floor)
        CHECK(binomial(n + bound - floor, n) ==
              BigInt(static_cast<long>(partitions_in_box(n, bound, floor).size())));
}

TEST_CASE("plane partition enumeration counts") {
  long c = 0;
  iter_plane_partitions(1, 1, 1, [&](const PlanePartition&) { ++c; });
  CHECK(c == 2);
  c = 0;
  iter_plane_partitions(2, 2, 1, [&](const PlanePartition&) { ++c; });
  CHECK(c == 6);
  c = 0;
  iter_plane_partitions(2, 2, 2, [&](const PlanePartition&) { ++c; });
  CHECK(c == 20);
}

TEST_CASE("generating function vs brute force enumeration") {
  for (long L = 0; L <= 4; ++L)
    for (long N = 0; N <= 4; ++N)
      for (long K = 0; K <= 4; ++K) {
        QPoly brute;
        iter_plane_partitions(L, N, K, [&](const PlanePartition& pp) {
          brute += QPoly::q(pp.volume());
        });
        CHECK(brute == zq_product(L, N, K));
      }
}

TEST_CASE("box symmetry of the generating function") {
  for (long L = 0; L <= 4; ++L)
    for (long N = L; N <= 4; ++N)
      for (long K = N; K <= 4; ++K) {
        const QPoly base = zq_product(L, N, K);
        CHECK(base == zq_product(L, K, N));
        CHECK(base == zq_product(N, L, K));
        CHECK(base == zq_product(N, K, L));
        CHECK(base == zq_product(K, L, N));
        CHECK(base == zq_product(K, N, L));
      }
}

TEST_CASE("macmahon counts") {
  CHECK(macmahon_count(1, 1, 1) == 2);
  CHECK(macmahon_count(2, 2, 1) == 6);
  CHECK(macmahon_count(2, 2, 2) == 20);
  for (long L = 0; L <= 5; ++L)
    for (long N = 0; N <= 5; ++N)
      for (long K = 0; K <= 5; ++K)
        CHECK(macmahon_count(L, N, K) == zq_product(L, N, K).eval_at_one());
}

TEST_CASE("conversion round trip on random partitions") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> len(1, 8), part(0, 12);
  for (int rep = 0; rep < 10000; ++rep) {
    std::vector<long> parts(static_cast<size_t>(len(rng)));
    for (auto& p : parts) p = part(rng);
    std::sort(parts.rbegin(), parts.rend());
    const Partition lam(parts);
    CHECK(to_weak(to_strict(lam)) == lam);
  }
}

TEST_CASE("hat extension keeps trailing zeros significant") {
  const Partition lam({3, 1});
  CHECK(hat_extend(lam, 2) == Partition({3, 1, 0, 0}));
  CHECK(hat_extend(lam, 2).length() == 4);
  CHECK(lam.weight() == hat_extend(lam, 2).weight());
}
