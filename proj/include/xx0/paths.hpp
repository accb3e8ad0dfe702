#pragma once

#include <functional>
#include <string>
#include <vector>

#include "xx0/cbident.hpp"

namespace xx0 {

enum class NestKind { Star, ConjStar, Watermelon, RandomTurns };

/// A nest of N mutually non-intersecting directed lattice paths, or a
/// random-turns trajectory bundle.
struct PathNest {
  NestKind kind = NestKind::Star;
  long N = 0;      // number of paths / walkers
  long k = 0;      // deviation (no steps on the first k lines)
  long mcal = 0;   // per-path up-step total for stars and watermelons
  long M = 0;      // chain size - 1 (random turns)
  Partition lambda;    // shape
  StrictPartition mu;  // endpoint ordinates / gluing line
  /// steps[p][j]: up-steps of path p on vertical line j+1 (1-based lines;
  /// N lines for stars, 2N for watermelons).
  std::vector<std::vector<long>> steps;
  /// Random turns only: site configurations (sorted descending), one per tick.
  std::vector<std::vector<long>> trajectory;

  std::vector<long> line_totals() const;
  std::string json() const;
};

enum class VolumeFlavor {
  StarPlain,         // sum over lines of (N - j) c_j
  StarExtended,      // (N+1)|lambda| - sum j c_j
  StarExtendedDev,   // (N+k+1)|lambda| - sum j c_j
  ConjDual,          // sum (mcal - lambda_a - b_a)(a-1)
  ConjExtended,      // sum (mcal - b_a)(a-1)
  Melon,             // deviation volume at delta = 0
  MelonDev,          // deviation volume at delta = k
};

long nest_volume(const PathNest& nest, VolumeFlavor flavor);

/// Stars of shape lambda with entries in [N] \ [k].
void enumerate_stars(const Partition& lambda, long N, long k,
                     const std::function<void(const PathNest&)>& fn);

/// Conjugate stars over the skew shape (mcal^N) \ lambda_hat; for k > 0 the
/// last k lines carry full columns of mcal up-steps.
void enumerate_conj_stars(const Partition& lambda, long mcal, long N, long k,
                          const std::function<void(const PathNest&)>& fn);

/// Watermelons: star and conjugate star glued along the dissection partition.
/// L == N requires delta == 0 and admits a floor n for the gluing parts;
/// L < N forces n == 0 and delta in {0, N-L}.
void enumerate_watermelons(long N, long L, long mcal, long n, long delta,
                           const std::function<void(const PathNest&, long)>& fn);

/// Generating functions over nest families, with the closed forms asserted.
QPoly star_gf(const Partition& lambda, long N, long k, bool barred);
QPoly conj_star_gf(const Partition& lambda, long mcal, long N);
QPoly watermelon_gf(long N, long mcal, long n);
QPoly watermelon_gf_dev(long N, long L, long mcal, long delta);

// --- random turns walkers ----------------------------------------------------

/// Number of K-step random-turns configurations taking the walker set l to j
/// on the periodic chain of M+1 sites; dynamic programming over collision-free
/// configurations, asserted against the sector matrix power.
BigInt random_turns_count(const std::vector<long>& l, const std::vector<long>& j,
                          long K, long M);

/// Same count through the multinomial sum of hopping-matrix-power
/// determinants; an independent route kept for cross-validation.
BigInt random_turns_count_det(const std::vector<long>& l,
                              const std::vector<long>& j, long K, long M);

/// All collision-free site configurations, sorted descending, in the
/// deterministic enumeration order shared by the walk tables.
std::vector<std::vector<long>> sector_configs(long n, long M);

/// Dense tables t[K][row][col] = <configs[row]| (-H)^K |configs[col]> for
/// K = 0..k_max, built by repeated matrix products.
std::vector<std::vector<std::vector<BigInt>>> sector_power_tables(long n, long M,
                                                                  long k_max);

/// Walk counts for every K in 0..k_max from a single sweep.
std::vector<BigInt> random_turns_count_profile(const std::vector<long>& l,
                                               const std::vector<long>& j,
                                               long k_max, long M);

/// Counts with an intermediate projector forbidding sites 0..m-1 between the
/// first K1 and the remaining K2 steps; computed by the gluing sum over
/// dissection configurations and asserted against the masked DP.
BigInt bottleneck_count(const std::vector<long>& l, const std::vector<long>& j,
                        long K1, long K2, long m, long M);

/// Explicit trajectory enumeration (drawing aid; requires M >= 2 so every
/// hop is simple).
void enumerate_random_turns_paths(const std::vector<long>& l,
                                  const std::vector<long>& j, long K, long M,
                                  const std::function<void(const PathNest&)>& fn);

std::string nest_family_json(const std::vector<PathNest>& nests,
                             const std::vector<long>& volumes);

}  // namespace xx0
