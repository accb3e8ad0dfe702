#include "xx0/paths.hpp"

#include <algorithm>
#include <map>

#include "json.hpp"

namespace xx0 {

std::vector<long> PathNest::line_totals() const {
  std::vector<long> tot;
  if (steps.empty()) return tot;
  tot.assign(steps.front().size(), 0);
  for (const auto& row : steps)
    for (size_t j = 0; j < row.size(); ++j) tot[j] += row[j];
  return tot;
}

long nest_volume(const PathNest& nest, VolumeFlavor flavor) {
  const auto tot = nest.line_totals();
  const long N = nest.N;
  auto weighted = [&](long from, std::function<long(long)> w) {
    long s = 0;
    for (long j = from; j <= static_cast<long>(tot.size()); ++j)
      s += w(j) * tot[static_cast<size_t>(j - 1)];
    return s;
  };
  switch (flavor) {
    case VolumeFlavor::StarPlain:
      return weighted(1, [&](long j) { return N - j; });
    case VolumeFlavor::StarExtended:
      return (N + 1) * nest.lambda.weight() - weighted(1, [](long j) { return j; });
    case VolumeFlavor::StarExtendedDev:
      return (N + nest.k + 1) * nest.lambda.weight() -
             weighted(1, [](long j) { return j; });
    case VolumeFlavor::ConjDual: {
      long s = 0;
      for (long a = 1; a <= N; ++a)
        s += (nest.mcal - nest.lambda.part(a - 1) - tot[static_cast<size_t>(a - 1)]) *
             (a - 1);
      return s;
    }
    case VolumeFlavor::ConjExtended: {
      long s = 0;
      for (long a = 1; a <= static_cast<long>(tot.size()); ++a)
        s += (nest.mcal - tot[static_cast<size_t>(a - 1)]) * (a - 1);
      return s;
    }
    case VolumeFlavor::Melon:
    case VolumeFlavor::MelonDev: {
      const long k = nest.k;
      const long delta = flavor == VolumeFlavor::MelonDev ? k : 0;
      long s = 0;
      for (long j = k + 1; j <= 2 * N; ++j)
        s += (2 * N - j) * tot[static_cast<size_t>(j - 1)];
      for (long j = k + 1; j <= N; ++j)
        s += delta * tot[static_cast<size_t>(j - 1)];
      return s - nest.mcal * N * (N - 1) / 2;
    }
  }
  throw Error("nest_volume: unknown flavor");
}

void enumerate_stars(const Partition& lambda, long N, long k,
                     const std::function<void(const PathNest&)>& fn) {
  ensure(k >= 0 && k <= N, "enumerate_stars: bad deviation");
  ensure(lambda.length() <= N - k, "enumerate_stars: shape too long");
  ssyt_enumerate_full(lambda, N, k + 1, [&](const Tableau& t) {
    PathNest nest;
    nest.kind = NestKind::Star;
    nest.N = N;
    nest.k = k;
    nest.lambda = lambda;
    nest.mu = mu_hat(lambda, N - lambda.length());
    nest.steps.assign(static_cast<size_t>(N), std::vector<long>(static_cast<size_t>(N), 0));
    for (size_t r = 0; r < t.size(); ++r)
      for (long v : t[r]) ++nest.steps[r][static_cast<size_t>(v - 1)];
    fn(nest);
  });
}

void enumerate_conj_stars(const Partition& lambda, long mcal, long N, long k,
                          const std::function<void(const PathNest&)>& fn) {
  ensure(k >= 0 && k <= N, "enumerate_conj_stars: bad deviation");
  ensure(lambda.length() <= N - k, "enumerate_conj_stars: shape too long");
  const Partition lam_hat = hat_extend(lambda, N - lambda.length());
  skew_ssyt_enumerate_full(lam_hat, mcal, N, [&](const Tableau& t) {
    // Deviation forces full columns of up-steps on the last k lines.
    if (k > 0) {
      std::vector<long> occ(static_cast<size_t>(N), 0);
      for (const auto& row : t)
        for (long v : row) ++occ[static_cast<size_t>(v - 1)];
      for (long a = N - k + 1; a <= N; ++a)
        if (occ[static_cast<size_t>(a - 1)] != mcal) return;
    }
    PathNest nest;
    nest.kind = NestKind::ConjStar;
    nest.N = N;
    nest.k = k;
    nest.mcal = mcal;
    nest.lambda = lam_hat;
    nest.mu = to_strict(lam_hat);
    nest.steps.assign(static_cast<size_t>(N), std::vector<long>(static_cast<size_t>(N), 0));
    for (size_t r = 0; r < t.size(); ++r)
      for (long v : t[r]) ++nest.steps[r][static_cast<size_t>(v - 1)];
    fn(nest);
  });
}

void enumerate_watermelons(long N, long L, long mcal, long n, long delta,
                           const std::function<void(const PathNest&, long)>& fn) {
  ensure(0 <= L && L <= N, "enumerate_watermelons: bad L");
  const long k = N - L;
  if (delta != 0 && delta != k)
    throw InvalidDeviation("enumerate_watermelons: delta must be 0 or N-L");
  if (k > 0) ensure(n == 0, "enumerate_watermelons: deviation requires n = 0");
  ensure(n >= 0 && n <= mcal, "enumerate_watermelons: bad floor");

  iter_partitions_in_box(L, mcal, n, [&](const Partition& lam_box) {
    // With a floor the star shape keeps parts >= n; deviation pads with zeros.
    std::vector<PathNest> stars, conjs;
    enumerate_stars(lam_box, N, k, [&](const PathNest& s) { stars.push_back(s); });
    enumerate_conj_stars(lam_box, mcal, N, 0,
                         [&](const PathNest& c) { conjs.push_back(c); });
    const StrictPartition glue = mu_hat(lam_box, k);
    for (const auto& s : stars)
      for (const auto& c : conjs) {
        PathNest nest;
        nest.kind = NestKind::Watermelon;
        nest.N = N;
        nest.k = k;
        nest.mcal = mcal;
        nest.lambda = hat_extend(lam_box, k);
        nest.mu = glue;
        nest.steps.assign(static_cast<size_t>(N),
                          std::vector<long>(static_cast<size_t>(2 * N), 0));
        for (long p = 0; p < N; ++p)
          for (long j = 0; j < N; ++j) {
            nest.steps[p][static_cast<size_t>(j)] = s.steps[p][static_cast<size_t>(j)];
            nest.steps[p][static_cast<size_t>(N + j)] = c.steps[p][static_cast<size_t>(j)];
          }
        fn(nest, nest_volume(nest, delta == 0 ? VolumeFlavor::Melon
                                              : VolumeFlavor::MelonDev));
      }
  });
}

QPoly star_gf(const Partition& lambda, long N, long k, bool barred) {
  QPoly gf;
  enumerate_stars(lambda, N, k, [&](const PathNest& nest) {
    gf += QPoly::q(nest_volume(nest, barred ? VolumeFlavor::StarExtendedDev
                                            : VolumeFlavor::StarExtended));
  });
  EvalPoint pt;
  if (barred) {
    // lines k+1..N carry q^{k+1}..q^N
    for (long i = k + 1; i <= N; ++i) pt.push_back(Scalar::q_power(i));
  } else {
    pt = q_powers(N - k);
  }
  ensure_identity(gf == schur_eval(lambda, pt).as_poly(),
                  "star generating function vs principal specialization");
  return gf;
}

QPoly conj_star_gf(const Partition& lambda, long mcal, long N) {
  QPoly gf;
  enumerate_conj_stars(lambda, mcal, N, 0, [&](const PathNest& nest) {
    gf += QPoly::q(nest_volume(nest, VolumeFlavor::ConjExtended));
  });
  ensure_identity(
      gf == schur_eval(hat_extend(lambda, N - lambda.length()), q_powers_over_q(N))
                .as_poly(),
      "conjugate star generating function vs principal specialization");
  return gf;
}

QPoly watermelon_gf(long N, long mcal, long n) {
  QPoly gf;
  enumerate_watermelons(N, N, mcal, n, 0,
                        [&](const PathNest&, long vol) { gf += QPoly::q(vol); });

  // Pair-sum form.
  CBSpec spec;
  spec.N = N;
  spec.L = mcal;
  spec.n = n;
  spec.x = q_powers(N);
  spec.y = q_powers_over_q(N);
  ensure_identity(gf == cb_pair_det(spec).as_poly(),
                  "watermelon volumes vs paired-sum determinant");

  // Schur form: shift the floor away, then specialize the doubled alphabet.
  std::vector<long> rect(static_cast<size_t>(N), mcal - n);
  rect.resize(static_cast<size_t>(2 * N), 0);
  const QPoly schur_form =
      schur_eval(Partition(rect), q_powers(2 * N))
          .as_poly()
          .shifted(n * N * N - (mcal - n) * N * (N + 1) / 2);
  ensure_identity(gf == schur_form, "watermelon volumes vs Schur specialization");
  return gf;
}

QPoly watermelon_gf_dev(long N, long L, long mcal, long delta) {
  const long k = N - L;
  QPoly gf;
  enumerate_watermelons(N, L, mcal, 0, delta,
                        [&](const PathNest&, long vol) { gf += QPoly::q(vol); });

  // Restricted pair-sum form with q_{N;k} fixed by delta.
  EvalPoint xbar;
  for (long i = 1; i <= L; ++i)
    xbar.push_back(Scalar::q_power(delta == 0 ? i : k + i));
  ensure_identity(gf == cb_restricted_sum(xbar, q_powers_over_q(N), mcal).as_poly(),
                  "deviation watermelon volumes vs restricted pair sum");

  // Schur form on N + L variables.
  std::vector<long> rect(static_cast<size_t>(N), mcal);
  rect.resize(static_cast<size_t>(N + L), 0);
  EvalPoint pt = q_powers(N);
  for (long i = N + 1; i <= 2 * N - k; ++i)
    pt.push_back(Scalar::q_power(delta + i));
  const QPoly schur_form = schur_eval(Partition(rect), pt)
                               .as_poly()
                               .shifted(-mcal * N * (N + 1) / 2);
  ensure_identity(gf == schur_form,
                  "deviation watermelon volumes vs Schur specialization");
  return gf;
}

// --- random turns ------------------------------------------------------------

namespace {

void check_sites(const std::vector<long>& s, long M) {
  for (size_t i = 0; i < s.size(); ++i) {
    ensure(s[i] >= 0 && s[i] <= M, "walker site outside the chain");
    for (size_t j = i + 1; j < s.size(); ++j)
      if (s[i] == s[j]) throw Collision("repeated walker site");
  }
}

std::vector<long> sorted_desc(std::vector<long> v) {
  std::sort(v.rbegin(), v.rend());
  return v;
}

long hop_weight(long a, long b, long M) {
  const long d = std::abs(a - b);
  return (d == 1 ? 1 : 0) + (d == M ? 1 : 0);
}

// Single-particle hopping with the seam bond signed by the sector parity:
// ring walkers of N hard-core particles are free fermions whose boundary
// bond carries (-1)^(N-1), and the determinant route needs that sign to
// count ring walks correctly.
long hop_weight_signed(long a, long b, long M, long n_walkers) {
  const long d = std::abs(a - b);
  const long seam_sign = n_walkers % 2 == 1 ? 1 : -1;
  return (d == 1 ? 1 : 0) + (d == M ? seam_sign : 0);
}

// All collision-free configurations of n sites on 0..M, sorted descending.
std::vector<std::vector<long>> all_configs(long n, long M) {
  std::vector<std::vector<long>> out;
  std::vector<long> cur;
  std::function<void(long)> rec = [&](long next) {
    if (static_cast<long>(cur.size()) == n) {
      out.push_back(cur);
      return;
    }
    for (long s = next; s >= static_cast<long>(n - cur.size()) - 1; --s) {
      cur.push_back(s);
      rec(s - 1);
      cur.pop_back();
    }
  };
  rec(M);
  return out;
}

struct ConfigSpace {
  std::vector<std::vector<long>> configs;
  std::map<std::vector<long>, long> index;

  explicit ConfigSpace(long n, long M) : configs(all_configs(n, M)) {
    for (size_t i = 0; i < configs.size(); ++i)
      index[configs[i]] = static_cast<long>(i);
  }

  // One application of the non-diagonal hop operator.
  std::vector<BigInt> step(const std::vector<BigInt>& v, long M) const {
    std::vector<BigInt> out(v.size());
    for (size_t c = 0; c < configs.size(); ++c) {
      if (v[c] == 0) continue;
      const auto& cfg = configs[c];
      for (size_t w = 0; w < cfg.size(); ++w)
        for (long target = 0; target <= M; ++target) {
          const long wt = hop_weight(target, cfg[w], M);
          if (wt == 0) continue;
          bool occupied = false;
          for (size_t o = 0; o < cfg.size(); ++o)
            occupied = occupied || (o != w && cfg[o] == target);
          if (occupied) continue;
          std::vector<long> next = cfg;
          next[w] = target;
          out[static_cast<size_t>(index.at(sorted_desc(next)))] += v[c] * wt;
        }
    }
    return out;
  }
};

std::vector<BigInt> dp_counts(const ConfigSpace& space, const std::vector<long>& from,
                              long K, long M) {
  std::vector<BigInt> v(space.configs.size(), 0);
  v[static_cast<size_t>(space.index.at(sorted_desc(from)))] = 1;
  for (long t = 0; t < K; ++t) v = space.step(v, M);
  return v;
}

using MatZ = std::vector<std::vector<BigInt>>;

MatZ hopping_matrix_signed(long M, long n_walkers) {
  MatZ d(static_cast<size_t>(M + 1), std::vector<BigInt>(static_cast<size_t>(M + 1), 0));
  for (long a = 0; a <= M; ++a)
    for (long b = 0; b <= M; ++b) d[a][b] = hop_weight_signed(a, b, M, n_walkers);
  return d;
}

MatZ mat_mul(const MatZ& a, const MatZ& b) {
  const size_t n = a.size();
  MatZ out(n, std::vector<BigInt>(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

BigInt det_int(MatZ m) {
  // Cofactor expansion; matrices here are at most 3x3 in practice.
  const size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  BigInt acc = 0;
  for (size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    MatZ minor;
    for (size_t i = 1; i < n; ++i) {
      std::vector<BigInt> row;
      for (size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(m[i][j]);
      minor.push_back(std::move(row));
    }
    const BigInt sub = det_int(std::move(minor));
    acc += (c % 2 == 0 ? m[0][c] : -m[0][c]) * sub;
  }
  return acc;
}

// Sector matrix power entry <to|(-H)^K|from> by dense multiplication.
BigInt sector_power_entry(const ConfigSpace& space, const std::vector<long>& from,
                          const std::vector<long>& to, long K, long M) {
  const size_t dim = space.configs.size();
  MatZ a(dim, std::vector<BigInt>(dim, 0));
  for (size_t c = 0; c < dim; ++c) {
    std::vector<BigInt> e(dim, 0);
    e[c] = 1;
    const auto col = space.step(e, M);
    for (size_t r = 0; r < dim; ++r) a[r][c] = col[r];
  }
  MatZ acc(dim, std::vector<BigInt>(dim, 0));
  for (size_t i = 0; i < dim; ++i) acc[i][i] = 1;
  for (long t = 0; t < K; ++t) acc = mat_mul(a, acc);
  const long r = space.index.at(sorted_desc(to));
  const long c = space.index.at(sorted_desc(from));
  return acc[static_cast<size_t>(r)][static_cast<size_t>(c)];
}

}  // namespace

BigInt random_turns_count(const std::vector<long>& l, const std::vector<long>& j,
                          long K, long M) {
  if (l.size() != j.size()) throw SizeMismatch("random_turns_count: sizes differ");
  check_sites(l, M);
  check_sites(j, M);
  ensure(K >= 0, "random_turns_count: negative step count");
  const ConfigSpace space(static_cast<long>(l.size()), M);
  const auto v = dp_counts(space, l, K, M);
  const BigInt by_dp = v[static_cast<size_t>(space.index.at(sorted_desc(j)))];
  ensure_identity(by_dp == sector_power_entry(space, l, j, K, M),
                  "walker DP vs sector matrix power");
  return by_dp;
}

BigInt random_turns_count_det(const std::vector<long>& l,
                              const std::vector<long>& j, long K, long M) {
  if (l.size() != j.size()) throw SizeMismatch("random_turns_count_det: sizes differ");
  check_sites(l, M);
  check_sites(j, M);
  const long n = static_cast<long>(l.size());
  const auto lo = sorted_desc(l);
  const auto jo = sorted_desc(j);

  std::vector<MatZ> powers{MatZ(static_cast<size_t>(M + 1),
                                std::vector<BigInt>(static_cast<size_t>(M + 1), 0))};
  for (long s = 0; s <= M; ++s) powers[0][s][s] = 1;
  const MatZ delta = hopping_matrix_signed(M, n);
  for (long p = 1; p <= K; ++p) powers.push_back(mat_mul(delta, powers.back()));

  // Compositions of K into n parts, with the multinomial weight.
  BigInt acc = 0;
  std::vector<long> comp(static_cast<size_t>(n), 0);
  std::function<void(long, long)> rec = [&](long pos, long left) {
    if (pos == n - 1) {
      comp[static_cast<size_t>(pos)] = left;
      BigInt mult = 1;
      for (long t = 2; t <= K; ++t) mult *= t;
      for (long p = 0; p < n; ++p) {
        BigInt f = 1;
        for (long t = 2; t <= comp[static_cast<size_t>(p)]; ++t) f *= t;
        mult /= f;
      }
      MatZ m(static_cast<size_t>(n), std::vector<BigInt>(static_cast<size_t>(n)));
      for (long r = 0; r < n; ++r)
        for (long s = 0; s < n; ++s)
          m[static_cast<size_t>(r)][static_cast<size_t>(s)] =
              powers[static_cast<size_t>(comp[static_cast<size_t>(r)])]
                    [static_cast<size_t>(jo[static_cast<size_t>(r)])]
                    [static_cast<size_t>(lo[static_cast<size_t>(s)])];
      acc += mult * det_int(std::move(m));
      return;
    }
    for (long take = 0; take <= left; ++take) {
      comp[static_cast<size_t>(pos)] = take;
      rec(pos + 1, left - take);
    }
  };
  rec(0, K);
  return acc;
}

std::vector<std::vector<long>> sector_configs(long n, long M) {
  return all_configs(n, M);
}

std::vector<std::vector<std::vector<BigInt>>> sector_power_tables(long n, long M,
                                                                  long k_max) {
  const ConfigSpace space(n, M);
  const size_t dim = space.configs.size();
  MatZ a(dim, std::vector<BigInt>(dim, 0));
  for (size_t c = 0; c < dim; ++c) {
    std::vector<BigInt> e(dim, 0);
    e[c] = 1;
    const auto col = space.step(e, M);
    for (size_t r = 0; r < dim; ++r) a[r][c] = col[r];
  }
  std::vector<std::vector<std::vector<BigInt>>> out;
  MatZ acc(dim, std::vector<BigInt>(dim, 0));
  for (size_t i = 0; i < dim; ++i) acc[i][i] = 1;
  out.push_back(acc);
  for (long k = 1; k <= k_max; ++k) {
    acc = mat_mul(a, acc);
    out.push_back(acc);
  }
  return out;
}

std::vector<BigInt> random_turns_count_profile(const std::vector<long>& l,
                                               const std::vector<long>& j,
                                               long k_max, long M) {
  if (l.size() != j.size()) throw SizeMismatch("count_profile: sizes differ");
  check_sites(l, M);
  check_sites(j, M);
  const ConfigSpace space(static_cast<long>(l.size()), M);
  std::vector<BigInt> v(space.configs.size(), 0);
  v[static_cast<size_t>(space.index.at(sorted_desc(l)))] = 1;
  const size_t at = static_cast<size_t>(space.index.at(sorted_desc(j)));
  std::vector<BigInt> out;
  out.push_back(v[at]);
  for (long K = 1; K <= k_max; ++K) {
    v = space.step(v, M);
    out.push_back(v[at]);
  }
  return out;
}

BigInt bottleneck_count(const std::vector<long>& l, const std::vector<long>& j,
                        long K1, long K2, long m, long M) {
  if (l.size() != j.size()) throw SizeMismatch("bottleneck_count: sizes differ");
  check_sites(l, M);
  check_sites(j, M);
  ensure(m >= 0 && m <= M, "bottleneck_count: bad bottleneck");
  const long n = static_cast<long>(l.size());
  const ConfigSpace space(n, M);

  // Direct: run K1 steps, annihilate configurations entering the forbidden
  // zone, run K2 more.
  auto v = dp_counts(space, l, K1, M);
  for (size_t c = 0; c < space.configs.size(); ++c)
    for (long s : space.configs[c])
      if (s < m) v[c] = 0;
  for (long t = 0; t < K2; ++t) v = space.step(v, M);
  const BigInt direct = v[static_cast<size_t>(space.index.at(sorted_desc(j)))];

  // Gluing: sum over admissible dissection configurations, the second leg
  // counted backwards from j (the hop operator is symmetric).
  const auto fwd = dp_counts(space, l, K1, M);
  const auto bwd = dp_counts(space, j, K2, M);
  BigInt glued = 0;
  for (size_t c = 0; c < space.configs.size(); ++c) {
    bool admissible = true;
    for (long s : space.configs[c]) admissible = admissible && (s >= m);
    if (admissible) glued += fwd[c] * bwd[c];
  }
  ensure_identity(direct == glued, "bottleneck gluing sum vs masked DP");
  return direct;
}

void enumerate_random_turns_paths(const std::vector<long>& l,
                                  const std::vector<long>& j, long K, long M,
                                  const std::function<void(const PathNest&)>& fn) {
  ensure(M >= 2, "trajectory enumeration requires M >= 2");
  check_sites(l, M);
  check_sites(j, M);
  const auto target = sorted_desc(j);
  std::vector<std::vector<long>> traj{sorted_desc(l)};
  std::function<void()> rec = [&]() {
    if (static_cast<long>(traj.size()) == K + 1) {
      if (traj.back() != target) return;
      PathNest nest;
      nest.kind = NestKind::RandomTurns;
      nest.N = static_cast<long>(l.size());
      nest.M = M;
      nest.trajectory = traj;
      fn(nest);
      return;
    }
    const auto cur = traj.back();
    for (size_t w = 0; w < cur.size(); ++w)
      for (long dir : {+1, -1}) {
        long target_site = (cur[w] + dir + (M + 1)) % (M + 1);
        bool occupied = false;
        for (size_t o = 0; o < cur.size(); ++o)
          occupied = occupied || (o != w && cur[o] == target_site);
        if (occupied) continue;
        auto next = cur;
        next[w] = target_site;
        traj.push_back(sorted_desc(next));
        rec();
        traj.pop_back();
      }
  };
  rec();
}

std::string PathNest::json() const {
  nlohmann::json out;
  switch (kind) {
    case NestKind::Star: out["kind"] = "star"; break;
    case NestKind::ConjStar: out["kind"] = "conj_star"; break;
    case NestKind::Watermelon: out["kind"] = "watermelon"; break;
    case NestKind::RandomTurns: out["kind"] = "random_turns"; break;
  }
  out["N"] = N;
  out["k"] = k;
  out["mcal"] = mcal;
  out["lambda"] = lambda.parts;
  out["mu"] = mu.parts;
  out["steps"] = line_totals();
  out["per_path_steps"] = steps;
  if (kind == NestKind::RandomTurns) {
    out["M"] = M;
    out["trajectory"] = trajectory;
  }
  return out.dump();
}

std::string nest_family_json(const std::vector<PathNest>& nests,
                             const std::vector<long>& volumes) {
  nlohmann::json arr = nlohmann::json::array();
  for (size_t i = 0; i < nests.size(); ++i) {
    auto item = nlohmann::json::parse(nests[i].json());
    if (i < volumes.size()) item["volume"] = volumes[i];
    arr.push_back(item);
  }
  return arr.dump(2);
}

}  // namespace xx0
