#include "xx0/xx0chain.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <numbers>
#include <thread>

namespace xx0 {

namespace {

constexpr double kPi = std::numbers::pi;

void check_state(const BasisState& s, long M) {
  for (size_t i = 0; i < s.sites.size(); ++i) {
    ensure(s.sites[i] >= 0 && s.sites[i] <= M, "site outside the chain");
    for (size_t k = i + 1; k < s.sites.size(); ++k)
      if (s.sites[i] == s.sites[k]) throw Collision("repeated site in state");
  }
}

std::vector<long> sorted_desc(std::vector<long> v) {
  std::sort(v.rbegin(), v.rend());
  return v;
}

Partition state_to_partition(const std::vector<long>& sites_desc) {
  const long n = static_cast<long>(sites_desc.size());
  std::vector<long> lam(sites_desc);
  for (long i = 0; i < n; ++i) lam[static_cast<size_t>(i)] -= n - 1 - i;
  return Partition(std::move(lam));
}

double det_real(std::vector<std::vector<double>> a) {
  const size_t n = a.size();
  double det = 1.0;
  for (size_t k = 0; k < n; ++k) {
    size_t piv = k;
    for (size_t i = k + 1; i < n; ++i)
      if (std::abs(a[i][k]) > std::abs(a[piv][k])) piv = i;
    if (a[piv][k] == 0.0) return 0.0;
    if (piv != k) {
      std::swap(a[piv], a[k]);
      det = -det;
    }
    det *= a[k][k];
    for (size_t i = k + 1; i < n; ++i) {
      const double f = a[i][k] / a[k][k];
      for (size_t j = k + 1; j < n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return det;
}

double hadamard_bound(const std::vector<std::vector<double>>& a) {
  double b = 1.0;
  for (const auto& row : a) {
    double s = 0.0;
    for (double v : row) s += v * v;
    b *= std::sqrt(s);
  }
  return b;
}

void enumerate_subsets(long M, long N,
                       const std::function<void(const std::vector<long>&)>& fn) {
  std::vector<long> pick;
  std::function<void(long)> rec = [&](long next) {
    if (static_cast<long>(pick.size()) == N) {
      fn(pick);
      return;
    }
    for (long s = next; s <= M - (N - 1 - static_cast<long>(pick.size())); ++s) {
      pick.push_back(s);
      rec(s + 1);
      pick.pop_back();
    }
  };
  rec(0);
}

BigInt subset_count(long M, long N) { return binomial(M + 1, N); }

}  // namespace

bool degenerate_geometry(long M) { return M <= 2; }

std::vector<double> sector_modes(long M, long N) {
  std::vector<double> phi;
  for (long s = 0; s <= M; ++s)
    phi.push_back(2.0 * kPi / static_cast<double>(M + 1) *
                  (static_cast<double>(s) - static_cast<double>(N - 1) / 2.0));
  return phi;
}

std::vector<std::vector<double>> propagator_matrix(long M, long N, double t) {
  const long sites = M + 1;
  std::vector<std::vector<double>> g(static_cast<size_t>(sites),
                                     std::vector<double>(static_cast<size_t>(sites)));
  if (M == 0) {
    g[0][0] = std::exp(t / 2.0);  // Delta_00 = 1 on the one-site chain
    return g;
  }
  const auto phi = sector_modes(M, N);
  std::vector<double> boltz(phi.size());
  for (size_t s = 0; s < phi.size(); ++s) boltz[s] = std::exp(t * std::cos(phi[s]));
  for (long j = 0; j <= M; ++j)
    for (long l = j; l <= M; ++l) {
      double acc = 0.0;
      for (size_t s = 0; s < phi.size(); ++s)
        acc += std::cos(phi[s] * static_cast<double>(j - l)) * boltz[s];
      acc /= static_cast<double>(sites);
      g[static_cast<size_t>(j)][static_cast<size_t>(l)] = acc;
      g[static_cast<size_t>(l)][static_cast<size_t>(j)] = acc;
    }
  return g;
}

Amplitude hopping_propagator(long j, long l, double t, long M) {
  ensure(j >= 0 && j <= M && l >= 0 && l <= M, "hopping_propagator: bad sites");
  const auto g = propagator_matrix(M, 1, t);
  Amplitude out;
  out.value = g[static_cast<size_t>(j)][static_cast<size_t>(l)];
  out.abs_err = DBL_EPSILON * static_cast<double>(M + 1) * std::exp(std::abs(t));
  return out;
}

Amplitude amplitude(const BasisState& j, const BasisState& l, double t, long M) {
  if (j.sites.size() != l.sites.size())
    throw SizeMismatch("amplitude: particle numbers differ");
  check_state(j, M);
  check_state(l, M);
  const long N = static_cast<long>(j.sites.size());
  const auto jo = sorted_desc(j.sites), lo = sorted_desc(l.sites);
  const auto g = propagator_matrix(M, N, t);
  std::vector<std::vector<double>> m(static_cast<size_t>(N),
                                     std::vector<double>(static_cast<size_t>(N)));
  for (long r = 0; r < N; ++r)
    for (long s = 0; s < N; ++s)
      m[static_cast<size_t>(r)][static_cast<size_t>(s)] =
          g[static_cast<size_t>(jo[static_cast<size_t>(r)])]
           [static_cast<size_t>(lo[static_cast<size_t>(s)])];
  Amplitude out;
  const double bound = hadamard_bound(m);
  out.value = std::exp(-t * static_cast<double>(N)) * det_real(std::move(m));
  out.abs_err = DBL_EPSILON * static_cast<double>(N * N + M + 1) * (1.0 + bound);
  return out;
}

Amplitude amplitude_spectral(const BasisState& j, const BasisState& l, double t,
                             long M) {
  if (j.sites.size() != l.sites.size())
    throw SizeMismatch("amplitude_spectral: particle numbers differ");
  check_state(j, M);
  check_state(l, M);
  const long N = static_cast<long>(j.sites.size());
  const Partition lam_l = state_to_partition(sorted_desc(j.sites));
  const Partition lam_r = state_to_partition(sorted_desc(l.sites));
  const auto phi = sector_modes(M, N);

  std::complex<double> acc = 0.0;
  double mag = 0.0;
  enumerate_subsets(M, N, [&](const std::vector<long>& pick) {
    std::vector<Cplx> zp, zm;
    double energy = static_cast<double>(N);
    for (long s : pick) {
      const double p = phi[static_cast<size_t>(s)];
      zp.push_back(std::polar(1.0, p));
      zm.push_back(std::polar(1.0, -p));
      energy -= std::cos(p);
    }
    const Cplx v = vandermonde_det_c(zp);
    const Cplx term = std::exp(-t * energy) * std::norm(v) *
                      schur_eval_c(lam_l, zp) * schur_eval_c(lam_r, zm);
    acc += term;
    mag += std::abs(term);
  });
  const double scale = std::pow(static_cast<double>(M + 1), static_cast<double>(N));
  Amplitude out;
  out.value = acc / scale;
  out.abs_err = DBL_EPSILON * mag / scale * 64.0;
  return out;
}

Amplitude amplitude_series(const BasisState& j, const BasisState& l, double t,
                           long M, double tail_eps) {
  if (j.sites.size() != l.sites.size())
    throw SizeMismatch("amplitude_series: particle numbers differ");
  const long N = static_cast<long>(j.sites.size());
  // Counts grow at most like (2N)^K, so (t/2)^K/K! * counts converges fast.
  long k_max = 8;
  while (std::pow(t * static_cast<double>(N), static_cast<double>(k_max)) /
             std::tgamma(static_cast<double>(k_max + 1)) >
         tail_eps)
    ++k_max;
  k_max += 4;
  const auto counts = random_turns_count_profile(l.sites, j.sites, k_max, M);
  double acc = 0.0, term_scale = 1.0;  // (t/2)^K / K!
  for (long K = 0; K <= k_max; ++K) {
    acc += term_scale * counts[static_cast<size_t>(K)].get_d();
    term_scale *= (t / 2.0) / static_cast<double>(K + 1);
  }
  Amplitude out;
  out.value = std::exp(-t * static_cast<double>(N)) * acc;
  out.abs_err = tail_eps + DBL_EPSILON * std::abs(acc) * static_cast<double>(k_max);
  return out;
}

Amplitude two_time_amplitude(const BasisState& j, const BasisState& l, double t1,
                             double t2, long m, long M) {
  if (j.sites.size() != l.sites.size())
    throw SizeMismatch("two_time_amplitude: particle numbers differ");
  check_state(j, M);
  check_state(l, M);
  ensure(m >= 0 && m <= M, "two_time_amplitude: bad bottleneck");
  const long N = static_cast<long>(j.sites.size());
  const auto jo = sorted_desc(j.sites), lo = sorted_desc(l.sites);
  const auto g1 = propagator_matrix(M, N, t1);
  const auto g2 = propagator_matrix(M, N, t2);
  std::vector<std::vector<double>> tm(static_cast<size_t>(N),
                                      std::vector<double>(static_cast<size_t>(N), 0.0));
  for (long r = 0; r < N; ++r)
    for (long s = 0; s < N; ++s) {
      double acc = 0.0;
      for (long k = m; k <= M; ++k)
        acc += g1[static_cast<size_t>(jo[static_cast<size_t>(r)])][static_cast<size_t>(k)] *
               g2[static_cast<size_t>(k)][static_cast<size_t>(lo[static_cast<size_t>(s)])];
      tm[static_cast<size_t>(r)][static_cast<size_t>(s)] = acc;
    }
  Amplitude out;
  const double bound = hadamard_bound(tm);
  out.value = std::exp(-(t1 + t2) * static_cast<double>(N)) * det_real(std::move(tm));
  out.abs_err =
      DBL_EPSILON * static_cast<double>(N * N * (M + 1)) * (1.0 + bound);
  return out;
}

double ground_energy_closed(long M, long n_particles) {
  if (n_particles == 0) return 0.0;
  const double denom = std::sin(kPi / static_cast<double>(M + 1));
  if (denom == 0.0) return 0.0;  // one-site chain
  return static_cast<double>(n_particles) -
         std::sin(kPi * static_cast<double>(n_particles) / static_cast<double>(M + 1)) /
             denom;
}

BetheData bethe_ground(const ChainConfig& cfg, long n) {
  ensure(n >= 0 && n <= cfg.N, "bethe_ground: bad reduction");
  ensure(cfg.N >= 0 && cfg.N <= cfg.M + 1, "bethe_ground: bad filling");
  const long np = cfg.N - n;
  BetheData bd;
  for (long jj = 1; jj <= np; ++jj)
    bd.theta.push_back(2.0 * kPi / static_cast<double>(cfg.M + 1) *
                       (static_cast<double>(np + 1) / 2.0 - static_cast<double>(jj)));

  double energy = static_cast<double>(np);
  for (double th : bd.theta) energy -= std::cos(th);
  bd.energy = energy;
  const double closed = ground_energy_closed(cfg.M, np);
  ensure(std::abs(energy - closed) <= 1e-12 * std::max(1.0, std::abs(closed)) + 1e-12,
         "bethe_ground: energy forms disagree");

  for (double th : bd.theta) {
    const std::complex<double> resid =
        std::polar(1.0, static_cast<double>(cfg.M + 1) * th) -
        std::complex<double>(np % 2 == 1 ? 1.0 : -1.0, 0.0);
    ensure(std::abs(resid) <= 1e-12, "bethe_ground: quantization residual");
  }

  std::vector<Cplx> z;
  for (double th : bd.theta) z.push_back(std::polar(1.0, th));
  const double vand = std::norm(vandermonde_det_c(z));
  bd.norm_sq =
      std::pow(static_cast<double>(cfg.M + 1), static_cast<double>(np)) / vand;
  return bd;
}

Scalar projector_formfactor(const ChainConfig& cfg, const EvalPoint& v,
                            const EvalPoint& u, long m) {
  ensure(static_cast<long>(v.size()) == cfg.N &&
             static_cast<long>(u.size()) == cfg.N,
         "projector_formfactor: tuple sizes");
  ensure(m >= 0 && m <= cfg.M, "projector_formfactor: bad m");
  if (m > cfg.mcal()) return Scalar(0);
  CBSpec spec;
  spec.N = cfg.N;
  spec.L = cfg.mcal();
  spec.n = m;
  for (const auto& e : v) spec.x.push_back(e.inverse().pow(2));
  for (const auto& e : u) spec.y.push_back(e.pow(2));
  try {
    return cb_pair_det(spec);
  } catch (const RepeatedPoint&) {
    return cb_pair_sum(spec);
  }
}

QPoly projector_formfactor_q(const ChainConfig& cfg, long m) {
  ensure(m >= 0 && m <= cfg.M, "projector_formfactor_q: bad m");
  const long N = cfg.N, mc = cfg.mcal();
  if (m > mc) return QPoly::zero();
  CBSpec spec;
  spec.N = N;
  spec.L = mc;
  spec.n = m;
  spec.x = q_powers(N);
  spec.y = q_powers_over_q(N);
  const QPoly out = cb_pair_det(spec).as_poly();
  ensure_identity(out == zq_product(N, N, mc - m).shifted(m * N * N),
                  "projector form factor vs boxed generating function");
  return out;
}

Scalar domainwall_formfactor(const ChainConfig& cfg, const EvalPoint& v,
                             const EvalPoint& u, long n) {
  ensure(n >= 0 && n <= cfg.N, "domainwall_formfactor: bad n");
  ensure(static_cast<long>(v.size()) == cfg.N &&
             static_cast<long>(u.size()) == cfg.N - n,
         "domainwall_formfactor: tuple sizes");
  EvalPoint xbar, y;
  Scalar pref(1);
  for (const auto& e : u) {
    xbar.push_back(e.pow(2));
    pref *= e.pow(static_cast<unsigned long>(2 * n));
  }
  for (const auto& e : v) y.push_back(e.inverse().pow(2));
  std::vector<long> i_set;
  for (long i = 1; i <= n; ++i) i_set.push_back(i);
  try {
    return pref * cb_restricted_det(xbar, y, cfg.mcal(), i_set);
  } catch (const RepeatedPoint&) {
    return pref * cb_restricted_sum(xbar, y, cfg.mcal());
  }
}

QPoly domainwall_formfactor_q(const ChainConfig& cfg, long n) {
  const long N = cfg.N, mc = cfg.mcal();
  EvalPoint v, u;
  // v^-2 = (q, ..., q^N), u^2 = (1, q, ..., q^{N-n-1}) through half powers is
  // not representable exactly; feed the squared tuples directly instead.
  EvalPoint xbar = q_powers_over_q(N - n);
  EvalPoint y = q_powers(N);
  Scalar pref(1);
  for (long l = 1; l <= N - n; ++l)
    pref *= Scalar::q_power(l - 1).pow(static_cast<unsigned long>(n));
  std::vector<long> i_set;
  for (long i = 1; i <= n; ++i) i_set.push_back(i);
  const QPoly out = (pref * cb_restricted_det(xbar, y, mc, i_set)).as_poly();
  const long e = n * (N - n) * (N - n - 1) / 2;
  ensure_identity(out == zq_product(N - n, N, mc).shifted(e),
                  "domain-wall form factor vs boxed generating function");
  ensure_identity(out.eval_at_one() == macmahon_count(N - n, N, mc),
                  "domain-wall form factor count at q = 1");
  return out;
}

Scalar domainwall_state_element(const EvalPoint& v, const Partition& lambda,
                                long n) {
  EvalPoint x;
  Scalar pref(1);
  for (const auto& e : v) {
    const Scalar inv2 = e.inverse().pow(2);
    x.push_back(inv2);
    pref *= inv2.pow(static_cast<unsigned long>(n));
  }
  return pref * schur_eval(lambda, x);
}

namespace {

struct ModeSubsetData {
  double energy = 0.0;
  double vand_sq = 0.0;
  Cplx overlap;  // restricted pair value against the Bethe tuple
};

std::vector<ModeSubsetData> collect_subsets(const ChainConfig& cfg, long n,
                                            const BetheData& bd,
                                            std::vector<std::vector<Cplx>>* phases) {
  const long N = cfg.N, M = cfg.M;
  const auto phi = sector_modes(M, N);
  std::vector<Cplx> xtheta;
  for (double th : bd.theta) xtheta.push_back(std::polar(1.0, th));

  std::vector<ModeSubsetData> data;
  enumerate_subsets(M, N, [&](const std::vector<long>& pick) {
    ModeSubsetData d;
    std::vector<Cplx> zp, zm;
    d.energy = static_cast<double>(N);
    for (long s : pick) {
      const double p = phi[static_cast<size_t>(s)];
      zp.push_back(std::polar(1.0, p));
      zm.push_back(std::polar(1.0, -p));
      d.energy -= std::cos(p);
    }
    d.vand_sq = std::norm(vandermonde_det_c(zp));
    d.overlap = cb_restricted_det_c(xtheta, zm, cfg.mcal());
    data.push_back(d);
    if (phases) phases->push_back(zp);
  });
  return data;
}

void check_budget(const BigInt& count, long budget, const char* what) {
  if (count > budget)
    throw ModeEnumerationTooLarge(std::string(what) +
                                  ": mode subsets exceed the budget");
}

}  // namespace

double persistence(const ChainConfig& cfg, long n, double t,
                   const SumOptions& opts) {
  ensure(n >= 0 && n <= cfg.N, "persistence: bad n");
  ensure(t >= 0.0, "persistence: negative time");
  check_budget(subset_count(cfg.M, cfg.N), opts.budget, "persistence");
  const BetheData bd = bethe_ground(cfg, n);
  const auto data = collect_subsets(cfg, n, bd, nullptr);

  const int jobs = std::max(1, opts.jobs);
  std::vector<double> partial(static_cast<size_t>(jobs), 0.0);
  auto work = [&](int w) {
    double acc = 0.0;
    for (size_t i = static_cast<size_t>(w); i < data.size();
         i += static_cast<size_t>(jobs))
      acc += std::exp(-t * data[i].energy) * data[i].vand_sq *
             std::norm(data[i].overlap);
    partial[static_cast<size_t>(w)] = acc;
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < jobs; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }
  double sum = 0.0;
  for (double p : partial) sum += p;

  std::vector<Cplx> xtheta;
  for (double th : bd.theta) xtheta.push_back(std::polar(1.0, th));
  const double vth = std::norm(vandermonde_det_c(xtheta));
  return vth * sum /
         std::pow(static_cast<double>(cfg.M + 1),
                  static_cast<double>(2 * cfg.N - n));
}

double autocorrelation(const ChainConfig& cfg, long n, long m, double t1,
                       double t2, const SumOptions& opts) {
  ensure(n >= 0 && n <= cfg.N, "autocorrelation: bad n");
  ensure(m >= 0 && m <= cfg.M, "autocorrelation: bad m");
  ensure(t1 >= 0.0 && t2 >= 0.0, "autocorrelation: negative time");
  check_budget(subset_count(cfg.M, cfg.N) * subset_count(cfg.M, cfg.N),
               opts.budget, "autocorrelation");
  const BetheData bd = bethe_ground(cfg, n);
  std::vector<std::vector<Cplx>> phases;
  const auto data = collect_subsets(cfg, n, bd, &phases);
  const long mc = cfg.mcal();

  const int jobs = std::max(1, opts.jobs);
  std::vector<Cplx> partial(static_cast<size_t>(jobs), Cplx(0.0, 0.0));
  auto work = [&](int w) {
    Cplx acc(0.0, 0.0);
    for (size_t a = static_cast<size_t>(w); a < data.size();
         a += static_cast<size_t>(jobs)) {
      // a: the later (t1) subset; b: the earlier (t2) subset.
      std::vector<Cplx> conj_a(phases[a].size());
      for (size_t i = 0; i < phases[a].size(); ++i) conj_a[i] = std::conj(phases[a][i]);
      for (size_t b = 0; b < data.size(); ++b) {
        const Cplx projector = cb_pair_det_c(conj_a, phases[b], mc, m);
        acc += std::exp(-t1 * data[a].energy - t2 * data[b].energy) *
               data[a].vand_sq * data[b].vand_sq * std::conj(data[a].overlap) *
               projector * data[b].overlap;
      }
    }
    partial[static_cast<size_t>(w)] = acc;
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < jobs; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }
  Cplx sum(0.0, 0.0);
  for (const Cplx& p : partial) sum += p;

  std::vector<Cplx> xtheta;
  for (double th : bd.theta) xtheta.push_back(std::polar(1.0, th));
  const double vth = std::norm(vandermonde_det_c(xtheta));
  const Cplx out = vth * sum /
                   std::pow(static_cast<double>(cfg.M + 1),
                            static_cast<double>(3 * cfg.N - n));
  ensure(std::abs(out.imag()) <= 1e-10 * std::max(1.0, std::abs(out.real())),
         "autocorrelation: non-real result");
  return out.real();
}

}  // namespace xx0
