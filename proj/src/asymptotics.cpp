#include "xx0/asymptotics.hpp"

#include <cmath>
#include <numbers>

namespace xx0 {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

MehtaResult mehta_integral(long N) {
  ensure(N >= 1, "mehta_integral: N must be positive");
  MehtaResult r;
  double logv = 0.0;
  for (long l = 0; l < N; ++l)
    logv += std::lgamma(static_cast<double>(l + 1)) - 0.5 * std::log(kTwoPi);
  r.log_value = logv;
  if (N <= 15) {
    double v = 1.0;
    for (long l = 0; l < N; ++l)
      v *= std::tgamma(static_cast<double>(l + 1)) / std::sqrt(kTwoPi);
    r.value = v;
  } else {
    r.value = std::exp(logv);
  }
  r.estimate = 0.5 * static_cast<double>(N) * static_cast<double>(N) *
                   std::log(static_cast<double>(N)) -
               0.75 * static_cast<double>(N) * static_cast<double>(N);
  r.difference = r.log_value - r.estimate;
  return r;
}

AsymptoteReport leading_asymptote(AsymptoteKind kind, const AsymptoteParams& p) {
  ensure(p.N >= 1 && p.M >= p.N, "leading_asymptote: bad sizes");
  const long N = p.N, M = p.M;
  const double i_n = mehta_integral(N).value;
  const double mode_measure =
      std::pow(kTwoPi / static_cast<double>(M + 1),
               static_cast<double>(N) * static_cast<double>(N));

  AsymptoteReport rep;
  rep.predicted_exponent = 0.5 * static_cast<double>(N) * static_cast<double>(N);
  rep.regime_ok = (N >= 2) && (M >= 8 * N);

  int time_vars = 1;
  std::function<double(double)> eval;
  BasisState ground_sites;
  for (long s = N - 1; s >= 0; --s) ground_sites.sites.push_back(s);

  switch (kind) {
    case AsymptoteKind::Amplitude: {
      // Transition amplitude between staircase states: both tableau counts 1.
      rep.predicted_amplitude = i_n;
      eval = [=](double t) {
        return amplitude(ground_sites, ground_sites, t, M).value.real();
      };
      break;
    }
    case AsymptoteKind::Persistence: {
      const double a = macmahon_count(N - p.n, N, M - N + 1).get_d();
      rep.predicted_amplitude = a * a * mode_measure * std::pow(i_n, 3);
      eval = [=](double t) {
        return persistence(ChainConfig{M, N}, p.n, t, {p.budget, p.jobs});
      };
      break;
    }
    case AsymptoteKind::TwoTime: {
      time_vars = 2;
      rep.predicted_amplitude =
          macmahon_count(N, N, M - p.m - N + 1).get_d() * i_n * i_n;
      eval = [=](double t) {
        return two_time_amplitude(ground_sites, ground_sites, t, t, p.m, M)
            .value.real();
      };
      break;
    }
    case AsymptoteKind::Autocorr: {
      time_vars = 2;
      const double a2 = macmahon_count(N - p.n, N, M - N + 1).get_d();
      rep.predicted_amplitude = macmahon_count(N, N, M - p.m - N + 1).get_d() *
                                a2 * a2 * mode_measure * std::pow(i_n, 4);
      eval = [=](double t) {
        return autocorrelation(ChainConfig{M, N}, p.n, p.m, t, t,
                               {p.budget, p.jobs});
      };
      break;
    }
  }

  rep.t_min = p.t_min > 0.0 ? p.t_min : 10.0;
  rep.t_max = p.t_max > 0.0
                  ? p.t_max
                  : std::min(0.5 * static_cast<double>(M + 1), 80.0);
  rep.window_ok = rep.t_max > rep.t_min;
  if (!rep.window_ok) return rep;  // reported, not fatal

  const int g = std::max(3, p.grid_points);
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int used = 0;
  for (int i = 0; i < g; ++i) {
    const double t = rep.t_min * std::pow(rep.t_max / rep.t_min,
                                          static_cast<double>(i) /
                                              static_cast<double>(g - 1));
    const double v = std::abs(eval(t));
    if (v <= 0.0 || !std::isfinite(v)) continue;
    const double x = std::log(t), y = std::log(v);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++used;
  }
  if (used < 3) {
    rep.window_ok = false;
    return rep;
  }
  const double denom = used * sxx - sx * sx;
  const double slope = (used * sxy - sx * sy) / denom;
  const double intercept = (sy - slope * sx) / used;
  rep.fitted_exponent = -slope / static_cast<double>(time_vars);
  rep.fitted_amplitude = std::exp(intercept);
  rep.relative_amplitude_error =
      std::abs(rep.fitted_amplitude - rep.predicted_amplitude) /
      std::max(1e-300, rep.predicted_amplitude);
  return rep;
}

}  // namespace xx0
