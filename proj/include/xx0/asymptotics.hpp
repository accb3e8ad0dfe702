#pragma once

#include "xx0/xx0chain.hpp"

namespace xx0 {

struct MehtaResult {
  double value = 0.0;      // prod_{l<N} l! / sqrt(2 pi); inf when it overflows
  double log_value = 0.0;
  double estimate = 0.0;   // (N^2/2) log N - 3 N^2 / 4
  double difference = 0.0; // log_value - estimate, O(log N)
};

MehtaResult mehta_integral(long N);

enum class AsymptoteKind { Amplitude, Persistence, TwoTime, Autocorr };

struct AsymptoteParams {
  long N = 1;
  long M = 60;
  long n = 0;
  long m = 0;
  double t_min = 0.0;  // 0 -> automatic window
  double t_max = 0.0;
  int grid_points = 12;
  long budget = 2'000'000;
  int jobs = 1;
};

struct AsymptoteReport {
  double predicted_amplitude = 0.0;
  double predicted_exponent = 0.0;  // per time variable, N^2/2
  double fitted_exponent = 0.0;
  double fitted_amplitude = 0.0;
  double relative_amplitude_error = 0.0;
  double t_min = 0.0;
  double t_max = 0.0;
  bool regime_ok = false;   // 1 << N << M plausibility
  bool window_ok = false;   // false when the window collides with recurrence
};

/// Predicts the large-t decay from the combinatorial amplitude formulas and
/// fits the exact correlator on a log-spaced grid inside the window.
AsymptoteReport leading_asymptote(AsymptoteKind kind, const AsymptoteParams& p);

}  // namespace xx0
