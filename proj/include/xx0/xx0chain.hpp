#pragma once

#include <complex>
#include <vector>

#include "xx0/paths.hpp"

namespace xx0 {

/// Periodic chain of M+1 sites carrying N down spins.
struct ChainConfig {
  long M = 0;
  long N = 0;
  long mcal() const { return M - N + 1; }
};

/// Spin-down site set, strictly decreasing.
struct BasisState {
  std::vector<long> sites;
};

/// Ground-state Bethe data for a fixed particle number.
struct BetheData {
  std::vector<double> theta;
  double energy = 0.0;
  double norm_sq = 1.0;
};

/// Complex value with a crude absolute-error budget.
struct Amplitude {
  std::complex<double> value;
  double abs_err = 0.0;
};

struct SumOptions {
  long budget = 2'000'000;  // cap on enumerated mode subsets
  int jobs = 1;
};

/// True when the hopping matrix's two Kronecker terms overlap or nearly so;
/// results are still computed from the literal definitions.
bool degenerate_geometry(long M);

/// Allowed single-particle momenta in the N-particle sector:
/// phi_s = 2*pi/(M+1) * (s - (N-1)/2).  For odd N these are the periodic
/// hopping-matrix modes; for even N the boundary bond of the equivalent free
/// fermions is reversed and the lattice shifts by half a step.
std::vector<double> sector_modes(long M, long N);

/// Single-particle propagator matrix e^{(t/2) Delta_N} on the N-particle
/// sector, with the seam bond of Delta signed by (-1)^(N-1).
std::vector<std::vector<double>> propagator_matrix(long M, long N, double t);

/// (e^{(t/2) Delta})_{jl} for one walker.
Amplitude hopping_propagator(long j, long l, double t, long M);

/// N-particle transition amplitude e^{-tN} det(G(j_r, l_s | t)).
Amplitude amplitude(const BasisState& j, const BasisState& l, double t, long M);

/// Same amplitude as a mode-subset spectral sum.
Amplitude amplitude_spectral(const BasisState& j, const BasisState& l, double t,
                             long M);

/// Same amplitude from the power series with integer walk-count coefficients.
Amplitude amplitude_series(const BasisState& j, const BasisState& l, double t,
                           long M, double tail_eps = 1e-13);

/// Two-time amplitude with the projector onto sites >= m in between.
Amplitude two_time_amplitude(const BasisState& j, const BasisState& l, double t1,
                             double t2, long m, long M);

/// Ground-state phases, energy and squared norm for N - n particles.
BetheData bethe_ground(const ChainConfig& cfg, long n);

/// Closed form of the ground-state energy.
double ground_energy_closed(long M, long n_particles);

/// Projector form factor P_{mcal/m}(v^-2, u^2), exact.
Scalar projector_formfactor(const ChainConfig& cfg, const EvalPoint& v,
                            const EvalPoint& u, long m);

/// q-parameterized projector form factor; asserted equal to
/// q^{m N^2} Z_q(N, N, mcal - m).
QPoly projector_formfactor_q(const ChainConfig& cfg, long m);

/// Domain-wall form factor (prod u_l^{2n}) P_mcal(v^-2, u^2) with the
/// (N-n)-tuple u; exact.
Scalar domainwall_formfactor(const ChainConfig& cfg, const EvalPoint& v,
                             const EvalPoint& u, long n);

/// q-parameterized domain-wall form factor; asserted equal to
/// q^{n(N-n)(N-n-1)/2} Z_q(N-n, N, mcal).
QPoly domainwall_formfactor_q(const ChainConfig& cfg, long n);

/// Matrix element of the annihilating domain wall against a single basis
/// state labelled by lambda: (prod_{l} v_l^{-2n}) S_lambda(v^-2).
Scalar domainwall_state_element(const EvalPoint& v, const Partition& lambda,
                                long n);

/// Persistence of domain wall over the (N-n)-particle ground state.
double persistence(const ChainConfig& cfg, long n, double t,
                   const SumOptions& opts = {});

/// Dynamical auto-correlation with the bottleneck projector.
double autocorrelation(const ChainConfig& cfg, long n, long m, double t1,
                       double t2, const SumOptions& opts = {});

}  // namespace xx0
