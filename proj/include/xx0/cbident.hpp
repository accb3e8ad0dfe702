#pragma once

#include <complex>
#include <vector>

#include "xx0/schur.hpp"

namespace xx0 {

/// Parameters of a paired-Schur sum/determinant instance.
///   k == 0: sum over lambda in the box {(L/n)^N} of S_lambda(x) S_lambda(y).
///   k  > 0: restricted sum over lambda of length N-k of
///           S_lambda(xbar) S_lambdahat(y), xbar = x with positions i_set
///           dropped (n must be 0).
struct CBSpec {
  long N = 0;
  long L = 0;
  long n = 0;
  long k = 0;
  std::vector<long> i_set;  // strictly increasing 1-based positions in [N]
  EvalPoint x;
  EvalPoint y;
};

/// Direct summation side.
Scalar cb_pair_sum(const CBSpec& spec);

/// Determinant side; entries are geometric sums, so the removable
/// singularity x_i y_j = 1 takes its limit value automatically.
Scalar cb_pair_det(const CBSpec& spec);

/// Restricted sum over lambda (length = size of xbar) within {L^(N-k)}.
Scalar cb_restricted_sum(const EvalPoint& xbar, const EvalPoint& y, long L);

/// Determinant form of the restricted pair sum: sign and prefactor applied
/// verbatim, Vandermondes in the determinant convention.
Scalar cb_restricted_det(const EvalPoint& xbar, const EvalPoint& y, long L,
                         const std::vector<long>& i_set);

/// q-parameterized restricted determinant with rows
/// [(L+N)(j+i-1)]/[j+i-1] (complement) and q^{j(k-l)} (i_set), including the
/// stated sign and q-power prefactor.
QPoly q_restricted_det(long N, long L, const std::vector<long>& i_set);

/// Evaluates the restricted q-parameterized pair sum three ways (restricted
/// determinant, q-binomial determinant, double product), asserts exact
/// agreement and returns Z_q(N-k, N, L).  At k == 0 the shifted variants and
/// the q -> 1 count are checked as well.
QPoly boxed_gf_identity(long N, long k, long L);

/// Watermelon generating function with deviation N-L as a q-binomial
/// determinant; asserted equal to the boxed plane-partition product.
QPoly watermelon_det(long N, long L, long mcal);

/// Number of nests by the binomial determinant, asserted against the
/// product form.
BigInt gessel_viennot_count(long N, long L, long mcal);

/// Power-series truncation of prod_{i<=L, j<=N} 1/(1 - q^{k+i+j-1}), the
/// unbounded-height limit of the deviation generating function at delta = k.
QPoly normtrace_limit(long N, long L, long k, long max_degree);

// --- complex-point evaluations (spin-chain numerics) ------------------------

using Cplx = std::complex<double>;

Cplx cb_pair_det_c(const std::vector<Cplx>& x, const std::vector<Cplx>& y,
                   long L, long n);

/// Restricted determinant at complex points with i_set = [k] implied.
Cplx cb_restricted_det_c(const std::vector<Cplx>& xbar,
                         const std::vector<Cplx>& y, long L);

}  // namespace xx0
