#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "xx0/exact.hpp"
#include "xx0/partitions.hpp"

namespace xx0 {

/// Schur polynomial S_lambda(x) as the ratio of alternants
/// det(x_j^{lambda_k + N - k}) / det(x_j^{N - k}), evaluated exactly.
///
/// Zero entries in x are admitted only when lambda carries at least that many
/// trailing zero parts; the evaluation then reduces to the Schur polynomial of
/// the truncated partition on the nonzero sub-tuple.  The all-ones point
/// resolves to the tableau count; any other repeated entry is rejected.
Scalar schur_eval(const Partition& lambda, const EvalPoint& x);

/// Same bialternant over complex doubles (points assumed distinct).
std::complex<double> schur_eval_c(const Partition& lambda,
                                  const std::vector<std::complex<double>>& x);

/// Number of semi-standard Young tableaux of shape lambda with entries in
/// [N], by the ratio-of-contents product.
BigInt ssyt_count_product(const Partition& lambda, long n_vars);

/// Enumerates the tableaux; fn receives the per-value occurrence vector
/// (c_1..c_N).  min_entry > 1 restricts fillings to {min_entry..N}.
void ssyt_enumerate(const Partition& lambda, long n_vars, long min_entry,
                    const std::function<void(const std::vector<long>&)>& fn);

/// Enumeration count with the product formula asserted against it.
BigInt schur_tableau_oracle(const Partition& lambda, long n_vars);

/// Sum of monomials over tableaux: the combinatorial route to S_lambda(x).
Scalar schur_from_tableaux(const Partition& lambda, const EvalPoint& x);

/// Skew Schur polynomial for the rectangle complement shape M^N \ lambda via
/// det(y_a^{M - lambda_{N-b+1} + N - b}) / det(y_a^{N-b}); the exponent
/// pattern is kept verbatim.  Cross-checked against
/// S_lambda(1/y) * prod y_a^M when the entries are invertible.
Scalar skew_schur_eval(const Partition& lambda, long mcal, const EvalPoint& y);

enum class PrincipalMode { QN, QN_OVER_Q, INV_QN };

/// S_lambda at (q,...,q^N), (1,...,q^{N-1}) or (q^-1,...,q^-N).
QPoly principal_specialization(const Partition& lambda, long n_vars,
                               PrincipalMode mode);

/// Complete homogeneous symmetric polynomial h_m(x).
Scalar complete_homogeneous(long m, const EvalPoint& x);

/// S_lambda(x) by the determinant of complete homogeneous polynomials;
/// an independent route used for cross-validation.
Scalar schur_jacobi_trudi(const Partition& lambda, const EvalPoint& x);

/// Skew semi-standard tableaux of shape (M^N) \ lambda with entries in [N];
/// fn receives the per-value occurrence vector (b_1..b_N).
void skew_ssyt_enumerate(const Partition& lambda, long mcal, long n_vars,
                         const std::function<void(const std::vector<long>&)>& fn);

using Tableau = std::vector<std::vector<long>>;  // rows of entry values

/// Full-tableau variants, used where per-row step counts are needed.
void ssyt_enumerate_full(const Partition& lambda, long n_vars, long min_entry,
                         const std::function<void(const Tableau&)>& fn);
void skew_ssyt_enumerate_full(const Partition& lambda, long mcal, long n_vars,
                              const std::function<void(const Tableau&)>& fn);

}  // namespace xx0
