#include "xx0/cbident.hpp"

#include <algorithm>

namespace xx0 {

namespace {

EvalPoint drop_positions(const EvalPoint& x, const std::vector<long>& i_set) {
  EvalPoint out;
  for (long i = 1; i <= static_cast<long>(x.size()); ++i)
    if (!std::binary_search(i_set.begin(), i_set.end(), i))
      out.push_back(x[static_cast<size_t>(i - 1)]);
  return out;
}

void check_i_set(const std::vector<long>& i_set, long N) {
  for (size_t t = 0; t < i_set.size(); ++t) {
    ensure(i_set[t] >= 1 && i_set[t] <= N, "i_set outside [N]");
    if (t) ensure(i_set[t - 1] < i_set[t], "i_set not strictly increasing");
  }
}

long i_set_weight(const std::vector<long>& i_set) {
  long s = 0;
  for (long v : i_set) s += v;
  return s;
}

}  // namespace

Scalar cb_pair_sum(const CBSpec& spec) {
  ensure(static_cast<long>(spec.x.size()) == spec.N &&
             static_cast<long>(spec.y.size()) == spec.N,
         "cb_pair_sum: tuple sizes");
  if (spec.k == 0) {
    Scalar acc(0);
    iter_partitions_in_box(spec.N, spec.L, spec.n, [&](const Partition& lam) {
      acc += schur_eval(lam, spec.x) * schur_eval(lam, spec.y);
    });
    return acc;
  }
  ensure(spec.n == 0, "restricted pair sum requires n = 0");
  check_i_set(spec.i_set, spec.N);
  return cb_restricted_sum(drop_positions(spec.x, spec.i_set), spec.y, spec.L);
}

Scalar cb_restricted_sum(const EvalPoint& xbar, const EvalPoint& y, long L) {
  const long nk = static_cast<long>(xbar.size());
  const long N = static_cast<long>(y.size());
  ensure(nk <= N, "restricted sum: xbar larger than y");
  Scalar acc(0);
  iter_partitions_in_box(nk, L, 0, [&](const Partition& lam) {
    acc += schur_eval(lam, xbar) *
           schur_eval(hat_extend(lam, N - nk), y);
  });
  return acc;
}

Scalar cb_pair_det(const CBSpec& spec) {
  ensure(static_cast<long>(spec.x.size()) == spec.N &&
             static_cast<long>(spec.y.size()) == spec.N,
         "cb_pair_det: tuple sizes");
  if (spec.k > 0) {
    ensure(spec.n == 0, "restricted pair det requires n = 0");
    check_i_set(spec.i_set, spec.N);
    return cb_restricted_det(drop_positions(spec.x, spec.i_set), spec.y,
                             spec.L, spec.i_set);
  }
  const long N = spec.N;
  const long p = N + spec.L - spec.n;
  std::vector<std::vector<Scalar>> t(static_cast<size_t>(N));
  for (long i = 0; i < N; ++i) {
    auto& row = t[static_cast<size_t>(i)];
    row.reserve(static_cast<size_t>(N));
    for (long j = 0; j < N; ++j)
      row.push_back(geometric_sum(spec.x[i] * spec.y[j], p));
  }
  Scalar pref(1);
  for (long l = 0; l < N; ++l)
    pref *= (spec.x[l] * spec.y[l]).pow(static_cast<unsigned long>(spec.n));
  const Scalar vv = vandermonde_det(spec.x) * vandermonde_det(spec.y);
  if (vv.is_zero()) throw RepeatedPoint("cb_pair_det: zero Vandermonde");
  return pref * exact_div(det_bareiss(std::move(t)), vv);
}

Scalar cb_restricted_det(const EvalPoint& xbar, const EvalPoint& y, long L,
                         const std::vector<long>& i_set) {
  const long N = static_cast<long>(y.size());
  const long k = static_cast<long>(i_set.size());
  ensure(static_cast<long>(xbar.size()) == N - k,
         "restricted det: size of xbar vs i_set");
  check_i_set(i_set, N);

  std::vector<std::vector<Scalar>> m(static_cast<size_t>(N));
  long comp_at = 0;  // ordinal within the complement
  long spec_at = 0;  // ordinal within i_set
  for (long i = 1; i <= N; ++i) {
    auto& row = m[static_cast<size_t>(i - 1)];
    row.reserve(static_cast<size_t>(N));
    const bool special =
        std::binary_search(i_set.begin(), i_set.end(), i);
    if (special) {
      const long l = ++spec_at;  // i = i_l
      for (long j = 0; j < N; ++j)
        row.push_back(y[static_cast<size_t>(j)].pow(
            static_cast<unsigned long>(k - l)));
    } else {
      const Scalar& xv = xbar[static_cast<size_t>(comp_at++)];
      for (long j = 0; j < N; ++j)
        row.push_back(geometric_sum(xv * y[static_cast<size_t>(j)], N + L));
    }
  }

  const long sign_exp = i_set_weight(i_set) + k * N - k * (k - 1) / 2;
  Scalar det = det_bareiss(std::move(m));
  if (sign_exp % 2 != 0) det = -det;

  Scalar xprod_k(1);
  for (const auto& v : xbar) xprod_k *= v.pow(static_cast<unsigned long>(k));
  const Scalar vv = vandermonde_det(xbar) * vandermonde_det(y);
  if (vv.is_zero() || xprod_k.is_zero())
    throw RepeatedPoint("restricted det: zero Vandermonde or zero x entry");
  return exact_div(det, vv * xprod_k);
}

QPoly q_restricted_det(long N, long L, const std::vector<long>& i_set) {
  check_i_set(i_set, N);
  const long k = static_cast<long>(i_set.size());

  std::vector<std::vector<QPoly>> m(static_cast<size_t>(N));
  long spec_at = 0;
  for (long i = 1; i <= N; ++i) {
    auto& row = m[static_cast<size_t>(i - 1)];
    row.reserve(static_cast<size_t>(N));
    const bool special = std::binary_search(i_set.begin(), i_set.end(), i);
    if (special) {
      const long l = ++spec_at;
      for (long j = 1; j <= N; ++j) row.push_back(QPoly::q(j * (k - l)));
    } else {
      for (long j = 1; j <= N; ++j)
        row.push_back(geometric_sum(QPoly::q(i + j - 1), L + N));
    }
  }

  // Vandermondes of (q,...,q^N) and of the complement powers over q.
  std::vector<QPoly> qn, qbar;
  for (long i = 1; i <= N; ++i) {
    qn.push_back(QPoly::q(i));
    if (!std::binary_search(i_set.begin(), i_set.end(), i))
      qbar.push_back(QPoly::q(i - 1));
  }

  const long sign_exp = i_set_weight(i_set) + k * N - k * (k - 1) / 2;
  const long qpref = -(k * (k - i_set_weight(i_set)) + k * N * (N - 1) / 2);

  QPoly det = det_bareiss(std::move(m));
  if (sign_exp % 2 != 0) det = -det;
  return exact_div(det, vandermonde_det(qn) * vandermonde_det(qbar))
      .shifted(qpref);
}

QPoly boxed_gf_identity(long N, long k, long L) {
  ensure(N >= 0 && k >= 0 && k <= N && L >= 0, "boxed_gf_identity: bad params");

  // Restricted determinant at i = (N-k+1, ..., N).
  std::vector<long> i_set;
  for (long i = N - k + 1; i <= N; ++i) i_set.push_back(i);
  const QPoly det_form = q_restricted_det(N, L, i_set);

  // q-binomial determinant form.
  std::vector<long> a, b;
  for (long t = 0; t < L; ++t) {
    a.push_back(2 * N - k + t);
    b.push_back(N - k + t);
  }
  const QPoly qbd_form =
      q_binomial_det(a, b).shifted(-(N * (L - 1) * L / 2));

  // Double product [j+l+N-1]/[j+l-1] over l <= L, j <= N-k.
  QPoly num = QPoly::one(), den = QPoly::one();
  for (long l = 1; l <= L; ++l)
    for (long j = 1; j <= N - k; ++j) {
      num *= q_int(j + l + N - 1);
      den *= q_int(j + l - 1);
    }
  const QPoly prod_form = exact_div(num, den);

  ensure_identity(det_form == qbd_form,
                  "restricted determinant vs q-binomial determinant");
  ensure_identity(qbd_form == prod_form,
                  "q-binomial determinant vs double product");
  ensure_identity(prod_form == zq_product(N - k, N, L),
                  "double product vs plane-partition generating function");

  if (k == 0) {
    // Shifted variants and their q -> 1 counts.
    for (long n = 0; n <= L; ++n) {
      CBSpec spec;
      spec.N = N;
      spec.L = L;
      spec.n = n;
      spec.x = q_powers_over_q(N);
      spec.y = q_powers(N);
      const QPoly lhs = cb_pair_sum(spec).as_poly();
      std::vector<long> aa, bb;
      for (long t = 1; t <= L - n; ++t) {
        aa.push_back(2 * N + t - 1);
        bb.push_back(N + t - 1);
      }
      const long e = n * N * N + N * (L - n) * (1 - L + n) / 2;
      const QPoly rhs = q_binomial_det(aa, bb).shifted(e);
      ensure_identity(lhs == rhs, "shifted sum vs q-binomial determinant");
      ensure_identity(lhs == zq_product(N, N, L - n).shifted(n * N * N),
                      "shifted sum vs shifted box generating function");
      ensure_identity(lhs.eval_at_one() == macmahon_count(N, N, L - n),
                      "q -> 1 count of the shifted sum");
    }
  }
  return prod_form;
}

QPoly watermelon_det(long N, long L, long mcal) {
  ensure(0 <= L && L <= N && mcal >= 0, "watermelon_det: bad params");
  std::vector<std::vector<QPoly>> m(static_cast<size_t>(N));
  for (long i = 1; i <= N; ++i) {
    auto& row = m[static_cast<size_t>(i - 1)];
    row.reserve(static_cast<size_t>(N));
    for (long j = 1; j <= N; ++j)
      row.push_back(
          q_binomial(L + mcal + N - i, mcal + N - j).shifted((j - 1) * (mcal + j - i)));
  }
  const QPoly w = det_bareiss(std::move(m)).shifted(-mcal * N * (N - 1) / 2);
  ensure_identity(w == zq_product(N, L, mcal),
                  "watermelon determinant vs box generating function");
  return w;
}

BigInt gessel_viennot_count(long N, long L, long mcal) {
  const QPoly w = watermelon_det(N, L, mcal);
  const BigInt by_det = w.eval_at_one();
  ensure_identity(by_det == macmahon_count(N, L, mcal),
                  "binomial determinant count vs product count");
  return by_det;
}

QPoly normtrace_limit(long N, long L, long k, long max_degree) {
  ensure(k == N - L && L >= 0 && L <= N, "normtrace_limit: k must equal N-L");
  ensure(max_degree >= 0, "normtrace_limit: bad degree");
  QPoly acc = QPoly::one();
  for (long i = 1; i <= L; ++i)
    for (long j = 1; j <= N; ++j) {
      const long e = k + i + j - 1;
      std::vector<BigInt> geom(static_cast<size_t>(max_degree + 1), 0);
      for (long d = 0; d <= max_degree; d += e) geom[static_cast<size_t>(d)] = 1;
      acc = (acc * QPoly(std::move(geom), 0)).truncated(max_degree);
    }
  return acc;
}

Cplx cb_pair_det_c(const std::vector<Cplx>& x, const std::vector<Cplx>& y,
                   long L, long n) {
  const long N = static_cast<long>(x.size());
  ensure(static_cast<long>(y.size()) == N, "cb_pair_det_c: sizes");
  const long p = N + L - n;
  std::vector<std::vector<Cplx>> t(static_cast<size_t>(N),
                                   std::vector<Cplx>(static_cast<size_t>(N)));
  for (long i = 0; i < N; ++i)
    for (long j = 0; j < N; ++j)
      t[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          geometric_sum(x[static_cast<size_t>(i)] * y[static_cast<size_t>(j)], p);
  Cplx pref(1.0, 0.0);
  for (long l = 0; l < N; ++l)
    pref *= std::pow(x[static_cast<size_t>(l)] * y[static_cast<size_t>(l)],
                     static_cast<double>(n));
  return pref * det_lu(std::move(t)) /
         (vandermonde_det_c(x) * vandermonde_det_c(y));
}

Cplx cb_restricted_det_c(const std::vector<Cplx>& xbar,
                         const std::vector<Cplx>& y, long L) {
  const long N = static_cast<long>(y.size());
  const long k = N - static_cast<long>(xbar.size());
  ensure(k >= 0, "cb_restricted_det_c: xbar larger than y");
  if (k == 0) return cb_pair_det_c(xbar, y, L, 0);
  std::vector<std::vector<Cplx>> m(static_cast<size_t>(N),
                                   std::vector<Cplx>(static_cast<size_t>(N)));
  for (long l = 1; l <= k; ++l)
    for (long j = 0; j < N; ++j)
      m[static_cast<size_t>(l - 1)][static_cast<size_t>(j)] =
          std::pow(y[static_cast<size_t>(j)], static_cast<double>(k - l));
  for (long r = 0; r < N - k; ++r)
    for (long j = 0; j < N; ++j)
      m[static_cast<size_t>(k + r)][static_cast<size_t>(j)] = geometric_sum(
          xbar[static_cast<size_t>(r)] * y[static_cast<size_t>(j)], N + L);
  // sign: |i| = k(k+1)/2 for i = [k], so the exponent reduces to k(N+1).
  const double sign = (k * (N + 1)) % 2 == 0 ? 1.0 : -1.0;
  Cplx xprod_k(1.0, 0.0);
  for (const auto& v : xbar) xprod_k *= std::pow(v, static_cast<double>(k));
  return sign * det_lu(std::move(m)) /
         (vandermonde_det_c(xbar) * vandermonde_det_c(y) * xprod_k);
}

}  // namespace xx0
