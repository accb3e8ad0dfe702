#include "xx0/schur.hpp"

#include <algorithm>

namespace xx0 {

namespace {

std::vector<long> padded(const Partition& lambda, long n) {
  ensure(lambda.length() <= n, "partition longer than variable count");
  std::vector<long> p(lambda.parts);
  p.resize(static_cast<size_t>(n), 0);
  return p;
}

template <class T>
T bialternant(const std::vector<long>& lam, const std::vector<T>& x,
              T (*det)(std::vector<std::vector<T>>)) {
  const size_t n = x.size();
  std::vector<std::vector<T>> num(n, std::vector<T>(n, T(1)));
  std::vector<std::vector<T>> den(n, std::vector<T>(n, T(1)));
  for (size_t j = 0; j < n; ++j)
    for (size_t k = 0; k < n; ++k) {
      const long nk = static_cast<long>(n) - static_cast<long>(k) - 1;
      for (long e = 0; e < lam[k] + nk; ++e) num[j][k] = num[j][k] * x[j];
      for (long e = 0; e < nk; ++e) den[j][k] = den[j][k] * x[j];
    }
  return exact_div_generic(det(std::move(num)), det(std::move(den)));
}

Scalar det_sc(std::vector<std::vector<Scalar>> m) { return det_bareiss(std::move(m)); }

}  // namespace

Scalar schur_eval(const Partition& lambda, const EvalPoint& x) {
  const long n = static_cast<long>(x.size());
  std::vector<long> lam = padded(lambda, n);

  // Zero entries: strip them via the minor-expansion limit.
  std::vector<size_t> zero_pos;
  for (size_t i = 0; i < x.size(); ++i)
    if (x[i].is_zero()) zero_pos.push_back(i);
  if (!zero_pos.empty()) {
    const long k = static_cast<long>(zero_pos.size());
    for (long i = n - k; i < n; ++i)
      if (lam[static_cast<size_t>(i)] != 0)
        throw ZeroLimitInvalid(
            "schur_eval: zeros in x but partition lacks trailing zero parts");
    EvalPoint xbar;
    for (size_t i = 0; i < x.size(); ++i)
      if (!x[i].is_zero()) xbar.push_back(x[i]);
    lam.resize(static_cast<size_t>(n - k));
    return schur_eval(Partition(lam), xbar);
  }

  bool all_ones = true;
  for (const auto& v : x) all_ones = all_ones && v.is_one();
  if (all_ones) return Scalar(Rational(ssyt_count_product(Partition(lam), n)));

  for (size_t i = 0; i < x.size(); ++i)
    for (size_t j = i + 1; j < x.size(); ++j)
      if (x[i] == x[j])
        throw RepeatedPoint("schur_eval: repeated evaluation point");

  // pow via Scalar::pow would re-scan; the loop above in bialternant is fine
  // at these sizes.
  std::vector<Scalar> xs(x.begin(), x.end());
  return bialternant<Scalar>(lam, xs, &det_sc);
}

std::complex<double> schur_eval_c(const Partition& lambda,
                                  const std::vector<std::complex<double>>& x) {
  const long n = static_cast<long>(x.size());
  std::vector<long> lam = padded(lambda, n);
  const size_t m = x.size();
  std::vector<std::vector<std::complex<double>>> num(m), den(m);
  for (size_t j = 0; j < m; ++j) {
    num[j].resize(m);
    den[j].resize(m);
    for (size_t k = 0; k < m; ++k) {
      const long nk = n - static_cast<long>(k) - 1;
      num[j][k] = std::pow(x[j], static_cast<double>(lam[k] + nk));
      den[j][k] = std::pow(x[j], static_cast<double>(nk));
    }
  }
  return det_lu(std::move(num)) / det_lu(std::move(den));
}

BigInt ssyt_count_product(const Partition& lambda, long n_vars) {
  std::vector<long> lam = padded(lambda, n_vars);
  Rational acc(1);
  for (long j = 1; j <= n_vars; ++j)
    for (long k = j + 1; k <= n_vars; ++k) {
      acc *= Rational(lam[j - 1] - j - lam[k - 1] + k);
      acc /= Rational(k - j);
    }
  acc.canonicalize();
  ensure(acc.get_den() == 1, "ssyt count product not integral");
  return acc.get_num();
}

void ssyt_enumerate_full(const Partition& lambda, long n_vars, long min_entry,
                         const std::function<void(const Tableau&)>& fn) {
  ensure(min_entry >= 1, "ssyt_enumerate: bad min_entry");
  std::vector<long> shape(lambda.parts);
  while (!shape.empty() && shape.back() == 0) shape.pop_back();
  Tableau t(shape.size());
  for (size_t r = 0; r < shape.size(); ++r)
    t[r].assign(static_cast<size_t>(shape[r]), 0);
  std::function<void(size_t, size_t)> rec = [&](size_t r, size_t c) {
    if (r == t.size()) {
      fn(t);
      return;
    }
    if (c == t[r].size()) {
      rec(r + 1, 0);
      return;
    }
    long lo = min_entry;
    if (c > 0) lo = std::max(lo, t[r][c - 1]);                // rows weakly increase
    if (r > 0 && c < t[r - 1].size()) lo = std::max(lo, t[r - 1][c] + 1);  // columns strict
    for (long v = lo; v <= n_vars; ++v) {
      t[r][c] = v;
      rec(r, c + 1);
    }
  };
  if (t.empty()) {
    fn(t);
    return;
  }
  rec(0, 0);
}

void ssyt_enumerate(const Partition& lambda, long n_vars, long min_entry,
                    const std::function<void(const std::vector<long>&)>& fn) {
  ssyt_enumerate_full(lambda, n_vars, min_entry, [&](const Tableau& t) {
    std::vector<long> occ(static_cast<size_t>(n_vars), 0);
    for (const auto& row : t)
      for (long v : row) ++occ[static_cast<size_t>(v - 1)];
    fn(occ);
  });
}

BigInt schur_tableau_oracle(const Partition& lambda, long n_vars) {
  BigInt count = 0;
  ssyt_enumerate(lambda, n_vars, 1,
                 [&](const std::vector<long>&) { count += 1; });
  ensure_identity(count == ssyt_count_product(lambda, n_vars),
                  "tableau count disagrees with the content product");
  return count;
}

Scalar schur_from_tableaux(const Partition& lambda, const EvalPoint& x) {
  Scalar acc(0);
  ssyt_enumerate(lambda, static_cast<long>(x.size()), 1,
                 [&](const std::vector<long>& occ) {
                   Scalar term(1);
                   for (size_t j = 0; j < occ.size(); ++j)
                     term *= x[j].pow(static_cast<unsigned long>(occ[j]));
                   acc += term;
                 });
  return acc;
}

Scalar skew_schur_eval(const Partition& lambda, long mcal, const EvalPoint& y) {
  const long n = static_cast<long>(y.size());
  std::vector<long> lam = padded(lambda, n);
  for (long v : lam) ensure(v <= mcal, "skew_schur_eval: lambda exceeds the rectangle");
  for (const auto& e : y)
    if (e.is_zero()) throw ZeroArgument("skew_schur_eval: zero argument");

  std::vector<std::vector<Scalar>> num(static_cast<size_t>(n)),
      den(static_cast<size_t>(n));
  for (long a = 0; a < n; ++a) {
    num[a].assign(static_cast<size_t>(n), Scalar(1));
    den[a].assign(static_cast<size_t>(n), Scalar(1));
    for (long b = 1; b <= n; ++b) {
      const long e = mcal - lam[static_cast<size_t>(n - b)] + n - b;
      num[a][b - 1] = y[a].pow(static_cast<unsigned long>(e));
      den[a][b - 1] = y[a].pow(static_cast<unsigned long>(n - b));
    }
  }
  Scalar out = exact_div(det_bareiss(std::move(num)), det_bareiss(std::move(den)));

#ifndef NDEBUG
  // S_{M^N \ lambda}(y) = S_lambda(1/y) * prod y_a^M, when 1/y exists.
  bool invertible = true;
  for (const auto& e : y)
    invertible = invertible && (e.is_rational() || e.poly().is_monomial());
  if (invertible) {
    EvalPoint inv;
    Scalar pref(1);
    for (const auto& e : y) {
      inv.push_back(e.inverse());
      pref *= e.pow(static_cast<unsigned long>(mcal));
    }
    ensure_identity(out == schur_eval(Partition(lam), inv) * pref,
                    "skew Schur dual representation failed");
  }
#endif
  return out;
}

QPoly principal_specialization(const Partition& lambda, long n_vars,
                               PrincipalMode mode) {
  EvalPoint x;
  switch (mode) {
    case PrincipalMode::QN: x = q_powers(n_vars); break;
    case PrincipalMode::QN_OVER_Q: x = q_powers_over_q(n_vars); break;
    case PrincipalMode::INV_QN: x = inv_q_powers(n_vars); break;
  }
  return schur_eval(lambda, x).as_poly();
}

Scalar complete_homogeneous(long m, const EvalPoint& x) {
  if (m < 0) return Scalar(0);
  if (m == 0) return Scalar(1);
  if (x.empty()) return Scalar(0);
  // Multisets of size m with non-decreasing variable index.
  Scalar acc(0);
  std::function<void(size_t, long, const Scalar&)> rec =
      [&](size_t i, long left, const Scalar& prod) {
        if (i + 1 == x.size()) {
          acc += prod * x[i].pow(static_cast<unsigned long>(left));
          return;
        }
        Scalar p = prod;
        for (long take = 0; take <= left; ++take) {
          rec(i + 1, left - take, p);
          if (take < left) p *= x[i];
        }
      };
  rec(0, m, Scalar(1));
  return acc;
}

Scalar schur_jacobi_trudi(const Partition& lambda, const EvalPoint& x) {
  const long n = static_cast<long>(x.size());
  std::vector<long> lam = padded(lambda, n);
  std::vector<std::vector<Scalar>> m(static_cast<size_t>(n));
  for (long i = 1; i <= n; ++i) {
    m[i - 1].reserve(static_cast<size_t>(n));
    for (long j = 1; j <= n; ++j)
      m[i - 1].push_back(complete_homogeneous(lam[i - 1] - i + j, x));
  }
  return det_bareiss(std::move(m));
}

void skew_ssyt_enumerate_full(const Partition& lambda, long mcal, long n_vars,
                              const std::function<void(const Tableau&)>& fn) {
  const long n = n_vars;
  std::vector<long> lam = padded(lambda, n);
  for (long v : lam) ensure(v <= mcal, "skew shape: lambda exceeds the rectangle");
  // Row r (0-based) holds cells at columns lam[r]..mcal-1 of the rectangle;
  // we store only the present cells, left-aligned per row.
  Tableau t(static_cast<size_t>(n));
  for (long r = 0; r < n; ++r)
    t[static_cast<size_t>(r)].assign(static_cast<size_t>(mcal - lam[r]), 0);
  auto cell_above = [&](long r, long col) -> long {
    // col is the absolute rectangle column; returns entry or 0 if absent.
    if (r == 0 || col < lam[r - 1]) return 0;
    return t[static_cast<size_t>(r - 1)][static_cast<size_t>(col - lam[r - 1])];
  };
  std::function<void(long, long)> rec = [&](long r, long idx) {
    if (r == n) {
      fn(t);
      return;
    }
    const long row_len = mcal - lam[r];
    if (idx == row_len) {
      rec(r + 1, 0);
      return;
    }
    const long col = lam[r] + idx;
    long lo = 1;
    if (idx > 0) lo = std::max(lo, t[static_cast<size_t>(r)][static_cast<size_t>(idx - 1)]);
    lo = std::max(lo, cell_above(r, col) + 1);
    for (long v = lo; v <= n; ++v) {
      t[static_cast<size_t>(r)][static_cast<size_t>(idx)] = v;
      rec(r, idx + 1);
    }
  };
  rec(0, 0);
}

void skew_ssyt_enumerate(const Partition& lambda, long mcal, long n_vars,
                         const std::function<void(const std::vector<long>&)>& fn) {
  skew_ssyt_enumerate_full(lambda, mcal, n_vars, [&](const Tableau& t) {
    std::vector<long> occ(static_cast<size_t>(n_vars), 0);
    for (const auto& row : t)
      for (long v : row) ++occ[static_cast<size_t>(v - 1)];
    fn(occ);
  });
}

}  // namespace xx0
