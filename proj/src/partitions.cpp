#include "xx0/partitions.hpp"

#include <sstream>

namespace xx0 {

Partition::Partition(std::vector<long> p) : parts(std::move(p)) {
  for (size_t i = 0; i + 1 < parts.size(); ++i)
    ensure(parts[i] >= parts[i + 1], "Partition: parts not weakly decreasing");
  for (long v : parts) ensure(v >= 0, "Partition: negative part");
}

long Partition::weight() const {
  long s = 0;
  for (long v : parts) s += v;
  return s;
}

StrictPartition::StrictPartition(std::vector<long> p) : parts(std::move(p)) {
  for (size_t i = 0; i + 1 < parts.size(); ++i)
    if (parts[i] <= parts[i + 1])
      throw NotStrict("StrictPartition: repeated or increasing parts");
  for (long v : parts) ensure(v >= 0, "StrictPartition: negative part");
}

long StrictPartition::weight() const {
  long s = 0;
  for (long v : parts) s += v;
  return s;
}

namespace {
std::string join_parts(const std::vector<long>& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}
}  // namespace

std::string Partition::str() const { return join_parts(parts); }
std::string StrictPartition::str() const { return join_parts(parts); }

StrictPartition staircase(long n) {
  std::vector<long> p;
  for (long i = n - 1; i >= 1; --i) p.push_back(i);
  if (n >= 1) p.push_back(0);
  return StrictPartition(std::move(p));
}

StrictPartition to_strict(const Partition& lambda) {
  const long n = lambda.length();
  std::vector<long> p(lambda.parts);
  for (long i = 0; i < n; ++i) p[i] += n - 1 - i;
  return StrictPartition(std::move(p));
}

Partition to_weak(const StrictPartition& mu) {
  const long n = mu.length();
  std::vector<long> p(mu.parts);
  for (long i = 0; i < n; ++i) {
    p[i] -= n - 1 - i;
    ensure(p[i] >= 0, "to_weak: part below the staircase");
  }
  return Partition(std::move(p));
}

Partition hat_extend(const Partition& lambda, long k) {
  ensure(k >= 0, "hat_extend: negative k");
  std::vector<long> p(lambda.parts);
  p.insert(p.end(), static_cast<size_t>(k), 0);
  return Partition(std::move(p));
}

StrictPartition mu_hat(const Partition& lambda, long k) {
  return to_strict(hat_extend(lambda, k));
}

void iter_partitions_in_box(long n, long bound, long floor,
                            const std::function<void(const Partition&)>& fn) {
  ensure(bound >= floor && floor >= 0 && n >= 0, "iter_partitions_in_box: bad box");
  std::vector<long> cur(static_cast<size_t>(n));
  std::function<void(long, long)> rec = [&](long pos, long hi) {
    if (pos == n) {
      fn(Partition(cur));
      return;
    }
    for (long v = hi; v >= floor; --v) {
      cur[static_cast<size_t>(pos)] = v;
      rec(pos + 1, v);
    }
  };
  rec(0, bound);
}

std::vector<Partition> partitions_in_box(long n, long bound, long floor) {
  std::vector<Partition> out;
  iter_partitions_in_box(n, bound, floor,
                         [&](const Partition& p) { out.push_back(p); });
  return out;
}

long PlanePartition::volume() const {
  long s = 0;
  for (const auto& r : rows)
    for (long v : r) s += v;
  return s;
}

std::string PlanePartition::str() const {
  std::ostringstream os;
  for (const auto& r : rows) {
    for (size_t j = 0; j < r.size(); ++j) os << (j ? " " : "") << r[j];
    os << "\n";
  }
  return os.str();
}

void iter_plane_partitions(long L, long N, long K,
                           const std::function<void(const PlanePartition&)>& fn) {
  ensure(L >= 0 && N >= 0 && K >= 0, "iter_plane_partitions: bad box");
  if (L == 0 || N == 0) {
    fn(PlanePartition{std::vector<std::vector<long>>(
        static_cast<size_t>(L), std::vector<long>(static_cast<size_t>(N)))});
    return;
  }
  PlanePartition pp;
  pp.rows.assign(static_cast<size_t>(L), std::vector<long>(static_cast<size_t>(N), 0));
  std::function<void(long)> rec = [&](long cell) {
    if (cell == L * N) {
      fn(pp);
      return;
    }
    const long i = cell / N, j = cell % N;
    long hi = K;
    if (i > 0) hi = std::min(hi, pp.rows[i - 1][j]);
    if (j > 0) hi = std::min(hi, pp.rows[i][j - 1]);
    for (long v = hi; v >= 0; --v) {
      pp.rows[i][j] = v;
      rec(cell + 1);
    }
  };
  rec(0);
}

QPoly zq_product(long L, long N, long K) {
  ensure(L >= 0 && N >= 0 && K >= 0, "zq_product: bad box");
  QPoly num = QPoly::one(), den = QPoly::one();
  for (long j = 1; j <= L; ++j)
    for (long k = 1; k <= N; ++k) {
      num *= QPoly::one() - QPoly::q(K + j + k - 1);
      den *= QPoly::one() - QPoly::q(j + k - 1);
    }
  return exact_div(num, den);
}

BigInt macmahon_count(long L, long N, long K) {
  ensure(L >= 0 && N >= 0 && K >= 0, "macmahon_count: bad box");
  Rational acc(1);
  for (long j = 1; j <= L; ++j)
    for (long k = 1; k <= N; ++k) {
      acc *= Rational(K + j + k - 1);
      acc /= Rational(j + k - 1);
    }
  acc.canonicalize();
  ensure(acc.get_den() == 1, "macmahon_count: non-integer product");
  return acc.get_num();
}

}  // namespace xx0
