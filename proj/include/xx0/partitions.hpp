#pragma once

#include <functional>
#include <string>
#include <vector>

#include "xx0/qcore.hpp"

namespace xx0 {

/// Weakly decreasing non-negative parts; trailing zeros are significant,
/// the declared length is part of the value.
struct Partition {
  std::vector<long> parts;

  Partition() = default;
  explicit Partition(std::vector<long> p);

  long length() const { return static_cast<long>(parts.size()); }
  long weight() const;
  long part(long i) const { return i < length() ? parts[i] : 0; }  // 0-based
  bool operator==(const Partition&) const = default;
  std::string str() const;
};

/// Strictly decreasing parts.
struct StrictPartition {
  std::vector<long> parts;

  StrictPartition() = default;
  explicit StrictPartition(std::vector<long> p);

  long length() const { return static_cast<long>(parts.size()); }
  long weight() const;
  bool operator==(const StrictPartition&) const = default;
  std::string str() const;
};

/// Staircase (N-1, N-2, ..., 1, 0).
StrictPartition staircase(long n);

/// mu = lambda + staircase.
StrictPartition to_strict(const Partition& lambda);
/// lambda = mu - staircase.
Partition to_weak(const StrictPartition& mu);
/// lambda_hat: lambda of length N-k elongated by k zeros to length N.
Partition hat_extend(const Partition& lambda, long k);
/// mu_hat = lambda_hat + staircase_N = (mu_{N-k} + k, staircase_k).
StrictPartition mu_hat(const Partition& lambda, long k);

/// Every lambda with bound >= lambda_1 >= ... >= lambda_n >= floor, emitted in
/// lexicographically decreasing order.  Total count C(n + bound - floor, n).
void iter_partitions_in_box(long n, long bound, long floor,
                            const std::function<void(const Partition&)>& fn);
std::vector<Partition> partitions_in_box(long n, long bound, long floor);

/// Plane partition stored as a dense L x N matrix of heights <= K,
/// weakly decreasing along rows and columns.
struct PlanePartition {
  std::vector<std::vector<long>> rows;  // L rows of N entries
  long volume() const;
  std::string str() const;
};

/// Every plane partition in the box B(L,N,K), lexicographically decreasing on
/// the row-major part list.
void iter_plane_partitions(long L, long N, long K,
                           const std::function<void(const PlanePartition&)>& fn);

/// Generating function of plane partitions in B(L,N,K) by the double-product
/// form, computed with exact division.
QPoly zq_product(long L, long N, long K);

/// Number of plane partitions in B(L,N,K).
BigInt macmahon_count(long L, long N, long K);

}  // namespace xx0
