#pragma once

#include <utility>
#include <vector>

#include "xx0/exact.hpp"
#include "xx0/qpoly.hpp"

namespace xx0 {

/// q-number [n] = 1 + q + ... + q^(n-1) = (1-q^n)/(1-q); [0] = 0.
QPoly q_int(long n);

/// q-factorial [n]! = [1][2]...[n]; [0]! = 1.
QPoly q_factorial(long n);

/// Returns the pair ([n], [n]!).
std::pair<QPoly, QPoly> q_int_factorial(long n);

/// Gaussian binomial [n over r] = [n]!/([r]![n-r]!); zero outside 0 <= r <= n.
QPoly q_binomial(long n, long r);

/// Determinant of the matrix with entry (i,j) = [a_j over b_i] for strictly
/// increasing tuples a, b of equal size.
QPoly q_binomial_det(const std::vector<long>& a, const std::vector<long>& b);

BigInt binomial(long n, long r);

}  // namespace xx0
