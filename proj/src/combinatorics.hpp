#ifndef ODDFACT_COMBINATORICS_HPP
#define ODDFACT_COMBINATORICS_HPP

#include <vector>

#include "exact.hpp"

namespace oddfact {

// n! as an exact product; factorial(0) = 1. Throws std::domain_error for n < 0.
ExactInt factorial(long long n);

// (2k-1)!! = 1*3*5...(2k-1); equals 1 at k = 0 by the empty-product
// convention (so (-1)!! = 1). Throws std::domain_error for k < 0.
ExactInt odd_double_factorial(long long k);

// n choose k for n >= 0; returns 0 outside 0 <= k <= n so that identity
// summands vanish naturally at range edges. Throws std::domain_error for n < 0.
ExactInt binomial(long long n, long long k);

// Generalized binomial x(x-1)...(x-k+1)/k! for rational x.
ExactRat binomial_general(const ExactRat &x, long long k);

// Product of the 2k+1 consecutive integers n-k, n-k+1, ..., n+k.
ExactInt c_product(long long n, long long k);

/* Memoized triangle of Stirling numbers, either kind. Rows grow on demand
 * and are never shrunk. Row 0 is [1]; thereafter
 *
 *   second:       S(n,k) = k*S(n-1,k) + S(n-1,k-1),   S(n,0) = 0 for n >= 1
 *   first-signed: s(n,k) = s(n-1,k-1) - (n-1)*s(n-1,k), s(n,0) = 0 for n >= 1
 *
 * Construction is single-writer; once rows cover a query range, reads are
 * contention-free and may be shared across concurrent verifier tasks.
 */
class StirlingTriangle {
public:
  enum class Kind { FirstSigned, Second };

  explicit StirlingTriangle(Kind kind);

  Kind kind() const { return kind_; }
  long long rows_built() const { return static_cast<long long>(rows_.size()); }

  // Entry (n, k), building rows as needed; zero for k < 0 or k > n.
  ExactInt value(long long n, long long k);

  // Row n (values for k = 0..n), building rows as needed.
  const std::vector<ExactInt> &row(long long n);

  void ensure_rows(long long n);

  // Fault-injection hook for the verification tests: adds a nonzero delta to
  // one stored entry. Rows built afterwards see the corrupted value.
  void poke(long long n, long long k, const ExactInt &delta);

private:
  Kind kind_;
  std::vector<std::vector<ExactInt>> rows_;
};

// S(n,k) / s(n,k) through a memoizing cache of the matching kind; the kind
// mismatch is a usage error (std::invalid_argument).
ExactInt stirling2(StirlingTriangle &cache, long long n, long long k);
ExactInt stirling1(StirlingTriangle &cache, long long n, long long k);

// Inclusion-exclusion formula (1/k!) * sum_{i=0..k} (-1)^i C(k,i) (k-i)^n,
// independent of the triangle recurrence. The division is exact; a remainder
// would signal an arithmetic bug (std::logic_error).
ExactInt stirling2_oracle_explicit(long long n, long long k);

// Exhaustive enumeration of set partitions of {0..n-1} via restricted growth
// strings; entry k of the result counts partitions into exactly k blocks.
// Bounded at n <= 12 (std::domain_error beyond).
std::vector<ExactInt> stirling2_row_by_enumeration(long long n);
ExactInt stirling2_oracle_partitions(long long n, long long k);

// Coefficient vector of x(x-1)...(x-n+1) by direct expansion; entry k is
// the signed first-kind number s(n,k).
std::vector<ExactInt> stirling1_oracle_poly(long long n);

} // namespace oddfact

#endif // ODDFACT_COMBINATORICS_HPP
