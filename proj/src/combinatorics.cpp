#include "combinatorics.hpp"

#include <stdexcept>
#include <string>

namespace oddfact {

ExactInt factorial(long long n) {
  if (n < 0) throw std::domain_error("factorial: n must be >= 0 (got " + std::to_string(n) + ")");
  ExactInt r(1);
  for (long long i = 2; i <= n; ++i) r *= ExactInt(i);
  return r;
}

ExactInt odd_double_factorial(long long k) {
  if (k < 0)
    throw std::domain_error("odd-double-factorial: k must be >= 0 (got " + std::to_string(k) + ")");
  ExactInt r(1);
  for (long long i = 1; i <= 2 * k - 1; i += 2) r *= ExactInt(i);
  return r;
}

ExactInt binomial(long long n, long long k) {
  if (n < 0) throw std::domain_error("binomial: n must be >= 0 (got " + std::to_string(n) + ")");
  if (k < 0 || k > n) return ExactInt(0);
  if (k > n - k) k = n - k;
  // Multiplicative form; each partial product is itself a binomial, so the
  // running division is exact.
  ExactInt r(1);
  for (long long i = 1; i <= k; ++i) {
    r *= ExactInt(n - k + i);
    r = r.div_exact(ExactInt(i));
  }
  return r;
}

ExactRat binomial_general(const ExactRat &x, long long k) {
  if (k < 0)
    throw std::domain_error("binomial-general: k must be >= 0 (got " + std::to_string(k) + ")");
  ExactRat p(1);
  for (long long i = 0; i < k; ++i) p *= x - ExactRat(i);
  return p / ExactRat(factorial(k));
}

ExactInt c_product(long long n, long long k) {
  if (k < 0) throw std::domain_error("c-product: k must be >= 0 (got " + std::to_string(k) + ")");
  ExactInt r(1);
  for (long long i = n - k; i <= n + k; ++i) r *= ExactInt(i);
  return r;
}

StirlingTriangle::StirlingTriangle(Kind kind) : kind_(kind) {
  rows_.push_back({ExactInt(1)});
}

void StirlingTriangle::ensure_rows(long long n) {
  if (n < 0) throw std::domain_error("stirling: n must be >= 0 (got " + std::to_string(n) + ")");
  while (rows_built() <= n) {
    const long long m = rows_built(); // row being added
    const std::vector<ExactInt> &prev = rows_.back();
    std::vector<ExactInt> row(static_cast<size_t>(m) + 1, ExactInt(0));
    for (long long k = 1; k <= m; ++k) {
      const ExactInt up = (k < m) ? prev[static_cast<size_t>(k)] : ExactInt(0);
      const ExactInt &diag = prev[static_cast<size_t>(k - 1)];
      row[static_cast<size_t>(k)] =
          (kind_ == Kind::Second) ? ExactInt(k) * up + diag : diag - ExactInt(m - 1) * up;
    }
    rows_.push_back(std::move(row));
  }
}

ExactInt StirlingTriangle::value(long long n, long long k) {
  if (n < 0) throw std::domain_error("stirling: n must be >= 0 (got " + std::to_string(n) + ")");
  if (k < 0 || k > n) return ExactInt(0);
  ensure_rows(n);
  return rows_[static_cast<size_t>(n)][static_cast<size_t>(k)];
}

const std::vector<ExactInt> &StirlingTriangle::row(long long n) {
  ensure_rows(n);
  return rows_[static_cast<size_t>(n)];
}

void StirlingTriangle::poke(long long n, long long k, const ExactInt &delta) {
  if (n < 0 || k < 0 || k > n) throw std::invalid_argument("poke: entry out of triangle");
  if (delta.is_zero()) throw std::invalid_argument("poke: delta must be nonzero");
  ensure_rows(n);
  rows_[static_cast<size_t>(n)][static_cast<size_t>(k)] += delta;
}

ExactInt stirling2(StirlingTriangle &cache, long long n, long long k) {
  if (cache.kind() != StirlingTriangle::Kind::Second)
    throw std::invalid_argument("stirling2: cache holds the first-kind triangle");
  if (n < 0 || k < 0)
    throw std::domain_error("stirling2: n and k must be >= 0");
  return cache.value(n, k);
}

ExactInt stirling1(StirlingTriangle &cache, long long n, long long k) {
  if (cache.kind() != StirlingTriangle::Kind::FirstSigned)
    throw std::invalid_argument("stirling1: cache holds the second-kind triangle");
  if (n < 0 || k < 0)
    throw std::domain_error("stirling1: n and k must be >= 0");
  return cache.value(n, k);
}

ExactInt stirling2_oracle_explicit(long long n, long long k) {
  if (n < 0 || k < 0 || k > n)
    throw std::domain_error("stirling2-oracle-explicit: requires 0 <= k <= n");
  ExactInt sum(0);
  for (long long i = 0; i <= k; ++i) {
    ExactInt term = binomial(k, i) * ExactInt(k - i).pow(n);
    if (i % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  return sum.div_exact(factorial(k));
}

namespace {

// Depth-first walk over restricted growth strings: position i may reuse any
// block seen so far or open one new block. Each leaf is one set partition.
void count_partitions(long long n, long long i, long long blocks, std::vector<ExactInt> &hist) {
  if (i == n) {
    hist[static_cast<size_t>(blocks)] += ExactInt(1);
    return;
  }
  for (long long b = 0; b < blocks; ++b) count_partitions(n, i + 1, blocks, hist);
  count_partitions(n, i + 1, blocks + 1, hist);
}

} // namespace

std::vector<ExactInt> stirling2_row_by_enumeration(long long n) {
  if (n < 0 || n > 12)
    throw std::domain_error("stirling2-oracle-partitions: enumeration bound is 0 <= n <= 12");
  std::vector<ExactInt> hist(static_cast<size_t>(n) + 1, ExactInt(0));
  if (n == 0) {
    hist[0] = ExactInt(1); // the empty partition
    return hist;
  }
  count_partitions(n, 0, 0, hist);
  return hist;
}

ExactInt stirling2_oracle_partitions(long long n, long long k) {
  std::vector<ExactInt> hist = stirling2_row_by_enumeration(n);
  if (k < 0 || k > n) return ExactInt(0);
  return hist[static_cast<size_t>(k)];
}

std::vector<ExactInt> stirling1_oracle_poly(long long n) {
  if (n < 0) throw std::domain_error("stirling1-oracle-poly: n must be >= 0");
  std::vector<ExactInt> coeffs{ExactInt(1)};
  for (long long i = 0; i < n; ++i) {
    // multiply by (x - i)
    std::vector<ExactInt> next(coeffs.size() + 1, ExactInt(0));
    for (size_t j = 0; j < coeffs.size(); ++j) {
      next[j + 1] += coeffs[j];
      next[j] -= ExactInt(i) * coeffs[j];
    }
    coeffs = std::move(next);
  }
  return coeffs;
}

} // namespace oddfact
