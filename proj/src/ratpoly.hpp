#ifndef ODDFACT_RATPOLY_HPP
#define ODDFACT_RATPOLY_HPP

#include <utility>
#include <vector>

#include "exact.hpp"

namespace oddfact {

/* Dense univariate polynomial over ExactRat. coeffs()[i] is the coefficient
 * of x^i; the highest stored coefficient is nonzero, and the zero polynomial
 * stores nothing. Equality is coefficient-wise exact equality. Polynomials
 * are immutable values; all operations are pure.
 */
class RatPoly {
public:
  // degree() of the zero polynomial; below every attainable degree.
  static constexpr long long kZeroDegree = -1;

  RatPoly() = default; // zero polynomial

  static RatPoly constant(ExactRat c);
  static RatPoly monomial(long long degree, ExactRat coeff);
  // Adopts a constant-first coefficient vector, trimming trailing zeros.
  static RatPoly from_coeffs(std::vector<ExactRat> coeffs);

  bool is_zero() const { return coeffs_.empty(); }
  long long degree() const { return static_cast<long long>(coeffs_.size()) - 1; }
  const std::vector<ExactRat> &coeffs() const { return coeffs_; }

  // Coefficient of x^i, zero beyond the degree.
  const ExactRat &coeff(long long i) const;

  // Highest nonzero coefficient; the zero polynomial has none
  // (std::domain_error).
  const ExactRat &leading_coeff() const;

  // Exact Horner evaluation.
  ExactRat eval(const ExactRat &x) const;

  RatPoly scale(const ExactRat &c) const;

  friend RatPoly operator+(const RatPoly &p, const RatPoly &q);
  friend RatPoly operator-(const RatPoly &p, const RatPoly &q);
  friend RatPoly operator*(const RatPoly &p, const RatPoly &q);

  // Exact synthetic division by (x - root). The remainder must vanish, i.e.
  // root must actually be a root; otherwise std::invalid_argument("not a
  // root").
  RatPoly div_linear(const ExactRat &root) const;

  friend bool operator==(const RatPoly &p, const RatPoly &q) { return p.coeffs_ == q.coeffs_; }
  friend bool operator!=(const RatPoly &p, const RatPoly &q) { return !(p == q); }

  // Space-separated canonical coefficients, constant term first
  // (e.g. "0/1 -1/2 1/2"); the zero polynomial prints as "0/1".
  std::string to_string() const;

private:
  std::vector<ExactRat> coeffs_;
};

// Unique polynomial of degree < #points through the given points, computed
// by exact Lagrange basis combination. Requires at least one point and
// pairwise distinct abscissae (std::invalid_argument otherwise).
RatPoly interpolate(const std::vector<std::pair<ExactRat, ExactRat>> &points);

// x(x-1)...(x-n+1); the empty product 1 for n = 0. Its coefficients are the
// signed first-kind Stirling numbers s(n, .).
RatPoly falling_factorial_poly(long long n);

// x-choose-n as a polynomial: falling_factorial_poly(n)/n!.
RatPoly binom_poly(long long n);

// Product of (x+i) for i = -k..k: the monic degree-(2k+1) polynomial whose
// value at integer n is the product of the 2k+1 consecutive integers
// centered at n.
RatPoly c_poly(long long k);

} // namespace oddfact

#endif // ODDFACT_RATPOLY_HPP
