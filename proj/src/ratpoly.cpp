#include "ratpoly.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "combinatorics.hpp"

namespace oddfact {

namespace {
const ExactRat kZero(0);
}

RatPoly RatPoly::constant(ExactRat c) {
  RatPoly p;
  if (!c.is_zero()) p.coeffs_.push_back(std::move(c));
  return p;
}

RatPoly RatPoly::monomial(long long degree, ExactRat coeff) {
  if (degree < 0) throw std::invalid_argument("monomial: degree must be >= 0");
  RatPoly p;
  if (coeff.is_zero()) return p;
  p.coeffs_.assign(static_cast<size_t>(degree) + 1, kZero);
  p.coeffs_.back() = std::move(coeff);
  return p;
}

RatPoly RatPoly::from_coeffs(std::vector<ExactRat> coeffs) {
  while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
  RatPoly p;
  p.coeffs_ = std::move(coeffs);
  return p;
}

const ExactRat &RatPoly::coeff(long long i) const {
  if (i < 0 || i > degree()) return kZero;
  return coeffs_[static_cast<size_t>(i)];
}

const ExactRat &RatPoly::leading_coeff() const {
  if (is_zero()) throw std::domain_error("leading_coeff: zero polynomial");
  return coeffs_.back();
}

ExactRat RatPoly::eval(const ExactRat &x) const {
  ExactRat acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RatPoly RatPoly::scale(const ExactRat &c) const {
  if (c.is_zero()) return RatPoly();
  RatPoly p;
  p.coeffs_.reserve(coeffs_.size());
  for (const ExactRat &a : coeffs_) p.coeffs_.push_back(a * c);
  return p;
}

RatPoly operator+(const RatPoly &p, const RatPoly &q) {
  std::vector<ExactRat> out(std::max(p.coeffs_.size(), q.coeffs_.size()), kZero);
  for (size_t i = 0; i < p.coeffs_.size(); ++i) out[i] += p.coeffs_[i];
  for (size_t i = 0; i < q.coeffs_.size(); ++i) out[i] += q.coeffs_[i];
  return RatPoly::from_coeffs(std::move(out));
}

RatPoly operator-(const RatPoly &p, const RatPoly &q) {
  std::vector<ExactRat> out(std::max(p.coeffs_.size(), q.coeffs_.size()), kZero);
  for (size_t i = 0; i < p.coeffs_.size(); ++i) out[i] += p.coeffs_[i];
  for (size_t i = 0; i < q.coeffs_.size(); ++i) out[i] -= q.coeffs_[i];
  return RatPoly::from_coeffs(std::move(out));
}

RatPoly operator*(const RatPoly &p, const RatPoly &q) {
  if (p.is_zero() || q.is_zero()) return RatPoly();
  std::vector<ExactRat> out(p.coeffs_.size() + q.coeffs_.size() - 1, kZero);
  for (size_t i = 0; i < p.coeffs_.size(); ++i) {
    if (p.coeffs_[i].is_zero()) continue;
    for (size_t j = 0; j < q.coeffs_.size(); ++j) out[i + j] += p.coeffs_[i] * q.coeffs_[j];
  }
  // Leading coefficients of nonzero polynomials multiply to a nonzero
  // rational, so no trim is needed; from_coeffs keeps the invariant anyway.
  return RatPoly::from_coeffs(std::move(out));
}

RatPoly RatPoly::div_linear(const ExactRat &root) const {
  if (is_zero()) return RatPoly(); // 0 = 0 * (x - root)
  if (degree() == 0) throw std::invalid_argument("div_linear: not a root");
  std::vector<ExactRat> q(coeffs_.size() - 1, kZero);
  // Synthetic division: walk down from the leading coefficient.
  ExactRat carry = coeffs_.back();
  for (long long i = degree() - 1; i >= 0; --i) {
    q[static_cast<size_t>(i)] = carry;
    carry = coeffs_[static_cast<size_t>(i)] + carry * root;
  }
  if (!carry.is_zero()) throw std::invalid_argument("div_linear: not a root");
  return RatPoly::from_coeffs(std::move(q));
}

std::string RatPoly::to_string() const {
  if (is_zero()) return kZero.to_string();
  std::string out;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ' ';
    out += coeffs_[i].to_string();
  }
  return out;
}

RatPoly interpolate(const std::vector<std::pair<ExactRat, ExactRat>> &points) {
  if (points.empty()) throw std::invalid_argument("interpolate: at least one point required");
  for (size_t i = 0; i < points.size(); ++i)
    for (size_t j = i + 1; j < points.size(); ++j)
      if (points[i].first == points[j].first)
        throw std::invalid_argument("interpolate: duplicate abscissae");

  // Master polynomial M(x) = prod (x - x_i); each Lagrange basis polynomial
  // is the exact quotient M/(x - x_i) scaled by its value at x_i.
  RatPoly master = RatPoly::constant(ExactRat(1));
  for (const auto &pt : points)
    master = master * RatPoly::from_coeffs({-pt.first, ExactRat(1)});

  RatPoly acc;
  for (const auto &pt : points) {
    RatPoly basis = master.div_linear(pt.first);
    acc = acc + basis.scale(pt.second / basis.eval(pt.first));
  }
  return acc;
}

RatPoly falling_factorial_poly(long long n) {
  if (n < 0) throw std::domain_error("falling-factorial: n must be >= 0");
  RatPoly p = RatPoly::constant(ExactRat(1));
  for (long long i = 0; i < n; ++i)
    p = p * RatPoly::from_coeffs({ExactRat(-i), ExactRat(1)});
  return p;
}

RatPoly binom_poly(long long n) {
  if (n < 0) throw std::domain_error("binom-poly: n must be >= 0");
  return falling_factorial_poly(n).scale(ExactRat(ExactInt(1), factorial(n)));
}

RatPoly c_poly(long long k) {
  if (k < 0) throw std::domain_error("c-poly: k must be >= 0");
  RatPoly p = RatPoly::constant(ExactRat(1));
  for (long long i = -k; i <= k; ++i)
    p = p * RatPoly::from_coeffs({ExactRat(i), ExactRat(1)});
  return p;
}

} // namespace oddfact
