#include "exact.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace oddfact {

ExactInt ExactInt::from_decimal(std::string_view s) {
  std::string_view digits = s;
  if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  if (digits.empty()) throw std::invalid_argument("not a decimal integer: '" + std::string(s) + "'");
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument("not a decimal integer: '" + std::string(s) + "'");
  }
  return ExactInt(boost::multiprecision::cpp_int(std::string(s)));
}

ExactInt ExactInt::div_exact(const ExactInt &d) const {
  if (d.is_zero()) throw std::invalid_argument("division by zero");
  boost::multiprecision::cpp_int q, r;
  boost::multiprecision::divide_qr(v_, d.v_, q, r);
  if (!r.is_zero()) throw std::logic_error("inexact division");
  return ExactInt(std::move(q));
}

ExactInt ExactInt::gcd(const ExactInt &a, const ExactInt &b) {
  return ExactInt(boost::multiprecision::gcd(a.v_, b.v_));
}

ExactInt ExactInt::pow(long long e) const {
  if (e < 0) throw std::domain_error("negative exponent");
  return ExactInt(boost::multiprecision::pow(v_, static_cast<unsigned>(e)));
}

ExactInt ExactInt::abs() const { return ExactInt(boost::multiprecision::abs(v_)); }

std::ostream &operator<<(std::ostream &os, const ExactInt &v) { return os << v.v_; }

ExactRat::ExactRat(ExactInt num, ExactInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::invalid_argument("division by zero");
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) {
    den_ = ExactInt(1);
    return;
  }
  ExactInt g = ExactInt::gcd(num_, den_);
  num_ = num_.div_exact(g);
  den_ = den_.div_exact(g);
}

ExactRat ExactRat::operator-() const {
  ExactRat r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

ExactRat operator+(const ExactRat &a, const ExactRat &b) {
  return ExactRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

ExactRat operator-(const ExactRat &a, const ExactRat &b) {
  return ExactRat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

ExactRat operator*(const ExactRat &a, const ExactRat &b) {
  return ExactRat(a.num_ * b.num_, a.den_ * b.den_);
}

ExactRat operator/(const ExactRat &a, const ExactRat &b) {
  if (b.is_zero()) throw std::invalid_argument("division by zero");
  return ExactRat(a.num_ * b.den_, a.den_ * b.num_);
}

ExactRat ExactRat::pow(long long e) const {
  if (e >= 0) {
    // Powers of a canonical form stay canonical, but reconstructing keeps
    // the invariant in one place.
    return ExactRat(num_.pow(e), den_.pow(e));
  }
  if (is_zero()) throw std::domain_error("zero base with negative exponent");
  unsigned long long mag = 0ULL - static_cast<unsigned long long>(e);
  return ExactRat(den_.pow(static_cast<long long>(mag)), num_.pow(static_cast<long long>(mag)));
}

std::string ExactRat::to_string() const { return num_.to_decimal() + "/" + den_.to_decimal(); }

std::ostream &operator<<(std::ostream &os, const ExactRat &v) { return os << v.to_string(); }

} // namespace oddfact
