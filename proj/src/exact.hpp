#ifndef ODDFACT_EXACT_HPP
#define ODDFACT_EXACT_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace oddfact {

/* Arbitrary-precision signed integer. A thin value wrapper around
 * boost::multiprecision::cpp_int; every operation is exact and the
 * values are immutable once shared. Division is only offered in its
 * exact form: a nonzero remainder is an arithmetic bug, not a result.
 */
class ExactInt {
public:
  ExactInt() = default;
  ExactInt(long long v) : v_(v) {}

  // Parses an optional '-' followed by decimal digits.
  static ExactInt from_decimal(std::string_view s);

  ExactInt operator-() const { return ExactInt(-v_); }

  ExactInt &operator+=(const ExactInt &o) {
    v_ += o.v_;
    return *this;
  }
  ExactInt &operator-=(const ExactInt &o) {
    v_ -= o.v_;
    return *this;
  }
  ExactInt &operator*=(const ExactInt &o) {
    v_ *= o.v_;
    return *this;
  }

  friend ExactInt operator+(ExactInt a, const ExactInt &b) { return a += b; }
  friend ExactInt operator-(ExactInt a, const ExactInt &b) { return a -= b; }
  friend ExactInt operator*(ExactInt a, const ExactInt &b) { return a *= b; }

  friend bool operator==(const ExactInt &a, const ExactInt &b) { return a.v_ == b.v_; }
  friend bool operator!=(const ExactInt &a, const ExactInt &b) { return a.v_ != b.v_; }
  friend bool operator<(const ExactInt &a, const ExactInt &b) { return a.v_ < b.v_; }
  friend bool operator<=(const ExactInt &a, const ExactInt &b) { return a.v_ <= b.v_; }
  friend bool operator>(const ExactInt &a, const ExactInt &b) { return a.v_ > b.v_; }
  friend bool operator>=(const ExactInt &a, const ExactInt &b) { return a.v_ >= b.v_; }

  // Quotient of an exact division. Throws std::invalid_argument on a zero
  // divisor and std::logic_error when the division leaves a remainder.
  ExactInt div_exact(const ExactInt &d) const;

  // Non-negative gcd; gcd(a, 0) = |a|.
  static ExactInt gcd(const ExactInt &a, const ExactInt &b);

  // Exact power with non-negative exponent; pow(0) = 1 (empty product).
  ExactInt pow(long long e) const;

  ExactInt abs() const;
  int sign() const { return v_.sign(); }
  bool is_zero() const { return v_.is_zero(); }

  std::string to_decimal() const { return v_.str(); }

  friend std::ostream &operator<<(std::ostream &os, const ExactInt &v);

private:
  explicit ExactInt(boost::multiprecision::cpp_int v) : v_(std::move(v)) {}

  boost::multiprecision::cpp_int v_;
};

/* Exact rational in canonical form: den > 0, gcd(|num|, den) = 1, and zero
 * stored as 0/1. Canonical form makes equality component-wise, which is the
 * only comparison the identity verifiers ever use.
 */
class ExactRat {
public:
  ExactRat() : num_(0), den_(1) {}
  ExactRat(long long v) : num_(v), den_(1) {}
  ExactRat(ExactInt n) : num_(std::move(n)), den_(1) {}

  // Normalizing constructor: the unique canonical representative of num/den.
  // Throws std::invalid_argument("division by zero") when den == 0.
  ExactRat(ExactInt num, ExactInt den);

  const ExactInt &num() const { return num_; }
  const ExactInt &den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  int sign() const { return num_.sign(); }
  bool is_integer() const { return den_ == ExactInt(1); }

  ExactRat operator-() const;

  friend ExactRat operator+(const ExactRat &a, const ExactRat &b);
  friend ExactRat operator-(const ExactRat &a, const ExactRat &b);
  friend ExactRat operator*(const ExactRat &a, const ExactRat &b);
  friend ExactRat operator/(const ExactRat &a, const ExactRat &b);

  ExactRat &operator+=(const ExactRat &o) { return *this = *this + o; }
  ExactRat &operator-=(const ExactRat &o) { return *this = *this - o; }
  ExactRat &operator*=(const ExactRat &o) { return *this = *this * o; }
  ExactRat &operator/=(const ExactRat &o) { return *this = *this / o; }

  // Exact integer power; negative exponents invert first and require a
  // nonzero base (std::domain_error otherwise).
  ExactRat pow(long long e) const;

  friend bool operator==(const ExactRat &a, const ExactRat &b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const ExactRat &a, const ExactRat &b) { return !(a == b); }
  friend bool operator<(const ExactRat &a, const ExactRat &b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator<=(const ExactRat &a, const ExactRat &b) { return !(b < a); }
  friend bool operator>(const ExactRat &a, const ExactRat &b) { return b < a; }
  friend bool operator>=(const ExactRat &a, const ExactRat &b) { return !(a < b); }

  // Canonical serialization, always "num/den" (e.g. "-1/2", "3/1").
  std::string to_string() const;

  friend std::ostream &operator<<(std::ostream &os, const ExactRat &v);

private:
  ExactInt num_;
  ExactInt den_;
};

} // namespace oddfact

#endif // ODDFACT_EXACT_HPP
