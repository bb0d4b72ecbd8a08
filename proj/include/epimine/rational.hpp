#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "epimine/error.hpp"

namespace epimine {

/// Exact rational with int64 numerator/denominator, always normalized
/// (gcd 1, positive denominator). Used for rule metrics and thresholds,
/// where counts like 1/3 fall off the fixed value grid.
class Rational {
 public:
  constexpr Rational() : num_(0), den_(1) {}

  static Rational of(std::int64_t num, std::int64_t den) {
    if (den == 0) raise(ErrorCode::OutOfRange, "rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    Rational r;
    r.num_ = num;
    r.den_ = den;
    return r;
  }

  static Rational integer(std::int64_t n) { return of(n, 1); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return of(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return of(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return of(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) raise(ErrorCode::OutOfRange, "rational division by zero");
    return of(a.num_ * b.den_, a.den_ * b.num_);
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  /// Exact text form: a plain decimal when the reduced denominator divides a
  /// power of ten ("0.25", "1.5"), otherwise a fraction ("1/3"). Output is
  /// never a rounded float.
  std::string to_string() const;

  /// Inverse of to_string: accepts "0.4", ".4", "2", "1/3".
  static Rational parse(const std::string& text);

 private:
  std::int64_t num_;
  std::int64_t den_;
};

}  // namespace epimine
