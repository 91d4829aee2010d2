#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace avgconn {

// Exact rational number with a canonical representation: reduced terms,
// positive denominator.  All averages and bounds in this library are tiny
// fractions, so 64-bit components are plenty.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long value) : num_(value), den_(1) {}
  Rational(long long num, long long den) : num_(num), den_(den) {
    if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
    normalize();
  }

  long long num() const { return num_; }
  long long den() const { return den_; }

  Rational operator+(const Rational& o) const {
    return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  Rational operator-(const Rational& o) const {
    return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
  }
  Rational operator*(const Rational& o) const {
    return Rational(num_ * o.num_, den_ * o.den_);
  }
  Rational operator/(const Rational& o) const {
    if (o.num_ == 0) throw std::invalid_argument("Rational: division by zero");
    return Rational(num_ * o.den_, den_ * o.num_);
  }

  bool operator==(const Rational& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const {
    return num_ * o.den_ < o.num_ * den_;
  }
  bool operator<=(const Rational& o) const { return !(o < *this); }
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator>=(const Rational& o) const { return !(*this < o); }

  // Canonical machine form "num/den", e.g. "21/10", "2/1".
  std::string str() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
  }
  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

 private:
  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  long long num_;
  long long den_;
};

}  // namespace avgconn
