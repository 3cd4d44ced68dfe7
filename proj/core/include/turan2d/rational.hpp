#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace turan2d {

/// Exact reduced fraction over int64.  Every density comparison in this
/// library goes through this type; no floating point touches a verdict.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(int64_t num, int64_t den) : num_(num), den_(den) { normalize(); }
  constexpr Rational(int64_t value) : num_(value), den_(1) {}  // NOLINT: implicit by design

  int64_t num() const { return num_; }
  int64_t den() const { return den_; }

  Rational operator+(const Rational& o) const {
    return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  Rational operator-(const Rational& o) const {
    return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
  }
  Rational operator*(const Rational& o) const { return Rational(num_ * o.num_, den_ * o.den_); }
  Rational operator/(const Rational& o) const {
    if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
    return Rational(num_ * o.den_, den_ * o.num_);
  }
  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const {
    return static_cast<__int128>(num_) * o.den_ < static_cast<__int128>(o.num_) * den_;
  }
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator<=(const Rational& o) const { return !(o < *this); }
  bool operator>=(const Rational& o) const { return !(*this < o); }

  /// Serialized form, always with an explicit denominator: "8/3", "2/1".
  std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  /// Parses "p/q" or a bare integer "p".
  static Rational parse(const std::string& s);

 private:
  void normalize() {
    if (den_ == 0) throw std::domain_error("Rational: zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  int64_t num_ = 0;
  int64_t den_ = 1;
};

}  // namespace turan2d
