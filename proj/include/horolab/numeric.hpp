#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>

namespace horolab {

// Exact half-integer, stored as twice its value. Gromov products and
// four-point defects on unit-edge graphs live in (1/2)Z; no floating point
// enters the core.
class HalfInt {
 public:
  constexpr HalfInt() = default;

  static constexpr HalfInt from_doubled(long long d) {
    HalfInt h;
    h.doubled_ = d;
    return h;
  }
  static constexpr HalfInt whole(long long n) { return from_doubled(2 * n); }

  constexpr long long doubled() const { return doubled_; }
  constexpr bool is_integer() const { return doubled_ % 2 == 0; }
  // round toward minus infinity
  constexpr long long floor() const {
    long long d = doubled_;
    return (d >= 0) ? d / 2 : -((-d + 1) / 2);
  }

  std::string str() const;

  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return from_doubled(a.doubled_ + b.doubled_); }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return from_doubled(a.doubled_ - b.doubled_); }
  friend constexpr HalfInt operator-(HalfInt a) { return from_doubled(-a.doubled_); }
  constexpr auto operator<=>(const HalfInt&) const = default;
  constexpr bool operator==(const HalfInt&) const = default;

  friend constexpr bool operator==(HalfInt a, long long n) { return a.doubled_ == 2 * n; }
  friend constexpr bool operator>=(HalfInt a, long long n) { return a.doubled_ >= 2 * n; }
  friend constexpr bool operator<=(HalfInt a, long long n) { return a.doubled_ <= 2 * n; }
  friend constexpr bool operator>(HalfInt a, long long n) { return a.doubled_ > 2 * n; }
  friend constexpr bool operator<(HalfInt a, long long n) { return a.doubled_ < 2 * n; }

 private:
  long long doubled_ = 0;
};

constexpr HalfInt min(HalfInt a, HalfInt b) { return a < b ? a : b; }
constexpr HalfInt max(HalfInt a, HalfInt b) { return a < b ? b : a; }

// Exact rational on 64-bit integers, always normalized with positive
// denominator. Used for stable translation lengths and quasi-geodesic
// constants; values stay tiny in practice.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(long long num, long long den);
  // NOLINTNEXTLINE: implicit integer promotion is intentional
  Rational(long long n) : num_(n), den_(1) {}

  long long num() const { return num_; }
  long long den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  std::string str() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ <= b.num_ * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

 private:
  long long num_ = 0;
  long long den_ = 1;
};

}  // namespace horolab
