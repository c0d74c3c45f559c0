#include "horolab/numeric.hpp"

#include "horolab/errors.hpp"

namespace horolab {

std::string HalfInt::str() const {
  if (doubled_ % 2 == 0) return std::to_string(doubled_ / 2);
  return std::to_string(doubled_) + "/2";
}

Rational::Rational(long long num, long long den) : num_(num), den_(den) {
  if (den_ == 0) fail(errc::precondition, "rational with zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
Rational operator-(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}
Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

}  // namespace horolab
