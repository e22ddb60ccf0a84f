#include "fpure/rational.hpp"

#include <limits>

#include "fpure/errors.hpp"

namespace fpure {

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;  // truncates toward zero
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

BigInt ceil_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
  return q;
}

std::uint64_t to_u64(const BigInt& v, const std::string& what) {
  if (v < 0 || v > BigInt(std::numeric_limits<std::uint64_t>::max())) {
    throw OverflowError(what + " = " + v.str() + " does not fit in 64 bits");
  }
  return static_cast<std::uint64_t>(v);
}

ExactRational::ExactRational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw DomainError("zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  BigInt g = boost::multiprecision::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
  if (num_ == 0) den_ = 1;
}

BigInt ExactRational::floor() const { return floor_div(num_, den_); }
BigInt ExactRational::ceil() const { return ceil_div(num_, den_); }

std::string ExactRational::to_string() const {
  return den_ == 1 ? num_.str() : num_.str() + "/" + den_.str();
}

ExactRational operator+(const ExactRational& a, const ExactRational& b) {
  return ExactRational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

ExactRational operator-(const ExactRational& a, const ExactRational& b) {
  return ExactRational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

ExactRational operator*(const ExactRational& a, const ExactRational& b) {
  return ExactRational(a.num_ * b.num_, a.den_ * b.den_);
}

ExactRational operator/(const ExactRational& a, const ExactRational& b) {
  if (b.num_ == 0) throw DomainError("division by zero rational");
  return ExactRational(a.num_ * b.den_, a.den_ * b.num_);
}

std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
  BigInt l = a.num_ * b.den_;
  BigInt r = b.num_ * a.den_;
  if (l < r) return std::strong_ordering::less;
  if (l > r) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace fpure
