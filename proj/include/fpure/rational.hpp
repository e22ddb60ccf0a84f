#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace fpure {

using BigInt = boost::multiprecision::cpp_int;

// Reduced fraction with positive denominator.
class ExactRational {
 public:
  ExactRational() : num_(0), den_(1) {}
  ExactRational(BigInt num, BigInt den = 1);  // throws DomainError on den == 0
  ExactRational(std::int64_t num, std::int64_t den) : ExactRational(BigInt(num), BigInt(den)) {}
  explicit ExactRational(std::int64_t n) : num_(n), den_(1) {}

  const BigInt& numerator() const noexcept { return num_; }
  const BigInt& denominator() const noexcept { return den_; }

  bool is_integer() const noexcept { return den_ == 1; }
  bool is_positive() const noexcept { return num_ > 0; }
  int sign() const noexcept { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

  BigInt floor() const;
  BigInt ceil() const;

  // "5/6", or "2" when the denominator is 1.
  std::string to_string() const;

  friend ExactRational operator+(const ExactRational& a, const ExactRational& b);
  friend ExactRational operator-(const ExactRational& a, const ExactRational& b);
  friend ExactRational operator*(const ExactRational& a, const ExactRational& b);
  friend ExactRational operator/(const ExactRational& a, const ExactRational& b);
  friend ExactRational operator-(const ExactRational& a) { return ExactRational(-a.num_, a.den_); }

  friend bool operator==(const ExactRational& a, const ExactRational& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b);

 private:
  BigInt num_;
  BigInt den_;
};

// Floor/ceiling division for a signed numerator and positive denominator.
BigInt floor_div(const BigInt& a, const BigInt& b);
BigInt ceil_div(const BigInt& a, const BigInt& b);

// Converts to uint64, throwing OverflowError (naming `what`) when out of range.
std::uint64_t to_u64(const BigInt& v, const std::string& what);

}  // namespace fpure
