#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace fpure {

// Largest exponent (and total degree) a monomial may carry.
inline constexpr std::uint64_t kMaxExponent = (std::uint64_t{1} << 63) - 1;

// Checked helpers for exponent arithmetic. Throw OverflowError past kMaxExponent.
std::uint64_t checked_add(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_pow(std::uint64_t base, unsigned exp);

// Exponent vector with a cached total degree. Every operation that can grow
// exponents is checked; nothing ever wraps.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint64_t> exps);

  std::size_t size() const noexcept { return exps_.size(); }
  std::uint64_t operator[](std::size_t i) const noexcept { return exps_[i]; }
  std::span<const std::uint64_t> exponents() const noexcept { return exps_; }
  std::uint64_t degree() const noexcept { return degree_; }
  std::uint64_t max_exponent() const noexcept;
  bool is_one() const noexcept { return degree_ == 0; }
  bool is_squarefree() const noexcept;

  bool divides(const Monomial& other) const noexcept;
  // Precondition: divisor.divides(*this).
  Monomial quotient(const Monomial& divisor) const;
  // Every exponent multiplied by k.
  Monomial scaled(std::uint64_t k) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) noexcept { return a.exps_ == b.exps_; }

  static Monomial lcm(const Monomial& a, const Monomial& b);
  static Monomial gcd(const Monomial& a, const Monomial& b);
  static bool coprime(const Monomial& a, const Monomial& b) noexcept;

 private:
  std::vector<std::uint64_t> exps_;
  std::uint64_t degree_ = 0;
};

// Graded reverse lexicographic comparison: <0, 0, >0.
int compare_grevlex(const Monomial& a, const Monomial& b) noexcept;
// Block order eliminating variable 0: its exponent decides first, ties broken
// by grevlex on the remaining variables.
int compare_eliminate_first(const Monomial& a, const Monomial& b) noexcept;

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

}  // namespace fpure
