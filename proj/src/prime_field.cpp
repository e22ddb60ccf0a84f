#include "fpure/prime_field.hpp"

#include <string>

#include "fpure/errors.hpp"

namespace fpure {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31)) throw DomainError("characteristic " + std::to_string(p) + " is not below 2^31");
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
}

Coeff PrimeField::pow(Coeff a, std::uint64_t e) const noexcept {
  std::uint64_t base = a % p_;
  std::uint64_t acc = 1 % p_;
  while (e > 0) {
    if (e & 1) acc = acc * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return static_cast<Coeff>(acc);
}

Coeff PrimeField::inv(Coeff a) const {
  if (a % p_ == 0) throw DomainError("zero has no inverse in F_" + std::to_string(p_));
  // Extended Euclid on signed 64-bit values.
  std::int64_t r0 = p_, r1 = a % p_, s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    std::int64_t s2 = s0 - q * s1;
    s0 = s1;
    s1 = s2;
  }
  return reduce(s0);
}

}  // namespace fpure
