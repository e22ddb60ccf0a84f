#include "fpure/monomial.hpp"

#include <algorithm>
#include <string>

#include "fpure/errors.hpp"

namespace fpure {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (a > kMaxExponent - b) {
    throw OverflowError("exponent sum " + std::to_string(a) + " + " + std::to_string(b) + " exceeds 2^63-1");
  }
  return a + b;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kMaxExponent / a) {
    throw OverflowError("exponent product " + std::to_string(a) + " * " + std::to_string(b) + " exceeds 2^63-1");
  }
  return a * b;
}

std::uint64_t checked_pow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

Monomial::Monomial(std::vector<std::uint64_t> exps) : exps_(std::move(exps)) {
  for (auto e : exps_) {
    if (e > kMaxExponent) throw OverflowError("exponent " + std::to_string(e) + " exceeds 2^63-1");
    degree_ = checked_add(degree_, e);
  }
}

std::uint64_t Monomial::max_exponent() const noexcept {
  return exps_.empty() ? 0 : *std::max_element(exps_.begin(), exps_.end());
}

bool Monomial::is_squarefree() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](std::uint64_t e) { return e <= 1; });
}

bool Monomial::divides(const Monomial& other) const noexcept {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (divisor.exps_[i] > exps_[i]) throw DomainError("monomial quotient: divisor does not divide");
    r.exps_[i] -= divisor.exps_[i];
  }
  r.degree_ = degree_ - divisor.degree_;
  return r;
}

Monomial Monomial::scaled(std::uint64_t k) const {
  Monomial r(*this);
  for (auto& e : r.exps_) e = checked_mul(e, k);
  r.degree_ = checked_mul(degree_, k);
  return r;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r(a);
  for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] = checked_add(r.exps_[i], b.exps_[i]);
  r.degree_ = checked_add(a.degree_, b.degree_);
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  std::vector<std::uint64_t> e(a.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a.exps_[i], b.exps_[i]);
  return Monomial(std::move(e));
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  std::vector<std::uint64_t> e(a.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(a.exps_[i], b.exps_[i]);
  return Monomial(std::move(e));
}

bool Monomial::coprime(const Monomial& a, const Monomial& b) noexcept {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.exps_[i] != 0 && b.exps_[i] != 0) return false;
  }
  return true;
}

namespace {

int grevlex_range(const Monomial& a, const Monomial& b, std::size_t first, std::uint64_t deg_a,
                  std::uint64_t deg_b) noexcept {
  if (deg_a != deg_b) return deg_a < deg_b ? -1 : 1;
  for (std::size_t i = a.size(); i-- > first;) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace

int compare_grevlex(const Monomial& a, const Monomial& b) noexcept {
  return grevlex_range(a, b, 0, a.degree(), b.degree());
}

int compare_eliminate_first(const Monomial& a, const Monomial& b) noexcept {
  if (a[0] != b[0]) return a[0] < b[0] ? -1 : 1;
  return grevlex_range(a, b, 1, a.degree() - a[0], b.degree() - b[0]);
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (auto e : m.exponents()) {
    h ^= std::hash<std::uint64_t>{}(e) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace fpure
