#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "fpure/monomial.hpp"
#include "fpure/prime_field.hpp"

namespace fpure {

enum class MonomialOrder { grevlex, eliminate_first };

// F_p[x_1, ..., x_n] with a fixed variable order and monomial order.
class Ring {
 public:
  Ring(PrimeField field, std::vector<std::string> variables, MonomialOrder order = MonomialOrder::grevlex);

  const PrimeField& field() const noexcept { return field_; }
  std::uint32_t characteristic() const noexcept { return field_.characteristic(); }
  const std::vector<std::string>& variables() const noexcept { return variables_; }
  std::size_t nvars() const noexcept { return variables_.size(); }
  MonomialOrder order() const noexcept { return order_; }

  int compare(const Monomial& a, const Monomial& b) const noexcept {
    return order_ == MonomialOrder::grevlex ? compare_grevlex(a, b) : compare_eliminate_first(a, b);
  }

  // "p=3; vars=x,y"
  std::string to_string() const;

  friend bool operator==(const Ring&, const Ring&) = default;

 private:
  PrimeField field_;
  std::vector<std::string> variables_;
  MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::uint32_t p, std::vector<std::string> variables,
                  MonomialOrder order = MonomialOrder::grevlex);

bool same_ring(const RingPtr& a, const RingPtr& b) noexcept;
// Throws DomainError("ring mismatch") unless same_ring.
void require_same_ring(const RingPtr& a, const RingPtr& b);

struct Term {
  Monomial monomial;
  Coeff coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

// Raw term pairs a single product may generate before aborting.
inline constexpr std::size_t kMaxProductTerms = 20'000'000;

// Immutable sparse polynomial. Terms are kept strictly decreasing in the ring's
// monomial order and never carry a zero coefficient; the zero polynomial has
// no terms.
class SparsePolynomial {
 public:
  explicit SparsePolynomial(RingPtr ring) : ring_(std::move(ring)) {}

  // Combines duplicate monomials, drops zeros and sorts.
  static SparsePolynomial from_terms(RingPtr ring, std::vector<Term> terms);
  static SparsePolynomial constant(RingPtr ring, std::int64_t value);
  static SparsePolynomial variable(RingPtr ring, std::size_t index);
  static SparsePolynomial term(RingPtr ring, Monomial m, Coeff c = 1);

  const RingPtr& ring() const noexcept { return ring_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }
  bool is_nonzero_constant() const noexcept { return terms_.size() == 1 && terms_[0].monomial.is_one(); }
  bool is_term() const noexcept { return terms_.size() == 1; }

  // Precondition: nonzero.
  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().monomial; }
  Coeff leading_coeff() const { return terms_.front().coeff; }

  std::uint64_t max_exponent() const noexcept;
  std::uint64_t total_degree() const noexcept;

  SparsePolynomial monic() const;
  SparsePolynomial scaled(Coeff c) const;
  SparsePolynomial times_term(const Monomial& m, Coeff c) const;

  friend SparsePolynomial operator+(const SparsePolynomial& f, const SparsePolynomial& g);
  friend SparsePolynomial operator-(const SparsePolynomial& f, const SparsePolynomial& g);
  friend SparsePolynomial operator-(const SparsePolynomial& f);
  friend SparsePolynomial operator*(const SparsePolynomial& f, const SparsePolynomial& g);
  friend bool operator==(const SparsePolynomial& f, const SparsePolynomial& g);

  // The polynomial made of terms [k, size()).
  SparsePolynomial drop_leading(std::size_t k) const;

  // f - c*m*g in one merge pass.
  SparsePolynomial minus_multiple(Coeff c, const Monomial& m, const SparsePolynomial& g) const;

  // Canonical text form, e.g. "x^2 + 2*y*z"; parses back to the same polynomial.
  std::string to_string() const;

 private:
  SparsePolynomial(RingPtr ring, std::vector<Term> sorted_terms)
      : ring_(std::move(ring)), terms_(std::move(sorted_terms)) {}

  RingPtr ring_;
  std::vector<Term> terms_;
};

SparsePolynomial poly_mul(const SparsePolynomial& f, const SparsePolynomial& g);
// f^s. The exponent is expanded in base p and each digit power is lifted with
// the Frobenius map, so f^{s0 * p^k} costs f^{s0} plus an exponent rescale.
SparsePolynomial poly_pow(const SparsePolynomial& f, std::uint64_t s);
// f^q for q a power of p, by scaling every exponent (coefficients are fixed by
// Frobenius on F_p). Throws DomainError if q is not a power of p.
SparsePolynomial frobenius_image(const SparsePolynomial& f, std::uint64_t q);

bool is_power_of(std::uint64_t q, std::uint32_t p) noexcept;
// p^e with overflow checking.
std::uint64_t prime_power(std::uint32_t p, unsigned e);

}  // namespace fpure
