#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "fpure/groebner.hpp"
#include "fpure/polynomial.hpp"

namespace fpure {

// Raw generator products a single ideal multiplication step may form.
inline constexpr std::size_t kDefaultPowerCap = 50'000;

// Immutable ideal of a polynomial ring.
//
// Generators are normalised on construction: zeros dropped, a nonzero
// constant collapses the ideal to (1), term generators are reduced to the
// unique minimal monomial generating set (is_monomial() is then true), and
// other generators are made monic and deduplicated. The reduced Groebner
// basis is computed on first use and shared between copies.
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<SparsePolynomial> generators);

  static Ideal zero(RingPtr ring);
  static Ideal unit(RingPtr ring);
  // (x_1, ..., x_n)
  static Ideal maximal(RingPtr ring);
  static Ideal principal(const SparsePolynomial& f);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<SparsePolynomial>& generators() const noexcept { return generators_; }
  bool is_monomial() const noexcept { return monomial_; }
  bool is_zero() const noexcept { return generators_.empty(); }
  // May compute the Groebner basis for non-monomial generators.
  bool is_unit() const;
  bool is_principal() const noexcept { return generators_.size() <= 1; }

  // Reduced basis; computed once, concurrent callers wait for the first.
  const std::vector<SparsePolynomial>& groebner_basis() const;
  bool has_cached_basis() const noexcept { return cache_->ready; }

  // "(x^2, y)", "(0)", "(1)"
  std::string to_string() const;

  friend Ideal groebner_basis(const Ideal& I);

 private:
  struct BasisCache {
    std::once_flag once;
    std::vector<SparsePolynomial> basis;
    bool ready = false;
  };

  RingPtr ring_;
  std::vector<SparsePolynomial> generators_;
  bool monomial_ = true;
  std::shared_ptr<BasisCache> cache_;
};

// Minimal generators of the monomial ideal spanned by `ms`, sorted by degree
// then monomial order.
std::vector<Monomial> minimalize_monomials(const Ring& ring, std::vector<Monomial> ms);

// I^{[q]}: generated by the q-th powers of the generators of I.
Ideal bracket_power(const Ideal& I, std::uint64_t q);

enum class ColonStrategy {
  automatic,    // monomial and principal fast paths, elimination otherwise
  elimination,  // always intersect-and-divide through an elimination Groebner basis
};

// (J : I) = { g : g*I ⊆ J }.
Ideal colon(const Ideal& J, const Ideal& I, ColonStrategy strategy = ColonStrategy::automatic);

bool membership(const SparsePolynomial& g, const Ideal& I);
// True iff J ⊆ I.
bool ideal_contains(const Ideal& I, const Ideal& J);
bool ideal_equal(const Ideal& a, const Ideal& b);

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b, std::size_t cap = kDefaultPowerCap);
Ideal ideal_intersection(const Ideal& a, const Ideal& b);

// a^N with a^0 = (1). Throws ResourceCapError("ideal_power.raw_products") when
// one multiplication step would form more than `cap` raw products.
Ideal ideal_power(const Ideal& a, std::uint64_t N, std::size_t cap = kDefaultPowerCap);

// I^{[1/q]}: the smallest J with I ⊆ J^{[q]}. Each generator g is split as
// g = sum_mu (g_mu)^q * mu over monomials mu with exponents < q; the g_mu
// generate the result.
Ideal root_power(const Ideal& I, std::uint64_t q);

// The ideal regenerated by its reduced Groebner basis (basis already cached).
Ideal groebner_basis(const Ideal& I);

// A term of f with every exponent < q, i.e. a witness that f ∉ m^{[q]}.
const Term* term_outside_frobenius_maximal(const SparsePolynomial& f, std::uint64_t q);

}  // namespace fpure
