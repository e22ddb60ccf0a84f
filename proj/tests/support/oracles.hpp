#pragma once

// Test-only reference implementations. Deliberately naive and independent of
// the library's fast paths (no hashing, no Frobenius shortcuts, no Groebner
// bases), so they can serve as oracles for it.

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "fpure/ideal.hpp"
#include "fpure/polynomial.hpp"

namespace fpure::oracle {

using DenseTerms = std::map<std::vector<std::uint64_t>, std::int64_t>;

inline DenseTerms to_map(const SparsePolynomial& f) {
  DenseTerms m;
  for (const auto& t : f.terms()) {
    auto e = t.monomial.exponents();
    m[std::vector<std::uint64_t>(e.begin(), e.end())] = t.coeff;
  }
  return m;
}

inline SparsePolynomial from_map(const RingPtr& ring, const DenseTerms& m) {
  std::vector<Term> terms;
  for (const auto& [e, c] : m) terms.push_back({Monomial(e), static_cast<Coeff>(c)});
  return SparsePolynomial::from_terms(ring, std::move(terms));
}

// Schoolbook product on ordered maps.
inline SparsePolynomial naive_mul(const SparsePolynomial& f, const SparsePolynomial& g) {
  const std::int64_t p = f.ring()->characteristic();
  DenseTerms out;
  for (const auto& [ea, ca] : to_map(f)) {
    for (const auto& [eb, cb] : to_map(g)) {
      std::vector<std::uint64_t> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out[e] = (out[e] + ca * cb) % p;
    }
  }
  return from_map(f.ring(), out);
}

// f^s by s-1 schoolbook multiplications.
inline SparsePolynomial naive_pow(const SparsePolynomial& f, std::uint64_t s) {
  SparsePolynomial acc = SparsePolynomial::constant(f.ring(), 1);
  for (std::uint64_t i = 0; i < s; ++i) acc = naive_mul(acc, f);
  return acc;
}

// Does some generator monomial divide m? (exponent-wise comparison)
inline bool monomial_in(const std::vector<std::vector<std::uint64_t>>& gens, const std::vector<std::uint64_t>& m) {
  for (const auto& g : gens) {
    bool divides = true;
    for (std::size_t i = 0; i < m.size(); ++i) divides = divides && g[i] <= m[i];
    if (divides) return true;
  }
  return false;
}

inline SparsePolynomial random_poly(std::mt19937_64& rng, const RingPtr& ring, int max_terms, int max_exp) {
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_int_distribution<int> expo(0, max_exp);
  std::uniform_int_distribution<std::uint32_t> coeff(1, ring->characteristic() - 1);
  std::vector<Term> terms;
  int n = nterms(rng);
  for (int k = 0; k < n; ++k) {
    std::vector<std::uint64_t> e(ring->nvars());
    for (auto& x : e) x = static_cast<std::uint64_t>(expo(rng));
    terms.push_back({Monomial(e), coeff(rng)});
  }
  return SparsePolynomial::from_terms(ring, std::move(terms));
}

inline SparsePolynomial random_monomial(std::mt19937_64& rng, const RingPtr& ring, int max_exp) {
  std::uniform_int_distribution<int> expo(0, max_exp);
  std::vector<std::uint64_t> e(ring->nvars());
  for (auto& x : e) x = static_cast<std::uint64_t>(expo(rng));
  return SparsePolynomial::term(ring, Monomial(e), 1);
}

}  // namespace fpure::oracle
