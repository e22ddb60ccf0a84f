#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fpure/polynomial.hpp"

namespace fpure {

struct GroebnerLimits {
  std::size_t max_basis = 10'000;
  std::uint64_t max_reduction_steps = 10'000'000;
};

// Counts reduction steps across one computation and throws
// ResourceCapError("groebner.reduction_steps") past the limit.
class ReductionBudget {
 public:
  explicit ReductionBudget(std::uint64_t limit) : limit_(limit) {}
  void step();
  std::uint64_t used() const noexcept { return used_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

// Full reduction of f by the divisors (first divisor whose leading monomial
// divides wins). A zero result proves f lies in the ideal of the divisors.
SparsePolynomial normal_form(const SparsePolynomial& f, std::span<const SparsePolynomial> divisors,
                             ReductionBudget* budget = nullptr);

// Reduced Groebner basis in the ring's monomial order: monic, minimal,
// tail-reduced, sorted by increasing leading monomial. Pairs are handled with
// the normal selection strategy (smallest lcm, ties by index) and the
// Gebauer-Moeller criteria. The zero ideal yields an empty basis.
std::vector<SparsePolynomial> reduced_groebner_basis(std::span<const SparsePolynomial> generators,
                                                     const GroebnerLimits& limits = {});

// h / g when g divides h exactly, nullopt otherwise.
std::optional<SparsePolynomial> divide_exact(const SparsePolynomial& h, const SparsePolynomial& g);

}  // namespace fpure
