#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fpure/ideal.hpp"
#include "fpure/purity.hpp"

namespace fpure {

// Ideals of R = S/I_def are passed as preimages in S; a containment J ⊆ K in
// R is decided as J ⊆ K + I_def in S.

struct ClosureOptions {
  // Report TriviallyIn for z ∈ I without running the per-e checks.
  bool short_circuit_members = true;
};

struct ClosureStep {
  unsigned e = 0;
  std::uint64_t q = 0;
  BigInt N;
  bool contained = false;
};

enum class ClosureOutcome { trivially_in, certified_in, bounded_in, failed_at };
const char* closure_outcome_name(ClosureOutcome o) noexcept;

struct ClosureVerdict {
  ClosureOutcome outcome = ClosureOutcome::failed_at;
  unsigned certified_e = 0;      // certified_in
  std::string certificate;       // certified_in: how the certificate was obtained
  std::vector<unsigned> failed;  // failed_at: every e where the containment fails
  unsigned e_lo = 0, e_hi = 0;
  std::vector<ClosureStep> trace;
  std::string explanation;
};

// e = 1..default_e_max(p) unless the caller gives a range: 6 for p <= 5,
// fewer for larger p so p^e stays near desk scale.
unsigned default_e_max(std::uint32_t p) noexcept;

// Per-e containment a^{⌈t(q-1)⌉} z^q ⊆ I^{[q]} in R for the sharp Frobenius
// closure of I. CertifiedIn(e) needs a principal modulo I_def, t(q-1) an
// integer and the containment at e: then it holds for every larger e. Without
// such an e, containment at every tested e is only BoundedIn, and failures
// are diagnostic since membership asks for e >> 0 only.
ClosureVerdict sharp_frobenius_membership(const SparsePolynomial& z, const Ideal& I, const PairSpec& pair,
                                          unsigned e_lo, unsigned e_hi, const ClosureOptions& options = {});
ClosureVerdict sharp_frobenius_membership(const SparsePolynomial& z, const Ideal& I, const PairSpec& pair,
                                          const ClosureOptions& options = {});

// c a^{⌈t(q-1)⌉} z^q ⊆ I^{[q]} for e = 0..e_max. Passing is evidence for
// z ∈ I^{*a^t} with witness c, not a proof.
struct WitnessTrace {
  bool holds = true;
  std::vector<ClosureStep> trace;
};
WitnessTrace tight_closure_witness_check(const SparsePolynomial& z, const Ideal& I, const PairSpec& pair,
                                         const SparsePolynomial& c, unsigned e_max);

// c ∈ tau must satisfy c a^{⌈t(q-1)⌉} z^q ⊆ I^{[q]} for every instance
// (I, z) with z ∈ I and e = 0..e_max. Not applicable when c ∉ tau.
ConsistencyReport sharp_multiplier_check(const SparsePolynomial& c, const PairSpec& pair, const Ideal& tau,
                                         const std::vector<std::pair<Ideal, SparsePolynomial>>& instances,
                                         unsigned e_max);

// When c witnesses z for I, the same c witnesses every generator g of
// a^{⌈t(q-1)⌉} z^q for I^{[q]}: c a^{⌈t(p^d-1)⌉} g^{p^d} ⊆ I^{[q p^d]} for
// d = 0..d_max. Not applicable when the witness check itself fails.
ConsistencyReport power_into_closure_check(const SparsePolynomial& z, const Ideal& I, const PairSpec& pair,
                                           const SparsePolynomial& c, std::uint64_t q, unsigned d_max);

}  // namespace fpure
