#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fpure/ceil_arith.hpp"
#include "fpure/ideal.hpp"
#include "fpure/rational.hpp"

namespace fpure {

// The pair (R, a^t) with R = S/I, a given by its preimage a' ⊇ I in S.
// I is assumed radical and a is assumed to meet the complement of the minimal
// primes of I; neither is verified in general.
struct PairSpec {
  RingPtr ring;
  Ideal I;
  Ideal a_preimage;
  ExactRational t;
  std::vector<std::string> notes;

  // Throws DomainError unless t > 0, a' ⊇ I and a' ⊄ I.
  static PairSpec make(Ideal I, Ideal a_preimage, ExactRational t);
};

enum class Criterion { sharp, strong, classic };
const char* criterion_name(Criterion c) noexcept;
ThresholdFlavor criterion_flavor(Criterion c) noexcept;

// A product a_factor * colon_factor with a term outside m^{[q]}.
struct FedderWitness {
  unsigned e = 0;
  std::uint64_t q = 0;
  BigInt N;
  std::vector<std::uint64_t> a_exponents;  // k with sum N; a_factor = prod g_i^{k_i}
  SparsePolynomial a_factor;      // element of a'^N
  SparsePolynomial colon_factor;  // generator of (I^{[q]} : I)
  SparsePolynomial product;
  Term escaping;                  // term of product with every exponent < q
};

// Outcome of the condition a'^N (I^{[q]} : I) ⊄ m^{[q]} at one e.
struct FedderStep {
  unsigned e = 0;
  std::uint64_t q = 0;
  BigInt N;
  bool holds = false;
  std::string reason;
  std::optional<FedderWitness> witness;
};

struct EscapingProduct {
  std::vector<std::uint64_t> exponents;  // k with sum N
  std::size_t colon_index = 0;           // which c_j
};

// Some g_0^{k_0} ... g_{l-1}^{k_{l-1}} c_j with sum k = N and a term outside
// m^{[q]}, searched modulo m^{[q]}. Empty a_gens stands for the unit ideal.
std::optional<EscapingProduct> find_escaping_product(const std::vector<SparsePolynomial>& a_gens, std::uint64_t N,
                                                     const std::vector<SparsePolynomial>& colon_gens,
                                                     std::uint64_t q);

// Largest s with f^s ∉ m^{[q]}; f must vanish at the origin and be nonzero.
std::uint64_t principal_nu(const SparsePolynomial& f, std::uint64_t q);

// Truncated products a single condition check may form.
inline constexpr std::uint64_t kFedderProductCap = 2'000'000;

// Evaluates the condition at q = p^e with N from the criterion's flavor.
// Products of generators of a' are enumerated by exponent vector and
// computed modulo m^{[q]}; throws ResourceCapError("fedder.products") past
// kFedderProductCap.
FedderStep fedder_condition(const PairSpec& pair, unsigned e, Criterion criterion);

// Rechecks a witness from scratch: colon_factor * I ⊆ I^{[q]}, a_factor is the
// product of the generators of a' raised to a_exponents, which sum to N
// recomputed from t and q, product = a_factor * colon_factor, and the
// escaping term really occurs in product with all exponents < q.
bool verify_witness(const PairSpec& pair, const FedderWitness& w, Criterion criterion);

enum class PurityOutcome { proven_pure, failed_at_all, inconclusive };
const char* outcome_name(PurityOutcome o) noexcept;

struct PurityVerdict {
  Criterion criterion = Criterion::sharp;
  PurityOutcome outcome = PurityOutcome::inconclusive;
  std::vector<FedderStep> trace;  // in increasing e
  std::optional<FedderWitness> witness;
  std::string explanation;
};

// Sharp F-purity: the condition at a single e >= 1 proves it. Runs e = 1..e_max
// and stops at the first success; no success is Inconclusive. With workers > 1
// the e values run concurrently and the least proving e is reported.
PurityVerdict sharp_fedder(const PairSpec& pair, unsigned e_max, unsigned workers = 1);

// Same with N = ⌈tq⌉ (strong F-purity). The exponent substitution extends
// the Fedder-type criterion and is labelled so in the explanation.
PurityVerdict strong_fedder(const PairSpec& pair, unsigned e_max, unsigned workers = 1);

// Classic F-purity, N = ⌊t(q-1)⌋, at every listed e. ProvenPure only when a
// theorem turns the finite pattern into a proof: a' = S (Fedder), or a
// principal modulo I with the condition at some listed e where t(q-1) is an
// integer (then it coincides with the sharp condition, and sharp implies
// classic for principal pairs). FailedAtAll when it fails at every listed e.
PurityVerdict classic_fpure(const PairSpec& pair, const std::vector<unsigned>& e_list);

// a' = (f) + I for some f.
bool principal_modulo(const Ideal& a_preimage, const Ideal& I);
// Such an f, taken from the generators of a', if there is one.
std::optional<SparsePolynomial> principal_generator_modulo(const Ideal& a_preimage, const Ideal& I);

// Generators of an ideal of S whose image in R is a^N: (1) when N = 0 or
// a' = S, (f^N) when a' = (f) + I, the generators of a'^N otherwise.
std::vector<SparsePolynomial> pair_power_generators(const PairSpec& pair, std::uint64_t N,
                                                    std::size_t cap = kDefaultPowerCap);

struct ConsistencyReport {
  std::string name;
  bool applicable = false;
  std::uint64_t checked = 0;
  std::vector<std::string> violations;
};

// For principal pairs: a sharp proof must come with the classic condition at
// every e <= e_max. A violation is an implementation bug.
ConsistencyReport principal_sharp_implies_classic(const PairSpec& pair, unsigned e_max);

struct SingleSplit {
  bool splits = false;
  std::string diagnosis;
  std::optional<PairSpec> pair;  // (S, (f)^{1/(p^e-1)}) when splits
  std::optional<PurityVerdict> verdict;
};

// If f ∉ m^{[p^e]} the map sending 1 to f^{1/p^e} splits and the pair
// (S, f^{1/(p^e-1)}) is sharply F-pure; the verdict is checked by sharp_fedder at e.
SingleSplit sharp_from_single_split(const SparsePolynomial& f, unsigned e);

// Least total degree of a term of f; f must be nonzero.
std::uint64_t order_of(const SparsePolynomial& f);

// Terms of f with every exponent < q.
SparsePolynomial truncate_below(const SparsePolynomial& f, std::uint64_t q);

}  // namespace fpure
