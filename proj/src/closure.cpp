#include "fpure/closure.hpp"

#include <cmath>

#include "fpure/errors.hpp"

namespace fpure {

namespace {

std::uint64_t q_of(const PairSpec& pair, unsigned e) { return prime_power(pair.ring->characteristic(), e); }

BigInt sharp_exponent(const ExactRational& t, std::uint64_t q) {
  return ThresholdExponent{t, BigInt(q), ThresholdFlavor::sharp}.value();
}

// I^{[q]} + I_def, the preimage of the Frobenius power in R.
Ideal frobenius_target(const Ideal& I, const PairSpec& pair, std::uint64_t q) {
  return ideal_sum(bracket_power(I, q), pair.I);
}

// c a^N w ⊆ K. Principal a (or small N) goes generator by generator;
// otherwise cw ∈ (K : a^N) through the ascending chain (K : a^j), which stops
// as soon as it contains cw or repeats.
bool multiples_inside(const PairSpec& pair, const BigInt& N, const SparsePolynomial& cw, const Ideal& K) {
  if (cw.is_zero()) return true;
  const std::uint64_t n = to_u64(N, "threshold exponent");
  if (n <= 2 || pair.a_preimage.is_unit() || principal_modulo(pair.a_preimage, pair.I)) {
    for (const auto& g : pair_power_generators(pair, n)) {
      if (!membership(poly_mul(g, cw), K)) return false;
    }
    return true;
  }
  Ideal cur = K;
  for (std::uint64_t j = 0; j < n; ++j) {
    if (membership(cw, cur)) return true;
    Ideal next = colon(cur, pair.a_preimage);
    if (ideal_equal(next, cur)) return false;
    cur = std::move(next);
  }
  return membership(cw, cur);
}

ClosureStep witness_step(const SparsePolynomial& z, const Ideal& I, const PairSpec& pair, const SparsePolynomial& c,
                         unsigned e) {
  ClosureStep s;
  s.e = e;
  s.q = q_of(pair, e);
  s.N = sharp_exponent(pair.t, s.q);
  s.contained = multiples_inside(pair, s.N, poly_mul(c, frobenius_image(z, s.q)), frobenius_target(I, pair, s.q));
  return s;
}

void check_rings(const SparsePolynomial& z, const Ideal& I, const PairSpec& pair) {
  require_same_ring(z.ring(), pair.ring);
  require_same_ring(I.ring(), pair.ring);
}

}  // namespace

const char* closure_outcome_name(ClosureOutcome o) noexcept {
  switch (o) {
    case ClosureOutcome::trivially_in: return "TriviallyIn";
    case ClosureOutcome::certified_in: return "CertifiedIn";
    case ClosureOutcome::bounded_in: return "BoundedIn";
    case ClosureOutcome::failed_at: return "FailedAt";
  }
  return "?";
}

unsigned default_e_max(std::uint32_t p) noexcept {
  if (p <= 5) return 6;
  // Keep p^e within 5^6.
  unsigned e = 0;
  std::uint64_t v = 1;
  while (v * p <= 15625) {
    v *= p;
    ++e;
  }
  return std::max(e, 1u);
}

ClosureVerdict sharp_frobenius_membership(const SparsePolynomial& z, const Ideal& I, const PairSpec& pair,
                                          const ClosureOptions& options) {
  return sharp_frobenius_membership(z, I, pair, 1, default_e_max(pair.ring->characteristic()), options);
}

ClosureVerdict sharp_frobenius_membership(const SparsePolynomial& z, const Ideal& I, const PairSpec& pair,
                                          unsigned e_lo, unsigned e_hi, const ClosureOptions& options) {
  check_rings(z, I, pair);
  if (e_lo > e_hi) throw DomainError("empty e range");
  ClosureVerdict v;
  v.e_lo = e_lo;
  v.e_hi = e_hi;
  if (options.short_circuit_members && membership(z, ideal_sum(I, pair.I))) {
    v.outcome = ClosureOutcome::trivially_in;
    v.explanation = "z lies in I";
    return v;
  }
  const bool principal = principal_modulo(pair.a_preimage, pair.I);
  std::optional<unsigned> cert;
  for (unsigned e = e_lo; e <= e_hi; ++e) {
    v.trace.push_back(witness_step(z, I, pair, SparsePolynomial::constant(pair.ring, 1), e));
    const auto& s = v.trace.back();
    if (!s.contained) {
      v.failed.push_back(e);
      continue;
    }
    if (!cert && principal && e > 0 && (pair.t * ExactRational(BigInt(s.q) - 1)).is_integer()) cert = e;
  }
  if (cert) {
    v.outcome = ClosureOutcome::certified_in;
    v.certified_e = *cert;
    v.certificate = "principal a, t(p^e-1) integral, containment at e";
    v.explanation = "containment at e = " + std::to_string(*cert) +
                    " with t(p^e-1) an integer and a principal propagates to every larger e";
  } else if (v.failed.empty()) {
    v.outcome = ClosureOutcome::bounded_in;
    v.explanation = "containment holds for e = " + std::to_string(e_lo) + ".." + std::to_string(e_hi) +
                    " but no certificate applies; evidence only";
  } else {
    v.outcome = ClosureOutcome::failed_at;
    v.explanation = "containment fails at the listed e; diagnostic only, since membership needs e >> 0";
  }
  return v;
}

WitnessTrace tight_closure_witness_check(const SparsePolynomial& z, const Ideal& I, const PairSpec& pair,
                                         const SparsePolynomial& c, unsigned e_max) {
  check_rings(z, I, pair);
  require_same_ring(c.ring(), pair.ring);
  if (c.is_zero()) throw DomainError("the witness c must be nonzero");
  WitnessTrace w;
  for (unsigned e = 0; e <= e_max; ++e) {
    w.trace.push_back(witness_step(z, I, pair, c, e));
    w.holds = w.holds && w.trace.back().contained;
  }
  return w;
}

ConsistencyReport sharp_multiplier_check(const SparsePolynomial& c, const PairSpec& pair, const Ideal& tau,
                                         const std::vector<std::pair<Ideal, SparsePolynomial>>& instances,
                                         unsigned e_max) {
  ConsistencyReport r;
  r.name = "sharp test multiplier containment";
  r.applicable = membership(c, ideal_sum(tau, pair.I));
  if (!r.applicable) return r;
  for (std::size_t k = 0; k < instances.size(); ++k) {
    const auto& [I, z] = instances[k];
    check_rings(z, I, pair);
    if (!membership(z, ideal_sum(I, pair.I))) throw DomainError("instance " + std::to_string(k) + ": z is not in I");
    for (unsigned e = 0; e <= e_max; ++e) {
      ++r.checked;
      if (!witness_step(z, I, pair, c, e).contained) {
        r.violations.push_back("instance " + std::to_string(k) + " fails at e = " + std::to_string(e));
      }
    }
  }
  return r;
}

ConsistencyReport power_into_closure_check(const SparsePolynomial& z, const Ideal& I, const PairSpec& pair,
                                           const SparsePolynomial& c, std::uint64_t q, unsigned d_max) {
  ConsistencyReport r;
  r.name = "power into closure";
  const std::uint32_t p = pair.ring->characteristic();
  if (!is_power_of(q, p)) throw DomainError(std::to_string(q) + " is not a power of the characteristic");
  unsigned e_q = 0;
  for (std::uint64_t v = 1; v < q; v *= p) ++e_q;
  r.applicable = tight_closure_witness_check(z, I, pair, c, e_q + d_max).holds;
  if (!r.applicable) return r;

  const BigInt Nq = sharp_exponent(pair.t, q);
  const SparsePolynomial zq = frobenius_image(z, q);
  const Ideal Iq = bracket_power(I, q);
  auto gens = pair_power_generators(pair, to_u64(Nq, "threshold exponent"));
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const SparsePolynomial g = poly_mul(gens[k], zq);
    for (unsigned d = 0; d <= d_max; ++d) {
      ++r.checked;
      const std::uint64_t pd = prime_power(p, d);
      const BigInt Nd = sharp_exponent(pair.t, pd);
      if (!multiples_inside(pair, Nd, poly_mul(c, frobenius_image(g, pd)), frobenius_target(Iq, pair, pd))) {
        r.violations.push_back("generator " + std::to_string(k) + " fails at d = " + std::to_string(d));
      }
    }
  }
  return r;
}

}  // namespace fpure
