#include "fpure/test_ideal.hpp"

#include "fpure/ceil_arith.hpp"
#include "fpure/errors.hpp"

namespace fpure {

TestIdealResult test_ideal(const Ideal& a, const ExactRational& t, std::optional<unsigned> e_floor, unsigned e_cap) {
  const RingPtr& ring = a.ring();
  const std::uint32_t p = ring->characteristic();
  if (a.is_zero()) throw DomainError("a must be nonzero");
  if (!t.is_positive()) throw DomainError("the exponent t must be positive, got " + t.to_string());

  TestIdealResult out{Ideal::zero(ring), 0, 1, {}, true};
  if (e_floor) {
    out.e_floor = std::max(*e_floor, 1u);
  } else {
    auto o = denominator_order(t, p, e_cap);
    out.e_floor = o.status == DenominatorOrder::Status::found ? o.e : 1;
  }
  for (unsigned e = 1; e <= e_cap; ++e) {
    const std::uint64_t q = prime_power(p, e);
    const std::uint64_t N = to_u64(ceil_mul(t, BigInt(q)), "test ideal exponent");
    out.chain.push_back(root_power(ideal_power(a, N), q));
    const std::size_t n = out.chain.size();
    if (n >= 2 && !ideal_contains(out.chain[n - 1], out.chain[n - 2])) {
      throw Error("test ideal chain failed to ascend at e = " + std::to_string(e));
    }
    if (n >= 3 && e - 2 >= out.e_floor && ideal_equal(out.chain[n - 3], out.chain[n - 2]) &&
        ideal_equal(out.chain[n - 2], out.chain[n - 1])) {
      out.stabilized_at = e - 2;
      out.tau = out.chain[n - 3];
      return out;
    }
  }
  const std::size_t n = out.chain.size();
  std::string detail = "no stabilisation by e = " + std::to_string(e_cap);
  if (n >= 2) {
    detail += "; K_" + std::to_string(n - 1) + " = " + out.chain[n - 2].to_string() + ", K_" + std::to_string(n) +
              " = " + out.chain[n - 1].to_string();
  }
  throw ResourceCapError("test_ideal.e_cap", detail);
}

bool is_radical_monomial(const Ideal& I) {
  if (!I.is_monomial()) throw UnsupportedError("radicality is decided only for monomial ideals; use radical_probe");
  for (const auto& g : I.generators()) {
    if (!g.leading_monomial().is_squarefree()) return false;
  }
  return true;
}

ProbeReport radical_probe(const Ideal& I, const std::vector<SparsePolynomial>& probes, unsigned k_max) {
  ProbeReport r;
  if (I.is_unit()) return r;
  for (const auto& g : probes) {
    require_same_ring(g.ring(), I.ring());
    if (membership(g, I)) continue;
    SparsePolynomial power = g;
    for (unsigned k = 2; k <= k_max; ++k) {
      power = poly_mul(power, g);
      ++r.checked;
      if (membership(power, I)) {
        r.violations.push_back({g, k});
        break;
      }
    }
  }
  return r;
}

bool vassilev_containment(const Ideal& I, const Ideal& a_preimage, const ExactRational& t, const Ideal& tau_pullback,
                          std::uint64_t q) {
  require_same_ring(I.ring(), a_preimage.ring());
  require_same_ring(I.ring(), tau_pullback.ring());
  if (!ideal_contains(tau_pullback, I)) throw DomainError("the pullback of tau must contain I");
  const std::uint64_t N = to_u64(ceil_mul(t, BigInt(q) - 1), "threshold exponent");
  Ideal lhs_a = ideal_power(a_preimage, N);
  Ideal lhs_c = I.is_zero() ? Ideal::unit(I.ring()) : colon(bracket_power(I, q), I);
  Ideal rhs = tau_pullback.is_unit() ? tau_pullback : colon(bracket_power(tau_pullback, q), tau_pullback);
  if (rhs.is_unit()) return true;
  for (const auto& g : lhs_a.generators()) {
    for (const auto& c : lhs_c.generators()) {
      if (!membership(poly_mul(g, c), rhs)) return false;
    }
  }
  return true;
}

QuotientPurity quotient_fpure_check(const Ideal& tau, unsigned e_max) {
  QuotientPurity out;
  if (tau.is_unit()) {
    out.degenerate = true;
    out.note = "quotient is zero ring";
    return out;
  }
  if (e_max < 1) throw DomainError("e_max must be at least 1");
  const RingPtr& ring = tau.ring();
  if (tau.is_zero()) out.note = "quotient is the polynomial ring itself";
  std::vector<unsigned> es;
  for (unsigned e = 1; e <= e_max; ++e) es.push_back(e);
  out.verdict = classic_fpure(PairSpec::make(tau, Ideal::unit(ring), ExactRational(1)), es);
  return out;
}

}  // namespace fpure
