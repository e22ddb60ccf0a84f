#include "fpure/fpt.hpp"

#include <algorithm>
#include <set>

#include "fpure/ceil_arith.hpp"
#include "fpure/errors.hpp"

namespace fpure {

namespace {

void require_inside_maximal(const Ideal& a) {
  if (a.is_zero()) throw DomainError("nu of the zero ideal is undefined");
  if (!ideal_contains(Ideal::maximal(a.ring()), a)) {
    throw DomainError("a is not contained in m, so nu is infinite");
  }
}

std::uint64_t generator_count(const Ideal& a) { return std::max<std::size_t>(1, a.generators().size()); }

}  // namespace

std::uint64_t nu_value(const Ideal& a, std::uint64_t q) {
  require_inside_maximal(a);
  const auto& ring = a.ring();
  if (a.generators().size() == 1) return principal_nu(a.generators().front(), q);
  const std::vector<SparsePolynomial> unit{SparsePolynomial::constant(ring, 1)};
  auto escapes = [&](std::uint64_t s) {
    return find_escaping_product(a.generators(), s, unit, q).has_value();
  };
  // a^s ⊆ m^{[q]} is monotone in s and holds once s > n(q-1).
  std::uint64_t lo = 0;
  std::uint64_t hi = checked_mul(ring->nvars(), q - 1);
  while (lo < hi) {
    std::uint64_t mid = lo + (hi - lo + 1) / 2;
    if (escapes(mid)) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

NuRecord fpt_bounds(const Ideal& a, unsigned e) {
  if (e < 1) throw DomainError("e must be at least 1");
  NuRecord r;
  r.e = e;
  r.q = prime_power(a.ring()->characteristic(), e);
  r.nu = nu_value(a, r.q);
  r.lo = ExactRational(BigInt(r.nu), BigInt(r.q));
  r.hi = ExactRational(BigInt(r.nu) + generator_count(a), BigInt(r.q));
  return r;
}

std::string status_name(FptStatus s) {
  switch (s) {
    case FptStatus::exact: return "exact";
    case FptStatus::proven_lower_bound: return "proven lower bound";
    case FptStatus::interval: return "interval";
  }
  return "?";
}

std::string certificate_name(CertificateKind k) {
  return k == CertificateKind::sharp_fedder ? "sharp-fedder" : "mustata-converse";
}

FptEstimate fpt_estimate(const Ideal& a, unsigned e_max) {
  if (e_max < 1) throw DomainError("e_max must be at least 1");
  require_inside_maximal(a);
  const auto& ring = a.ring();
  const std::uint32_t p = ring->characteristic();
  FptEstimate out;
  for (unsigned e = 1; e <= e_max; ++e) {
    out.nu_table.push_back(fpt_bounds(a, e));
    const auto& r = out.nu_table.back();
    if (e == 1 || r.lo > out.lo) out.lo = r.lo;
    if (e == 1 || r.hi < out.hi) out.hi = r.hi;
  }
  if (out.lo > out.hi) throw Error("internal: nu brackets do not intersect");

  std::set<ExactRational> found;
  for (unsigned e = 1; e <= e_max && !out.candidates_capped; ++e) {
    BigInt d = big_power(p, e) - 1;
    BigInt k_lo = std::max(ceil_mul(out.lo, d), BigInt(1));
    BigInt k_hi = floor_mul(out.hi, d);
    for (BigInt k = k_lo; k <= k_hi; ++k) {
      if (found.size() >= kMaxFptCandidates) {
        out.candidates_capped = true;
        break;
      }
      found.insert(ExactRational(k, d));
    }
  }
  out.candidates = found.size();

  const bool principal = a.generators().size() == 1;
  auto nu_at = [&](unsigned e) { return out.nu_table[e - 1].nu; };
  for (auto it = found.rbegin(); it != found.rend(); ++it) {
    const ExactRational& t = *it;
    if (principal && t < ExactRational(1)) {
      auto order = denominator_order(t, p, e_max);
      if (order.status == DenominatorOrder::Status::found) {
        bool pattern = true;
        for (unsigned e = order.e; e <= e_max && pattern; e += order.e) {
          pattern = BigInt(nu_at(e)) == t * ExactRational(big_power(p, e) - 1);
        }
        if (pattern) {
          out.certificate = FptCertificate{t, order.e, CertificateKind::mustata_converse};
          out.status = FptStatus::exact;
          out.explanation = "nu(p^e) = t*(p^e - 1) at every multiple of e* = " + std::to_string(order.e) +
                            " up to " + std::to_string(e_max) +
                            " (finite check of the converse pattern, not the full theorem)";
          return out;
        }
      }
    }
    auto pair = PairSpec::make(Ideal::zero(ring), a, t);
    auto v = sharp_fedder(pair, e_max);
    if (v.outcome != PurityOutcome::proven_pure) continue;
    out.certificate = FptCertificate{t, v.witness->e, CertificateKind::sharp_fedder};
    if (t == out.hi) {
      out.status = FptStatus::exact;
      out.explanation = "sharply F-pure at t* = " + t.to_string() + " and fpt <= hi = t*";
    } else {
      out.status = FptStatus::proven_lower_bound;
      out.explanation = "sharply F-pure at t* = " + t.to_string() + ", so t* <= fpt <= " + out.hi.to_string() +
                        "; no larger candidate was proven";
    }
    return out;
  }
  out.explanation = "no candidate in [" + out.lo.to_string() + ", " + out.hi.to_string() + "] was certified";
  return out;
}

ConsistencyReport threshold_consistency(const Ideal& a, const ExactRational& t_proven,
                                        const std::vector<ExactRational>& epsilons, unsigned e_max,
                                        unsigned extra) {
  ConsistencyReport r;
  r.name = "threshold consistency";
  const auto& ring = a.ring();
  const std::uint32_t p = ring->characteristic();
  auto proven = sharp_fedder(PairSpec::make(Ideal::zero(ring), a, t_proven), e_max);
  r.applicable = proven.outcome == PurityOutcome::proven_pure;
  if (!r.applicable) return r;
  for (const auto& eps : epsilons) {
    if (!eps.is_positive() || eps > t_proven) throw DomainError("epsilon must lie in (0, t], got " + eps.to_string());
    ++r.checked;
    if (eps == t_proven) continue;  // a^0 = S
    unsigned bound = 1;
    while (eps * ExactRational(big_power(p, bound)) <= t_proven) ++bound;
    auto v = strong_fedder(PairSpec::make(Ideal::zero(ring), a, t_proven - eps), bound + extra);
    if (v.outcome != PurityOutcome::proven_pure) {
      r.violations.push_back("strong condition not proven at t - eps = " + (t_proven - eps).to_string() +
                             " up to e = " + std::to_string(bound + extra));
    }
  }
  return r;
}

}  // namespace fpure
