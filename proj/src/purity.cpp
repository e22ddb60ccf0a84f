#include "fpure/purity.hpp"

#include <algorithm>
#include <thread>
#include <unordered_map>

#include "fpure/errors.hpp"

namespace fpure {

namespace {

bool inside_box(const Monomial& m, std::uint64_t q) {
  for (auto x : m.exponents()) {
    if (x >= q) return false;
  }
  return true;
}

// The part of f*g with every exponent < q. Only pairs of terms that stay in
// the box can contribute, since the complement is the monomial ideal m^{[q]}.
SparsePolynomial box_product(const SparsePolynomial& f, const SparsePolynomial& g, std::uint64_t q) {
  const PrimeField& F = f.ring()->field();
  std::unordered_map<Monomial, Coeff, MonomialHash> acc;
  for (const auto& a : f.terms()) {
    for (const auto& b : g.terms()) {
      bool ok = true;
      for (std::size_t i = 0; i < a.monomial.size() && ok; ++i) ok = a.monomial[i] + b.monomial[i] < q;
      if (!ok) continue;
      auto& c = acc[a.monomial * b.monomial];
      c = F.add(c, F.mul(a.coeff, b.coeff));
    }
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) terms.push_back({m, c});
  }
  return SparsePolynomial::from_terms(f.ring(), std::move(terms));
}

bool inside_maximal(const Ideal& a) {
  for (const auto& g : a.generators()) {
    for (const auto& t : g.terms()) {
      if (t.monomial.is_one()) return false;
    }
  }
  return true;
}

std::uint64_t ideal_order(const Ideal& a) {
  std::uint64_t o = kMaxExponent;
  for (const auto& g : a.generators()) o = std::min(o, order_of(g));
  return o;
}

BigInt threshold_for(const ExactRational& t, std::uint64_t q, Criterion c) {
  return ThresholdExponent{t, BigInt(q), criterion_flavor(c)}.value();
}

Ideal frobenius_colon(const Ideal& I, std::uint64_t q) {
  if (I.is_zero()) return Ideal::unit(I.ring());
  return colon(bracket_power(I, q), I);
}

PurityVerdict run_until_proof(const PairSpec& pair, unsigned e_max, unsigned workers, Criterion c) {
  if (e_max < 1) throw DomainError("e_max must be at least 1");
  PurityVerdict v;
  v.criterion = c;
  if (workers <= 1) {
    for (unsigned e = 1; e <= e_max; ++e) {
      v.trace.push_back(fedder_condition(pair, e, c));
      if (v.trace.back().holds) break;
    }
  } else {
    std::vector<std::optional<FedderStep>> steps(e_max);
    std::vector<std::exception_ptr> errors(e_max);
    {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
          for (unsigned e = 1 + w; e <= e_max; e += workers) {
            try {
              steps[e - 1] = fedder_condition(pair, e, c);
            } catch (...) {
              errors[e - 1] = std::current_exception();
            }
          }
        });
      }
    }
    // Same trace a sequential run would produce.
    for (unsigned e = 1; e <= e_max; ++e) {
      if (errors[e - 1]) std::rethrow_exception(errors[e - 1]);
      v.trace.push_back(*steps[e - 1]);
      if (v.trace.back().holds) break;
    }
  }
  if (!v.trace.empty() && v.trace.back().holds) {
    v.outcome = PurityOutcome::proven_pure;
    v.witness = v.trace.back().witness;
    v.explanation = "condition holds at e = " + std::to_string(v.trace.back().e) +
                    "; a single e suffices, so the pair is " +
                    (c == Criterion::strong ? "strongly" : "sharply") + " F-pure at the origin";
  } else {
    v.outcome = PurityOutcome::inconclusive;
    v.explanation = "condition fails for e = 1.." + std::to_string(e_max) +
                    "; it is required only for infinitely many e, so nothing is decided";
  }
  if (c == Criterion::strong) {
    v.explanation += " (extension: exponent ceil(t*q) substituted into the Fedder-type condition)";
  }
  return v;
}

}  // namespace

std::uint64_t order_of(const SparsePolynomial& f) {
  std::uint64_t o = kMaxExponent;
  for (const auto& t : f.terms()) o = std::min(o, t.monomial.degree());
  return o;
}

SparsePolynomial truncate_below(const SparsePolynomial& f, std::uint64_t q) {
  std::vector<Term> keep;
  for (const auto& t : f.terms()) {
    if (inside_box(t.monomial, q)) keep.push_back(t);
  }
  return SparsePolynomial::from_terms(f.ring(), std::move(keep));
}

PairSpec PairSpec::make(Ideal I, Ideal a_preimage, ExactRational t) {
  require_same_ring(I.ring(), a_preimage.ring());
  if (!t.is_positive()) throw DomainError("the exponent t must be positive, got " + t.to_string());
  if (!ideal_contains(a_preimage, I)) throw DomainError("a' must contain I");
  if (ideal_contains(I, a_preimage)) throw DomainError("a' is contained in I, so a is zero in R");
  PairSpec pair{I.ring(), std::move(I), std::move(a_preimage), std::move(t), {}};
  if (pair.I.is_monomial() && !pair.I.is_zero()) {
    for (const auto& g : pair.I.generators()) {
      if (!g.leading_monomial().is_squarefree()) {
        pair.notes.push_back("I is a non-squarefree monomial ideal, hence not radical; verdicts assume radical I");
        break;
      }
    }
  }
  return pair;
}

const char* criterion_name(Criterion c) noexcept {
  switch (c) {
    case Criterion::sharp: return "sharp";
    case Criterion::strong: return "strong";
    case Criterion::classic: return "classic";
  }
  return "?";
}

ThresholdFlavor criterion_flavor(Criterion c) noexcept {
  switch (c) {
    case Criterion::sharp: return ThresholdFlavor::sharp;
    case Criterion::strong: return ThresholdFlavor::strong;
    case Criterion::classic: return ThresholdFlavor::weak;
  }
  return ThresholdFlavor::sharp;
}

const char* outcome_name(PurityOutcome o) noexcept {
  switch (o) {
    case PurityOutcome::proven_pure: return "ProvenPure";
    case PurityOutcome::failed_at_all: return "FailedAtAll";
    case PurityOutcome::inconclusive: return "Inconclusive";
  }
  return "?";
}

std::optional<EscapingProduct> find_escaping_product(const std::vector<SparsePolynomial>& a_gens, std::uint64_t N,
                                                     const std::vector<SparsePolynomial>& colon_gens,
                                                     std::uint64_t q) {
  if (colon_gens.empty()) return std::nullopt;
  const RingPtr& ring = colon_gens.front().ring();
  std::vector<SparsePolynomial> c_cut;
  for (const auto& g : colon_gens) c_cut.push_back(truncate_below(g, q));
  auto escaping_colon = [&](const SparsePolynomial& a_part) -> std::optional<std::size_t> {
    for (std::size_t j = 0; j < c_cut.size(); ++j) {
      if (!c_cut[j].is_zero() && !box_product(a_part, c_cut[j], q).is_zero()) return j;
    }
    return std::nullopt;
  };
  if (a_gens.empty() || N == 0) {
    auto j = escaping_colon(SparsePolynomial::constant(ring, 1));
    if (!j) return std::nullopt;
    return EscapingProduct{std::vector<std::uint64_t>(a_gens.size(), 0), *j};
  }

  const std::size_t l = a_gens.size();
  std::uint64_t budget = 0;
  auto spend = [&] {
    if (++budget > kFedderProductCap) {
      throw ResourceCapError("fedder.products", "more than " + std::to_string(kFedderProductCap) +
                                                    " truncated products at q = " + std::to_string(q));
    }
  };
  // powers[i][k] = g_i^k mod m^{[q]}, stopping at the first zero.
  std::vector<std::vector<SparsePolynomial>> powers(l);
  std::vector<std::uint64_t> top(l);
  for (std::size_t i = 0; i < l; ++i) {
    powers[i].push_back(SparsePolynomial::constant(ring, 1));
    auto cut = truncate_below(a_gens[i], q);
    while (powers[i].size() <= N) {
      spend();
      auto next = box_product(powers[i].back(), cut, q);
      if (next.is_zero()) break;
      powers[i].push_back(std::move(next));
    }
    top[i] = powers[i].size() - 1;
  }
  std::vector<std::uint64_t> reach(l + 1, 0);
  for (std::size_t i = l; i-- > 0;) reach[i] = std::min<std::uint64_t>(N, reach[i + 1] + top[i]);
  if (reach[0] < N) return std::nullopt;

  std::vector<std::uint64_t> k(l, 0);
  std::optional<std::size_t> hit;
  // Depth-first over k_0 + ... + k_{l-1} = N, largest k_i first.
  auto search = [&](auto&& self, std::size_t i, std::uint64_t left, const SparsePolynomial& partial) -> bool {
    if (i + 1 == l) {
      if (left > top[i]) return false;
      k[i] = left;
      spend();
      auto full = box_product(partial, powers[i][left], q);
      if (full.is_zero()) return false;
      hit = escaping_colon(full);
      return hit.has_value();
    }
    const std::uint64_t hi = std::min(top[i], left);
    const std::uint64_t lo = left > reach[i + 1] ? left - reach[i + 1] : 0;
    for (std::uint64_t ki = hi + 1; ki-- > lo;) {
      k[i] = ki;
      spend();
      auto next = box_product(partial, powers[i][ki], q);
      if (next.is_zero()) continue;
      if (self(self, i + 1, left - ki, next)) return true;
    }
    return false;
  };
  if (!search(search, 0, N, SparsePolynomial::constant(ring, 1))) return std::nullopt;
  return EscapingProduct{k, *hit};
}

std::uint64_t principal_nu(const SparsePolynomial& f, std::uint64_t q) {
  if (f.is_zero()) throw DomainError("nu of the zero polynomial is undefined");
  if (order_of(f) == 0) throw DomainError("f does not vanish at the origin, so nu is infinite");
  auto cut = truncate_below(f, q);
  SparsePolynomial power = SparsePolynomial::constant(f.ring(), 1);
  std::uint64_t s = 0;
  for (;;) {
    power = box_product(power, cut, q);
    if (power.is_zero()) return s;
    ++s;
  }
}

FedderStep fedder_condition(const PairSpec& pair, unsigned e, Criterion criterion) {
  const auto& ring = pair.ring;
  FedderStep step;
  step.e = e;
  step.q = prime_power(ring->characteristic(), e);
  step.N = threshold_for(pair.t, step.q, criterion);
  const std::uint64_t q = step.q;
  const std::uint64_t N = to_u64(step.N, "threshold exponent");

  Ideal C = frobenius_colon(pair.I, q);
  const bool a_unit = pair.a_preimage.is_unit();

  // a'^N C ⊆ m^D, and m^D ⊆ m^{[q]} once D > n(q-1).
  if (!a_unit && N > 0 && inside_maximal(pair.a_preimage)) {
    BigInt D = BigInt(ideal_order(pair.a_preimage)) * N + ideal_order(C);
    if (D > BigInt(ring->nvars()) * (q - 1)) {
      step.reason = "degree bound: every element of a'^N (I^[q]:I) has order > n(q-1)";
      return step;
    }
  }

  const auto& gens = pair.a_preimage.generators();
  auto hit = find_escaping_product(a_unit ? std::vector<SparsePolynomial>{} : gens, N, C.generators(), q);

  if (hit) {
    const auto& k = hit->exponents;
    SparsePolynomial a_factor = SparsePolynomial::constant(ring, 1);
    for (std::size_t i = 0; i < k.size(); ++i) {
      if (k[i] > 0) a_factor = poly_mul(a_factor, poly_pow(gens[i], k[i]));
    }
    FedderWitness w{e, q, step.N, k, a_factor, C.generators()[hit->colon_index], SparsePolynomial(ring), Term{}};
    w.product = poly_mul(w.a_factor, w.colon_factor);
    const Term* t = term_outside_frobenius_maximal(w.product, q);
    if (!t) throw Error("internal: truncated product disagrees with full product");
    w.escaping = *t;
    step.holds = true;
    step.reason = "product of generators has a term outside m^[q]";
    step.witness = std::move(w);
    return step;
  }
  step.reason = "every generator product lies in m^[q]";
  return step;
}

bool verify_witness(const PairSpec& pair, const FedderWitness& w, Criterion criterion) {
  const auto& ring = pair.ring;
  if (w.q != prime_power(ring->characteristic(), w.e)) return false;
  if (w.N != threshold_for(pair.t, w.q, criterion)) return false;
  Ideal Iq = bracket_power(pair.I, w.q);
  for (const auto& g : pair.I.generators()) {
    if (!membership(poly_mul(w.colon_factor, g), Iq)) return false;
  }
  SparsePolynomial a = SparsePolynomial::constant(ring, 1);
  if (!pair.a_preimage.is_unit() && w.N != 0) {
    const auto& gens = pair.a_preimage.generators();
    if (w.a_exponents.size() != gens.size()) return false;
    BigInt sum = 0;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      sum += w.a_exponents[i];
      a = a * poly_pow(gens[i], w.a_exponents[i]);
    }
    if (sum != w.N) return false;
  }
  if (!(a == w.a_factor)) return false;
  if (!(poly_mul(w.a_factor, w.colon_factor) == w.product)) return false;
  for (const auto& t : w.product.terms()) {
    if (t == w.escaping) {
      for (auto x : t.monomial.exponents()) {
        if (x >= w.q) return false;
      }
      return true;
    }
  }
  return false;
}

PurityVerdict sharp_fedder(const PairSpec& pair, unsigned e_max, unsigned workers) {
  return run_until_proof(pair, e_max, workers, Criterion::sharp);
}

PurityVerdict strong_fedder(const PairSpec& pair, unsigned e_max, unsigned workers) {
  return run_until_proof(pair, e_max, workers, Criterion::strong);
}

std::optional<SparsePolynomial> principal_generator_modulo(const Ideal& a_preimage, const Ideal& I) {
  if (a_preimage.is_zero()) return SparsePolynomial(a_preimage.ring());
  if (a_preimage.is_principal()) return a_preimage.generators().front();
  for (const auto& f : a_preimage.generators()) {
    if (ideal_contains(ideal_sum(I, Ideal::principal(f)), a_preimage)) return f;
  }
  return std::nullopt;
}

bool principal_modulo(const Ideal& a_preimage, const Ideal& I) {
  return principal_generator_modulo(a_preimage, I).has_value();
}

std::vector<SparsePolynomial> pair_power_generators(const PairSpec& pair, std::uint64_t N, std::size_t cap) {
  if (N == 0 || pair.a_preimage.is_unit()) return {SparsePolynomial::constant(pair.ring, 1)};
  if (auto f = principal_generator_modulo(pair.a_preimage, pair.I)) return {poly_pow(*f, N)};
  return ideal_power(pair.a_preimage, N, cap).generators();
}

PurityVerdict classic_fpure(const PairSpec& pair, const std::vector<unsigned>& e_list) {
  if (e_list.empty()) throw DomainError("classic check needs at least one e");
  PurityVerdict v;
  v.criterion = Criterion::classic;
  std::vector<unsigned> es = e_list;
  std::sort(es.begin(), es.end());
  es.erase(std::unique(es.begin(), es.end()), es.end());
  if (es.front() < 1) throw DomainError("e must be at least 1");

  const bool a_unit = pair.a_preimage.is_unit();
  const bool principal = principal_modulo(pair.a_preimage, pair.I);
  std::size_t held = 0;
  for (unsigned e : es) {
    v.trace.push_back(fedder_condition(pair, e, Criterion::classic));
    const auto& step = v.trace.back();
    if (!step.holds) continue;
    ++held;
    if (v.witness) continue;
    const bool integral = (pair.t * ExactRational(BigInt(step.q) - 1)).is_integer();
    if (a_unit) {
      v.witness = step.witness;
      v.explanation = "a' = S and the condition holds at e = " + std::to_string(e) +
                      "; by Fedder's criterion R is F-pure at the origin";
    } else if (principal && integral) {
      v.witness = step.witness;
      v.explanation = "a is principal, t(q-1) is an integer at e = " + std::to_string(e) +
                      " so the classic and sharp conditions coincide; sharp F-purity of a principal pair "
                      "gives F-purity at the origin";
    }
  }
  if (v.witness) {
    v.outcome = PurityOutcome::proven_pure;
  } else if (held == 0) {
    v.outcome = PurityOutcome::failed_at_all;
    v.explanation = "condition fails at every listed e";
    if (a_unit) v.explanation += "; with a' = S this already shows R is not F-pure at the origin";
  } else {
    v.outcome = PurityOutcome::inconclusive;
    v.explanation = "condition holds at " + std::to_string(held) + " of " + std::to_string(es.size()) +
                    " listed e; F-purity needs every e >> 0, so nothing is decided";
  }
  return v;
}

ConsistencyReport principal_sharp_implies_classic(const PairSpec& pair, unsigned e_max) {
  ConsistencyReport r;
  r.name = "principal sharp implies classic";
  r.applicable = principal_modulo(pair.a_preimage, pair.I);
  if (!r.applicable) return r;
  auto sharp = sharp_fedder(pair, e_max);
  if (sharp.outcome != PurityOutcome::proven_pure) {
    r.applicable = false;
    return r;
  }
  for (unsigned e = 1; e <= e_max; ++e) {
    ++r.checked;
    auto step = fedder_condition(pair, e, Criterion::classic);
    if (!step.holds) r.violations.push_back("classic condition fails at e = " + std::to_string(e));
  }
  return r;
}

SingleSplit sharp_from_single_split(const SparsePolynomial& f, unsigned e) {
  if (e < 1) throw DomainError("e must be at least 1");
  const auto& ring = f.ring();
  const std::uint64_t q = prime_power(ring->characteristic(), e);
  SingleSplit out;
  if (f.is_zero() || !term_outside_frobenius_maximal(f, q)) {
    out.diagnosis = "f lies in m^[" + std::to_string(q) + "], so the map does not split";
    return out;
  }
  out.splits = true;
  out.diagnosis = "f has a term outside m^[" + std::to_string(q) + "], so the map splits";
  out.pair = PairSpec::make(Ideal::zero(ring), Ideal::principal(f), ExactRational(BigInt(1), BigInt(q - 1)));
  out.verdict = sharp_fedder(*out.pair, e);
  return out;
}

}  // namespace fpure
