#include "fpure/ideal.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <unordered_set>

#include "fpure/errors.hpp"

namespace fpure {

std::vector<Monomial> minimalize_monomials(const Ring& ring, std::vector<Monomial> ms) {
  std::sort(ms.begin(), ms.end(), [&](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return ring.compare(a, b) < 0;
  });
  ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
  std::vector<Monomial> kept;
  for (auto& m : ms) {
    bool redundant = false;
    for (const auto& k : kept) {
      if (k.divides(m)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) kept.push_back(std::move(m));
  }
  return kept;
}

Ideal::Ideal(RingPtr ring, std::vector<SparsePolynomial> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<BasisCache>()) {
  std::vector<SparsePolynomial> gens;
  bool all_terms = true;
  for (auto& g : generators) {
    require_same_ring(ring_, g.ring());
    if (g.is_zero()) continue;
    if (g.is_nonzero_constant()) {
      generators_ = {SparsePolynomial::constant(ring_, 1)};
      monomial_ = true;
      return;
    }
    all_terms = all_terms && g.is_term();
    gens.push_back(std::move(g));
  }
  if (all_terms) {
    std::vector<Monomial> ms;
    ms.reserve(gens.size());
    for (const auto& g : gens) ms.push_back(g.leading_monomial());
    for (auto& m : minimalize_monomials(*ring_, std::move(ms))) {
      generators_.push_back(SparsePolynomial::term(ring_, std::move(m), 1));
    }
    monomial_ = true;
    return;
  }
  monomial_ = false;
  for (auto& g : gens) {
    SparsePolynomial m = g.monic();
    if (std::find(generators_.begin(), generators_.end(), m) == generators_.end()) {
      generators_.push_back(std::move(m));
    }
  }
}

Ideal Ideal::zero(RingPtr ring) { return Ideal(std::move(ring), {}); }

Ideal Ideal::unit(RingPtr ring) {
  auto one = SparsePolynomial::constant(ring, 1);
  return Ideal(std::move(ring), {one});
}

Ideal Ideal::maximal(RingPtr ring) {
  std::vector<SparsePolynomial> gens;
  for (std::size_t i = 0; i < ring->nvars(); ++i) gens.push_back(SparsePolynomial::variable(ring, i));
  return Ideal(std::move(ring), std::move(gens));
}

Ideal Ideal::principal(const SparsePolynomial& f) { return Ideal(f.ring(), {f}); }

bool Ideal::is_unit() const {
  if (generators_.empty()) return false;
  if (generators_.size() == 1 && generators_[0].is_nonzero_constant()) return true;
  if (monomial_) return false;
  const auto& gb = groebner_basis();
  return gb.size() == 1 && gb[0].is_nonzero_constant();
}

const std::vector<SparsePolynomial>& Ideal::groebner_basis() const {
  std::call_once(cache_->once, [this] {
    // Minimal monomial generators already form a reduced basis.
    cache_->basis = monomial_ ? generators_ : reduced_groebner_basis(generators_);
    cache_->ready = true;
  });
  return cache_->basis;
}

std::string Ideal::to_string() const {
  if (generators_.empty()) return "(0)";
  std::string s = "(";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) s += ", ";
    s += generators_[i].to_string();
  }
  return s + ")";
}

Ideal bracket_power(const Ideal& I, std::uint64_t q) {
  std::vector<SparsePolynomial> gens;
  gens.reserve(I.generators().size());
  for (const auto& g : I.generators()) gens.push_back(frobenius_image(g, q));
  if (!is_power_of(q, I.ring()->characteristic())) {
    throw DomainError(std::to_string(q) + " is not a power of the characteristic");
  }
  return Ideal(I.ring(), std::move(gens));
}

const Term* term_outside_frobenius_maximal(const SparsePolynomial& f, std::uint64_t q) {
  for (const auto& t : f.terms()) {
    if (t.monomial.max_exponent() < q) return &t;
  }
  return nullptr;
}

bool membership(const SparsePolynomial& g, const Ideal& I) {
  require_same_ring(g.ring(), I.ring());
  if (g.is_zero()) return true;
  if (I.is_zero()) return false;
  if (I.is_monomial()) {
    for (const auto& t : g.terms()) {
      bool hit = false;
      for (const auto& m : I.generators()) {
        if (m.leading_monomial().divides(t.monomial)) {
          hit = true;
          break;
        }
      }
      if (!hit) return false;
    }
    return true;
  }
  ReductionBudget budget(GroebnerLimits{}.max_reduction_steps);
  return normal_form(g, I.groebner_basis(), &budget).is_zero();
}

bool ideal_contains(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring());
  for (const auto& g : J.generators()) {
    if (!membership(g, I)) return false;
  }
  return true;
}

bool ideal_equal(const Ideal& a, const Ideal& b) { return ideal_contains(a, b) && ideal_contains(b, a); }

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<SparsePolynomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), std::move(gens));
}

namespace {

void check_cap(std::size_t raw, std::size_t cap, const char* what) {
  if (raw > cap) {
    throw ResourceCapError("ideal_power.raw_products",
                           std::string(what) + " needs " + std::to_string(raw) + " raw products (cap " +
                               std::to_string(cap) + ")");
  }
}

// Monomial generators times monomial generators, deduplicated and minimalised.
std::vector<Monomial> monomial_products(const Ring& ring, const std::vector<SparsePolynomial>& a,
                                        const std::vector<SparsePolynomial>& b) {
  std::unordered_set<Monomial, MonomialHash> seen;
  std::vector<Monomial> out;
  for (const auto& x : a) {
    for (const auto& y : b) {
      Monomial m = x.leading_monomial() * y.leading_monomial();
      if (seen.insert(m).second) out.push_back(std::move(m));
    }
  }
  return minimalize_monomials(ring, std::move(out));
}

// Keeps the products that are new: exact repeats are dropped, then anything
// reducing to zero by the generators kept so far (which lies in their ideal).
class PrunedSet {
 public:
  void offer(SparsePolynomial prod) {
    prod = prod.monic();
    for (const auto& k : kept_) {
      if (k == prod) return;
    }
    if (!normal_form(prod, kept_, &budget_).is_zero()) kept_.push_back(std::move(prod));
  }
  std::vector<SparsePolynomial> take() { return std::move(kept_); }

 private:
  std::vector<SparsePolynomial> kept_;
  ReductionBudget budget_{GroebnerLimits{}.max_reduction_steps};
};

std::vector<SparsePolynomial> pruned_products(const std::vector<SparsePolynomial>& a,
                                              const std::vector<SparsePolynomial>& b) {
  PrunedSet out;
  for (const auto& x : a) {
    for (const auto& y : b) out.offer(poly_mul(x, y));
  }
  return out.take();
}

// C(n + k - 1, k - 1), the number of exponent vectors of length k summing to
// n, saturating at `limit + 1`.
std::size_t multiset_count(std::uint64_t n, std::size_t k, std::size_t limit) {
  if (k == 0) return n == 0 ? 1 : 0;
  // Iteratively C(n + j, j) for j = 1..k-1.
  unsigned __int128 c = 1;
  for (std::size_t j = 1; j < k; ++j) {
    c = c * (n + j) / j;
    if (c > limit) return limit + 1;
  }
  return static_cast<std::size_t>(c);
}

// All products g_0^{k_0} ... g_{l-1}^{k_{l-1}} with sum k = N.
std::vector<SparsePolynomial> power_products(const std::vector<SparsePolynomial>& gens, std::uint64_t N) {
  const RingPtr& ring = gens.front().ring();
  const std::size_t l = gens.size();
  std::vector<std::vector<SparsePolynomial>> pw(l);
  for (std::size_t i = 0; i < l; ++i) {
    pw[i].push_back(SparsePolynomial::constant(ring, 1));
    for (std::uint64_t k = 1; k <= N; ++k) pw[i].push_back(poly_mul(pw[i].back(), gens[i]));
  }
  PrunedSet out;
  auto walk = [&](auto&& self, std::size_t i, std::uint64_t left, const SparsePolynomial& partial) -> void {
    if (i + 1 == l) {
      out.offer(poly_mul(partial, pw[i][left]));
      return;
    }
    for (std::uint64_t k = left + 1; k-- > 0;) self(self, i + 1, left - k, poly_mul(partial, pw[i][k]));
  };
  walk(walk, 0, N, SparsePolynomial::constant(ring, 1));
  return out.take();
}

Ideal product_of(const Ideal& a, const Ideal& b, std::size_t cap, const char* what) {
  const RingPtr& ring = a.ring();
  if (a.is_zero() || b.is_zero()) return Ideal::zero(ring);
  check_cap(a.generators().size() * b.generators().size(), cap, what);
  if (a.is_monomial() && b.is_monomial()) {
    std::vector<SparsePolynomial> gens;
    for (auto& m : monomial_products(*ring, a.generators(), b.generators())) {
      gens.push_back(SparsePolynomial::term(ring, std::move(m)));
    }
    return Ideal(ring, std::move(gens));
  }
  return Ideal(ring, pruned_products(a.generators(), b.generators()));
}

// Polynomial ring with an extra leading variable under an order eliminating it.
RingPtr elimination_ring(const Ring& ring) {
  std::vector<std::string> vars{"_t"};
  vars.insert(vars.end(), ring.variables().begin(), ring.variables().end());
  return make_ring(ring.characteristic(), std::move(vars), MonomialOrder::eliminate_first);
}

SparsePolynomial lift(const SparsePolynomial& f, const RingPtr& aux, std::uint64_t t_exp) {
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    std::vector<std::uint64_t> e{t_exp};
    e.insert(e.end(), t.monomial.exponents().begin(), t.monomial.exponents().end());
    terms.push_back({Monomial(std::move(e)), t.coeff});
  }
  return SparsePolynomial::from_terms(aux, std::move(terms));
}

SparsePolynomial project(const SparsePolynomial& f, const RingPtr& ring) {
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    auto e = t.monomial.exponents();
    terms.push_back({Monomial(std::vector<std::uint64_t>(e.begin() + 1, e.end())), t.coeff});
  }
  return SparsePolynomial::from_terms(ring, std::move(terms));
}

// a ∩ b = (t*a + (1-t)*b) ∩ S.
Ideal intersect_by_elimination(const Ideal& a, const Ideal& b) {
  const RingPtr& ring = a.ring();
  RingPtr aux = elimination_ring(*ring);
  std::vector<SparsePolynomial> gens;
  for (const auto& g : a.generators()) gens.push_back(lift(g, aux, 1));
  for (const auto& g : b.generators()) gens.push_back(lift(g, aux, 0) - lift(g, aux, 1));
  std::vector<SparsePolynomial> out;
  for (const auto& g : reduced_groebner_basis(gens)) {
    if (g.leading_monomial()[0] == 0) out.push_back(project(g, ring));
  }
  return Ideal(ring, std::move(out));
}

Ideal monomial_intersection(const Ideal& a, const Ideal& b) {
  const RingPtr& ring = a.ring();
  std::vector<Monomial> ms;
  for (const auto& x : a.generators()) {
    for (const auto& y : b.generators()) ms.push_back(Monomial::lcm(x.leading_monomial(), y.leading_monomial()));
  }
  std::vector<SparsePolynomial> gens;
  for (auto& m : minimalize_monomials(*ring, std::move(ms))) gens.push_back(SparsePolynomial::term(ring, m));
  return Ideal(ring, std::move(gens));
}

// (J : (g)) = (J ∩ (g)) / g.
Ideal colon_element(const Ideal& J, const SparsePolynomial& g, ColonStrategy strategy) {
  const RingPtr& ring = J.ring();
  if (strategy == ColonStrategy::automatic) {
    if (membership(g, J)) return Ideal::unit(ring);
    if (J.is_principal()) {
      // S is a domain: (h*g) : g = (h).
      if (auto quotient = divide_exact(J.generators().front(), g)) return Ideal::principal(*quotient);
    }
  }
  Ideal both = intersect_by_elimination(J, Ideal::principal(g));
  std::vector<SparsePolynomial> gens;
  for (const auto& h : both.generators()) {
    auto quotient = divide_exact(h, g);
    if (!quotient) throw Error("internal: element of J ∩ (g) not divisible by g");
    gens.push_back(std::move(*quotient));
  }
  return Ideal(ring, std::move(gens));
}

}  // namespace

Ideal ideal_product(const Ideal& a, const Ideal& b, std::size_t cap) {
  require_same_ring(a.ring(), b.ring());
  return product_of(a, b, cap, "ideal product");
}

Ideal ideal_intersection(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  if (a.is_zero() || b.is_zero()) return Ideal::zero(a.ring());
  if (a.is_monomial() && b.is_monomial()) return monomial_intersection(a, b);
  if (a.is_unit()) return b;
  if (b.is_unit()) return a;
  return intersect_by_elimination(a, b);
}

Ideal colon(const Ideal& J, const Ideal& I, ColonStrategy strategy) {
  require_same_ring(J.ring(), I.ring());
  const RingPtr& ring = J.ring();
  if (I.is_zero()) return Ideal::unit(ring);
  if (strategy == ColonStrategy::automatic) {
    if (J.is_unit()) return Ideal::unit(ring);
    if (J.is_zero()) return Ideal::zero(ring);
    if (J.is_monomial() && I.is_monomial()) {
      // (m_i) : n = (m_i / gcd(m_i, n)), intersected over the generators n of I.
      std::optional<Ideal> acc;
      for (const auto& n : I.generators()) {
        std::vector<SparsePolynomial> gens;
        for (const auto& m : J.generators()) {
          const Monomial& mm = m.leading_monomial();
          gens.push_back(SparsePolynomial::term(ring, mm.quotient(Monomial::gcd(mm, n.leading_monomial()))));
        }
        Ideal part(ring, std::move(gens));
        acc = acc ? monomial_intersection(*acc, part) : part;
      }
      return *acc;
    }
  } else if (J.is_zero()) {
    return Ideal::zero(ring);
  }
  std::optional<Ideal> acc;
  for (const auto& g : I.generators()) {
    Ideal part = colon_element(J, g, strategy);
    if (!acc) {
      acc = std::move(part);
    } else if (strategy == ColonStrategy::elimination) {
      acc = intersect_by_elimination(*acc, part);
    } else {
      acc = ideal_intersection(*acc, part);
    }
  }
  return *acc;
}

Ideal ideal_power(const Ideal& a, std::uint64_t N, std::size_t cap) {
  const RingPtr& ring = a.ring();
  if (N == 0) return Ideal::unit(ring);
  if (a.is_zero()) return Ideal::zero(ring);
  if (N == 1) return a;
  if (a.generators().size() == 1) {
    if (a.generators()[0].is_nonzero_constant()) return a;
    return Ideal::principal(poly_pow(a.generators()[0], N));
  }
  if (a.is_monomial()) {
    std::vector<SparsePolynomial> cur = a.generators();
    for (std::uint64_t k = 1; k < N; ++k) {
      check_cap(cur.size() * a.generators().size(), cap, "ideal power");
      std::vector<SparsePolynomial> next;
      for (auto& m : monomial_products(*ring, cur, a.generators())) {
        next.push_back(SparsePolynomial::term(ring, std::move(m)));
      }
      cur = std::move(next);
    }
    return Ideal(ring, std::move(cur));
  }
  check_cap(multiset_count(N, a.generators().size(), cap), cap, "ideal power");
  return Ideal(ring, power_products(a.generators(), N));
}

Ideal root_power(const Ideal& I, std::uint64_t q) {
  const RingPtr& ring = I.ring();
  if (!is_power_of(q, ring->characteristic())) {
    throw DomainError(std::to_string(q) + " is not a power of the characteristic");
  }
  if (q == 1) return I;
  std::vector<SparsePolynomial> gens;
  for (const auto& g : I.generators()) {
    // Remainder exponent vector mu -> terms of g_mu.
    std::map<std::vector<std::uint64_t>, std::vector<Term>> parts;
    for (const auto& t : g.terms()) {
      std::vector<std::uint64_t> mu(ring->nvars()), base(ring->nvars());
      for (std::size_t i = 0; i < ring->nvars(); ++i) {
        mu[i] = t.monomial[i] % q;
        base[i] = t.monomial[i] / q;
      }
      parts[mu].push_back({Monomial(std::move(base)), t.coeff});
    }
    for (auto& [mu, terms] : parts) gens.push_back(SparsePolynomial::from_terms(ring, std::move(terms)));
  }
  return Ideal(ring, std::move(gens));
}

Ideal groebner_basis(const Ideal& I) {
  const auto& basis = I.groebner_basis();
  Ideal out(I.ring(), basis);
  std::call_once(out.cache_->once, [&] {
    out.cache_->basis = out.monomial_ ? out.generators_ : basis;
    out.cache_->ready = true;
  });
  return out;
}

}  // namespace fpure
