#include "fpure/groebner.hpp"

#include <algorithm>
#include <string>
#include <tuple>

#include "fpure/errors.hpp"

namespace fpure {

void ReductionBudget::step() {
  if (++used_ > limit_) {
    throw ResourceCapError("groebner.reduction_steps", std::to_string(limit_) + " reduction steps");
  }
}

SparsePolynomial normal_form(const SparsePolynomial& f, std::span<const SparsePolynomial> divisors,
                             ReductionBudget* budget) {
  const RingPtr& ring = f.ring();
  const auto& field = ring->field();
  for (const auto& g : divisors) require_same_ring(ring, g.ring());

  std::vector<Term> remainder;
  SparsePolynomial cur = f;
  // Irreducible leading terms are peeled off into `remainder`; batching the
  // peel avoids re-copying `cur` once per term.
  while (!cur.is_zero()) {
    auto terms = cur.terms();
    std::size_t k = 0;
    const SparsePolynomial* reducer = nullptr;
    for (; k < terms.size(); ++k) {
      for (const auto& g : divisors) {
        if (!g.is_zero() && g.leading_monomial().divides(terms[k].monomial)) {
          reducer = &g;
          break;
        }
      }
      if (reducer) break;
      remainder.push_back(terms[k]);
    }
    if (!reducer) break;
    if (budget) budget->step();
    const Term& t = terms[k];
    Coeff c = field.mul(t.coeff, field.inv(reducer->leading_coeff()));
    Monomial m = t.monomial.quotient(reducer->leading_monomial());
    cur = cur.drop_leading(k).minus_multiple(c, m, *reducer);
  }
  return SparsePolynomial::from_terms(ring, std::move(remainder));
}

namespace {

struct CriticalPair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

class Buchberger {
 public:
  Buchberger(RingPtr ring, const GroebnerLimits& limits)
      : ring_(std::move(ring)), limits_(limits), budget_(limits.max_reduction_steps) {}

  // Returns true once the ideal is known to be the unit ideal.
  bool add_input(const SparsePolynomial& f) {
    return insert(normal_form(f, active_view(), &budget_));
  }

  bool run() {
    while (!pairs_.empty()) {
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs_.size(); ++k) {
        int c = ring_->compare(pairs_[k].lcm, pairs_[best].lcm);
        if (c < 0 || (c == 0 && std::tie(pairs_[k].i, pairs_[k].j) < std::tie(pairs_[best].i, pairs_[best].j))) {
          best = k;
        }
      }
      CriticalPair pr = std::move(pairs_[best]);
      pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
      const auto& gi = polys_[pr.i];
      const auto& gj = polys_[pr.j];
      SparsePolynomial s = gi.times_term(pr.lcm.quotient(gi.leading_monomial()), 1)
                               .minus_multiple(1, pr.lcm.quotient(gj.leading_monomial()), gj);
      if (insert(normal_form(s, active_view(), &budget_))) return true;
    }
    return false;
  }

  std::vector<SparsePolynomial> reduced_basis() {
    std::vector<SparsePolynomial> g = active_view();
    std::vector<SparsePolynomial> out;
    out.reserve(g.size());
    for (std::size_t k = 0; k < g.size(); ++k) {
      std::vector<SparsePolynomial> others;
      others.reserve(g.size() - 1);
      for (std::size_t l = 0; l < g.size(); ++l) {
        if (l != k) others.push_back(g[l]);
      }
      out.push_back(normal_form(g[k], others, &budget_).monic());
    }
    std::sort(out.begin(), out.end(), [&](const SparsePolynomial& a, const SparsePolynomial& b) {
      return ring_->compare(a.leading_monomial(), b.leading_monomial()) < 0;
    });
    return out;
  }

 private:
  std::vector<SparsePolynomial> active_view() const {
    std::vector<SparsePolynomial> v;
    for (std::size_t k = 0; k < polys_.size(); ++k) {
      if (active_[k]) v.push_back(polys_[k]);
    }
    return v;
  }

  bool insert(const SparsePolynomial& reduced) {
    if (reduced.is_zero()) return false;
    if (reduced.is_nonzero_constant()) return true;
    if (polys_.size() >= limits_.max_basis) {
      throw ResourceCapError("groebner.basis_size", std::to_string(limits_.max_basis) + " basis elements");
    }
    polys_.push_back(reduced.monic());
    active_.push_back(false);
    update(polys_.size() - 1);
    return false;
  }

  // Gebauer-Moeller installation of the new element k.
  void update(std::size_t k) {
    const Monomial& lh = polys_[k].leading_monomial();
    std::vector<CriticalPair> candidates;
    for (std::size_t g = 0; g < k; ++g) {
      if (active_[g]) candidates.push_back({g, k, Monomial::lcm(polys_[g].leading_monomial(), lh)});
    }
    std::vector<CriticalPair> kept;
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      const auto& pa = candidates[a];
      bool keep = Monomial::coprime(polys_[pa.i].leading_monomial(), lh);
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < candidates.size() && keep; ++b) {
          if (candidates[b].lcm.divides(pa.lcm)) keep = false;
        }
        for (std::size_t b = 0; b < kept.size() && keep; ++b) {
          if (kept[b].lcm.divides(pa.lcm)) keep = false;
        }
      }
      if (keep) kept.push_back(pa);
    }
    std::vector<CriticalPair> next;
    for (auto& pr : pairs_) {
      bool drop = lh.divides(pr.lcm) &&
                  !(Monomial::lcm(polys_[pr.i].leading_monomial(), lh) == pr.lcm) &&
                  !(Monomial::lcm(polys_[pr.j].leading_monomial(), lh) == pr.lcm);
      if (!drop) next.push_back(std::move(pr));
    }
    for (auto& pr : kept) {
      if (!Monomial::coprime(polys_[pr.i].leading_monomial(), lh)) next.push_back(std::move(pr));
    }
    pairs_ = std::move(next);
    for (std::size_t g = 0; g < k; ++g) {
      if (active_[g] && lh.divides(polys_[g].leading_monomial())) active_[g] = false;
    }
    active_[k] = true;
  }

  RingPtr ring_;
  GroebnerLimits limits_;
  ReductionBudget budget_;
  std::vector<SparsePolynomial> polys_;
  std::vector<bool> active_;
  std::vector<CriticalPair> pairs_;
};

}  // namespace

std::vector<SparsePolynomial> reduced_groebner_basis(std::span<const SparsePolynomial> generators,
                                                     const GroebnerLimits& limits) {
  if (generators.empty()) return {};
  const RingPtr& ring = generators.front().ring();
  for (const auto& g : generators) require_same_ring(ring, g.ring());
  Buchberger bb(ring, limits);
  bool unit = false;
  for (const auto& g : generators) {
    if (bb.add_input(g)) {
      unit = true;
      break;
    }
  }
  if (!unit) unit = bb.run();
  if (unit) return {SparsePolynomial::constant(ring, 1)};
  return bb.reduced_basis();
}

std::optional<SparsePolynomial> divide_exact(const SparsePolynomial& h, const SparsePolynomial& g) {
  require_same_ring(h.ring(), g.ring());
  if (g.is_zero()) throw DomainError("division by the zero polynomial");
  const RingPtr& ring = h.ring();
  const auto& field = ring->field();
  Coeff inv_lc = field.inv(g.leading_coeff());
  std::vector<Term> quotient;
  SparsePolynomial cur = h;
  while (!cur.is_zero()) {
    const Term& t = cur.leading_term();
    if (!g.leading_monomial().divides(t.monomial)) return std::nullopt;
    Coeff c = field.mul(t.coeff, inv_lc);
    Monomial m = t.monomial.quotient(g.leading_monomial());
    quotient.push_back({m, c});
    cur = cur.minus_multiple(c, m, g);
  }
  return SparsePolynomial::from_terms(ring, std::move(quotient));
}

}  // namespace fpure
