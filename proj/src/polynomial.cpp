#include "fpure/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "fpure/errors.hpp"

namespace fpure {

Ring::Ring(PrimeField field, std::vector<std::string> variables, MonomialOrder order)
    : field_(field), variables_(std::move(variables)), order_(order) {
  if (order_ == MonomialOrder::eliminate_first && variables_.empty()) {
    throw DomainError("elimination order needs at least one variable");
  }
}

std::string Ring::to_string() const {
  std::string s = "p=" + std::to_string(characteristic()) + "; vars=";
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (i) s += ",";
    s += variables_[i];
  }
  return s;
}

RingPtr make_ring(std::uint32_t p, std::vector<std::string> variables, MonomialOrder order) {
  return std::make_shared<const Ring>(PrimeField(p), std::move(variables), order);
}

bool same_ring(const RingPtr& a, const RingPtr& b) noexcept { return a == b || (a && b && *a == *b); }

void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (!same_ring(a, b)) {
    throw DomainError("ring mismatch: '" + (a ? a->to_string() : "null") + "' vs '" +
                      (b ? b->to_string() : "null") + "'");
  }
}

namespace {

void sort_terms(const Ring& ring, std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return ring.compare(a.monomial, b.monomial) > 0; });
}

}  // namespace

SparsePolynomial SparsePolynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  const auto& field = ring->field();
  for (const auto& t : terms) {
    if (t.monomial.size() != ring->nvars()) throw DomainError("monomial length does not match ring");
  }
  sort_terms(*ring, terms);
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    Coeff c = field.reduce_unsigned(t.coeff);
    if (!out.empty() && out.back().monomial == t.monomial) {
      out.back().coeff = field.add(out.back().coeff, c);
      if (out.back().coeff == 0) out.pop_back();
    } else if (c != 0) {
      out.push_back({std::move(t.monomial), c});
    }
  }
  return SparsePolynomial(std::move(ring), std::move(out));
}

SparsePolynomial SparsePolynomial::constant(RingPtr ring, std::int64_t value) {
  Coeff c = ring->field().reduce(value);
  std::vector<Term> t;
  if (c != 0) t.push_back({Monomial(ring->nvars()), c});
  return SparsePolynomial(std::move(ring), std::move(t));
}

SparsePolynomial SparsePolynomial::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->nvars()) throw DomainError("variable index out of range");
  std::vector<std::uint64_t> e(ring->nvars(), 0);
  e[index] = 1;
  return term(std::move(ring), Monomial(std::move(e)), 1);
}

SparsePolynomial SparsePolynomial::term(RingPtr ring, Monomial m, Coeff c) {
  if (m.size() != ring->nvars()) throw DomainError("monomial length does not match ring");
  c = ring->field().reduce_unsigned(c);
  std::vector<Term> t;
  if (c != 0) t.push_back({std::move(m), c});
  return SparsePolynomial(std::move(ring), std::move(t));
}

std::uint64_t SparsePolynomial::max_exponent() const noexcept {
  std::uint64_t m = 0;
  for (const auto& t : terms_) m = std::max(m, t.monomial.max_exponent());
  return m;
}

std::uint64_t SparsePolynomial::total_degree() const noexcept {
  std::uint64_t m = 0;
  for (const auto& t : terms_) m = std::max(m, t.monomial.degree());
  return m;
}

SparsePolynomial SparsePolynomial::monic() const {
  if (is_zero() || leading_coeff() == 1) return *this;
  return scaled(ring_->field().inv(leading_coeff()));
}

SparsePolynomial SparsePolynomial::scaled(Coeff c) const {
  const auto& field = ring_->field();
  c = field.reduce_unsigned(c);
  if (c == 0) return SparsePolynomial(ring_);
  std::vector<Term> t = terms_;
  for (auto& term : t) term.coeff = field.mul(term.coeff, c);
  return SparsePolynomial(ring_, std::move(t));
}

SparsePolynomial SparsePolynomial::times_term(const Monomial& m, Coeff c) const {
  const auto& field = ring_->field();
  c = field.reduce_unsigned(c);
  if (c == 0) return SparsePolynomial(ring_);
  std::vector<Term> t;
  t.reserve(terms_.size());
  // Multiplying by a monomial preserves any monomial order.
  for (const auto& term : terms_) t.push_back({term.monomial * m, field.mul(term.coeff, c)});
  return SparsePolynomial(ring_, std::move(t));
}

SparsePolynomial SparsePolynomial::drop_leading(std::size_t k) const {
  if (k >= terms_.size()) return SparsePolynomial(ring_);
  return SparsePolynomial(ring_, std::vector<Term>(terms_.begin() + static_cast<std::ptrdiff_t>(k), terms_.end()));
}

SparsePolynomial SparsePolynomial::minus_multiple(Coeff c, const Monomial& m, const SparsePolynomial& g) const {
  require_same_ring(ring_, g.ring_);
  const auto& field = ring_->field();
  const Ring& ring = *ring_;
  Coeff negc = field.neg(field.reduce_unsigned(c));
  std::vector<Term> out;
  out.reserve(terms_.size() + g.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < g.terms_.size()) {
    if (j == g.terms_.size()) {
      out.push_back(terms_[i++]);
      continue;
    }
    Monomial gm = g.terms_[j].monomial * m;
    Coeff gc = field.mul(g.terms_[j].coeff, negc);
    int cmp = i == terms_.size() ? -1 : ring.compare(terms_[i].monomial, gm);
    if (cmp > 0) {
      out.push_back(terms_[i++]);
    } else if (cmp < 0) {
      if (gc != 0) out.push_back({std::move(gm), gc});
      ++j;
    } else {
      Coeff s = field.add(terms_[i].coeff, gc);
      if (s != 0) out.push_back({std::move(gm), s});
      ++i;
      ++j;
    }
  }
  return SparsePolynomial(ring_, std::move(out));
}

SparsePolynomial operator+(const SparsePolynomial& f, const SparsePolynomial& g) {
  require_same_ring(f.ring_, g.ring_);
  const auto& field = f.ring_->field();
  return f.minus_multiple(field.neg(1), Monomial(f.ring_->nvars()), g);
}

SparsePolynomial operator-(const SparsePolynomial& f, const SparsePolynomial& g) {
  require_same_ring(f.ring_, g.ring_);
  return f.minus_multiple(1, Monomial(f.ring_->nvars()), g);
}

SparsePolynomial operator-(const SparsePolynomial& f) { return f.scaled(f.ring_->field().neg(1)); }

SparsePolynomial operator*(const SparsePolynomial& f, const SparsePolynomial& g) { return poly_mul(f, g); }

bool operator==(const SparsePolynomial& f, const SparsePolynomial& g) {
  return same_ring(f.ring_, g.ring_) && f.terms_ == g.terms_;
}

std::string SparsePolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  const auto& vars = ring_->variables();
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) os << " + ";
    first = false;
    bool wrote = false;
    if (t.coeff != 1 || t.monomial.is_one()) {
      os << t.coeff;
      wrote = true;
    }
    for (std::size_t i = 0; i < vars.size(); ++i) {
      std::uint64_t e = t.monomial[i];
      if (e == 0) continue;
      if (wrote) os << '*';
      os << vars[i];
      if (e > 1) os << '^' << e;
      wrote = true;
    }
  }
  return os.str();
}

SparsePolynomial poly_mul(const SparsePolynomial& f, const SparsePolynomial& g) {
  require_same_ring(f.ring(), g.ring());
  const RingPtr& ring = f.ring();
  if (f.is_zero() || g.is_zero()) return SparsePolynomial(ring);
  if (f.is_term()) return g.times_term(f.leading_monomial(), f.leading_coeff());
  if (g.is_term()) return f.times_term(g.leading_monomial(), g.leading_coeff());
  if (f.size() > kMaxProductTerms / g.size()) {
    throw ResourceCapError("poly_mul.terms", std::to_string(f.size()) + " x " + std::to_string(g.size()) +
                                                 " term pairs");
  }
  const auto& field = ring->field();
  std::unordered_map<Monomial, Coeff, MonomialHash> acc;
  acc.reserve(f.size() * g.size());
  for (const auto& a : f.terms()) {
    for (const auto& b : g.terms()) {
      auto [it, inserted] = acc.try_emplace(a.monomial * b.monomial, 0);
      it->second = field.add(it->second, field.mul(a.coeff, b.coeff));
    }
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) terms.push_back({m, c});
  }
  return SparsePolynomial::from_terms(ring, std::move(terms));
}

bool is_power_of(std::uint64_t q, std::uint32_t p) noexcept {
  if (q == 0 || p < 2) return false;
  while (q % p == 0) q /= p;
  return q == 1;
}

std::uint64_t prime_power(std::uint32_t p, unsigned e) { return checked_pow(p, e); }

SparsePolynomial frobenius_image(const SparsePolynomial& f, std::uint64_t q) {
  const std::uint32_t p = f.ring()->characteristic();
  if (!is_power_of(q, p)) throw DomainError(std::to_string(q) + " is not a power of " + std::to_string(p));
  if (q == 1 || f.is_zero()) return f;
  std::vector<Term> terms;
  terms.reserve(f.size());
  // c^q = c on F_p, and scaling exponents preserves both supported orders.
  for (const auto& t : f.terms()) terms.push_back({t.monomial.scaled(q), t.coeff});
  return SparsePolynomial::from_terms(f.ring(), std::move(terms));
}

namespace {

SparsePolynomial small_pow(const SparsePolynomial& f, std::uint64_t s) {
  SparsePolynomial acc = SparsePolynomial::constant(f.ring(), 1);
  SparsePolynomial base = f;
  while (s > 0) {
    if (s & 1) acc = poly_mul(acc, base);
    s >>= 1;
    if (s > 0) base = poly_mul(base, base);
  }
  return acc;
}

}  // namespace

SparsePolynomial poly_pow(const SparsePolynomial& f, std::uint64_t s) {
  const RingPtr& ring = f.ring();
  if (s == 0) return SparsePolynomial::constant(ring, 1);
  if (f.is_zero() || s == 1) return f;
  if (f.is_term()) {
    const auto& t = f.leading_term();
    return SparsePolynomial::term(ring, t.monomial.scaled(s), ring->field().pow(t.coeff, s));
  }
  const std::uint32_t p = ring->characteristic();
  std::vector<std::uint64_t> digits;
  for (std::uint64_t r = s; r > 0; r /= p) digits.push_back(r % p);
  // Horner in Frobenius: f^s = (f^{s div p})^p * f^{s mod p}.
  SparsePolynomial acc = SparsePolynomial::constant(ring, 1);
  for (std::size_t i = digits.size(); i-- > 0;) {
    acc = frobenius_image(acc, p);
    if (digits[i] != 0) acc = poly_mul(acc, small_pow(f, digits[i]));
  }
  return acc;
}

}  // namespace fpure
