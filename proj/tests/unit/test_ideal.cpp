#include <doctest.h>

#include <random>
#include <thread>

#include "fpure/errors.hpp"
#include "fpure/groebner.hpp"
#include "fpure/ideal.hpp"
#include "fpure/parser.hpp"
#include "support/oracles.hpp"

using namespace fpure;

namespace {
Ideal I(const char* gens, const RingPtr& r) { return Ideal(r, parse_poly_list(gens, r)); }
SparsePolynomial P(const char* text, const RingPtr& r) { return parse_poly(text, r); }

// Random member of I: a combination of generators with random coefficients.
SparsePolynomial random_member(std::mt19937_64& rng, const Ideal& a) {
  SparsePolynomial f(a.ring());
  for (const auto& g : a.generators()) f = f + oracle::random_poly(rng, a.ring(), 2, 2) * g;
  return f;
}
}  // namespace

TEST_SUITE("ideal-engine") {

TEST_CASE("normalisation") {
  auto r = make_ring(3, {"x", "y"});
  auto a = I("x^2*y, x, 0, 2*y^3", r);
  CHECK(a.is_monomial());
  CHECK(a.to_string() == "(x, y^3)");
  CHECK(I("0", r).to_string() == "(0)");
  CHECK(I("x, 2", r).to_string() == "(1)");
  CHECK_FALSE(I("x+y", r).is_monomial());
  CHECK(I("2*x+2*y, x+y", r).generators().size() == 1);
  CHECK_THROWS_AS(Ideal(r, {P("x", make_ring(5, {"x", "y"}))}), DomainError);
}

TEST_CASE("bracket_power examples") {
  auto r3 = make_ring(3, {"x", "y"});
  CHECK(ideal_equal(bracket_power(I("x", r3), 9), I("x^9", r3)));
  CHECK(ideal_equal(bracket_power(I("x,y", r3), 3), I("x^3,y^3", r3)));
  CHECK(bracket_power(I("x,y", r3), 3).is_monomial());
  auto r2 = make_ring(2, {"x", "y"});
  auto b = bracket_power(I("x+y, y^2", r2), 2);
  CHECK(ideal_equal(b, I("x^2+y^2, y^4", r2)));
  CHECK_THROWS_AS(bracket_power(I("x", r3), 4), DomainError);
}

TEST_CASE("colon examples") {
  auto r = make_ring(3, {"x", "y", "z"});
  CHECK(ideal_equal(colon(I("x^3", r), I("x", r)), I("x^2", r)));
  CHECK(ideal_equal(colon(I("x^2*y, y^3", r), I("y", r)), I("x^2, y^2", r)));
  auto f3 = I("(x^2-y*z)^3", r);
  auto f1 = I("x^2-y*z", r);
  CHECK(ideal_equal(colon(f3, f1), I("(x^2-y*z)^2", r)));
  CHECK(ideal_equal(colon(f3, f1, ColonStrategy::elimination), I("(x^2-y*z)^2", r)));
  CHECK(colon(I("x", r), I("x^2, y", r)).is_unit() == false);
  CHECK(colon(I("x,y", r), I("x*y", r)).is_unit());
  CHECK(colon(I("0", r), I("x", r)).is_zero());
  CHECK(ideal_equal(colon(I("x", r), I("0", r)), Ideal::unit(r)));
}

TEST_CASE("membership and containment examples") {
  auto r = make_ring(3, {"x", "y", "z"});
  CHECK_FALSE(membership(P("x^2*y*z", r), I("x^3,y^3,z^3", r)));
  CHECK(membership(P("x^5", r), I("x^3", r)));
  CHECK(membership(P("x^2+2*y^2", r), I("x+y, x-y", r)));
  CHECK(ideal_contains(I("x,y", r), I("x^2*y", r)));
  CHECK_FALSE(ideal_contains(I("x^3,y^3", r), I("x^2*y^2", r)));
  CHECK(ideal_contains(I("x+y", r), I("(x+y)^2, x*(x+y)", r)));
  CHECK_FALSE(ideal_contains(I("(x+y)^2", r), I("x+y", r)));
}

TEST_CASE("ideal_power examples") {
  auto r = make_ring(3, {"x", "y"});
  auto f = P("x^2 + x*y + 1", r);
  CHECK(ideal_equal(ideal_power(Ideal::principal(f), 4), Ideal::principal(poly_pow(f, 4))));
  CHECK(ideal_power(I("x,y", r), 2).to_string() == "(y^2, x*y, x^2)");
  CHECK(ideal_power(I("x,y", r), 4).generators().size() == 5);
  CHECK(ideal_power(I("x,y", r), 0).is_unit());
  auto g = ideal_power(I("x+y, x*y", r), 3);
  CHECK(ideal_equal(g, ideal_product(ideal_product(I("x+y, x*y", r), I("x+y, x*y", r)), I("x+y, x*y", r))));
  CHECK_THROWS_AS(ideal_power(I("x+y, x-y^2, y^3+x", r), 40, 100), ResourceCapError);
}

TEST_CASE("root_power examples") {
  auto r = make_ring(3, {"x", "y"});
  CHECK(ideal_equal(root_power(I("x^9", r), 3), I("x^3", r)));
  CHECK(ideal_equal(root_power(I("x^5", r), 3), I("x", r)));
  CHECK(root_power(I("x^2", r), 3).is_unit());
  // x^3*y + y^4 = (x^3 + y^3)*y: the y-coefficient is x + y.
  CHECK(ideal_equal(root_power(I("x^3*y + y^4", r), 3), I("x+y", r)));
}

TEST_CASE("groebner_basis examples") {
  auto r = make_ring(3, {"x", "y"});
  auto g = groebner_basis(I("x+y, x-y", r));
  CHECK(g.has_cached_basis());
  CHECK(g.to_string() == "(y, x)");
  CHECK(groebner_basis(I("x^2, x*y^3", r)).to_string() == "(x^2, x*y^3)");
  CHECK(groebner_basis(Ideal::zero(r)).is_zero());
  auto r3 = make_ring(5, {"x", "y", "z"});
  // Twisted cubic style ideal; its reduced basis has the three quadrics.
  auto tc = groebner_basis(I("x*z - y^2, y*z - x^3, z^2 - x^2*y", r3));
  for (const auto& b : tc.groebner_basis()) CHECK(b.leading_coeff() == 1);
  CHECK(ideal_equal(tc, I("x*z - y^2, y*z - x^3, z^2 - x^2*y", r3)));
}

TEST_CASE("groebner caps are enforced") {
  auto r = make_ring(7, {"x", "y", "z"});
  GroebnerLimits tiny{3, 1'000'000};
  auto gens = parse_poly_list("x^2*y - z^3 + 1, x*y^2 - x*z, y*z^2 - x^3 + y", r);
  CHECK_THROWS_AS(reduced_groebner_basis(gens, tiny), ResourceCapError);
  GroebnerLimits few_steps{10'000, 5};
  CHECK_THROWS_AS(reduced_groebner_basis(gens, few_steps), ResourceCapError);
}

TEST_CASE("the cached basis is shared between concurrent callers") {
  auto r = make_ring(5, {"x", "y", "z"});
  auto a = I("x^2 - y*z, y^2 - x*z, z^2 - x*y + 1", r);
  std::vector<std::thread> ts;
  std::vector<const std::vector<SparsePolynomial>*> seen(4);
  for (int i = 0; i < 4; ++i) ts.emplace_back([&, i] { seen[i] = &a.groebner_basis(); });
  for (auto& t : ts) t.join();
  for (int i = 1; i < 4; ++i) CHECK(seen[i] == seen[0]);
}

TEST_CASE("elements of I land in the bracket power after Frobenius") {
  std::mt19937_64 rng(31);
  for (std::uint32_t p : {2u, 3u}) {
    auto r = make_ring(p, {"x", "y", "z"});
    for (int trial = 0; trial < 15; ++trial) {
      Ideal a(r, {oracle::random_poly(rng, r, 3, 2), oracle::random_poly(rng, r, 3, 2)});
      auto b = bracket_power(a, p);
      CHECK(membership(frobenius_image(random_member(rng, a), p), b));
    }
  }
}

TEST_CASE("root of a bracket power gives the ideal back") {
  std::mt19937_64 rng(32);
  for (std::uint32_t p : {2u, 3u}) {
    auto r = make_ring(p, {"x", "y"});
    for (int trial = 0; trial < 15; ++trial) {
      Ideal a(r, {oracle::random_poly(rng, r, 3, 3), oracle::random_poly(rng, r, 2, 3)});
      for (std::uint64_t q : {std::uint64_t{p}, std::uint64_t{p} * p}) {
        auto back = root_power(bracket_power(a, q), q);
        CHECK(ideal_contains(back, a));
        CHECK(ideal_contains(a, back));
      }
    }
  }
}

TEST_CASE("Frobenius power of m agrees with the divisibility oracle") {
  std::mt19937_64 rng(33);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto r = make_ring(p, {"x", "y", "z"});
    const std::uint64_t q = static_cast<std::uint64_t>(p) * p;
    auto mq = bracket_power(Ideal::maximal(r), q);
    std::vector<std::vector<std::uint64_t>> gens;
    for (std::size_t i = 0; i < 3; ++i) {
      std::vector<std::uint64_t> e(3, 0);
      e[i] = q;
      gens.push_back(e);
    }
    for (int trial = 0; trial < 1000; ++trial) {
      auto m = oracle::random_monomial(rng, r, static_cast<int>(q + 3));
      auto e = m.leading_monomial().exponents();
      bool expected = oracle::monomial_in(gens, {e.begin(), e.end()});
      CHECK(membership(m, mq) == expected);
      CHECK(ideal_contains(mq, Ideal::principal(m)) == expected);
    }
  }
}

TEST_CASE("colon times I lies in J") {
  std::mt19937_64 rng(34);
  for (std::uint32_t p : {2u, 3u}) {
    auto r = make_ring(p, {"x", "y"});
    for (int trial = 0; trial < 12; ++trial) {
      Ideal J(r, {oracle::random_poly(rng, r, 2, 3), oracle::random_poly(rng, r, 2, 3)});
      Ideal Iq(r, {oracle::random_poly(rng, r, 2, 2)});
      auto c = colon(J, Iq);
      CHECK(ideal_contains(J, ideal_product(c, Iq)));
      if (J.is_monomial() && Iq.is_monomial()) {
        CHECK(ideal_equal(c, colon(J, Iq, ColonStrategy::elimination)));
      }
    }
  }
  auto r = make_ring(3, {"x", "y", "z"});
  auto I2 = I("x^2 - y*z, x*y", r);
  auto C = colon(bracket_power(I2, 3), I2);
  CHECK(ideal_contains(bracket_power(I2, 3), ideal_product(C, I2)));
}

TEST_CASE("root of a pure power has the closed form") {
  auto r = make_ring(3, {"x"});
  auto r2 = make_ring(2, {"x"});
  for (std::uint64_t a = 0; a <= 60; ++a) {
    for (std::uint64_t q : {2, 3, 4, 8, 9}) {
      const auto& ring = (q == 3 || q == 9) ? r : r2;
      auto got = root_power(Ideal::principal(SparsePolynomial::term(ring, Monomial(std::vector<std::uint64_t>{a}))), q);
      auto want = Ideal::principal(SparsePolynomial::term(ring, Monomial(std::vector<std::uint64_t>{a / q})));
      CHECK(ideal_equal(got, want));
    }
  }
}

}  // TEST_SUITE
