#include <doctest.h>

#include <random>

#include "fpure/errors.hpp"
#include "fpure/parser.hpp"
#include "fpure/polynomial.hpp"
#include "fpure/rational.hpp"
#include "support/oracles.hpp"

using namespace fpure;

namespace {
SparsePolynomial P(const char* text, const RingPtr& r) { return parse_poly(text, r); }
}  // namespace

TEST_SUITE("algebra-core") {

TEST_CASE("prime field inverses, exhaustively up to 101") {
  for (std::uint32_t p = 2; p <= 101; ++p) {
    if (!is_prime(p)) continue;
    PrimeField f(p);
    for (Coeff a = 1; a < p; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
  }
  CHECK_THROWS_AS(PrimeField(4), DomainError);
  CHECK_THROWS_AS(PrimeField(1), DomainError);
  CHECK_THROWS_AS(PrimeField(7).inv(0), DomainError);
  CHECK(PrimeField(7).reduce(-1) == 6);
}

TEST_CASE("monomial arithmetic is checked") {
  Monomial a({kMaxExponent - 1, 0});
  Monomial b({2, 0});
  CHECK_THROWS_AS(a * b, OverflowError);
  CHECK_THROWS_AS(Monomial({kMaxExponent, 1}), OverflowError);
  CHECK_THROWS_AS(Monomial({std::uint64_t{1} << 40, 0}).scaled(std::uint64_t{1} << 30), OverflowError);
  Monomial c({2, 3});
  CHECK(Monomial({1, 1}).divides(c));
  CHECK_FALSE(Monomial({3, 0}).divides(c));
  CHECK(c.quotient(Monomial({1, 1})) == Monomial({1, 2}));
}

TEST_CASE("grevlex ordering") {
  // Degree first; ties go against the last variable.
  CHECK(compare_grevlex(Monomial({2, 0, 0}), Monomial({1, 1, 0})) > 0);
  CHECK(compare_grevlex(Monomial({1, 1, 0}), Monomial({0, 2, 0})) > 0);
  CHECK(compare_grevlex(Monomial({0, 2, 0}), Monomial({1, 0, 1})) > 0);
  CHECK(compare_grevlex(Monomial({0, 0, 3}), Monomial({1, 0, 0})) > 0);
  CHECK(compare_eliminate_first(Monomial({1, 0, 0}), Monomial({0, 5, 5})) > 0);
}

TEST_CASE("poly_mul examples") {
  auto r = make_ring(3, {"x", "y"});
  CHECK(poly_mul(P("x+y", r), P("x-y", r)) == P("x^2 + 2*y^2", r));
  auto f = P("x^2 + 2*x*y + 1", r);
  CHECK(poly_mul(f, SparsePolynomial::constant(r, 1)) == f);
  auto r2 = make_ring(2, {"x", "y"});
  auto s = P("x+y", r2);
  CHECK(poly_mul(s, s) == P("x^2+y^2", r2));
  CHECK(poly_mul(f, SparsePolynomial(r)).is_zero());
}

TEST_CASE("polynomials over different rings never combine") {
  auto r = make_ring(3, {"x", "y"});
  auto s = make_ring(5, {"x", "y"});
  auto t = make_ring(3, {"x", "z"});
  CHECK_THROWS_AS(poly_mul(P("x", r), P("x", s)), DomainError);
  CHECK_THROWS_AS(P("x", r) + P("x", t), DomainError);
  // Structurally equal rings are the same ring.
  auto r_again = make_ring(3, {"x", "y"});
  CHECK(P("x", r) + P("y", r_again) == P("x+y", r));
}

TEST_CASE("poly_pow examples") {
  auto r = make_ring(3, {"x", "y", "z"});
  auto f = P("x^2 - y*z", r);
  CHECK(poly_pow(f, 0) == SparsePolynomial::constant(r, 1));
  // (x^2 - yz)^2 = x^4 - 2x^2yz + y^2z^2 and -2 = 1 mod 3.
  CHECK(poly_pow(f, 2) == P("x^4 + x^2*y*z + y^2*z^2", r));
  CHECK(poly_pow(P("x+y", r), 3) == P("x^3+y^3", r));
  CHECK(poly_pow(P("2*x*y", r), 5) == SparsePolynomial::term(r, Monomial({5, 5, 0}), 2));  // 2^5 = 32 = 2
  CHECK_NOTHROW(poly_pow(P("x", r), kMaxExponent));
  CHECK_THROWS_AS(poly_pow(P("x*y", r), kMaxExponent), OverflowError);
  CHECK_THROWS_AS(poly_pow(P("x^2", r), kMaxExponent), OverflowError);
}

TEST_CASE("poly_pow agrees with schoolbook expansion") {
  std::mt19937_64 rng(11);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto r = make_ring(p, {"x", "y", "z"});
    for (int trial = 0; trial < 40; ++trial) {
      auto f = oracle::random_poly(rng, r, 4, 3);
      std::uint64_t s = std::uniform_int_distribution<std::uint64_t>(0, 12)(rng);
      CHECK(poly_pow(f, s) == oracle::naive_pow(f, s));
    }
  }
}

TEST_CASE("poly_pow is additive in the exponent") {
  std::mt19937_64 rng(12);
  for (std::uint32_t p : {2u, 3u, 7u}) {
    auto r = make_ring(p, {"x", "y"});
    for (int trial = 0; trial < 40; ++trial) {
      auto f = oracle::random_poly(rng, r, 4, 3);
      std::uniform_int_distribution<std::uint64_t> d(0, 20);
      std::uint64_t a = d(rng), b = d(rng);
      CHECK(poly_pow(f, a + b) == poly_mul(poly_pow(f, a), poly_pow(f, b)));
    }
  }
}

TEST_CASE("frobenius_image examples") {
  auto r = make_ring(3, {"x", "y"});
  CHECK(frobenius_image(P("x+y", r), 3) == P("x^3+y^3", r));
  CHECK(frobenius_image(P("2*x", r), 9) == P("2*x^9", r));
  CHECK(frobenius_image(P("x+y", r), 1) == P("x+y", r));
  CHECK_THROWS_AS(frobenius_image(P("x", r), 6), DomainError);
  CHECK_THROWS_AS(frobenius_image(SparsePolynomial::term(r, Monomial({std::uint64_t{1} << 61, 0})), 9),
                  OverflowError);
}

TEST_CASE("frobenius_image is a ring map and matches poly_pow") {
  std::mt19937_64 rng(13);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto r = make_ring(p, {"x", "y", "z"});
    for (int trial = 0; trial < 30; ++trial) {
      auto f = oracle::random_poly(rng, r, 5, 3);
      auto g = oracle::random_poly(rng, r, 5, 3);
      for (unsigned e = 0; e <= 2; ++e) {
        std::uint64_t q = prime_power(p, e);
        CHECK(frobenius_image(f, q) == oracle::naive_pow(f, q));
        CHECK(frobenius_image(f * g, q) == frobenius_image(f, q) * frobenius_image(g, q));
        CHECK(frobenius_image(f + g, q) == frobenius_image(f, q) + frobenius_image(g, q));
      }
    }
  }
}

TEST_CASE("exact rationals stay reduced") {
  ExactRational a(4, 6);
  CHECK(a.numerator() == 2);
  CHECK(a.denominator() == 3);
  CHECK(ExactRational(3, -9).to_string() == "-1/3");
  CHECK(ExactRational(0, 5).denominator() == 1);
  CHECK((ExactRational(1, 2) + ExactRational(1, 3)).to_string() == "5/6");
  CHECK(ExactRational(5, 6) < ExactRational(6, 7));
  CHECK(ExactRational(7, 2).ceil() == 4);
  CHECK(ExactRational(-7, 2).floor() == -4);
  CHECK_THROWS_AS(ExactRational(1, 0), DomainError);
}

}  // TEST_SUITE
