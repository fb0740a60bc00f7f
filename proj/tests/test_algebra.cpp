#include <random>

#include "doctest.h"
#include "support.hpp"

using namespace syzygy;
using namespace syzygy::test;

namespace {

template <class K>
void check_polynomial_axioms(const RingPtr<K>& ring, std::uint64_t seed, int triples) {
  std::mt19937_64 rng(seed);
  for (int i = 0; i < triples; ++i) {
    const auto a = random_polynomial(rng, ring, 3, 4);
    const auto b = random_polynomial(rng, ring, 3, 4);
    const auto c = random_polynomial(rng, ring, 3, 4);
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE(a + b == b + a);
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * b == b * a);
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE((a - a).is_zero());
    REQUIRE(a + (-a) == Polynomial<K>(ring));
  }
}

template <class K>
void check_field_axioms(const K& field, std::uint64_t seed, int triples) {
  std::mt19937_64 rng(seed);
  for (int i = 0; i < triples; ++i) {
    const auto a = field.random(rng);
    const auto b = field.random(rng);
    const auto c = field.random(rng);
    REQUIRE(field.equal(field.add(field.add(a, b), c), field.add(a, field.add(b, c))));
    REQUIRE(field.equal(field.mul(field.mul(a, b), c), field.mul(a, field.mul(b, c))));
    REQUIRE(field.equal(field.mul(a, b), field.mul(b, a)));
    REQUIRE(field.equal(field.mul(a, field.add(b, c)), field.add(field.mul(a, b), field.mul(a, c))));
    REQUIRE(field.is_zero(field.add(a, field.neg(a))));
    if (!field.is_zero(a)) REQUIRE(field.is_one(field.mul(a, field.inv(a))));
  }
}

Monomial m3(int a, int b, int c) { return Monomial{a, b, c}; }

}  // namespace

TEST_SUITE("algebra") {

TEST_CASE("field axioms on random triples") {
  check_field_axioms(PrimeField(), 11, 2000);
  check_field_axioms(PrimeField(7), 12, 2000);
  check_field_axioms(RationalField(), 13, 2000);
}

TEST_CASE("polynomial ring axioms on random triples") {
  check_polynomial_axioms(prime_ring(3), 21, 1000);
  check_polynomial_axioms(make_ring(PrimeField(7), {"x", "y"}), 22, 1000);
  check_polynomial_axioms(rational_ring(3), 23, 1000);
  check_polynomial_axioms(rational_ring(2, MonomialOrder::lex), 24, 1000);
}

TEST_CASE("prime field basics") {
  const PrimeField f(7);
  CHECK(f.add(3, 4) == 0);
  CHECK(f.mul(3, 5) == 1);
  CHECK(f.inv(3) == 5);
  CHECK(f.from_int(-1) == 6);
  CHECK(f.from_rational(mpq_class(1, 2)) == 4);
  CHECK(f.to_string(6) == "-1");
  CHECK_THROWS_AS(PrimeField(8), InvalidArgumentError);
  CHECK_THROWS_AS(f.from_rational(mpq_class(1, 7)), InvalidArgumentError);
  CHECK(is_prime(32003));
  CHECK_FALSE(is_prime(32001));
}

TEST_CASE("monomial order comparisons") {
  CHECK(compare(Monomial{1, 1}, Monomial{1, 1}, MonomialOrder::grevlex) == 0);
  CHECK(compare(Monomial{2, 0}, Monomial{1, 1}, MonomialOrder::lex) > 0);
  // x*z versus y^2 in grevlex with x > y > z.
  CHECK(compare(m3(1, 0, 1), m3(0, 2, 0), MonomialOrder::grevlex) < 0);
  CHECK(compare(m3(1, 0, 1), m3(0, 2, 0), MonomialOrder::lex) > 0);
  CHECK(compare(m3(0, 0, 3), m3(1, 0, 0), MonomialOrder::grevlex) > 0);
  CHECK_THROWS_AS(compare(Monomial{1}, Monomial{1, 0}, MonomialOrder::lex), DimensionError);
}

TEST_CASE("monomial orders are total, multiplicative and well founded on random monomials") {
  std::mt19937_64 rng(5);
  for (auto order : {MonomialOrder::grevlex, MonomialOrder::lex}) {
    for (int i = 0; i < 1000; ++i) {
      const auto ms = random_monomials(rng, 3, 4, 3);
      const auto &a = ms[0], &b = ms[1], &c = ms[2];
      const auto ab = compare(a, b, order);
      REQUIRE(compare(b, a, order) == (0 <=> ab));
      REQUIRE((ab == 0) == (a == b));
      REQUIRE(compare(a * c, b * c, order) == ab);
      REQUIRE(compare(a * c, a, order) >= 0);
      if (ab < 0 && compare(b, c, order) < 0) REQUIRE(compare(a, c, order) < 0);
      if (order == MonomialOrder::grevlex && a.degree() != b.degree()) {
        REQUIRE((ab > 0) == (a.degree() > b.degree()));
      }
    }
  }
}

TEST_CASE("monomial arithmetic") {
  const Monomial a{2, 1, 0}, b{1, 3, 1};
  CHECK(lcm(a, b) == Monomial{2, 3, 1});
  CHECK((a * b) / b == a);
  CHECK(Monomial{1, 1, 0}.divides(a));
  CHECK_FALSE(a.divides(b));
  CHECK(Monomial{1, 0, 0}.coprime(Monomial{0, 2, 1}));
  CHECK(a.degree() == 3);
  CHECK(monomials_of_degree(3, 2).size() == 6);
  CHECK(monomials_of_degree(3, 2).front() == Monomial{2, 0, 0});
  CHECK(monomials_of_degree(2, 0).size() == 1);
}

TEST_CASE("polynomial arithmetic examples") {
  const auto ring = rational_ring(2);
  const auto x = Polynomial<Qq>::variable(ring, 0);
  const auto y = Polynomial<Qq>::variable(ring, 1);
  const auto one = Polynomial<Qq>::constant(ring, 1);
  CHECK((x * x + (-(x * x))).is_zero());
  CHECK((x + y) + y == x + y.scaled(2));
  CHECK((x + y) * (x - y) == x * x - y * y);
  CHECK(x * one == x);

  const auto gf7 = make_ring(PrimeField(7), {"x"});
  const auto z = Polynomial<Fp>::variable(gf7, 0);
  CHECK((z.scaled(3) + z.scaled(4)).is_zero());

  const auto r4 = make_ring(PrimeField(), {"x", "y", "z", "w"});
  const auto w = Polynomial<Fp>::variable(r4, 3);
  const auto zz = Polynomial<Fp>::variable(r4, 2);
  const auto p = (w * w) * (zz * zz);
  CHECK(p.size() == 1);
  CHECK(p.homogeneous_degree().value() == 4);
}

TEST_CASE("homogeneous degree") {
  const auto ring = make_ring(PrimeField(), {"x", "y", "z", "w"});
  CHECK(parse_polynomial("y^2 - w*z", ring).homogeneous_degree().value() == 2);
  const auto mixed = parse_polynomial("x + y^2", ring).homogeneous_degree();
  CHECK(mixed.status == HomogeneousDegree::Status::inhomogeneous);
  CHECK_FALSE(mixed.has_value());
  CHECK(Polynomial<Fp>(ring).homogeneous_degree().is_zero());
  CHECK_THROWS_AS(mixed.value(), DegreeError);
}

TEST_CASE("polynomials from different rings do not mix") {
  const auto a = Polynomial<Fp>::variable(prime_ring(2), 0);
  const auto b = Polynomial<Fp>::variable(prime_ring(3), 0);
  CHECK_THROWS_AS(a + b, RingMismatchError);
}

TEST_CASE("terms are sorted, merged and printed canonically") {
  const auto ring = make_ring(RationalField(), {"x", "y"});
  const auto p = parse_polynomial("y^2 + x*y + x^2 - x*y + 1/2*x^2", ring);
  CHECK(p.to_string() == "3/2*x^2 + y^2");
  CHECK(p.lead_monomial() == Monomial{2, 0});
  const auto lex = make_ring(RationalField(), {"x", "y"}, MonomialOrder::lex);
  CHECK(parse_polynomial("y^3 + x", lex).lead_monomial() == Monomial{1, 0});
  CHECK(parse_polynomial("y^3 + x", ring).lead_monomial() == Monomial{0, 3});
}

}  // TEST_SUITE
