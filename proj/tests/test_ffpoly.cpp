#include <doctest.h>

#include "gf/errors.hpp"
#include "gf/ffpoly.hpp"
#include "oracles.hpp"

using namespace gf;

TEST_CASE("field construction")
{
    const FqConfig f4 = FqConfig::make(2, 2);
    CHECK(f4.q() == 4);
    CHECK(f4.modulus_string() == "a^2 + a + 1");
    const FqConfig f9 = FqConfig::make(3, 2);
    CHECK(f9.q() == 9);
    CHECK(f9.modulus_string() == "a^2 + 1");
    CHECK_THROWS_AS(FqConfig::with_modulus(2, {1, 0, 1}), DomainError); // a^2 + 1 = (a + 1)^2
}

TEST_CASE("field axioms on small fields")
{
    for (const FqConfig &f : {FqConfig::prime(5), FqConfig::make(2, 3), FqConfig::make(3, 2)}) {
        const auto elems = enumerate_field(f);
        CHECK(elems.size() == f.q_small());
        for (const auto &x : elems) {
            CHECK(x.pow(f.q()) == x);
            if (!x.is_zero()) {
                CHECK(x * x.inverse() == FqElement::one(f));
            }
            CHECK(FqElement::from_index(f, x.index()) == x);
        }
    }
}

TEST_CASE("residue counts match brute force")
{
    const FqConfig f3 = FqConfig::prime(3);
    for (int d = 1; d <= 3; ++d) {
        for (const auto &g : oracle::monic_polys(f3, d)) {
            CHECK(residue_count(g) == oracle::brute_residue_count(g));
        }
    }
    const FqConfig f2 = FqConfig::prime(2);
    CHECK(residue_count(parse_fqpoly("T^2+T+1", f2)) == 4);
}

TEST_CASE("division and gcd")
{
    const FqConfig f = FqConfig::prime(7);
    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
        const FqPoly a = FqPoly::random(f, 6, rng);
        const FqPoly b = FqPoly::random(f, 3, rng, true);
        const auto [q, r] = a.divmod(b);
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());
        const auto eg = extended_gcd(a, b);
        CHECK(eg.s * a + eg.t * b == eg.g);
        CHECK((a % eg.g).is_zero());
    }
}

TEST_CASE("irreducibility matches trial division")
{
    for (const FqConfig &f : {FqConfig::prime(2), FqConfig::prime(3), FqConfig::make(2, 2)}) {
        for (int d = 1; d <= 4; ++d) {
            for (const auto &g : oracle::monic_polys(f, d)) {
                CHECK(is_irreducible(g) == oracle::brute_irreducible(g));
            }
        }
    }
}

TEST_CASE("factorization reassembles the input")
{
    const FqConfig f = FqConfig::make(3, 2);
    std::mt19937_64 rng(11);
    for (int i = 0; i < 20; ++i) {
        const FqPoly a = FqPoly::random(f, 7, rng, true);
        FqPoly prod = a.one_like();
        for (const auto &fac : factor(a)) {
            CHECK(is_irreducible(fac.poly));
            CHECK(fac.poly.is_monic());
            prod *= fac.poly.pow(static_cast<std::uint64_t>(fac.multiplicity));
        }
        CHECK(prod == a);
    }
}

TEST_CASE("roots are exactly the zeros")
{
    const FqConfig f = FqConfig::make(2, 3);
    std::mt19937_64 rng(3);
    for (int i = 0; i < 20; ++i) {
        const FqPoly a = FqPoly::random(f, 5, rng, true);
        const auto rs = roots(a);
        std::size_t brute = 0;
        for (const auto &x : enumerate_field(f)) {
            brute += a(x).is_zero() ? 1 : 0;
        }
        CHECK(rs.size() == brute);
        for (const auto &r : rs) {
            CHECK(a(r).is_zero());
        }
    }
}

TEST_CASE("extensions embed the base field")
{
    const FqConfig f4 = FqConfig::make(2, 2);
    const Extension e = extend(f4, 3);
    CHECK(e.field.q() == 64);
    for (const auto &x : enumerate_field(f4)) {
        for (const auto &y : enumerate_field(f4)) {
            CHECK(e.embedding(x * y) == e.embedding(x) * e.embedding(y));
            CHECK(e.embedding(x + y) == e.embedding(x) + e.embedding(y));
        }
    }
}

TEST_CASE("additive roots form an F_p-space")
{
    const FqConfig f = FqConfig::make(2, 4);
    // x^4 + x: roots are F_4 inside F_16.
    const std::vector<FqElement> c = {FqElement::one(f), FqElement::zero(f), FqElement::one(f)};
    const auto rs = additive_roots(c, 2, f);
    CHECK(rs.size() == 4);
}

TEST_CASE("parsing")
{
    const FqConfig f = FqConfig::make(3, 2);
    const FqPoly g = parse_fqpoly("(a+1)*T^2 + a*T + 2", f);
    CHECK(g.degree() == 2);
    CHECK(parse_fqpoly(g.to_string(), f) == g);
    CHECK_THROWS_AS(parse_fqpoly("T^^2", f), SyntaxError);
    try {
        parse_fqpoly("T + $", f);
        FAIL("expected a syntax error");
    } catch (const SyntaxError &e) {
        CHECK(e.offset() == 4);
    }
}

TEST_CASE("documented factorization and extension examples")
{
    const FqConfig f2 = FqConfig::prime(2);
    const auto fac = factor(parse_fqpoly("T^2 + T", f2));
    REQUIRE(fac.size() == 2);
    CHECK(fac[0].poly.to_string() == "T");
    CHECK(fac[1].poly.to_string() == "T + 1");
    CHECK(factor(parse_fqpoly("1", f2)).empty());
    const FqConfig f3 = FqConfig::prime(3);
    const auto irr = factor(parse_fqpoly("T^2 + 1", f3));
    REQUIRE(irr.size() == 1);
    CHECK(irr[0].poly == parse_fqpoly("T^2 + 1", f3));
    CHECK(residue_count(parse_fqpoly("2", f3)) == 1);
    CHECK(residue_count(parse_fqpoly("T^2 + 1", f3)) == oracle::brute_residue_count(parse_fqpoly("T^2 + 1", f3)));
    CHECK_THROWS_AS(residue_count(FqPoly(f3)), DomainError);

    CHECK(extend(f2, 1).field.q() == 2);
    const Extension e4 = extend(f2, 2);
    for (const auto &x : enumerate_field(f2)) {
        const FqElement y = e4.embedding(x);
        CHECK(y * y == y);
    }
    CHECK(enumerate_field(extend(f3, 2).field).size() == 9);
}

TEST_CASE("residue counts are multiplicative")
{
    const FqConfig f = FqConfig::make(2, 2);
    std::mt19937_64 rng(5);
    for (int i = 0; i < 20; ++i) {
        const FqPoly g = FqPoly::random(f, 2, rng, true);
        const FqPoly h = FqPoly::random(f, 3, rng, true);
        CHECK(residue_count(g * h) == residue_count(g) * residue_count(h));
    }
}
