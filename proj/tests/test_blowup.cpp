#include <doctest.h>

#include "gf/blowup.hpp"
#include "gf/errors.hpp"
#include "oracles.hpp"

using namespace gf;

namespace
{

PlaneCurve C(const std::string &s)
{
    return parse_curve(s);
}

BiPoly P(const std::string &s)
{
    return parse_curve(s).f;
}

/// f(x, x y) computed term by term.
BiPoly substitute_chart1(const BiPoly &f)
{
    BiPoly out;
    for (const auto &[ij, c] : f.terms()) {
        out.add_term(c, ij.first + ij.second, ij.second);
    }
    return out;
}

BiPoly substitute_chart2(const BiPoly &f)
{
    BiPoly out;
    for (const auto &[ij, c] : f.terms()) {
        out.add_term(c, ij.first, ij.first + ij.second);
    }
    return out;
}

} // namespace

TEST_CASE("univariate rational polynomials")
{
    const QPoly f(std::vector<BigRat>{BigRat(-2), BigRat(0), BigRat(1)}); // x^2 - 2
    CHECK(rational_roots(f).empty());
    CHECK(count_real_roots(f, BigRat(-2), BigRat(2)) == 2);
    CHECK(count_real_roots(f, BigRat(0), BigRat(2)) == 1);
    const QPoly g(std::vector<BigRat>{BigRat(-1, 4), BigRat(0), BigRat(1)}); // x^2 - 1/4
    CHECK(rational_roots(g) == std::vector<BigRat>{BigRat(-1, 2), BigRat(1, 2)});
    CHECK(simplest_rational_between(BigRat(1, 3), BigRat(1, 2)) == BigRat(1, 2));
    CHECK(simplest_rational_between(BigRat(3, 10), BigRat(2, 5)) == BigRat(1, 3));
    const QPoly sq = f * f;
    CHECK(squarefree_part(sq) == f);
}

TEST_CASE("parse and print round trip")
{
    for (const std::string s : {"y^2 - x^3 - x^2", "x^2 + y^2 - 1", "3/2xy - 7", "-x^4y^3 + 2x - 5/3", "y"}) {
        const BiPoly f = P(s);
        CHECK(P(f.to_string()) == f);
    }
    CHECK(P("y^2-x^3-x^2").to_string() == "-x^3 - x^2 + y^2");
    CHECK(P("2*x*y^2 + x").to_string() == "2xy^2 + x");
    CHECK(P(" y ^ 2 - x ^ 3 ") == P("y^2-x^3"));
}

TEST_CASE("parse errors carry offsets")
{
    auto offset_of = [](const std::string &s) -> long {
        try {
            (void)parse_curve(s);
        } catch (const SyntaxError &e) {
            return static_cast<long>(e.offset());
        }
        return -1;
    };
    CHECK(offset_of("y^^2") == 2);
    CHECK(offset_of("y^2 + + x") == 6);
    CHECK(offset_of("x/2") == 1);
    CHECK(offset_of("xx") == 1);
    CHECK(offset_of("1/0x") == 2);
    CHECK_THROWS_AS(parse_curve("y^2 - y^2"), DomainError);
    CHECK_THROWS_AS(parse_curve("(y - x)^2"), SyntaxError);
    CHECK_THROWS_AS(parse_curve("y^2 - 2xy + x^2"), DomainError); // (y - x)^2 is not squarefree
    CHECK_THROWS_AS(parse_curve("5"), DomainError);
}

TEST_CASE("resultant matches Sylvester determinants at integer points")
{
    const std::vector<std::pair<std::string, std::string>> pairs = {
        {"y^2 - x^3 - x^2", "2y"},
        {"x^2 + y^2 - 1", "x*y - 2"},
        {"y^3 - x*y + x^2", "3y^2 - x"},
        {"x*y^2 + y + x^3", "2x*y + 1"},
    };
    for (const auto &[a, b] : pairs) {
        const BiPoly f = P(a), g = P(b);
        const QPoly r = resultant_y(f, g);
        for (long x0 = -3; x0 <= 3; ++x0) {
            const auto fa = oracle::substitute_x(f, BigRat(x0));
            const auto ga = oracle::substitute_x(g, BigRat(x0));
            const BigRat expect = oracle::sylvester_resultant(fa, ga, static_cast<std::size_t>(f.degree_y()),
                                                              static_cast<std::size_t>(g.degree_y()));
            CHECK_MESSAGE(r(BigRat(x0)) == expect, a << " , " << b << " at x = " << x0);
        }
    }
}

TEST_CASE("singular points")
{
    CHECK(singular_points(C("y^2 - x^3 - x^2")).rational == std::vector<Point>{{0, 0}});
    CHECK(singular_points(C("x^2 + y^2 - 1")).empty());
    CHECK(singular_points(C("y^2 - x^4")).rational == std::vector<Point>{{0, 0}});
    const auto two = singular_points(C("y^2 - x^4 + 2x^2 - 1")); // y^2 = (x^2 - 1)^2
    CHECK(two.rational == std::vector<Point>{{-1, 0}, {1, 0}});
    const auto irr = singular_points(C("y^2 - x^4 + 4x^2 - 4")); // y^2 = (x^2 - 2)^2
    CHECK(irr.rational.empty());
    REQUIRE(irr.non_rational.size() == 1);
    CHECK(irr.non_rational[0].x_poly.to_string("x") == "x^2 - 2");
    // Every reported point really is singular.
    for (const std::string s : {"y^2 - x^3 - x^2", "y^3 - x^2", "x^3 + y^3 - 3xy", "y^2 - x^5"}) {
        const PlaneCurve c = C(s);
        for (const auto &pt : singular_points(c).rational) {
            CHECK(c.f(pt.x, pt.y) == 0);
            CHECK(c.f.dx()(pt.x, pt.y) == 0);
            CHECK(c.f.dy()(pt.x, pt.y) == 0);
        }
    }
}

TEST_CASE("multiplicity")
{
    CHECK(multiplicity(C("y^2 - x^3 - x^2"), {0, 0}) == 2);
    CHECK(multiplicity(C("x^2 + y^2 - 1"), {0, 1}) == 1);
    CHECK(multiplicity(C("y^2 - x^5"), {0, 0}) == 2);
    CHECK(multiplicity(C("x^3 - y^3 + x^4"), {0, 0}) == 3);
    CHECK_THROWS_AS(multiplicity(C("x^2 + y^2 - 1"), {0, 0}), DomainError);
}

TEST_CASE("blow-up charts")
{
    const auto node = blow_up(C("y^2 - x^2 - x^3"), {0, 0});
    CHECK(node.multiplicity == 2);
    CHECK(node.chart1.f == P("y^2 - 1 - x"));
    const auto cusp = blow_up(C("y^2 - x^3"), {0, 0});
    CHECK(cusp.chart1.f == P("y^2 - x"));
    const auto tac = blow_up(C("y^2 - x^4"), {0, 0});
    CHECK(tac.chart1.f == P("y^2 - x^2"));
    CHECK_THROWS_AS(blow_up(C("x^2 + y^2 - 1"), {0, 1}), DomainError);
}

TEST_CASE("blow-up is exact: strict transform times the exceptional factor")
{
    for (const std::string s : {"y^2 - x^2 - x^3", "y^2 - x^3", "y^2 - x^4", "x^3 + y^3 - 3xy", "y^3 - x^5 + x^4"}) {
        const PlaneCurve c = C(s);
        const auto st = blow_up(c, {0, 0});
        const int m = st.multiplicity;
        CHECK(st.chart1.f * BiPoly::monomial(1, m, 0) == substitute_chart1(c.f));
        CHECK(st.chart2.f * BiPoly::monomial(1, 0, m) == substitute_chart2(c.f));
    }
}

TEST_CASE("blow-up at a translated center")
{
    const PlaneCurve c = C("y^2 - x^4 + 2x^2 - 1");
    const auto st = blow_up(c, {1, 0});
    const BiPoly moved = c.f.translate(1, 0);
    CHECK(st.chart1.f * BiPoly::monomial(1, st.multiplicity, 0) == substitute_chart1(moved));
}

TEST_CASE("resolution counts")
{
    CHECK(resolve(C("y - x^2")).count == 0);
    CHECK(resolve(C("y^2 - x^2 - x^3")).count == 1);
    CHECK(resolve(C("y^2 - x^3")).count == 1);
    CHECK(resolve(C("y^2 - x^4")).count == 2);
    CHECK(resolve(C("y^2 - x^5")).count == 2);
    CHECK(resolve(C("y^2 - x^4 + 2x^2 - 1")).count == 2);
    const auto tac = resolve(C("y^2 - x^4"));
    CHECK(tac.status == ResolutionStatus::Resolved);
    REQUIRE(tac.steps.size() == 2);
    CHECK(tac.steps[0].delta_before == 2);
    CHECK(tac.steps[0].delta_after == 1);
    CHECK(tac.steps[1].delta_after == 0);
    ResolveOptions proj;
    proj.include_infinity = true;
    CHECK(resolve(C("y^2 - x^4"), proj).count >= 2);
}

TEST_CASE("resolution budget and unsupported points")
{
    ResolveOptions o;
    o.max_steps = 1;
    const auto r = resolve(C("y^2 - x^4"), o);
    CHECK(r.status == ResolutionStatus::BudgetExhausted);
    CHECK_FALSE(r.diagnostic.empty());
    const auto u = resolve(C("y^2 - x^4 + 4x^2 - 4"));
    CHECK(u.status == ResolutionStatus::Unsupported);
    CHECK(u.unsupported.size() == 1);
}

TEST_CASE("smooth corpus resolves in zero steps")
{
    for (const auto &s : oracle::smooth_corpus()) {
        const PlaneCurve c = C(s);
        CHECK_MESSAGE(oracle::gradient_nonzero_on_grid(c.f, 8), s);
        const auto r = resolve(c);
        CHECK_MESSAGE(r.count == 0, s);
        CHECK(r.steps.empty());
        CHECK(r.status == ResolutionStatus::Resolved);
    }
}

TEST_CASE("tower report")
{
    CHECK(tower_report(2, 1) == std::vector<BigInt>{2});
    CHECK(tower_report(3, 0).empty());
    CHECK(tower_report(5, 3) == std::vector<BigInt>{5, 25, 125});
    CHECK_THROWS_AS(tower_report(6, 1), DomainError);
}
