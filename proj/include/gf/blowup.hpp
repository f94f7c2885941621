#ifndef GF_BLOWUP_HPP
#define GF_BLOWUP_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gf/exactnum.hpp"

namespace gf
{

// --- univariate polynomials over Q ----------------------------------------------

/// Dense polynomial over Q, ascending coefficients, no trailing zeros.
class QPoly
{
public:
    QPoly() = default;
    explicit QPoly(std::vector<BigRat> coeffs);
    static QPoly constant(const BigRat &c);
    /// x - r
    static QPoly linear_root(const BigRat &r);

    int degree() const
    {
        return static_cast<int>(m_c.size()) - 1;
    }
    bool is_zero() const
    {
        return m_c.empty();
    }
    const std::vector<BigRat> &coeffs() const
    {
        return m_c;
    }
    BigRat coeff(int i) const;
    BigRat lc() const
    {
        return m_c.empty() ? BigRat(0) : m_c.back();
    }

    BigRat operator()(const BigRat &x) const;
    QPoly derivative() const;
    QPoly monic() const;

    QPoly operator-() const;
    friend QPoly operator+(const QPoly &a, const QPoly &b);
    friend QPoly operator-(const QPoly &a, const QPoly &b);
    friend QPoly operator*(const QPoly &a, const QPoly &b);
    friend std::pair<QPoly, QPoly> divmod(const QPoly &a, const QPoly &b);
    friend QPoly operator/(const QPoly &a, const QPoly &b)
    {
        return divmod(a, b).first;
    }
    friend QPoly operator%(const QPoly &a, const QPoly &b)
    {
        return divmod(a, b).second;
    }
    friend bool operator==(const QPoly &, const QPoly &) = default;

    std::string to_string(const std::string &var = "x") const;

private:
    void trim();
    std::vector<BigRat> m_c;
};

/// Monic gcd (zero if both are zero).
QPoly gcd(const QPoly &a, const QPoly &b);
/// f / gcd(f, f'), monic.
QPoly squarefree_part(const QPoly &f);
/// Distinct rational roots, ascending.
std::vector<BigRat> rational_roots(const QPoly &f);
/// Number of distinct real roots in (a, b].
std::size_t count_real_roots(const QPoly &f, const BigRat &a, const BigRat &b);
/// The fraction with the smallest denominator in [lo, hi].
BigRat simplest_rational_between(BigRat lo, BigRat hi);

// --- bivariate polynomials over Q ---------------------------------------------------

/// Sparse polynomial in x, y; keys are (x-degree, y-degree).
class BiPoly
{
public:
    using Key = std::pair<int, int>;

    BiPoly() = default;
    static BiPoly monomial(const BigRat &c, int i, int j);
    static BiPoly constant(const BigRat &c)
    {
        return monomial(c, 0, 0);
    }

    bool is_zero() const
    {
        return m_terms.empty();
    }
    const std::map<Key, BigRat> &terms() const
    {
        return m_terms;
    }
    BigRat coeff(int i, int j) const;
    int total_degree() const;
    int degree_x() const;
    int degree_y() const;
    /// Lowest total degree of a term (-1 for zero).
    int lowest_degree() const;

    void add_term(const BigRat &c, int i, int j);

    BiPoly operator-() const;
    friend BiPoly operator+(const BiPoly &a, const BiPoly &b);
    friend BiPoly operator-(const BiPoly &a, const BiPoly &b);
    friend BiPoly operator*(const BiPoly &a, const BiPoly &b);
    friend bool operator==(const BiPoly &, const BiPoly &) = default;

    BiPoly dx() const;
    BiPoly dy() const;
    BigRat operator()(const BigRat &x, const BigRat &y) const;
    /// f(x + a, y + b)
    BiPoly translate(const BigRat &a, const BigRat &b) const;
    /// f(x0, y) as a polynomial in y.
    QPoly at_x(const BigRat &x0) const;
    /// f(x, y0) as a polynomial in x.
    QPoly at_y(const BigRat &y0) const;
    /// Coefficients of y^0..y^deg_y, each a polynomial in x.
    std::vector<QPoly> y_coefficients() const;
    static BiPoly from_y_coefficients(const std::vector<QPoly> &c);

    /// Same polynomial with integer coefficients of content 1 and a positive
    /// leading term in the canonical order.
    BiPoly primitive() const;

    /// Canonical text: terms by total degree descending, then x-degree descending.
    std::string to_string() const;

private:
    std::map<Key, BigRat> m_terms;
};

/// Resultant with respect to y; a polynomial in x.
QPoly resultant_y(const BiPoly &a, const BiPoly &b);

// --- plane curves ------------------------------------------------------------------

struct PlaneCurve {
    BiPoly f;
    std::optional<std::uint32_t> p; // reduction prime attached to reports

    std::string to_string() const
    {
        return f.to_string();
    }
};

/// Rejects the zero polynomial and non-squarefree input.
PlaneCurve make_curve(BiPoly f, std::optional<std::uint32_t> p = std::nullopt);

/// Grammar: expr := ['+'|'-'] term (('+'|'-') term)*; term := coeff? monomial?
/// with coeff := integer ['/' integer], monomial := [x['^'nat]] [y['^'nat]].
/// An optional '*' may separate factors. Whitespace is ignored.
PlaneCurve parse_curve(const std::string &text, std::optional<std::uint32_t> p = std::nullopt);

bool is_squarefree(const BiPoly &f);

struct Point {
    BigRat x, y;
    friend bool operator==(const Point &, const Point &) = default;
    friend bool operator<(const Point &a, const Point &b)
    {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    }
    std::string to_string() const;
};

/// Singular points whose coordinates are not both rational: x is a root of
/// x_poly and, for such x, y is a root of y_poly (coefficients in Q[x]/(x_poly)).
struct NonRationalPoints {
    QPoly x_poly;
    std::vector<QPoly> y_poly; // ascending in y, coefficients reduced mod x_poly
    int degree_bound;          // deg x_poly * deg_y y_poly
    std::string to_string() const;
};

struct SingularLocus {
    std::vector<Point> rational; // lexicographic order
    std::vector<NonRationalPoints> non_rational;
    bool empty() const
    {
        return rational.empty() && non_rational.empty();
    }
};

struct SingularOptions {
    /// Bound on the degree of the squarefree eliminant.
    int max_eliminant_degree = 12;
};

/// Common zeros of f, f_x, f_y in the affine plane.
SingularLocus singular_points(const PlaneCurve &c, const SingularOptions &opts = {});

/// Lowest total degree of f translated to pt; DomainError if pt is off the curve.
int multiplicity(const PlaneCurve &c, const Point &pt);

struct BlowUpStep {
    std::string chart;   // path of the chart holding the center, e.g. "affine/1/2"
    Point center;        // in that chart's coordinates
    int multiplicity;
    PlaneCurve before;   // the curve in which the center was blown up
    PlaneCurve chart1;   // f(x, x y) / x^m, exceptional divisor x = 0
    PlaneCurve chart2;   // f(x y, y) / y^m, exceptional divisor y = 0
    // Remaining delta invariant (sum of m(m-1)/2 over this and all later centers).
    long delta_before = 0;
    long delta_after = 0;
    // Sum of m(m-1)/2 over the singular points currently known (pending plus this one).
    long proxy_before = 0;
    long proxy_after = 0;
};

/// Blows up a singular point: translate to the origin, substitute both charts
/// and divide by the exceptional coordinate to the multiplicity.
BlowUpStep blow_up(const PlaneCurve &c, const Point &pt);

enum class ResolutionStatus {
    Resolved,
    BudgetExhausted,
    Unsupported, // non-rational singular points remain
};

std::string to_string(ResolutionStatus s);

struct ChartCertificate {
    std::string chart;
    PlaneCurve curve;
    std::string locus; // which part of the chart was searched
    bool smooth;
};

struct ResolutionReport {
    PlaneCurve curve;
    std::vector<BlowUpStep> steps;
    std::size_t count = 0;
    ResolutionStatus status = ResolutionStatus::Resolved;
    std::vector<ChartCertificate> certificates;
    std::vector<NonRationalPoints> unsupported;
    /// Sum of (m - 1) over the singular points of the input curve.
    std::size_t multiplicity_prediction = 0;
    /// tower_report(p, count) when a prime is attached.
    std::vector<BigInt> tower;
    std::optional<BigInt> field_size;
    std::string diagnostic;
};

struct ResolveOptions {
    std::size_t max_steps = 64;
    /// Also search the two patches at infinity of the projective closure.
    bool include_infinity = false;
    SingularOptions singular{};
};

ResolutionReport resolve(const PlaneCurve &c, const ResolveOptions &opts = {});

/// [p, p^2, ..., p^count]; DomainError for composite p.
std::vector<BigInt> tower_report(const BigInt &p, long count);

} // namespace gf

#endif
