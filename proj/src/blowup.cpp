#include "gf/blowup.hpp"

#include <algorithm>

#include "gf/errors.hpp"

namespace gf
{

std::string Point::to_string() const
{
    return "(" + x.get_str() + ", " + y.get_str() + ")";
}

std::string NonRationalPoints::to_string() const
{
    std::string ys = BiPoly::from_y_coefficients(y_poly).to_string();
    return "x root of " + x_poly.to_string("x") + ", y root of " + ys;
}

std::string to_string(ResolutionStatus s)
{
    switch (s) {
    case ResolutionStatus::Resolved:
        return "resolved";
    case ResolutionStatus::BudgetExhausted:
        return "budget_exhausted";
    case ResolutionStatus::Unsupported:
        return "unsupported_points";
    }
    return "unknown";
}

// --- squarefree test --------------------------------------------------------------

namespace
{

// gcd of the y-coefficients, a polynomial in x.
QPoly x_content(const BiPoly &f)
{
    QPoly g;
    for (const auto &c : f.y_coefficients()) {
        g = gcd(g, c);
    }
    return g;
}

BiPoly divide_by_x_poly(const BiPoly &f, const QPoly &c)
{
    std::vector<QPoly> ys = f.y_coefficients();
    for (auto &p : ys) {
        p = p / c;
    }
    return BiPoly::from_y_coefficients(ys);
}

} // namespace

bool is_squarefree(const BiPoly &f)
{
    if (f.is_zero()) {
        return false;
    }
    const QPoly cont = x_content(f);
    if (cont.degree() >= 1 && squarefree_part(cont).degree() != cont.degree()) {
        return false;
    }
    const BiPoly g = cont.degree() >= 1 ? divide_by_x_poly(f, cont) : f;
    if (g.degree_y() < 1) {
        return true;
    }
    return !resultant_y(g, g.dy()).is_zero();
}

PlaneCurve make_curve(BiPoly f, std::optional<std::uint32_t> p)
{
    if (f.is_zero()) {
        throw DomainError("curve: the zero polynomial does not define a curve");
    }
    if (f.total_degree() < 1) {
        throw DomainError("curve: a nonzero constant does not define a curve");
    }
    if (!is_squarefree(f)) {
        throw DomainError("curve: " + f.to_string() + " is not squarefree");
    }
    return PlaneCurve{std::move(f), p};
}

// --- singular points -----------------------------------------------------------------

namespace
{

// Arithmetic in (Q[x]/(m))[y]: polynomials in y with coefficients reduced mod m.
using YPoly = std::vector<QPoly>;

void trim(YPoly &a)
{
    while (!a.empty() && a.back().is_zero()) {
        a.pop_back();
    }
}

YPoly reduce(YPoly a, const QPoly &m)
{
    for (auto &c : a) {
        c = c % m;
    }
    trim(a);
    return a;
}

// s with s * a = 1 mod m, for gcd(a, m) = 1.
QPoly inverse_mod(const QPoly &a, const QPoly &m)
{
    QPoly r0 = m, r1 = a % m;
    QPoly s0, s1 = QPoly::constant(1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        QPoly s = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    // r0 is a nonzero constant.
    return (s0 * QPoly::constant(1 / r0.lc())) % m;
}

struct Branch {
    QPoly m;
    YPoly g;
};

// gcd over each component of Q[x]/(m), splitting m when a leading
// coefficient turns out to be a zero divisor.
std::vector<Branch> dynamic_gcd(const QPoly &m, YPoly a, YPoly b)
{
    a = reduce(std::move(a), m);
    b = reduce(std::move(b), m);
    while (true) {
        if (b.empty()) {
            if (a.empty()) {
                return {Branch{m, {}}};
            }
            const QPoly g = gcd(a.back(), m);
            if (g.degree() >= 1) {
                auto left = dynamic_gcd(g, a, b);
                auto right = dynamic_gcd(m / g, a, b);
                left.insert(left.end(), right.begin(), right.end());
                return left;
            }
            const QPoly inv = inverse_mod(a.back(), m);
            for (auto &c : a) {
                c = (c * inv) % m;
            }
            return {Branch{m, a}};
        }
        const QPoly g = gcd(b.back(), m);
        if (g.degree() >= 1) {
            auto left = dynamic_gcd(g, a, b);
            auto right = dynamic_gcd(m / g, a, b);
            left.insert(left.end(), right.begin(), right.end());
            return left;
        }
        const QPoly inv = inverse_mod(b.back(), m);
        // a mod b
        while (a.size() >= b.size()) {
            const QPoly t = (a.back() * inv) % m;
            const std::size_t shift = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i) {
                a[shift + i] = (a[shift + i] - t * b[i]) % m;
            }
            trim(a);
        }
        std::swap(a, b);
    }
}

QPoly times_linear_factors(const std::vector<BigRat> &roots)
{
    QPoly p = QPoly::constant(1);
    for (const auto &r : roots) {
        p = p * QPoly::linear_root(r);
    }
    return p;
}

YPoly constant_ypoly(const QPoly &g)
{
    YPoly out;
    for (const auto &c : g.coeffs()) {
        out.push_back(QPoly::constant(c));
    }
    return out;
}

// Singular points of f on the line x = x0 (vertical) or y = y0 (horizontal).
void singular_on_line(const BiPoly &f, const BigRat &at, bool vertical, std::vector<Point> &points,
                      std::vector<NonRationalPoints> &other)
{
    const BiPoly fx = f.dx();
    const BiPoly fy = f.dy();
    auto restrict = [&](const BiPoly &p) { return vertical ? p.at_x(at) : p.at_y(at); };
    const QPoly g0 = gcd(gcd(restrict(f), restrict(fx)), restrict(fy));
    if (g0.is_zero()) {
        throw DomainError("curve contains the line as a multiple component");
    }
    const QPoly g = squarefree_part(g0);
    if (g.degree() < 1) {
        return;
    }
    const auto roots = rational_roots(g);
    for (const auto &r : roots) {
        points.push_back(vertical ? Point{at, r} : Point{r, at});
    }
    const QPoly rest = g / times_linear_factors(roots);
    if (rest.degree() >= 1) {
        if (vertical) {
            other.push_back(NonRationalPoints{QPoly::linear_root(at), constant_ypoly(rest), rest.degree()});
        } else {
            // y = at fixed, x a root of rest.
            other.push_back(NonRationalPoints{rest, YPoly{QPoly::constant(-at), QPoly::constant(1)}, rest.degree()});
        }
    }
}

} // namespace

SingularLocus singular_points(const PlaneCurve &c, const SingularOptions &opts)
{
    const BiPoly &f = c.f;
    SingularLocus out;
    if (f.degree_x() < 1 || f.degree_y() < 1) {
        // A squarefree polynomial in one variable: parallel lines, all smooth.
        return out;
    }
    const BiPoly fx = f.dx();
    const BiPoly fy = f.dy();
    const QPoly eliminant = squarefree_part(resultant_y(f, fy));
    if (eliminant.is_zero()) {
        throw DomainError("singular_points: eliminant vanishes identically");
    }
    if (eliminant.degree() > opts.max_eliminant_degree) {
        throw DomainError("singular_points: eliminant degree " + std::to_string(eliminant.degree()) +
                          " exceeds the supported bound " + std::to_string(opts.max_eliminant_degree));
    }
    const auto xs = rational_roots(eliminant);
    for (const auto &x0 : xs) {
        singular_on_line(f, x0, true, out.rational, out.non_rational);
    }
    const QPoly rest = eliminant / times_linear_factors(xs);
    if (rest.degree() >= 1) {
        for (const auto &b1 : dynamic_gcd(rest, f.y_coefficients(), fx.y_coefficients())) {
            if (b1.g.size() < 2) {
                continue;
            }
            for (const auto &b2 : dynamic_gcd(b1.m, b1.g, fy.y_coefficients())) {
                if (b2.g.size() < 2) {
                    continue;
                }
                const int dy = static_cast<int>(b2.g.size()) - 1;
                out.non_rational.push_back(NonRationalPoints{b2.m.monic(), b2.g, b2.m.degree() * dy});
            }
        }
    }
    std::sort(out.rational.begin(), out.rational.end());
    return out;
}

int multiplicity(const PlaneCurve &c, const Point &pt)
{
    const BiPoly g = c.f.translate(pt.x, pt.y);
    if (g.coeff(0, 0) != 0) {
        throw DomainError("multiplicity: " + pt.to_string() + " is not on the curve");
    }
    return g.lowest_degree();
}

BlowUpStep blow_up(const PlaneCurve &c, const Point &pt)
{
    const int m = multiplicity(c, pt);
    if (m < 2) {
        throw DomainError("blow_up: " + pt.to_string() + " is a smooth point");
    }
    const BiPoly g = c.f.translate(pt.x, pt.y);
    BiPoly one, two;
    for (const auto &[k, v] : g.terms()) {
        const int i = k.first;
        const int j = k.second;
        // x^i (x y)^j / x^m and (x y)^i y^j / y^m
        one.add_term(v, i + j - m, j);
        two.add_term(v, i, i + j - m);
    }
    BlowUpStep step;
    step.center = pt;
    step.multiplicity = m;
    step.before = c;
    step.chart1 = PlaneCurve{std::move(one), c.p};
    step.chart2 = PlaneCurve{std::move(two), c.p};
    return step;
}

std::vector<BigInt> tower_report(const BigInt &p, long count)
{
    if (p < 2 || !is_probable_prime(p)) {
        throw DomainError("tower_report: " + p.get_str() + " is not prime");
    }
    if (count < 0) {
        throw DomainError("tower_report: count must be >= 0");
    }
    std::vector<BigInt> out;
    BigInt q = 1;
    for (long i = 0; i < count; ++i) {
        q *= p;
        out.push_back(q);
    }
    return out;
}

// --- resolution ------------------------------------------------------------------------

namespace
{

struct Pending {
    PlaneCurve curve;
    std::string chart;
    Point point;
    int m;
};

long delta_of(int m)
{
    return static_cast<long>(m) * (m - 1) / 2;
}

// F(X, Y, Z) dehomogenized on a patch at infinity.
BiPoly patch_at_infinity(const BiPoly &f, bool y_is_one)
{
    const int d = f.total_degree();
    BiPoly out;
    for (const auto &[k, v] : f.terms()) {
        const int z = d - k.first - k.second;
        if (y_is_one) {
            out.add_term(v, k.first, z); // (x, z)
        } else {
            out.add_term(v, k.second, z); // (y, z)
        }
    }
    return out;
}

} // namespace

ResolutionReport resolve(const PlaneCurve &c, const ResolveOptions &opts)
{
    ResolutionReport rep;
    rep.curve = c;

    std::vector<Pending> initial;
    const SingularLocus base = singular_points(c, opts.singular);
    for (const auto &pt : base.rational) {
        initial.push_back(Pending{c, "affine", pt, multiplicity(c, pt)});
    }
    rep.unsupported = base.non_rational;
    if (base.empty()) {
        rep.certificates.push_back(ChartCertificate{"affine", c, "affine plane", true});
    }
    if (opts.include_infinity) {
        // Patch Y = 1 covers the line at infinity except (1:0:0); patch X = 1 adds that point.
        PlaneCurve py{patch_at_infinity(c.f, true), c.p};
        std::vector<Point> pts;
        singular_on_line(py.f, BigRat(0), false, pts, rep.unsupported);
        for (const auto &pt : pts) {
            initial.push_back(Pending{py, "infinity:Y=1", pt, multiplicity(py, pt)});
        }
        PlaneCurve px{patch_at_infinity(c.f, false), c.p};
        const bool on_curve = px.f.coeff(0, 0) == 0;
        if (on_curve && multiplicity(px, Point{0, 0}) >= 2) {
            initial.push_back(Pending{px, "infinity:X=1", Point{0, 0}, multiplicity(px, Point{0, 0})});
        }
        if (pts.empty() && !(on_curve && multiplicity(px, Point{0, 0}) >= 2)) {
            rep.certificates.push_back(ChartCertificate{"infinity", py, "line at infinity", true});
        }
    }
    for (const auto &p : initial) {
        rep.multiplicity_prediction += static_cast<std::size_t>(p.m - 1);
    }

    std::vector<Pending> stack(initial.rbegin(), initial.rend());
    long proxy = 0;
    for (const auto &p : stack) {
        proxy += delta_of(p.m);
    }
    while (!stack.empty()) {
        if (rep.steps.size() >= opts.max_steps) {
            rep.status = ResolutionStatus::BudgetExhausted;
            rep.diagnostic = "stopped after " + std::to_string(opts.max_steps) + " blow-ups with " +
                             std::to_string(stack.size()) + " singular points pending";
            break;
        }
        Pending item = std::move(stack.back());
        stack.pop_back();
        BlowUpStep step = blow_up(item.curve, item.point);
        step.chart = item.chart;
        step.proxy_before = proxy;
        proxy -= delta_of(item.m);

        const std::string base_path = item.chart + "/" + item.point.to_string();
        std::vector<Pending> found;
        // Chart 1: the exceptional divisor is x = 0.
        {
            std::vector<Point> pts;
            singular_on_line(step.chart1.f, BigRat(0), true, pts, rep.unsupported);
            std::sort(pts.begin(), pts.end());
            for (const auto &pt : pts) {
                found.push_back(Pending{step.chart1, base_path + "/1", pt, multiplicity(step.chart1, pt)});
            }
            if (pts.empty()) {
                rep.certificates.push_back(ChartCertificate{base_path + "/1", step.chart1, "x = 0", true});
            }
        }
        // Chart 2 adds only its origin (the direction x = 0 of the center).
        {
            const bool on_curve = step.chart2.f.coeff(0, 0) == 0;
            const int m2 = on_curve ? multiplicity(step.chart2, Point{0, 0}) : 0;
            if (m2 >= 2) {
                found.push_back(Pending{step.chart2, base_path + "/2", Point{0, 0}, m2});
            } else {
                rep.certificates.push_back(ChartCertificate{base_path + "/2", step.chart2, "origin", true});
            }
        }
        for (const auto &p : found) {
            proxy += delta_of(p.m);
        }
        step.proxy_after = proxy;
        for (auto it = found.rbegin(); it != found.rend(); ++it) {
            stack.push_back(std::move(*it));
        }
        rep.steps.push_back(std::move(step));
    }

    // Remaining delta invariant: the m(m-1)/2 of the current and all later centers.
    long remaining = 0;
    for (auto it = rep.steps.rbegin(); it != rep.steps.rend(); ++it) {
        it->delta_after = remaining;
        remaining += delta_of(it->multiplicity);
        it->delta_before = remaining;
    }
    rep.count = rep.steps.size();
    if (rep.status != ResolutionStatus::BudgetExhausted && !rep.unsupported.empty()) {
        rep.status = ResolutionStatus::Unsupported;
        rep.diagnostic = std::to_string(rep.unsupported.size()) +
                         " group(s) of singular points with irrational coordinates were reported but not blown up";
    }
    if (c.p) {
        rep.tower = tower_report(BigInt(static_cast<unsigned long>(*c.p)), static_cast<long>(rep.count));
        rep.field_size = ipow(BigInt(static_cast<unsigned long>(*c.p)), static_cast<unsigned long>(rep.count));
    }
    if (rep.diagnostic.empty()) {
        rep.diagnostic = "resolved with " + std::to_string(rep.count) + " blow-up(s); sum of (m - 1) over the input's "
                         "singular points is " + std::to_string(rep.multiplicity_prediction);
    }
    return rep;
}

} // namespace gf
