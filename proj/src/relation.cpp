#include <algorithm>
#include <cmath>

#include "gf/errors.hpp"
#include "gf/exactnum.hpp"

namespace gf
{

Real relation_residual(const std::vector<BigInt> &coefficients, const Complex &z)
{
    const Precision prec = z.precision();
    Complex acc(prec);
    for (std::size_t k = coefficients.size(); k-- > 0;) {
        acc *= z;
        acc += Complex(Real(coefficients[k], prec));
    }
    return abs(acc);
}

namespace
{

// Divides out the content and makes the top nonzero coefficient positive;
// trailing (top-degree) zeros are trimmed.
std::vector<BigInt> normalize(std::vector<BigInt> c)
{
    while (!c.empty() && c.back() == 0) {
        c.pop_back();
    }
    BigInt g = 0;
    for (const auto &x : c) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    }
    if (g == 0) {
        return c;
    }
    if (c.back() < 0) {
        g = -g;
    }
    for (auto &x : c) {
        x /= g;
    }
    return c;
}

BigInt height(const std::vector<BigInt> &c)
{
    BigInt h = 0;
    for (const auto &x : c) {
        if (abs(x) > h) {
            h = abs(x);
        }
    }
    return h;
}

double log10_big(const BigInt &x)
{
    if (x == 0) {
        return -INFINITY;
    }
    long e = 0;
    double m = mpz_get_d_2exp(&e, x.get_mpz_t());
    return std::log10(std::fabs(m)) + static_cast<double>(e) * std::log10(2.0);
}

// log10 of 2^-bits * sum |c_i| |z|^i.
double rounding_floor(const std::vector<BigInt> &c, const Complex &z)
{
    const Precision p = z.precision();
    const Real az = abs(z);
    Real acc(p);
    for (std::size_t k = c.size(); k-- > 0;) {
        acc = acc * az + Real(BigInt(abs(c[k])), p);
    }
    return ldexp(acc, -p.bits).log10_abs();
}

} // namespace

RelationSearch find_integer_relation(const Complex &z, int max_degree, Precision prec)
{
    if (max_degree < 1) {
        throw DomainError("find_integer_relation: max_degree must be >= 1");
    }
    if (prec.bits < 64) {
        throw DomainError("find_integer_relation: precision must be >= 64 bits");
    }
    const Complex zp = z.with_precision(min(z.precision(), prec));
    const long digits = prec.decimal_digits();
    const double residual_digits = static_cast<double>(digits) / 2.0;
    const double height_digits = static_cast<double>(digits) / 4.0;
    const bool real_input = zp.is_real();
    const int constraints = real_input ? 1 : 2;

    // Powers z^0..z^max scaled by 2^bits and rounded.
    std::vector<BigInt> re_cols, im_cols;
    {
        Complex power(Real(1L, zp.precision()));
        for (int i = 0; i <= max_degree; ++i) {
            re_cols.push_back(ldexp(power.real(), prec.bits).round());
            im_cols.push_back(ldexp(power.imag(), prec.bits).round());
            power *= zp;
        }
    }

    RelationSearch out;
    for (int n = 1; n <= max_degree; ++n) {
        const std::size_t rows = static_cast<std::size_t>(n) + 1;
        IntMatrix basis(rows, std::vector<BigInt>(rows + (real_input ? 1 : 2), BigInt(0)));
        for (std::size_t i = 0; i < rows; ++i) {
            basis[i][i] = 1;
            basis[i][rows] = re_cols[i];
            if (!real_input) {
                basis[i][rows + 1] = im_cols[i];
            }
        }
        IntMatrix reduced = lll_reduce(std::move(basis));

        // The best candidate is the reduced vector with the smallest residual
        // among those passing the height bound.
        std::optional<RelationAttempt> best;
        for (const auto &v : reduced) {
            std::vector<BigInt> coeffs = normalize(std::vector<BigInt>(v.begin(), v.begin() + static_cast<long>(rows)));
            if (coeffs.size() < 2) {
                continue;
            }
            Real residual = relation_residual(coeffs, zp);
            BigInt h = height(coeffs);
            const double lh = log10_big(h);
            // A residual below the rounding level of z carries no information.
            const double lr = std::max(residual.log10_abs(), rounding_floor(coeffs, zp));
            std::string reason;
            bool ok = true;
            if (!(lr < -residual_digits)) {
                ok = false;
                reason = "residual above 10^-" + std::to_string(static_cast<long>(residual_digits));
            } else if (!(lh < height_digits)) {
                ok = false;
                reason = "coefficient height above 10^" + std::to_string(static_cast<long>(height_digits));
            } else {
                const double k = static_cast<double>(coeffs.size());
                const double expected = (k - constraints) / constraints * lh + height_digits;
                if (-lr < expected) {
                    ok = false;
                    reason = "residual not significant for its height";
                }
            }
            RelationAttempt attempt{n, std::move(coeffs), std::move(residual), ok, ok ? "accepted" : reason};
            bool better = !best || (attempt.accepted && !best->accepted) ||
                          (attempt.accepted == best->accepted && attempt.residual < best->residual);
            if (better) {
                best = std::move(attempt);
            }
        }
        if (!best) {
            out.attempts.push_back(RelationAttempt{n, {}, Real(prec), false, "no candidate"});
            continue;
        }
        out.attempts.push_back(*best);
        if (best->accepted) {
            out.relation = IntegerRelation{best->candidate, best->residual, max_degree, prec};
            break;
        }
    }
    return out;
}

IntegerRelation find_integer_relation(const BigRat &z, Precision prec)
{
    return IntegerRelation{{-z.get_num(), z.get_den()}, Real(prec), 1, prec};
}

} // namespace gf
