#include <algorithm>

#include "gf/cmfields.hpp"
#include "gf/errors.hpp"

namespace gf
{

bool QuadForm::is_reduced() const
{
    const BigInt ab = abs(b);
    if (!(ab <= a && a <= c)) {
        return false;
    }
    if ((ab == a || a == c) && b < 0) {
        return false;
    }
    return true;
}

bool QuadForm::is_primitive() const
{
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g == 1;
}

QuadForm QuadForm::reduced() const
{
    if (discriminant() >= 0 || a <= 0) {
        throw DomainError("reduction needs a positive definite form");
    }
    QuadForm f = *this;
    while (true) {
        // Normalize b into (-a, a].
        if (!(-f.a < f.b && f.b <= f.a)) {
            BigInt two_a = 2 * f.a;
            BigInt k;
            BigInt num = f.a - f.b;
            mpz_fdiv_q(k.get_mpz_t(), num.get_mpz_t(), two_a.get_mpz_t());
            // (a, b, c) -> (a, b + 2ak, a k^2 + b k + c)
            f.c = f.a * k * k + f.b * k + f.c;
            f.b = f.b + two_a * k;
        }
        if (f.a > f.c) {
            std::swap(f.a, f.c);
            f.b = -f.b;
            continue;
        }
        if (f.a == f.c && f.b < 0) {
            f.b = -f.b;
        }
        return f;
    }
}

std::string QuadForm::to_string() const
{
    return "(" + a.get_str() + ", " + b.get_str() + ", " + c.get_str() + ")";
}

ClassNumber class_number(std::int64_t D)
{
    if (D >= 0) {
        throw DomainError("class_number: discriminant must be negative");
    }
    const std::int64_t r = ((D % 4) + 4) % 4;
    if (r != 0 && r != 1) {
        throw DomainError("class_number: discriminant " + std::to_string(D) + " is not 0 or 1 mod 4");
    }
    ClassNumber out{D, 0, {}};
    const std::int64_t absD = -D;
    for (std::int64_t b = r; 3 * b * b <= absD; b += 2) {
        const std::int64_t ac = (b * b + absD) / 4;
        for (std::int64_t a = std::max<std::int64_t>(b, 1); a * a <= ac; ++a) {
            if (ac % a != 0) {
                continue;
            }
            const std::int64_t c = ac / a;
            for (int sign = 1; sign >= (b == 0 ? 1 : -1); sign -= 2) {
                QuadForm f{a, sign * b, c};
                if (f.is_reduced() && f.is_primitive()) {
                    out.forms.push_back(f);
                }
            }
        }
    }
    std::sort(out.forms.begin(), out.forms.end(), [](const QuadForm &x, const QuadForm &y) {
        return x.a != y.a ? x.a < y.a : x.b < y.b;
    });
    out.h = static_cast<std::int64_t>(out.forms.size());
    return out;
}

bool is_fundamental_discriminant(std::int64_t D)
{
    const std::int64_t r = ((D % 4) + 4) % 4;
    if (D == 0 || D == 1) {
        return false;
    }
    if (r == 1) {
        return is_squarefree(D);
    }
    if (r == 0) {
        const std::int64_t m = D / 4;
        const std::int64_t mr = ((m % 4) + 4) % 4;
        return (mr == 2 || mr == 3) && is_squarefree(m);
    }
    return false;
}

// --- units -------------------------------------------------------------------------

BigInt QuadraticUnit::norm() const
{
    return (x * x - BigInt(d) * y * y) / (z * z);
}

Real QuadraticUnit::value(Precision prec) const
{
    Real r = (Real(x, prec) + Real(y, prec) * sqrt(Real(static_cast<long>(d), prec))) / Real(z, prec);
    return r;
}

Real QuadraticUnit::log(Precision prec) const
{
    return gf::log(value(prec));
}

std::string QuadraticUnit::to_string() const
{
    std::string s = x.get_str();
    s += y < 0 ? " - " : " + ";
    std::string ys = abs(y) == 1 ? "" : BigInt(abs(y)).get_str() + "*";
    s += ys + "sqrt(" + std::to_string(d) + ")";
    if (z != 1) {
        s = "(" + s + ")/" + z.get_str();
    }
    return s;
}

QuadraticUnit fundamental_unit(std::int64_t d, UnitOrder order)
{
    if (d < 2) {
        throw DomainError("fundamental_unit: d must be >= 2");
    }
    if (is_perfect_square(BigInt(static_cast<long>(d)))) {
        throw DomainError("fundamental_unit: " + std::to_string(d) + " is a perfect square");
    }
    if (!is_squarefree(d)) {
        throw DomainError("fundamental_unit: " + std::to_string(d) + " is not squarefree");
    }
    const BigInt D(static_cast<long>(d));
    const bool half_integral = order == UnitOrder::Maximal && d % 4 == 1;
    if (!half_integral) {
        const ContinuedFraction cf = continued_fraction_sqrt(D);
        // The first convergent with p^2 - d q^2 = +-1 gives the fundamental unit.
        const std::size_t bound = 2 * (cf.preperiod.size() + cf.period.size()) + 2;
        for (const auto &[p, q] : convergents(cf, bound)) {
            BigInt n = p * p - D * q * q;
            if (n == 1 || n == -1) {
                return QuadraticUnit{d, p, q, 1, order};
            }
        }
    } else {
        // omega = (1 + sqrt d)/2; N(p - q omega) = p^2 - p q + q^2 (1 - d)/4.
        const ContinuedFraction cf = continued_fraction(QuadraticSurd{1, 2, D});
        const std::size_t bound = 2 * (cf.preperiod.size() + cf.period.size()) + 2;
        for (const auto &[p, q] : convergents(cf, bound)) {
            BigInt n = p * p - p * q + q * q * (1 - D) / 4;
            if (n == 1 || n == -1) {
                // p - q * conj(omega) = (2p - q + q sqrt d) / 2
                return QuadraticUnit{d, 2 * p - q, q, 2, order};
            }
        }
    }
    throw DomainError("fundamental_unit: no unit within two periods"); // unreachable
}

} // namespace gf
