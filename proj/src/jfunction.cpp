#include <cmath>
#include <mutex>

#include "gf/cmfields.hpp"
#include "gf/errors.hpp"

namespace gf
{

namespace
{

std::vector<BigInt> divisor_power_sums(std::size_t count, unsigned long k)
{
    std::vector<BigInt> s(count, 0);
    for (std::size_t d = 1; d < count; ++d) {
        const BigInt dk = ipow(BigInt(static_cast<unsigned long>(d)), k);
        for (std::size_t m = d; m < count; m += d) {
            s[m] += dk;
        }
    }
    return s;
}

std::vector<BigInt> series_mul(const std::vector<BigInt> &a, const std::vector<BigInt> &b, std::size_t count)
{
    std::vector<BigInt> r(count, 0);
    for (std::size_t i = 0; i < count && i < a.size(); ++i) {
        if (a[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; i + j < count && j < b.size(); ++j) {
            r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

// sigma_3(n) for n < count, cached across calls.
const std::vector<std::uint64_t> &sigma3_table(std::size_t count)
{
    static std::mutex mu;
    static std::vector<std::uint64_t> table;
    std::lock_guard<std::mutex> lock(mu);
    if (table.size() < count) {
        table.assign(count, 0);
        for (std::uint64_t d = 1; d < count; ++d) {
            const std::uint64_t d3 = d * d * d;
            for (std::uint64_t m = d; m < count; m += d) {
                table[m] += d3;
            }
        }
    }
    return table;
}

Complex scale(const Complex &z, const Real &r)
{
    return Complex(z.real() * r, z.imag() * r);
}

std::size_t terms_for(const Real &im_tau, Precision prec)
{
    const double per_term = 2.0 * M_PI * im_tau.to_double() / std::log(2.0); // bits gained per power of q
    return static_cast<std::size_t>(std::ceil(static_cast<double>(prec.bits + 32) / per_term)) + 1;
}

} // namespace

std::vector<BigInt> e4_coefficients(std::size_t count)
{
    std::vector<BigInt> s = divisor_power_sums(count, 3);
    for (auto &c : s) {
        c *= 240;
    }
    if (count > 0) {
        s[0] = 1;
    }
    return s;
}

std::vector<BigInt> e6_coefficients(std::size_t count)
{
    std::vector<BigInt> s = divisor_power_sums(count, 5);
    for (auto &c : s) {
        c *= -504;
    }
    if (count > 0) {
        s[0] = 1;
    }
    return s;
}

std::vector<BigInt> delta_coefficients(std::size_t count)
{
    const auto e4 = e4_coefficients(count);
    const auto e6 = e6_coefficients(count);
    const auto e4c = series_mul(series_mul(e4, e4, count), e4, count);
    const auto e6s = series_mul(e6, e6, count);
    std::vector<BigInt> d(count);
    for (std::size_t i = 0; i < count; ++i) {
        d[i] = (e4c[i] - e6s[i]) / 1728;
    }
    return d;
}

std::vector<BigInt> j_series_coefficients(std::size_t count)
{
    // j = E4^3 / Delta; Delta = q * D(q) with D(0) = 1, so q j = E4^3 / D.
    const auto delta = delta_coefficients(count + 1);
    std::vector<BigInt> D(delta.begin() + 1, delta.end());
    const auto e4 = e4_coefficients(count);
    const auto num = series_mul(series_mul(e4, e4, count), e4, count);
    std::vector<BigInt> r(count);
    for (std::size_t n = 0; n < count; ++n) {
        BigInt acc = num[n];
        for (std::size_t k = 1; k <= n; ++k) {
            acc -= D[k] * r[n - k];
        }
        r[n] = acc;
    }
    return r;
}

Complex j_series_eval(const Complex &tau, Precision prec)
{
    const double im = tau.imag().to_double();
    if (!(im >= 0.2)) {
        throw DomainError("j_series_eval: Im tau must be >= 0.2");
    }
    const Precision w = prec + 16;
    const Complex t = tau.with_precision(w);
    const Real two_pi = ldexp(pi(w), 1);
    // q = exp(2 pi i tau)
    const Complex q = exp(Complex(-(two_pi * t.imag()), two_pi * t.real()));
    const std::size_t N = terms_for(tau.imag(), prec);

    // E4 = 1 + 240 sum sigma_3(n) q^n, by Horner.
    const auto &s3 = sigma3_table(N + 1);
    Complex e4(Real(0L, w), Real(0L, w));
    for (std::size_t n = N; n >= 1; --n) {
        e4 = (e4 + Complex(Real(BigInt(static_cast<unsigned long>(s3[n])), w), Real(0L, w))) * q;
    }
    e4 = scale(e4, Real(240L, w)) + Complex(Real(1L, w), Real(0L, w));

    // Delta = q * prod (1 - q^n)^24, with the product from the pentagonal series.
    Complex eta(Real(1L, w), Real(0L, w));
    for (long k = 1;; ++k) {
        const std::size_t e1 = static_cast<std::size_t>(k * (3 * k - 1) / 2);
        const std::size_t e2 = static_cast<std::size_t>(k * (3 * k + 1) / 2);
        if (e1 > N) {
            break;
        }
        Complex term = pow(q, e1);
        if (e2 <= N) {
            term += pow(q, e2);
        }
        if (k % 2 == 1) {
            eta -= term;
        } else {
            eta += term;
        }
    }
    const Complex delta = q * pow(eta, 24);
    const Complex j = e4 * e4 * e4 / delta;
    return j.with_precision(prec);
}

namespace
{

Complex reduce_to_fundamental_domain(Complex t)
{
    const Precision w = t.precision();
    for (int iter = 0; iter < 100000; ++iter) {
        const BigInt n = t.real().round();
        if (n != 0) {
            t = Complex(t.real() - Real(n, w), t.imag());
        }
        const Real norm = t.real() * t.real() + t.imag() * t.imag();
        if (norm < Real(1L, w) && !(Real(1L, w) - norm < pow2(-(w.bits - 8), w))) {
            // tau -> -1/tau = -conj(tau)/|tau|^2
            t = Complex(-(t.real()) / norm, t.imag() / norm);
            continue;
        }
        return t;
    }
    throw DomainError("j_invariant: reduction of tau did not terminate");
}

} // namespace

JValue j_invariant(const Complex &tau, Precision prec)
{
    if (!(tau.imag().sign() > 0)) {
        throw DomainError("j_invariant: tau must lie in the upper half-plane");
    }
    const Precision w = Precision{std::max(tau.precision().bits, prec.bits + 64)};
    const Complex red = reduce_to_fundamental_domain(tau.with_precision(w));
    auto result = validated_eval([&](Precision p) { return j_series_eval(red, p); }, prec);
    JValue out{std::move(result.value), 0, 0.0, std::move(result.warning)};
    out.terms = terms_for(red.imag(), prec);
    out.tail_log2 = -static_cast<double>(out.terms) * 2.0 * M_PI * red.imag().to_double() / std::log(2.0);
    return out;
}

Complex form_root(const QuadForm &f, Precision prec)
{
    const BigInt D = f.discriminant();
    if (D >= 0 || f.a <= 0) {
        throw DomainError("form_root: form " + f.to_string() + " is not positive definite");
    }
    const Real two_a(BigInt(2 * f.a), prec);
    return Complex(Real(BigInt(-f.b), prec) / two_a, sqrt(Real(BigInt(-D), prec)) / two_a);
}

ClassPolynomial hilbert_class_polynomial(std::int64_t D, std::optional<Precision> start, long max_bits)
{
    const ClassNumber cn = class_number(D);
    long bits = start ? start->bits
                      : std::max<long>(256, static_cast<long>(std::ceil(20.0 * static_cast<double>(cn.h) *
                                                                        std::sqrt(static_cast<double>(-D)))));
    while (true) {
        if (bits > max_bits) {
            throw DomainError("hilbert_class_polynomial: precision cap of " + std::to_string(max_bits) +
                              " bits reached for D = " + std::to_string(D));
        }
        const Precision prec{bits};
        // Ascending complex coefficients of prod (X - j_f).
        std::vector<Complex> poly{Complex(Real(1L, prec), Real(0L, prec))};
        for (const auto &f : cn.forms) {
            const Complex j = j_invariant(form_root(f, prec), prec).value;
            std::vector<Complex> next(poly.size() + 1, Complex(Real(0L, prec), Real(0L, prec)));
            for (std::size_t i = 0; i < poly.size(); ++i) {
                next[i + 1] += poly[i];
                next[i] -= poly[i] * j;
            }
            poly = std::move(next);
        }
        ClassPolynomial out{D, {}, cn.forms, prec, 0.0};
        for (const auto &c : poly) {
            const BigInt r = c.real().round();
            const double dist = std::max((c.real() - Real(r, prec)).to_double(), 0.0) +
                                std::max(-(c.real() - Real(r, prec)).to_double(), 0.0);
            out.max_rounding_distance = std::max({out.max_rounding_distance, dist, std::fabs(c.imag().to_double())});
            out.coefficients.push_back(r);
        }
        if (out.max_rounding_distance < 1e-10) {
            return out;
        }
        bits *= 2;
    }
}

} // namespace gf
