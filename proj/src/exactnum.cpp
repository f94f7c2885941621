#include "gf/exactnum.hpp"

#include <cmath>
#include <map>

#include "gf/errors.hpp"

namespace gf
{

BigRat make_rat(const BigInt &num, const BigInt &den)
{
    if (den == 0) {
        throw DomainError("zero denominator");
    }
    BigRat r(num, den);
    r.canonicalize();
    return r;
}

BigInt ipow(const BigInt &base, unsigned long exp)
{
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

bool is_probable_prime(const BigInt &n)
{
    return n > 1 && mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

bool is_squarefree(std::int64_t n)
{
    if (n == 0) {
        return false;
    }
    std::int64_t m = n < 0 ? -n : n;
    for (std::int64_t f = 2; f * f <= m; ++f) {
        if (m % (f * f) == 0) {
            return false;
        }
        if (m % f == 0) {
            m /= f;
        }
    }
    return true;
}

std::int64_t squarefree_part(std::int64_t n)
{
    if (n == 0) {
        return 0;
    }
    std::int64_t sign = n < 0 ? -1 : 1;
    std::int64_t m = n * sign, out = 1;
    for (std::int64_t f = 2; f * f <= m; ++f) {
        int e = 0;
        while (m % f == 0) {
            m /= f;
            ++e;
        }
        if (e % 2 == 1) {
            out *= f;
        }
    }
    return sign * out * m;
}

BigInt isqrt(const BigInt &n)
{
    if (n < 0) {
        throw DomainError("isqrt of negative integer");
    }
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool is_perfect_square(const BigInt &n)
{
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

long Precision::decimal_digits() const
{
    return static_cast<long>(std::floor(static_cast<double>(bits) * std::log10(2.0)));
}

// --- Real --------------------------------------------------------------------

namespace
{
mpfr_prec_t checked(Precision p)
{
    if (p.bits < MPFR_PREC_MIN || p.bits > MPFR_PREC_MAX) {
        throw DomainError("precision out of range: " + std::to_string(p.bits));
    }
    return static_cast<mpfr_prec_t>(p.bits);
}
} // namespace

Real::Real(Precision prec)
{
    mpfr_init2(m_v, checked(prec));
    mpfr_set_zero(m_v, 1);
}

Real::Real(long v, Precision prec)
{
    mpfr_init2(m_v, checked(prec));
    mpfr_set_si(m_v, v, MPFR_RNDN);
}

Real::Real(double v, Precision prec)
{
    mpfr_init2(m_v, checked(prec));
    mpfr_set_d(m_v, v, MPFR_RNDN);
}

Real::Real(const BigInt &v, Precision prec)
{
    mpfr_init2(m_v, checked(prec));
    mpfr_set_z(m_v, v.get_mpz_t(), MPFR_RNDN);
}

Real::Real(const BigRat &v, Precision prec)
{
    mpfr_init2(m_v, checked(prec));
    mpfr_set_q(m_v, v.get_mpq_t(), MPFR_RNDN);
}

Real::Real(const std::string &decimal, Precision prec)
{
    mpfr_init2(m_v, checked(prec));
    if (mpfr_set_str(m_v, decimal.c_str(), 10, MPFR_RNDN) != 0) {
        mpfr_clear(m_v);
        throw DomainError("not a decimal number: " + decimal);
    }
}

Real::Real(const Real &other)
{
    mpfr_init2(m_v, mpfr_get_prec(other.m_v));
    mpfr_set(m_v, other.m_v, MPFR_RNDN);
}

Real::Real(Real &&other) noexcept
{
    // Steal by swapping with a minimal-precision placeholder.
    mpfr_init2(m_v, MPFR_PREC_MIN);
    mpfr_swap(m_v, other.m_v);
}

Real &Real::operator=(const Real &other)
{
    if (this != &other) {
        mpfr_set_prec(m_v, mpfr_get_prec(other.m_v));
        mpfr_set(m_v, other.m_v, MPFR_RNDN);
    }
    return *this;
}

Real &Real::operator=(Real &&other) noexcept
{
    mpfr_swap(m_v, other.m_v);
    return *this;
}

Real::~Real()
{
    mpfr_clear(m_v);
}

Real Real::with_precision(Precision prec) const
{
    Real r(prec);
    mpfr_set(r.m_v, m_v, MPFR_RNDN);
    return r;
}

BigInt Real::round() const
{
    if (!mpfr_number_p(m_v)) {
        throw DomainError("cannot round a non-finite value");
    }
    BigInt z;
    mpfr_get_z(z.get_mpz_t(), m_v, MPFR_RNDN);
    return z;
}

BigInt Real::floor() const
{
    if (!mpfr_number_p(m_v)) {
        throw DomainError("cannot round a non-finite value");
    }
    BigInt z;
    mpfr_get_z(z.get_mpz_t(), m_v, MPFR_RNDD);
    return z;
}

double Real::log10_abs() const
{
    if (mpfr_zero_p(m_v)) {
        return -INFINITY;
    }
    long e = 0;
    double mant = mpfr_get_d_2exp(&e, m_v, MPFR_RNDN);
    return std::log10(std::fabs(mant)) + static_cast<double>(e) * std::log10(2.0);
}

std::string Real::to_decimal(long digits) const
{
    if (digits <= 0) {
        digits = std::max(1L, precision().decimal_digits());
    }
    if (mpfr_zero_p(m_v)) {
        return "0";
    }
    char *buf = nullptr;
    mpfr_asprintf(&buf, "%.*Re", static_cast<int>(digits - 1), m_v);
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
}

Real Real::operator-() const
{
    Real r(*this);
    mpfr_neg(r.m_v, r.m_v, MPFR_RNDN);
    return r;
}

namespace
{
// Lowers the precision of `a` to min(a, b) before an in-place op.
void clamp_prec(mpfr_ptr a, mpfr_srcptr b)
{
    if (mpfr_get_prec(b) < mpfr_get_prec(a)) {
        mpfr_prec_round(a, mpfr_get_prec(b), MPFR_RNDN);
    }
}
} // namespace

Real &Real::operator+=(const Real &o)
{
    clamp_prec(m_v, o.m_v);
    mpfr_add(m_v, m_v, o.m_v, MPFR_RNDN);
    return *this;
}

Real &Real::operator-=(const Real &o)
{
    clamp_prec(m_v, o.m_v);
    mpfr_sub(m_v, m_v, o.m_v, MPFR_RNDN);
    return *this;
}

Real &Real::operator*=(const Real &o)
{
    clamp_prec(m_v, o.m_v);
    mpfr_mul(m_v, m_v, o.m_v, MPFR_RNDN);
    return *this;
}

Real &Real::operator/=(const Real &o)
{
    clamp_prec(m_v, o.m_v);
    mpfr_div(m_v, m_v, o.m_v, MPFR_RNDN);
    return *this;
}

#define GF_REAL_UNARY(name, fn)                                                                              \
    Real name(const Real &x)                                                                                 \
    {                                                                                                        \
        Real r(x.precision());                                                                               \
        fn(r.get(), x.get(), MPFR_RNDN);                                                                     \
        return r;                                                                                            \
    }

GF_REAL_UNARY(abs, mpfr_abs)
GF_REAL_UNARY(sqrt, mpfr_sqrt)
GF_REAL_UNARY(exp, mpfr_exp)
GF_REAL_UNARY(log, mpfr_log)
GF_REAL_UNARY(sin, mpfr_sin)
GF_REAL_UNARY(cos, mpfr_cos)

#undef GF_REAL_UNARY

Real atan2(const Real &y, const Real &x)
{
    Real r(min(x.precision(), y.precision()));
    mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
    return r;
}

Real pi(Precision prec)
{
    Real r(prec);
    mpfr_const_pi(r.get(), MPFR_RNDN);
    return r;
}

Real ldexp(const Real &x, long e)
{
    Real r(x);
    mpfr_mul_2si(r.get(), r.get(), e, MPFR_RNDN);
    return r;
}

Real pow2(long e, Precision prec)
{
    Real r(1L, prec);
    mpfr_mul_2si(r.get(), r.get(), e, MPFR_RNDN);
    return r;
}

// --- Complex -----------------------------------------------------------------

Complex::Complex(Real re, Real im) : m_re(std::move(re)), m_im(std::move(im)) {}

Complex::Complex(Real re) : m_re(std::move(re)), m_im(m_re.precision()) {}

Complex &Complex::operator+=(const Complex &o)
{
    m_re += o.m_re;
    m_im += o.m_im;
    return *this;
}

Complex &Complex::operator-=(const Complex &o)
{
    m_re -= o.m_re;
    m_im -= o.m_im;
    return *this;
}

Complex &Complex::operator*=(const Complex &o)
{
    Real re = m_re * o.m_re - m_im * o.m_im;
    Real im = m_re * o.m_im + m_im * o.m_re;
    m_re = std::move(re);
    m_im = std::move(im);
    return *this;
}

Complex &Complex::operator/=(const Complex &o)
{
    Real den = o.m_re * o.m_re + o.m_im * o.m_im;
    if (den.is_zero()) {
        throw DomainError("complex division by zero");
    }
    Real re = (m_re * o.m_re + m_im * o.m_im) / den;
    Real im = (m_im * o.m_re - m_re * o.m_im) / den;
    m_re = std::move(re);
    m_im = std::move(im);
    return *this;
}

Real abs(const Complex &z)
{
    Real r(z.precision());
    mpfr_hypot(r.get(), z.real().get(), z.imag().get(), MPFR_RNDN);
    return r;
}

Real arg(const Complex &z)
{
    return atan2(z.imag(), z.real());
}

Complex exp(const Complex &z)
{
    Real m = exp(z.real());
    if (z.imag().is_zero()) {
        return Complex(std::move(m));
    }
    return Complex(m * cos(z.imag()), m * sin(z.imag()));
}

Complex log(const Complex &z)
{
    if (z.real().is_zero() && z.imag().is_zero()) {
        throw DomainError("log of zero");
    }
    return Complex(log(abs(z)), arg(z));
}

Complex pow(const Complex &z, unsigned long n)
{
    Complex result(Real(1L, z.precision()));
    Complex base = z;
    while (n > 0) {
        if (n & 1UL) {
            result *= base;
        }
        n >>= 1;
        if (n > 0) {
            base *= base;
        }
    }
    return result;
}

bool agrees_to(const Complex &a, const Complex &b, Precision prec)
{
    Precision work = a.precision().bits > b.precision().bits ? a.precision() : b.precision();
    Complex diff = a.with_precision(work) - b.with_precision(work);
    Real scale = abs(b.with_precision(work));
    Real one(1L, work);
    if (scale < one) {
        scale = one;
    }
    return !(abs(diff) > ldexp(scale, -prec.bits + 8));
}

// --- continued fractions -------------------------------------------------------

namespace
{
BigInt floor_div(const BigInt &a, const BigInt &b)
{
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// floor((p + sqrt d) / q) for q != 0, d not a square.
BigInt surd_floor(const BigInt &p, const BigInt &q, const BigInt &d)
{
    BigInt s = isqrt(d);
    // sqrt d lies strictly between s and s + 1.
    if (q > 0) {
        return floor_div(p + s, q);
    }
    return floor_div(p + s + 1, q);
}
} // namespace

ContinuedFraction continued_fraction(const QuadraticSurd &x)
{
    if (x.d <= 0 || is_perfect_square(x.d)) {
        throw DomainError("continued fraction needs a non-square positive radicand");
    }
    if (x.q == 0) {
        throw DomainError("surd with zero denominator");
    }
    BigInt p = x.p, q = x.q, d = x.d;
    if ((d - p * p) % q != 0) {
        // Rescale (p + sqrt d)/q = (p|q| + sqrt(d q^2)) / (q|q|).
        BigInt aq = abs(q);
        p *= aq;
        d *= q * q;
        q *= aq;
    }
    std::map<std::pair<BigInt, BigInt>, std::size_t> seen;
    std::vector<BigInt> terms;
    while (true) {
        auto key = std::make_pair(p, q);
        auto it = seen.find(key);
        if (it != seen.end()) {
            ContinuedFraction cf;
            cf.preperiod.assign(terms.begin(), terms.begin() + static_cast<std::ptrdiff_t>(it->second));
            cf.period.assign(terms.begin() + static_cast<std::ptrdiff_t>(it->second), terms.end());
            return cf;
        }
        seen.emplace(key, terms.size());
        BigInt a = surd_floor(p, q, d);
        terms.push_back(a);
        // x' = 1 / (x - a) = (a q - p + sqrt d) / ((d - (a q - p)^2) / q)
        BigInt np = a * q - p;
        BigInt nq = (d - np * np) / q;
        p = std::move(np);
        q = std::move(nq);
    }
}

ContinuedFraction continued_fraction_sqrt(const BigInt &d)
{
    if (d < 2) {
        throw DomainError("continued_fraction_sqrt requires d >= 2");
    }
    if (is_perfect_square(d)) {
        throw DomainError("continued_fraction_sqrt: " + d.get_str() + " is a perfect square");
    }
    return continued_fraction(QuadraticSurd{0, 1, d});
}

std::vector<std::pair<BigInt, BigInt>> convergents(const ContinuedFraction &cf, std::size_t count)
{
    std::vector<std::pair<BigInt, BigInt>> out;
    BigInt p_prev = 1, q_prev = 0, p = 0, q = 1;
    for (std::size_t k = 0; k < count; ++k) {
        const BigInt &a = k < cf.preperiod.size()
                              ? cf.preperiod[k]
                              : cf.period[(k - cf.preperiod.size()) % cf.period.size()];
        BigInt np = a * p_prev + p;
        BigInt nq = a * q_prev + q;
        p = std::move(p_prev);
        q = std::move(q_prev);
        p_prev = np;
        q_prev = nq;
        out.emplace_back(std::move(np), std::move(nq));
    }
    return out;
}

std::string format_integer_poly(const std::vector<BigInt> &c, const std::string &var)
{
    std::string out;
    for (std::size_t k = c.size(); k-- > 0;) {
        if (c[k] == 0) {
            continue;
        }
        BigInt mag = abs(c[k]);
        if (out.empty()) {
            if (c[k] < 0) {
                out += "-";
            }
        } else {
            out += c[k] < 0 ? " - " : " + ";
        }
        bool unit = mag == 1 && k > 0;
        if (!unit) {
            out += mag.get_str();
        }
        if (k > 0) {
            out += var;
            if (k > 1) {
                out += "^" + std::to_string(k);
            }
        }
    }
    return out.empty() ? "0" : out;
}

} // namespace gf
