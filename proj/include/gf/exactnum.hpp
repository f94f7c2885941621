#ifndef GF_EXACTNUM_HPP
#define GF_EXACTNUM_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>
#include <mpfr.h>

namespace gf
{

using BigInt = mpz_class;
using BigRat = mpq_class;

/// Builds a rational in lowest terms with positive denominator.
BigRat make_rat(const BigInt &num, const BigInt &den);

BigInt ipow(const BigInt &base, unsigned long exp);
bool is_probable_prime(const BigInt &n);
bool is_squarefree(std::int64_t n);
std::int64_t squarefree_part(std::int64_t n);
BigInt isqrt(const BigInt &n);
bool is_perfect_square(const BigInt &n);

/// Working precision in bits.
struct Precision {
    long bits;
    /// floor(bits * log10 2), the number of trustworthy decimal digits.
    long decimal_digits() const;
    Precision operator+(long extra) const
    {
        return Precision{bits + extra};
    }
    friend bool operator==(Precision, Precision) = default;
};

inline Precision min(Precision a, Precision b)
{
    return a.bits < b.bits ? a : b;
}

// RAII wrapper over mpfr_t. Binary operators produce a result at the minimum
// of the operand precisions, rounded to nearest.
class Real
{
public:
    explicit Real(Precision prec = Precision{53});
    Real(long v, Precision prec);
    Real(double v, Precision prec);
    Real(const BigInt &v, Precision prec);
    Real(const BigRat &v, Precision prec);
    Real(const std::string &decimal, Precision prec);
    Real(const Real &other);
    Real(Real &&other) noexcept;
    Real &operator=(const Real &other);
    Real &operator=(Real &&other) noexcept;
    ~Real();

    Precision precision() const
    {
        return Precision{static_cast<long>(mpfr_get_prec(m_v))};
    }
    /// Same value rounded to a different precision.
    Real with_precision(Precision prec) const;

    mpfr_srcptr get() const
    {
        return m_v;
    }
    mpfr_ptr get()
    {
        return m_v;
    }

    bool is_zero() const
    {
        return mpfr_zero_p(m_v) != 0;
    }
    int sign() const
    {
        return mpfr_sgn(m_v);
    }
    double to_double() const
    {
        return mpfr_get_d(m_v, MPFR_RNDN);
    }
    /// Nearest integer.
    BigInt round() const;
    BigInt floor() const;
    /// log10 |x|, -infinity for zero.
    double log10_abs() const;

    /// Scientific decimal string with the given number of significant digits
    /// (default: every digit the precision supports).
    std::string to_decimal(long digits = 0) const;

    Real operator-() const;
    Real &operator+=(const Real &o);
    Real &operator-=(const Real &o);
    Real &operator*=(const Real &o);
    Real &operator/=(const Real &o);
    friend Real operator+(Real a, const Real &b)
    {
        return a += b;
    }
    friend Real operator-(Real a, const Real &b)
    {
        return a -= b;
    }
    friend Real operator*(Real a, const Real &b)
    {
        return a *= b;
    }
    friend Real operator/(Real a, const Real &b)
    {
        return a /= b;
    }
    friend bool operator<(const Real &a, const Real &b)
    {
        return mpfr_less_p(a.m_v, b.m_v) != 0;
    }
    friend bool operator>(const Real &a, const Real &b)
    {
        return mpfr_greater_p(a.m_v, b.m_v) != 0;
    }
    friend bool operator==(const Real &a, const Real &b)
    {
        return mpfr_equal_p(a.m_v, b.m_v) != 0;
    }

private:
    mpfr_t m_v;
};

Real abs(const Real &x);
Real sqrt(const Real &x);
Real exp(const Real &x);
Real log(const Real &x);
Real sin(const Real &x);
Real cos(const Real &x);
Real atan2(const Real &y, const Real &x);
Real pi(Precision prec);
/// x * 2^e, exact.
Real ldexp(const Real &x, long e);
Real pow2(long e, Precision prec);

/// Arbitrary-precision complex scalar; precision of results is the minimum of
/// the operand precisions.
class Complex
{
public:
    explicit Complex(Precision prec = Precision{53}) : m_re(prec), m_im(prec) {}
    Complex(Real re, Real im);
    explicit Complex(Real re);

    const Real &real() const
    {
        return m_re;
    }
    const Real &imag() const
    {
        return m_im;
    }
    Precision precision() const
    {
        return min(m_re.precision(), m_im.precision());
    }
    Complex with_precision(Precision prec) const
    {
        return Complex(m_re.with_precision(prec), m_im.with_precision(prec));
    }
    bool is_real() const
    {
        return m_im.is_zero();
    }

    Complex operator-() const
    {
        return Complex(-m_re, -m_im);
    }
    Complex &operator+=(const Complex &o);
    Complex &operator-=(const Complex &o);
    Complex &operator*=(const Complex &o);
    Complex &operator/=(const Complex &o);
    friend Complex operator+(Complex a, const Complex &b)
    {
        return a += b;
    }
    friend Complex operator-(Complex a, const Complex &b)
    {
        return a -= b;
    }
    friend Complex operator*(Complex a, const Complex &b)
    {
        return a *= b;
    }
    friend Complex operator/(Complex a, const Complex &b)
    {
        return a /= b;
    }

private:
    Real m_re;
    Real m_im;
};

Real abs(const Complex &z);
Real arg(const Complex &z);
Complex exp(const Complex &z);
/// Principal branch, arg in (-pi, pi].
Complex log(const Complex &z);
Complex pow(const Complex &z, unsigned long n);

/// Result of a transcendental evaluation re-run at precision + 32 bits.
template <typename T>
struct Validated {
    T value;
    std::optional<std::string> warning;
};

/// Relative-or-absolute agreement test used by precision validation:
/// |a - b| <= 2^(-bits+8) * max(1, |b|).
bool agrees_to(const Complex &a, const Complex &b, Precision prec);

template <typename F>
Validated<Complex> validated_eval(F &&eval, Precision prec)
{
    Complex lo = eval(prec);
    Complex hi = eval(prec + 32);
    if (agrees_to(lo, hi, prec)) {
        return {std::move(lo), std::nullopt};
    }
    return {hi.with_precision(prec), std::string("evaluation at +32 bits disagreed beyond tolerance; "
                                                 "higher-precision value used")};
}

// --- quadratic surds and continued fractions -------------------------------

/// The quadratic irrational (p + sqrt(d)) / q with integers p, q and d > 0 not a
/// square. Requires q | d - p^2 so the complete quotients stay in this form.
struct QuadraticSurd {
    BigInt p;
    BigInt q;
    BigInt d;
};

struct ContinuedFraction {
    std::vector<BigInt> preperiod; // a0, ..., up to the start of the period
    std::vector<BigInt> period;
};

/// Periodic expansion of an arbitrary quadratic surd; the period is found by
/// detecting a repeated complete quotient exactly.
ContinuedFraction continued_fraction(const QuadraticSurd &x);

/// [a0; period] for sqrt(d); d >= 2 and not a perfect square.
ContinuedFraction continued_fraction_sqrt(const BigInt &d);

/// First `count` convergents p_k / q_k.
std::vector<std::pair<BigInt, BigInt>> convergents(const ContinuedFraction &cf, std::size_t count);

// --- lattice reduction and integer relations -------------------------------

using IntMatrix = std::vector<std::vector<BigInt>>;

/// Exact integral LLL (rows are basis vectors, assumed linearly independent).
/// delta = delta_num / delta_den, 1/4 < delta < 1.
IntMatrix lll_reduce(IntMatrix basis, long delta_num = 99, long delta_den = 100);

struct IntegerRelation {
    std::vector<BigInt> coefficients; // c_0 .. c_n, ascending powers, content 1, c_n > 0
    Real residual;                    // |sum c_i z^i| at `precision`
    int degree_bound;
    Precision precision;

    int degree() const
    {
        return static_cast<int>(coefficients.size()) - 1;
    }
};

struct RelationAttempt {
    int degree;
    std::vector<BigInt> candidate; // shortest reduced vector, normalized
    Real residual;
    bool accepted;
    std::string reason;
};

struct RelationSearch {
    std::optional<IntegerRelation> relation; // empty = none found
    std::vector<RelationAttempt> attempts;
};

/// Searches degrees 1..max_degree for the lowest-degree integer polynomial
/// vanishing at z. The lattice is [I | N Re z^i, N Im z^i] with N = 2^bits.
RelationSearch find_integer_relation(const Complex &z, int max_degree, Precision prec);

/// Exact rational input: always the degree-1 relation den*x - num, residual 0.
IntegerRelation find_integer_relation(const BigRat &z, Precision prec);

/// |sum c_i z^i| evaluated at z's precision (Horner).
Real relation_residual(const std::vector<BigInt> &coefficients, const Complex &z);

/// Renders c_0..c_n as "x^2 - 2" style text.
std::string format_integer_poly(const std::vector<BigInt> &coefficients, const std::string &var = "x");

} // namespace gf

#endif
