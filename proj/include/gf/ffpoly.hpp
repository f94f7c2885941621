#ifndef GF_FFPOLY_HPP
#define GF_FFPOLY_HPP

#include <cstdint>
#include <memory>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gf/exactnum.hpp"

namespace gf
{

class FqPoly;

/// F_q with q = p^n, realized as F_p[a]/(modulus). Immutable and cheap to copy.
class FqConfig
{
public:
    /// The prime field F_p (modulus "a", so the generator is 0).
    static FqConfig prime(std::uint32_t p);
    /// F_{p^n} with the lexicographically smallest monic irreducible modulus
    /// (smallest when coefficients are read as base-p digits, top first).
    static FqConfig make(std::uint32_t p, int n);
    /// F_{p^n} with a caller-supplied modulus (low-to-high, monic); irreducibility is checked.
    static FqConfig with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus);

    std::uint32_t p() const
    {
        return m_data->p;
    }
    int n() const
    {
        return m_data->n;
    }
    const BigInt &q() const
    {
        return m_data->q;
    }
    /// q as a machine integer; throws if it does not fit.
    std::uint64_t q_small() const;
    const std::vector<std::uint32_t> &modulus() const
    {
        return m_data->modulus;
    }
    std::string modulus_string() const;

    friend bool operator==(const FqConfig &a, const FqConfig &b)
    {
        return a.m_data == b.m_data || (a.p() == b.p() && a.modulus() == b.modulus());
    }

private:
    struct Data {
        std::uint32_t p;
        int n;
        std::vector<std::uint32_t> modulus; // n + 1 entries, monic
        BigInt q;
    };
    explicit FqConfig(std::shared_ptr<const Data> d) : m_data(std::move(d)) {}
    std::shared_ptr<const Data> m_data;
};

/// Irreducibility of a polynomial over F_p given by its low-to-high coefficients.
bool is_irreducible_mod_p(std::uint32_t p, const std::vector<std::uint32_t> &coeffs);

class FqElement
{
public:
    FqElement(FqConfig field, std::vector<std::uint32_t> coords);
    FqElement(FqConfig field, std::int64_t integer);
    static FqElement zero(const FqConfig &f)
    {
        return FqElement(f, 0);
    }
    static FqElement one(const FqConfig &f)
    {
        return FqElement(f, 1);
    }
    /// The class of a in F_p[a]/(modulus).
    static FqElement generator(const FqConfig &f);
    /// Inverse of index(): base-p digits, lowest coordinate first.
    static FqElement from_index(const FqConfig &f, std::uint64_t index);
    static FqElement random(const FqConfig &f, std::mt19937_64 &rng);

    const FqConfig &field() const
    {
        return m_field;
    }
    const std::vector<std::uint32_t> &coords() const
    {
        return m_coords;
    }
    std::uint64_t index() const;
    bool is_zero() const;
    bool is_one() const;
    /// True if the element lies in the prime field.
    bool in_prime_field() const;

    FqElement zero_like() const
    {
        return zero(m_field);
    }
    FqElement one_like() const
    {
        return one(m_field);
    }

    FqElement operator-() const;
    FqElement &operator+=(const FqElement &o);
    FqElement &operator-=(const FqElement &o);
    FqElement &operator*=(const FqElement &o);
    FqElement &operator/=(const FqElement &o);
    friend FqElement operator+(FqElement a, const FqElement &b)
    {
        return a += b;
    }
    friend FqElement operator-(FqElement a, const FqElement &b)
    {
        return a -= b;
    }
    friend FqElement operator*(FqElement a, const FqElement &b)
    {
        return a *= b;
    }
    friend FqElement operator/(FqElement a, const FqElement &b)
    {
        return a /= b;
    }
    friend bool operator==(const FqElement &a, const FqElement &b)
    {
        return a.m_coords == b.m_coords && a.m_field == b.m_field;
    }
    friend bool operator<(const FqElement &a, const FqElement &b)
    {
        return a.index() < b.index();
    }

    FqElement pow(const BigInt &e) const;
    FqElement pow(std::uint64_t e) const;
    FqElement inverse() const;

    std::string to_string() const;

private:
    FqConfig m_field;
    std::vector<std::uint32_t> m_coords; // length n
};

/// All elements in index order; only sensible for small fields.
std::vector<FqElement> enumerate_field(const FqConfig &f);

/// Element of F_q[T]; dense coefficients low-to-high, trailing zeros trimmed.
class FqPoly
{
public:
    explicit FqPoly(FqConfig field);
    FqPoly(FqConfig field, std::vector<FqElement> coeffs);
    /// Coefficients given as integers mod p.
    static FqPoly from_ints(const FqConfig &field, const std::vector<std::int64_t> &coeffs);
    static FqPoly constant(const FqElement &c);
    static FqPoly monomial(const FqElement &c, std::size_t degree);
    static FqPoly variable(const FqConfig &field)
    {
        return monomial(FqElement::one(field), 1);
    }
    static FqPoly random(const FqConfig &f, int degree, std::mt19937_64 &rng, bool monic = false);

    const FqConfig &field() const
    {
        return m_field;
    }
    /// -1 for the zero polynomial.
    int degree() const
    {
        return static_cast<int>(m_coeffs.size()) - 1;
    }
    bool is_zero() const
    {
        return m_coeffs.empty();
    }
    bool is_one() const;
    bool is_monic() const;
    const std::vector<FqElement> &coeffs() const
    {
        return m_coeffs;
    }
    FqElement coeff(std::size_t i) const;
    FqElement lc() const;

    FqPoly zero_like() const
    {
        return FqPoly(m_field);
    }
    FqPoly one_like() const
    {
        return constant(FqElement::one(m_field));
    }

    FqPoly operator-() const;
    FqPoly &operator+=(const FqPoly &o);
    FqPoly &operator-=(const FqPoly &o);
    FqPoly &operator*=(const FqPoly &o);
    friend FqPoly operator+(FqPoly a, const FqPoly &b)
    {
        return a += b;
    }
    friend FqPoly operator-(FqPoly a, const FqPoly &b)
    {
        return a -= b;
    }
    friend FqPoly operator*(FqPoly a, const FqPoly &b)
    {
        return a *= b;
    }
    friend FqPoly operator*(const FqElement &c, const FqPoly &f);
    friend bool operator==(const FqPoly &a, const FqPoly &b)
    {
        return a.m_field == b.m_field && a.m_coeffs == b.m_coeffs;
    }
    /// Degree first, then coefficients from the top.
    friend bool operator<(const FqPoly &a, const FqPoly &b);

    std::pair<FqPoly, FqPoly> divmod(const FqPoly &d) const;
    FqPoly operator/(const FqPoly &d) const
    {
        return divmod(d).first;
    }
    FqPoly operator%(const FqPoly &d) const
    {
        return divmod(d).second;
    }

    FqPoly monic() const;
    FqPoly derivative() const;
    FqElement operator()(const FqElement &x) const;
    FqPoly pow(std::uint64_t e) const;
    FqPoly powmod(const BigInt &e, const FqPoly &m) const;

    std::string to_string(const std::string &var = "T") const;

private:
    void trim();
    FqConfig m_field;
    std::vector<FqElement> m_coeffs;
};

FqPoly gcd(FqPoly a, FqPoly b);
/// Returns (g, s, t) with s a + t b = g, g monic.
struct ExtendedGcd {
    FqPoly g, s, t;
};
ExtendedGcd extended_gcd(const FqPoly &a, const FqPoly &b);

bool is_irreducible(const FqPoly &f);

struct Factor {
    FqPoly poly; // monic irreducible
    int multiplicity;
};

/// Squarefree decomposition, distinct-degree, then Cantor-Zassenhaus
/// equal-degree splitting driven by `seed`. Factors are sorted; the leading
/// coefficient of f is the remaining unit.
std::vector<Factor> factor(const FqPoly &f, std::uint64_t seed = 0x5eed);

/// Distinct roots of f in its coefficient field, sorted by index.
std::vector<FqElement> roots(const FqPoly &f, std::uint64_t seed = 0x5eed);

/// |F_q[T] / g F_q[T]| = q^deg g.
BigInt residue_count(const FqPoly &g);

/// F_q -> F_{q^s}; maps the generator of the base to a fixed root of the base modulus.
struct Embedding {
    FqConfig from;
    FqConfig to;
    FqElement generator_image;

    FqElement operator()(const FqElement &x) const;
    FqPoly operator()(const FqPoly &f) const;
};

struct Extension {
    FqConfig field;
    Embedding embedding;
};

/// F_{q^s} over the given base with an embedding of the base field.
Extension extend(const FqConfig &base, int s, std::uint64_t seed = 0x5eed);

/// Roots in K of the F_p-linear polynomial sum_i c_i x^(e^i), found as the kernel
/// of the induced F_p-linear map on K = F_p^N. e must be a power of p.
std::vector<FqElement> additive_roots(std::span<const FqElement> coeffs, std::uint64_t e, const FqConfig &field);

/// Parses "c_k*T^k + ..." where a coefficient is an integer (reduced mod p),
/// the field generator `a` (optionally a^k), or a parenthesized expression in `a`.
FqPoly parse_fqpoly(const std::string &text, const FqConfig &field, char var = 'T');

/// Parses an element of F_q written as an expression in the generator `a`.
FqElement parse_fqelement(const std::string &text, const FqConfig &field);

} // namespace gf

#endif
