#ifndef GF_ORE_HPP
#define GF_ORE_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "gf/errors.hpp"
#include "gf/ffpoly.hpp"

namespace gf
{

/// Element of k = F_q(T): reduced fraction num/den with den monic.
class RatFunc
{
public:
    explicit RatFunc(FqConfig field);
    RatFunc(FqPoly num);
    RatFunc(FqPoly num, FqPoly den);

    const FqPoly &num() const
    {
        return m_num;
    }
    const FqPoly &den() const
    {
        return m_den;
    }
    const FqConfig &field() const
    {
        return m_num.field();
    }
    bool is_zero() const
    {
        return m_num.is_zero();
    }
    bool is_polynomial() const
    {
        return m_den.is_one();
    }
    RatFunc zero_like() const
    {
        return RatFunc(field());
    }
    RatFunc one_like() const
    {
        return RatFunc(m_num.one_like());
    }
    RatFunc inverse() const;

    RatFunc operator-() const;
    RatFunc &operator+=(const RatFunc &o);
    RatFunc &operator-=(const RatFunc &o);
    RatFunc &operator*=(const RatFunc &o);
    RatFunc &operator/=(const RatFunc &o);
    friend RatFunc operator+(RatFunc a, const RatFunc &b)
    {
        return a += b;
    }
    friend RatFunc operator-(RatFunc a, const RatFunc &b)
    {
        return a -= b;
    }
    friend RatFunc operator*(RatFunc a, const RatFunc &b)
    {
        return a *= b;
    }
    friend RatFunc operator/(RatFunc a, const RatFunc &b)
    {
        return a /= b;
    }
    friend bool operator==(const RatFunc &a, const RatFunc &b)
    {
        return a.m_num == b.m_num && a.m_den == b.m_den;
    }

    std::string to_string() const;

private:
    void reduce();
    FqPoly m_num;
    FqPoly m_den;
};

// x -> x^e on each coefficient ring. e is a power of the characteristic, so
// this is a ring endomorphism (the Frobenius power).
FqElement frobenius(const FqElement &x, std::uint64_t e);
FqPoly frobenius(const FqPoly &x, std::uint64_t e);
RatFunc frobenius(const RatFunc &x, std::uint64_t e);

std::uint32_t characteristic(const FqElement &x);
std::uint32_t characteristic(const FqPoly &x);
std::uint32_t characteristic(const RatFunc &x);

/// The twist tau*a = a^exponent * tau.
struct TwistSpec {
    std::uint64_t exponent;

    /// Checks that exponent is a power (>= 1) of p.
    void validate(std::uint32_t p) const;
    friend bool operator==(TwistSpec, TwistSpec) = default;
};

/// sum_i c_i tau^i with tau*a = a^e*tau.
template <typename C>
class OrePoly
{
public:
    OrePoly(std::vector<C> coeffs, C zero, TwistSpec twist) : m_coeffs(std::move(coeffs)), m_zero(std::move(zero)), m_twist(twist)
    {
        m_twist.validate(characteristic(m_zero));
        trim();
    }
    static OrePoly constant(const C &c, TwistSpec twist)
    {
        return OrePoly({c}, c.zero_like(), twist);
    }
    /// tau itself.
    static OrePoly tau(const C &one, TwistSpec twist)
    {
        return OrePoly({one.zero_like(), one}, one.zero_like(), twist);
    }

    int degree() const
    {
        return static_cast<int>(m_coeffs.size()) - 1;
    }
    bool is_zero() const
    {
        return m_coeffs.empty();
    }
    const std::vector<C> &coeffs() const
    {
        return m_coeffs;
    }
    const C &coeff(std::size_t i) const
    {
        return i < m_coeffs.size() ? m_coeffs[i] : m_zero;
    }
    const C &zero() const
    {
        return m_zero;
    }
    TwistSpec twist() const
    {
        return m_twist;
    }

    OrePoly &operator+=(const OrePoly &o)
    {
        require_twist(o);
        if (o.m_coeffs.size() > m_coeffs.size()) {
            m_coeffs.resize(o.m_coeffs.size(), m_zero);
        }
        for (std::size_t i = 0; i < o.m_coeffs.size(); ++i) {
            m_coeffs[i] += o.m_coeffs[i];
        }
        trim();
        return *this;
    }
    OrePoly &operator-=(const OrePoly &o)
    {
        require_twist(o);
        if (o.m_coeffs.size() > m_coeffs.size()) {
            m_coeffs.resize(o.m_coeffs.size(), m_zero);
        }
        for (std::size_t i = 0; i < o.m_coeffs.size(); ++i) {
            m_coeffs[i] -= o.m_coeffs[i];
        }
        trim();
        return *this;
    }
    friend OrePoly operator+(OrePoly a, const OrePoly &b)
    {
        return a += b;
    }
    friend OrePoly operator-(OrePoly a, const OrePoly &b)
    {
        return a -= b;
    }
    /// (sum a_i tau^i)(sum b_j tau^j) = sum a_i b_j^(e^i) tau^(i+j)
    friend OrePoly operator*(const OrePoly &f, const OrePoly &g)
    {
        f.require_twist(g);
        if (f.is_zero() || g.is_zero()) {
            return OrePoly({}, f.m_zero, f.m_twist);
        }
        std::vector<C> out(f.m_coeffs.size() + g.m_coeffs.size() - 1, f.m_zero);
        std::vector<C> twisted = g.m_coeffs; // b_j^(e^i), advanced once per i
        for (std::size_t i = 0; i < f.m_coeffs.size(); ++i) {
            if (i > 0) {
                for (auto &b : twisted) {
                    b = frobenius(b, f.m_twist.exponent);
                }
            }
            if (f.m_coeffs[i].is_zero()) {
                continue;
            }
            for (std::size_t j = 0; j < twisted.size(); ++j) {
                out[i + j] += f.m_coeffs[i] * twisted[j];
            }
        }
        return OrePoly(std::move(out), f.m_zero, f.m_twist);
    }
    OrePoly &operator*=(const OrePoly &o)
    {
        return *this = *this * o;
    }
    friend bool operator==(const OrePoly &a, const OrePoly &b)
    {
        return a.m_twist == b.m_twist && a.m_coeffs == b.m_coeffs;
    }

    /// Evaluates the additive polynomial sum c_i x^(e^i) at x, after mapping the
    /// coefficients into x's ring with `lift`.
    template <typename X, typename Lift>
    X apply(const X &x, Lift &&lift) const
    {
        X acc = x.zero_like();
        X pw = x;
        for (std::size_t i = 0; i < m_coeffs.size(); ++i) {
            if (i > 0) {
                pw = frobenius(pw, m_twist.exponent);
            }
            if (!m_coeffs[i].is_zero()) {
                acc += lift(m_coeffs[i]) * pw;
            }
        }
        return acc;
    }
    template <typename X>
    X apply(const X &x) const
    {
        return apply(x, [](const C &c) { return c; });
    }

    /// "c0 + c1*tau + c2*tau^2"
    std::string to_string() const
    {
        std::string out;
        for (std::size_t i = 0; i < m_coeffs.size(); ++i) {
            if (m_coeffs[i].is_zero()) {
                continue;
            }
            if (!out.empty()) {
                out += " + ";
            }
            std::string cs = m_coeffs[i].to_string();
            const bool compound = cs.find(' ') != std::string::npos;
            if (i == 0) {
                out += cs;
                continue;
            }
            if (cs != "1") {
                out += (compound ? "(" + cs + ")" : cs) + "*";
            }
            out += i == 1 ? "tau" : "tau^" + std::to_string(i);
        }
        return out.empty() ? "0" : out;
    }

private:
    void trim()
    {
        while (!m_coeffs.empty() && m_coeffs.back().is_zero()) {
            m_coeffs.pop_back();
        }
    }
    void require_twist(const OrePoly &o) const
    {
        if (!(m_twist == o.m_twist)) {
            throw DomainError("Ore polynomials with different twists");
        }
    }

    std::vector<C> m_coeffs;
    C m_zero;
    TwistSpec m_twist;
};

/// Sparse univariate polynomial sum c_k x^k whose exponents are powers of e.
template <typename C>
class AdditivePoly
{
public:
    AdditivePoly(std::map<std::uint64_t, C> terms, C zero) : m_terms(std::move(terms)), m_zero(std::move(zero))
    {
        std::erase_if(m_terms, [](const auto &kv) { return kv.second.is_zero(); });
    }
    const std::map<std::uint64_t, C> &terms() const
    {
        return m_terms;
    }
    const C &zero() const
    {
        return m_zero;
    }
    /// x-degree; 0 for the zero polynomial.
    std::uint64_t degree() const
    {
        return m_terms.empty() ? 0 : m_terms.rbegin()->first;
    }
    C coeff(std::uint64_t k) const
    {
        auto it = m_terms.find(k);
        return it == m_terms.end() ? m_zero : it->second;
    }
    template <typename X>
    X operator()(const X &x) const
    {
        X acc = x.zero_like();
        for (const auto &[k, c] : m_terms) {
            acc += c * pow_generic(x, k);
        }
        return acc;
    }
    /// (f o g)(x) = f(g(x)); valid because g^(e^i) = sum b_j^(e^i) x^(k_j e^i) in characteristic p.
    AdditivePoly compose(const AdditivePoly &g, std::uint64_t e) const
    {
        std::map<std::uint64_t, C> out;
        for (const auto &[k, a] : m_terms) {
            std::uint64_t steps = 0;
            for (std::uint64_t t = k; t > 1; t /= e) {
                ++steps;
            }
            for (const auto &[j, b] : g.m_terms) {
                C tb = b;
                for (std::uint64_t s = 0; s < steps; ++s) {
                    tb = frobenius(tb, e);
                }
                auto [it, fresh] = out.try_emplace(j * k, m_zero);
                it->second += a * tb;
            }
        }
        return AdditivePoly(std::move(out), m_zero);
    }
    friend bool operator==(const AdditivePoly &a, const AdditivePoly &b)
    {
        return a.m_terms == b.m_terms;
    }

    std::string to_string(const std::string &var = "x") const
    {
        std::string out;
        for (auto it = m_terms.rbegin(); it != m_terms.rend(); ++it) {
            if (!out.empty()) {
                out += " + ";
            }
            std::string cs = it->second.to_string();
            if (cs.find(' ') != std::string::npos) {
                cs = "(" + cs + ")";
            }
            if (cs != "1") {
                out += cs + "*";
            }
            out += var;
            if (it->first > 1) {
                out += "^" + std::to_string(it->first);
            }
        }
        return out.empty() ? "0" : out;
    }

private:
    template <typename X>
    static X pow_generic(const X &x, std::uint64_t k)
    {
        X r = x.one_like();
        X b = x;
        while (k > 0) {
            if (k & 1U) {
                r *= b;
            }
            k >>= 1;
            if (k > 0) {
                b *= b;
            }
        }
        return r;
    }

    std::map<std::uint64_t, C> m_terms;
    C m_zero;
};

template <typename C>
AdditivePoly<C> to_additive(const OrePoly<C> &f)
{
    std::map<std::uint64_t, C> terms;
    std::uint64_t k = 1;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (i > 0) {
            k *= f.twist().exponent;
        }
        if (!f.coeffs()[i].is_zero()) {
            terms.emplace(k, f.coeffs()[i]);
        }
    }
    return AdditivePoly<C>(std::move(terms), f.zero());
}

template <typename C>
OrePoly<C> from_additive(const AdditivePoly<C> &g, TwistSpec twist)
{
    std::vector<C> coeffs;
    for (const auto &[k, c] : g.terms()) {
        std::size_t i = 0;
        std::uint64_t t = k;
        while (t > 1 && t % twist.exponent == 0) {
            t /= twist.exponent;
            ++i;
        }
        if (t != 1 || (twist.exponent == 1 && k != 1)) {
            throw DomainError("from_additive: exponent " + std::to_string(k) + " is not a power of " +
                              std::to_string(twist.exponent));
        }
        if (coeffs.size() <= i) {
            coeffs.resize(i + 1, g.zero());
        }
        coeffs[i] = c;
    }
    return OrePoly<C>(std::move(coeffs), g.zero(), twist);
}

// --- skew Laurent polynomials R[t, t^-1; sigma] with b^sigma t = t b -----------------

/// A ring endomorphism sigma with optional inverse (empty = not invertible).
template <typename C>
struct Automorphism {
    std::string name;
    std::function<C(const C &)> forward;
    std::function<C(const C &)> inverse;

    bool invertible() const
    {
        return static_cast<bool>(inverse);
    }
    /// sigma^k for any integer k.
    C power(const C &c, int k) const
    {
        C r = c;
        if (k < 0 && !inverse) {
            throw DomainError("automorphism '" + name + "' is not invertible");
        }
        for (int i = 0; i < (k < 0 ? -k : k); ++i) {
            r = k > 0 ? forward(r) : inverse(r);
        }
        return r;
    }
};

/// x -> x^(p^k) on F_q; invertible with inverse x -> x^(p^(n-k)).
Automorphism<FqElement> frobenius_automorphism(const FqConfig &field, int k = 1);
/// x -> x^e on F_q(T); not surjective unless e = 1.
Automorphism<RatFunc> frobenius_endomorphism(const FqConfig &field, std::uint64_t e);

/// Canonical form sum_i t^i b_i (coefficients on the right).
template <typename C>
class SkewLaurent
{
public:
    SkewLaurent(Automorphism<C> sigma, C zero) : m_sigma(std::move(sigma)), m_zero(std::move(zero))
    {
        if (!m_sigma.invertible()) {
            throw DomainError("skew Laurent ring needs an invertible twist; '" + m_sigma.name + "' is not");
        }
    }
    static SkewLaurent coefficient(const Automorphism<C> &sigma, const C &b)
    {
        SkewLaurent r(sigma, b.zero_like());
        if (!b.is_zero()) {
            r.m_terms.emplace(0, b);
        }
        return r;
    }
    static SkewLaurent t_power(const Automorphism<C> &sigma, const C &one, int k)
    {
        SkewLaurent r(sigma, one.zero_like());
        r.m_terms.emplace(k, one);
        return r;
    }

    const std::map<int, C> &terms() const
    {
        return m_terms;
    }
    const Automorphism<C> &sigma() const
    {
        return m_sigma;
    }

    friend SkewLaurent operator+(SkewLaurent a, const SkewLaurent &b)
    {
        for (const auto &[k, c] : b.m_terms) {
            auto [it, fresh] = a.m_terms.try_emplace(k, a.m_zero);
            it->second += c;
        }
        a.trim();
        return a;
    }
    /// (t^i b)(t^j c) = t^(i+j) sigma^(-j)(b) c, since b t^j = t^j sigma^(-j)(b).
    friend SkewLaurent operator*(const SkewLaurent &x, const SkewLaurent &y)
    {
        SkewLaurent out(x.m_sigma, x.m_zero);
        for (const auto &[i, b] : x.m_terms) {
            for (const auto &[j, c] : y.m_terms) {
                auto [it, fresh] = out.m_terms.try_emplace(i + j, x.m_zero);
                it->second += x.m_sigma.power(b, -j) * c;
            }
        }
        out.trim();
        return out;
    }
    friend bool operator==(const SkewLaurent &a, const SkewLaurent &b)
    {
        return a.m_terms == b.m_terms;
    }

private:
    void trim()
    {
        std::erase_if(m_terms, [](const auto &kv) { return kv.second.is_zero(); });
    }
    std::map<int, C> m_terms;
    Automorphism<C> m_sigma;
    C m_zero;
};

/// One letter of a word in R[t, t^-1; sigma]: a power of t or a coefficient.
template <typename C>
using SkewToken = std::variant<int, C>;

/// Multiplies the word out left to right into canonical form.
template <typename C>
SkewLaurent<C> skew_laurent_normalize(const std::vector<SkewToken<C>> &word, const Automorphism<C> &sigma, const C &one)
{
    SkewLaurent<C> acc = SkewLaurent<C>::coefficient(sigma, one);
    for (const auto &tok : word) {
        if (const int *k = std::get_if<int>(&tok)) {
            acc = acc * SkewLaurent<C>::t_power(sigma, one, *k);
        } else {
            acc = acc * SkewLaurent<C>::coefficient(sigma, std::get<C>(tok));
        }
    }
    return acc;
}

/// Parses "c0 + c1*tau + c2*tau^2" with coefficients in F_q[T] (the F_q text format).
OrePoly<RatFunc> parse_ore(const std::string &text, const FqConfig &field, TwistSpec twist);

} // namespace gf

#endif
