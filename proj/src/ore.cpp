#include "gf/ore.hpp"

#include <cctype>

namespace gf
{

// --- RatFunc -------------------------------------------------------------------

RatFunc::RatFunc(FqConfig field) : m_num(field), m_den(FqPoly::constant(FqElement::one(field))) {}

RatFunc::RatFunc(FqPoly num) : m_num(std::move(num)), m_den(m_num.one_like()) {}

RatFunc::RatFunc(FqPoly num, FqPoly den) : m_num(std::move(num)), m_den(std::move(den))
{
    if (m_den.is_zero()) {
        throw DomainError("rational function with zero denominator");
    }
    reduce();
}

void RatFunc::reduce()
{
    if (m_num.is_zero()) {
        m_den = m_num.one_like();
        return;
    }
    FqPoly g = gcd(m_num, m_den);
    if (!g.is_one()) {
        m_num = m_num / g;
        m_den = m_den / g;
    }
    FqElement inv = m_den.lc().inverse();
    m_num = inv * m_num;
    m_den = inv * m_den;
}

RatFunc RatFunc::inverse() const
{
    if (is_zero()) {
        throw DomainError("inverse of zero in F_q(T)");
    }
    return RatFunc(m_den, m_num);
}

RatFunc RatFunc::operator-() const
{
    RatFunc r(*this);
    r.m_num = -r.m_num;
    return r;
}

RatFunc &RatFunc::operator+=(const RatFunc &o)
{
    if (m_den == o.m_den) {
        m_num += o.m_num;
    } else {
        m_num = m_num * o.m_den + o.m_num * m_den;
        m_den = m_den * o.m_den;
    }
    reduce();
    return *this;
}

RatFunc &RatFunc::operator-=(const RatFunc &o)
{
    return *this += -o;
}

RatFunc &RatFunc::operator*=(const RatFunc &o)
{
    m_num *= o.m_num;
    m_den *= o.m_den;
    if (!m_den.is_one()) {
        reduce();
    } else if (m_num.is_zero()) {
        m_den = m_num.one_like();
    }
    return *this;
}

RatFunc &RatFunc::operator/=(const RatFunc &o)
{
    return *this *= o.inverse();
}

std::string RatFunc::to_string() const
{
    if (m_den.is_one()) {
        return m_num.to_string();
    }
    return "(" + m_num.to_string() + ")/(" + m_den.to_string() + ")";
}

// --- Frobenius --------------------------------------------------------------------

FqElement frobenius(const FqElement &x, std::uint64_t e)
{
    return x.pow(e);
}

FqPoly frobenius(const FqPoly &x, std::uint64_t e)
{
    if (e == 1 || x.is_zero()) {
        return x;
    }
    std::vector<FqElement> c(static_cast<std::size_t>(x.degree()) * e + 1, FqElement::zero(x.field()));
    for (std::size_t i = 0; i < x.coeffs().size(); ++i) {
        c[i * e] = x.coeffs()[i].pow(e);
    }
    return FqPoly(x.field(), std::move(c));
}

RatFunc frobenius(const RatFunc &x, std::uint64_t e)
{
    return RatFunc(frobenius(x.num(), e), frobenius(x.den(), e));
}

std::uint32_t characteristic(const FqElement &x)
{
    return x.field().p();
}

std::uint32_t characteristic(const FqPoly &x)
{
    return x.field().p();
}

std::uint32_t characteristic(const RatFunc &x)
{
    return x.field().p();
}

void TwistSpec::validate(std::uint32_t p) const
{
    if (exponent == 0) {
        throw DomainError("twist exponent must be positive");
    }
    std::uint64_t t = exponent;
    while (t % p == 0) {
        t /= p;
    }
    if (t != 1) {
        throw DomainError("twist exponent " + std::to_string(exponent) + " is not a power of the characteristic " +
                          std::to_string(p));
    }
}

Automorphism<FqElement> frobenius_automorphism(const FqConfig &field, int k)
{
    const int n = field.n();
    const int kk = ((k % n) + n) % n;
    const std::uint64_t fwd = ipow(BigInt(field.p()), static_cast<unsigned long>(kk)).get_ui();
    const std::uint64_t inv = ipow(BigInt(field.p()), static_cast<unsigned long>((n - kk) % n)).get_ui();
    return Automorphism<FqElement>{"x^" + std::to_string(fwd), [fwd](const FqElement &x) { return x.pow(fwd); },
                                   [inv](const FqElement &x) { return x.pow(inv); }};
}

Automorphism<RatFunc> frobenius_endomorphism(const FqConfig &field, std::uint64_t e)
{
    TwistSpec{e}.validate(field.p());
    Automorphism<RatFunc> a{"x^" + std::to_string(e), [e](const RatFunc &x) { return frobenius(x, e); }, {}};
    if (e == 1) {
        a.inverse = [](const RatFunc &x) { return x; };
    }
    return a;
}

// --- text format -------------------------------------------------------------------

OrePoly<RatFunc> parse_ore(const std::string &text, const FqConfig &field, TwistSpec twist)
{
    // Split at top-level '+' / '-'; each piece is [coef][*]tau[^k] or a bare coefficient.
    std::vector<std::pair<std::string, std::size_t>> pieces; // text including sign, start offset
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c == '(') {
            ++depth;
        } else if (c == ')') {
            if (--depth < 0) {
                throw SyntaxError("unbalanced ')'", i);
            }
        } else if ((c == '+' || c == '-') && depth == 0 && i > start) {
            // A sign right after '^' or '*' would be malformed anyway; split here.
            pieces.emplace_back(text.substr(start, i - start), start);
            start = i;
        }
    }
    if (depth != 0) {
        throw SyntaxError("unbalanced '('", text.size());
    }
    pieces.emplace_back(text.substr(start), start);

    std::vector<RatFunc> coeffs;
    const RatFunc zero(field);
    for (auto &[piece, offset] : pieces) {
        std::string s = piece;
        bool negate = false;
        std::size_t lead = s.find_first_not_of(" \t");
        if (lead == std::string::npos) {
            throw SyntaxError("empty term", offset);
        }
        if (s[lead] == '+' || s[lead] == '-') {
            negate = s[lead] == '-';
            s[lead] = ' ';
        }
        std::size_t degree = 0;
        const std::size_t pos = s.rfind("tau");
        if (pos != std::string::npos) {
            std::string tail = s.substr(pos + 3);
            std::size_t t = tail.find_first_not_of(" \t");
            degree = 1;
            if (t != std::string::npos) {
                if (tail[t] != '^') {
                    throw SyntaxError("unexpected text after tau", offset + pos + 3 + t);
                }
                std::size_t d0 = tail.find_first_not_of(" \t", t + 1);
                std::size_t d1 = d0;
                while (d1 < tail.size() && std::isdigit(static_cast<unsigned char>(tail[d1]))) {
                    ++d1;
                }
                if (d0 == std::string::npos || d1 == d0 || tail.find_first_not_of(" \t", d1) != std::string::npos) {
                    throw SyntaxError("expected tau exponent", offset + pos + 3 + t + 1);
                }
                degree = std::stoul(tail.substr(d0, d1 - d0));
            }
            s = s.substr(0, pos);
            std::size_t star = s.find_last_not_of(" \t");
            if (star != std::string::npos && s[star] == '*') {
                s = s.substr(0, star);
            } else if (star != std::string::npos) {
                throw SyntaxError("expected '*' before tau", offset + star + 1);
            }
        }
        FqPoly c = s.find_first_not_of(" \t") == std::string::npos ? FqPoly::constant(FqElement::one(field))
                                                                     : parse_fqpoly(s, field);
        if (negate) {
            c = -c;
        }
        if (coeffs.size() <= degree) {
            coeffs.resize(degree + 1, zero);
        }
        coeffs[degree] += RatFunc(c);
    }
    return OrePoly<RatFunc>(std::move(coeffs), zero, twist);
}

} // namespace gf
