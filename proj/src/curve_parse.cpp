#include <cctype>

#include "gf/blowup.hpp"
#include "gf/errors.hpp"

namespace gf
{

namespace
{

class CurveParser
{
public:
    explicit CurveParser(const std::string &text) : m_text(text) {}

    BiPoly parse()
    {
        BiPoly f;
        skip();
        int sign = 1;
        if (peek() == '+' || peek() == '-') {
            sign = peek() == '-' ? -1 : 1;
            ++m_pos;
        }
        while (true) {
            f = f + term(sign);
            skip();
            if (at_end()) {
                break;
            }
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++m_pos;
                continue;
            }
            throw SyntaxError(std::string("unexpected '") + peek() + "'", m_pos);
        }
        return f;
    }

private:
    bool at_end()
    {
        return m_pos >= m_text.size();
    }

    char peek()
    {
        return at_end() ? '\0' : m_text[m_pos];
    }

    void skip()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(m_text[m_pos]))) {
            ++m_pos;
        }
    }

    bool digit()
    {
        return !at_end() && std::isdigit(static_cast<unsigned char>(m_text[m_pos]));
    }

    BigInt integer()
    {
        skip();
        if (!digit()) {
            throw SyntaxError("expected a number", m_pos);
        }
        const std::size_t start = m_pos;
        while (digit()) {
            ++m_pos;
        }
        return BigInt(m_text.substr(start, m_pos - start));
    }

    int exponent()
    {
        skip();
        const std::size_t at = m_pos;
        BigInt e = integer();
        if (e > 10000) {
            throw SyntaxError("exponent too large", at);
        }
        return static_cast<int>(e.get_si());
    }

    BiPoly term(int sign)
    {
        skip();
        const std::size_t start = m_pos;
        bool have_coeff = false;
        BigRat coeff(sign);
        if (digit()) {
            BigInt num = integer();
            skip();
            BigInt den = 1;
            if (peek() == '/') {
                ++m_pos;
                skip();
                const std::size_t at = m_pos;
                den = integer();
                if (den == 0) {
                    throw SyntaxError("zero denominator", at);
                }
            }
            coeff = BigRat(num, den) * sign;
            coeff.canonicalize();
            have_coeff = true;
            skip();
            if (peek() == '*') {
                ++m_pos;
                skip();
                if (peek() != 'x' && peek() != 'y') {
                    throw SyntaxError("expected x or y after '*'", m_pos);
                }
            }
        }
        int ex = 0;
        int ey = 0;
        bool seen_x = false;
        bool seen_y = false;
        while (true) {
            skip();
            const char c = peek();
            if (c != 'x' && c != 'y') {
                break;
            }
            bool &seen = c == 'x' ? seen_x : seen_y;
            if (seen) {
                throw SyntaxError(std::string("repeated variable '") + c + "'", m_pos);
            }
            seen = true;
            ++m_pos;
            int e = 1;
            skip();
            if (peek() == '^') {
                ++m_pos;
                e = exponent();
            }
            (c == 'x' ? ex : ey) = e;
            skip();
            if (peek() == '*') {
                ++m_pos;
                skip();
                if (peek() != 'x' && peek() != 'y') {
                    throw SyntaxError("expected x or y after '*'", m_pos);
                }
            }
        }
        if (!have_coeff && !seen_x && !seen_y) {
            throw SyntaxError("expected a term", start);
        }
        return BiPoly::monomial(coeff, ex, ey);
    }

    const std::string &m_text;
    std::size_t m_pos = 0;
};

} // namespace

PlaneCurve parse_curve(const std::string &text, std::optional<std::uint32_t> p)
{
    BiPoly f = CurveParser(text).parse();
    return make_curve(std::move(f), p);
}

} // namespace gf
