// Independent reference computations used by the unit and acceptance tests.
// Each one avoids the library routine it is compared against.
#ifndef GF_TESTS_ORACLES_HPP
#define GF_TESTS_ORACLES_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <variant>
#include <vector>

#include "gf/blowup.hpp"
#include "gf/cmfields.hpp"
#include "gf/ffpoly.hpp"
#include "gf/ore.hpp"

namespace oracle
{

using gf::BigInt;
using gf::BigRat;
using gf::FqConfig;
using gf::FqElement;
using gf::FqPoly;

// --- residues ------------------------------------------------------------------------

/// Schoolbook remainder on raw coefficient vectors (low to high), using only
/// field arithmetic.
inline std::vector<FqElement> naive_mod(std::vector<FqElement> f, const std::vector<FqElement> &g)
{
    const std::size_t dg = g.size() - 1;
    const FqElement inv = g.back().inverse();
    while (f.size() > dg) {
        const FqElement c = f.back() * inv;
        const std::size_t shift = f.size() - 1 - dg;
        for (std::size_t i = 0; i <= dg; ++i) {
            f[shift + i] -= c * g[i];
        }
        f.pop_back();
    }
    while (!f.empty() && f.back().is_zero()) {
        f.pop_back();
    }
    return f;
}

/// Every polynomial of degree < n over F_q, as coefficient vectors.
inline std::vector<std::vector<FqElement>> all_polys_below(const FqConfig &f, std::size_t n)
{
    const auto elems = gf::enumerate_field(f);
    std::vector<std::vector<FqElement>> out;
    std::vector<std::size_t> idx(n, 0);
    while (true) {
        std::vector<FqElement> p;
        for (std::size_t i = 0; i < n; ++i) {
            p.push_back(elems[idx[i]]);
        }
        out.push_back(std::move(p));
        std::size_t k = 0;
        while (k < n && ++idx[k] == elems.size()) {
            idx[k++] = 0;
        }
        if (k == n) {
            break;
        }
    }
    return out;
}

/// |F_q[T]/(g)| by reducing every polynomial of degree <= deg g + 1 and counting
/// distinct remainders.
inline std::size_t brute_residue_count(const FqPoly &g)
{
    std::set<std::vector<std::uint64_t>> seen;
    for (const auto &p : all_polys_below(g.field(), static_cast<std::size_t>(g.degree()) + 2)) {
        std::vector<std::uint64_t> key;
        for (const auto &c : naive_mod(p, g.coeffs())) {
            key.push_back(c.index());
        }
        seen.insert(std::move(key));
    }
    return seen.size();
}

/// All monic polynomials of exact degree d.
inline std::vector<FqPoly> monic_polys(const FqConfig &f, int d)
{
    std::vector<FqPoly> out;
    for (auto c : all_polys_below(f, static_cast<std::size_t>(d))) {
        c.push_back(FqElement::one(f));
        out.emplace_back(f, std::move(c));
    }
    return out;
}

/// Irreducibility by trial division with every monic polynomial of degree <= d/2.
inline bool brute_irreducible(const FqPoly &a)
{
    if (a.degree() < 1) {
        return false;
    }
    for (int d = 1; 2 * d <= a.degree(); ++d) {
        for (const auto &m : monic_polys(a.field(), d)) {
            if (naive_mod(a.coeffs(), m.coeffs()).empty()) {
                return false;
            }
        }
    }
    return true;
}

// --- Ore polynomials ---------------------------------------------------------------------

/// x^e by repeated multiplication.
template <typename C>
C naive_pow(const C &x, std::uint64_t e)
{
    C r = x.one_like();
    for (std::uint64_t i = 0; i < e; ++i) {
        r = r * x;
    }
    return r;
}

/// (sum a_i tau^i)(sum b_j tau^j) by moving each tau^i past b_j one factor at a
/// time: tau b = b^e tau.
template <typename C>
std::vector<C> expand_product(const std::vector<C> &a, const std::vector<C> &b, std::uint64_t e, const C &zero)
{
    std::vector<C> out(a.size() + b.size(), zero);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            C moved = b[j];
            for (std::size_t k = 0; k < i; ++k) {
                moved = naive_pow(moved, e);
            }
            out[i + j] = out[i + j] + a[i] * moved;
        }
    }
    while (!out.empty() && out.back().is_zero()) {
        out.pop_back();
    }
    return out;
}

// --- skew Laurent words --------------------------------------------------------------------

/// Normal form t^n b of a monomial word, found by rewriting adjacent pairs:
/// b t = t sigma^-1(b) and b t^-1 = t^-1 sigma(b), then collapsing t t^-1 and
/// multiplying neighbouring coefficients.
template <typename C>
std::pair<int, C> rewrite_word(const std::vector<std::variant<int, C>> &word, const gf::Automorphism<C> &sigma,
                               const C &one)
{
    // Expand to single letters: +1 / -1 for t^{+-1}, coefficients as is.
    std::vector<std::variant<int, C>> w;
    for (const auto &tok : word) {
        if (const int *k = std::get_if<int>(&tok)) {
            for (int i = 0; i < (*k < 0 ? -*k : *k); ++i) {
                w.emplace_back(*k < 0 ? -1 : 1);
            }
        } else {
            w.push_back(tok);
        }
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
            const bool ci = std::holds_alternative<C>(w[i]);
            const bool cj = std::holds_alternative<C>(w[i + 1]);
            if (ci && cj) {
                w[i] = std::get<C>(w[i]) * std::get<C>(w[i + 1]);
                w.erase(w.begin() + static_cast<long>(i) + 1);
                changed = true;
                break;
            }
            if (ci && !cj) {
                const int s = std::get<int>(w[i + 1]);
                const C b = std::get<C>(w[i]);
                const C moved = s > 0 ? sigma.inverse(b) : sigma.forward(b);
                w[i] = s;
                w[i + 1] = moved;
                changed = true;
                break;
            }
            if (!ci && !cj && std::get<int>(w[i]) == -std::get<int>(w[i + 1])) {
                w.erase(w.begin() + static_cast<long>(i), w.begin() + static_cast<long>(i) + 2);
                changed = true;
                break;
            }
        }
    }
    int n = 0;
    C b = one;
    for (const auto &tok : w) {
        if (const int *k = std::get_if<int>(&tok)) {
            n += *k;
        } else {
            b = std::get<C>(tok);
        }
    }
    return {n, b};
}

// --- quadratic forms and units --------------------------------------------------------

/// h(D) for a fundamental D < 0 from the analytic class number formula
/// h = -(w / 2|D|) sum_{a=1}^{|D|} (D/a) a.
inline long analytic_class_number(long D)
{
    const long n = -D;
    long s = 0;
    for (long a = 1; a <= n; ++a) {
        s += static_cast<long>(mpz_kronecker_si(BigInt(D).get_mpz_t(), a)) * a;
    }
    const long w = D == -3 ? 6 : D == -4 ? 4 : 2;
    return -w * s / (2 * n);
}

/// Reduced primitive forms straight from the definition, scanning every
/// (a, b, c) with a <= c, |b| <= a, b^2 - 4ac = D.
inline std::vector<gf::QuadForm> brute_reduced_forms(long D)
{
    std::vector<gf::QuadForm> out;
    for (long a = 1; a * a <= -D; ++a) {
        for (long b = -a; b <= a; ++b) {
            for (long c = a; 4 * a * c <= b * b - D; ++c) {
                if (b * b - 4 * a * c != D) {
                    continue;
                }
                if ((b < 0) && (-b == a || a == c)) {
                    continue;
                }
                BigInt g = gcd(gcd(BigInt(a), BigInt(b)), BigInt(c));
                if (g != 1) {
                    continue;
                }
                out.push_back({a, b, c});
            }
        }
    }
    return out;
}

/// Smallest (x, y) with y >= 1 and x^2 - d y^2 = +-k^2, by direct search over y.
/// k = 1 for Z[sqrt d]; k = 2 for (x + y sqrt d)/2 with x = y mod 2.
inline std::optional<std::pair<BigInt, BigInt>> brute_unit(long d, long k, long y_limit)
{
    for (long y = 1; y <= y_limit; ++y) {
        const BigInt dy2 = BigInt(d) * y * y;
        for (long sgn : {-1L, 1L}) {
            const BigInt x2 = dy2 + sgn * k * k;
            if (x2 > 0 && mpz_perfect_square_p(x2.get_mpz_t())) {
                const BigInt x = gf::isqrt(x2);
                if (k == 1 || (x % 2 == y % 2)) {
                    return std::make_pair(x, BigInt(y));
                }
            }
        }
    }
    return std::nullopt;
}

// --- plane curves -----------------------------------------------------------------------

/// Determinant over Q by Gaussian elimination with pivoting on nonzero entries.
inline BigRat rational_det(std::vector<std::vector<BigRat>> m)
{
    const std::size_t n = m.size();
    BigRat det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m[piv][c] == 0) {
            ++piv;
        }
        if (piv == n) {
            return 0;
        }
        if (piv != c) {
            std::swap(m[piv], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            const BigRat f = m[r][c] / m[c][c];
            for (std::size_t k = c; k < n; ++k) {
                m[r][k] -= f * m[c][k];
            }
        }
    }
    return det;
}

/// Resultant of two univariate polynomials (ascending coefficients) of formal
/// degrees m and n via the Sylvester matrix.
inline BigRat sylvester_resultant(const std::vector<BigRat> &a, const std::vector<BigRat> &b, std::size_t m,
                                  std::size_t n)
{
    const std::size_t size = m + n;
    std::vector<std::vector<BigRat>> s(size, std::vector<BigRat>(size, 0));
    auto co = [](const std::vector<BigRat> &p, std::size_t i) { return i < p.size() ? p[i] : BigRat(0); };
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t i = 0; i <= m; ++i) {
            s[r][r + i] = co(a, m - i);
        }
    }
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t i = 0; i <= n; ++i) {
            s[n + r][r + i] = co(b, n - i);
        }
    }
    return rational_det(std::move(s));
}

/// f(x0, y) as ascending y-coefficients, computed term by term.
inline std::vector<BigRat> substitute_x(const gf::BiPoly &f, const BigRat &x0)
{
    std::vector<BigRat> out(static_cast<std::size_t>(std::max(f.degree_y(), 0)) + 1, 0);
    for (const auto &[ij, c] : f.terms()) {
        BigRat p = 1;
        for (int k = 0; k < ij.first; ++k) {
            p *= x0;
        }
        out[static_cast<std::size_t>(ij.second)] += c * p;
    }
    return out;
}

/// Smooth affine curves with no singular points at all.
inline const std::vector<std::string> &smooth_corpus()
{
    static const std::vector<std::string> curves = {
        "y - x^2",
        "x^2 + y^2 - 1",
        "y^2 - x^3 - x",
        "y^2 - x^3 + x",
        "y^2 - x^3 - 1",
        "x^2 - 2y^2 - 3",
        "y - x^5 - x - 1",
        "x*y - 1",
        "y^2 - x^5 + x",
        "x^4 + y^4 - 1",
    };
    return curves;
}

/// True if no half-integer grid point in [-range/2, range/2]^2 is a singular
/// point of f.
inline bool gradient_nonzero_on_grid(const gf::BiPoly &f, long range)
{
    const gf::BiPoly fx = f.dx();
    const gf::BiPoly fy = f.dy();
    for (long a = -range; a <= range; ++a) {
        for (long b = -range; b <= range; ++b) {
            const BigRat x(a, 2), y(b, 2);
            if (f(x, y) == 0 && fx(x, y) == 0 && fy(x, y) == 0) {
                return false;
            }
        }
    }
    return true;
}

} // namespace oracle

#endif
