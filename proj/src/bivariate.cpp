#include <algorithm>

#include "gf/blowup.hpp"
#include "gf/errors.hpp"

namespace gf
{

// --- QPoly ------------------------------------------------------------------------

QPoly::QPoly(std::vector<BigRat> coeffs) : m_c(std::move(coeffs))
{
    trim();
}

QPoly QPoly::constant(const BigRat &c)
{
    return QPoly({c});
}

QPoly QPoly::linear_root(const BigRat &r)
{
    return QPoly({-r, BigRat(1)});
}

void QPoly::trim()
{
    while (!m_c.empty() && m_c.back() == 0) {
        m_c.pop_back();
    }
}

BigRat QPoly::coeff(int i) const
{
    return i >= 0 && i < static_cast<int>(m_c.size()) ? m_c[static_cast<std::size_t>(i)] : BigRat(0);
}

BigRat QPoly::operator()(const BigRat &x) const
{
    BigRat acc = 0;
    for (std::size_t k = m_c.size(); k-- > 0;) {
        acc = acc * x + m_c[k];
    }
    return acc;
}

QPoly QPoly::derivative() const
{
    std::vector<BigRat> d;
    for (std::size_t i = 1; i < m_c.size(); ++i) {
        d.push_back(m_c[i] * static_cast<long>(i));
    }
    return QPoly(std::move(d));
}

QPoly QPoly::monic() const
{
    if (m_c.empty()) {
        return *this;
    }
    std::vector<BigRat> c = m_c;
    const BigRat l = m_c.back();
    for (auto &x : c) {
        x /= l;
    }
    return QPoly(std::move(c));
}

QPoly QPoly::operator-() const
{
    std::vector<BigRat> c = m_c;
    for (auto &x : c) {
        x = -x;
    }
    return QPoly(std::move(c));
}

QPoly operator+(const QPoly &a, const QPoly &b)
{
    std::vector<BigRat> c(std::max(a.m_c.size(), b.m_c.size()), BigRat(0));
    for (std::size_t i = 0; i < a.m_c.size(); ++i) {
        c[i] += a.m_c[i];
    }
    for (std::size_t i = 0; i < b.m_c.size(); ++i) {
        c[i] += b.m_c[i];
    }
    return QPoly(std::move(c));
}

QPoly operator-(const QPoly &a, const QPoly &b)
{
    return a + (-b);
}

QPoly operator*(const QPoly &a, const QPoly &b)
{
    if (a.is_zero() || b.is_zero()) {
        return QPoly();
    }
    std::vector<BigRat> c(a.m_c.size() + b.m_c.size() - 1, BigRat(0));
    for (std::size_t i = 0; i < a.m_c.size(); ++i) {
        for (std::size_t j = 0; j < b.m_c.size(); ++j) {
            c[i + j] += a.m_c[i] * b.m_c[j];
        }
    }
    return QPoly(std::move(c));
}

std::pair<QPoly, QPoly> divmod(const QPoly &a, const QPoly &b)
{
    if (b.is_zero()) {
        throw DomainError("polynomial division by zero");
    }
    std::vector<BigRat> r = a.m_c;
    if (a.degree() < b.degree()) {
        return {QPoly(), a};
    }
    std::vector<BigRat> q(static_cast<std::size_t>(a.degree() - b.degree() + 1), BigRat(0));
    const BigRat l = b.lc();
    const std::size_t db = static_cast<std::size_t>(b.degree());
    for (std::size_t k = q.size(); k-- > 0;) {
        const BigRat t = r[k + db] / l;
        q[k] = t;
        if (t == 0) {
            continue;
        }
        for (std::size_t i = 0; i <= db; ++i) {
            r[k + i] -= t * b.m_c[i];
        }
    }
    r.resize(db);
    return {QPoly(std::move(q)), QPoly(std::move(r))};
}

std::string QPoly::to_string(const std::string &var) const
{
    if (m_c.empty()) {
        return "0";
    }
    std::string out;
    for (std::size_t k = m_c.size(); k-- > 0;) {
        const BigRat &c = m_c[k];
        if (c == 0) {
            continue;
        }
        const bool neg = c < 0;
        const BigRat ac = abs(c);
        if (out.empty()) {
            out += neg ? "-" : "";
        } else {
            out += neg ? " - " : " + ";
        }
        const bool unit = ac == 1;
        if (k == 0 || !unit) {
            out += ac.get_str();
            if (k > 0) {
                out += "*";
            }
        }
        if (k >= 1) {
            out += var;
        }
        if (k >= 2) {
            out += "^" + std::to_string(k);
        }
    }
    return out;
}

QPoly gcd(const QPoly &a, const QPoly &b)
{
    QPoly x = a;
    QPoly y = b;
    while (!y.is_zero()) {
        QPoly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

QPoly squarefree_part(const QPoly &f)
{
    if (f.degree() < 1) {
        return f.monic();
    }
    return (f / gcd(f, f.derivative())).monic();
}

namespace
{

std::vector<QPoly> sturm_sequence(const QPoly &f)
{
    std::vector<QPoly> s{f, f.derivative()};
    while (!s.back().is_zero()) {
        QPoly r = -(s[s.size() - 2] % s.back());
        if (r.is_zero()) {
            break;
        }
        s.push_back(std::move(r));
    }
    return s;
}

int sign_changes(const std::vector<QPoly> &seq, const BigRat &x)
{
    int changes = 0;
    int last = 0;
    for (const auto &p : seq) {
        const int s = sgn(p(x));
        if (s == 0) {
            continue;
        }
        if (last != 0 && s != last) {
            ++changes;
        }
        last = s;
    }
    return changes;
}

// 1 + max |a_i / a_n|, a bound on the absolute value of every root.
BigRat cauchy_bound(const QPoly &f)
{
    BigRat m = 0;
    for (int i = 0; i < f.degree(); ++i) {
        BigRat r = abs(f.coeff(i) / f.lc());
        if (r > m) {
            m = r;
        }
    }
    return m + 1;
}

} // namespace

std::size_t count_real_roots(const QPoly &f, const BigRat &a, const BigRat &b)
{
    const QPoly g = squarefree_part(f);
    if (g.degree() < 1) {
        return 0;
    }
    const auto seq = sturm_sequence(g);
    return static_cast<std::size_t>(sign_changes(seq, a) - sign_changes(seq, b));
}

BigRat simplest_rational_between(BigRat lo, BigRat hi)
{
    if (hi < lo) {
        std::swap(lo, hi);
    }
    if (lo <= 0 && hi >= 0) {
        return 0;
    }
    if (hi < 0) {
        return -simplest_rational_between(-hi, -lo);
    }
    BigInt fl;
    mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
    if (BigRat(fl) == lo) {
        return lo;
    }
    const BigInt ce = fl + 1;
    if (BigRat(ce) <= hi) {
        return BigRat(ce);
    }
    // lo, hi lie in (fl, fl + 1): recurse on the reciprocals of the fractional parts.
    const BigRat inner = simplest_rational_between(1 / (hi - fl), 1 / (lo - fl));
    BigRat r = BigRat(fl) + 1 / inner;
    r.canonicalize();
    return r;
}

std::vector<BigRat> rational_roots(const QPoly &f)
{
    std::vector<BigRat> out;
    if (f.is_zero()) {
        throw DomainError("rational_roots of the zero polynomial");
    }
    QPoly g = squarefree_part(f);
    if (g.degree() < 1) {
        return out;
    }
    // Integer coefficients: a rational root p/q has q | lc.
    BigInt den = 1;
    for (const auto &c : g.coeffs()) {
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    }
    BigInt lc = abs(BigInt(g.lc() * den));
    const BigRat width = BigRat(1) / (BigRat(lc * lc) * 4);

    const auto seq = sturm_sequence(g);
    const BigRat bound = cauchy_bound(g);
    struct Interval {
        BigRat a, b; // (a, b]
        int count;
    };
    std::vector<Interval> work{{-bound, bound, sign_changes(seq, -bound) - sign_changes(seq, bound)}};
    while (!work.empty()) {
        Interval iv = work.back();
        work.pop_back();
        if (iv.count == 0) {
            continue;
        }
        if (iv.count == 1 && iv.b - iv.a < width) {
            if (g(iv.b) == 0) {
                out.push_back(iv.b);
                continue;
            }
            BigRat cand = simplest_rational_between(iv.a, iv.b);
            if (cand != iv.a && g(cand) == 0) {
                out.push_back(cand);
            }
            continue;
        }
        if (iv.count == 1 && g(iv.b) != 0 && g(iv.a) != 0 && sgn(g(iv.a)) == sgn(g(iv.b))) {
            // Single root but no sign change at the ends: cannot happen for squarefree g.
            throw DomainError("root isolation failed");
        }
        BigRat mid = (iv.a + iv.b) / 2;
        mid.canonicalize();
        const int vm = sign_changes(seq, mid);
        const int left = sign_changes(seq, iv.a) - vm;
        work.push_back({mid, iv.b, iv.count - left});
        work.push_back({iv.a, mid, left});
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// --- BiPoly -----------------------------------------------------------------------

BiPoly BiPoly::monomial(const BigRat &c, int i, int j)
{
    BiPoly r;
    r.add_term(c, i, j);
    return r;
}

void BiPoly::add_term(const BigRat &c, int i, int j)
{
    if (c == 0) {
        return;
    }
    auto [it, inserted] = m_terms.try_emplace(Key{i, j}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            m_terms.erase(it);
        }
    }
}

BigRat BiPoly::coeff(int i, int j) const
{
    auto it = m_terms.find(Key{i, j});
    return it == m_terms.end() ? BigRat(0) : it->second;
}

int BiPoly::total_degree() const
{
    int d = -1;
    for (const auto &[k, c] : m_terms) {
        d = std::max(d, k.first + k.second);
    }
    return d;
}

int BiPoly::degree_x() const
{
    int d = -1;
    for (const auto &[k, c] : m_terms) {
        d = std::max(d, k.first);
    }
    return d;
}

int BiPoly::degree_y() const
{
    int d = -1;
    for (const auto &[k, c] : m_terms) {
        d = std::max(d, k.second);
    }
    return d;
}

int BiPoly::lowest_degree() const
{
    if (m_terms.empty()) {
        return -1;
    }
    int d = m_terms.begin()->first.first + m_terms.begin()->first.second;
    for (const auto &[k, c] : m_terms) {
        d = std::min(d, k.first + k.second);
    }
    return d;
}

BiPoly BiPoly::operator-() const
{
    BiPoly r = *this;
    for (auto &[k, c] : r.m_terms) {
        c = -c;
    }
    return r;
}

BiPoly operator+(const BiPoly &a, const BiPoly &b)
{
    BiPoly r = a;
    for (const auto &[k, c] : b.m_terms) {
        r.add_term(c, k.first, k.second);
    }
    return r;
}

BiPoly operator-(const BiPoly &a, const BiPoly &b)
{
    return a + (-b);
}

BiPoly operator*(const BiPoly &a, const BiPoly &b)
{
    BiPoly r;
    for (const auto &[ka, ca] : a.m_terms) {
        for (const auto &[kb, cb] : b.m_terms) {
            r.add_term(ca * cb, ka.first + kb.first, ka.second + kb.second);
        }
    }
    return r;
}

BiPoly BiPoly::dx() const
{
    BiPoly r;
    for (const auto &[k, c] : m_terms) {
        if (k.first > 0) {
            r.add_term(c * k.first, k.first - 1, k.second);
        }
    }
    return r;
}

BiPoly BiPoly::dy() const
{
    BiPoly r;
    for (const auto &[k, c] : m_terms) {
        if (k.second > 0) {
            r.add_term(c * k.second, k.first, k.second - 1);
        }
    }
    return r;
}

namespace
{

BigRat rat_pow(const BigRat &x, int e)
{
    BigRat r = 1;
    for (int i = 0; i < e; ++i) {
        r *= x;
    }
    return r;
}

// Binomial coefficients C(n, 0..n).
std::vector<BigInt> binomials(int n)
{
    std::vector<BigInt> c(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        mpz_bin_uiui(c[static_cast<std::size_t>(k)].get_mpz_t(), static_cast<unsigned long>(n),
                     static_cast<unsigned long>(k));
    }
    return c;
}

} // namespace

BigRat BiPoly::operator()(const BigRat &x, const BigRat &y) const
{
    BigRat acc = 0;
    for (const auto &[k, c] : m_terms) {
        acc += c * rat_pow(x, k.first) * rat_pow(y, k.second);
    }
    return acc;
}

BiPoly BiPoly::translate(const BigRat &a, const BigRat &b) const
{
    BiPoly r;
    for (const auto &[k, c] : m_terms) {
        const auto bx = binomials(k.first);
        const auto by = binomials(k.second);
        for (int s = 0; s <= k.first; ++s) {
            const BigRat cx = c * BigRat(bx[static_cast<std::size_t>(s)]) * rat_pow(a, k.first - s);
            if (cx == 0) {
                continue;
            }
            for (int t = 0; t <= k.second; ++t) {
                r.add_term(cx * BigRat(by[static_cast<std::size_t>(t)]) * rat_pow(b, k.second - t), s, t);
            }
        }
    }
    return r;
}

QPoly BiPoly::at_x(const BigRat &x0) const
{
    std::vector<BigRat> c(static_cast<std::size_t>(std::max(degree_y(), 0)) + 1, BigRat(0));
    for (const auto &[k, v] : m_terms) {
        c[static_cast<std::size_t>(k.second)] += v * rat_pow(x0, k.first);
    }
    return QPoly(std::move(c));
}

QPoly BiPoly::at_y(const BigRat &y0) const
{
    std::vector<BigRat> c(static_cast<std::size_t>(std::max(degree_x(), 0)) + 1, BigRat(0));
    for (const auto &[k, v] : m_terms) {
        c[static_cast<std::size_t>(k.first)] += v * rat_pow(y0, k.second);
    }
    return QPoly(std::move(c));
}

std::vector<QPoly> BiPoly::y_coefficients() const
{
    const int dy = degree_y();
    const int dx = degree_x();
    if (dy < 0) {
        return {};
    }
    std::vector<std::vector<BigRat>> c(static_cast<std::size_t>(dy) + 1,
                                       std::vector<BigRat>(static_cast<std::size_t>(dx) + 1, BigRat(0)));
    for (const auto &[k, v] : m_terms) {
        c[static_cast<std::size_t>(k.second)][static_cast<std::size_t>(k.first)] = v;
    }
    std::vector<QPoly> out;
    for (auto &row : c) {
        out.emplace_back(std::move(row));
    }
    return out;
}

BiPoly BiPoly::from_y_coefficients(const std::vector<QPoly> &c)
{
    BiPoly r;
    for (std::size_t j = 0; j < c.size(); ++j) {
        for (std::size_t i = 0; i < c[j].coeffs().size(); ++i) {
            r.add_term(c[j].coeffs()[i], static_cast<int>(i), static_cast<int>(j));
        }
    }
    return r;
}

namespace
{

// Canonical order: total degree descending, then x-degree descending.
std::vector<std::pair<BiPoly::Key, BigRat>> canonical_terms(const std::map<BiPoly::Key, BigRat> &m)
{
    std::vector<std::pair<BiPoly::Key, BigRat>> v(m.begin(), m.end());
    std::sort(v.begin(), v.end(), [](const auto &a, const auto &b) {
        const int da = a.first.first + a.first.second;
        const int db = b.first.first + b.first.second;
        return da != db ? da > db : a.first.first > b.first.first;
    });
    return v;
}

} // namespace

BiPoly BiPoly::primitive() const
{
    if (m_terms.empty()) {
        return *this;
    }
    BigInt den = 1;
    BigInt g = 0;
    for (const auto &[k, c] : m_terms) {
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    }
    for (const auto &[k, c] : m_terms) {
        BigInt n = BigInt(c * den);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    }
    BigRat scale = BigRat(den) / BigRat(g);
    if (canonical_terms(m_terms).front().second < 0) {
        scale = -scale;
    }
    BiPoly r;
    for (const auto &[k, c] : m_terms) {
        r.add_term(c * scale, k.first, k.second);
    }
    return r;
}

std::string BiPoly::to_string() const
{
    if (m_terms.empty()) {
        return "0";
    }
    std::string out;
    for (const auto &[k, c] : canonical_terms(m_terms)) {
        const bool neg = c < 0;
        const BigRat ac = abs(c);
        if (out.empty()) {
            out += neg ? "-" : "";
        } else {
            out += neg ? " - " : " + ";
        }
        const bool constant = k.first == 0 && k.second == 0;
        if (constant || ac != 1) {
            out += ac.get_str();
        }
        if (k.first > 0) {
            out += "x";
            if (k.first > 1) {
                out += "^" + std::to_string(k.first);
            }
        }
        if (k.second > 0) {
            out += "y";
            if (k.second > 1) {
                out += "^" + std::to_string(k.second);
            }
        }
    }
    return out;
}

// --- resultant ------------------------------------------------------------------------

namespace
{

BigRat determinant(std::vector<std::vector<BigRat>> m)
{
    const std::size_t n = m.size();
    BigRat det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col] == 0) {
            ++piv;
        }
        if (piv == n) {
            return 0;
        }
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) {
                continue;
            }
            const BigRat f = m[r][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c) {
                m[r][c] -= f * m[col][c];
            }
        }
    }
    return det;
}

// Sylvester determinant of two polynomials given by formal coefficient lists
// (ascending, leading entries may be zero).
BigRat sylvester(const std::vector<BigRat> &a, const std::vector<BigRat> &b)
{
    const std::size_t m = a.size() - 1;
    const std::size_t n = b.size() - 1;
    const std::size_t size = m + n;
    if (size == 0) {
        return 1;
    }
    std::vector<std::vector<BigRat>> s(size, std::vector<BigRat>(size, BigRat(0)));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t i = 0; i <= m; ++i) {
            s[r][r + i] = a[m - i];
        }
    }
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t i = 0; i <= n; ++i) {
            s[n + r][r + i] = b[n - i];
        }
    }
    return determinant(std::move(s));
}

// Newton interpolation through (x_k, y_k).
QPoly interpolate(const std::vector<BigRat> &xs, const std::vector<BigRat> &ys)
{
    const std::size_t n = xs.size();
    std::vector<BigRat> dd = ys;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = n - 1; i >= j; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
        }
    }
    QPoly result = QPoly::constant(dd[n - 1]);
    for (std::size_t k = n - 1; k-- > 0;) {
        result = result * QPoly::linear_root(xs[k]) + QPoly::constant(dd[k]);
    }
    return result;
}

} // namespace

QPoly resultant_y(const BiPoly &a, const BiPoly &b)
{
    if (a.is_zero() || b.is_zero()) {
        return QPoly();
    }
    const std::vector<QPoly> ca = a.y_coefficients();
    const std::vector<QPoly> cb = b.y_coefficients();
    const int m = static_cast<int>(ca.size()) - 1;
    const int n = static_cast<int>(cb.size()) - 1;
    const int bound = m * std::max(b.degree_x(), 0) + n * std::max(a.degree_x(), 0);
    std::vector<BigRat> xs, ys;
    for (int k = 0; k <= bound; ++k) {
        const BigRat x0(k);
        std::vector<BigRat> va, vb;
        for (const auto &c : ca) {
            va.push_back(c(x0));
        }
        for (const auto &c : cb) {
            vb.push_back(c(x0));
        }
        xs.push_back(x0);
        ys.push_back(sylvester(va, vb));
    }
    return interpolate(xs, ys);
}

} // namespace gf
