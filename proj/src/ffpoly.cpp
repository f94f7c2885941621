#include "gf/ffpoly.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "gf/errors.hpp"

namespace gf
{

namespace
{

std::uint32_t mod_p(std::int64_t v, std::uint32_t p)
{
    std::int64_t r = v % static_cast<std::int64_t>(p);
    return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

std::uint32_t mul_p(std::uint32_t a, std::uint32_t b, std::uint32_t p)
{
    return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p);
}

std::uint32_t inv_p(std::uint32_t a, std::uint32_t p)
{
    // Fermat; p is prime.
    std::uint64_t r = 1, b = a, e = p - 2;
    while (e > 0) {
        if (e & 1U) {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
}

std::vector<int> prime_divisors(int n)
{
    std::vector<int> out;
    for (int f = 2; f * f <= n; ++f) {
        if (n % f == 0) {
            out.push_back(f);
            while (n % f == 0) {
                n /= f;
            }
        }
    }
    if (n > 1) {
        out.push_back(n);
    }
    return out;
}

} // namespace

// --- FqConfig ------------------------------------------------------------------

FqConfig FqConfig::prime(std::uint32_t p)
{
    if (p < 2 || !is_probable_prime(BigInt(p))) {
        throw DomainError("characteristic " + std::to_string(p) + " is not prime");
    }
    return FqConfig(std::make_shared<const Data>(Data{p, 1, {0, 1}, BigInt(p)}));
}

FqConfig FqConfig::make(std::uint32_t p, int n)
{
    if (n < 1) {
        throw DomainError("extension degree must be >= 1");
    }
    FqConfig base = prime(p);
    if (n == 1) {
        return base;
    }
    // Enumerate monic candidates by base-p value of (c_{n-1}, ..., c_0), smallest first.
    std::vector<std::uint32_t> c(static_cast<std::size_t>(n) + 1, 0);
    c[static_cast<std::size_t>(n)] = 1;
    while (true) {
        if (c[0] != 0 && is_irreducible_mod_p(p, c)) {
            return FqConfig(std::make_shared<const Data>(Data{p, n, c, ipow(BigInt(p), static_cast<unsigned long>(n))}));
        }
        std::size_t i = 0;
        while (i < static_cast<std::size_t>(n) && ++c[i] == p) {
            c[i] = 0;
            ++i;
        }
        if (i == static_cast<std::size_t>(n)) {
            throw DomainError("no irreducible polynomial found"); // unreachable for prime p
        }
    }
}

FqConfig FqConfig::with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus)
{
    prime(p);
    for (auto &c : modulus) {
        c %= p;
    }
    while (!modulus.empty() && modulus.back() == 0) {
        modulus.pop_back();
    }
    if (modulus.size() < 2 || modulus.back() != 1) {
        throw DomainError("field modulus must be monic of degree >= 1");
    }
    if (!is_irreducible_mod_p(p, modulus)) {
        throw DomainError("field modulus is reducible over F_" + std::to_string(p));
    }
    const int n = static_cast<int>(modulus.size()) - 1;
    return FqConfig(std::make_shared<const Data>(Data{p, n, std::move(modulus), ipow(BigInt(p), static_cast<unsigned long>(n))}));
}

std::uint64_t FqConfig::q_small() const
{
    if (!q().fits_ulong_p()) {
        throw DomainError("field too large for machine-size enumeration");
    }
    return q().get_ui();
}

std::string FqConfig::modulus_string() const
{
    FqConfig fp = prime(p());
    std::vector<std::int64_t> c(modulus().begin(), modulus().end());
    return FqPoly::from_ints(fp, c).to_string("a");
}

bool is_irreducible_mod_p(std::uint32_t p, const std::vector<std::uint32_t> &coeffs)
{
    FqConfig fp = FqConfig::prime(p);
    std::vector<std::int64_t> c(coeffs.begin(), coeffs.end());
    return is_irreducible(FqPoly::from_ints(fp, c));
}

// --- FqElement -------------------------------------------------------------------

FqElement::FqElement(FqConfig field, std::vector<std::uint32_t> coords) : m_field(std::move(field)), m_coords(std::move(coords))
{
    const auto n = static_cast<std::size_t>(m_field.n());
    if (m_coords.size() > n) {
        // Reduce a longer representative modulo the field modulus.
        const auto &m = m_field.modulus();
        const std::uint32_t p = m_field.p();
        for (std::size_t k = m_coords.size(); k-- > n;) {
            std::uint32_t t = m_coords[k] % p;
            if (t == 0) {
                continue;
            }
            for (std::size_t j = 0; j <= n; ++j) {
                std::size_t idx = k - n + j;
                m_coords[idx] = mod_p(static_cast<std::int64_t>(m_coords[idx]) - static_cast<std::int64_t>(mul_p(t, m[j], p)), p);
            }
        }
    }
    m_coords.resize(n, 0);
    for (auto &c : m_coords) {
        c %= m_field.p();
    }
}

FqElement::FqElement(FqConfig field, std::int64_t integer) : m_field(std::move(field))
{
    m_coords.assign(static_cast<std::size_t>(m_field.n()), 0);
    m_coords[0] = mod_p(integer, m_field.p());
}

FqElement FqElement::generator(const FqConfig &f)
{
    std::vector<std::uint32_t> c(static_cast<std::size_t>(f.n()) + 1, 0);
    c[1] = 1;
    return FqElement(f, c);
}

FqElement FqElement::from_index(const FqConfig &f, std::uint64_t index)
{
    std::vector<std::uint32_t> c(static_cast<std::size_t>(f.n()), 0);
    for (auto &x : c) {
        x = static_cast<std::uint32_t>(index % f.p());
        index /= f.p();
    }
    if (index != 0) {
        throw DomainError("element index out of range");
    }
    return FqElement(f, c);
}

FqElement FqElement::random(const FqConfig &f, std::mt19937_64 &rng)
{
    std::uniform_int_distribution<std::uint32_t> dist(0, f.p() - 1);
    std::vector<std::uint32_t> c(static_cast<std::size_t>(f.n()));
    for (auto &x : c) {
        x = dist(rng);
    }
    return FqElement(f, c);
}

std::uint64_t FqElement::index() const
{
    std::uint64_t idx = 0;
    for (std::size_t k = m_coords.size(); k-- > 0;) {
        idx = idx * m_field.p() + m_coords[k];
    }
    return idx;
}

bool FqElement::is_zero() const
{
    return std::all_of(m_coords.begin(), m_coords.end(), [](std::uint32_t c) { return c == 0; });
}

bool FqElement::is_one() const
{
    return m_coords[0] == 1 && std::all_of(m_coords.begin() + 1, m_coords.end(), [](std::uint32_t c) { return c == 0; });
}

bool FqElement::in_prime_field() const
{
    return std::all_of(m_coords.begin() + 1, m_coords.end(), [](std::uint32_t c) { return c == 0; });
}

FqElement FqElement::operator-() const
{
    FqElement r(*this);
    for (auto &c : r.m_coords) {
        c = c == 0 ? 0 : m_field.p() - c;
    }
    return r;
}

namespace
{
void require_same(const FqConfig &a, const FqConfig &b)
{
    if (!(a == b)) {
        throw DomainError("mixed finite fields in one operation");
    }
}
} // namespace

FqElement &FqElement::operator+=(const FqElement &o)
{
    require_same(m_field, o.m_field);
    const std::uint32_t p = m_field.p();
    for (std::size_t i = 0; i < m_coords.size(); ++i) {
        m_coords[i] = static_cast<std::uint32_t>((static_cast<std::uint64_t>(m_coords[i]) + o.m_coords[i]) % p);
    }
    return *this;
}

FqElement &FqElement::operator-=(const FqElement &o)
{
    return *this += -o;
}

FqElement &FqElement::operator*=(const FqElement &o)
{
    require_same(m_field, o.m_field);
    const std::uint32_t p = m_field.p();
    const std::size_t n = m_coords.size();
    if (n == 1) {
        m_coords[0] = mul_p(m_coords[0], o.m_coords[0], p);
        return *this;
    }
    std::vector<std::uint64_t> prod(2 * n - 1, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (m_coords[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < n; ++j) {
            prod[i + j] = (prod[i + j] + static_cast<std::uint64_t>(m_coords[i]) * o.m_coords[j]) % p;
        }
    }
    const auto &m = m_field.modulus();
    for (std::size_t k = 2 * n - 1; k-- > n;) {
        std::uint64_t t = prod[k];
        if (t == 0) {
            continue;
        }
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t idx = k - n + j;
            prod[idx] = (prod[idx] + (p - t) * m[j]) % p;
        }
        prod[k] = 0;
    }
    for (std::size_t i = 0; i < n; ++i) {
        m_coords[i] = static_cast<std::uint32_t>(prod[i]);
    }
    return *this;
}

FqElement &FqElement::operator/=(const FqElement &o)
{
    return *this *= o.inverse();
}

FqElement FqElement::pow(const BigInt &e) const
{
    if (e < 0) {
        return inverse().pow(BigInt(-e));
    }
    FqElement r = one(m_field);
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        r *= r;
        if (mpz_tstbit(e.get_mpz_t(), i)) {
            r *= *this;
        }
    }
    return r;
}

FqElement FqElement::pow(std::uint64_t e) const
{
    FqElement r = one(m_field);
    FqElement b = *this;
    while (e > 0) {
        if (e & 1U) {
            r *= b;
        }
        e >>= 1;
        if (e > 0) {
            b *= b;
        }
    }
    return r;
}

FqElement FqElement::inverse() const
{
    if (is_zero()) {
        throw DomainError("inverse of zero in F_q");
    }
    if (m_field.n() == 1) {
        return FqElement(m_field, static_cast<std::int64_t>(inv_p(m_coords[0], m_field.p())));
    }
    return pow(BigInt(m_field.q() - 2));
}

std::string FqElement::to_string() const
{
    if (in_prime_field()) {
        return std::to_string(m_coords[0]);
    }
    std::vector<std::int64_t> c(m_coords.begin(), m_coords.end());
    return FqPoly::from_ints(FqConfig::prime(m_field.p()), c).to_string("a");
}

std::vector<FqElement> enumerate_field(const FqConfig &f)
{
    const std::uint64_t q = f.q_small();
    std::vector<FqElement> out;
    out.reserve(q);
    for (std::uint64_t i = 0; i < q; ++i) {
        out.push_back(FqElement::from_index(f, i));
    }
    return out;
}

// --- FqPoly ----------------------------------------------------------------------

FqPoly::FqPoly(FqConfig field) : m_field(std::move(field)) {}

FqPoly::FqPoly(FqConfig field, std::vector<FqElement> coeffs) : m_field(std::move(field)), m_coeffs(std::move(coeffs))
{
    for (const auto &c : m_coeffs) {
        require_same(m_field, c.field());
    }
    trim();
}

FqPoly FqPoly::from_ints(const FqConfig &field, const std::vector<std::int64_t> &coeffs)
{
    std::vector<FqElement> c;
    c.reserve(coeffs.size());
    for (auto v : coeffs) {
        c.emplace_back(field, v);
    }
    return FqPoly(field, std::move(c));
}

FqPoly FqPoly::constant(const FqElement &c)
{
    return FqPoly(c.field(), {c});
}

FqPoly FqPoly::monomial(const FqElement &c, std::size_t degree)
{
    std::vector<FqElement> v(degree + 1, FqElement::zero(c.field()));
    v[degree] = c;
    return FqPoly(c.field(), std::move(v));
}

FqPoly FqPoly::random(const FqConfig &f, int degree, std::mt19937_64 &rng, bool monic)
{
    std::vector<FqElement> c;
    for (int i = 0; i <= degree; ++i) {
        c.push_back(FqElement::random(f, rng));
    }
    if (degree >= 0 && (monic || c.back().is_zero())) {
        c.back() = FqElement::one(f);
    }
    return FqPoly(f, std::move(c));
}

void FqPoly::trim()
{
    while (!m_coeffs.empty() && m_coeffs.back().is_zero()) {
        m_coeffs.pop_back();
    }
}

bool FqPoly::is_one() const
{
    return m_coeffs.size() == 1 && m_coeffs[0].is_one();
}

bool FqPoly::is_monic() const
{
    return !m_coeffs.empty() && m_coeffs.back().is_one();
}

FqElement FqPoly::coeff(std::size_t i) const
{
    return i < m_coeffs.size() ? m_coeffs[i] : FqElement::zero(m_field);
}

FqElement FqPoly::lc() const
{
    if (m_coeffs.empty()) {
        throw DomainError("leading coefficient of the zero polynomial");
    }
    return m_coeffs.back();
}

FqPoly FqPoly::operator-() const
{
    FqPoly r(*this);
    for (auto &c : r.m_coeffs) {
        c = -c;
    }
    return r;
}

FqPoly &FqPoly::operator+=(const FqPoly &o)
{
    require_same(m_field, o.m_field);
    if (o.m_coeffs.size() > m_coeffs.size()) {
        m_coeffs.resize(o.m_coeffs.size(), FqElement::zero(m_field));
    }
    for (std::size_t i = 0; i < o.m_coeffs.size(); ++i) {
        m_coeffs[i] += o.m_coeffs[i];
    }
    trim();
    return *this;
}

FqPoly &FqPoly::operator-=(const FqPoly &o)
{
    return *this += -o;
}

FqPoly &FqPoly::operator*=(const FqPoly &o)
{
    require_same(m_field, o.m_field);
    if (is_zero() || o.is_zero()) {
        m_coeffs.clear();
        return *this;
    }
    std::vector<FqElement> prod(m_coeffs.size() + o.m_coeffs.size() - 1, FqElement::zero(m_field));
    for (std::size_t i = 0; i < m_coeffs.size(); ++i) {
        if (m_coeffs[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < o.m_coeffs.size(); ++j) {
            prod[i + j] += m_coeffs[i] * o.m_coeffs[j];
        }
    }
    m_coeffs = std::move(prod);
    trim();
    return *this;
}

FqPoly operator*(const FqElement &c, const FqPoly &f)
{
    FqPoly r(f);
    for (auto &x : r.m_coeffs) {
        x *= c;
    }
    r.trim();
    return r;
}

bool operator<(const FqPoly &a, const FqPoly &b)
{
    if (a.degree() != b.degree()) {
        return a.degree() < b.degree();
    }
    for (std::size_t k = a.m_coeffs.size(); k-- > 0;) {
        if (a.m_coeffs[k].index() != b.m_coeffs[k].index()) {
            return a.m_coeffs[k].index() < b.m_coeffs[k].index();
        }
    }
    return false;
}

std::pair<FqPoly, FqPoly> FqPoly::divmod(const FqPoly &d) const
{
    require_same(m_field, d.m_field);
    if (d.is_zero()) {
        throw DomainError("polynomial division by zero");
    }
    if (degree() < d.degree()) {
        return {FqPoly(m_field), *this};
    }
    std::vector<FqElement> rem = m_coeffs;
    std::vector<FqElement> quo(m_coeffs.size() - d.m_coeffs.size() + 1, FqElement::zero(m_field));
    const FqElement inv = d.lc().inverse();
    const std::size_t dd = d.m_coeffs.size() - 1;
    for (std::size_t k = rem.size(); k-- > dd;) {
        if (rem[k].is_zero()) {
            continue;
        }
        FqElement t = rem[k] * inv;
        quo[k - dd] = t;
        for (std::size_t j = 0; j <= dd; ++j) {
            rem[k - dd + j] -= t * d.m_coeffs[j];
        }
    }
    rem.resize(dd, FqElement::zero(m_field));
    return {FqPoly(m_field, std::move(quo)), FqPoly(m_field, std::move(rem))};
}

FqPoly FqPoly::monic() const
{
    if (is_zero()) {
        return *this;
    }
    return lc().inverse() * *this;
}

FqPoly FqPoly::derivative() const
{
    std::vector<FqElement> c;
    for (std::size_t i = 1; i < m_coeffs.size(); ++i) {
        c.push_back(FqElement(m_field, static_cast<std::int64_t>(i % m_field.p())) * m_coeffs[i]);
    }
    return FqPoly(m_field, std::move(c));
}

FqElement FqPoly::operator()(const FqElement &x) const
{
    require_same(m_field, x.field());
    FqElement acc = FqElement::zero(m_field);
    for (std::size_t k = m_coeffs.size(); k-- > 0;) {
        acc *= x;
        acc += m_coeffs[k];
    }
    return acc;
}

FqPoly FqPoly::pow(std::uint64_t e) const
{
    FqPoly r = one_like();
    FqPoly b = *this;
    while (e > 0) {
        if (e & 1U) {
            r *= b;
        }
        e >>= 1;
        if (e > 0) {
            b *= b;
        }
    }
    return r;
}

FqPoly FqPoly::powmod(const BigInt &e, const FqPoly &m) const
{
    FqPoly r = one_like() % m;
    FqPoly b = *this % m;
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        r = (r * r) % m;
        if (mpz_tstbit(e.get_mpz_t(), i)) {
            r = (r * b) % m;
        }
    }
    return r;
}

std::string FqPoly::to_string(const std::string &var) const
{
    if (is_zero()) {
        return "0";
    }
    std::string out;
    for (std::size_t k = m_coeffs.size(); k-- > 0;) {
        const FqElement &c = m_coeffs[k];
        if (c.is_zero()) {
            continue;
        }
        if (!out.empty()) {
            out += " + ";
        }
        std::string cs = c.to_string();
        if (!c.in_prime_field()) {
            cs = "(" + cs + ")";
        }
        if (k == 0) {
            out += cs;
            continue;
        }
        if (!c.is_one()) {
            out += cs + "*";
        }
        out += var;
        if (k > 1) {
            out += "^" + std::to_string(k);
        }
    }
    return out;
}

FqPoly gcd(FqPoly a, FqPoly b)
{
    while (!b.is_zero()) {
        FqPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

ExtendedGcd extended_gcd(const FqPoly &a, const FqPoly &b)
{
    const FqConfig &f = a.field();
    FqPoly r0 = a, r1 = b;
    FqPoly s0 = FqPoly::constant(FqElement::one(f)), s1(f);
    FqPoly t0(f), t1 = FqPoly::constant(FqElement::one(f));
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        FqPoly s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        FqPoly t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) {
        return {r0, s0, t0};
    }
    FqElement inv = r0.lc().inverse();
    return {inv * r0, inv * s0, inv * t0};
}

bool is_irreducible(const FqPoly &f)
{
    const int n = f.degree();
    if (n < 1) {
        return false;
    }
    if (n == 1) {
        return true;
    }
    const FqPoly x = FqPoly::variable(f.field());
    const BigInt &q = f.field().q();
    // x^(q^k) mod f for k = 1..n
    std::vector<FqPoly> frob;
    FqPoly cur = x;
    for (int k = 1; k <= n; ++k) {
        cur = cur.powmod(q, f);
        frob.push_back(cur);
    }
    if (!(frob[static_cast<std::size_t>(n - 1)] == x % f)) {
        return false;
    }
    for (int r : prime_divisors(n)) {
        FqPoly g = gcd(f, frob[static_cast<std::size_t>(n / r - 1)] - x);
        if (!g.is_one()) {
            return false;
        }
    }
    return true;
}

// --- factorization ----------------------------------------------------------------

namespace
{

// p-th root of a polynomial whose derivative vanishes: coefficients sit at
// multiples of p and each is replaced by its p-th root c^(q/p).
FqPoly pth_root(const FqPoly &f)
{
    const FqConfig &fld = f.field();
    const std::uint32_t p = fld.p();
    const BigInt e = fld.q() / p;
    std::vector<FqElement> c;
    for (std::size_t i = 0; i < f.coeffs().size(); i += p) {
        c.push_back(f.coeffs()[i].pow(e));
    }
    return FqPoly(fld, std::move(c));
}

void squarefree(const FqPoly &f, int mult, std::vector<Factor> &out)
{
    // f monic
    if (f.degree() < 1) {
        return;
    }
    FqPoly d = f.derivative();
    if (d.is_zero()) {
        squarefree(pth_root(f), mult * static_cast<int>(f.field().p()), out);
        return;
    }
    FqPoly c = gcd(f, d);
    FqPoly w = f / c;
    int i = 1;
    while (!w.is_one()) {
        FqPoly y = gcd(w, c);
        FqPoly z = w / y;
        if (z.degree() > 0) {
            out.push_back({z.monic(), i * mult});
        }
        ++i;
        w = std::move(y);
        c = c / w;
    }
    if (!c.is_one()) {
        squarefree(pth_root(c.monic()), mult * static_cast<int>(f.field().p()), out);
    }
}

std::vector<std::pair<FqPoly, int>> distinct_degree(FqPoly f)
{
    std::vector<std::pair<FqPoly, int>> out;
    const FqPoly x = FqPoly::variable(f.field());
    FqPoly w = x;
    int i = 1;
    while (f.degree() >= 2 * i) {
        w = w.powmod(f.field().q(), f);
        FqPoly g = gcd(f, w - x);
        if (!g.is_one()) {
            out.emplace_back(g, i);
            f = f / g;
            w = w % f;
        }
        ++i;
    }
    if (f.degree() > 0) {
        out.emplace_back(f.monic(), f.degree());
    }
    return out;
}

void equal_degree(const FqPoly &g, int d, std::mt19937_64 &rng, std::vector<FqPoly> &out)
{
    if (g.degree() == d) {
        out.push_back(g.monic());
        return;
    }
    const FqConfig &fld = g.field();
    const bool even = fld.p() == 2;
    BigInt qd = ipow(fld.q(), static_cast<unsigned long>(d));
    while (true) {
        FqPoly a = FqPoly::random(fld, g.degree() - 1, rng);
        if (a.degree() < 1) {
            continue;
        }
        FqPoly b(fld);
        if (even) {
            // Absolute trace to F_2: sum of a^(2^i), i < n*d.
            FqPoly t = a % g;
            b = t;
            const int steps = fld.n() * d;
            for (int i = 1; i < steps; ++i) {
                t = (t * t) % g;
                b += t;
            }
        } else {
            b = a.powmod((qd - 1) / 2, g) - FqPoly::constant(FqElement::one(fld));
        }
        FqPoly h = gcd(g, b);
        if (h.degree() > 0 && h.degree() < g.degree()) {
            equal_degree(h, d, rng, out);
            equal_degree(g / h, d, rng, out);
            return;
        }
    }
}

} // namespace

std::vector<Factor> factor(const FqPoly &f, std::uint64_t seed)
{
    if (f.is_zero()) {
        throw DomainError("factor: zero polynomial");
    }
    std::vector<Factor> sqf;
    squarefree(f.monic(), 1, sqf);
    std::mt19937_64 rng(seed);
    std::vector<Factor> out;
    for (const auto &[part, mult] : sqf) {
        for (const auto &[g, d] : distinct_degree(part)) {
            std::vector<FqPoly> pieces;
            equal_degree(g, d, rng, pieces);
            for (auto &piece : pieces) {
                out.push_back({std::move(piece), mult});
            }
        }
    }
    // Merge equal factors coming from different squarefree layers.
    std::sort(out.begin(), out.end(), [](const Factor &a, const Factor &b) { return a.poly < b.poly; });
    std::vector<Factor> merged;
    for (auto &fac : out) {
        if (!merged.empty() && merged.back().poly == fac.poly) {
            merged.back().multiplicity += fac.multiplicity;
        } else {
            merged.push_back(std::move(fac));
        }
    }
    return merged;
}

std::vector<FqElement> roots(const FqPoly &f, std::uint64_t seed)
{
    std::vector<FqElement> out;
    for (const auto &fac : factor(f, seed)) {
        if (fac.poly.degree() == 1) {
            out.push_back(-fac.poly.coeff(0));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

BigInt residue_count(const FqPoly &g)
{
    if (g.is_zero()) {
        throw DomainError("residue_count: zero polynomial generates the zero ideal");
    }
    return ipow(g.field().q(), static_cast<unsigned long>(g.degree()));
}

// --- embeddings --------------------------------------------------------------------

FqElement Embedding::operator()(const FqElement &x) const
{
    require_same(from, x.field());
    FqElement acc = FqElement::zero(to);
    const auto &c = x.coords();
    for (std::size_t k = c.size(); k-- > 0;) {
        acc *= generator_image;
        acc += FqElement(to, static_cast<std::int64_t>(c[k]));
    }
    return acc;
}

FqPoly Embedding::operator()(const FqPoly &f) const
{
    std::vector<FqElement> c;
    c.reserve(f.coeffs().size());
    for (const auto &x : f.coeffs()) {
        c.push_back((*this)(x));
    }
    return FqPoly(to, std::move(c));
}

Extension extend(const FqConfig &base, int s, std::uint64_t seed)
{
    if (s < 1) {
        throw DomainError("extend: degree must be >= 1");
    }
    FqConfig big = FqConfig::make(base.p(), base.n() * s);
    if (big == base) {
        return {big, Embedding{base, big, FqElement::generator(base)}};
    }
    std::vector<std::int64_t> m(base.modulus().begin(), base.modulus().end());
    auto rs = roots(FqPoly::from_ints(big, m), seed);
    if (rs.empty()) {
        throw DomainError("extend: base modulus has no root in the extension"); // cannot happen
    }
    return {big, Embedding{base, big, rs.front()}};
}

// --- additive polynomials over F_p-vector spaces -----------------------------------

std::vector<FqElement> additive_roots(std::span<const FqElement> coeffs, std::uint64_t e, const FqConfig &field)
{
    const std::uint32_t p = field.p();
    {
        std::uint64_t t = e;
        while (t % p == 0) {
            t /= p;
        }
        if (t != 1) {
            throw DomainError("additive_roots: exponent is not a power of the characteristic");
        }
    }
    for (const auto &c : coeffs) {
        require_same(field, c.field());
    }
    const std::size_t n = static_cast<std::size_t>(field.n());
    // Column j is the image of a^j.
    std::vector<std::vector<std::uint32_t>> mat(n, std::vector<std::uint32_t>(n, 0));
    FqElement basis = FqElement::one(field);
    const FqElement gen = FqElement::generator(field);
    for (std::size_t j = 0; j < n; ++j) {
        FqElement img = FqElement::zero(field);
        FqElement pw = basis;
        for (const auto &c : coeffs) {
            img += c * pw;
            pw = pw.pow(e);
        }
        for (std::size_t i = 0; i < n; ++i) {
            mat[i][j] = img.coords()[i];
        }
        basis *= gen;
    }
    // Row-reduce.
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < n; ++col) {
        std::size_t piv = row;
        while (piv < n && mat[piv][col] == 0) {
            ++piv;
        }
        if (piv == n) {
            continue;
        }
        std::swap(mat[piv], mat[row]);
        const std::uint32_t inv = inv_p(mat[row][col], p);
        for (auto &v : mat[row]) {
            v = mul_p(v, inv, p);
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == row || mat[r][col] == 0) {
                continue;
            }
            const std::uint32_t f = mat[r][col];
            for (std::size_t c = 0; c < n; ++c) {
                mat[r][c] = mod_p(static_cast<std::int64_t>(mat[r][c]) - mul_p(f, mat[row][c], p), p);
            }
        }
        pivot_col.push_back(col);
        ++row;
    }
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivot_col) {
        is_pivot[c] = true;
    }
    std::vector<std::vector<std::uint32_t>> kernel;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) {
            continue;
        }
        std::vector<std::uint32_t> v(n, 0);
        v[free] = 1;
        for (std::size_t r = 0; r < pivot_col.size(); ++r) {
            v[pivot_col[r]] = mod_p(-static_cast<std::int64_t>(mat[r][free]), p);
        }
        kernel.push_back(std::move(v));
    }
    BigInt count = ipow(BigInt(p), static_cast<unsigned long>(kernel.size()));
    if (count > (1UL << 24)) {
        throw DomainError("additive_roots: kernel too large to enumerate");
    }
    std::vector<FqElement> out;
    const std::uint64_t total = count.get_ui();
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::vector<std::uint32_t> v(n, 0);
        std::uint64_t t = idx;
        for (const auto &kv : kernel) {
            const std::uint32_t c = static_cast<std::uint32_t>(t % p);
            t /= p;
            for (std::size_t i = 0; i < n; ++i) {
                v[i] = static_cast<std::uint32_t>((v[i] + static_cast<std::uint64_t>(c) * kv[i]) % p);
            }
        }
        out.emplace_back(field, std::move(v));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// --- text format -------------------------------------------------------------------

namespace
{

class PolyParser
{
public:
    PolyParser(const std::string &text, const FqConfig &field, char var) : m_s(text), m_field(field), m_var(var) {}

    FqPoly parse()
    {
        skip();
        if (m_pos >= m_s.size()) {
            throw SyntaxError("empty polynomial", m_pos);
        }
        FqPoly r = expr();
        skip();
        if (m_pos != m_s.size()) {
            throw SyntaxError(std::string("unexpected '") + m_s[m_pos] + "'", m_pos);
        }
        return r;
    }

private:
    void skip()
    {
        while (m_pos < m_s.size() && std::isspace(static_cast<unsigned char>(m_s[m_pos]))) {
            ++m_pos;
        }
    }
    bool peek(char c)
    {
        skip();
        return m_pos < m_s.size() && m_s[m_pos] == c;
    }

    FqPoly expr()
    {
        FqPoly acc(m_field);
        bool negate = false;
        if (peek('+') || peek('-')) {
            negate = m_s[m_pos] == '-';
            ++m_pos;
        }
        FqPoly t = term();
        acc += negate ? -t : t;
        while (peek('+') || peek('-')) {
            negate = m_s[m_pos] == '-';
            ++m_pos;
            t = term();
            acc += negate ? -t : t;
        }
        return acc;
    }

    FqPoly term()
    {
        FqPoly acc = factor_();
        while (true) {
            if (peek('*')) {
                ++m_pos;
                acc *= factor_();
                continue;
            }
            skip();
            if (m_pos < m_s.size() && (m_s[m_pos] == '(' || m_s[m_pos] == 'a' || m_s[m_pos] == m_var)) {
                acc *= factor_();
                continue;
            }
            return acc;
        }
    }

    std::uint64_t exponent()
    {
        if (!peek('^')) {
            return 1;
        }
        ++m_pos;
        skip();
        std::size_t start = m_pos;
        while (m_pos < m_s.size() && std::isdigit(static_cast<unsigned char>(m_s[m_pos]))) {
            ++m_pos;
        }
        if (start == m_pos) {
            throw SyntaxError("expected exponent", m_pos);
        }
        return std::stoull(m_s.substr(start, m_pos - start));
    }

    FqPoly factor_()
    {
        skip();
        if (m_pos >= m_s.size()) {
            throw SyntaxError("unexpected end of input", m_pos);
        }
        const char c = m_s[m_pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = m_pos;
            while (m_pos < m_s.size() && std::isdigit(static_cast<unsigned char>(m_s[m_pos]))) {
                ++m_pos;
            }
            BigInt v(m_s.substr(start, m_pos - start));
            BigInt r = v % m_field.p();
            return FqPoly::constant(FqElement(m_field, static_cast<std::int64_t>(r.get_si())));
        }
        if (c == '(') {
            ++m_pos;
            FqPoly inner = expr();
            if (!peek(')')) {
                throw SyntaxError("expected ')'", m_pos);
            }
            ++m_pos;
            return inner.pow(exponent());
        }
        if (c == 'a') {
            ++m_pos;
            return FqPoly::constant(FqElement::generator(m_field)).pow(exponent());
        }
        if (c == m_var) {
            ++m_pos;
            return FqPoly::monomial(FqElement::one(m_field), static_cast<std::size_t>(exponent()));
        }
        throw SyntaxError(std::string("unexpected '") + c + "'", m_pos);
    }

    const std::string &m_s;
    const FqConfig &m_field;
    char m_var;
    std::size_t m_pos = 0;
};

} // namespace

FqPoly parse_fqpoly(const std::string &text, const FqConfig &field, char var)
{
    return PolyParser(text, field, var).parse();
}

FqElement parse_fqelement(const std::string &text, const FqConfig &field)
{
    FqPoly f = PolyParser(text, field, '\0').parse();
    if (f.degree() > 0) {
        throw DomainError("expected a field element, got a polynomial");
    }
    return f.coeff(0);
}

} // namespace gf
