#include "gf/drinfeld.hpp"

#include <algorithm>

#include "gf/errors.hpp"

namespace gf
{

DrinfeldModule::DrinfeldModule(FqConfig base, OrePoly<RatFunc> rho_T) : m_base(std::move(base)), m_rho_T(std::move(rho_T))
{
    if (m_rho_T.degree() < 1) {
        throw DomainError("Drinfeld module: rho_T must have positive tau-degree");
    }
    if (!(m_rho_T.coeff(0) == RatFunc(FqPoly::variable(m_base)))) {
        throw DomainError("Drinfeld module: constant term of rho_T must be T, got " + m_rho_T.coeff(0).to_string());
    }
}

DrinfeldModule DrinfeldModule::carlitz(const FqConfig &base, std::optional<TwistSpec> twist)
{
    TwistSpec tw = twist.value_or(TwistSpec{base.q_small()});
    RatFunc t(FqPoly::variable(base));
    return DrinfeldModule(base, OrePoly<RatFunc>({t, t.one_like()}, t.zero_like(), tw));
}

OrePoly<RatFunc> DrinfeldModule::rho(const FqPoly &a) const
{
    const RatFunc zero(m_base);
    OrePoly<RatFunc> acc({}, zero, twist());
    for (std::size_t k = a.coeffs().size(); k-- > 0;) {
        acc = acc * m_rho_T + OrePoly<RatFunc>::constant(RatFunc(FqPoly::constant(a.coeffs()[k])), twist());
    }
    return acc;
}

FqElement Specialization::operator()(const FqPoly &f) const
{
    return extension.embedding(f)(t_image);
}

FqElement Specialization::operator()(const RatFunc &f) const
{
    FqElement d = (*this)(f.den());
    if (d.is_zero()) {
        throw DomainError("coefficient " + f.to_string() + " has a pole at the place " + place.to_string());
    }
    return (*this)(f.num()) / d;
}

std::string TorsionSet::field_description() const
{
    if (symbolic) {
        return "F_" + a.field().q().get_str() + "(T)";
    }
    const FqConfig &k = specialization->extension.field;
    return "F_" + k.q().get_str() + " = F_" + std::to_string(k.p()) + "[a]/(" + k.modulus_string() + ")";
}

std::vector<FqPoly> residues(const FqPoly &m)
{
    const FqConfig &f = m.field();
    const std::uint64_t q = f.q_small();
    const int d = m.degree();
    std::uint64_t total = 1;
    for (int i = 0; i < d; ++i) {
        total *= q;
    }
    std::vector<FqPoly> out;
    out.reserve(total);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::vector<FqElement> c;
        std::uint64_t t = idx;
        for (int i = 0; i < d; ++i) {
            c.push_back(FqElement::from_index(f, t % q));
            t /= q;
        }
        out.emplace_back(f, std::move(c));
    }
    return out;
}

namespace
{

std::vector<FqPoly> monic_divisors(const FqPoly &f, std::uint64_t seed)
{
    std::vector<FqPoly> out{f.one_like()};
    if (f.degree() < 1) {
        return out;
    }
    for (const auto &fac : factor(f, seed)) {
        std::vector<FqPoly> next;
        for (const auto &d : out) {
            FqPoly pw = d;
            for (int k = 0; k <= fac.multiplicity; ++k) {
                next.push_back(pw);
                pw = pw * fac.poly;
            }
        }
        out = std::move(next);
    }
    return out;
}

FqPoly lcm(const FqPoly &a, const FqPoly &b)
{
    return (a * b / gcd(a, b)).monic();
}

TorsionSet symbolic_torsion(const FqPoly &a, const DrinfeldModule &module, const OrePoly<RatFunc> &rho_a,
                            std::uint64_t seed)
{
    const std::uint64_t e = module.twist().exponent;
    const FqConfig &base = module.base();
    std::uint64_t xdeg = 1;
    for (int i = 0; i < rho_a.degree(); ++i) {
        xdeg *= e;
    }
    const std::uint64_t q = base.q_small();
    if (xdeg > q * q) {
        throw DomainError("symbolic torsion is limited to x-degree <= q^2 (here " + std::to_string(xdeg) +
                          "); give a place instead");
    }
    // Clear denominators, then apply the rational root theorem to
    // rho_a(x)/x = c_0 + c_1 x^(e-1) + ... + c_r x^(e^r - 1).
    FqPoly l = FqPoly::constant(FqElement::one(base));
    for (const auto &c : rho_a.coeffs()) {
        l = lcm(l, c.den());
    }
    const FqPoly c0 = (rho_a.coeff(0) * RatFunc(l)).num();
    const FqPoly cr = (rho_a.coeffs().back() * RatFunc(l)).num();

    TorsionSet ts{.a = a};
    ts.symbolic = true;
    ts.separable = !rho_a.coeff(0).is_zero();
    ts.expected_cardinality = BigInt(static_cast<unsigned long>(xdeg));
    ts.symbolic_roots.push_back(RatFunc(base));

    std::vector<RatFunc> candidates;
    const auto units = enumerate_field(base);
    for (const auto &u : monic_divisors(c0, seed)) {
        for (const auto &v : monic_divisors(cr, seed)) {
            if (!gcd(u, v).is_one()) {
                continue;
            }
            for (const auto &unit : units) {
                if (unit.is_zero()) {
                    continue;
                }
                candidates.emplace_back(unit * u, v);
            }
        }
    }
    for (const auto &lam : candidates) {
        if (rho_a.apply(lam).is_zero() &&
            std::find(ts.symbolic_roots.begin(), ts.symbolic_roots.end(), lam) == ts.symbolic_roots.end()) {
            ts.symbolic_roots.push_back(lam);
        }
    }
    ts.complete = BigInt(static_cast<unsigned long>(ts.symbolic_roots.size())) == ts.expected_cardinality;
    return ts;
}

} // namespace

TorsionSet torsion(const FqPoly &a, const DrinfeldModule &module, const std::optional<FqPoly> &place,
                   const TorsionOptions &options)
{
    if (a.is_zero()) {
        throw DomainError("torsion: a must be nonzero");
    }
    if (!(a.field() == module.base())) {
        throw DomainError("torsion: a is not over the module's base field");
    }
    const OrePoly<RatFunc> rho_a = module.rho(a);
    if (!place) {
        return symbolic_torsion(a, module, rho_a, options.seed);
    }

    const FqPoly P = place->monic();
    if (!is_irreducible(P)) {
        throw DomainError("torsion: place " + place->to_string() + " is not irreducible");
    }
    for (const auto &c : rho_a.coeffs()) {
        if ((c.den() % P).is_zero()) {
            throw DomainError("torsion: bad reduction at " + P.to_string() + " (pole in " + c.to_string() + ")");
        }
    }
    if ((rho_a.coeffs().back().num() % P).is_zero()) {
        throw DomainError("torsion: bad reduction at " + P.to_string() + " (leading coefficient vanishes)");
    }

    const FqConfig &base = module.base();
    const std::uint64_t e = module.twist().exponent;
    TorsionSet ts{.a = a};
    for (int s = 1;; ++s) {
        if (base.n() * P.degree() * s > options.max_field_degree) {
            break;
        }
        Extension ext = extend(base, P.degree() * s, options.seed);
        std::vector<FqElement> proots = roots(ext.embedding(P), options.seed);
        Specialization spec{P, ext, proots.front()};
        std::vector<FqElement> coeffs;
        for (const auto &c : rho_a.coeffs()) {
            coeffs.push_back(spec(c));
        }
        std::size_t low = 0;
        while (coeffs[low].is_zero()) {
            ++low;
        }
        ts.separable = low == 0;
        BigInt target = 1;
        for (std::size_t i = low; i + 1 < coeffs.size(); ++i) {
            target *= static_cast<unsigned long>(e);
        }
        ts.expected_cardinality = target;
        ts.roots = additive_roots(coeffs, e, ext.field);
        ts.specialization = std::move(spec);
        ts.extension_degree = s;
        if (BigInt(static_cast<unsigned long>(ts.roots.size())) == target) {
            ts.complete = true;
            break;
        }
    }
    if (!ts.specialization) {
        throw DomainError("torsion: residue field already exceeds the field-degree cap");
    }
    return ts;
}

namespace
{

template <typename Elem, typename Eval>
CyclicReport check_orbits(const std::vector<Elem> &module_elems, const std::vector<FqPoly> &res, Eval &&eval)
{
    CyclicReport rep;
    rep.module_size = module_elems.size();
    if (module_elems.size() != res.size()) {
        rep.detail = "torsion set has " + std::to_string(module_elems.size()) + " elements but |A/(a)| = " +
                     std::to_string(res.size());
        return rep;
    }
    auto contains = [&](const Elem &x) { return std::find(module_elems.begin(), module_elems.end(), x) != module_elems.end(); };
    for (const auto &lam : module_elems) {
        if (lam.is_zero()) {
            continue;
        }
        std::vector<Elem> image;
        for (const auto &b : res) {
            Elem v = eval(b, lam);
            if (!contains(v)) {
                rep.witness = b;
                rep.detail = "rho_b(lambda) left the torsion set for lambda = " + lam.to_string();
                return rep;
            }
            auto it = std::find(image.begin(), image.end(), v);
            if (it != image.end()) {
                rep.witness = b - res[static_cast<std::size_t>(it - image.begin())];
                rep.detail = "b -> rho_b(lambda) not injective for lambda = " + lam.to_string();
                return rep;
            }
            image.push_back(std::move(v));
        }
        if (rep.generator.empty()) {
            rep.generator = lam.to_string();
            rep.unit_orbit_size = image.size() - 1; // b = 0 maps to 0; the rest are units mod a
        }
    }
    rep.cyclic = true;
    rep.detail = "every nonzero torsion point generates the module";
    return rep;
}

} // namespace

CyclicReport check_cyclic_module(const TorsionSet &ts, const FqPoly &a, const DrinfeldModule &module)
{
    if (!is_irreducible(a)) {
        throw DomainError("check_cyclic_module: a = " + a.to_string() + " is not irreducible");
    }
    if (!(ts.a == a)) {
        throw DomainError("check_cyclic_module: torsion set was computed for a different a");
    }
    const std::vector<FqPoly> res = residues(a);
    std::vector<OrePoly<RatFunc>> rhos;
    rhos.reserve(res.size());
    for (const auto &b : res) {
        rhos.push_back(module.rho(b));
    }
    auto index_of = [&](const FqPoly &b) {
        return static_cast<std::size_t>(std::find(res.begin(), res.end(), b) - res.begin());
    };
    if (ts.symbolic) {
        return check_orbits(ts.symbolic_roots, res,
                            [&](const FqPoly &b, const RatFunc &lam) { return rhos[index_of(b)].apply(lam); });
    }
    const Specialization &spec = *ts.specialization;
    return check_orbits(ts.roots, res, [&](const FqPoly &b, const FqElement &lam) {
        return rhos[index_of(b)].apply(lam, [&](const RatFunc &c) { return spec(c); });
    });
}

} // namespace gf
